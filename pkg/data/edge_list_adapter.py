# src/data/edge_list_adapter.py

import logging
from pathlib import Path
from typing import Iterable, Iterator, List, Tuple, Union

from models.graph_models import Graph
from utils.exceptions import GraphFormatError

logger = logging.getLogger(__name__)


class EdgeListAdapter:
    """
    Reads and writes graphs as plain text.

    Edge-list document:
        n m
        u v      (m lines, 0 <= u, v < n, u != v)

    Fixture file (one tree per line):
        <canonical code>\t<edges as `u-v` tokens separated by spaces>

    The order of a fixture tree is recovered from its code (two characters per vertex).
    """

    @staticmethod
    def parse_edge_list(text: str) -> Graph:
        """
        Parse an edge-list document.

        Args:
            text: Full document text

        Returns:
            Graph with exactly the listed edges

        Raises:
            GraphFormatError: malformed header, bad vertex id, self-loop,
                duplicate edge or wrong edge count, with the line number
        """
        lines = text.splitlines()
        # blank lines are tolerated anywhere, they just do not count as edges
        numbered = [(i + 1, line.split()) for i, line in enumerate(lines) if line.strip()]
        if not numbered:
            raise GraphFormatError("empty document, expected header `n m`", 1)

        header_line, header = numbered[0]
        n, m = EdgeListAdapter._parse_pair(header, header_line, "header `n m`")
        if n < 1:
            raise GraphFormatError(f"vertex count must be >= 1, got {n}", header_line)
        if m < 0:
            raise GraphFormatError(f"edge count must be >= 0, got {m}", header_line)

        body = numbered[1:]
        if len(body) != m:
            bad_line = body[m][0] if len(body) > m else (body[-1][0] if body else header_line)
            raise GraphFormatError(f"header declares {m} edges but {len(body)} were given", bad_line)

        seen = set()
        edges: List[Tuple[int, int]] = []
        for line_no, tokens in body:
            u, v = EdgeListAdapter._parse_pair(tokens, line_no, "edge `u v`")
            for w in (u, v):
                if not 0 <= w < n:
                    raise GraphFormatError(f"vertex id {w} out of range 0..{n - 1}", line_no)
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}", line_no)
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphFormatError(f"duplicate edge {key[0]} {key[1]}", line_no)
            seen.add(key)
            edges.append(key)

        return Graph.from_edges(n, edges)

    @staticmethod
    def _parse_pair(tokens: List[str], line_no: int, what: str) -> Tuple[int, int]:
        if len(tokens) != 2:
            raise GraphFormatError(f"expected {what}, got {' '.join(tokens)!r}", line_no)
        try:
            return int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphFormatError(f"expected integers in {what}, got {' '.join(tokens)!r}", line_no)

    @staticmethod
    def write_edge_list(graph: Graph) -> str:
        """Edge-list document for `graph`, edges sorted lexicographically"""
        return graph.edge_list_text()

    @staticmethod
    def read_edge_list_file(path: Union[str, Path]) -> Graph:
        logger.debug("reading edge list from %s", path)
        try:
            text = Path(path).read_text(encoding="utf-8")
        except UnicodeDecodeError as e:
            raise GraphFormatError(f"{path}: not a text edge list ({e.reason} at byte {e.start})") from e
        return EdgeListAdapter.parse_edge_list(text)

    @staticmethod
    def format_fixture_line(code: str, graph: Graph) -> str:
        edges = " ".join(f"{u}-{v}" for u, v in graph.edges)
        return f"{code}\t{edges}"

    @staticmethod
    def parse_fixture_line(line: str, line_no: int = 1) -> Tuple[str, Graph]:
        code, _, edge_text = line.rstrip("\n").partition("\t")
        if not code:
            raise GraphFormatError("missing canonical code", line_no)
        order = len(code) // 2 - (1 if code.startswith("[") else 0)
        edges = []
        for token in edge_text.split():
            u, sep, v = token.partition("-")
            if not sep:
                raise GraphFormatError(f"bad edge token {token!r}", line_no)
            try:
                edges.append((int(u), int(v)))
            except ValueError:
                raise GraphFormatError(f"bad edge token {token!r}", line_no)
        return code, Graph.from_edges(order, edges)

    @staticmethod
    def write_fixture(path: Union[str, Path], entries: Iterable[Tuple[str, Graph]]) -> int:
        """Write `code<TAB>edges` lines; returns the number of trees written"""
        count = 0
        with open(path, "w") as handle:
            for code, graph in entries:
                handle.write(EdgeListAdapter.format_fixture_line(code, graph) + "\n")
                count += 1
        logger.info("wrote %d trees to %s", count, path)
        return count

    @staticmethod
    def read_fixture(path: Union[str, Path]) -> Iterator[Tuple[str, Graph]]:
        try:
            lines = Path(path).read_text(encoding="utf-8").splitlines()
        except UnicodeDecodeError as e:
            raise GraphFormatError(f"{path}: not a text fixture ({e.reason} at byte {e.start})") from e
        for line_no, line in enumerate(lines, start=1):
            if line.strip():
                yield EdgeListAdapter.parse_fixture_line(line, line_no)
