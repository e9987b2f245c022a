# src/models/verification_models.py
from dataclasses import dataclass, field
from typing import Any, ClassVar, Dict, List, Literal, Optional, Tuple

from models.graph_models import Graph
from models.tree_models import ClassFilter


@dataclass(frozen=True)
class Status:
    """Per-order verification statuses and the CLI exit code each maps to"""

    VERIFIED: ClassVar[str] = "verified"
    COUNTEREXAMPLE: ClassVar[str] = "counterexample"
    VACUOUS: ClassVar[str] = "vacuous"
    TIED: ClassVar[str] = "tied"

    EXIT_CODES: ClassVar[Dict[str, int]] = {
        VERIFIED: 0,
        VACUOUS: 0,
        COUNTEREXAMPLE: 1,
        TIED: 3,
    }

    @classmethod
    def combine(cls, statuses: List[str]) -> str:
        """Worst status wins: counterexample, then tied, then verified; vacuous only if nothing was checked"""
        if cls.COUNTEREXAMPLE in statuses:
            return cls.COUNTEREXAMPLE
        if cls.TIED in statuses:
            return cls.TIED
        if cls.VERIFIED in statuses:
            return cls.VERIFIED
        return cls.VACUOUS

    @classmethod
    def exit_code(cls, status: str) -> int:
        return cls.EXIT_CODES[status]


@dataclass(frozen=True)
class ExtremalQuery:
    n: int
    class_filter: ClassFilter
    direction: Literal["min", "max"]


@dataclass
class ExtremalResult:
    """
    Arg-extremum of rho over a class.

    `margin` is the gap to the runner-up (None for singleton or empty classes).
    `ties` lists the codes of other members within the tie tolerance.
    """
    query: ExtremalQuery
    class_size: int
    graph: Optional[Graph] = None
    code: Optional[str] = None
    rho: Optional[float] = None
    margin: Optional[float] = None
    ties: List[str] = field(default_factory=list)

    @property
    def vacuous(self) -> bool:
        return self.class_size == 0


@dataclass
class ClaimOutcome:
    """Result of checking one claim at one order n"""
    n: int
    class_size: int
    status: str
    extremal_code: Optional[str] = None
    expected_code: Optional[str] = None
    rho_extremal: Optional[float] = None
    margin: Optional[float] = None
    ties: List[str] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)
    elapsed_ms: float = 0.0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "class_size": self.class_size,
            "status": self.status,
            "extremal_code": self.extremal_code,
            "expected_code": self.expected_code,
            "rho_extremal": self.rho_extremal,
            "margin": self.margin,
            "ties": list(self.ties),
            "details": self.details,
            "elapsed_ms": self.elapsed_ms,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ClaimOutcome":
        return cls(**{k: data[k] for k in data if k in cls.__dataclass_fields__})


@dataclass
class VerificationReport:
    claim: str
    n_range: Tuple[int, int]
    note: str = ""
    outcomes: List[ClaimOutcome] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def status(self) -> str:
        return Status.combine([o.status for o in self.outcomes])

    def to_dict(self) -> Dict[str, Any]:
        return {
            "claim": self.claim,
            "n_min": self.n_range[0],
            "n_max": self.n_range[1],
            "note": self.note,
            "status": self.status,
            "outcomes": [o.to_dict() for o in self.outcomes],
            "elapsed_ms": self.elapsed_ms,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "VerificationReport":
        """Rebuild a report from its JSON form (the status is recomputed from the outcomes)"""
        return cls(
            claim=data["claim"],
            n_range=(data["n_min"], data["n_max"]),
            note=data.get("note", ""),
            outcomes=[ClaimOutcome.from_dict(o) for o in data.get("outcomes", [])],
            elapsed_ms=data.get("elapsed_ms", 0.0),
        )

    def summary_rows(self) -> List[Dict[str, Any]]:
        """Flat per-order rows for the CSV summary"""
        rows = []
        for o in self.outcomes:
            rows.append({
                "claim": self.claim,
                "n": o.n,
                "class_size": o.class_size,
                "status": o.status,
                "extremal_code": o.extremal_code,
                "expected_code": o.expected_code,
                "rho_extremal": o.rho_extremal,
                "margin": o.margin,
                "ties": len(o.ties),
                "elapsed_ms": o.elapsed_ms,
            })
        return rows
