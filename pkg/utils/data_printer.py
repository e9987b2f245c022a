# src/utils/data_printer.py

from typing import Any, Dict, List, Optional, Sequence

import numpy as np


class DictPrinter:
    """Formatted printing of nested report data; floats always carry 12 significant digits"""

    SIGNIFICANT_DIGITS = 12

    def __init__(self, indent_size: int = 2, max_list_items: int = 12):
        self.indent_size = indent_size
        self.max_list_items = max_list_items

    def format_value(self, value: Any) -> str:
        if value is None:
            return "None"
        elif isinstance(value, bool):
            return str(value)
        elif isinstance(value, (float, np.floating)):
            return format_float(float(value))
        elif isinstance(value, (list, tuple, np.ndarray)):
            items = [self.format_value(v) for v in list(value)[:self.max_list_items]]
            if len(value) > self.max_list_items:
                items.append(f"... ({len(value)} total)")
            return "[" + ", ".join(items) + "]"
        return str(value)

    def print_dict(self, data: Dict[str, Any], title: Optional[str] = None) -> None:
        if title:
            print(f"\n{title}")
            print("=" * len(title))

        self._print_dict_content(data)

    def _print_dict_content(self, data: Dict[str, Any], level: int = 0) -> None:
        if not data:
            return
        indent = "-" * (level * self.indent_size)

        max_key_length = max(len(str(k)) for k in data.keys()) + 3

        for key, value in data.items():
            if isinstance(value, dict):
                print(f"{indent}{str(key)}:")
                self._print_dict_content(value, level + 1)
            else:
                formatted_value = self.format_value(value)
                padding = " " * (max_key_length - len(str(key)))
                print(f"{indent}{str(key)}{padding}: {formatted_value}")


def format_float(value: float) -> str:
    """12 significant digits, trailing zeros kept (4 -> 4.00000000000)"""
    return f"{value:#.{DictPrinter.SIGNIFICANT_DIGITS}g}"


def print_data(data: Dict[str, Any], title: Optional[str] = None, indent: int = 2) -> None:
    """
    Convenience function for printing dictionary data.

    Args:
        data: Dictionary to print
        title: Optional title for the output
        indent: Number of spaces for indentation
    """
    printer = DictPrinter(indent_size=indent)
    printer.print_dict(data, title)


def print_table(rows: Sequence[Dict[str, Any]], columns: List[str]) -> None:
    """Fixed-width table of report rows, one line per row"""
    printer = DictPrinter()
    cells = [[printer.format_value(row.get(c)) for c in columns] for row in rows]
    widths = [max([len(c)] + [len(r[i]) for r in cells]) for i, c in enumerate(columns)]
    print("  ".join(c.ljust(w) for c, w in zip(columns, widths)))
    for r in cells:
        print("  ".join(v.ljust(w) for v, w in zip(r, widths)))
