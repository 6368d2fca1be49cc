from __future__ import annotations

from fractions import Fraction
from typing import Any, List, TextIO, Tuple

from ..core.types import format_value


def render_value(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "none"
    if isinstance(value, (Fraction, int)):
        return format_value(Fraction(value))
    if isinstance(value, (list, tuple, set, frozenset)):
        return " ".join(render_value(v) for v in value)
    return str(value)


class Report:
    """Ordered `key: value` lines; keys repeat for multi-valued facts (e.g. `violation`).

    With `quiet`, only lines added with ``verdict=True`` are written.
    """

    def __init__(self, quiet: bool = False):
        self.quiet = quiet
        self._lines: List[Tuple[str, str, bool]] = []

    def add(self, key: str, value: Any, *, verdict: bool = False) -> "Report":
        self._lines.append((key, render_value(value), verdict))
        return self

    def extend(self, key: str, values: Any) -> "Report":
        for v in values:
            self.add(key, v)
        return self

    def lines(self) -> List[str]:
        return [f"{k}: {v}" for k, v, verdict in self._lines if verdict or not self.quiet]

    def write(self, stream: TextIO) -> None:
        for line in self.lines():
            stream.write(line + "\n")
