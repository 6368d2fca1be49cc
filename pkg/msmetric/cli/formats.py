"""Instance (`msspace v1`) and map (`msmap v1`) text formats.

The grammar is documented in docs/format.md. Parsing is line-oriented; `#`
starts a comment that runs to the end of the line. Every error is reported as
an `InputFormatError` with a 1-based line and column.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations_with_replacement, product
from pathlib import Path
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from ..core.types import MAX_POINTS, MsSpace, SelfMap, Triple, format_value, parse_value

INSTANCE_HEADER = "msspace v1"
MAP_HEADER = "msmap v1"

_TOKEN = re.compile(r"\S+")
_COUNT = re.compile(r"[0-9]+")

PathLike = Union[str, Path]


class InputFormatError(ValueError):
    """Malformed instance or map text; str() is `path:line:col: message`."""

    def __init__(self, message: str, path: str = "<input>", line: int = 0, column: int = 0):
        super().__init__(message)
        self.message = message
        self.path = path
        self.line = line
        self.column = column

    def __str__(self) -> str:
        return f"{self.path}:{self.line}:{self.column}: {self.message}"


@dataclass(frozen=True)
class _Token:
    text: str
    column: int


@dataclass(frozen=True)
class _Line:
    number: int
    tokens: Tuple[_Token, ...]

    @property
    def keyword(self) -> str:
        return self.tokens[0].text

    def arg(self, pos: int) -> str:
        return self.tokens[pos].text


def _lines(text: str) -> Iterator[_Line]:
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        tokens = tuple(_Token(m.group(), m.start() + 1) for m in _TOKEN.finditer(content))
        if tokens:
            yield _Line(number, tokens)


class _Reader:
    def __init__(self, text: str, path: str):
        self.path = path
        self.lines = list(_lines(text))
        self.end_line = len(text.splitlines()) + 1

    def error(self, message: str, line: Optional[_Line] = None, pos: int = 0) -> InputFormatError:
        if line is None:
            return InputFormatError(message, self.path, self.end_line, 1)
        column = line.tokens[min(pos, len(line.tokens) - 1)].column
        return InputFormatError(message, self.path, line.number, column)

    def arity(self, line: _Line, count: int, usage: str) -> None:
        if len(line.tokens) != count:
            raise self.error(f"expected `{usage}`", line, min(count, len(line.tokens) - 1))

    def body(self, header: str) -> List[_Line]:
        if not self.lines:
            raise self.error(f"empty input; expected `{header}`")
        first = self.lines[0]
        if " ".join(t.text for t in first.tokens) != header:
            raise self.error(f"expected header `{header}`", first)
        return self.lines[1:]


def _expected_keys(points: Sequence[str], symmetric: bool) -> Iterable[Triple]:
    if symmetric:
        return combinations_with_replacement(points, 3)  # type: ignore[return-value]
    return product(points, repeat=3)  # type: ignore[return-value]


def parse_instance(text: str, path: str = "<input>", name: str = "") -> MsSpace:
    reader = _Reader(text, path)
    declared: Optional[int] = None
    points: List[str] = []
    index: Dict[str, int] = {}
    symmetric: Optional[bool] = None
    values: Dict[Triple, object] = {}

    for line in reader.body(INSTANCE_HEADER):
        kw = line.keyword
        if kw == "points":
            reader.arity(line, 2, "points <n>")
            if declared is not None:
                raise reader.error("duplicate `points` line", line)
            count = line.arg(1)
            if not _COUNT.fullmatch(count) or not (1 <= int(count) <= MAX_POINTS):
                raise reader.error(f"point count must be an integer in 1..{MAX_POINTS}", line, 1)
            declared = int(count)
        elif kw == "point":
            reader.arity(line, 2, "point <id>")
            if declared is None:
                raise reader.error("`point` before `points <n>`", line)
            if symmetric is not None or values:
                raise reader.error("`point` lines must precede `sym` and `val` lines", line)
            pid = line.arg(1)
            if pid in index:
                raise reader.error(f"duplicate point id {pid!r}", line, 1)
            if len(points) == declared:
                raise reader.error(f"more than {declared} points declared", line, 1)
            index[pid] = len(points)
            points.append(pid)
        elif kw == "sym":
            reader.arity(line, 2, "sym on|off")
            if symmetric is not None:
                raise reader.error("duplicate or late `sym` line", line)
            if line.arg(1) not in ("on", "off"):
                raise reader.error("expected `on` or `off`", line, 1)
            symmetric = line.arg(1) == "on"
        elif kw == "val":
            reader.arity(line, 5, "val <x> <y> <z> <value>")
            if declared is None or len(points) != declared:
                raise reader.error("`val` before all points are declared", line)
            if symmetric is None:
                symmetric = True
            for pos in (1, 2, 3):
                if line.arg(pos) not in index:
                    raise reader.error(f"undeclared point id {line.arg(pos)!r}", line, pos)
            triple = (line.arg(1), line.arg(2), line.arg(3))
            key = tuple(sorted(triple, key=index.__getitem__)) if symmetric else triple
            if key in values:
                raise reader.error(f"duplicate entry for {' '.join(key)}", line, 1)
            try:
                values[key] = parse_value(line.arg(4))
            except ValueError as e:
                raise reader.error(str(e), line, 4) from None
        else:
            raise reader.error(f"unknown keyword {kw!r}", line)

    if declared is None:
        raise reader.error("missing `points <n>` line")
    if len(points) != declared:
        raise reader.error(f"{declared} points announced, {len(points)} declared")
    symmetric = True if symmetric is None else symmetric
    for key in _expected_keys(points, symmetric):
        if key not in values:
            raise reader.error(f"missing entry for {' '.join(key)}")
    return MsSpace(tuple(points), values, symmetric, name, {"source": path})  # type: ignore[arg-type]


def serialize_instance(space: MsSpace, comments: Sequence[str] = ()) -> str:
    """Canonical text: points in declaration order, one `val` per table key in key order."""
    out = [INSTANCE_HEADER]
    if space.name:
        out.append(f"# name: {space.name}")
    out.extend(f"# {c}" for c in comments)
    out.append(f"points {space.n}")
    out.extend(f"point {p}" for p in space.points)
    out.append(f"sym {'on' if space.symmetric else 'off'}")
    out.extend(f"val {x} {y} {z} {format_value(space.table[(x, y, z)])}" for x, y, z in space.iter_keys())
    return "\n".join(out) + "\n"


def parse_map(text: str, space: MsSpace, path: str = "<input>", name: str = "") -> SelfMap:
    reader = _Reader(text, path)
    mapping: Dict[str, str] = {}
    for line in reader.body(MAP_HEADER):
        if line.keyword != "map":
            raise reader.error(f"unknown keyword {line.keyword!r}", line)
        reader.arity(line, 3, "map <from> <to>")
        src, dst = line.arg(1), line.arg(2)
        for pos, pid in ((1, src), (2, dst)):
            if pid not in space.points:
                raise reader.error(f"point {pid!r} is not in the instance", line, pos)
        if src in mapping:
            raise reader.error(f"duplicate image for {src!r}", line, 1)
        mapping[src] = dst
    missing = [p for p in space.points if p not in mapping]
    if missing:
        raise reader.error(f"map is not total; no image for {', '.join(missing)}")
    return SelfMap.over(space, mapping, name=name)


def serialize_map(T: SelfMap) -> str:
    out = [MAP_HEADER]
    if T.name:
        out.append(f"# name: {T.name}")
    out.extend(f"map {p} {T(p)}" for p in T.points)
    return "\n".join(out) + "\n"


def _read(path: PathLike) -> Tuple[str, str]:
    p = Path(path)
    try:
        return p.read_text(encoding="utf-8"), str(p)
    except UnicodeDecodeError as e:
        raise InputFormatError(f"not UTF-8 text: {e.reason}", str(p), 1, 1) from None


def load_instance(path: PathLike) -> MsSpace:
    text, where = _read(path)
    return parse_instance(text, where, name=Path(path).stem)


def load_map(path: PathLike, space: MsSpace) -> SelfMap:
    text, where = _read(path)
    return parse_map(text, space, where, name=Path(path).stem)
