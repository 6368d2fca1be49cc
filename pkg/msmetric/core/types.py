from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, product
from typing import Any, Dict, Iterator, Literal, Mapping, Sequence, Tuple, Union

import numpy as np


MAX_POINTS = 64

ValueLike = Union[Fraction, int, str]
Triple = Tuple[str, str, str]

# Scaled tables above this magnitude are kept as Python ints (dtype=object).
_INT64_SAFE = 2**60

_VALUE_LITERAL = re.compile(r"-?[0-9]+(?:\.[0-9]+|/[0-9]+)?")


class UnknownPointError(KeyError):
    """A point id that does not belong to the space."""

    def __init__(self, point: str):
        super().__init__(point)
        self.point = point

    def __str__(self) -> str:
        return f"unknown point id: {self.point!r}"


def parse_value(text: ValueLike) -> Fraction:
    """Parse an exact non-negative value from an int, Fraction, or a "7", "3.5", "7/2" literal."""
    if isinstance(text, bool):
        raise ValueError("booleans are not values")
    if isinstance(text, float):
        raise ValueError("floating-point values are not accepted; use a decimal or fraction literal")
    if isinstance(text, str):
        literal = text.strip()
        if not _VALUE_LITERAL.fullmatch(literal):
            raise ValueError(f"malformed value literal: {text!r}")
        try:
            value = Fraction(literal)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"malformed value literal: {text!r}") from None
    else:
        value = Fraction(text)
    if value < 0:
        raise ValueError(f"values must be non-negative, got {format_value(value)}")
    return value


def format_value(value: Fraction) -> str:
    """Render an exact value as an integer or `p/q`."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _check_point_id(point: str) -> str:
    if not isinstance(point, str) or not point or any(ch.isspace() for ch in point):
        raise ValueError(f"point ids must be non-empty strings without whitespace, got {point!r}")
    return point


@dataclass(frozen=True)
class MsSpace:
    """A finite candidate M_s-space: points plus one exact value per triple.

    In symmetric mode the table is keyed by multisets (stored as index-sorted
    triples); otherwise by ordered triples. Constructing a space validates the
    table's shape only, never the axioms.
    """

    points: Tuple[str, ...]
    table: Dict[Triple, Fraction]
    symmetric: bool = True
    name: str = field(default="", compare=False)
    provenance: Dict[str, Any] = field(default_factory=dict, compare=False)

    _index: Dict[str, int] = field(init=False, repr=False, compare=False)
    _scaled: np.ndarray = field(init=False, repr=False, compare=False)
    _scale: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        points = tuple(_check_point_id(p) for p in self.points)
        if not points:
            raise ValueError("a space needs at least one point")
        if len(points) > MAX_POINTS:
            raise ValueError(f"at most {MAX_POINTS} points are supported, got {len(points)}")
        index = {p: i for i, p in enumerate(points)}
        if len(index) != len(points):
            raise ValueError("point ids must be unique")
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "_index", index)

        table: Dict[Triple, Fraction] = {}
        for key, raw in self.table.items():
            if len(key) != 3:
                raise ValueError(f"table keys must be triples, got {key!r}")
            for p in key:
                if p not in index:
                    raise UnknownPointError(p)
            canon = self.key(*key)
            if canon in table:
                raise ValueError(f"duplicate entry for {' '.join(canon)}")
            table[canon] = parse_value(raw)
        expected = sum(1 for _ in self.iter_keys())
        if len(table) != expected:
            missing = next(k for k in self.iter_keys() if k not in table)
            raise ValueError(f"missing entry for {' '.join(missing)} ({len(table)} of {expected} given)")
        object.__setattr__(self, "table", table)

        scaled, scale = _scaled_tensor(self)
        scaled.setflags(write=False)
        object.__setattr__(self, "_scaled", scaled)
        object.__setattr__(self, "_scale", scale)

    @classmethod
    def from_values(
        cls,
        points: Sequence[str],
        values: Mapping[Sequence[str], ValueLike],
        *,
        symmetric: bool = True,
        name: str = "",
    ) -> "MsSpace":
        return cls(
            points=tuple(points),
            table={tuple(k): v for k, v in values.items()},
            symmetric=symmetric,
            name=name,
        )

    @property
    def n(self) -> int:
        return len(self.points)

    def index(self, point: str) -> int:
        try:
            return self._index[point]
        except KeyError:
            raise UnknownPointError(point) from None

    def key(self, x: str, y: str, z: str) -> Triple:
        """Canonical table key for the triple (sorted by declaration order in symmetric mode)."""
        triple = (x, y, z)
        for p in triple:
            self.index(p)
        if self.symmetric:
            return tuple(sorted(triple, key=self._index.__getitem__))  # type: ignore[return-value]
        return triple

    def iter_keys(self) -> Iterator[Triple]:
        """All table keys in lexicographic (declaration) order."""
        if self.symmetric:
            yield from combinations_with_replacement(self.points, 3)
        else:
            yield from product(self.points, repeat=3)

    def value(self, x: str, y: str, z: str) -> Fraction:
        return self.table[self.key(x, y, z)]

    def self_distance(self, x: str) -> Fraction:
        return self.value(x, x, x)

    def self_distances(self) -> Tuple[Fraction, ...]:
        return tuple(self.table[(p, p, p)] for p in self.points)

    def scaled_tensor(self) -> Tuple[np.ndarray, int]:
        """Read-only n×n×n array of values times `scale`, with the common denominator `scale`.

        All entries are integers (int64, or Python ints in an object array when
        large), so every comparison done on them is exact.
        """
        return self._scaled, self._scale

    def unscale(self, scaled: Any) -> Fraction:
        return Fraction(int(scaled), self._scale)

    def with_name(self, name: str) -> "MsSpace":
        return MsSpace(self.points, dict(self.table), self.symmetric, name, dict(self.provenance))


def _scaled_tensor(space: MsSpace) -> Tuple[np.ndarray, int]:
    scale = math.lcm(*(v.denominator for v in space.table.values()))
    top = max(v.numerator * (scale // v.denominator) for v in space.table.values())
    # gap sums in the sweeps add up to four scaled values
    dtype = np.int64 if 4 * top < _INT64_SAFE else object
    n = space.n
    out = np.zeros((n, n, n), dtype=dtype)
    idx = space._index
    for key, v in space.table.items():
        scaled = v.numerator * (scale // v.denominator)
        i, j, k = (idx[p] for p in key)
        if space.symmetric:
            for a, b, c in {(i, j, k), (i, k, j), (j, i, k), (j, k, i), (k, i, j), (k, j, i)}:
                out[a, b, c] = scaled
        else:
            out[i, j, k] = scaled
    return out, scale


@dataclass(frozen=True)
class SelfMap:
    """A total map T over the points of one space."""

    points: Tuple[str, ...]
    mapping: Dict[str, str]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        points = tuple(self.points)
        known = set(points)
        mapping = dict(self.mapping)
        for src, dst in mapping.items():
            if src not in known:
                raise UnknownPointError(src)
            if dst not in known:
                raise UnknownPointError(dst)
        missing = [p for p in points if p not in mapping]
        if missing:
            raise ValueError(f"map is not total; no image for {', '.join(missing)}")
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "mapping", mapping)

    @classmethod
    def over(cls, space: MsSpace, mapping: Mapping[str, str], name: str = "") -> "SelfMap":
        return cls(points=space.points, mapping=dict(mapping), name=name)

    @classmethod
    def from_images(cls, space: MsSpace, images: Sequence[str], name: str = "") -> "SelfMap":
        if len(images) != space.n:
            raise ValueError("one image per point is required")
        return cls(points=space.points, mapping=dict(zip(space.points, images)), name=name)

    @classmethod
    def constant(cls, space: MsSpace, target: str) -> "SelfMap":
        return cls.from_images(space, [target] * space.n, name=f"const({target})")

    @classmethod
    def identity(cls, space: MsSpace) -> "SelfMap":
        return cls.from_images(space, list(space.points), name="identity")

    def __call__(self, point: str) -> str:
        try:
            return self.mapping[point]
        except KeyError:
            raise UnknownPointError(point) from None

    def images(self) -> Tuple[str, ...]:
        return tuple(self.mapping[p] for p in self.points)

    def check_space(self, space: MsSpace) -> None:
        if self.points != space.points:
            raise ValueError("map is not defined over this space's points")

    def index_array(self, space: MsSpace) -> np.ndarray:
        self.check_space(space)
        return np.array([space.index(self.mapping[p]) for p in space.points], dtype=np.intp)


PhiFamily = Literal["linear", "saturating"]


@dataclass(frozen=True)
class PhiFunction:
    """Comparison function φ for φ-weak contractions.

    linear:     φ(t) = c·t,         0 < c < 1
    saturating: φ(t) = c·t/(1+t),   0 < c ≤ 1
    """

    family: PhiFamily
    c: Fraction

    def __post_init__(self):
        c = parse_value(self.c)
        if self.family == "linear":
            if not (0 < c < 1):
                raise ValueError(f"linear φ needs 0 < c < 1, got {format_value(c)}")
        elif self.family == "saturating":
            if not (0 < c <= 1):
                raise ValueError(f"saturating φ needs 0 < c ≤ 1, got {format_value(c)}")
        else:
            raise ValueError(f"unknown φ family: {self.family!r}")
        object.__setattr__(self, "c", c)

    @classmethod
    def parse(cls, text: str) -> "PhiFunction":
        """Parse `family:param`, e.g. `linear:1/2` or `saturating:1`."""
        family, sep, param = text.partition(":")
        if not sep:
            raise ValueError(f"expected family:param, got {text!r}")
        return cls(family.strip(), parse_value(param))  # type: ignore[arg-type]

    def __call__(self, t: ValueLike) -> Fraction:
        t = Fraction(t)
        if t < 0:
            raise ValueError("φ is defined on [0, ∞)")
        if self.family == "linear":
            return self.c * t
        return self.c * t / (1 + t)

    def __str__(self) -> str:
        return f"{self.family}:{format_value(self.c)}"
