from fractions import Fraction
from itertools import permutations

import numpy as np
import pytest

from msmetric.core.instances import BUILTINS, paper_example
from msmetric.core.ops import max_self, min_self, ms_value, pair_gap, scaled_gap_matrix
from msmetric.core.types import (
    MAX_POINTS,
    MsSpace,
    PhiFunction,
    SelfMap,
    UnknownPointError,
    format_value,
    parse_value,
)


def test_ms_value_paper_example(example):
    assert ms_value(example, "1", "2", "3") == 6
    assert ms_value(example, "2", "2", "1") == 8
    assert ms_value(example, "3", "3", "2") == 7


def test_ms_value_symmetric_mode_ignores_argument_order(example):
    for x, y, z in permutations(["1", "2", "3"]):
        assert ms_value(example, x, y, z) == 6
    for x, y, z in set(permutations(["1", "1", "3"])):
        assert ms_value(example, x, y, z) == 7


def test_ms_value_one_point(one_point):
    assert ms_value(one_point, "a", "a", "a") == 0


def test_ms_value_unknown_point(example):
    with pytest.raises(UnknownPointError) as err:
        ms_value(example, "1", "2", "4")
    assert isinstance(err.value, KeyError)
    assert "'4'" in str(err.value)


def test_min_max_self(example):
    assert min_self(example, "1", "2", "3") == 5
    assert min_self(example, "1", "1", "2") == 8
    assert max_self(example, "1", "2", "3") == 9
    assert max_self(example, "1", "1", "3") == 8
    for p in example.points:
        assert min_self(example, p, p, p) == max_self(example, p, p, p) == example.self_distance(p)


def test_paper_example_table():
    space = paper_example()
    assert space.symmetric
    assert len(space.table) == 10
    assert space.self_distances() == (8, 9, 5)
    assert space.value("3", "3", "3") == 5
    assert space.value("2", "2", "2") == 9


def test_builtins_construct():
    for name, factory in BUILTINS.items():
        space = factory()
        assert space.name == name


class TestParseValue:
    def test_literals(self):
        assert parse_value("7") == 7
        assert parse_value("3.5") == Fraction(7, 2)
        assert parse_value("7/2") == Fraction(7, 2)
        assert parse_value(Fraction(1, 3)) == Fraction(1, 3)
        assert parse_value(4) == 4

    @pytest.mark.parametrize("bad", ["", "-1", "1/0", "abc", "1 /2", "nan", "\u0663", "1e3"])
    def test_rejects_malformed(self, bad):
        with pytest.raises(ValueError):
            parse_value(bad)

    def test_rejects_float_and_bool(self):
        with pytest.raises(ValueError):
            parse_value(0.5)
        with pytest.raises(ValueError):
            parse_value(True)

    def test_format_value(self):
        assert format_value(Fraction(7, 2)) == "7/2"
        assert format_value(Fraction(6)) == "6"
        assert parse_value(format_value(Fraction(22, 7))) == Fraction(22, 7)


class TestMsSpace:
    def test_missing_entry(self):
        with pytest.raises(ValueError, match="missing entry"):
            MsSpace.from_values(["a", "b"], {("a", "a", "a"): 0, ("a", "a", "b"): 1, ("b", "b", "b"): 0})

    def test_duplicate_entry_after_canonicalisation(self):
        values = {("a", "a", "a"): 0, ("a", "a", "b"): 1, ("b", "a", "a"): 2, ("a", "b", "b"): 1, ("b", "b", "b"): 0}
        with pytest.raises(ValueError, match="duplicate"):
            MsSpace.from_values(["a", "b"], values)

    def test_negative_value(self):
        with pytest.raises(ValueError):
            MsSpace.from_values(["a"], {("a", "a", "a"): -1})

    def test_unknown_point_in_table(self):
        with pytest.raises(UnknownPointError):
            MsSpace.from_values(["a"], {("a", "a", "b"): 0})

    def test_point_ids(self):
        with pytest.raises(ValueError):
            MsSpace.from_values(["a b"], {("a b", "a b", "a b"): 0})
        with pytest.raises(ValueError):
            MsSpace.from_values(["a", "a"], {("a", "a", "a"): 0})

    def test_point_cap(self):
        points = [f"p{i}" for i in range(MAX_POINTS + 1)]
        with pytest.raises(ValueError, match="at most"):
            MsSpace(tuple(points), {})

    def test_strict_mode_needs_every_ordered_triple(self):
        values = {k: 1 for k in MsSpace.from_values(["a", "b"], {
            ("a", "a", "a"): 0, ("a", "a", "b"): 1, ("a", "b", "b"): 1, ("b", "b", "b"): 0
        }).iter_keys()}
        with pytest.raises(ValueError):
            MsSpace.from_values(["a", "b"], values, symmetric=False)

        from itertools import product

        full = {k: 1 for k in product("ab", repeat=3)}
        full[("a", "a", "b")] = 2
        space = MsSpace.from_values(["a", "b"], full, symmetric=False)
        assert space.value("a", "a", "b") == 2
        assert space.value("a", "b", "a") == 1
        assert len(space.table) == 8

    def test_scaled_tensor_is_exact_and_read_only(self):
        space = MsSpace.from_values(
            ["a", "b"],
            {("a", "a", "a"): Fraction(1, 2), ("a", "a", "b"): Fraction(1, 3), ("a", "b", "b"): 1, ("b", "b", "b"): 0},
        )
        M, scale = space.scaled_tensor()
        assert scale == 6
        assert M[0, 0, 0] == 3
        assert M[0, 1, 0] == 2
        assert M[1, 0, 1] == 6
        assert space.unscale(M[0, 0, 1]) == Fraction(1, 3)
        with pytest.raises(ValueError):
            M[0, 0, 0] = 7

    def test_large_values_fall_back_to_object_dtype(self):
        big = 2**62
        space = MsSpace.from_values(["a"], {("a", "a", "a"): big})
        M, _ = space.scaled_tensor()
        assert M.dtype == object
        assert space.unscale(M[0, 0, 0]) == big

    def test_gap_matrix_matches_pair_gap(self, example):
        G = scaled_gap_matrix(example)
        for i, p in enumerate(example.points):
            for j, t in enumerate(example.points):
                assert example.unscale(G[i, j]) == pair_gap(example, p, t)

    def test_equality_ignores_name(self, example):
        assert example.with_name("other") == example


class TestSelfMap:
    def test_totality(self, example):
        with pytest.raises(ValueError, match="not total"):
            SelfMap.over(example, {"1": "1", "2": "2"})

    def test_images_must_be_points(self, example):
        with pytest.raises(UnknownPointError):
            SelfMap.over(example, {"1": "1", "2": "2", "3": "9"})

    def test_constructors(self, example):
        T = SelfMap.constant(example, "3")
        assert T.images() == ("3", "3", "3")
        assert SelfMap.identity(example)("2") == "2"
        assert T.index_array(example).tolist() == [2, 2, 2]
        assert T.index_array(example).dtype == np.intp

    def test_foreign_space(self, example, two_point):
        T = SelfMap.identity(two_point)
        with pytest.raises(ValueError):
            T.check_space(example)


class TestPhiFunction:
    @pytest.mark.parametrize("text", ["linear:1/4", "linear:1/2", "linear:99/100", "saturating:1", "saturating:1/3"])
    def test_comparison_function_properties(self, text):
        phi = PhiFunction.parse(text)
        grid = [Fraction(i, 7) for i in range(150)] + [Fraction(10**k) for k in range(2, 7)]
        assert phi(0) == 0
        values = [phi(t) for t in grid]
        assert all(b >= a for a, b in zip(values, values[1:]))
        assert all(v > 0 for t, v in zip(grid, values) if t > 0)
        assert all(v <= t for t, v in zip(grid, values))

    @pytest.mark.parametrize("family,c", [("linear", 1), ("linear", 0), ("saturating", 0), ("saturating", 2), ("cubic", 1)])
    def test_parameter_ranges(self, family, c):
        with pytest.raises(ValueError):
            PhiFunction(family, Fraction(c))

    def test_parse_and_str(self):
        phi = PhiFunction.parse("saturating:1")
        assert phi(1) == Fraction(1, 2)
        assert str(phi) == "saturating:1"
        with pytest.raises(ValueError):
            PhiFunction.parse("linear")
        with pytest.raises(ValueError):
            PhiFunction.parse("linear:1/2")(-1)
