from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from planext.bounds import BoundRangeError, best_bound, bounds_for, edge_cap, named_bounds
from planext.patterns import ForbiddenPattern

C3, C4, C5, K4 = ForbiddenPattern.cycle(3), ForbiddenPattern.cycle(4), ForbiddenPattern.cycle(5), ForbiddenPattern.clique(4)


def test_c4_at_thirty():
    (b,) = named_bounds(30, "c4")
    assert b.value == 60 and b.floor == 60


def test_c5_switches_at_eleven():
    assert [b.name for b in named_bounds(10, "c5")] == ["12/5(n-2)"]
    b10 = named_bounds(10, "c5")[0]
    assert b10.value == Fraction(96, 5) and b10.floor == 19
    new = named_bounds(11, "c5")[-1]
    assert new.value == Fraction(99, 5) and new.floor == 19
    assert best_bound(11, C5).name == "(12n-33)/5"


def test_triangle_and_k4():
    assert named_bounds(7, "k3")[0].value == 10
    assert named_bounds(7, "c3")[0].value == 10
    assert named_bounds(7, "k4")[0].value == 15


@pytest.mark.parametrize("n, name", [(3, "c4"), (4, "c5"), (2, "k4"), (2, "c3")])
def test_range_errors(n, name):
    with pytest.raises(BoundRangeError, match="needs n >="):
        named_bounds(n, name)


def test_unknown_pattern():
    with pytest.raises(BoundRangeError):
        named_bounds(10, "c6")


def test_edge_cap_small_n():
    assert edge_cap(1, C4) == 0
    assert edge_cap(2, C4) == 1
    assert edge_cap(3, C5) == 3


@given(st.integers(11, 10**6))
def test_new_c5_bound_is_tighter(n):
    old, new = named_bounds(n, "c5")
    assert new.value < old.value


@given(st.integers(3, 10**4), st.sampled_from([C3, C4, C5, K4]))
def test_cap_is_min_of_bounds(n, p):
    assert edge_cap(n, p) == min(b.floor for b in bounds_for(n, p))
    assert edge_cap(n, p) <= 3 * n - 6
