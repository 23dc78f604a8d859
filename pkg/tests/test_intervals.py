"""Exact set algebra on finite interval unions.

The identities checked here (inclusion-exclusion for measure, complement
laws, affine pushforward of measure) hold exactly over the rationals, so
every assertion is an equality, not a tolerance.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from realcert.intervalset import DegenerateTarget, IntervalSet


endpoints = st.fractions(min_value=0, max_value=8, max_denominator=64)


@st.composite
def interval_sets(draw):
    n = draw(st.integers(min_value=0, max_value=5))
    pairs = []
    for _ in range(n):
        a = draw(endpoints)
        b = draw(endpoints)
        pairs.append((min(a, b), max(a, b)))
    return IntervalSet(pairs)


def test_normalization_merges_and_drops_degenerate():
    s = IntervalSet([(0, Fraction(1, 2)), (Fraction(1, 4), Fraction(3, 4)),
                     (Fraction(7, 8), Fraction(7, 8))])
    assert s.intervals == ((Fraction(0), Fraction(3, 4)),)
    assert s.measure == Fraction(3, 4)


def test_touching_intervals_merge_by_default():
    s = IntervalSet([(0, Fraction(1, 2)), (Fraction(1, 2), 1)])
    assert len(s) == 1
    kept = IntervalSet([(0, Fraction(1, 2)), (Fraction(1, 2), 1)], merge_touching=False)
    assert len(kept) == 2
    assert kept.measure == 1


def test_locate_kinds_and_edges():
    s = IntervalSet([(0, Fraction(1, 2)), (Fraction(3, 4), 1)])
    assert s.locate(Fraction(1, 4)) == ("inside", 0, False)
    assert s.locate(Fraction(1, 2)) == ("inside", 0, True)
    assert s.locate(Fraction(3, 5)).kind == "gap"
    assert s.locate(Fraction(2)).kind == "outside"
    assert s.locate(Fraction(-1)).kind == "outside"
    assert s.contains_point(1) and not s.contains_point(Fraction(5, 8))


def test_contains_interval_requires_single_member():
    s = IntervalSet([(0, Fraction(1, 2)), (Fraction(1, 2), 1)], merge_touching=False)
    assert s.contains_interval(0, Fraction(1, 2))
    # [1/4, 3/4] straddles the split, no single member covers it
    assert not s.contains_interval(Fraction(1, 4), Fraction(3, 4))


@given(interval_sets(), interval_sets())
@settings(max_examples=200)
def test_inclusion_exclusion(s, t):
    assert s.union(t).measure == s.measure + t.measure - s.intersect(t).measure


@given(interval_sets(), interval_sets())
@settings(max_examples=200)
def test_subtract_partitions_measure(s, t):
    assert s.subtract(t).measure == s.measure - s.intersect(t).measure


@given(interval_sets())
@settings(max_examples=150)
def test_complement_within_is_exact(s):
    inside = s.intersect(IntervalSet.interval(0, 8))
    comp = s.complement_within(0, 8)
    assert comp.measure == 8 - inside.measure
    assert comp.intersect(inside).measure == 0


@given(interval_sets())
@settings(max_examples=150)
def test_self_identities(s):
    assert s.union(s) == s
    assert s.intersect(s) == s
    assert not s.subtract(s)


@given(interval_sets(), endpoints, endpoints)
@settings(max_examples=150)
def test_affine_map_scales_measure(s, a, b):
    if b <= a:
        with pytest.raises(DegenerateTarget):
            s.affine_map(a, b)
        return
    mapped = s.affine_map(a, b)
    assert mapped.measure == s.measure * (b - a)
    if s.span is not None:
        lo, hi = s.span
        scale = b - a
        assert mapped.span == (scale * lo + a, scale * hi + a)


@given(interval_sets())
@settings(max_examples=100)
def test_iteration_is_sorted_and_disjoint(s):
    pairs = list(s)
    assert pairs == sorted(pairs)
    for (a1, b1), (a2, _) in zip(pairs, pairs[1:]):
        assert a1 < b1 and b1 < a2


def test_json_formats_rationals():
    s = IntervalSet([(0, Fraction(1, 3))])
    assert s.as_json() == [["0/1", "1/3"]]


def test_span_empty():
    assert IntervalSet().span is None
    assert not IntervalSet()
