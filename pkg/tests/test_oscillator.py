"""Oscillator family: exact peak arithmetic, gauge integrals, norms.

Rational inputs give rational phases, so the kernel's exact pi-multiple
reduction makes many of these checks equalities of point enclosures, not
tolerance comparisons.  mpmath at 200 bits referees the generic points;
its own argument-reduction error near exact-zero phases is about 2^-175,
hence the slack constant.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st
from mpmath import mp, mpf

from realcert.certificates import InconclusiveAtBudget
from realcert.enclosure import Enclosure
from realcert.oscillator import (
    Extremum,
    NonLebesgueWitness,
    NonterminationBudget,
    OscCombination,
    Oscillator,
    RestrictionWitness,
    UnboundedSpan,
    ZeroCombination,
    alexiewicz_norm,
    hake_csv,
    hake_table,
    kurzweil_integral,
    nonlebesgue_witness,
    osc_eval,
    restriction_witness,
    slope_bound,
)

mp.prec = 200

REF_SLACK = mpf(2) ** -80


def as_mp(q: Fraction) -> mpf:
    return mpf(q.numerator) / q.denominator


def ref_derivative(x: Fraction) -> mpf:
    s = as_mp(x) if x <= Fraction(1, 2) else 1 - as_mp(x)
    if s == 0:
        return mpf(0)
    phase = mp.pi / (4 * s * s)
    return 8 * s * mp.sin(phase) - (2 * mp.pi / s) * mp.cos(phase)


def ref_primitive(x: Fraction) -> mpf:
    if x <= Fraction(1, 2):
        s = as_mp(x)
        sign = 1
    else:
        s = 1 - as_mp(x)
        sign = -1
    if s == 0:
        return mpf(0)
    return sign * 4 * s * s * mp.sin(mp.pi / (4 * s * s))


def unit() -> Oscillator:
    return Oscillator()


# -- exact values -----------------------------------------------------------


def test_primitive_exact_zeros():
    o = unit()
    for x in (Fraction(0), Fraction(1), Fraction(1, 2), Fraction(1, 4),
              Fraction(3, 4), Fraction(1, 6)):
        assert o.primitive_at(x) == Enclosure.point(Fraction(0))


def test_extremum_heights_alternate():
    assert Extremum(1).height() == Fraction(-2, 3)
    assert Extremum(2).height() == Fraction(2, 5)
    assert Extremum(3).height() == Fraction(-2, 7)
    assert unit().primitive_at(Extremum(5)) == Enclosure.point(Fraction(-2, 11))
    with pytest.raises(ValueError):
        Extremum(0)


def test_extremum_point_and_derivative():
    a1 = Extremum(1).point(96)
    ref = 1 / mp.sqrt(6)
    assert as_mp(a1.lo) <= ref <= as_mp(a1.hi)
    d = unit().derivative_at(Extremum(1))
    ref_d = -8 / mp.sqrt(6)
    assert as_mp(d.lo) <= ref_d <= as_mp(d.hi)
    assert d.hi - d.lo < Fraction(1, 2**80)


def test_extremum_derivative_scales_with_host_length():
    host = Oscillator(Fraction(1, 4), Fraction(1, 2))
    assert host.derivative_at(Extremum(1)) == 4 * unit().derivative_at(Extremum(1))


def test_off_support_is_exactly_zero():
    host = Oscillator(Fraction(1, 4), Fraction(1, 2))
    assert host.derivative_at(Fraction(7, 8)) == Enclosure.point(Fraction(0))
    assert host.primitive_at(Fraction(1, 8)) == Enclosure.point(Fraction(0))
    straddle = host.primitive_at(Enclosure(Fraction(3, 16), Fraction(5, 16)))
    assert straddle.contains(Fraction(0))


def test_oscillator_validation():
    with pytest.raises(ValueError):
        Oscillator(Fraction(1, 2), Fraction(1, 2))
    with pytest.raises(ValueError):
        Oscillator(Fraction(0), Fraction(1), kind="integral")


def test_derivative_blows_up_at_edges():
    with pytest.raises(UnboundedSpan):
        unit().derivative_at(Enclosure(Fraction(0), Fraction(1, 100)))


# -- reference sweeps -------------------------------------------------------


@given(st.fractions(min_value=Fraction(1, 50), max_value=Fraction(49, 50),
                    max_denominator=2500))
@settings(max_examples=120, deadline=None)
def test_derivative_contains_reference(x):
    enc = unit().derivative_at(x, precision=96)
    ref = ref_derivative(x)
    assert as_mp(enc.lo) - REF_SLACK <= ref <= as_mp(enc.hi) + REF_SLACK


@given(st.fractions(min_value=0, max_value=1, max_denominator=2500))
@settings(max_examples=120, deadline=None)
def test_primitive_contains_reference(x):
    enc = unit().primitive_at(x, precision=96)
    ref = ref_primitive(x)
    assert as_mp(enc.lo) - REF_SLACK <= ref <= as_mp(enc.hi) + REF_SLACK
    assert abs(enc).hi <= 1  # |4 s^2 sin| <= 1 on the unit interval


@given(st.fractions(min_value=Fraction(1, 20), max_value=Fraction(19, 20),
                    max_denominator=400),
       st.fractions(min_value=Fraction(1, 1000), max_value=Fraction(1, 25),
                    max_denominator=1000))
@settings(max_examples=80, deadline=None)
def test_interval_boxes_contain_point_values(x, width):
    hi = min(x + width, Fraction(19, 20))
    box = Enclosure(x, hi)
    boxed = unit().derivative_at(box, precision=64)
    mid = unit().derivative_at((x + hi) / 2, precision=64)
    assert boxed.lo <= mid.hi and mid.lo <= boxed.hi


# -- integration ------------------------------------------------------------


def test_integral_between_peaks_is_exact():
    got = kurzweil_integral(unit(), Extremum(2), Extremum(1))
    assert got == Enclosure.point(Fraction(-16, 15))


def test_full_integral_is_exactly_zero():
    assert kurzweil_integral(unit(), 0, 1) == Enclosure.point(Fraction(0))


def test_integral_additivity_encloses_zero():
    left = kurzweil_integral(unit(), 0, Fraction(1, 3))
    right = kurzweil_integral(unit(), Fraction(1, 3), 1)
    assert (left + right).contains(Fraction(0))


def test_integral_validation():
    with pytest.raises(ValueError):
        kurzweil_integral(Oscillator(kind="primitive"), 0, 1)
    with pytest.raises(ValueError):
        kurzweil_integral(unit(), 0, Fraction(3, 2))
    with pytest.raises(ValueError):
        kurzweil_integral(OscCombination.of({1: 1}), Extremum(1), 1)


def test_hake_rows_shrink_like_four_eps_squared():
    o = unit()
    dyadic = [Fraction(1, 2**n) for n in range(1, 21)]
    for row in hake_table(o, dyadic):
        assert row.integral == Enclosure.point(Fraction(0))  # integer phase
    generic = [Fraction(1, 3), Fraction(1, 5), Fraction(2, 7)]
    for eps, row in zip(generic, hake_table(o, generic)):
        assert abs(row.integral).hi <= 4 * eps * eps + Fraction(1, 2**60)
    with pytest.raises(ValueError):
        hake_table(o, [Fraction(0)])
    with pytest.raises(ValueError):
        hake_table(o, [Fraction(2)])


def test_hake_csv_header():
    rows = hake_table(unit(), [Fraction(1, 2)])
    text = hake_csv(rows)
    assert text.splitlines()[0] == "epsilon_lo,epsilon_hi,integral_lo,integral_hi"
    assert len(text.splitlines()) == 2


# -- non-Lebesgue witnesses -------------------------------------------------


def test_witness_first_peak():
    got = nonlebesgue_witness(unit(), 1)
    assert isinstance(got, NonLebesgueWitness)
    assert got.K == 1
    assert got.partial_sum == Fraction(16, 15)
    assert got.sum_before == 0
    assert got.certificate().ok


def test_witness_bar_four_oracle():
    got = nonlebesgue_witness(unit(), 4)
    assert isinstance(got, NonLebesgueWitness)
    assert got.K == 10
    assert got.partial_sum == Fraction(1386674392, 334639305)
    assert got.sum_before == Fraction(8234192, 2078505)
    # minimality is exact: the previous partial sum is still under the bar
    assert got.sum_before < 4 <= got.partial_sum


def test_witness_is_chart_invariant():
    a = nonlebesgue_witness(unit(), 3)
    b = nonlebesgue_witness(Oscillator(Fraction(1, 8), Fraction(1, 4)), 3)
    assert a.K == b.K and a.partial_sum == b.partial_sum
    lo, hi = b.span_lo, b.span_hi
    assert Fraction(1, 8) <= lo.lo <= hi.hi <= Fraction(1, 4)


def test_witness_rows_accumulate():
    got = nonlebesgue_witness(unit(), 2)
    rows = list(got.rows())
    assert rows[0][1] == Fraction(16, 15)
    running = Fraction(0)
    for k, term, cumulative in rows:
        running += term
        assert cumulative == running
    assert running == got.partial_sum
    assert got.csv().splitlines()[0] == "k,term,cumulative"


def test_witness_budget_cap():
    got = nonlebesgue_witness(unit(), 30, max_peaks=100)
    assert isinstance(got, InconclusiveAtBudget)
    assert got.budget["max_peaks"] == 100


def test_witness_validation():
    with pytest.raises(ValueError):
        nonlebesgue_witness(Oscillator(kind="primitive"), 1)
    with pytest.raises(ValueError):
        nonlebesgue_witness(unit(), 0)


def test_restriction_witness_selection():
    got = restriction_witness(OscCombination.of({3: 2}), 2)
    assert isinstance(got, RestrictionWitness)
    assert got.index == 3 and got.alpha == 2
    assert got.base.K == 1 and got.scaled_sum == Fraction(32, 15)

    mixed = restriction_witness(OscCombination.of({1: Fraction(1, 2), 4: -3}), 1)
    assert mixed.index == 4 and mixed.alpha == -3

    tie = restriction_witness(OscCombination.of({1: 2, 3: -2}), 1)
    assert tie.index == 1  # ties prefer the shallowest support

    with pytest.raises(ZeroCombination):
        restriction_witness(OscCombination(), 1)


# -- combinations -----------------------------------------------------------


def test_combination_cleanup_and_validation():
    c = OscCombination.of({2: 0, 1: Fraction(1, 3)})
    assert c.alphas == ((1, Fraction(1, 3)),)
    assert OscCombination().is_zero
    assert OscCombination.support(3) == (Fraction(1, 16), Fraction(1, 8))
    with pytest.raises(ValueError):
        OscCombination(((0, Fraction(1)),))
    with pytest.raises(ValueError):
        OscCombination(((2, Fraction(1)), (2, Fraction(2))))


def test_combination_value_splits_by_support():
    c = OscCombination.of({1: 2, 2: -1})
    x = Fraction(3, 8)  # inside support 1 = [1/4, 1/2]; support 2 vanishes
    single = Oscillator(Fraction(1, 4), Fraction(1, 2)).derivative_at(x)
    assert c.value_at(x) == 2 * single
    assert c.primitive_at(Fraction(3, 4)) == Enclosure.point(Fraction(0))


def test_combination_json_round_trip():
    c = OscCombination.of({1: Fraction(1, 2), 4: -3})
    assert OscCombination.from_json(c.as_json()) == c


# -- Alexiewicz norm --------------------------------------------------------


def test_alexiewicz_unit_oracle():
    enc = alexiewicz_norm(unit(), Fraction(1, 1000))
    assert enc.hi - enc.lo <= Fraction(1, 1000)
    assert Fraction(68, 100) < enc.lo <= enc.hi < Fraction(69, 100)
    # float scan of |primitive| gives a sup lower bound the bracket must clear
    scan = max(abs(float(ref_primitive(Fraction(i, 9973)))) for i in range(1, 9973))
    assert float(enc.hi) >= scan - 1e-6


def test_alexiewicz_single_support_matches_unit():
    base = alexiewicz_norm(unit(), Fraction(1, 500))
    for k in (1, 2, 3):
        got = alexiewicz_norm(OscCombination.of({k: 1}), Fraction(1, 500))
        assert abs(got.lo - base.lo) <= Fraction(2, 500)
        assert abs(got.hi - base.hi) <= Fraction(2, 500)


def test_alexiewicz_scales_with_largest_coefficient():
    tol = Fraction(1, 200)
    base = alexiewicz_norm(unit(), tol)
    combo = alexiewicz_norm(OscCombination.of({1: Fraction(1, 2), 3: 2}), tol)
    assert abs(combo.lo - 2 * base.lo) <= 4 * tol
    assert abs(combo.hi - 2 * base.hi) <= 4 * tol


def test_alexiewicz_zero_combination():
    assert alexiewicz_norm(OscCombination(), Fraction(1, 10)) == Enclosure.point(Fraction(0))


def test_alexiewicz_queue_budget():
    with pytest.raises(NonterminationBudget):
        alexiewicz_norm(unit(), Fraction(1, 10**9), queue_limit=1)


def test_alexiewicz_rejects_bad_tolerance():
    with pytest.raises(ValueError):
        alexiewicz_norm(unit(), 0)


# -- slope bound ------------------------------------------------------------


def test_slope_bound_requires_interior_span():
    with pytest.raises(UnboundedSpan):
        slope_bound(unit(), Fraction(0), Fraction(1, 2))
    with pytest.raises(UnboundedSpan):
        slope_bound(Oscillator(Fraction(1, 4), Fraction(1, 2)),
                    Fraction(1, 8), Fraction(3, 8))


@given(st.integers(min_value=100, max_value=1899))
@settings(max_examples=60, deadline=None)
def test_slope_bound_controls_finite_differences(n):
    o = unit()
    x = Fraction(n, 2000)
    h = Fraction(1, 2**30)
    bound = slope_bound(o, x, x + h)
    d1 = o.derivative_at(x, precision=80)
    d2 = o.derivative_at(x + h, precision=80)
    gap = abs(d2 - d1).hi  # includes both enclosure widths
    assert gap <= bound * h + Fraction(1, 2**60)


def test_osc_eval_alias():
    assert osc_eval(unit(), Fraction(1, 2)) == unit().derivative_at(Fraction(1, 2))
