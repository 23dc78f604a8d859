"""Everywhere-differentiable oscillators whose derivatives escape L1.

The model primitive rises like 4x^2 sin(pi/(4x^2)) on the left half of
the unit interval and mirrors, with flipped sign, on the right half.  It
is differentiable everywhere, including the endpoints, yet the
derivative oscillates so hard near 0 that its positive and negative
parts both have infinite integral.  Integration is by antiderivative
difference, which is exact for these integrands; phase arguments are
rational, so the kernel's sin(pi * c) reduction gives exact zeros and
exact alternating peak values.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .certificates import CERTIFIED, Certificate, InconclusiveAtBudget
from .enclosure import Enclosure, cos_pi, pi_const, sin_pi, sqrt_enc
from .rational import HALF, ONE, ZERO, RationalLike, as_fraction, format_fraction

__all__ = [
    "Extremum",
    "HakeEntry",
    "NonLebesgueWitness",
    "NonterminationBudget",
    "OscCombination",
    "Oscillator",
    "RestrictionWitness",
    "ZeroCombination",
    "alexiewicz_norm",
    "hake_csv",
    "hake_table",
    "kurzweil_integral",
    "nonlebesgue_witness",
    "osc_eval",
    "restriction_witness",
    "slope_bound",
]


class NonterminationBudget(RuntimeError):
    """Branch-and-bound queue outgrew its limit before reaching tolerance."""


class ZeroCombination(ValueError):
    """A combination with at least one nonzero coefficient is required."""


class UnboundedSpan(ValueError):
    """Derivative values blow up inside the requested span."""


# ---------------------------------------------------------------------------
# Branch formulas on the unit interval
# ---------------------------------------------------------------------------


def _primitive_half(s_lo: Fraction, s_hi: Fraction, precision: int) -> Enclosure:
    # 4 s^2 sin(pi/(4 s^2)) over 0 <= s_lo <= s <= s_hi <= 1/2
    sq = Enclosure(s_lo, s_hi).square() * 4
    if s_lo == 0:
        return Enclosure(-sq.hi, sq.hi)  # |value| <= 4 s^2, sine bounded
    phase = Enclosure(1 / sq.hi, 1 / sq.lo)
    return sq * sin_pi(phase, precision)


def _derivative_half(s_lo: Fraction, s_hi: Fraction, precision: int) -> Enclosure:
    # 8 s sin(pi/(4 s^2)) - (2 pi / s) cos(pi/(4 s^2)), s bounded away from 0
    if s_lo <= 0:
        raise UnboundedSpan("derivative is unbounded approaching the edge")
    s = Enclosure(s_lo, s_hi)
    sq = s.square() * 4
    phase = Enclosure(1 / sq.hi, 1 / sq.lo)
    swing = 8 * s * sin_pi(phase, precision)
    pull = 2 * pi_const(precision) * (1 / s) * cos_pi(phase, precision)
    return swing - pull


def _unit_primitive(t_lo: Fraction, t_hi: Fraction, precision: int) -> Enclosure:
    if t_lo == t_hi and (t_lo == 0 or t_lo == 1):
        return Enclosure(ZERO, ZERO)
    parts: list[Enclosure] = []
    if t_lo <= HALF:
        parts.append(_primitive_half(t_lo, min(t_hi, HALF), precision))
    if t_hi > HALF:
        # mirrored branch carries the opposite sign
        u_lo, u_hi = 1 - t_hi, 1 - max(t_lo, HALF)
        parts.append(-_primitive_half(u_lo, u_hi, precision))
    out = parts[0]
    for piece in parts[1:]:
        out = out.hull(piece)
    return out


def _unit_derivative(t_lo: Fraction, t_hi: Fraction, precision: int) -> Enclosure:
    if t_lo == t_hi and (t_lo == 0 or t_lo == 1):
        return Enclosure(ZERO, ZERO)
    parts: list[Enclosure] = []
    if t_lo <= HALF:
        parts.append(_derivative_half(t_lo, min(t_hi, HALF), precision))
    if t_hi > HALF:
        # same formula in the reflected variable, sign preserved
        u_lo, u_hi = 1 - t_hi, 1 - max(t_lo, HALF)
        parts.append(_derivative_half(u_lo, u_hi, precision))
    out = parts[0]
    for piece in parts[1:]:
        out = out.hull(piece)
    return out


# ---------------------------------------------------------------------------
# Oscillator on a subinterval, alternating peak points
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Extremum:
    """k-th alternating peak of the unit primitive, at 1/sqrt(2+4k).

    The phase there is (k + 1/2) pi, so the primitive value is exactly
    (-1)^k * 2/(2k+1) and the cosine term of the derivative drops out.
    """

    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("peaks are indexed from 1")

    def height(self) -> Fraction:
        return Fraction(2 if self.k % 2 == 0 else -2, 2 * self.k + 1)

    def point(self, precision: int = 96) -> Enclosure:
        return 1 / sqrt_enc(2 + 4 * self.k, precision)


@dataclass(frozen=True)
class Oscillator:
    """The model oscillator carried onto [lo, hi] by the affine chart.

    kind "primitive" evaluates the everywhere-differentiable hump; kind
    "derivative" evaluates its pointwise derivative, which divides by the
    interval length.  Both vanish outside the interval.
    """

    lo: Fraction = ZERO
    hi: Fraction = ONE
    kind: str = "derivative"

    def __post_init__(self) -> None:
        lo, hi = as_fraction(self.lo), as_fraction(self.hi)
        if not ZERO <= lo < hi <= ONE:
            raise ValueError(f"need 0 <= lo < hi <= 1, got [{lo}, {hi}]")
        if self.kind not in ("primitive", "derivative"):
            raise ValueError(f"unknown kind {self.kind!r}")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    def _chart(self, x_lo: Fraction, x_hi: Fraction) -> tuple[Fraction, Fraction]:
        return (x_lo - self.lo) / self.length, (x_hi - self.lo) / self.length

    def _eval(self, x_lo: Fraction, x_hi: Fraction, precision: int,
              primitive: bool) -> Enclosure:
        if x_hi < self.lo or x_lo > self.hi:
            return Enclosure(ZERO, ZERO)
        t_lo, t_hi = self._chart(max(x_lo, self.lo), min(x_hi, self.hi))
        if primitive:
            inner = _unit_primitive(t_lo, t_hi, precision)
        else:
            inner = _unit_derivative(t_lo, t_hi, precision) * (1 / self.length)
        if x_lo < self.lo or x_hi > self.hi:
            inner = inner.hull(Enclosure(ZERO, ZERO))
        return inner

    def primitive_at(self, x: "Enclosure | Extremum | RationalLike",
                     precision: int = 96) -> Enclosure:
        if isinstance(x, Extremum):
            return Enclosure.point(x.height())
        if isinstance(x, Enclosure):
            return self._eval(x.lo, x.hi, precision, primitive=True)
        q = as_fraction(x)
        return self._eval(q, q, precision, primitive=True)

    def derivative_at(self, x: "Enclosure | Extremum | RationalLike",
                      precision: int = 96) -> Enclosure:
        if isinstance(x, Extremum):
            # cosine term vanishes at the peak; only 8 t survives, rescaled
            sign = 1 if x.k % 2 == 0 else -1
            peak = x.point(precision)
            return sign * 8 * peak * (1 / self.length)
        if isinstance(x, Enclosure):
            return self._eval(x.lo, x.hi, precision, primitive=False)
        q = as_fraction(x)
        return self._eval(q, q, precision, primitive=False)

    def value_at(self, x: "Enclosure | Extremum | RationalLike",
                 precision: int = 96) -> Enclosure:
        if self.kind == "primitive":
            return self.primitive_at(x, precision)
        return self.derivative_at(x, precision)

    def as_json(self) -> dict[str, str]:
        return {"lo": format_fraction(self.lo), "hi": format_fraction(self.hi),
                "kind": self.kind}


def osc_eval(o: Oscillator, x: "Enclosure | Extremum | RationalLike",
             precision: int = 96) -> Enclosure:
    """Sound enclosure of the oscillator at x; exact zeros off support."""
    return o.value_at(x, precision)


# ---------------------------------------------------------------------------
# Finite combinations over the dyadic intervals
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OscCombination:
    """Finite sum of scaled derivative oscillators on [2^-(k+1), 2^-k].

    Supports have pairwise disjoint interiors, meeting only at dyadic
    endpoints where every branch vanishes, so values and integrals add
    coordinate by coordinate.
    """

    alphas: tuple[tuple[int, Fraction], ...] = ()

    def __post_init__(self) -> None:
        seen: set[int] = set()
        cleaned = []
        for k, alpha in self.alphas:
            k = int(k)
            alpha = as_fraction(alpha)
            if k < 1:
                raise ValueError("support indices start at 1")
            if k in seen:
                raise ValueError(f"duplicate support index {k}")
            seen.add(k)
            if alpha != 0:
                cleaned.append((k, alpha))
        object.__setattr__(self, "alphas", tuple(sorted(cleaned)))

    @staticmethod
    def of(coeffs: Mapping[int, RationalLike]) -> "OscCombination":
        return OscCombination(tuple((k, as_fraction(v)) for k, v in coeffs.items()))

    @staticmethod
    def support(k: int) -> tuple[Fraction, Fraction]:
        return Fraction(1, 1 << (k + 1)), Fraction(1, 1 << k)

    @property
    def is_zero(self) -> bool:
        return not self.alphas

    def oscillators(self) -> tuple[tuple[Fraction, Oscillator], ...]:
        return tuple((alpha, Oscillator(*self.support(k), kind="derivative"))
                     for k, alpha in self.alphas)

    def _sum(self, x, precision: int, primitive: bool) -> Enclosure:
        total = Enclosure.point(0)
        for alpha, osc in self.oscillators():
            part = osc.primitive_at(x, precision) if primitive \
                else osc.derivative_at(x, precision)
            total = total + alpha * part
        return total

    def value_at(self, x: "Enclosure | RationalLike", precision: int = 96) -> Enclosure:
        return self._sum(x, precision, primitive=False)

    def primitive_at(self, x: "Enclosure | RationalLike", precision: int = 96) -> Enclosure:
        return self._sum(x, precision, primitive=True)

    def as_json(self) -> dict[str, object]:
        return {"alphas": {str(k): format_fraction(a) for k, a in self.alphas}}

    @staticmethod
    def from_json(data: Mapping[str, object]) -> "OscCombination":
        raw = data["alphas"]
        return OscCombination.of({int(k): Fraction(v) for k, v in raw.items()})  # type: ignore[union-attr]


# ---------------------------------------------------------------------------
# Integration by antiderivative difference
# ---------------------------------------------------------------------------


def _primitive_endpoint(obj: "Oscillator | OscCombination",
                        x: "Enclosure | Extremum | RationalLike",
                        precision: int) -> Enclosure:
    if isinstance(x, Extremum) and isinstance(obj, OscCombination):
        raise ValueError("peak endpoints are only meaningful for a single oscillator")
    if isinstance(x, Extremum) or isinstance(x, Enclosure):
        return obj.primitive_at(x, precision)
    q = as_fraction(x)
    if not ZERO <= q <= ONE:
        raise ValueError(f"endpoint {q} leaves the unit interval")
    return obj.primitive_at(q, precision)


def kurzweil_integral(obj: "Oscillator | OscCombination",
                      lo: "Enclosure | Extremum | RationalLike",
                      hi: "Enclosure | Extremum | RationalLike",
                      precision: int = 96) -> Enclosure:
    """Integral of the derivative object over [lo, hi].

    Every integrand here is an exact derivative, so the gauge integral is
    the difference of primitive values; no partitioning is involved and
    additivity across shared endpoints holds within enclosure widths.
    """
    if isinstance(obj, Oscillator) and obj.kind != "derivative":
        raise ValueError("integrand must be a derivative-kind oscillator")
    upper = _primitive_endpoint(obj, hi, precision)
    lower = _primitive_endpoint(obj, lo, precision)
    return upper - lower


@dataclass(frozen=True)
class HakeEntry:
    epsilon: Enclosure
    integral: Enclosure


def hake_table(obj: "Oscillator | OscCombination",
               epsilons: Sequence["Enclosure | Extremum | RationalLike"],
               precision: int = 96) -> tuple[HakeEntry, ...]:
    """Enclosures of the integral over [eps, 1] for each cutoff.

    As the cutoffs decrease the rows approach the full integral, which is
    how the gauge integral of an endpoint-singular derivative is defined;
    each row is sound on its own, whatever order the cutoffs come in.
    """
    rows = []
    for eps in epsilons:
        if isinstance(eps, Extremum):
            eps_enc = eps.point(precision)
        elif isinstance(eps, Enclosure):
            eps_enc = eps
        else:
            eps_enc = Enclosure.point(as_fraction(eps))
        if eps_enc.lo <= 0 or eps_enc.hi > 1:
            raise ValueError(f"cutoff {eps_enc} must sit inside (0, 1]")
        value = kurzweil_integral(obj, eps if isinstance(eps, Extremum) else eps_enc,
                                  ONE, precision)
        rows.append(HakeEntry(eps_enc, value))
    return tuple(rows)


def hake_csv(rows: Iterable[HakeEntry]) -> str:
    out = ["epsilon_lo,epsilon_hi,integral_lo,integral_hi"]
    for row in rows:
        out.append(",".join([
            format_fraction(row.epsilon.lo), format_fraction(row.epsilon.hi),
            format_fraction(row.integral.lo), format_fraction(row.integral.hi),
        ]))
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# Non-Lebesgue witnesses
# ---------------------------------------------------------------------------


def _peak_gap(k: int) -> Fraction:
    # |integral between consecutive peaks| = 2/(2k+1) + 2/(2k+3), exact
    return Fraction(2, 2 * k + 1) + Fraction(2, 2 * k + 3)


@dataclass(frozen=True)
class NonLebesgueWitness:
    """Exact lower bound for the integral of |derivative| past a bar.

    Between consecutive alternating peaks the signed integral has exact
    magnitude 2/(2k+1) + 2/(2k+3); these magnitudes sum below the
    integral of the absolute value over [peak K+1, peak 1] and diverge,
    so a minimal K exists for every bar.  The sum is invariant under the
    affine chart, so the same numbers certify every host interval.
    """

    host: Oscillator
    bar: Fraction
    K: int
    partial_sum: Fraction
    sum_before: Fraction
    span_lo: Enclosure
    span_hi: Enclosure

    def rows(self) -> Iterable[tuple[int, Fraction, Fraction]]:
        running = ZERO
        for k in range(1, self.K + 1):
            term = _peak_gap(k)
            running += term
            yield k, term, running

    def csv(self) -> str:
        out = ["k,term,cumulative"]
        for k, term, running in self.rows():
            out.append(f"{k},{format_fraction(term)},{format_fraction(running)}")
        return "\n".join(out) + "\n"

    def certificate(self) -> Certificate:
        return Certificate(
            claim="derivative-absolute-integral-exceeds-bar",
            verdict=CERTIFIED,
            payload={
                "host": self.host.as_json(),
                "bar": self.bar,
                "peaks_used": self.K,
                "partial_sum": self.partial_sum,
                "sum_before": self.sum_before,
                "span_lo": self.span_lo,
                "span_hi": self.span_hi,
            },
        )


def nonlebesgue_witness(o: Oscillator, bar: RationalLike, precision: int = 96,
                        max_peaks: int = 10_000,
                        ) -> "NonLebesgueWitness | InconclusiveAtBudget":
    """Least K whose peak-gap partial sum reaches the bar, exactly.

    The sums grow like twice the logarithm of K while their exact
    denominators grow exponentially, so very large bars stop at the peak
    budget instead of grinding; within budget, minimality is exact.
    """
    if o.kind != "derivative":
        raise ValueError("witness applies to derivative-kind oscillators")
    bar = as_fraction(bar)
    if bar <= 0:
        raise ValueError("bar must be positive")
    total = ZERO
    k = 0
    while total < bar:
        if k >= max_peaks:
            return InconclusiveAtBudget(
                f"partial sum {float(total):.3f} after {k} peaks has not "
                f"reached {float(bar):.3f}", {"max_peaks": max_peaks})
        k += 1
        total += _peak_gap(k)
    before = total - _peak_gap(k)
    inner_lo = Extremum(k + 1).point(precision)
    inner_hi = Extremum(1).point(precision)
    span_lo = o.lo + o.length * inner_lo
    span_hi = o.lo + o.length * inner_hi
    return NonLebesgueWitness(o, bar, k, total, before, span_lo, span_hi)


@dataclass(frozen=True)
class RestrictionWitness:
    """Non-integrability witness pushed through the largest coefficient."""

    index: int
    alpha: Fraction
    scaled_sum: Fraction
    base: NonLebesgueWitness

    def certificate(self) -> Certificate:
        inner = self.base.certificate()
        return Certificate(
            claim="combination-restriction-not-lebesgue",
            verdict=CERTIFIED,
            payload={
                "support_index": self.index,
                "alpha": self.alpha,
                "scaled_sum": self.scaled_sum,
                "restriction": inner.payload,
            },
        )


def restriction_witness(c: OscCombination, bar: RationalLike, precision: int = 96,
                        max_peaks: int = 10_000,
                        ) -> "RestrictionWitness | InconclusiveAtBudget":
    """Certify that no nonzero combination is absolutely integrable.

    Restricted to one support the combination is a single scaled
    oscillator, so the peak-gap witness applies after dividing the bar by
    the coefficient.  The largest magnitude (ties to the shallowest
    support) keeps the required K smallest.
    """
    if c.is_zero:
        raise ZeroCombination("all coefficients vanish")
    bar = as_fraction(bar)
    index, alpha = max(c.alphas, key=lambda ka: (abs(ka[1]), -ka[0]))
    host = Oscillator(*OscCombination.support(index), kind="derivative")
    base = nonlebesgue_witness(host, bar / abs(alpha), precision, max_peaks)
    if isinstance(base, InconclusiveAtBudget):
        return base
    return RestrictionWitness(index, alpha, abs(alpha) * base.partial_sum, base)


# ---------------------------------------------------------------------------
# Alexiewicz norm by branch and bound
# ---------------------------------------------------------------------------


def _combination_boxes(c: OscCombination) -> list[tuple[Fraction, Fraction]]:
    return [OscCombination.support(k) for k, _ in c.alphas]


def alexiewicz_norm(obj: "OscCombination | Oscillator", tol: RationalLike,
                    precision: int = 64, queue_limit: int = 100_000) -> Enclosure:
    """Enclose sup |primitive| to within tol by certified bisection.

    Boxes are split widest first; a box dies once its sup bound falls to
    the best certified point value, and the surviving bounds squeeze the
    norm.  The countable zero set never traps the search because point
    evaluations keep raising the floor near the true peak.
    """
    tol = as_fraction(tol)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    if isinstance(obj, OscCombination):
        if obj.is_zero:
            return Enclosure(ZERO, ZERO)
        spans = _combination_boxes(obj)
    else:
        spans = [(obj.lo, obj.hi)]

    def box_bound(lo: Fraction, hi: Fraction) -> Fraction:
        return abs(obj.primitive_at(Enclosure(lo, hi), precision)).hi

    def point_floor(x: Fraction) -> Fraction:
        return obj.primitive_at(x, precision + 32).mignitude()

    floor = ZERO
    heap: list[tuple[Fraction, Fraction, Fraction, Fraction]] = []
    for lo, hi in spans:
        floor = max(floor, point_floor((lo + hi) / 2))
        heapq.heappush(heap, (-(hi - lo), lo, hi, box_bound(lo, hi)))
    while heap:
        # floor may have risen past a stale box bound since its push
        ceiling = max(max(item[3] for item in heap), floor)
        if ceiling - floor <= tol:
            return Enclosure(floor, ceiling)
        _, lo, hi, bound = heapq.heappop(heap)
        if bound <= floor:
            continue
        mid = (lo + hi) / 2
        for a, b in ((lo, mid), (mid, hi)):
            floor = max(floor, point_floor((a + b) / 2))
            child = box_bound(a, b)
            if child > floor:
                heapq.heappush(heap, (-(b - a), a, b, child))
        if len(heap) > queue_limit:
            raise NonterminationBudget(
                f"{len(heap)} boxes alive at tolerance {tol}")
    # every box was dominated by a certified point value
    return Enclosure(floor, floor)


# ---------------------------------------------------------------------------
# Derivative slope bound for finite-difference checks
# ---------------------------------------------------------------------------


def slope_bound(o: Oscillator, x_lo: RationalLike, x_hi: RationalLike,
                precision: int = 48) -> Fraction:
    """Upper bound for |derivative'| on a span inside the support.

    On the unit chart the slope of the derivative branch is
    8 sin - (2 pi / t^2) cos - (pi^2 / t^4) sin, dominated by
    8 + 2 pi/t^2 + pi^2/t^4 with t the chart distance to the nearer
    endpoint.  Undoing the chart divides by the host length twice: once
    for the derivative's own scaling and once for the slope.
    """
    a, b = as_fraction(x_lo), as_fraction(x_hi)
    if not o.lo < a < b < o.hi:
        raise UnboundedSpan(f"span [{a}, {b}] must sit strictly inside the support")
    t_lo, t_hi = (a - o.lo) / o.length, (b - o.lo) / o.length
    pi_hi = pi_const(precision).hi
    bound = ZERO
    if t_lo < HALF:  # left-branch part, worst at the low end
        t = t_lo
        bound = 8 + 2 * pi_hi / t ** 2 + pi_hi ** 2 / t ** 4
    if t_hi > HALF:
        t = 1 - t_hi
        bound = max(bound, 8 + 2 * pi_hi / t ** 2 + pi_hi ** 2 / t ** 4)
    return bound / o.length ** 2
