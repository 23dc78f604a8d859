"""Step-function series over Cantor towers.

A series assigns a constant value to each tower generation and sums the
indicator functions: the value on generation j is either a power theta^n_j
along a chosen subsequence, or a combination sum_i beta_i * T_i^j whose
bases T_i are distinct integer monomials in prime generators.  Because
generations are pairwise disjoint up to measure zero, L1 norms split into
per-generation mass sums with closed-form tails, and unboundedness is
witnessed by drilling a positive-measure component into any target
subinterval.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .cantor import (
    CantorApprox,
    CantorSpec,
    InfeasibleMass,
    NotFoundAtDepth,
    TowerSpec,
    find_component,
    tower_generation,
)
from .certificates import Certificate, CERTIFIED, InconclusiveAtBudget
from .enclosure import Enclosure
from .rational import HALF, ONE, ZERO, RationalLike, as_fraction, format_fraction

__all__ = [
    "BasisComparison",
    "DivergentTail",
    "DominanceIndex",
    "EvalVerdict",
    "IntervalTooShort",
    "MonomialCombination",
    "MonomialRow",
    "NonPrimeTheta",
    "NotDominant",
    "PowerAlongSubsequence",
    "ProductsCollision",
    "ProductsVerified",
    "StepFunction",
    "StepSeries",
    "UnboundedWitness",
    "basis_inequality_check",
    "comeager_perturbation",
    "disjoint_power_family",
    "distinct_products_check",
    "dominance_index",
    "eval_series",
    "l1_norm",
    "unbounded_witness",
]


class DivergentTail(ValueError):
    """Tail bound does not converge (tilt >= 2 on the dyadic tower)."""


class NotDominant(ValueError):
    """First base is not strictly largest."""


class NonPrimeTheta(ValueError):
    pass


class IntervalTooShort(ValueError):
    pass


# ---------------------------------------------------------------------------
# Series rules
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PowerAlongSubsequence:
    """Value theta^(n_j) on generation n_j, zero elsewhere.

    subseq names the exponent sequence: "all" (n_j = j), "even" (2j),
    "odd" (2j - 1), "arith:start:stride", or an explicit increasing tuple
    (a finite series).
    """

    theta: Fraction
    subseq: str | tuple[int, ...] = "all"

    def __post_init__(self):
        object.__setattr__(self, "theta", as_fraction(self.theta))
        if self.theta <= 1:
            raise ValueError(f"tilt {self.theta} must exceed 1")
        s = self.subseq
        if isinstance(s, str):
            if s not in ("all", "even", "odd") and not s.startswith("arith:"):
                raise ValueError(f"unknown subsequence rule {s!r}")
            if s.startswith("arith:"):
                start, stride = self._arith()
                if start < 1 or stride < 1:
                    raise ValueError(f"bad arithmetic rule {s!r}")
        else:
            t = tuple(int(n) for n in s)
            if not t or t[0] < 1 or any(y <= x for x, y in zip(t, t[1:])):
                raise ValueError("explicit subsequence must be strictly increasing, >= 1")
            object.__setattr__(self, "subseq", t)

    def _arith(self) -> tuple[int, int]:
        _, start, stride = self.subseq.split(":")
        return int(start), int(stride)

    @property
    def term_limit(self) -> int | None:
        """Number of terms for a finite (explicit) series, else None."""
        return len(self.subseq) if isinstance(self.subseq, tuple) else None

    def exponent(self, j: int) -> int:
        if j < 1:
            raise ValueError(f"term index {j} < 1")
        s = self.subseq
        if isinstance(s, tuple):
            if j > len(s):
                raise IndexError(f"finite subsequence has {len(s)} terms")
            return s[j - 1]
        if s == "all":
            return j
        if s == "even":
            return 2 * j
        if s == "odd":
            return 2 * j - 1
        start, stride = self._arith()
        return start + stride * (j - 1)

    def support_contains(self, g: int) -> bool:
        s = self.subseq
        if isinstance(s, tuple):
            return g in s
        if s == "all":
            return g >= 1
        if s == "even":
            return g >= 2 and g % 2 == 0
        if s == "odd":
            return g >= 1 and g % 2 == 1
        start, stride = self._arith()
        return g >= start and (g - start) % stride == 0

    def as_json(self) -> dict:
        s = self.subseq if isinstance(self.subseq, str) else list(self.subseq)
        return {"power": {"theta": format_fraction(self.theta), "subseq": s}}


@dataclass(frozen=True)
class MonomialRow:
    beta: Fraction
    exponents: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "beta", as_fraction(self.beta))
        object.__setattr__(self, "exponents", tuple(int(k) for k in self.exponents))
        if any(k < 0 for k in self.exponents):
            raise ValueError("negative exponent")
        if not any(self.exponents):
            raise ValueError("constant monomial (all exponents zero) is not allowed")


@dataclass(frozen=True)
class MonomialCombination:
    """Value sum_i beta_i * T_i^j on every generation j, T_i = prod theta^k."""

    thetas: tuple[int, ...]
    rows: tuple[MonomialRow, ...]

    def __post_init__(self):
        object.__setattr__(self, "thetas", tuple(int(t) for t in self.thetas))
        object.__setattr__(self, "rows", tuple(self.rows))
        if any(t <= 1 for t in self.thetas):
            raise ValueError("bases must exceed 1")
        for r in self.rows:
            if len(r.exponents) != len(self.thetas):
                raise ValueError("exponent row length does not match base count")

    @property
    def products(self) -> tuple[int, ...]:
        return tuple(math.prod(t**k for t, k in zip(self.thetas, r.exponents)) for r in self.rows)

    def value_at(self, j: int) -> Fraction:
        return sum((r.beta * p**j for r, p in zip(self.rows, self.products)), ZERO)

    def as_json(self) -> dict:
        return {
            "monomial": {
                "thetas": list(self.thetas),
                "rows": [
                    {"beta": format_fraction(r.beta), "k": list(r.exponents)} for r in self.rows
                ],
            }
        }


@dataclass(frozen=True)
class StepSeries:
    tower: TowerSpec
    rule: PowerAlongSubsequence | MonomialCombination

    def value_at_generation(self, g: int) -> Fraction:
        if isinstance(self.rule, MonomialCombination):
            return self.rule.value_at(g)
        if self.rule.support_contains(g):
            return self.rule.theta**g
        return ZERO

    def as_json(self) -> dict:
        return {"tower": self.tower.as_json(), "rule": self.rule.as_json()}

    @classmethod
    def from_json(cls, data: dict) -> "StepSeries":
        tower = TowerSpec.from_json(data["tower"])
        rule = data["rule"]
        if "power" in rule:
            sub = rule["power"]["subseq"]
            if isinstance(sub, list):
                sub = tuple(sub)
            return cls(tower, PowerAlongSubsequence(as_fraction(rule["power"]["theta"]), sub))
        m = rule["monomial"]
        rows = tuple(MonomialRow(as_fraction(r["beta"]), tuple(r["k"])) for r in m["rows"])
        return cls(tower, MonomialCombination(tuple(m["thetas"]), rows))


# ---------------------------------------------------------------------------
# Pointwise evaluation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EvalVerdict:
    """kind "zero" | "unknown" (and "value" for the degenerate exact cases).

    The three verdicts are consistent across budgets: a zero/value verdict
    at one budget is never contradicted at a deeper one, and unknown may
    only sharpen.
    """

    kind: str
    value: Fraction | None = None
    generation: int | None = None
    detail: str = ""

    def as_json(self) -> dict:
        out = {"verdict": self.kind, "detail": self.detail}
        if self.value is not None:
            out["value"] = format_fraction(self.value)
        if self.generation is not None:
            out["generation"] = self.generation
        return out


def eval_series(s: StepSeries, x: RationalLike, maxgen: int = 20, depth: int = 20) -> EvalVerdict:
    """A.e.-representative evaluation at a rational point.

    The representative is zero on the measure-zero skeleton of kept/hole
    endpoints, so landing exactly on a discovered endpoint certifies Zero.
    A point still inside a kept interval when the budget runs out stays
    Unknown: finite depth cannot exclude deeper holes around it.
    """
    x = as_fraction(x)
    if x < 0 or x > 1:
        raise ValueError(f"point {x} outside [0, 1]")
    comp = CantorSpec(ZERO, ONE, s.tower.mass(1))
    g = 1
    while True:
        w = CantorApprox(comp, depth).walk_point(x)
        if w.kind == "edge":
            return EvalVerdict(
                "zero", ZERO, g, f"on the endpoint skeleton at generation {g}, level {w.level}"
            )
        if w.kind == "kept":
            return EvalVerdict(
                "unknown", None, g, f"still in a kept interval of generation {g} at depth {depth}"
            )
        # inside an open hole: the next generation fills it
        if g + 1 > maxgen:
            return EvalVerdict(
                "unknown", None, g, f"inside a generation-{g} hole at the generation budget"
            )
        g += 1
        comp = CantorSpec(w.lo, w.hi, s.tower.rho(g) * (w.hi - w.lo))


# ---------------------------------------------------------------------------
# L1 norm
# ---------------------------------------------------------------------------


def _power_tail(tower: TowerSpec, theta: Fraction, last_exp: int) -> Fraction:
    """Upper bound for sum over m > last_exp of theta^m * mu_m (all m)."""
    if tower.preset == "dyadic":
        r = theta / 2
        if r >= 1:
            raise DivergentTail(f"tilt {theta} >= 2 diverges on the dyadic tower")
        return r ** (last_exp + 1) / (1 - r)
    if tower.preset == "factorial":
        m = last_exp + 1
        t = theta**m / (2 * math.factorial(m))
        tail = ZERO
        while theta / (m + 1) > HALF:
            tail += t
            m += 1
            t = t * theta / m
        return tail + 2 * t
    # explicit preset: finitely many generations, sum them exactly
    tail = ZERO
    m = last_exp + 1
    while True:
        try:
            tail += theta**m * tower.mass(m)
        except InfeasibleMass:
            return tail
        m += 1


def _term_depth(depth: int, j: int, coeff: Fraction) -> int:
    """Depth for term j, deep enough that coeff * surplus stays below 2^-depth-j.

    The depth-d surplus of a generation's measure enclosure is at most
    S_j * 2^-d <= 2^-d, so adding the coefficient's magnitude (and j) to
    the exponent keeps the weighted surpluses summable no matter how fast
    the coefficients grow.
    """
    mag = coeff.numerator.bit_length() - coeff.denominator.bit_length() + 1
    return depth + j + max(0, mag)


@lru_cache(maxsize=256)
def l1_norm(s: StepSeries, terms: int = 64, depth: int = 20) -> Enclosure:
    """Enclosure of the integral of |s| over [0, 1].

    Sums |value| times each generation's measure enclosure for the first
    `terms` support generations, then adds an analytic tail bound: a
    geometric sum for the dyadic tower (needs tilt < 2), a factorially
    dominated one for the factorial tower.  Everything involved is frozen,
    so results are cached; family checks reuse member norms across calls.
    """
    if terms < 1:
        raise ValueError("need at least one term")
    lo = hi = ZERO
    if isinstance(s.rule, PowerAlongSubsequence):
        limit = s.rule.term_limit
        n_terms = terms if limit is None else min(terms, limit)
        last = 0
        for j in range(1, n_terms + 1):
            n = s.rule.exponent(j)
            c = s.rule.theta**n
            try:
                e = tower_generation(s.tower, n, _term_depth(depth, j, c)).measure_enclosure
            except InfeasibleMass:
                break  # explicit tower exhausted before the subsequence
            lo += c * e.lo
            hi += c * e.hi
            last = n
        if limit is not None and n_terms == limit:
            tail = ZERO  # the series itself is finite
        else:
            tail = _power_tail(s.tower, s.rule.theta, last)
        return Enclosure(lo, hi + tail)
    # monomial combination: every generation contributes
    for j in range(1, terms + 1):
        v = abs(s.rule.value_at(j))
        try:
            e = tower_generation(s.tower, j, _term_depth(depth, j, v)).measure_enclosure
        except InfeasibleMass:
            return Enclosure(lo, hi)  # explicit tower exhausted: sum is exact
        lo += v * e.lo
        hi += v * e.hi
    tail = ZERO
    for r, p in zip(s.rule.rows, s.rule.products):
        if r.beta != 0:
            tail += abs(r.beta) * _power_tail(s.tower, Fraction(p), terms)
    return Enclosure(lo, hi + tail)


# ---------------------------------------------------------------------------
# Unboundedness witnesses
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class UnboundedWitness:
    """A positive-measure component where |series| constantly exceeds the bar."""

    generation: int
    value: Fraction
    component: CantorApprox

    def as_json(self) -> dict:
        return {
            "generation": self.generation,
            "value": format_fraction(self.value),
            "component": self.component.as_json(),
        }


def unbounded_witness(
    s: StepSeries,
    lo: RationalLike,
    hi: RationalLike,
    bar: RationalLike,
    maxgen: int = 40,
    depth: int = 24,
) -> UnboundedWitness | InconclusiveAtBudget:
    """Search [lo, hi] for a component on which |series| > bar.

    Drills for the first component contained in the target, then deepens
    one generation at a time (each level-1 hole hosts the next
    generation's component) until the exact constant value clears the bar.
    """
    bar = as_fraction(bar)
    budget = {"maxgen": maxgen, "depth": depth}
    got = find_component(s.tower, lo, hi, max_generation=maxgen, depth=depth)
    if isinstance(got, NotFoundAtDepth):
        return InconclusiveAtBudget(got.reason, budget)
    g, comp = got.generation, got.component
    while g <= maxgen:
        v = s.value_at_generation(g)
        if abs(v) > bar:
            return UnboundedWitness(g, v, comp)
        a = comp.spec.a + comp.spec.kept_len(1)
        b = a + comp.spec.hole_len(1)
        g += 1
        comp = CantorApprox(CantorSpec(a, b, s.tower.rho(g) * (b - a)), depth)
    return InconclusiveAtBudget(
        f"no generation <= {maxgen} on the drill path exceeds {bar}", budget
    )


# ---------------------------------------------------------------------------
# Dominance and distinct products
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DominanceIndex:
    """Minimal j0 with sum_{i>=2} |b_i| t_i^j < |b_1| t_1^j / 2 for all j >= j0.

    Minimality shows in fails_before (the exact failed comparison at
    j0 - 1, absent when j0 = 1); validity for every later j follows from
    each ratio t_i/t_1 being < 1, which makes the normalized tail sum
    strictly decreasing.
    """

    j0: int
    tail_at_j0: Fraction
    half_lead_at_j0: Fraction
    fails_before: tuple[Fraction, Fraction] | None

    def as_json(self) -> dict:
        out = {
            "j0": self.j0,
            "tail_at_j0": format_fraction(self.tail_at_j0),
            "half_lead_at_j0": format_fraction(self.half_lead_at_j0),
        }
        if self.fails_before is not None:
            out["fails_before"] = [format_fraction(v) for v in self.fails_before]
        return out


def dominance_index(
    betas: Sequence[RationalLike], thetas: Sequence[RationalLike]
) -> DominanceIndex:
    b = [as_fraction(x) for x in betas]
    t = [as_fraction(x) for x in thetas]
    if len(b) != len(t) or not b:
        raise ValueError("need matching nonempty coefficient and base sequences")
    if b[0] == 0:
        raise ValueError("leading coefficient must be nonzero")
    if any(x <= 0 for x in t):
        raise ValueError("bases must be positive")
    if any(x >= t[0] for x in t[1:]):
        raise NotDominant(f"leading base {t[0]} is not strictly largest")
    prev = None
    j = 1
    while True:
        tail = sum((abs(bi) * ti**j for bi, ti in zip(b[1:], t[1:])), ZERO)
        half = abs(b[0]) * t[0] ** j / 2
        if tail < half:
            return DominanceIndex(j, tail, half, prev)
        prev = (tail, half)
        j += 1


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    # deterministic Miller-Rabin for n < 3.3e24 with this base set
    if n >= 3317044064679887385961981:
        raise ValueError(f"{n} too large for the deterministic primality check")
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class ProductsVerified:
    products: tuple[int, ...]

    def as_json(self) -> dict:
        return {"verdict": "verified", "products": list(self.products)}


@dataclass(frozen=True)
class ProductsCollision:
    first: int
    second: int
    product: int

    def as_json(self) -> dict:
        return {
            "verdict": "collision",
            "rows": [self.first, self.second],
            "product": self.product,
        }


def distinct_products_check(
    thetas: Sequence[int], rows: Sequence[Sequence[int]]
) -> ProductsVerified | ProductsCollision:
    """Are the integer monomials prod theta^k pairwise distinct?

    With pairwise distinct prime bases this is exactly log-linear
    independence of the generators restricted to the given rows, and
    unique factorization makes the integer comparison decide it.
    """
    ts = [int(t) for t in thetas]
    if len(set(ts)) != len(ts):
        raise ValueError("bases must be pairwise distinct")
    for t in ts:
        if not _is_prime(t):
            raise NonPrimeTheta(f"base {t} is not prime")
    combo = MonomialCombination(
        tuple(ts), tuple(MonomialRow(ONE, tuple(r)) for r in rows)
    )
    seen: dict[int, int] = {}
    for i, p in enumerate(combo.products):
        if p in seen:
            return ProductsCollision(seen[p], i, p)
        seen[p] = i
    return ProductsVerified(combo.products)


# ---------------------------------------------------------------------------
# Basic-sequence inequality
# ---------------------------------------------------------------------------


def disjoint_power_family(
    theta: RationalLike, count: int, tower: TowerSpec | None = None
) -> tuple[StepSeries, ...]:
    """count series with pairwise disjoint arithmetic exponent sequences.

    Series k uses exponents k, k + count, k + 2*count, ...; residues mod
    count keep the supports disjoint.
    """
    tower = tower if tower is not None else TowerSpec("dyadic")
    return tuple(
        StepSeries(tower, PowerAlongSubsequence(as_fraction(theta), f"arith:{k}:{count}"))
        for k in range(1, count + 1)
    )


@dataclass(frozen=True)
class BasisComparison:
    """||sum_{k<=m1} a_k g_k||_1 <= ||sum_{k<=m2} a_k g_k||_1, certified.

    Disjoint supports give ||sum a_k g_k||_1 = sum |a_k| ||g_k||_1
    exactly, so the difference is bounded below by margin_lower =
    sum_{m1 < k <= m2} |a_k| * (exact lower bound of ||g_k||_1) >= 0.
    """

    holds: bool
    left: Enclosure
    right: Enclosure
    margin_lower: Fraction

    def as_json(self) -> dict:
        return {
            "verdict": "holds" if self.holds else "inconclusive",
            "left_norm": self.left.as_json(),
            "right_norm": self.right.as_json(),
            "margin_lower": format_fraction(self.margin_lower),
        }


def basis_inequality_check(
    coeffs: Sequence[RationalLike],
    m1: int,
    m2: int,
    family: Sequence[StepSeries],
    terms: int = 24,
    depth: int = 16,
) -> BasisComparison:
    if not 1 <= m1 <= m2 <= len(family):
        raise ValueError(f"need 1 <= m1 <= m2 <= {len(family)}")
    a = [as_fraction(c) for c in coeffs]
    if len(a) < m2:
        raise ValueError("fewer coefficients than m2")
    _check_disjoint_supports(family[:m2], terms)
    norms = [l1_norm(g, terms, depth) for g in family[:m2]]
    left = Enclosure(ZERO, ZERO)
    right = Enclosure(ZERO, ZERO)
    margin = ZERO
    for k in range(m2):
        scaled = Enclosure(abs(a[k]) * norms[k].lo, abs(a[k]) * norms[k].hi)
        right = right + scaled
        if k < m1:
            left = left + scaled
        else:
            margin += abs(a[k]) * norms[k].lo
    return BasisComparison(True, left, right, margin)


def _check_disjoint_supports(family: Sequence[StepSeries], terms: int) -> None:
    seen: dict[int, int] = {}
    for k, g in enumerate(family):
        if not isinstance(g.rule, PowerAlongSubsequence):
            raise ValueError("the family must consist of power-rule series")
        limit = g.rule.term_limit
        for j in range(1, (terms if limit is None else min(terms, limit)) + 1):
            n = g.rule.exponent(j)
            if n in seen and seen[n] != k:
                raise ValueError(f"supports overlap at exponent {n}")
            seen[n] = k


# ---------------------------------------------------------------------------
# Step functions and the co-meager perturbation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StepFunction:
    """Finitely many constant pieces (lo, hi, value); zero elsewhere."""

    pieces: tuple[tuple[Fraction, Fraction, Fraction], ...] = ()

    def __post_init__(self):
        ps = sorted(
            (as_fraction(a), as_fraction(b), as_fraction(v)) for a, b, v in self.pieces
        )
        for (a, b, _) in ps:
            if b <= a:
                raise ValueError(f"empty piece [{a}, {b}]")
        for (_, b1, _), (a2, _, _) in zip(ps, ps[1:]):
            if a2 < b1:
                raise ValueError("pieces overlap")
        object.__setattr__(self, "pieces", tuple(ps))

    def value_at(self, x: RationalLike) -> Fraction:
        x = as_fraction(x)
        for a, b, v in self.pieces:
            if a <= x <= b:
                return v
        return ZERO

    def sup_abs(self) -> Fraction:
        return max((abs(v) for _, _, v in self.pieces), default=ZERO)

    def integral_abs(self) -> Fraction:
        return sum((abs(v) * (b - a) for a, b, v in self.pieces), ZERO)

    def overridden(self, lo: Fraction, hi: Fraction, value: Fraction) -> "StepFunction":
        """Replace the values on [lo, hi] with a constant."""
        out: list[tuple[Fraction, Fraction, Fraction]] = [(lo, hi, value)]
        for a, b, v in self.pieces:
            if b <= lo or a >= hi:
                out.append((a, b, v))
                continue
            if a < lo:
                out.append((a, lo, v))
            if b > hi:
                out.append((hi, b, v))
        return StepFunction(tuple(out))

    def as_json(self) -> list:
        return [
            [format_fraction(a), format_fraction(b), format_fraction(v)]
            for a, b, v in self.pieces
        ]


@dataclass(frozen=True)
class PerturbationResult:
    g: StepFunction
    window: tuple[Fraction, Fraction]
    certificate: Certificate


def comeager_perturbation(
    f: StepFunction,
    bound: RationalLike,
    interval: tuple[RationalLike, RationalLike],
    radius: RationalLike,
) -> PerturbationResult:
    """Push f above an essential bound on a short window, certified exactly.

    Inside the leftmost window J of |I| = radius/(6*bound), the perturbed
    g is constantly 2*bound, so ||g - f||_1 <= m(J)*3*bound = radius/2,
    while any h within radius/7 of g must exceed the bound on a positive
    measure subset of J: otherwise |h - g| >= bound on J would force
    ||h - g||_1 >= m(J)*bound = radius/6 > radius/7.
    """
    n = as_fraction(bound)
    r = as_fraction(radius)
    a, b = as_fraction(interval[0]), as_fraction(interval[1])
    if n <= 0 or r <= 0:
        raise ValueError("bound and radius must be positive")
    if b <= a:
        raise ValueError(f"empty interval [{a}, {b}]")
    if f.sup_abs() > n:
        raise ValueError(f"precondition fails: sup|f| = {f.sup_abs()} exceeds {n}")
    window = r / (6 * n)
    if b - a < window:
        raise IntervalTooShort(f"interval length {b - a} < required window {window}")
    j_lo, j_hi = a, a + window
    g = f.overridden(j_lo, j_hi, 2 * n)
    # exact L1 distance: on J the change is |2N - f|, elsewhere zero
    dist = ZERO
    covered = ZERO
    for pa, pb, pv in f.pieces:
        lo2, hi2 = max(pa, j_lo), min(pb, j_hi)
        if lo2 < hi2:
            dist += abs(2 * n - pv) * (hi2 - lo2)
            covered += hi2 - lo2
    dist += 2 * n * (window - covered)
    assert dist <= window * 3 * n == r / 2
    cert = Certificate(
        claim="every-ball-meets-the-unbounded-set",
        verdict=CERTIFIED,
        payload={
            "window": [j_lo, j_hi],
            "window_measure": window,
            "perturbation_l1_distance": dist,
            "half_radius": r / 2,
            "violation_threshold": window * n,
            "radius_seventh": r / 7,
            "strict_gap_holds": window * n > r / 7,
        },
        budget={},
    )
    return PerturbationResult(g, (j_lo, j_hi), cert)
