"""Fat Cantor sets of prescribed measure and their recursive towers.

A single fat Cantor set removes, at level n, a centered open hole of
length 2R*4^(-n) from each kept interval, where R is the total mass to be
removed from the span.  All level geometry has closed forms, so kept
measures, hole positions, and point walks are exact rational computations
that never require materializing the 2^d kept intervals.

Towers stack generations: generation 1 is a fat Cantor set on [0, 1], and
generation j+1 fills every hole of every generation-j component with a
scaled copy whose mass fraction rho_{j+1} keeps the generation's total
mass at mu_{j+1} exactly in the limit.  Since a generation at depth d has
(2^d - 1)^(j-1) components, measures are certified by aggregation over
hole levels instead of enumeration; components materialize lazily.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterator

from .enclosure import Enclosure
from .intervalset import IntervalSet
from .rational import ONE, ZERO, RationalLike, as_fraction, format_fraction, pow2

__all__ = [
    "CantorApprox",
    "CantorSpec",
    "ComponentWitness",
    "DepthTooSmall",
    "InfeasibleMass",
    "NotFoundAtDepth",
    "PointWalk",
    "TowerApprox",
    "TowerSpec",
    "cantor_approx",
    "component_at_generation",
    "component_in",
    "find_component",
    "tower_generation",
]


class InfeasibleMass(ValueError):
    """Requested mass does not fit the span (or a hole's residual)."""


class DepthTooSmall(ValueError):
    pass


@dataclass(frozen=True)
class CantorSpec:
    """Span [a, b] and the mass the limiting set should keep."""

    a: Fraction
    b: Fraction
    mass: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", as_fraction(self.a))
        object.__setattr__(self, "b", as_fraction(self.b))
        object.__setattr__(self, "mass", as_fraction(self.mass))
        if self.b <= self.a:
            raise InfeasibleMass(f"empty span [{self.a}, {self.b}]")
        if not (0 < self.mass < self.b - self.a):
            raise InfeasibleMass(
                f"mass {self.mass} not strictly between 0 and span length {self.b - self.a}"
            )

    @property
    def length(self) -> Fraction:
        return self.b - self.a

    @property
    def removed(self) -> Fraction:
        return self.length - self.mass

    def hole_len(self, n: int) -> Fraction:
        """Length of each level-n hole, 2R*4^(-n)."""
        return 2 * self.removed * pow2(-2 * n)

    def kept_len(self, n: int) -> Fraction:
        """Length of each level-n kept interval (2^n of them)."""
        if n == 0:
            return self.length
        return pow2(-n) * self.length - self.removed * (pow2(-n) - pow2(-2 * n))

    def kept_measure(self, depth: int) -> Fraction:
        """Exact measure of the depth-d approximation: mass + R*2^(-d)."""
        return self.mass + self.removed * pow2(-depth)

    def as_json(self) -> dict:
        return {
            "span": [format_fraction(self.a), format_fraction(self.b)],
            "mass": format_fraction(self.mass),
        }


@dataclass(frozen=True)
class PointWalk:
    """Outcome of walking a point down one component's levels.

    kind: "kept"  -- still inside a kept interval when the level budget ran out
          "hole"  -- strictly inside the open hole (lo, hi) at the given level
          "edge"  -- exactly on a kept/hole endpoint (a measure-zero point)
          "outside" -- beyond the span
    """

    kind: str
    level: int
    lo: Fraction
    hi: Fraction


@dataclass(frozen=True)
class CantorApprox:
    """Depth-d stage of a fat Cantor construction."""

    spec: CantorSpec
    depth: int

    def __post_init__(self):
        if self.depth < 0:
            raise DepthTooSmall(f"depth {self.depth} < 0")

    @property
    def span(self) -> tuple[Fraction, Fraction]:
        return (self.spec.a, self.spec.b)

    @property
    def measure(self) -> Fraction:
        return self.spec.kept_measure(self.depth)

    @property
    def measure_enclosure(self) -> Enclosure:
        """Brackets the limiting set's measure: [mass, depth-d measure]."""
        return Enclosure(self.spec.mass, self.measure)

    def _lefts(self, level: int) -> list[Fraction]:
        """Left endpoints of the kept intervals at a level, in position order."""
        pts = [self.spec.a]
        for n in range(1, level + 1):
            step = self.spec.kept_len(n) + self.spec.hole_len(n)
            pts = [p for q in pts for p in (q, q + step)]
        return pts

    @cached_property
    def kept(self) -> IntervalSet:
        length = self.spec.kept_len(self.depth)
        return IntervalSet._from_sorted([(p, p + length) for p in self._lefts(self.depth)])

    def holes_at(self, n: int) -> IntervalSet:
        if not 1 <= n <= self.depth:
            raise ValueError(f"level {n} outside 1..{self.depth}")
        off = self.spec.kept_len(n)
        h = self.spec.hole_len(n)
        return IntervalSet._from_sorted([(p + off, p + off + h) for p in self._lefts(n - 1)])

    @cached_property
    def holes(self) -> tuple[tuple[int, IntervalSet], ...]:
        return tuple((n, self.holes_at(n)) for n in range(1, self.depth + 1))

    def walk_point(self, x: RationalLike, max_level: int | None = None) -> PointWalk:
        x = as_fraction(x)
        a, b = self.spec.a, self.spec.b
        if x < a or x > b:
            return PointWalk("outside", 0, a, b)
        if x == a or x == b:
            return PointWalk("edge", 0, a, b)
        limit = self.depth if max_level is None else min(max_level, self.depth)
        p = a
        for n in range(1, limit + 1):
            g1 = p + self.spec.kept_len(n)
            g2 = g1 + self.spec.hole_len(n)
            if x == g1 or x == g2:
                return PointWalk("edge", n, g1, g2)
            if g1 < x < g2:
                return PointWalk("hole", n, g1, g2)
            if x > g2:
                p = g2
        return PointWalk("kept", limit, p, p + self.spec.kept_len(limit))

    def as_json(self) -> dict:
        out = self.spec.as_json()
        out["depth"] = self.depth
        out["measure_enclosure"] = self.measure_enclosure.as_json()
        return out


def cantor_approx(spec: CantorSpec, depth: int) -> CantorApprox:
    return CantorApprox(spec, depth)


# ---------------------------------------------------------------------------
# Towers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TowerSpec:
    """Generation masses on the unit span.

    preset "dyadic" takes mu_j = 2^(-j); "factorial" takes mu_j = 1/(2*j!)
    (total (e-1)/2, so every tilt theta > 1 still gives a finite weighted
    sum); "explicit" reads masses from the given tuple.
    """

    preset: str = "dyadic"
    masses: tuple[Fraction, ...] | None = None

    def __post_init__(self):
        if self.preset not in ("dyadic", "factorial", "explicit"):
            raise ValueError(f"unknown preset {self.preset!r}")
        if (self.preset == "explicit") != (self.masses is not None):
            raise ValueError("masses tuple is required exactly for the explicit preset")
        if self.masses is not None:
            object.__setattr__(self, "masses", tuple(as_fraction(m) for m in self.masses))

    def mass(self, j: int) -> Fraction:
        if j < 1:
            raise ValueError(f"generation {j} < 1")
        if self.preset == "dyadic":
            return pow2(-j)
        if self.preset == "factorial":
            return Fraction(1, 2 * math.factorial(j))
        if j > len(self.masses):
            raise InfeasibleMass(f"explicit masses exhausted at generation {j}")
        m = self.masses[j - 1]
        if m <= 0:
            raise InfeasibleMass(f"nonpositive mass {m} at generation {j}")
        return m

    def residual(self, j: int) -> Fraction:
        """S_j: span length still unassigned before generation j (S_1 = 1)."""
        s = ONE
        for i in range(1, j):
            s -= self.mass(i)
        return s

    def rho(self, j: int) -> Fraction:
        """Mass fraction each generation-j component keeps of its span."""
        r = self.mass(j) / self.residual(j)
        if not 0 < r < 1:
            raise InfeasibleMass(f"generation {j} needs fraction {r} of its holes")
        return r

    def as_json(self) -> dict:
        if self.preset == "explicit":
            return {"masses": [format_fraction(m) for m in self.masses]}
        return {"preset": self.preset}

    @classmethod
    def from_json(cls, data: dict) -> "TowerSpec":
        if "masses" in data:
            return cls("explicit", tuple(as_fraction(m) for m in data["masses"]))
        return cls(data.get("preset", "dyadic"))


def _fill(spec: TowerSpec, generation: int, lo: Fraction, hi: Fraction, depth: int) -> CantorApprox:
    """The generation-j component spanning a hole [lo, hi]."""
    return CantorApprox(CantorSpec(lo, hi, spec.rho(generation) * (hi - lo)), depth)


@dataclass(frozen=True)
class TowerApprox:
    """One generation of a tower at a fixed component depth.

    components materializes the full inventory and is only usable when
    component_count is small; everything else (measure enclosure, search,
    point walks) works at any depth.
    """

    spec: TowerSpec
    generation: int
    depth: int
    measure_enclosure: Enclosure

    @property
    def component_count(self) -> int:
        return (2**self.depth - 1) ** (self.generation - 1)

    def iter_components(self) -> Iterator[CantorApprox]:
        """Generation-j components in position order (left to right)."""

        def expand(comp: CantorApprox, g: int) -> Iterator[CantorApprox]:
            if g == self.generation:
                yield comp
                return
            holes = sorted(
                (lo, hi) for _, hs in comp.holes for lo, hi in hs
            )
            for lo, hi in holes:
                yield from expand(_fill(self.spec, g + 1, lo, hi, self.depth), g + 1)

        root = CantorApprox(CantorSpec(ZERO, ONE, self.spec.mass(1)), self.depth)
        yield from expand(root, 1)

    @cached_property
    def components(self) -> tuple[CantorApprox, ...]:
        return tuple(self.iter_components())

    def component_in(self, lo: RationalLike, hi: RationalLike):
        return component_in(self, lo, hi)

    def as_json(self) -> dict:
        return {
            "tower": self.spec.as_json(),
            "generation": self.generation,
            "depth": self.depth,
            "component_count": self.component_count,
            "measure_enclosure": self.measure_enclosure.as_json(),
        }


def tower_generation(spec: TowerSpec, j: int, d: int) -> TowerApprox:
    """Generation j at component depth d, with a certified measure enclosure.

    The enclosure contains mu_j and has width at most S_j * 2^(-d): the
    upper end charges every component's depth-d surplus, the lower end
    truncates hole levels at d plus ceil(log2(j-1)) padding bits per
    nesting stage so that the truncation loss stays below mu_j * 2^(-d).
    """
    if j < 1:
        raise ValueError(f"generation {j} < 1")
    if d < 1:
        raise DepthTooSmall(f"depth {d} < 1")
    for i in range(1, j + 1):
        spec.rho(i)  # InfeasibleMass surfaces here
    mu = spec.mass(j)
    upper = mu + (spec.residual(j) - mu) * pow2(-d)
    if j == 1:
        lower = mu
    else:
        pad = (j - 2).bit_length()
        lower = mu * (1 - pow2(-(d + pad))) ** (j - 1)
    return TowerApprox(spec, j, d, Enclosure(lower, upper))


# ---------------------------------------------------------------------------
# Component search
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NotFoundAtDepth:
    """Inconclusive search verdict (never a refutation)."""

    generation_budget: int
    depth_budget: int
    reason: str

    def as_json(self) -> dict:
        return {
            "verdict": "not-found-at-depth",
            "generation_budget": self.generation_budget,
            "depth_budget": self.depth_budget,
            "reason": self.reason,
        }


@dataclass(frozen=True)
class ComponentWitness:
    generation: int
    component: CantorApprox

    def as_json(self) -> dict:
        return {"generation": self.generation, "component": self.component.as_json()}


def find_component(
    spec: TowerSpec,
    lo: RationalLike,
    hi: RationalLike,
    *,
    max_generation: int,
    depth: int,
) -> ComponentWitness | NotFoundAtDepth:
    """First component (on a deterministic drill path) whose span lies in [lo, hi].

    The drill keeps a target subinterval T of [lo, hi] inside the current
    component and walks kept intervals toward T's midpoint.  A hole inside
    T yields the next generation's component there (success, since holes
    host components by construction).  A hole covering T forces descent
    into its filling component; a hole straddling T's edge shrinks T to
    the larger remaining piece, at least halving it, so the depth budget
    bounds the whole search.
    """
    j1, j2 = as_fraction(lo), as_fraction(hi)
    if not (0 <= j1 < j2 <= 1):
        raise ValueError(f"target [{j1}, {j2}] is not a nondegenerate subinterval of [0, 1]")
    if max_generation < 1 or depth < 1:
        raise DepthTooSmall("need at least generation 1 and depth 1")
    if j1 <= 0 and j2 >= 1:
        return ComponentWitness(1, CantorApprox(CantorSpec(ZERO, ONE, spec.mass(1)), depth))

    gen = 1
    comp = CantorSpec(ZERO, ONE, spec.mass(1))
    t1, t2 = j1, j2
    for _ in range(4 * depth + 4 * max_generation):
        # walk comp's kept intervals toward the midpoint of T = [t1, t2]
        p = comp.a
        n = 0
        m = (t1 + t2) / 2
        descended = False
        while n < depth:
            g1 = p + comp.kept_len(n + 1)
            g2 = g1 + comp.hole_len(n + 1)
            if t1 <= g1 and g2 <= t2:
                # hole inside the target: its filling component is the witness
                if gen + 1 > max_generation:
                    return NotFoundAtDepth(max_generation, depth, "generation budget exhausted")
                return ComponentWitness(gen + 1, _fill(spec, gen + 1, g1, g2, depth))
            if g1 < m < g2:
                if g1 <= t1 and t2 <= g2:
                    # hole covers the whole target: descend into its filler
                    if gen + 1 > max_generation:
                        return NotFoundAtDepth(max_generation, depth, "generation budget exhausted")
                    gen += 1
                    comp = CantorSpec(g1, g2, spec.rho(gen) * (g2 - g1))
                else:
                    # straddles an edge of T: keep the larger piece clear of it
                    left = (t1, min(t2, g1))
                    right = (max(t1, g2), t2)
                    pick = left if left[1] - left[0] >= right[1] - right[0] else right
                    if pick[1] <= pick[0]:
                        return NotFoundAtDepth(max_generation, depth, "target shrank to a point")
                    t1, t2 = pick
                descended = True
                break
            if m >= g2:
                p = g2
            n += 1
        if not descended:
            return NotFoundAtDepth(max_generation, depth, "depth budget exhausted")
    return NotFoundAtDepth(max_generation, depth, "search budget exhausted")


def component_in(tower: TowerApprox, lo: RationalLike, hi: RationalLike) -> ComponentWitness | NotFoundAtDepth:
    """Some component of generation <= tower.generation with span inside [lo, hi]."""
    return find_component(
        tower.spec, lo, hi, max_generation=tower.generation, depth=tower.depth
    )


def component_at_generation(
    spec: TowerSpec,
    lo: RationalLike,
    hi: RationalLike,
    generation: int,
    depth: int,
) -> CantorApprox | NotFoundAtDepth:
    """A generation-g component inside [lo, hi], deepening through level-1 holes.

    After the drill finds its first contained component (generation g1),
    each level-1 hole descent raises the generation by one while staying
    inside the span, so any generation >= g1 is reachable.  Requests below
    g1 come back NotFoundAtDepth (inconclusive: a different path might
    contain one).
    """
    got = find_component(spec, lo, hi, max_generation=generation, depth=depth)
    if isinstance(got, NotFoundAtDepth):
        return got
    g, comp = got.generation, got.component
    if g > generation:
        return NotFoundAtDepth(generation, depth, f"first contained component has generation {g}")
    while g < generation:
        g1 = comp.spec.a + comp.spec.kept_len(1)
        g2 = g1 + comp.spec.hole_len(1)
        g += 1
        comp = _fill(spec, g, g1, g2, depth)
    return comp
