"""Finite unions of closed rational intervals with exact measure.

The sets built here are the carrier for every Cantor-type construction in
the package: kept intervals, hole inventories, and the supports of step
functions.  All endpoints are Fractions and every operation is exact.

Intervals are closed.  Touching endpoints are treated as measure zero, so
``intersect`` of two sets that merely share an endpoint is empty.
"""

from __future__ import annotations

from bisect import bisect_right
from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple

from .rational import RationalLike, as_fraction, format_fraction

__all__ = [
    "DegenerateTarget",
    "IntervalSet",
    "Locate",
]


class DegenerateTarget(ValueError):
    """Affine target [a, b] with b <= a."""


class Locate(NamedTuple):
    """Where a point sits relative to an IntervalSet.

    kind is "inside" (in the closed interval at position index), "gap"
    (strictly between two intervals), or "outside" (before the first or
    after the last).  on_edge marks exact equality with an endpoint; a
    gap/outside verdict always has on_edge False.
    """

    kind: str
    index: int | None = None
    on_edge: bool = False


def _norm(pairs: Iterable[tuple[Fraction, Fraction]], merge: bool) -> tuple[tuple[Fraction, Fraction], ...]:
    items = sorted((a, b) for a, b in pairs if a < b)
    out: list[tuple[Fraction, Fraction]] = []
    for a, b in items:
        if out:
            pa, pb = out[-1]
            if a < pb or (merge and a == pb):
                if b > pb:
                    out[-1] = (pa, b)
                continue
        out.append((a, b))
    return tuple(out)


class IntervalSet:
    """Sorted, interior-disjoint closed intervals; degenerate points dropped."""

    __slots__ = ("_iv", "_lefts")

    def __init__(self, intervals: Iterable[tuple[RationalLike, RationalLike]] = (), *, merge_touching: bool = True):
        pairs = [(as_fraction(a), as_fraction(b)) for a, b in intervals]
        self._iv = _norm(pairs, merge_touching)
        self._lefts = [a for a, _ in self._iv]

    @classmethod
    def _from_sorted(cls, pairs: list[tuple[Fraction, Fraction]]) -> "IntervalSet":
        # caller guarantees sorted, nondegenerate, non-overlapping
        s = cls.__new__(cls)
        s._iv = tuple(pairs)
        s._lefts = [a for a, _ in s._iv]
        return s

    @classmethod
    def interval(cls, a: RationalLike, b: RationalLike) -> "IntervalSet":
        return cls([(a, b)])

    # -- basic queries ------------------------------------------------------

    def __len__(self) -> int:
        return len(self._iv)

    def __iter__(self) -> Iterator[tuple[Fraction, Fraction]]:
        return iter(self._iv)

    def __bool__(self) -> bool:
        return bool(self._iv)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntervalSet) and self._iv == other._iv

    def __hash__(self) -> int:
        return hash(self._iv)

    def __repr__(self) -> str:
        parts = ", ".join(f"[{format_fraction(a)}, {format_fraction(b)}]" for a, b in self._iv)
        return f"IntervalSet({{{parts}}})"

    @property
    def intervals(self) -> tuple[tuple[Fraction, Fraction], ...]:
        return self._iv

    @property
    def measure(self) -> Fraction:
        return sum((b - a for a, b in self._iv), Fraction(0))

    @property
    def span(self) -> tuple[Fraction, Fraction] | None:
        """Smallest enclosing interval, or None when empty."""
        if not self._iv:
            return None
        return (self._iv[0][0], self._iv[-1][1])

    def locate(self, x: RationalLike) -> Locate:
        x = as_fraction(x)
        if not self._iv:
            return Locate("outside")
        i = bisect_right(self._lefts, x) - 1
        if i >= 0:
            a, b = self._iv[i]
            if x <= b:
                return Locate("inside", i, on_edge=(x == a or x == b))
            if i + 1 < len(self._iv):
                return Locate("gap", i)
        else:
            return Locate("outside")
        return Locate("outside")

    def contains_point(self, x: RationalLike) -> bool:
        return self.locate(x).kind == "inside"

    def contains_interval(self, a: RationalLike, b: RationalLike) -> bool:
        """True iff the closed interval [a, b] is covered by one member."""
        a, b = as_fraction(a), as_fraction(b)
        if b < a:
            return False
        loc = self.locate(a)
        if loc.kind != "inside":
            return False
        return b <= self._iv[loc.index][1]

    # -- set algebra --------------------------------------------------------

    def union(self, other: "IntervalSet") -> "IntervalSet":
        return IntervalSet(list(self._iv) + list(other._iv))

    def intersect(self, other: "IntervalSet") -> "IntervalSet":
        out: list[tuple[Fraction, Fraction]] = []
        i = j = 0
        a, b = self._iv, other._iv
        while i < len(a) and j < len(b):
            lo = max(a[i][0], b[j][0])
            hi = min(a[i][1], b[j][1])
            if lo < hi:
                out.append((lo, hi))
            if a[i][1] <= b[j][1]:
                i += 1
            else:
                j += 1
        return IntervalSet._from_sorted(out)

    def subtract(self, other: "IntervalSet") -> "IntervalSet":
        """Closure of self minus other (holes are opened inside members)."""
        out: list[tuple[Fraction, Fraction]] = []
        j = 0
        b = other._iv
        for lo, hi in self._iv:
            cur = lo
            while j < len(b) and b[j][1] <= cur:
                j += 1
            k = j
            while k < len(b) and b[k][0] < hi:
                if b[k][0] > cur:
                    out.append((cur, b[k][0]))
                cur = max(cur, b[k][1])
                if cur >= hi:
                    break
                k += 1
            if cur < hi:
                out.append((cur, hi))
        return IntervalSet(out)

    def affine_map(self, a: RationalLike, b: RationalLike) -> "IntervalSet":
        """Send [0,1]-relative content into the target [a, b] via x -> (b-a)x + a."""
        a, b = as_fraction(a), as_fraction(b)
        if b <= a:
            raise DegenerateTarget(f"target [{a}, {b}] has nonpositive length")
        s = b - a
        return IntervalSet._from_sorted([(s * lo + a, s * hi + a) for lo, hi in self._iv])

    def complement_within(self, a: RationalLike, b: RationalLike) -> "IntervalSet":
        """Gaps of self inside [a, b]."""
        return IntervalSet.interval(a, b).subtract(self)

    def as_json(self) -> list[list[str]]:
        return [[format_fraction(a), format_fraction(b)] for a, b in self._iv]
