"""Self-validating result records.

A certificate bundles the claim being checked, a verdict, and the exact
rationals / enclosures that let a reader re-check the claim without
trusting this code.  Serialization is canonical (sorted keys, no float
round-trips) so identical runs produce byte-identical output.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .enclosure import Enclosure
from .rational import format_fraction

__all__ = [
    "CERTIFIED",
    "COMPUTED",
    "INCONCLUSIVE",
    "Certificate",
    "InconclusiveAtBudget",
    "jsonable",
    "canonical_dumps",
]

CERTIFIED = "certified"
COMPUTED = "computed"
INCONCLUSIVE = "inconclusive-at-budget"


@dataclass(frozen=True)
class InconclusiveAtBudget:
    """The finite search did not settle the claim; never a refutation."""

    reason: str
    budget: dict = field(default_factory=dict)

    def as_json(self) -> dict:
        return {"verdict": INCONCLUSIVE, "reason": self.reason, "budget": jsonable(self.budget)}


def jsonable(x: Any) -> Any:
    """Exact JSON form: Fractions as "p/q", enclosures as {"lo","hi"}."""
    if isinstance(x, Fraction):
        return format_fraction(x)
    if isinstance(x, bool) or isinstance(x, int) or isinstance(x, str) or x is None:
        return x
    if isinstance(x, Enclosure):
        return x.as_json()
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    as_json = getattr(x, "as_json", None)
    if as_json is not None:
        return as_json()
    if isinstance(x, float):
        raise TypeError(f"refusing to serialize float {x!r}; use Fraction")
    raise TypeError(f"not serializable: {type(x).__name__}")


def canonical_dumps(data: Any, indent: int | None = None) -> str:
    if indent is None:
        return json.dumps(jsonable(data), sort_keys=True, separators=(",", ":"))
    return json.dumps(jsonable(data), sort_keys=True, indent=indent)


@dataclass(frozen=True)
class Certificate:
    claim: str
    verdict: str
    payload: dict
    budget: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.verdict in (CERTIFIED, COMPUTED)

    def as_json(self) -> dict:
        return {
            "claim": self.claim,
            "verdict": self.verdict,
            "payload": jsonable(self.payload),
            "budget": jsonable(self.budget),
        }

    def dumps(self, indent: int | None = None) -> str:
        return canonical_dumps(self.as_json(), indent)

    @property
    def digest(self) -> str:
        return hashlib.sha256(self.dumps().encode()).hexdigest()
