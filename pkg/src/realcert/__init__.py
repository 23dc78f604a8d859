"""realcert: exact-arithmetic pathological functions with certificates.

The library builds classical "bad" integrable functions -- fat Cantor
towers carrying unbounded step series, monotone functions with a jump at
every rational, and gauge-integrable oscillators that are not Lebesgue
integrable -- and certifies their finitely checkable properties with
exact rational enclosures and explicit witnesses.
"""

from __future__ import annotations

from .cantor import (
    CantorApprox,
    CantorSpec,
    ComponentWitness,
    NotFoundAtDepth,
    TowerApprox,
    TowerSpec,
    cantor_approx,
    component_at_generation,
    component_in,
    find_component,
    tower_generation,
)
from .certificates import (
    CERTIFIED,
    COMPUTED,
    INCONCLUSIVE,
    Certificate,
    InconclusiveAtBudget,
    canonical_dumps,
    jsonable,
)
from .enclosure import (
    DivisorContainsZero,
    Enclosure,
    NegativeSqrtDomain,
    cos_enc,
    cos_pi,
    enc_arith,
    enc_transcendental,
    exp_enc,
    pi_const,
    sin_enc,
    sin_pi,
    sqrt_enc,
)
from .intervalset import IntervalSet
from .jumps import (
    ExpPoly,
    JumpPolynomial,
    JumpSeries,
    ShiftCombination,
    SqrtShift,
    densify,
    enum_index,
    enum_rational,
    eval_jump_series,
    expand_generator_polynomial,
    jump_contribution_table,
    jump_enclosure,
    jump_search,
    one_sided_limits,
    sqrt_prime_basis,
    staircase_polynomial,
    variation_bounds,
)
from .oscillator import (
    Extremum,
    OscCombination,
    Oscillator,
    alexiewicz_norm,
    hake_csv,
    hake_table,
    kurzweil_integral,
    nonlebesgue_witness,
    osc_eval,
    restriction_witness,
    slope_bound,
)
from .rational import as_fraction, format_fraction
from .stepseries import (
    MonomialCombination,
    PowerAlongSubsequence,
    StepFunction,
    StepSeries,
    basis_inequality_check,
    comeager_perturbation,
    disjoint_power_family,
    distinct_products_check,
    dominance_index,
    eval_series,
    l1_norm,
    unbounded_witness,
)

__version__ = "0.1.0"

__all__ = [
    "CERTIFIED",
    "COMPUTED",
    "CantorApprox",
    "CantorSpec",
    "Certificate",
    "ComponentWitness",
    "DivisorContainsZero",
    "Enclosure",
    "ExpPoly",
    "Extremum",
    "INCONCLUSIVE",
    "InconclusiveAtBudget",
    "IntervalSet",
    "JumpPolynomial",
    "JumpSeries",
    "MonomialCombination",
    "NegativeSqrtDomain",
    "NotFoundAtDepth",
    "OscCombination",
    "Oscillator",
    "PowerAlongSubsequence",
    "ShiftCombination",
    "SqrtShift",
    "StepFunction",
    "StepSeries",
    "TowerApprox",
    "TowerSpec",
    "__version__",
    "alexiewicz_norm",
    "as_fraction",
    "basis_inequality_check",
    "canonical_dumps",
    "cantor_approx",
    "comeager_perturbation",
    "component_at_generation",
    "component_in",
    "cos_enc",
    "cos_pi",
    "densify",
    "disjoint_power_family",
    "distinct_products_check",
    "dominance_index",
    "enc_arith",
    "enc_transcendental",
    "enum_index",
    "enum_rational",
    "eval_jump_series",
    "eval_series",
    "exp_enc",
    "expand_generator_polynomial",
    "find_component",
    "format_fraction",
    "hake_csv",
    "hake_table",
    "jsonable",
    "jump_contribution_table",
    "jump_enclosure",
    "jump_search",
    "kurzweil_integral",
    "l1_norm",
    "nonlebesgue_witness",
    "one_sided_limits",
    "osc_eval",
    "pi_const",
    "restriction_witness",
    "sin_enc",
    "sin_pi",
    "slope_bound",
    "sqrt_enc",
    "sqrt_prime_basis",
    "staircase_polynomial",
    "tower_generation",
    "unbounded_witness",
    "variation_bounds",
]
