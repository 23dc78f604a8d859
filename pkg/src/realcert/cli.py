"""Command line front end.

Reads function-spec JSON, dispatches to the construction modules, and
prints canonical JSON so identical runs are byte-identical.  Exit codes
are part of the contract: 0 means certified or computed, 2 means the
finite budget was exhausted without settling the claim, 1 means the
request itself was bad.  Inconclusive is deliberately not an error; no
finite search can refute a density or unboundedness statement.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from . import __version__
from .cantor import TowerSpec, tower_generation
from .certificates import (CERTIFIED, COMPUTED, INCONCLUSIVE, Certificate,
                           InconclusiveAtBudget, canonical_dumps, jsonable)
from .enclosure import Enclosure
from .jumps import (JumpPolynomial, JumpSeries, ShiftCombination,
                    jump_enclosure, jump_search, staircase_polynomial,
                    variation_bounds)
from .oscillator import (NonterminationBudget, OscCombination, Oscillator,
                         alexiewicz_norm, kurzweil_integral,
                         nonlebesgue_witness, restriction_witness)
from .rational import dyadic_floor, format_fraction
from .stepseries import (StepFunction, StepSeries, basis_inequality_check,
                         comeager_perturbation, disjoint_power_family,
                         eval_series, l1_norm, unbounded_witness)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INCONCLUSIVE = 2

KINDS = ("tower-series", "jump-polynomial", "oscillator-combination")

DEFAULT_BUDGET: dict[str, object] = {
    "maxgen": 20,
    "depth": 20,
    "terms": 64,
    "precision": 128,
    "tolerance": Fraction(1, 10**6),
}


class SpecError(ValueError):
    """Malformed spec file, bad flag value, or unsupported dispatch."""


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; 2 is reserved for inconclusive
    def error(self, message: str):
        raise SpecError(message)


def _fraction_flag(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as err:
        raise SpecError(f"not a rational: {text!r}") from err


@dataclass(frozen=True)
class FunctionSpec:
    kind: str
    body: dict
    budget: dict

    @property
    def sha256(self) -> str:
        return hashlib.sha256(canonical_dumps(self.body).encode()).hexdigest()

    def provenance(self) -> dict:
        return {
            "library": f"realcert {__version__}",
            "spec_sha256": self.sha256,
            "budget": dict(self.budget),
        }


def _validate_budget_items(raw: dict, where: str) -> dict:
    """Type-check the keys actually present, without filling defaults."""
    out: dict[str, object] = {}
    for key, value in raw.items():
        if key not in DEFAULT_BUDGET:
            raise SpecError(f"{where}: unknown budget key {key!r}")
        if key == "tolerance":
            try:
                value = Fraction(value) if not isinstance(value, Fraction) else value
            except (ValueError, ZeroDivisionError) as err:
                raise SpecError(f"{where}: bad tolerance {value!r}") from err
            if value <= 0:
                raise SpecError(f"{where}: tolerance must be positive")
        else:
            try:
                value = int(value) if isinstance(value, str) else value
            except ValueError as err:
                raise SpecError(f"{where}: budget {key} must be an integer") from err
            if not isinstance(value, int) or value < 1:
                raise SpecError(f"{where}: budget {key} must be a positive integer")
        out[key] = value
    return out


def _parse_budget(raw: dict, where: str) -> dict:
    out = dict(DEFAULT_BUDGET)
    out.update(_validate_budget_items(raw, where))
    return out


def load_spec(path: str, overrides: dict | None = None) -> FunctionSpec:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as err:
        raise SpecError(f"cannot read spec {path}: {err}") from err
    except json.JSONDecodeError as err:
        raise SpecError(f"spec {path} is not valid JSON: {err}") from err
    if not isinstance(data, dict):
        raise SpecError(f"spec {path}: top level must be an object")
    kind = data.get("kind")
    if kind not in KINDS:
        raise SpecError(f"spec {path}: kind must be one of {', '.join(KINDS)}")
    body = data.get("body")
    if not isinstance(body, dict):
        raise SpecError(f"spec {path}: body must be an object")
    budget = _parse_budget(data.get("budget", {}), f"spec {path}")
    if overrides:
        budget.update(overrides)  # validated at flag-parse time
    return FunctionSpec(kind, body, budget)


def build_function(spec: FunctionSpec):
    """Instantiate the object a spec body describes.

    The jump-polynomial kind accepts any of the module's shapes: a
    polynomial body carries "G", a shift combination carries "terms",
    anything else parses as the plain or shifted staircase itself.  The
    oscillator kind likewise accepts a combination ("alphas") or a single
    host interval ("lo"/"hi"/"kind").
    """
    try:
        if spec.kind == "tower-series":
            return StepSeries.from_json(spec.body)
        if spec.kind == "jump-polynomial":
            if "G" in spec.body:
                return JumpPolynomial.from_json(spec.body)
            if "terms" in spec.body:
                return ShiftCombination.from_json(spec.body)
            return JumpSeries.from_json(spec.body)
        if "alphas" in spec.body:
            return OscCombination.from_json(spec.body)
        return Oscillator(Fraction(spec.body.get("lo", 0)),
                          Fraction(spec.body.get("hi", 1)),
                          str(spec.body.get("kind", "derivative")))
    except SpecError:
        raise
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as err:
        raise SpecError(f"bad {spec.kind} body: {err}") from err


def _single_spec(args) -> FunctionSpec:
    paths = args.spec or []
    if len(paths) != 1:
        raise SpecError("exactly one --spec is required here")
    return load_spec(paths[0], args.budget_overrides)


def _require_kind(spec: FunctionSpec, *kinds: str) -> None:
    if spec.kind not in kinds:
        raise SpecError(f"this command needs kind {' or '.join(kinds)}, "
                        f"got {spec.kind}")


def _csv(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    def cell(x: object) -> str:
        return format_fraction(x) if isinstance(x, Fraction) else str(x)
    lines = [",".join(header)]
    lines.extend(",".join(cell(c) for c in row) for row in rows)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# tower
# ---------------------------------------------------------------------------


def _cmd_tower_build(args):
    spec = _single_spec(args)
    _require_kind(spec, "tower-series")
    series = build_function(spec)
    tower: TowerSpec = series.tower
    depth = min(spec.budget["depth"], 40)
    upto = min(spec.budget["maxgen"], 24)
    rows = []
    entries = []
    for j in range(1, upto + 1):
        approx = tower_generation(tower, j, depth)
        enc = approx.measure_enclosure
        rows.append((j, enc.lo, enc.hi))
        entries.append({
            "generation": j,
            "mass": tower.mass(j),
            "measure": enc,
            "component_count": str(approx.component_count),
        })
    cert = Certificate(
        claim="measure-enclosure",
        verdict=CERTIFIED,
        payload={"tower": tower.as_json(), "generations": entries,
                 "provenance": spec.provenance()},
        budget={"depth": depth, "maxgen": upto},
    )
    return EXIT_OK, cert.as_json(), _csv(("index", "lo", "hi"), rows)


def _cmd_tower_show(args):
    spec = _single_spec(args)
    _require_kind(spec, "tower-series")
    series = build_function(spec)
    tower: TowerSpec = series.tower
    j = args.generation
    depth = min(spec.budget["depth"], 20)
    approx = tower_generation(tower, j, depth)
    count = approx.component_count
    if count > 100_000:
        raise SpecError(f"generation {j} at depth {depth} has {count} "
                        "components; lower --budget depth to list them")
    rows = [(i, c.spec.a, c.spec.b) for i, c in enumerate(approx.iter_components())]
    payload = {
        "tower": tower.as_json(),
        "generation": j,
        "depth": depth,
        "component_count": count,
        "measure": jsonable(approx.measure_enclosure),
        "components": [[format_fraction(a), format_fraction(b)] for _, a, b in rows],
        "provenance": spec.provenance(),
    }
    return EXIT_OK, payload, _csv(("index", "lo", "hi"), rows)


# ---------------------------------------------------------------------------
# fn
# ---------------------------------------------------------------------------


def _cmd_fn_eval(args):
    spec = _single_spec(args)
    obj = build_function(spec)
    budget = spec.budget
    at = args.at
    if spec.kind == "tower-series":
        if args.grid:
            raise SpecError("--grid needs enclosure-valued kinds, not tower-series")
        verdict = eval_series(obj, at, budget["maxgen"], budget["depth"])
        payload = {"at": format_fraction(at), "result": verdict.as_json(),
                   "provenance": spec.provenance()}
        code = EXIT_INCONCLUSIVE if verdict.kind == "unknown" else EXIT_OK
        return code, payload, None

    def value(x: Fraction) -> Enclosure:
        if spec.kind == "jump-polynomial":
            raw = obj.value_at(x, budget["terms"], budget["precision"])
        else:
            raw = obj.value_at(x, budget["precision"])
        return raw.outward(budget["precision"])

    enc = value(at)
    rows = [(at, enc.lo, enc.hi)]
    if args.grid:
        rows = []
        for k in range(args.grid + 1):
            x = Fraction(k, args.grid)
            e = value(x)
            rows.append((x, e.lo, e.hi))
    payload = {"at": format_fraction(at), "value": jsonable(enc),
               "provenance": spec.provenance()}
    return EXIT_OK, payload, _csv(("x", "lo", "hi"), rows)


def _cmd_fn_integrate(args):
    spec = _single_spec(args)
    _require_kind(spec, "oscillator-combination")
    obj = build_function(spec)
    enc = kurzweil_integral(obj, args.lo, args.hi, spec.budget["precision"])
    payload = {
        "from": format_fraction(args.lo),
        "to": format_fraction(args.hi),
        "integral": jsonable(enc.outward(spec.budget["precision"])),
        "provenance": spec.provenance(),
    }
    return EXIT_OK, payload, None


# ---------------------------------------------------------------------------
# norm
# ---------------------------------------------------------------------------


def _cmd_norm_l1(args):
    spec = _single_spec(args)
    _require_kind(spec, "tower-series")
    series = build_function(spec)
    enc = l1_norm(series, min(spec.budget["terms"], 200), spec.budget["depth"])
    # exact power sums carry huge denominators; display on a dyadic grid
    cert = Certificate("norm-enclosure", COMPUTED,
                       {"space": "L1", "norm": enc.outward(spec.budget["precision"]),
                        "provenance": spec.provenance()})
    return EXIT_OK, cert.as_json(), None


def _cmd_norm_bv(args):
    spec = _single_spec(args)
    _require_kind(spec, "jump-polynomial")
    obj = build_function(spec)
    result = variation_bounds(obj, terms=spec.budget["terms"],
                              precision=spec.budget["precision"])
    payload = result.certificate.as_json()
    payload["provenance"] = jsonable(spec.provenance())
    return EXIT_OK, payload, None


def _cmd_norm_alexiewicz(args):
    spec = _single_spec(args)
    _require_kind(spec, "oscillator-combination")
    obj = build_function(spec)
    tol = spec.budget["tolerance"]
    try:
        enc = alexiewicz_norm(obj, tol, min(spec.budget["precision"], 128))
    except NonterminationBudget as err:
        verdict = InconclusiveAtBudget(str(err), {"tolerance": tol})
        return EXIT_INCONCLUSIVE, verdict.as_json(), None
    cert = Certificate("norm-enclosure", COMPUTED,
                       {"space": "Alexiewicz",
                        "norm": enc.outward(spec.budget["precision"]),
                        "tolerance": tol, "provenance": spec.provenance()})
    return EXIT_OK, cert.as_json(), None


# ---------------------------------------------------------------------------
# certify
# ---------------------------------------------------------------------------


def _cmd_certify_unbounded(args):
    spec = _single_spec(args)
    _require_kind(spec, "tower-series")
    series = build_function(spec)
    lo, hi = args.interval
    got = unbounded_witness(series, lo, hi, args.bound,
                            spec.budget["maxgen"], spec.budget["depth"])
    if isinstance(got, InconclusiveAtBudget):
        return EXIT_INCONCLUSIVE, got.as_json(), None
    cert = Certificate("unbounded", CERTIFIED, {
        "interval": [lo, hi],
        "bound": args.bound,
        "witness": got.as_json(),
        "provenance": spec.provenance(),
    })
    return EXIT_OK, cert.as_json(), None


def _as_polynomial(obj) -> JumpPolynomial:
    if isinstance(obj, JumpPolynomial):
        return obj
    if isinstance(obj, JumpSeries) and obj.shift is None:
        return staircase_polynomial()
    raise SpecError("jump search needs the plain staircase or a polynomial in it")


def _cmd_certify_jump_dense(args):
    spec = _single_spec(args)
    _require_kind(spec, "jump-polynomial")
    poly = _as_polynomial(build_function(spec))
    lo, hi = args.interval
    budget = spec.budget
    index_budget = min(10**5, 2 ** min(budget["maxgen"], 17))
    got = jump_search(poly, lo, hi, args.eps, index_budget,
                      budget["terms"], budget["precision"])
    if isinstance(got, InconclusiveAtBudget):
        return EXIT_INCONCLUSIVE, got.as_json(), None
    cert = got.certificate()
    payload = cert.as_json()
    payload["claim"] = "jump-dense-sample"
    payload["provenance"] = jsonable(spec.provenance())
    return EXIT_OK, payload, None


def _cmd_certify_non_lebesgue(args):
    spec = _single_spec(args)
    _require_kind(spec, "oscillator-combination")
    obj = build_function(spec)
    max_peaks = 1000 * spec.budget["maxgen"]
    if isinstance(obj, OscCombination):
        got = restriction_witness(obj, args.bound, spec.budget["precision"], max_peaks)
    else:
        got = nonlebesgue_witness(obj, args.bound, spec.budget["precision"], max_peaks)
    if isinstance(got, InconclusiveAtBudget):
        return EXIT_INCONCLUSIVE, got.as_json(), None
    cert = got.certificate()
    payload = cert.as_json()
    payload["claim"] = "non-lebesgue"
    payload["provenance"] = jsonable(spec.provenance())
    base = got.base if hasattr(got, "base") else got
    rows = [(k, running, running) for k, _, running in base.rows()]
    return EXIT_OK, payload, _csv(("index", "lo", "hi"), rows)


def _cmd_certify_basis(args):
    paths = args.spec or []
    if not paths:
        raise SpecError("at least one --spec is required")
    specs = [load_spec(p, args.budget_overrides) for p in paths]
    for s in specs:
        _require_kind(s, "tower-series")
    coeffs = [_fraction_flag(c) for c in args.coeffs.split(",")]
    m2 = args.m2 or len(coeffs)
    m1 = args.m1
    if len(specs) == 1 and m2 > 1:
        series = build_function(specs[0])
        rule = series.rule
        theta = getattr(rule, "theta", None)
        if theta is None:
            raise SpecError("a single monomial-rule spec cannot seed a family; "
                            "pass one --spec per member")
        family = disjoint_power_family(theta, m2, series.tower)
    else:
        family = tuple(build_function(s) for s in specs)
    budget = specs[0].budget
    result = basis_inequality_check(coeffs, m1, m2, family,
                                    min(budget["terms"], 48),
                                    min(budget["depth"], 20))
    # exact norms can run to thousands of digits; emit on a dyadic grid
    comparison = {
        "verdict": "holds" if result.holds else "inconclusive",
        "left_norm": result.left.outward(96),
        "right_norm": result.right.outward(96),
        "margin_lower": dyadic_floor(result.margin_lower, 96),
    }
    cert = Certificate("basis-inequality",
                       CERTIFIED if result.holds else COMPUTED,
                       {"coefficients": coeffs, "m1": m1, "m2": m2,
                        "comparison": comparison,
                        "provenance": specs[0].provenance()})
    return EXIT_OK, cert.as_json(), None


def _cmd_certify_perturbation(args):
    pieces: tuple = ()
    if args.pieces:
        try:
            with open(args.pieces, encoding="utf-8") as fh:
                raw = json.load(fh)
            pieces = tuple((Fraction(a), Fraction(b), Fraction(v)) for a, b, v in raw)
        except (OSError, ValueError, TypeError, json.JSONDecodeError) as err:
            raise SpecError(f"bad pieces file {args.pieces}: {err}") from err
    f = StepFunction(pieces)
    lo, hi = args.interval
    result = comeager_perturbation(f, args.bound, (lo, hi), args.radius)
    payload = result.certificate.as_json()
    payload["claim"] = "perturbation"
    return EXIT_OK, payload, None


# ---------------------------------------------------------------------------
# report
# ---------------------------------------------------------------------------


def _battery(spec: FunctionSpec) -> list[tuple[str, Callable[[], tuple[int, dict]]]]:
    """Claim checks appropriate to one spec's kind, at its budgets."""
    budget = spec.budget
    obj = build_function(spec)
    checks: list[tuple[str, Callable[[], tuple[int, dict]]]] = []

    if spec.kind == "tower-series":
        def measure() -> tuple[int, dict]:
            depth = min(budget["depth"], 16)
            entries = []
            for j in range(1, min(budget["maxgen"], 6) + 1):
                enc = tower_generation(obj.tower, j, depth).measure_enclosure
                entries.append({"generation": j, "measure": enc})
            return EXIT_OK, {"verdict": CERTIFIED, "generations": entries}

        def series_l1() -> tuple[int, dict]:
            enc = l1_norm(obj, min(budget["terms"], 48), min(budget["depth"], 20))
            return EXIT_OK, {"verdict": COMPUTED, "norm": enc.outward(96)}

        def unbounded() -> tuple[int, dict]:
            got = unbounded_witness(obj, Fraction(3, 8), Fraction(5, 8), 2,
                                    budget["maxgen"], budget["depth"])
            if isinstance(got, InconclusiveAtBudget):
                return EXIT_INCONCLUSIVE, got.as_json()
            return EXIT_OK, {"verdict": CERTIFIED, "witness": got.as_json()}

        checks += [("measure-enclosure", measure), ("norm-enclosure", series_l1),
                   ("unbounded", unbounded)]

    elif spec.kind == "jump-polynomial":
        def nonzero() -> tuple[int, dict]:
            poly = _as_polynomial(obj)
            got = jump_enclosure(poly, Fraction(1, 2), budget["terms"],
                                 budget["precision"])
            verdict = CERTIFIED if got.certified_nonzero else INCONCLUSIVE
            return (EXIT_OK if got.certified_nonzero else EXIT_INCONCLUSIVE,
                    {"verdict": verdict, "jump": got.value})

        def dense() -> tuple[int, dict]:
            poly = _as_polynomial(obj)
            got = jump_search(poly, Fraction(2, 5), Fraction(3, 5),
                              Fraction(1, 1000),
                              min(10**5, 2 ** min(budget["maxgen"], 17)),
                              budget["terms"], budget["precision"])
            if isinstance(got, InconclusiveAtBudget):
                return EXIT_INCONCLUSIVE, got.as_json()
            return EXIT_OK, {"verdict": CERTIFIED,
                             "witness": got.certificate().as_json()["payload"]}

        def variation() -> tuple[int, dict]:
            vb = variation_bounds(obj, terms=min(budget["terms"], 64),
                                  precision=budget["precision"])
            return EXIT_OK, vb.certificate.as_json()

        checks += [("jump-nonzero", nonzero), ("jump-dense-sample", dense),
                   ("norm-enclosure", variation)]

    else:
        def not_lebesgue() -> tuple[int, dict]:
            if isinstance(obj, OscCombination):
                got = restriction_witness(obj, 4, budget["precision"], 1000)
            else:
                got = nonlebesgue_witness(obj, 4, budget["precision"], 1000)
            if isinstance(got, InconclusiveAtBudget):
                return EXIT_INCONCLUSIVE, got.as_json()
            return EXIT_OK, {"verdict": CERTIFIED,
                             "witness": got.certificate().as_json()["payload"]}

        def alexiewicz() -> tuple[int, dict]:
            tol = max(budget["tolerance"], Fraction(1, 10**6))
            try:
                enc = alexiewicz_norm(obj, tol, min(budget["precision"], 128))
            except NonterminationBudget as err:
                return EXIT_INCONCLUSIVE, InconclusiveAtBudget(
                    str(err), {"tolerance": tol}).as_json()
            return EXIT_OK, {"verdict": COMPUTED, "norm": enc, "tolerance": tol}

        checks += [("non-lebesgue", not_lebesgue), ("norm-enclosure", alexiewicz)]
    return checks


def _cmd_report(args):
    import time as _time
    entries = []
    worst = EXIT_OK
    specs: list[tuple[str, FunctionSpec]] = []
    for path in args.specs:
        specs.append((path, load_spec(path, args.budget_overrides)))
    if args.bundled:
        from .checklist import run_checklist
        for entry in run_checklist():
            worst = max(worst, entry.pop("exit_code"))
            entries.append(entry)
    for path, spec in specs:
        for claim, check in _battery(spec):
            started = _time.monotonic()
            code, payload = check()
            wall = int(round(1000 * (_time.monotonic() - started)))
            worst = max(worst, code)
            entries.append({
                "spec": path,
                "spec_sha256": spec.sha256,
                "claim": claim,
                "payload": jsonable(payload),
                "wall_ms": wall,
            })
    return worst, {"library": f"realcert {__version__}", "entries": entries}, None


# ---------------------------------------------------------------------------
# parser and entry point
# ---------------------------------------------------------------------------


def _add_common(p: _Parser, spec_required: bool = True) -> None:
    p.add_argument("--spec", action="append", metavar="PATH",
                   help="function spec JSON file" +
                        ("" if spec_required else " (optional)"))
    p.add_argument("--budget", default="", metavar="K=V,...",
                   help="override budget keys: maxgen, depth, terms, "
                        "precision, tolerance")
    p.add_argument("--precision", type=int, metavar="BITS")
    p.add_argument("--tolerance", type=_fraction_flag, metavar="P/Q")
    p.add_argument("--csv", metavar="PATH", help="also write plot rows here")
    p.add_argument("--json", action="store_true",
                   help="emit JSON on stdout (the default; flag kept for "
                        "scripting symmetry)")


def _budget_overrides(args) -> dict:
    out: dict[str, object] = {}
    if args.budget:
        for pair in args.budget.split(","):
            if "=" not in pair:
                raise SpecError(f"--budget expects K=V pairs, got {pair!r}")
            key, _, value = pair.partition("=")
            out[key.strip()] = value.strip()
    if args.precision is not None:
        out["precision"] = args.precision
    if args.tolerance is not None:
        out["tolerance"] = args.tolerance
    return _validate_budget_items(out, "flags")


def build_parser() -> _Parser:
    parser = _Parser(prog="realcert",
                     description="certified pathological integrable functions")
    parser.add_argument("--version", action="version",
                        version=f"realcert {__version__}")
    top = parser.add_subparsers(dest="command", required=True)

    tower = top.add_parser("tower", help="fat Cantor towers").add_subparsers(
        dest="sub", required=True)
    p = tower.add_parser("build", help="measure enclosures per generation")
    _add_common(p)
    p.set_defaults(handler=_cmd_tower_build)
    p = tower.add_parser("show", help="component spans of one generation")
    _add_common(p)
    p.add_argument("--generation", type=int, required=True)
    p.set_defaults(handler=_cmd_tower_show)

    fn = top.add_parser("fn", help="pointwise and integral values").add_subparsers(
        dest="sub", required=True)
    p = fn.add_parser("eval", help="enclose or decide the value at a point")
    _add_common(p)
    p.add_argument("--at", type=_fraction_flag, required=True, metavar="P/Q")
    p.add_argument("--grid", type=int, default=0, metavar="N",
                   help="with --csv: sample k/N for k = 0..N")
    p.set_defaults(handler=_cmd_fn_eval)
    p = fn.add_parser("integrate", help="gauge integral by primitive difference")
    _add_common(p)
    p.add_argument("--from", dest="lo", type=_fraction_flag, required=True,
                   metavar="P/Q")
    p.add_argument("--to", dest="hi", type=_fraction_flag, required=True,
                   metavar="P/Q")
    p.set_defaults(handler=_cmd_fn_integrate)

    norm = top.add_parser("norm", help="certified norm enclosures").add_subparsers(
        dest="sub", required=True)
    p = norm.add_parser("l1", help="integral of the absolute step series")
    _add_common(p)
    p.set_defaults(handler=_cmd_norm_l1)
    p = norm.add_parser("bv", help="total variation bounds")
    _add_common(p)
    p.set_defaults(handler=_cmd_norm_bv)
    p = norm.add_parser("alexiewicz", help="sup of the primitive, to tolerance")
    _add_common(p)
    p.set_defaults(handler=_cmd_norm_alexiewicz)

    certify = top.add_parser("certify", help="claim certificates").add_subparsers(
        dest="sub", required=True)
    p = certify.add_parser("unbounded", help="component pushing past a bound")
    _add_common(p)
    p.add_argument("--interval", nargs=2, type=_fraction_flag, required=True,
                   metavar=("LO", "HI"))
    p.add_argument("--bound", type=_fraction_flag, required=True, metavar="M")
    p.set_defaults(handler=_cmd_certify_unbounded)
    p = certify.add_parser("jump-dense", help="certified jump inside a window")
    _add_common(p)
    p.add_argument("--interval", nargs=2, type=_fraction_flag, required=True,
                   metavar=("LO", "HI"))
    p.add_argument("--eps", type=_fraction_flag, default=Fraction(1, 1000),
                   metavar="P/Q", help="jump size to aim for (default 1/1000)")
    p.set_defaults(handler=_cmd_certify_jump_dense)
    p = certify.add_parser("non-lebesgue",
                           help="absolute integral exceeds any bar")
    _add_common(p)
    p.add_argument("--bound", type=_fraction_flag, required=True, metavar="M")
    p.set_defaults(handler=_cmd_certify_non_lebesgue)
    p = certify.add_parser("basis", help="nested-sum norm inequality")
    _add_common(p)
    p.add_argument("--coeffs", required=True, metavar="C1,C2,...")
    p.add_argument("--m1", type=int, default=1)
    p.add_argument("--m2", type=int, default=0, help="defaults to len(coeffs)")
    p.set_defaults(handler=_cmd_certify_basis)
    p = certify.add_parser("perturbation",
                           help="ball around a step function meets the target set")
    _add_common(p, spec_required=False)
    p.add_argument("--bound", type=_fraction_flag, required=True, metavar="N")
    p.add_argument("--radius", type=_fraction_flag, required=True, metavar="R")
    p.add_argument("--interval", nargs=2, type=_fraction_flag, required=True,
                   metavar=("LO", "HI"))
    p.add_argument("--pieces", metavar="PATH",
                   help="JSON [[lo,hi,value],...]; default: the zero function")
    p.set_defaults(handler=_cmd_certify_perturbation)

    p = top.add_parser("report", help="aggregate certificates for spec sets")
    p.add_argument("specs", nargs="*", metavar="SPEC",
                   help="spec files; none plus no --bundled gives an empty report")
    p.add_argument("--bundled", action="store_true",
                   help="also run the built-in claim checklist")
    p.add_argument("--budget", default="", metavar="K=V,...")
    p.add_argument("--precision", type=int)
    p.add_argument("--tolerance", type=_fraction_flag)
    p.add_argument("--csv", metavar="PATH")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_report)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args.budget_overrides = _budget_overrides(args)
        code, payload, csv_text = args.handler(args)
        if args.csv:
            if csv_text is None:
                raise SpecError("this command does not emit CSV")
            with open(args.csv, "w", encoding="utf-8") as fh:
                fh.write(csv_text)
    except SpecError as err:
        print(f"realcert: {err}", file=sys.stderr)
        print(canonical_dumps({"error": str(err)}, indent=2))
        return EXIT_USAGE
    except (ValueError, OSError) as err:
        print(f"realcert: {err}", file=sys.stderr)
        print(canonical_dumps({"error": str(err)}, indent=2))
        return EXIT_USAGE
    print(canonical_dumps(payload, indent=2))
    return code


if __name__ == "__main__":
    sys.exit(main())
