"""Batch front-end: JSON problem in, JSON report out.

A problem description carries the prime, the working precision, a
representation selector, per-prime payloads, explicit hypothesis
attestations (C1, C2, C5, LGp: never assumed silently) and convention
switches (filtration variant, Steinberg ratio).  Reports are
deterministic: canonical JSON, sorted keys, no timestamps, every
convention echoed.

    padiclinv --input problem.json --report out.json
    padiclinv --input problem.json --crosscheck 3

The optional cross-check recomputes every family derivative by centered
finite differences at step p^m and reports the worst discrepancy
valuation.

Exit status is 0 exactly when no error-level diagnostic was emitted.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field as dc_field

from . import linalg
from .automorphic import (
    STEINBERG_RATIO_Q,
    STEINBERG_RATIO_Q_INV,
    AutomorphicError,
    SiegelLocalDatum,
    hecke_normalization,
    hodge_tate_weights,
    is_steinberg,
    tadic_reducible,
)
from .jets import JetError
from .linvariant import (
    LinvariantError,
    assemble_report,
    linv_adjoint_gsp4,
    linv_standard_twists,
    linv_steinberg_spin,
)
from .padic import PadicError, UnramifiedField
from .phin import (
    PhiNModule,
    PhinError,
    RegularSubmodule,
    benois_filtration,
    count_trivial_zeros,
)
from .serialize import (
    SchemaError,
    family_from_json,
    family_to_json,
    matrix_from_json,
    scalar_from_json,
    scalar_to_json,
    value_to_json,
)

TOOL_NAME = "padiclinv"
TOOL_VERSION = "0.1.0"
SCHEMA_VERSION = "1"

REPRESENTATIONS = ("spin", "standard", "standard_twist", "adjoint_gsp4", "raw_phin")
FILTRATION_VARIANTS = ("prose", "printed")
STEINBERG_RATIOS = (STEINBERG_RATIO_Q, STEINBERG_RATIO_Q_INV)


@dataclass
class PrimePayload:
    label: str
    f: int
    local_type: str
    satake: dict | None = None
    weight: dict | None = None
    hecke: list | None = None
    family: object = None
    families: dict = dc_field(default_factory=dict)
    phin: dict | None = None
    eigenvalue_one_in_quotient: bool | None = None


@dataclass
class ProblemSpec:
    prime: int
    precision: int
    representation: str
    genus: int
    twist: int | None
    attestations: dict
    conventions: dict
    primes: list

    def __eq__(self, other):
        if not isinstance(other, ProblemSpec):
            return NotImplemented
        return serialize_problem(self) == serialize_problem(other)


def parse_problem(obj):
    if not isinstance(obj, dict):
        raise SchemaError("problem description must be a JSON object")
    version = str(obj.get("schema_version", SCHEMA_VERSION))
    if version != SCHEMA_VERSION:
        raise SchemaError(f"unsupported schema version {version!r}")
    try:
        prime = int(obj["prime"])
        representation = obj["representation"]
    except KeyError as exc:
        raise SchemaError(f"missing required field {exc}") from exc
    if prime < 2:
        raise SchemaError(f"prime must be >= 2, got {prime}")
    if representation not in REPRESENTATIONS:
        raise SchemaError(f"unknown representation {representation!r}")
    precision = int(obj.get("precision", 20))
    if precision < 1:
        raise SchemaError("precision must be >= 1")
    genus = int(obj.get("genus", 2))
    twist = obj.get("twist")
    if representation == "standard_twist":
        if twist is None:
            raise SchemaError("standard_twist requires a twist field")
        twist = int(twist)
    attestations = {
        key: bool(val) for key, val in obj.get("attestations", {}).items()
    }
    conventions = {
        "filtration_variant": obj.get("conventions", {}).get(
            "filtration_variant", "prose"
        ),
        "steinberg_ratio": obj.get("conventions", {}).get(
            "steinberg_ratio", STEINBERG_RATIO_Q
        ),
    }
    if conventions["filtration_variant"] not in FILTRATION_VARIANTS:
        raise SchemaError(
            f"unknown filtration variant {conventions['filtration_variant']!r}"
        )
    if conventions["steinberg_ratio"] not in STEINBERG_RATIOS:
        raise SchemaError(
            f"unknown steinberg ratio {conventions['steinberg_ratio']!r}"
        )
    raw_primes = obj.get("primes_above_p")
    if not raw_primes:
        raise SchemaError("primes_above_p must be a non-empty list")
    primes = []
    labels = set()
    for entry in raw_primes:
        label = str(entry.get("label", f"P{len(primes) + 1}"))
        if label in labels:
            raise SchemaError(f"duplicate prime label {label!r}")
        labels.add(label)
        f = int(entry.get("f", 1))
        if f < 1:
            raise SchemaError(f"inertia degree must be >= 1 at {label}")
        local_type = entry.get("local_type", "spherical")
        if local_type not in ("steinberg", "spherical"):
            raise SchemaError(f"unknown local type {local_type!r} at {label}")
        family = entry.get("family")
        if family is not None:
            family = family_from_json(family, prime, precision)
        families = {
            name: family_from_json(payload, prime, precision)
            for name, payload in entry.get("families", {}).items()
        }
        eig_flag = entry.get("eigenvalue_one_in_quotient")
        primes.append(
            PrimePayload(
                label=label,
                f=f,
                local_type=local_type,
                satake=entry.get("satake"),
                weight=entry.get("weight"),
                hecke=entry.get("hecke"),
                family=family,
                families=families,
                phin=entry.get("phin"),
                eigenvalue_one_in_quotient=(
                    None if eig_flag is None else bool(eig_flag)
                ),
            )
        )
    return ProblemSpec(
        prime=prime,
        precision=precision,
        representation=representation,
        genus=genus,
        twist=twist,
        attestations=attestations,
        conventions=conventions,
        primes=primes,
    )


def serialize_problem(spec):
    out = {
        "schema_version": SCHEMA_VERSION,
        "prime": spec.prime,
        "precision": spec.precision,
        "representation": spec.representation,
        "genus": spec.genus,
        "attestations": dict(sorted(spec.attestations.items())),
        "conventions": dict(sorted(spec.conventions.items())),
        "primes_above_p": [],
    }
    if spec.twist is not None:
        out["twist"] = spec.twist
    for prime_data in spec.primes:
        entry = {
            "label": prime_data.label,
            "f": prime_data.f,
            "local_type": prime_data.local_type,
        }
        if prime_data.satake is not None:
            entry["satake"] = prime_data.satake
        if prime_data.weight is not None:
            entry["weight"] = prime_data.weight
        if prime_data.hecke is not None:
            entry["hecke"] = prime_data.hecke
        if prime_data.family is not None:
            entry["family"] = family_to_json(prime_data.family)
        if prime_data.families:
            entry["families"] = {
                name: family_to_json(fam)
                for name, fam in sorted(prime_data.families.items())
            }
        if prime_data.phin is not None:
            entry["phin"] = prime_data.phin
        if prime_data.eigenvalue_one_in_quotient is not None:
            entry["eigenvalue_one_in_quotient"] = (
                prime_data.eigenvalue_one_in_quotient
            )
        out["primes_above_p"].append(entry)
    return out


def canonical_json(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


class _Diagnostics:
    def __init__(self):
        self.entries = []

    def error(self, code, message):
        self.entries.append({"level": "error", "code": code, "message": message})

    def warning(self, code, message):
        self.entries.append({"level": "warning", "code": code, "message": message})

    def info(self, code, message):
        self.entries.append({"level": "info", "code": code, "message": message})

    def has_errors(self):
        return any(e["level"] == "error" for e in self.entries)


def _parse_satake(payload, prime_data, spec):
    alphas = [
        scalar_from_json(a, spec.prime, spec.precision)
        for a in payload.get("alphas", [])
    ]
    alpha0 = payload.get("alpha0", 1)
    return SiegelLocalDatum(
        genus=spec.genus,
        inertia_degree=prime_data.f,
        prime=spec.prime,
        alpha0=scalar_from_json(alpha0, spec.prime, spec.precision),
        alphas=tuple(alphas),
        weight=_parse_weight_tuples(prime_data),
        similitude_weight=_parse_k0(prime_data),
        hecke_eigenvalues=tuple(
            scalar_from_json(t, spec.prime, spec.precision)
            for t in (prime_data.hecke or [])
        ),
        local_type=(
            "Steinberg" if prime_data.local_type == "steinberg" else "Spherical"
        ),
    )


def _parse_weight_tuples(prime_data):
    if not prime_data.weight:
        return ()
    return tuple(tuple(int(x) for x in k) for k in prime_data.weight.get("k", []))


def _parse_k0(prime_data):
    if not prime_data.weight:
        return 0
    return int(prime_data.weight.get("k0", 0))


def _validate_automorphic_prime(spec, prime_data, diags, entry):
    """Satake/weight-level validations; fills the per-prime report entry."""
    if prime_data.weight:
        try:
            bare = _parse_satake({"alphas": []}, prime_data, spec)
        except (SchemaError, AutomorphicError, PadicError) as exc:
            diags.error("SCHEMA", f"{prime_data.label}: bad weight payload ({exc})")
            return
        try:
            spin_weights = hodge_tate_weights(bare, "spin")
            entry["hodge_tate_spin"] = [list(w) for w in spin_weights]
        except AutomorphicError as exc:
            if spec.representation in ("spin", "adjoint_gsp4"):
                diags.error("PARITY_ERROR", f"{prime_data.label}: {exc}")
            else:
                diags.warning("PARITY_ERROR", f"{prime_data.label}: {exc}")
    if prime_data.satake:
        try:
            datum = _parse_satake(prime_data.satake, prime_data, spec)
        except (SchemaError, AutomorphicError, PadicError) as exc:
            diags.error("SCHEMA", f"{prime_data.label}: bad satake payload ({exc})")
            return
        ratio = spec.conventions["steinberg_ratio"]
        steinberg = is_steinberg(datum, ratio)
        entry["steinberg_predicate"] = {
            "value": steinberg,
            "ratio_convention": ratio,
        }
        if steinberg != (prime_data.local_type == "steinberg"):
            diags.warning(
                "STEINBERG_MISMATCH",
                f"{prime_data.label}: declared {prime_data.local_type} but the "
                f"Satake progression test (convention {ratio!r}) says "
                f"{'Steinberg' if steinberg else 'not Steinberg'}",
            )
        red = tadic_reducible(datum)
        entry["tadic"] = {
            "reducible": red["reducible"],
            "triggered_conditions": red["triggered_conditions"],
        }
        if prime_data.hecke:
            norms = []
            for j in range(1, min(spec.genus, len(prime_data.hecke)) + 1):
                try:
                    norm = hecke_normalization(datum, j, spec.precision)
                except AutomorphicError as exc:
                    diags.error("PARITY_ERROR", f"{prime_data.label}: {exc}")
                    break
                if not norm["finite_slope"]:
                    diags.warning(
                        "NOT_FINITE_SLOPE",
                        f"{prime_data.label}: normalized Hecke eigenvalue "
                        f"{j} vanishes",
                    )
                norms.append(
                    {
                        "index": j,
                        "factor": scalar_to_json(norm["factor"]),
                        "beta": scalar_to_json(norm["beta"]),
                    }
                )
            entry["hecke_normalization"] = norms


def _require_attestations(spec, diags, keys):
    for key in keys:
        if not spec.attestations.get(key, False):
            diags.error(
                "ATTESTATION_MISSING",
                f"hypothesis {key} is not attested; the formulas assume it "
                "and the tool never assumes it silently",
            )


def _run_formula_representation(spec, diags, report):
    _require_attestations(spec, diags, ("C1", "C2", "LGp"))
    if diags.has_errors():
        return
    factors = {}
    trivial = {}
    spherical_count = 0
    parallel_var = "k"
    for prime_data in spec.primes:
        entry = report["primes"][prime_data.label]
        _validate_automorphic_prime(spec, prime_data, diags, entry)
        if prime_data.local_type == "steinberg":
            trivial[prime_data.label] = 1
            try:
                factor = _steinberg_factor(spec, prime_data, parallel_var)
            except (LinvariantError, JetError, SchemaError, PadicError) as exc:
                diags.error("FAMILY_MISSING", f"{prime_data.label}: {exc}")
                continue
            factors[prime_data.label] = factor
            entry["factor"] = value_to_json(factor)
            entry["trivial_zeros"] = 1
        else:
            t_here = 0
            if spec.representation in ("standard", "standard_twist"):
                if prime_data.eigenvalue_one_in_quotient:
                    t_here = 1
                    spherical_count += 1
            trivial[prime_data.label] = t_here
            entry["trivial_zeros"] = t_here
    if diags.has_errors():
        return
    total_zeros = sum(trivial.values())
    if total_zeros > 0 and not spec.attestations.get("C5", False):
        diags.error(
            "C5_UNATTESTED",
            "trivial zeros present but C5 (vanishing of the weight-zero "
            "graded piece W_0) is not attested",
        )
        return
    linv = assemble_report(
        spec.prime,
        spec.precision,
        factors,
        trivial,
        spherical_count,
        spec.conventions,
    )
    report["trivial_zero_count"] = linv.factored_count()
    report["spherical_factor"] = linv.spherical_status
    report["status"] = linv.status
    if linv.note:
        report["note"] = linv.note
    report["total"] = value_to_json(linv.total)


def _steinberg_factor(spec, prime_data, parallel_var):
    if spec.representation in ("spin", "standard"):
        if prime_data.family is None:
            raise SchemaError(
                "steinberg prime needs a 'family' payload for the first "
                "normalized Hecke eigenvalue"
            )
        return linv_steinberg_spin(
            prime_data.family.jet(), prime_data.f, parallel_var
        )
    # standard_twist: needs beta_1 .. beta_g families
    jets = []
    for i in range(1, spec.genus + 1):
        fam = prime_data.families.get(f"beta{i}")
        if fam is None:
            raise SchemaError(f"missing family beta{i} for the twisted formula")
        jets.append(fam.jet())
    return linv_standard_twists(
        jets, prime_data.f, spec.twist, spec.genus, parallel_var
    )


def _run_adjoint(spec, diags, report):
    _require_attestations(spec, diags, ("C1", "C2", "LGp"))
    if spec.genus != 2:
        diags.error("SCHEMA", "the adjoint determinant formula requires genus 2")
    if diags.has_errors():
        return
    f_pairs = []
    f_list = []
    var_pairs = []
    trivial = {}
    for prime_data in spec.primes:
        entry = report["primes"][prime_data.label]
        _validate_automorphic_prime(spec, prime_data, diags, entry)
        pair = []
        for name in ("F1", "F2"):
            fam = prime_data.families.get(name)
            if fam is None:
                diags.error(
                    "FAMILY_MISSING",
                    f"{prime_data.label}: adjoint run needs family {name}",
                )
                break
            pair.append(fam.jet())
        if len(pair) != 2:
            continue
        f_pairs.append(tuple(pair))
        f_list.append(prime_data.f)
        var_pairs.append(
            (f"k_{prime_data.label}_1", f"k_{prime_data.label}_2")
        )
        trivial[prime_data.label] = 2
        entry["trivial_zeros"] = 2
    if diags.has_errors():
        return
    total_zeros = sum(trivial.values())
    if total_zeros > 0 and not spec.attestations.get("C5", False):
        diags.error(
            "C5_UNATTESTED",
            "trivial zeros present but C5 (vanishing of the weight-zero "
            "graded piece W_0) is not attested",
        )
        return
    try:
        total = linv_adjoint_gsp4(f_pairs, f_list, var_pairs)
    except LinvariantError as exc:
        diags.error("SINGULAR_JACOBIAN", str(exc))
        return
    report["trivial_zero_count"] = total_zeros
    report["spherical_factor"] = "one"
    report["status"] = "complete"
    report["total"] = value_to_json(total)


def _run_raw_phin(spec, diags, report):
    results = {}
    for prime_data in spec.primes:
        entry = report["primes"][prime_data.label]
        payload = prime_data.phin
        if payload is None:
            diags.error(
                "SCHEMA", f"{prime_data.label}: raw_phin run needs a phin payload"
            )
            continue
        try:
            field = UnramifiedField(
                spec.prime, prime_data.f, payload.get("modulus")
            )
            phi = matrix_from_json(payload["phi"], spec.prime, spec.precision, field)
            nmat = matrix_from_json(payload["n"], spec.prime, spec.precision, field)
            flag = [
                (
                    int(w),
                    matrix_from_json(basis, spec.prime, spec.precision, field),
                )
                for w, basis in payload.get("filtration", [])
            ]
            module = PhiNModule(
                field, phi, nmat, hodge_filtration=flag, precision=spec.precision
            )
            module.validate()
        except (SchemaError, KeyError, PadicError) as exc:
            diags.error("SCHEMA", f"{prime_data.label}: bad phin payload ({exc})")
            continue
        except PhinError as exc:
            code = (
                "MONODROMY_RELATION_FAILED"
                if "monodromy" in str(exc)
                else "MODULE_INVALID"
            )
            diags.error(code, f"{prime_data.label}: {exc}")
            continue
        try:
            sub = RegularSubmodule.of(
                module,
                matrix_from_json(
                    payload["regular_submodule"], spec.prime, spec.precision, field
                ),
                precision=spec.precision,
            )
        except KeyError as exc:
            diags.error("SCHEMA", f"{prime_data.label}: missing {exc}")
            continue
        if not (sub.phi_stable and sub.n_stable):
            diags.error(
                "STABILITY_FAILED",
                f"{prime_data.label}: submodule is not (phi, N)-stable",
            )
            continue
        try:
            res = benois_filtration(
                module, sub, variant=spec.conventions["filtration_variant"]
            )
        except PhinError as exc:
            if "semisimple" in str(exc):
                # semisimplicity at 1 and p^{-1} is condition C3
                diags.error(
                    "SEMISIMPLICITY_FAILED",
                    f"{prime_data.label}: {exc} (condition C3)",
                )
            else:
                diags.error("REGULARITY_FAILED", f"{prime_data.label}: {exc}")
            continue
        except linalg.PrecisionExhausted as exc:
            diags.error("PRECISION_EXHAUSTED", f"{prime_data.label}: {exc}")
            continue
        results[prime_data.label] = res
        # recorded so a rerun can reconstruct the same extension
        entry["defining_polynomial"] = list(field.modulus)
        entry["filtration"] = {
            "variant": res.variant,
            "variants_differ": res.variants_differ,
            "dim_d_minus1": len(res.d_minus1),
            "dim_d_0": len(res.d_0),
            "dim_d_1": len(res.d_1),
            "r": res.r,
            "t1": res.t1,
            "trivial_zeros": res.trivial_zero_count,
            "c4_c5_violation": res.c4_c5_violation,
        }
        if res.c4_c5_violation:
            diags.error(
                "C4_C5_VIOLATED",
                f"{prime_data.label}: negative t1; the input cannot satisfy "
                "the standing hypotheses",
            )
    if diags.has_errors():
        return
    total = sum(res.trivial_zero_count for res in results.values())
    if total > 0:
        if not spec.attestations.get("C5", False):
            diags.error(
                "C5_UNATTESTED",
                "C5 unattested: vanishing of W_0 is required before the "
                "grade dimensions count trivial zeros",
            )
            return
        counted = count_trivial_zeros(results, c5_attested=True)
        report["trivial_zero_count"] = counted["t"]
    else:
        report["trivial_zero_count"] = 0
        report["note"] = "no trivial zeros"
    report["status"] = "complete"


def run(spec):
    """Validate and execute a problem; returns the report dict."""
    diags = _Diagnostics()
    report = {
        "tool": {
            "name": TOOL_NAME,
            "version": TOOL_VERSION,
            "schema_version": SCHEMA_VERSION,
        },
        "prime": spec.prime,
        "precision": spec.precision,
        "representation": spec.representation,
        "conventions": dict(sorted(spec.conventions.items())),
        "attestations": dict(sorted(spec.attestations.items())),
        "primes": {
            prime_data.label: {"f": prime_data.f, "local_type": prime_data.local_type}
            for prime_data in spec.primes
        },
    }
    if spec.representation in ("spin", "standard", "standard_twist"):
        _run_formula_representation(spec, diags, report)
    elif spec.representation == "adjoint_gsp4":
        _run_adjoint(spec, diags, report)
    else:
        _run_raw_phin(spec, diags, report)
    report["diagnostics"] = diags.entries
    report["exit_code"] = 1 if diags.has_errors() else 0
    return report


def crosscheck(spec, step_exponent):
    """Centered-difference validation of every family derivative.

    Recomputes each partial of each closed-form family at step
    p^step_exponent and reports the discrepancy valuation (the
    precision cap when the difference vanishes to working precision).
    """
    diagnostics = []
    details = []
    if 2 * step_exponent >= spec.precision:
        diagnostics.append(
            {
                "level": "warning",
                "code": "INSUFFICIENT_PRECISION",
                "message": (
                    f"step exponent {step_exponent} too large for precision "
                    f"{spec.precision}: difference quotients lose 2m digits"
                ),
            }
        )
    step = spec.prime**step_exponent
    worst = None
    found = False
    for prime_data in spec.primes:
        named = {}
        if prime_data.family is not None:
            named["family"] = prime_data.family
        named.update(prime_data.families)
        for name, fam in sorted(named.items()):
            jet = fam.jet()
            for var in sorted(fam.exponents):
                found = True
                fd = fam.centered_difference(var, step)
                diff = fd - jet.partial(var)
                if diff.is_zero():
                    val = diff.N
                    exact = True
                else:
                    val = diff.valuation
                    exact = False
                worst = val if worst is None else min(worst, val)
                details.append(
                    {
                        "prime": prime_data.label,
                        "family": name,
                        "variable": var,
                        "discrepancy_valuation": val,
                        "zero_to_precision": exact,
                    }
                )
    if not found:
        return {
            "available": False,
            "note": "crosscheck unavailable: no closed-form families in the input",
            "diagnostics": diagnostics,
        }
    return {
        "available": True,
        "step_exponent": step_exponent,
        "max_discrepancy_valuation": worst,
        "checks": details,
        "diagnostics": diagnostics,
    }


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog=TOOL_NAME,
        description="exact p-adic trivial-zero and L-invariant calculator",
    )
    parser.add_argument("--input", required=True, help="problem JSON path")
    parser.add_argument("--report", help="report path (default: stdout)")
    parser.add_argument(
        "--precision", type=int, help="override the working precision"
    )
    parser.add_argument(
        "--crosscheck",
        type=int,
        metavar="M",
        help="finite-difference cross-check at step p^M",
    )
    parser.add_argument(
        "--filtration-variant",
        choices=FILTRATION_VARIANTS,
        help="grade -1 operator form (default prose)",
    )
    parser.add_argument(
        "--steinberg-ratio",
        choices=STEINBERG_RATIOS,
        help="sign convention of the Steinberg progression (default q)",
    )
    args = parser.parse_args(argv)

    try:
        with open(args.input, "r", encoding="utf-8") as handle:
            raw = json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"cannot read problem: {exc}", file=sys.stderr)
        return 1

    if args.precision is not None:
        raw["precision"] = args.precision
    if args.filtration_variant or args.steinberg_ratio:
        conv = dict(raw.get("conventions", {}))
        if args.filtration_variant:
            conv["filtration_variant"] = args.filtration_variant
        if args.steinberg_ratio:
            conv["steinberg_ratio"] = args.steinberg_ratio
        raw["conventions"] = conv

    try:
        spec = parse_problem(raw)
    except (SchemaError, PadicError, JetError, ValueError) as exc:
        report = {
            "tool": {
                "name": TOOL_NAME,
                "version": TOOL_VERSION,
                "schema_version": SCHEMA_VERSION,
            },
            "diagnostics": [
                {"level": "error", "code": "SCHEMA", "message": str(exc)}
            ],
            "exit_code": 1,
        }
        _emit(report, args.report)
        return 1

    report = run(spec)
    if args.crosscheck is not None:
        report["crosscheck"] = crosscheck(spec, args.crosscheck)
    _emit(report, args.report)
    return report["exit_code"]


def _emit(report, path):
    text = canonical_json(report)
    if path:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    sys.exit(main())
