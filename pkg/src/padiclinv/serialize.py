"""JSON encodings for p-adic values, extension elements and jets.

Wire formats (schema version 1):

  scalar     {"valuation": v, "unit_digits": [d0, d1, ...], "precision": N}
             with little-endian base-p digits of the unit part, or
             {"zero": true, "precision": N};
  extension  {"ext": true, "degree": f, "coefficients": [scalar, ...],
              "modulus": [c0, ..., 1]}
  jet        {"value": scalar-or-extension,
              "partials": {var: scalar-or-extension},
              "basepoint": {var: int}}
  family     {"base": scalar, "unit": scalar,
              "exponents": {var: int}, "basepoint": {var: int}}

Integers are accepted as scalar shorthand on input; output is always
canonical, so serialize(parse(x)) is a fixed point.
"""

from __future__ import annotations

from fractions import Fraction

from .padic import PadicScalar, UnramifiedField, UnramExtElement
from .jets import ExponentialFamily, WeightJet


class SchemaError(ValueError):
    pass


def scalar_to_json(x):
    if x.is_zero():
        return {"zero": True, "precision": x.N}
    return {
        "valuation": x.valuation,
        "unit_digits": x.unit_digits(),
        "precision": x.N,
    }


def scalar_from_json(obj, p, default_precision=20):
    if isinstance(obj, int):
        return PadicScalar.from_integer(obj, p, default_precision)
    if isinstance(obj, str):
        return PadicScalar.from_fraction(Fraction(obj), p, default_precision)
    if not isinstance(obj, dict):
        raise SchemaError(f"bad scalar payload: {obj!r}")
    precision = obj.get("precision", default_precision)
    if obj.get("zero"):
        return PadicScalar.zero(p, precision)
    try:
        v = obj["valuation"]
        digits = obj["unit_digits"]
    except KeyError as exc:
        raise SchemaError(f"scalar payload missing {exc}") from exc
    unit = 0
    for i, d in enumerate(digits):
        if not 0 <= d < p:
            raise SchemaError(f"digit {d} out of range for p = {p}")
        unit += d * p**i
    if unit % p == 0:
        raise SchemaError("unit part is divisible by p")
    return PadicScalar(p, v, unit, precision)


def ext_to_json(x):
    return {
        "ext": True,
        "degree": x.field.f,
        "modulus": list(x.field.modulus),
        "coefficients": [scalar_to_json(c) for c in x.coefficients],
    }


def ext_from_json(obj, p, default_precision=20, field=None):
    if not isinstance(obj, dict) or not obj.get("ext"):
        raise SchemaError(f"bad extension payload: {obj!r}")
    f = obj["degree"]
    modulus = obj.get("modulus")
    if field is None:
        field = UnramifiedField(p, f, modulus)
    elif field.f != f:
        raise SchemaError("degree mismatch with ambient field")
    coeffs = [scalar_from_json(c, p, default_precision) for c in obj["coefficients"]]
    return field.from_coefficients(coeffs, default_precision)


def value_to_json(x):
    if isinstance(x, UnramExtElement):
        return ext_to_json(x)
    return scalar_to_json(x)


def value_from_json(obj, p, default_precision=20, field=None):
    if isinstance(obj, dict) and obj.get("ext"):
        return ext_from_json(obj, p, default_precision, field)
    return scalar_from_json(obj, p, default_precision)


def jet_to_json(jet):
    return {
        "value": value_to_json(jet.value),
        "partials": {
            var: value_to_json(d) for var, d in sorted(jet.partials.items())
        },
        "basepoint": dict(sorted(jet.basepoint.items())),
    }


def jet_from_json(obj, p, default_precision=20, field=None):
    if not isinstance(obj, dict) or "value" not in obj:
        raise SchemaError(f"bad jet payload: {obj!r}")
    value = value_from_json(obj["value"], p, default_precision, field)
    partials = {
        var: value_from_json(d, p, default_precision, field)
        for var, d in obj.get("partials", {}).items()
    }
    basepoint = {var: int(k) for var, k in obj.get("basepoint", {}).items()}
    return WeightJet(value, partials, basepoint)


def family_to_json(fam):
    return {
        "base": scalar_to_json(fam.base),
        "unit": scalar_to_json(fam.unit),
        "exponents": dict(sorted(fam.exponents.items())),
        "basepoint": dict(sorted(fam.basepoint.items())),
    }


def family_from_json(obj, p, default_precision=20):
    if not isinstance(obj, dict) or "base" not in obj or "unit" not in obj:
        raise SchemaError(f"bad family payload: {obj!r}")
    base = scalar_from_json(obj["base"], p, default_precision)
    unit = scalar_from_json(obj["unit"], p, default_precision)
    exponents = {var: int(c) for var, c in obj.get("exponents", {}).items()}
    basepoint = {var: int(k) for var, k in obj.get("basepoint", {}).items()}
    return ExponentialFamily(base, unit, exponents, basepoint)


def matrix_to_json(rows):
    return [[value_to_json(e) for e in row] for row in rows]


def matrix_from_json(obj, p, default_precision=20, field=None):
    return [
        [value_from_json(e, p, default_precision, field) for e in row]
        for row in obj
    ]
