"""First-order jets of p-adic analytic functions of weight variables.

A WeightJet is the truncation (value, partial derivatives) of a family
at a fixed integer weight basepoint.  Arithmetic is exact first order:
(fg)' = f'g + fg' and (1/f)' = -f'/f^2.  Division by a family of
constant nonzero valuation is allowed: value and partials carry the
p-power jointly, so the quotient rule applies verbatim and logarithmic
derivatives never see the valuation part (the Iwasawa branch kills it).

Every logarithmic-derivative formula downstream consumes dlog(f, var) =
(d f / d var) / f evaluated at the basepoint.
"""

from __future__ import annotations

from .padic import PadicScalar, UnramExtElement, iwasawa_log


class JetError(ValueError):
    pass


def _merged_basepoint(a, b):
    for var, k in a.items():
        if var in b and b[var] != k:
            raise JetError(
                f"basepoint mismatch at {var!r}: {k} vs {b[var]}"
            )
    merged = dict(a)
    merged.update(b)
    return merged


class WeightJet:
    """Value and first partials of a p-adic family at a weight basepoint."""

    __slots__ = ("value", "partials", "basepoint")

    def __init__(self, value, partials=None, basepoint=None):
        if not isinstance(value, (PadicScalar, UnramExtElement)):
            raise TypeError("jet value must be a p-adic scalar")
        self.value = value
        self.partials = dict(partials or {})
        self.basepoint = dict(basepoint or {})
        for var, d in self.partials.items():
            if type(d) is not type(value):
                raise TypeError(f"partial {var!r} has a different scalar type")

    @classmethod
    def constant(cls, value, basepoint=None):
        return cls(value, {}, basepoint)

    def partial(self, var):
        got = self.partials.get(var)
        if got is None:
            return self.value.same_zero()
        return got

    def variables(self):
        return sorted(self.partials)

    def _binary(self, other, op):
        if not isinstance(other, WeightJet):
            if isinstance(other, (int, PadicScalar, UnramExtElement)):
                other = WeightJet.constant(
                    other if not isinstance(other, int)
                    else self.value.same_one() * other,
                    self.basepoint,
                )
            else:
                return None
        return op(self, other)

    def __add__(self, other):
        def add(a, b):
            bp = _merged_basepoint(a.basepoint, b.basepoint)
            parts = {}
            for var in set(a.partials) | set(b.partials):
                parts[var] = a.partial(var) + b.partial(var)
            return WeightJet(a.value + b.value, parts, bp)

        out = self._binary(other, add)
        return NotImplemented if out is None else out

    __radd__ = __add__

    def __neg__(self):
        return WeightJet(
            -self.value, {v: -d for v, d in self.partials.items()}, self.basepoint
        )

    def __sub__(self, other):
        out = self._binary(other, lambda a, b: a + (-b))
        return NotImplemented if out is None else out

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        def mul(a, b):
            bp = _merged_basepoint(a.basepoint, b.basepoint)
            parts = {}
            for var in set(a.partials) | set(b.partials):
                parts[var] = a.partial(var) * b.value + a.value * b.partial(var)
            return WeightJet(a.value * b.value, parts, bp)

        out = self._binary(other, mul)
        return NotImplemented if out is None else out

    __rmul__ = __mul__

    def inverse(self):
        if self.value.is_zero():
            raise ZeroDivisionError("jet with value zero to working precision")
        inv = self.value.inverse()
        inv2 = inv * inv
        return WeightJet(
            inv, {v: -(d * inv2) for v, d in self.partials.items()}, self.basepoint
        )

    def __truediv__(self, other):
        out = self._binary(other, lambda a, b: a * b.inverse())
        return NotImplemented if out is None else out

    def __rtruediv__(self, other):
        inv = self.inverse()
        return inv._binary(other, lambda a, b: b * a)

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        out = WeightJet.constant(self.value.same_one(), self.basepoint)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def __eq__(self, other):
        if not isinstance(other, WeightJet):
            return NotImplemented
        if self.value != other.value:
            return False
        for var in set(self.partials) | set(other.partials):
            if self.partial(var) != other.partial(var):
                return False
        return True

    __hash__ = None

    def __repr__(self):
        parts = ", ".join(f"d{v}={d!r}" for v, d in sorted(self.partials.items()))
        return f"WeightJet({self.value!r}{'; ' + parts if parts else ''})"


def jet_arith(a, b, op):
    """Dispatch table entry point: op in {add, sub, mul, div}."""
    table = {
        "add": lambda x, y: x + y,
        "sub": lambda x, y: x - y,
        "mul": lambda x, y: x * y,
        "div": lambda x, y: x / y,
    }
    if op not in table:
        raise JetError(f"unknown op {op!r}")
    return table[op](a, b)


def dlog(f, var):
    """Logarithmic derivative of the family at the basepoint.

    Equals (d f/d var)/f; the valuation part of f contributes nothing
    because value and partials carry it jointly (constant-slope
    families), matching the Iwasawa branch of log.
    """
    if f.value.is_zero():
        raise ZeroDivisionError("dlog of a family with value zero")
    return f.partial(var) / f.value


def specialize_parallel(jet, parallel_var, component_vars):
    """Restrict to the parallel-weight line: all listed variables move
    together, so their partials add into the single parallel variable."""
    total = jet.value.same_zero()
    parts = dict(jet.partials)
    for var in component_vars:
        d = parts.pop(var, None)
        if d is not None:
            total = total + d
    if parallel_var in parts:
        total = total + parts.pop(parallel_var)
    parts[parallel_var] = total
    bp = {v: k for v, k in jet.basepoint.items() if v not in set(component_vars)}
    values = {jet.basepoint[v] for v in component_vars if v in jet.basepoint}
    if len(values) > 1:
        raise JetError("parallel specialization needs a common basepoint weight")
    if values:
        bp[parallel_var] = values.pop()
    return WeightJet(jet.value, parts, bp)


class ExponentialFamily:
    """Closed-form family  base * prod_v unit^(c_v (k_v - kbar_v)).

    The only family shape used by the cross-check machinery: its jet is
    exact (partial_v = base * c_v * log unit) and it can be evaluated
    at shifted integer weights, which makes finite differences an
    independent oracle for every dlog in the package.
    """

    def __init__(self, base, unit, exponents, basepoint):
        if unit.is_zero() or unit.valuation != 0:
            raise JetError("family unit must be a principal unit")
        if not (unit - 1).is_zero() and (unit - 1).valuation < 1:
            raise JetError("family unit must be congruent to 1 mod p")
        self.base = base
        self.unit = unit
        self.exponents = dict(exponents)
        self.basepoint = dict(basepoint)

    def jet(self):
        logu = iwasawa_log(self.unit)
        # zero exponents keep an explicit zero partial: the family still
        # depends on the variable, with derivative zero
        parts = {
            var: self.base * (c * logu) for var, c in self.exponents.items()
        }
        return WeightJet(self.base, parts, self.basepoint)

    def value_at(self, shifts):
        """Exact value at basepoint + shifts (integer shifts only)."""
        acc = self.base
        for var, h in shifts.items():
            c = self.exponents.get(var, 0)
            if c and h:
                acc = acc * self.unit ** (c * h)
        return acc

    def centered_difference(self, var, step):
        """(f(k + step e_var) - f(k - step e_var)) / (2 step)."""
        plus = self.value_at({var: step})
        minus = self.value_at({var: -step})
        return (plus - minus) / (2 * step)
