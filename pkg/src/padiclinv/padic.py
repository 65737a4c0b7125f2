"""Exact p-adic arithmetic with capped absolute precision.

Scalars live in Q_p, extension elements in the unramified extension of
degree f.  Every value carries an absolute precision N ("known modulo
p^N") and arithmetic never reports more precision than the inputs
justify.  The zero element is representable only as "zero to precision
N"; its valuation is an infinity marker carrying that precision.

The Iwasawa branch of the logarithm (log p = 0) and the Teichmuller
decomposition are implemented here because every logarithmic-derivative
formula downstream reduces to them.

Values are immutable after construction; sharing them across threads
and mapping over independent computations in parallel is safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

DEFAULT_PRECISION = 20


class PadicError(ArithmeticError):
    """Base class for arithmetic failures in this package."""


@dataclass(frozen=True)
class ZeroValuation:
    """Valuation of "zero to precision N": larger than every integer."""

    precision: int

    def __gt__(self, other):
        if isinstance(other, int):
            return True
        if isinstance(other, ZeroValuation):
            return self.precision > other.precision
        return NotImplemented

    def __ge__(self, other):
        if isinstance(other, int):
            return True
        if isinstance(other, ZeroValuation):
            return self.precision >= other.precision
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, (int, ZeroValuation)):
            return not self.__ge__(other)
        return NotImplemented

    def __le__(self, other):
        if isinstance(other, (int, ZeroValuation)):
            return not self.__gt__(other)
        return NotImplemented


def _int_valuation(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of exact zero is undefined")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


class PadicScalar:
    """Element of Q_p known modulo p^N.

    Internally p^v * unit with the unit stored modulo p^(N - v); the
    pair (v, unit) is normalized so the unit is prime to p.  Zero to
    precision N is the distinguished state v = None.
    """

    __slots__ = ("p", "_v", "_unit", "N")

    def __init__(self, p, valuation, unit, precision):
        if p < 2:
            raise ValueError(f"prime must be >= 2, got {p}")
        # absolute precision may be <= 0 for deep-denominator elements
        self.p = p
        self.N = precision
        if valuation is None or valuation >= precision:
            self._v = None
            self._unit = 0
            return
        unit %= p ** (precision - valuation)
        if unit == 0:
            # the caller handed us p^v * (multiple of p^(N-v)): zero mod p^N
            self._v = None
            self._unit = 0
            return
        shift = _int_valuation(unit, p)
        if shift:
            valuation += shift
            if valuation >= precision:
                self._v = None
                self._unit = 0
                return
            unit = (unit // p**shift) % p ** (precision - valuation)
        self._v = valuation
        self._unit = unit

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, p, precision=DEFAULT_PRECISION):
        return cls(p, None, 0, precision)

    @classmethod
    def one(cls, p, precision=DEFAULT_PRECISION):
        return cls(p, 0, 1, precision)

    @classmethod
    def from_integer(cls, n, p, precision=DEFAULT_PRECISION):
        if n == 0:
            return cls.zero(p, precision)
        v = _int_valuation(n, p)
        return cls(p, v, n // p**v, precision)

    @classmethod
    def from_fraction(cls, fr, p, precision=DEFAULT_PRECISION):
        fr = Fraction(fr)
        if fr == 0:
            return cls.zero(p, precision)
        num, den = fr.numerator, fr.denominator
        vn = _int_valuation(num, p)
        vd = _int_valuation(den, p)
        v = vn - vd
        if v >= precision:
            return cls.zero(p, precision)
        modulus = p ** (precision - v)
        unit = (num // p**vn) * pow(den // p**vd, -1, modulus) % modulus
        return cls(p, v, unit, precision)

    @classmethod
    def p_power(cls, p, exponent, precision=DEFAULT_PRECISION):
        """p^exponent, exponent any integer (negative allowed)."""
        return cls(p, exponent, 1, exponent + precision)

    @classmethod
    def coerce(cls, value, p, precision=DEFAULT_PRECISION):
        if isinstance(value, PadicScalar):
            if value.p != p:
                raise ValueError(f"prime mismatch: {value.p} vs {p}")
            return value
        if isinstance(value, int):
            return cls.from_integer(value, p, precision)
        if isinstance(value, Fraction):
            return cls.from_fraction(value, p, precision)
        raise TypeError(f"cannot coerce {type(value).__name__} to PadicScalar")

    # -- inspection ------------------------------------------------------

    def is_zero(self):
        return self._v is None

    @property
    def valuation(self):
        if self._v is None:
            return ZeroValuation(self.N)
        return self._v

    @property
    def rel_precision(self):
        """Relative precision: number of known unit digits."""
        if self._v is None:
            return 0
        return self.N - self._v

    def unit_part(self):
        """The unit u with self = p^v * u, at full relative precision."""
        if self._v is None:
            raise PadicError("zero to working precision has no unit part")
        return PadicScalar(self.p, 0, self._unit, self.N - self._v)

    def unit_digits(self):
        """Base-p digits of the unit part, little-endian, length N - v."""
        if self._v is None:
            return []
        digits = []
        u = self._unit
        for _ in range(self.N - self._v):
            u, r = divmod(u, self.p)
            digits.append(r)
        return digits

    def residue(self):
        """Unit part modulo p.  Zero for the zero element."""
        return self._unit % self.p

    def as_fraction(self):
        """Exact rational representative p^v * unit."""
        if self._v is None:
            return Fraction(0)
        return Fraction(self._unit) * Fraction(self.p) ** self._v

    def lift(self):
        """Canonical integer representative modulo p^N (requires v >= 0)."""
        if self._v is None:
            return 0
        if self._v < 0:
            raise PadicError("negative valuation has no integer lift")
        return (self._unit * self.p**self._v) % self.p**self.N

    def at_precision(self, precision):
        """The same value truncated (never extended) to given precision."""
        if precision > self.N:
            raise PadicError(
                f"cannot extend precision {self.N} to {precision}"
            )
        return PadicScalar(self.p, self._v, self._unit, precision)

    # -- helpers shared with generic code ---------------------------------

    def same_zero(self, precision=None):
        return PadicScalar.zero(self.p, precision or self.N)

    def same_one(self, precision=None):
        return PadicScalar.one(self.p, precision or self.N)

    # -- arithmetic --------------------------------------------------------

    def _coerce_other(self, other):
        if isinstance(other, PadicScalar):
            if other.p != self.p:
                raise ValueError("prime mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return PadicScalar.coerce(other, self.p, self.N)
        return None

    def __add__(self, other):
        b = self._coerce_other(other)
        if b is None:
            return NotImplemented
        n = min(self.N, b.N)
        total = self.as_fraction() + b.as_fraction()
        if total == 0:
            return PadicScalar.zero(self.p, n)
        return PadicScalar.from_fraction(total, self.p, n)

    __radd__ = __add__

    def __neg__(self):
        return PadicScalar(self.p, self._v, -self._unit, self.N)

    def __sub__(self, other):
        b = self._coerce_other(other)
        if b is None:
            return NotImplemented
        return self + (-b)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        b = self._coerce_other(other)
        if b is None:
            return NotImplemented
        if self._v is None or b._v is None:
            # val(xy) >= val-bound(x) + val-bound(y)
            if self._v is None and b._v is None:
                n = self.N + b.N
            elif self._v is None:
                n = self.N + b._v
            else:
                n = b.N + self._v
            return PadicScalar.zero(self.p, n)
        n = min(self._v + b.N, b._v + self.N)
        return PadicScalar(self.p, self._v + b._v, self._unit * b._unit, n)

    __rmul__ = __mul__

    def inverse(self):
        if self._v is None:
            raise ZeroDivisionError("inverse of zero to working precision")
        r = self.N - self._v
        inv = pow(self._unit, -1, self.p**r)
        return PadicScalar(self.p, -self._v, inv, r - self._v)

    def __truediv__(self, other):
        b = self._coerce_other(other)
        if b is None:
            return NotImplemented
        if b._v is None:
            raise ZeroDivisionError("division by zero to working precision")
        if self._v is None:
            return PadicScalar.zero(self.p, self.N - b._v)
        return self * b.inverse()

    def __rtruediv__(self, other):
        b = self._coerce_other(other)
        if b is None:
            return NotImplemented
        return b / self

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = PadicScalar.one(self.p, self.N + (abs(self._v or 0)) * e + 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        b = self._coerce_other(other)
        if b is None:
            return NotImplemented
        return (self - b).is_zero()

    __hash__ = None

    def __repr__(self):
        if self._v is None:
            return f"O({self.p}^{self.N})"
        return f"{self._unit}*{self.p}^{self._v} + O({self.p}^{self.N})"


# -- residue-field polynomial helpers (for the default defining polynomial) --


def _fp_polmul(a, b, p, modpoly):
    f = len(modpoly) - 1
    acc = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                acc[i + j] = (acc[i + j] + ai * bj) % p
    for k in range(len(acc) - 1, f - 1, -1):
        c = acc[k]
        if c:
            acc[k] = 0
            for j in range(f):
                acc[k - f + j] = (acc[k - f + j] - c * modpoly[j]) % p
    acc = acc[:f]
    return acc + [0] * (f - len(acc))

def _fp_polpow(a, e, p, modpoly):
    f = len(modpoly) - 1
    result = [1] + [0] * (f - 1)
    base = list(a)
    while e:
        if e & 1:
            result = _fp_polmul(result, base, p, modpoly)
        e >>= 1
        if e:
            base = _fp_polmul(base, base, p, modpoly)
    return result


def _is_irreducible_mod_p(poly, p):
    f = len(poly) - 1
    if f == 1:
        return True
    x = [0, 1] + [0] * (f - 2)
    xq = _fp_polpow(x, p**f, p, poly)
    if xq != x:
        return False
    for ell in {q for q in range(2, f + 1) if f % q == 0 and all(q % r for r in range(2, q))}:
        xe = _fp_polpow(x, p ** (f // ell), p, poly)
        if xe == x:
            return False
    return True


def _is_primitive_mod_p(poly, p):
    f = len(poly) - 1
    order = p**f - 1
    factors = set()
    m = order
    d = 2
    while d * d <= m:
        if m % d == 0:
            factors.add(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        factors.add(m)
    if f == 1:
        g = (-poly[0]) % p
        return all(pow(g, order // ell, p) != 1 for ell in factors)
    x = ([0, 1] + [0] * (f - 2))[:f]
    return all(_fp_polpow(x, order // ell, p, poly) != ([1] + [0] * (f - 1)) for ell in factors)


def default_modulus(p, f):
    """Smallest monic primitive polynomial of degree f over F_p.

    "Smallest" orders the non-leading coefficients (a_0, ..., a_{f-1})
    by their base-p value; the choice is recorded in reports so runs
    are reproducible.  For large q = p^f supply the polynomial yourself
    (the search factors q - 1).
    """
    for code in range(p**f):
        coeffs = []
        c = code
        for _ in range(f):
            c, r = divmod(c, p)
            coeffs.append(r)
        poly = coeffs + [1]
        if poly[0] == 0:
            continue
        if _is_irreducible_mod_p(poly, p) and _is_primitive_mod_p(poly, p):
            return poly
    raise ValueError(f"no primitive polynomial of degree {f} over F_{p}")


class UnramifiedField:
    """The unramified extension of Q_p of degree f.

    Defined by a user-supplied monic polynomial of degree f over Z that
    is irreducible modulo p; the canonical lift of the residue basis
    1, x, ..., x^(f-1) is the working basis.  Ramified fields are
    rejected by construction (the degree equals the inertia degree).
    """

    def __init__(self, p, f, modulus=None):
        if f < 1:
            raise ValueError(f"degree must be >= 1, got {f}")
        if modulus is None:
            modulus = default_modulus(p, f)
        modulus = [c % p for c in modulus[:-1]] + [modulus[-1]]
        if len(modulus) != f + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree f")
        if not _is_irreducible_mod_p(modulus[:-1] + [1], p):
            raise ValueError("modulus is reducible modulo p")
        self.p = p
        self.f = f
        self.modulus = tuple(modulus)
        self._frob_cache = {}

    def __eq__(self, other):
        return (
            isinstance(other, UnramifiedField)
            and (self.p, self.f, self.modulus) == (other.p, other.f, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.f, self.modulus))

    def __repr__(self):
        return f"UnramifiedField(p={self.p}, f={self.f}, modulus={list(self.modulus)})"

    @property
    def residue_cardinality(self):
        return self.p**self.f

    # -- element constructors -------------------------------------------

    def zero(self, precision=DEFAULT_PRECISION):
        return UnramExtElement(self, None, (0,) * self.f, precision)

    def one(self, precision=DEFAULT_PRECISION):
        return UnramExtElement(self, 0, (1,) + (0,) * (self.f - 1), precision)

    def generator(self, precision=DEFAULT_PRECISION):
        if self.f == 1:
            return UnramExtElement(self, 0, ((-self.modulus[0]) % self.p,), precision)
        return UnramExtElement(self, 0, (0, 1) + (0,) * (self.f - 2), precision)

    def from_coefficients(self, coeffs, precision=DEFAULT_PRECISION):
        """Element from f coefficients (ints, Fractions or PadicScalars)."""
        if len(coeffs) != self.f:
            raise ValueError(f"expected {self.f} coefficients, got {len(coeffs)}")
        n = precision
        fracs = []
        for c in coeffs:
            if isinstance(c, PadicScalar):
                if c.p != self.p:
                    raise ValueError("prime mismatch")
                n = min(n, c.N)
                fracs.append(c.as_fraction())
            elif isinstance(c, (int, Fraction)):
                fracs.append(Fraction(c))
            else:
                raise TypeError(f"bad coefficient type {type(c).__name__}")
        if all(c == 0 for c in fracs):
            return self.zero(n)
        shift = min(
            _int_valuation(c.numerator, self.p) - _int_valuation(c.denominator, self.p)
            for c in fracs
            if c != 0
        )
        shift = min(shift, 0)
        modulus = self.p ** (n - shift)
        ints = []
        for c in fracs:
            c = c * Fraction(self.p) ** (-shift)
            den = c.denominator
            if den % self.p == 0:
                raise PadicError("inconsistent coefficient valuations")
            ints.append(c.numerator * pow(den, -1, modulus) % modulus)
        return UnramExtElement(self, shift, tuple(ints), n)

    def embed(self, scalar, precision=DEFAULT_PRECISION):
        """Q_p into the extension (Frobenius fixes the image)."""
        if isinstance(scalar, PadicScalar):
            if scalar.p != self.p:
                raise ValueError("prime mismatch")
            if scalar.is_zero():
                return self.zero(scalar.N)
            return UnramExtElement(
                self, scalar._v, (scalar._unit,) + (0,) * (self.f - 1), scalar.N
            )
        return self.embed(PadicScalar.coerce(scalar, self.p, precision))

    def coerce(self, value, precision=DEFAULT_PRECISION):
        if isinstance(value, UnramExtElement):
            if value.field != self:
                raise ValueError("field mismatch")
            return value
        return self.embed(value, precision)

    # -- Frobenius -------------------------------------------------------

    def frobenius_generator_image(self, precision):
        """Root of the modulus congruent to gen^p, by Newton iteration."""
        if self.f == 1:
            return self.generator(precision)
        cached = self._frob_cache.get(precision)
        if cached is not None:
            return cached
        g = self.generator(precision)
        r = g**self.p
        poly = list(self.modulus)
        dpoly = [i * poly[i] for i in range(1, len(poly))]
        # quadratic convergence: residue agreement doubles each step
        known = 1
        while known < precision:
            val = _ext_polyval(poly, r)
            dval = _ext_polyval(dpoly, r)
            r = r - val / dval
            known *= 2
        self._frob_cache[precision] = r
        return r


def _ext_polyval(int_coeffs, x):
    acc = x.field.zero(x.precision_cap())
    for c in reversed(int_coeffs):
        acc = acc * x + x.field.embed(PadicScalar.from_integer(c, x.field.p, x.precision_cap()))
    return acc


class UnramExtElement:
    """Element of the unramified degree-f extension, known mod p^N.

    Stored as p^s times an integer coefficient vector with respect to
    the canonical lift of the residue basis; the vector is normalized
    so some coefficient is a unit (the basis is integral with unit
    discriminant, so the element's valuation equals s).  Zero to
    precision N is the distinguished state s = None.
    """

    __slots__ = ("field", "_shift", "_vec", "N")

    def __init__(self, field, shift, vec, precision):
        self.field = field
        self.N = precision
        p = field.p
        if shift is None or shift >= precision:
            self._shift = None
            self._vec = (0,) * field.f
            return
        modulus = p ** (precision - shift)
        vec = [c % modulus for c in vec]
        if all(c == 0 for c in vec):
            self._shift = None
            self._vec = (0,) * field.f
            return
        extra = min(_int_valuation(c, p) for c in vec if c)
        if extra:
            shift += extra
            if shift >= precision:
                self._shift = None
                self._vec = (0,) * field.f
                return
            modulus = p ** (precision - shift)
            vec = [(c // p**extra) % modulus for c in vec]
        self._shift = shift
        self._vec = tuple(vec)

    def precision_cap(self):
        return self.N

    @property
    def p(self):
        return self.field.p

    def is_zero(self):
        return self._shift is None

    @property
    def valuation(self):
        if self._shift is None:
            return ZeroValuation(self.N)
        return self._shift

    @property
    def rel_precision(self):
        if self._shift is None:
            return 0
        return self.N - self._shift

    @property
    def coefficients(self):
        """Coefficients as PadicScalars at the element's precision."""
        if self._shift is None:
            return tuple(PadicScalar.zero(self.p, self.N) for _ in range(self.field.f))
        return tuple(
            PadicScalar.from_integer(c, self.p, self.N - self._shift)
            * PadicScalar.p_power(self.p, self._shift, self.N - self._shift)
            if c
            else PadicScalar.zero(self.p, self.N)
            for c in self._vec
        )

    def scalar_coefficient(self):
        """The Q_p coefficient when the element lies in the base field."""
        if self._shift is None:
            return PadicScalar.zero(self.p, self.N)
        if any(c for c in self._vec[1:]):
            raise PadicError("element does not lie in Q_p to working precision")
        return PadicScalar(self.p, self._shift, self._vec[0], self.N)

    def same_zero(self, precision=None):
        return self.field.zero(precision or self.N)

    def same_one(self, precision=None):
        return self.field.one(precision or self.N)

    def at_precision(self, precision):
        if precision > self.N:
            raise PadicError(f"cannot extend precision {self.N} to {precision}")
        return UnramExtElement(self.field, self._shift, self._vec, precision)

    def shift(self, k):
        """Multiply by p^k exactly (any integer k)."""
        if self._shift is None:
            return self.field.zero(self.N + k)
        return UnramExtElement(self.field, self._shift + k, self._vec, self.N + k)

    def unit_vector(self):
        """The unit part as an element of valuation zero."""
        if self._shift is None:
            raise PadicError("zero to working precision has no unit part")
        return UnramExtElement(self.field, 0, self._vec, self.N - self._shift)

    # -- arithmetic ------------------------------------------------------

    def _coerce_other(self, other):
        if isinstance(other, UnramExtElement):
            if other.field != self.field:
                raise ValueError("field mismatch")
            return other
        if isinstance(other, (int, Fraction, PadicScalar)):
            return self.field.embed(other, self.N)
        return None

    def __add__(self, other):
        b = self._coerce_other(other)
        if b is None:
            return NotImplemented
        n = min(self.N, b.N)
        if self._shift is None and b._shift is None:
            return self.field.zero(n)
        if self._shift is None:
            return b.at_precision(n)
        if b._shift is None:
            return self.at_precision(n)
        s = min(self._shift, b._shift)
        pa = self.p ** (self._shift - s)
        pb = self.p ** (b._shift - s)
        vec = tuple(x * pa + y * pb for x, y in zip(self._vec, b._vec))
        return UnramExtElement(self.field, s, vec, n)

    __radd__ = __add__

    def __neg__(self):
        return UnramExtElement(self.field, self._shift, tuple(-c for c in self._vec), self.N)

    def __sub__(self, other):
        b = self._coerce_other(other)
        if b is None:
            return NotImplemented
        return self + (-b)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        b = self._coerce_other(other)
        if b is None:
            return NotImplemented
        if self._shift is None or b._shift is None:
            if self._shift is None and b._shift is None:
                n = self.N + b.N
            elif self._shift is None:
                n = self.N + b._shift
            else:
                n = b.N + self._shift
            return self.field.zero(n)
        n = min(self._shift + b.N, b._shift + self.N)
        s = self._shift + b._shift
        modulus = self.p ** (n - s)
        f = self.field.f
        acc = [0] * (2 * f - 1)
        for i, ai in enumerate(self._vec):
            ai %= modulus
            if ai:
                for j, bj in enumerate(b._vec):
                    acc[i + j] = (acc[i + j] + ai * bj) % modulus
        mod = self.field.modulus
        for k in range(2 * f - 2, f - 1, -1):
            c = acc[k]
            if c:
                acc[k] = 0
                for j in range(f):
                    acc[k - f + j] = (acc[k - f + j] - c * mod[j]) % modulus
        return UnramExtElement(self.field, s, tuple(acc[:f]), n)

    __rmul__ = __mul__

    def inverse(self):
        if self._shift is None:
            raise ZeroDivisionError("inverse of zero to working precision")
        v = self._shift
        r = self.N - v
        f = self.field.f
        if f == 1:
            inv_vec = (pow(self._vec[0], -1, self.p**r),)
        else:
            inv_vec = self._invert_unit_vec(r)
        return UnramExtElement(self.field, -v, inv_vec, r - v)

    def _invert_unit_vec(self, r):
        # invert in the residue field, then Hensel-lift doubling precision
        p = self.p
        modpoly = [c % p for c in self.field.modulus]
        unit = UnramExtElement(self.field, 0, self._vec, r)
        cur = UnramExtElement(self.field, 0, tuple(_fp_polinv([c % p for c in self._vec], p, modpoly)), 1)
        known = 1
        while known < r:
            known = min(2 * known, r)
            lifted = UnramExtElement(self.field, cur._shift, cur._vec, known)
            cur = lifted * (2 - unit.at_precision(known) * lifted)
        assert cur._shift == 0
        return cur._vec

    def __truediv__(self, other):
        b = self._coerce_other(other)
        if b is None:
            return NotImplemented
        if b._shift is None:
            raise ZeroDivisionError("division by zero to working precision")
        if self._shift is None:
            return self.field.zero(self.N - b._shift)
        return self * b.inverse()

    def __rtruediv__(self, other):
        b = self._coerce_other(other)
        if b is None:
            return NotImplemented
        return b / self

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one(self.N + abs(self._shift or 0) * e + 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        b = self._coerce_other(other)
        if b is None:
            return NotImplemented
        return (self - b).is_zero()

    __hash__ = None

    def __repr__(self):
        if self._shift is None:
            return f"O({self.p}^{self.N})"
        return f"{self.p}^{self._shift}*{list(self._vec)} + O({self.p}^{self.N})"

    # -- Galois structure --------------------------------------------------

    def frobenius(self):
        """Lift of the p-power map on the residue field; fixes Q_p."""
        if self.field.f == 1 or self._shift is None:
            return self
        r = self.N - self._shift
        image = self.field.frobenius_generator_image(r)
        acc = self.field.zero(r)
        power = self.field.one(r)
        for c in self._vec:
            acc = acc + power * self.field.embed(
                PadicScalar.from_integer(c, self.p, r)
            )
            power = power * image
        return acc.shift(self._shift)

    def norm_to_base(self):
        """Norm down to Q_p: product of the f Frobenius conjugates."""
        acc = self
        cur = self
        for _ in range(self.field.f - 1):
            cur = cur.frobenius()
            acc = acc * cur
        return acc.scalar_coefficient()


def _fp_polinv(a, p, modpoly):
    """Inverse in F_p[x]/(modpoly) by extended Euclid."""
    f = len(modpoly) - 1

    def degree(u):
        for i in range(len(u) - 1, -1, -1):
            if u[i] % p:
                return i
        return -1

    r0, r1 = list(modpoly), list(a) + [0]
    t0, t1 = [0] * (f + 1), [1] + [0] * f
    while degree(r1) > 0:
        d0, d1 = degree(r0), degree(r1)
        if d0 < d1:
            r0, r1, t0, t1 = r1, r0, t1, t0
            continue
        factor = r0[degree(r0)] * pow(r1[degree(r1)], -1, p) % p
        shift = d0 - d1
        for i in range(d1 + 1):
            r0[i + shift] = (r0[i + shift] - factor * r1[i]) % p
            t0[i + shift] = (t0[i + shift] - factor * t1[i]) % p
        if degree(r0) < degree(r1):
            r0, r1, t0, t1 = r1, r0, t1, t0
    if degree(r1) < 0:
        raise ZeroDivisionError("not a unit in the residue field")
    c = pow(r1[0], -1, p)
    return [(c * t) % p for t in t1[:f]]


# -- module-level operations ---------------------------------------------


def valuation(x):
    """p-adic valuation; an infinity marker carrying N for zero."""
    return x.valuation


def teichmuller_lift(x):
    """The root of unity of order dividing q - 1 congruent to x mod p.

    Obtained as the limit of x -> x^q; each step adds a digit of
    agreement, so N iterations suffice at precision N.
    """
    if isinstance(x, PadicScalar):
        if x.is_zero() or x._v != 0:
            raise PadicError("Teichmuller lift requires a unit")
        q = x.p
        modulus = x.p**x.N
        a = x.lift()
        for _ in range(x.N):
            b = pow(a, q, modulus)
            if b == a:
                break
            a = b
        return PadicScalar(x.p, 0, a, x.N)
    if isinstance(x, UnramExtElement):
        if x.is_zero() or x.valuation != 0:
            raise PadicError("Teichmuller lift requires a unit")
        q = x.field.residue_cardinality
        a = x
        for _ in range(x.N):
            b = a**q
            if b == a:
                break
            a = b
        return a
    raise TypeError(f"unsupported type {type(x).__name__}")


def iwasawa_log(x):
    """p-adic logarithm with the branch log p = 0.

    Strips the valuation and the Teichmuller part, then sums the
    series log(1 + y) on the principal-unit part.  Truncation is sound:
    the k-th term has valuation k*val(y) - val(k), which exceeds the
    working precision for all k past the computed bound.
    """
    if isinstance(x, (PadicScalar, UnramExtElement)):
        if x.is_zero():
            raise PadicError("logarithm of zero to working precision")
    else:
        raise TypeError(f"unsupported type {type(x).__name__}")
    unit = x.unit_part() if isinstance(x, PadicScalar) else x.shift(-x.valuation)
    omega = teichmuller_lift(unit)
    y = unit / omega - 1
    if y.is_zero():
        return y.same_zero()
    r = y.N
    m = y.valuation
    # k*m - log2(k) >= r for all k > bound
    bound = r // m + 1
    while bound * m - (bound.bit_length()) < r:
        bound += 1
    acc = y.same_zero(r)
    power = y
    for k in range(1, bound + 1):
        term = power / k
        acc = acc + (term if k % 2 else -term)
        if k < bound:
            power = power * y
    return acc


def frobenius(x):
    """Frobenius of the unramified extension; the identity on Q_p."""
    if isinstance(x, PadicScalar):
        return x
    if isinstance(x, UnramExtElement):
        return x.frobenius()
    raise TypeError(f"unsupported type {type(x).__name__}")
