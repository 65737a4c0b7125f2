"""Exact p-adic arithmetic: precision tracking, Iwasawa log, Frobenius.

Every value knows the modulus p^N it is correct to, and arithmetic
propagates those moduli honestly, so there is never a silently wrong
digit.  Run with:  python3 demos/01_padic_arithmetic.py
"""

from fractions import Fraction

from padiclinv import (
    PadicScalar,
    UnramifiedField,
    frobenius,
    iwasawa_log,
    teichmuller_lift,
    valuation,
)

p, N = 5, 20

# --- scalars ---------------------------------------------------------------

x = PadicScalar.from_integer(50, p, N)
print("x = 50 in Q_5:", x)
print("valuation:", valuation(x))

# precision is tracked through every operation: multiplying by p^2 at
# lower precision caps the result where it must
y = PadicScalar.from_integer(25, p, 8)
print("50 * (25 known mod 5^8):", x * y)

# the zero element only exists "to precision N"
z = x - x
print("x - x:", z, "| valuation marker:", valuation(z))

# rationals embed exactly as long as you say how many digits you want
half = PadicScalar.from_fraction(Fraction(1, 2), p, N)
print("1/2 in Q_5:", half, "| check 2 * (1/2) == 1:", 2 * half == 1)

# --- Iwasawa logarithm -----------------------------------------------------

# branch log p = 0: the valuation part never contributes
u = PadicScalar.from_integer(6, p, N)
print("\nlog(6)     :", iwasawa_log(u))
print("log(6*5^3) :", iwasawa_log(u * PadicScalar.p_power(p, 3, N)))
print("log(5) == 0:", iwasawa_log(PadicScalar.from_integer(5, p, N)).is_zero())

# the Teichmuller part is stripped before the series; it is the unique
# (p-1)-st root of unity with the same residue
w = teichmuller_lift(PadicScalar.from_integer(2, p, N))
print("omega(2):", w, "| omega^4 == 1:", w**4 == 1)

# multiplicativity holds to the common working precision
a = PadicScalar.from_integer(11, p, N)
print("log(6*11) == log 6 + log 11:", iwasawa_log(u * a) == iwasawa_log(u) + iwasawa_log(a))

# --- the unramified quadratic extension of Q_5 ------------------------------

K = UnramifiedField(p, 2)
print("\ndefining polynomial (canonical lift):", list(K.modulus))
g = K.generator(N)

print("Frobenius fixes Q_p:", frobenius(K.embed(7)) == K.embed(7))
print("Frobenius^2 = id   :", frobenius(frobenius(g)) == g)

# on Teichmuller representatives Frobenius is literally the p-power map
om = teichmuller_lift(g)
print("frob(omega) == omega^5:", frobenius(om) == om**5)

nm = om.norm_to_base()
print("norm of a Teichmuller element is Teichmuller:", teichmuller_lift(nm) == nm)

print("log commutes with Frobenius:",
      frobenius(iwasawa_log(K.from_coefficients([6, 5], N)))
      == iwasawa_log(frobenius(K.from_coefficients([6, 5], N))))
