"""Core arithmetic: valuations, Iwasawa log, Teichmuller, Frobenius.

Derived expected values are computed by independent oracles (rational
series summation, residue arithmetic) before being asserted against the
library.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from padiclinv import (
    PadicError,
    PadicScalar,
    UnramifiedField,
    ZeroValuation,
    frobenius,
    iwasawa_log,
    teichmuller_lift,
    valuation,
)

P = 5
N = 20


def S(x, precision=N):
    return PadicScalar.from_fraction(Fraction(x), P, precision)


def log_series_oracle(y_fraction, p, precision, terms=64):
    """sum (-1)^(k+1) y^k / k as an exact rational, reduced mod p^precision."""
    total = sum(
        Fraction((-1) ** (k + 1)) * Fraction(y_fraction) ** k / k
        for k in range(1, terms + 1)
    )
    return PadicScalar.from_fraction(total, p, precision)


class TestValuation:
    def test_fifty_in_q5(self):
        assert valuation(S(50)) == 2

    def test_unit(self):
        assert valuation(S(1)) == 0

    def test_zero_carries_precision(self):
        v = valuation(PadicScalar.zero(P, 10))
        assert isinstance(v, ZeroValuation)
        assert v.precision == 10
        assert v > 10**9

    def test_negative(self):
        assert valuation(S(Fraction(1, 25))) == -2

    def test_additive(self):
        x, y = S(50), S(15)
        assert valuation(x * y) == valuation(x) + valuation(y)


class TestIwasawaLog:
    def test_log_p_is_zero(self):
        assert iwasawa_log(S(5)).is_zero()

    def test_log_one_is_zero(self):
        assert iwasawa_log(S(1)).is_zero()

    def test_log_six_series_oracle(self):
        # log 6 = log(1 + 5): the Teichmuller part of 6 is 1
        expected = log_series_oracle(5, P, 4)
        got = iwasawa_log(S(6))
        assert got.at_precision(4) == expected

    def test_log_of_zero_rejected(self):
        with pytest.raises(PadicError, match="zero"):
            iwasawa_log(PadicScalar.zero(P, N))

    def test_branch_invariance(self):
        u = S(7)
        for a in (-2, 1, 3):
            shifted = u * PadicScalar.p_power(P, a, N)
            assert iwasawa_log(shifted) == iwasawa_log(u)

    @given(
        a=st.integers(min_value=1, max_value=10**6).filter(lambda n: n % P),
        b=st.integers(min_value=1, max_value=10**6).filter(lambda n: n % P),
    )
    @settings(max_examples=60, deadline=None)
    def test_multiplicative(self, a, b):
        x, y = S(a), S(b)
        assert iwasawa_log(x * y) == iwasawa_log(x) + iwasawa_log(y)

    def test_precision_soundness(self):
        low = iwasawa_log(S(6, 8))
        high = iwasawa_log(S(6, 30))
        assert high.at_precision(low.N) == low


class TestTeichmuller:
    def test_of_one(self):
        assert teichmuller_lift(S(1)) == 1

    def test_of_two_mod_25(self):
        # oracle: one iteration of x -> x^5 already fixes mod 25
        assert pow(2, 5, 25) == 7
        w = teichmuller_lift(S(2))
        assert w.lift() % 25 == 7

    def test_root_of_unity(self):
        w = teichmuller_lift(S(2))
        assert (w ** (P - 1)) == 1

    def test_multiplicativity(self):
        # omega(4)^2 = omega(16 mod 5) = omega(1) = 1
        w4 = teichmuller_lift(S(4))
        assert w4 * w4 == 1

    def test_non_unit_rejected(self):
        with pytest.raises(PadicError):
            teichmuller_lift(S(10))


class TestPrecisionTracking:
    def test_product_precision(self):
        x = PadicScalar.from_integer(5, P, 10)  # v=1, N=10
        y = PadicScalar.from_integer(25, P, 8)  # v=2, N=8
        z = x * y
        assert z.valuation == 3
        assert z.N == min(1 + 8, 2 + 10)

    def test_zero_only_to_precision(self):
        z = S(1) - S(1)
        assert z.is_zero() and z.N == N

    def test_congruence_equality(self):
        assert S(1 + 5**6, 6) == S(1, 6)
        assert not (S(1 + 5**4, 6) == S(1, 6))

    def test_inverse_relative_precision(self):
        x = PadicScalar.from_integer(50, P, 12)
        inv = x.inverse()
        assert inv.valuation == -2
        assert x * inv == 1

    @given(st.integers(min_value=-10**5, max_value=10**5),
           st.integers(min_value=-10**5, max_value=10**5))
    @settings(max_examples=60, deadline=None)
    def test_ring_laws(self, a, b):
        x, y = S(a), S(b)
        assert x + y == a + b
        assert x * y == a * b
        assert x - y == a - b

    @given(st.integers(min_value=-10**4, max_value=10**4),
           st.integers(min_value=1, max_value=10**4))
    @settings(max_examples=60, deadline=None)
    def test_higher_precision_recompute_agrees(self, a, b):
        # soundness: redoing the computation with more working digits
        # agrees modulo the precision the low run reported
        low = (S(a, 8) + S(b, 8)) * S(b, 8) / S(b, 8)
        high = (S(a, 40) + S(b, 40)) * S(b, 40) / S(b, 40)
        assert high.at_precision(low.N) == low


class TestUnramifiedExtension:
    def setup_method(self):
        self.K = UnramifiedField(P, 2)

    def test_default_modulus_is_primitive(self):
        # residue generator must generate F_25^x: order 24
        assert self.K.modulus[-1] == 1
        assert len(self.K.modulus) == 3

    def test_frobenius_fixes_base(self):
        x = self.K.embed(S(7))
        assert frobenius(x) == x

    def test_frobenius_order(self):
        g = self.K.generator(N)
        assert frobenius(frobenius(g)) == g

    def test_frobenius_on_teichmuller_generator(self):
        # residue oracle: sigma acts as the p-power map on residues
        g = self.K.generator(12)
        w = teichmuller_lift(g)
        assert frobenius(w) == w**P

    def test_norm_of_teichmuller(self):
        w = teichmuller_lift(self.K.generator(12))
        nm = w.norm_to_base()
        assert teichmuller_lift(nm) == nm

    def test_field_arithmetic(self):
        g = self.K.generator(N)
        assert (g + 1) * (g - 1) == g * g - 1
        assert g / g == self.K.one(N)
        assert (g.inverse() * g) == 1

    def test_negative_valuation_elements(self):
        e = self.K.embed(PadicScalar.p_power(P, -1, 10))
        assert e.valuation == -1
        assert e * P == self.K.one(9)

    def test_log_commutes_with_frobenius(self):
        e = self.K.from_coefficients([6, 5], 16)
        assert frobenius(iwasawa_log(e)) == iwasawa_log(frobenius(e))

    def test_mixed_valuation_coefficients(self):
        m = self.K.from_coefficients([Fraction(1, 5), 1], 10)
        assert m.valuation == -1
        assert m * 5 == self.K.from_coefficients([1, 5], 10)

    def test_extension_teichmuller_frobenius_power(self):
        K3 = UnramifiedField(3, 3)
        w = teichmuller_lift(K3.generator(8))
        assert w ** (3**3 - 1) == 1
        assert frobenius(frobenius(frobenius(w))) == w


class TestCoefficientRoundTrip:
    def test_coefficients_property(self):
        K = UnramifiedField(P, 2)
        e = K.from_coefficients([S(7), S(10)], 12)
        coeffs = e.coefficients
        assert coeffs[0] == 7 and coeffs[1] == 10
        again = K.from_coefficients(list(coeffs), 12)
        assert again == e

    def test_scalar_coefficient_guard(self):
        K = UnramifiedField(P, 2)
        g = K.generator(10)
        with pytest.raises(PadicError):
            g.scalar_coefficient()
