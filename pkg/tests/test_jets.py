"""Weight-jet arithmetic and logarithmic derivatives."""

from fractions import Fraction

import pytest

from padiclinv import (
    ExponentialFamily,
    JetError,
    PadicScalar,
    WeightJet,
    dlog,
    iwasawa_log,
    jet_arith,
    specialize_parallel,
)

P = 5
N = 20


def S(x, precision=N):
    return PadicScalar.from_fraction(Fraction(x), P, precision)


def fam(base, unit, exponents, basepoint=None):
    return ExponentialFamily(S(base), S(unit), exponents, basepoint or {"k": 6})


def test_product_with_constant():
    a = WeightJet(S(3), {"k": S(1)}, {"k": 6})
    b = WeightJet(S(2), {}, {"k": 6})
    prod = a * b
    assert prod.value == 6 and prod.partial("k") == 2


def test_self_division_is_constant_one():
    a = WeightJet(S(3), {"k": S(1)}, {"k": 6})
    q = a / a
    assert q.value == 1 and q.partial("k").is_zero()


def test_hand_product_rule():
    # (1+5, dk=5) * (1-5, dk=5): value 1-25, dk = 5(1-5) + 5(1+5) = 10
    a = WeightJet(S(6), {"k": S(5)}, {"k": 0})
    b = WeightJet(S(-4), {"k": S(5)}, {"k": 0})
    prod = a * b
    assert prod.value == -24 and prod.partial("k") == 10


def test_basepoint_mismatch_rejected():
    a = WeightJet(S(1), {}, {"k": 6})
    b = WeightJet(S(1), {}, {"k": 7})
    with pytest.raises(JetError):
        _ = a + b


def test_division_by_zero_value_rejected():
    a = WeightJet(S(1), {}, {})
    z = WeightJet(PadicScalar.zero(P, N), {}, {})
    with pytest.raises(ZeroDivisionError):
        _ = a / z


def test_jet_arith_dispatch():
    a = WeightJet(S(3), {"k": S(2)}, {})
    b = WeightJet(S(4), {"k": S(1)}, {})
    assert jet_arith(a, b, "add").value == 7
    assert jet_arith(a, b, "sub").value == -1
    assert jet_arith(a, b, "mul").partial("k") == 2 * 4 + 3 * 1
    assert jet_arith(a, b, "div").value == Fraction(3, 4)
    with pytest.raises(JetError):
        jet_arith(a, b, "pow")


def test_dlog_constant_is_zero():
    assert dlog(WeightJet(S(3), {}, {}), "k").is_zero()


def test_dlog_exponential_family():
    # 3 * 6^(2(k - 6)): dlog = 2 log 6, from the power oracle
    j = fam(3, 6, {"k": 2}).jet()
    assert dlog(j, "k") == 2 * iwasawa_log(S(6))


def test_dlog_branch_invariance():
    j = fam(3, 6, {"k": 2}).jet()
    shifted = j * WeightJet(PadicScalar.p_power(P, 4, N), {}, {})
    assert dlog(shifted, "k") == dlog(j, "k")


def test_dlog_additivity_and_powers():
    a = fam(3, 6, {"k": 2}).jet()
    b = fam(7, 6, {"k": 5}).jet()
    assert dlog(a * b, "k") == dlog(a, "k") + dlog(b, "k")
    assert dlog(a / b, "k") == dlog(a, "k") - dlog(b, "k")
    assert dlog(a**3, "k") == 3 * dlog(a, "k")
    assert dlog(a ** (-2), "k") == -2 * dlog(a, "k")


def test_value_part_tracks_scalar_expression():
    a = fam(3, 6, {"k": 2}).jet()
    b = fam(7, 6, {"k": 5}).jet()
    expr = (a * b - a) / b
    assert expr.value == (S(3) * S(7) - S(3)) / S(7)


def test_finite_difference_consistency():
    # forward quotient at step p^m vs exact partial; unit chosen with
    # high-valuation log so the quadratic Taylor term stays below N - 2m
    m = 3
    unit = 1 + P**7
    family = ExponentialFamily(S(3), S(unit), {"k": 2}, {"k": 6})
    jet = family.jet()
    step = P**m
    forward = (family.value_at({"k": step}) - family.value_at({})) / step
    diff = forward - jet.partial("k")
    val = diff.N if diff.is_zero() else diff.valuation
    assert val >= N - 2 * m


def test_centered_difference_helper():
    family = fam(3, 1 + P**6, {"k": 1})
    fd = family.centered_difference("k", P**2)
    diff = fd - family.jet().partial("k")
    val = diff.N if diff.is_zero() else diff.valuation
    assert val >= N - 2 * 2


def test_specialize_parallel_sums_partials():
    log_unit = iwasawa_log(S(1 + P))
    family = ExponentialFamily(
        S(1), S(1 + P), {"k_P1_1": 2, "k_P1_2": 3}, {"k_P1_1": 4, "k_P1_2": 4}
    )
    par = specialize_parallel(family.jet(), "k", ["k_P1_1", "k_P1_2"])
    assert dlog(par, "k") == 5 * log_unit
    assert par.basepoint == {"k": 4}


def test_specialize_parallel_needs_common_weight():
    family = ExponentialFamily(
        S(1), S(1 + P), {"a": 1, "b": 1}, {"a": 3, "b": 4}
    )
    with pytest.raises(JetError):
        specialize_parallel(family.jet(), "k", ["a", "b"])
