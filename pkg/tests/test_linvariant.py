"""L-invariant formulas: rank one, Steinberg, twists, adjoint, general."""

import random
from fractions import Fraction

import pytest

from padiclinv import (
    ExponentialFamily,
    IotaMatrices,
    LinvariantError,
    PadicScalar,
    WeightJet,
    adjoint_iota_wiring,
    assemble_report,
    dlog,
    iwasawa_log,
    linv_adjoint_gsp4,
    linv_general,
    linv_rank_one,
    linv_standard_twists,
    linv_steinberg_spin,
)

P = 5
N = 20
UNIT = 1 + P


def S(x):
    return PadicScalar.from_fraction(Fraction(x), P, N)


def expo(base, exponents, basepoint=None, unit=UNIT):
    return ExponentialFamily(S(base), S(unit), exponents, basepoint or {"k": 8})


LOGU = iwasawa_log(PadicScalar.from_integer(UNIT, P, N))


class TestRankOne:
    def test_exponential_ratio(self):
        gamma = S(UNIT)
        one = WeightJet.constant(S(1), {"T": 0})
        num = expo(1, {"T": 3}, {"T": 0}).jet()
        den = expo(1, {"T": 2}, {"T": 0}).jet()
        got = linv_rank_one(num, one, den, one, gamma)
        assert got == -(iwasawa_log(gamma) * S(Fraction(3, 2)))

    def test_constant_ratio_rejected(self):
        one = WeightJet.constant(S(1), {"T": 0})
        jet = expo(7, {"T": 1}, {"T": 0}).jet()
        with pytest.raises(LinvariantError, match="hypothesis"):
            linv_rank_one(jet, jet, jet, jet, S(UNIT))

    def test_denominator_only_zero_rejected(self):
        one = WeightJet.constant(S(1), {"T": 0})
        num = expo(1, {"T": 2}, {"T": 0}).jet()
        with pytest.raises(LinvariantError):
            linv_rank_one(num, one, one, one, S(UNIT))


class TestSteinbergSpin:
    def test_constant_family_gives_zero(self):
        jet = WeightJet(S(3), {"k": PadicScalar.zero(P, N)}, {"k": 8})
        assert linv_steinberg_spin(jet, 1).is_zero()

    def test_exponential_family(self):
        jet = expo(3, {"k": 2}).jet()
        assert linv_steinberg_spin(jet, 1) == -(2 * LOGU)

    def test_inertia_degree_halves(self):
        jet = expo(3, {"k": 2}).jet()
        assert linv_steinberg_spin(jet, 2) == -LOGU

    def test_missing_variable_rejected(self):
        jet = WeightJet.constant(S(3), {"k": 8})
        with pytest.raises(LinvariantError, match="partial"):
            linv_steinberg_spin(jet, 1)


class TestStandardTwists:
    def test_s1_reduces_to_spin_formula(self):
        rng = random.Random(17)
        for _ in range(30):
            c = rng.randint(-9, 9)
            base = rng.randint(1, 200)
            if base % P == 0:
                continue
            f = rng.choice((1, 2))
            jets = [expo(base, {"k": c}).jet(), expo(7, {"k": 1}).jet()]
            assert linv_standard_twists(jets, f, 1, 2, parallel_weight=30) == (
                linv_steinberg_spin(jets[0], f)
            )

    def test_boundary_monomial(self):
        # g = 3, s = 2: monomial beta_2 beta_3^{-2}
        jets = [
            expo(3, {"k": 2}).jet(),
            WeightJet.constant(S(7), {"k": 8}),
            expo(11, {"k": 1}).jet(),
        ]
        got = linv_standard_twists(jets, 1, 2, 3)
        # dlog(beta_2 beta_3^-2) = 0 - 2 * log u
        assert got == 2 * LOGU

    def test_middle_range(self):
        # g = 4, s = 2: beta_1 / beta_2
        jets = [
            expo(3, {"k": 5}).jet(),
            expo(7, {"k": 2}).jet(),
            expo(11, {"k": 1}).jet(),
            expo(13, {"k": 1}).jet(),
        ]
        got = linv_standard_twists(jets, 1, 2, 4)
        assert got == -(5 - 2) * LOGU

    def test_all_constant_gives_zero(self):
        jets = [WeightJet(S(3), {"k": PadicScalar.zero(P, N)}, {"k": 8})] * 3
        assert linv_standard_twists(jets, 2, 2, 3).is_zero()

    def test_range_errors(self):
        jets = [expo(3, {"k": 1}).jet()] * 3
        with pytest.raises(LinvariantError, match="range"):
            linv_standard_twists(jets, 1, 3, 3)
        with pytest.raises(LinvariantError, match="critical"):
            linv_standard_twists(jets, 1, 2, 3, parallel_weight=5)


class TestAdjoint:
    def test_single_prime_determinant(self):
        f1 = expo(2, {"k1": 1, "k2": 2}, {"k1": 3, "k2": 4}).jet()
        f2 = expo(7, {"k1": 3, "k2": 5}, {"k1": 3, "k2": 4}).jet()
        got = linv_adjoint_gsp4([(f1, f2)], [1], [("k1", "k2")])
        assert got == 2 * (1 * 5 - 2 * 3) * LOGU * LOGU

    def test_variable_free_family_is_singular(self):
        f1 = WeightJet.constant(S(2), {"k1": 3, "k2": 4})
        f2 = expo(7, {"k1": 3, "k2": 5}, {"k1": 3, "k2": 4}).jet()
        with pytest.raises(LinvariantError, match="[Ss]ingular"):
            linv_adjoint_gsp4([(f1, f2)], [1], [("k1", "k2")])

    def test_block_diagonal_factors(self):
        rng = random.Random(23)
        for _ in range(10):
            pairs = []
            var_pairs = []
            fs = []
            singles = []
            for i in range(2):
                while True:
                    c = [[rng.randint(-5, 5) for _ in range(2)] for _ in range(2)]
                    if c[0][0] * c[1][1] != c[0][1] * c[1][0]:
                        break
                v1, v2 = f"k{i}_1", f"k{i}_2"
                bp = {v1: 3, v2: 4}
                f1 = expo(2, {v1: c[0][0], v2: c[0][1]}, bp).jet()
                f2 = expo(7, {v1: c[1][0], v2: c[1][1]}, bp).jet()
                pairs.append((f1, f2))
                var_pairs.append((v1, v2))
                f = rng.choice((1, 2))
                fs.append(f)
                singles.append(
                    linv_adjoint_gsp4([(f1, f2)], [f], [(v1, v2)])
                )
            total = linv_adjoint_gsp4(pairs, fs, var_pairs)
            assert total == singles[0] * singles[1]


class TestGeneralDeterminant:
    def test_identity_composition(self):
        one = S(1)
        iotas = IotaMatrices(iota_f=[[one]], iota_c=[[one]])
        assert linv_general(iotas) == 1

    def test_one_dimensional_ratio(self):
        iotas = IotaMatrices(iota_f=[[S(6)]], iota_c=[[S(2)]])
        assert linv_general(iotas) == 3

    def test_singular_complement_rejected(self):
        iotas = IotaMatrices(
            iota_f=[[S(1)]], iota_c=[[PadicScalar.zero(P, N)]]
        )
        with pytest.raises(LinvariantError, match="one-dimensional"):
            linv_general(iotas)

    def test_adjoint_wiring_reproduces_direct_formula(self):
        rng = random.Random(5)
        for _ in range(25):
            t = rng.choice((1, 2))
            pairs, var_pairs, fs = [], [], []
            for i in range(t):
                v1, v2 = f"k{i}_1", f"k{i}_2"
                bp = {}
                for j in range(t):
                    bp[f"k{j}_1"] = 3
                    bp[f"k{j}_2"] = 4
                c = [[rng.randint(-4, 4) for _ in range(2 * t)] for _ in range(2)]
                all_vars = [f"k{j}_{a}" for j in range(t) for a in (1, 2)]
                f1 = expo(2, dict(zip(all_vars, c[0])), bp).jet()
                f2 = expo(7, dict(zip(all_vars, c[1])), bp).jet()
                pairs.append((f1, f2))
                var_pairs.append((v1, v2))
                fs.append(rng.choice((1, 2)))
            wiring = adjoint_iota_wiring(pairs, fs, var_pairs)
            try:
                direct = linv_adjoint_gsp4(pairs, fs, var_pairs)
            except LinvariantError:
                continue
            assert linv_general(wiring) == direct

    def test_per_prime_complement_determinant(self):
        # the complementary block determinant must be f^2/2, computed
        from padiclinv import linalg

        for f in (1, 2):
            jet = expo(2, {"k0_1": 1, "k0_2": 1}, {"k0_1": 3, "k0_2": 4}).jet()
            wiring = adjoint_iota_wiring([(jet, jet)], [f], [("k0_1", "k0_2")])
            det = linalg.determinant(wiring.iota_c)
            assert det == S(Fraction(f * f, 2))


class TestScaleInvariance:
    def test_constant_unit_and_p_power_scaling(self):
        rng = random.Random(29)
        for _ in range(30):
            c = rng.randint(-9, 9)
            jet = expo(3, {"k": c}).jet()
            base = linv_steinberg_spin(jet, 1)
            scale = WeightJet.constant(S(rng.randint(1, 50) * P + 1), {"k": 8})
            assert linv_steinberg_spin(jet * scale, 1) == base
            p_power = WeightJet.constant(
                PadicScalar.p_power(P, rng.randint(-2, 3), N), {"k": 8}
            )
            assert linv_steinberg_spin(jet * p_power, 1) == base


class TestAssembleReport:
    def test_two_steinberg_primes(self):
        ell1 = S(3)
        ell2 = S(7)
        rep = assemble_report(
            P, N, {"P1": ell1, "P2": ell2}, {"P1": 1, "P2": 1}, 0
        )
        assert rep.status == "complete"
        assert rep.total == 21
        assert rep.spherical_status == "one"

    def test_spherical_partial(self):
        rep = assemble_report(P, N, {"P1": S(3)}, {"P1": 1, "P2": 1}, 1)
        assert rep.status == "partial"
        assert rep.spherical_status.startswith("unsupported")

    def test_no_trivial_zeros(self):
        rep = assemble_report(P, N, {}, {"P1": 0}, 0)
        assert rep.status == "not-applicable"
        assert rep.total == 1
        assert "not applicable" in rep.note
