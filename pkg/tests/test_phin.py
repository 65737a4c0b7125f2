"""(phi, N)-module validation, semilinear eigenspaces, filtration."""

from fractions import Fraction

import pytest

from padiclinv import (
    AttestationError,
    PadicScalar,
    PhiNModule,
    PhinError,
    PrecisionExhausted,
    RegularSubmodule,
    UnramifiedField,
    benois_filtration,
    check_regular,
    count_trivial_zeros,
    dual_module,
    is_semisimple_at,
    linearize_frobenius,
    phi_eigenvectors,
)
from padiclinv import linalg
from padiclinv.phin import fold_vector

P = 5
N = 20
HALF = Fraction(1, P)
K1 = UnramifiedField(P, 1)
K2 = UnramifiedField(P, 2)


def steinberg_module(c=3):
    # phi = diag(1/p, 1), N e2 = e1, Fil^0 the line through e2 + c e1
    return PhiNModule(
        K1,
        [[HALF, 0], [0, 1]],
        [[0, 1], [0, 0]],
        hodge_filtration=[(0, [[c, 1]])],
        precision=N,
    )


def crystalline_module():
    return PhiNModule(
        K1,
        [[2, 0], [0, 3]],
        [[0, 0], [0, 0]],
        hodge_filtration=[(0, [[0, 1]])],
        precision=N,
    )


class TestModuleValidation:
    def test_steinberg_valid(self):
        assert steinberg_module().validate()

    def test_monodromy_relation_rejected(self):
        # N e2 = e1 against phi = diag(1, 1/p): N phi != p phi N
        bad = PhiNModule(K1, [[1, 0], [0, HALF]], [[0, 1], [0, 0]], precision=N)
        with pytest.raises(PhinError, match="monodromy relation"):
            bad.validate()

    def test_non_nilpotent_rejected(self):
        bad = PhiNModule(K1, [[1, 0], [0, 1]], [[1, 0], [0, 1]], precision=N)
        with pytest.raises(PhinError, match="nilpotent"):
            bad.validate()

    def test_singular_frobenius_rejected(self):
        bad = PhiNModule(K1, [[1, 1], [1, 1]], [[0, 0], [0, 0]], precision=N)
        with pytest.raises(PhinError, match="singular"):
            bad.validate()

    def test_full_monodromy_three_dim_is_consistent(self):
        # the full Jordan chain with phi = diag(1/p, 1, p) satisfies the
        # relation; it is rejected later only through D-stability
        mod = PhiNModule(
            K1,
            [[HALF, 0, 0], [0, 1, 0], [0, 0, P]],
            [[0, 1, 0], [0, 0, 1], [0, 0, 0]],
            precision=N,
        )
        assert mod.validate()
        sub = RegularSubmodule.of(mod, [[1, 0, 0], [0, 0, 1]])
        assert not sub.n_stable


class TestLinearization:
    def test_degree_one_is_phi(self):
        mod = steinberg_module()
        lin = linearize_frobenius(mod)
        for got_row, exp_row in zip(lin, mod.phi):
            for a, b in zip(got_row, exp_row):
                assert a == b

    def test_degree_two_diagonal_squares(self):
        mod = PhiNModule(K2, [[2, 0], [0, 3]], [[0, 0], [0, 0]], precision=N)
        lin = linearize_frobenius(mod)
        assert lin[0][0] == 4 and lin[1][1] == 9
        assert lin[0][1].is_zero() and lin[1][0].is_zero()

    def test_degree_two_antidiagonal(self):
        c = 7
        mod = PhiNModule(K2, [[0, 1], [c, 0]], [[0, 0], [0, 0]], precision=N)
        lin = linearize_frobenius(mod)
        assert lin[0][0] == c and lin[1][1] == c
        assert lin[0][1].is_zero() and lin[1][0].is_zero()


class TestSemisimplicity:
    def test_diagonal_always_semisimple(self):
        mod = crystalline_module()
        for lam in (1, HALF, 2, 7):
            assert is_semisimple_at(mod, lam)

    def test_jordan_block_fails_at_its_eigenvalue(self):
        mod = PhiNModule(K1, [[1, 1], [0, 1]], [[0, 0], [0, 0]], precision=N)
        assert not is_semisimple_at(mod, 1)
        assert is_semisimple_at(mod, HALF)

    def test_steinberg_semisimple_at_both_targets(self):
        mod = steinberg_module()
        assert is_semisimple_at(mod, 1)
        assert is_semisimple_at(mod, HALF)


class TestRegularity:
    def test_degenerate_full_fil(self):
        mod = PhiNModule(
            K1,
            [[2, 0], [0, 3]],
            [[0, 0], [0, 0]],
            hodge_filtration=[(0, [[1, 0], [0, 1]])],
            precision=N,
        )
        assert check_regular(mod, RegularSubmodule.of(mod, []))

    def test_complementary_lines(self):
        mod = crystalline_module()
        assert check_regular(mod, RegularSubmodule.of(mod, [[1, 0]]))

    def test_non_transverse(self):
        mod = crystalline_module()
        assert not check_regular(mod, RegularSubmodule.of(mod, [[0, 1]]))


class TestEigenvectors:
    def test_steinberg_fixed_line(self):
        mod = steinberg_module()
        fixed = phi_eigenvectors(mod, mod.standard_basis(), 1)
        assert len(fixed) == 1
        v = fixed[0]
        assert v[0].is_zero() and not v[1].is_zero()

    def test_degree_two_fixed_space_is_qp_form(self):
        # phi = sigma on a 1-dim module: fixed vectors are Q_p multiples
        mod = PhiNModule(K2, [[1]], [[0]], precision=N)
        fixed = phi_eigenvectors(mod, mod.standard_basis(), 1)
        assert len(fixed) == 1


class TestFiltration:
    def test_steinberg_worked_example(self):
        mod = steinberg_module()
        sub = RegularSubmodule.of(mod, [[1, 0]])
        res = benois_filtration(mod, sub)
        assert (res.r, res.t1, res.trivial_zero_count) == (1, 0, 1)
        assert res.d_minus1 == []
        # D_1 is everything
        assert len(res.d_1) == 2
        assert linalg.subspace_eq(
            res.d_1, linalg.identity_matrix(2, PadicScalar.one(P, N))
        )
        assert res.variants_differ

    def test_printed_variant_differs_on_steinberg(self):
        mod = steinberg_module()
        sub = RegularSubmodule.of(mod, [[1, 0]])
        res = benois_filtration(mod, sub, variant="printed")
        assert res.r == 0

    def test_crystalline_trivial_filtration(self):
        mod = crystalline_module()
        sub = RegularSubmodule.of(mod, [[1, 0]])
        res = benois_filtration(mod, sub)
        assert (res.r, res.t1, res.trivial_zero_count) == (0, 0, 0)
        assert linalg.subspace_eq(res.d_minus1, res.d_0)
        assert linalg.subspace_eq(res.d_0, res.d_1)
        assert not res.variants_differ
        # idempotence: a re-run reproduces the same trivial filtration
        again = benois_filtration(mod, sub)
        for a, b in ((res.d_minus1, again.d_minus1), (res.d_1, again.d_1)):
            assert len(a) == len(b)
            for ra, rb in zip(a, b):
                assert all((x - y).is_zero() for x, y in zip(ra, rb))

    def test_three_dim_symmetric_square_style(self):
        mod = PhiNModule(
            K1,
            [[HALF, 0, 0], [0, 1, 0], [0, 0, P]],
            [[0, 1, 0], [0, 0, 0], [0, 0, 0]],
            hodge_filtration=[(0, [[0, 1, 0]])],
            precision=N,
        )
        sub = RegularSubmodule.of(mod, [[1, 0, 0], [0, 0, 1]])
        res = benois_filtration(mod, sub)
        assert res.trivial_zero_count == 1
        assert (res.r, res.t1) == (1, 0)

    def test_inertia_degree_two_steinberg(self):
        mod = PhiNModule(
            K2,
            [[HALF, 0], [0, 1]],
            [[0, 1], [0, 0]],
            hodge_filtration=[(0, [[1, 1]])],
            precision=N,
        )
        sub = RegularSubmodule.of(mod, [[1, 0]])
        res = benois_filtration(mod, sub)
        assert (res.r, res.t1, res.trivial_zero_count) == (1, 0, 1)

    def test_nesting(self):
        for mod, sub_basis in (
            (steinberg_module(), [[1, 0]]),
            (crystalline_module(), [[1, 0]]),
        ):
            sub = RegularSubmodule.of(mod, sub_basis)
            res = benois_filtration(mod, sub)
            assert linalg.subspace_le(res.d_minus1, res.d_0)
            assert linalg.subspace_le(res.d_0, res.d_1)

    def test_grade_characterization(self):
        # grade 0 vectors: eigenvalue p^{-f} of the linearization, inside
        # the image of N; grade 1: fixed by phi^f with N-image in D
        mod = steinberg_module()
        sub = RegularSubmodule.of(mod, [[1, 0]])
        res = benois_filtration(mod, sub)
        lin = linearize_frobenius(mod)
        p_inv = mod.field.embed(PadicScalar.p_power(P, -1, N))
        n_columns = [[row[j] for row in mod.nmat] for j in range(2)]
        for flat in res.d_0:
            v = fold_vector(mod.field, flat)
            image = linalg.matvec(lin, v)
            scaled = [p_inv * e for e in v]
            assert all((a - b).is_zero() for a, b in zip(image, scaled))
            # inside im(N): e1 = N e2
            assert linalg.in_span(v, n_columns)
        # the d1 complement maps into D under N and is phi^f-fixed mod D
        d0_echelon, d0_pivots = linalg.rref(res.d_0)
        for flat in res.d_1:
            residual = linalg.reduce_against(flat, d0_echelon, d0_pivots)
            if all(e.is_zero() for e in residual):
                continue
            w = fold_vector(mod.field, residual)
            image = linalg.matvec(lin, w)
            assert all((a - b).is_zero() for a, b in zip(image, w))
            nw = linalg.matvec(mod.nmat, w)
            from padiclinv.phin import _flatten_qp

            red = linalg.reduce_against(_flatten_qp(nw), d0_echelon, d0_pivots)
            assert all(e.is_zero() for e in red)

    def test_scaling_submodule_basis_leaves_subspaces(self):
        mod = steinberg_module()
        res_a = benois_filtration(mod, RegularSubmodule.of(mod, [[1, 0]]))
        res_b = benois_filtration(mod, RegularSubmodule.of(mod, [[7, 0]]))
        for a, b in (
            (res_a.d_minus1, res_b.d_minus1),
            (res_a.d_0, res_b.d_0),
            (res_a.d_1, res_b.d_1),
        ):
            assert len(a) == len(b)
            for ra, rb in zip(a, b):
                assert all((x - y).is_zero() for x, y in zip(ra, rb))

    def test_stability_precondition(self):
        mod = PhiNModule(
            K1,
            [[HALF, 0, 0], [0, 1, 0], [0, 0, P]],
            [[0, 1, 0], [0, 0, 1], [0, 0, 0]],
            hodge_filtration=[(0, [[0, 1, 0]])],
            precision=N,
        )
        sub = RegularSubmodule.of(mod, [[1, 0, 0], [0, 0, 1]])
        with pytest.raises(PhinError, match="N-stable"):
            benois_filtration(mod, sub)

    def test_regularity_precondition(self):
        mod = crystalline_module()
        sub = RegularSubmodule.of(mod, [[0, 1]])
        with pytest.raises(PhinError, match="regular"):
            benois_filtration(mod, sub)

    def test_semisimplicity_precondition(self):
        mod = PhiNModule(
            K1,
            [[1, 1], [0, 1]],
            [[0, 0], [0, 0]],
            hodge_filtration=[(0, [[0, 1]])],
            precision=N,
        )
        sub = RegularSubmodule.of(mod, [[1, 0]])
        with pytest.raises(PhinError, match="semisimple"):
            benois_filtration(mod, sub)


class TestCounting:
    def test_requires_attestation(self):
        mod = steinberg_module()
        res = benois_filtration(mod, RegularSubmodule.of(mod, [[1, 0]]))
        with pytest.raises(AttestationError):
            count_trivial_zeros({"P1": res})

    def test_totals(self):
        st_res = benois_filtration(
            steinberg_module(), RegularSubmodule.of(steinberg_module(), [[1, 0]])
        )
        cr = crystalline_module()
        cr_res = benois_filtration(cr, RegularSubmodule.of(cr, [[1, 0]]))
        # eigenvalue-1-in-quotient spherical example: t1 = 1, r = 0
        sph = PhiNModule(
            K1,
            [[1, 0], [0, 2]],
            [[0, 0], [0, 0]],
            hodge_filtration=[(0, [[1, 1]])],
            precision=N,
        )
        sph_res = benois_filtration(sph, RegularSubmodule.of(sph, [[0, 1]]))
        assert (sph_res.r, sph_res.t1) == (0, 1)
        two_steinberg = count_trivial_zeros(
            {"P1": st_res, "P2": st_res}, c5_attested=True
        )
        assert two_steinberg["t"] == 2
        mixed = count_trivial_zeros(
            {"P1": st_res, "P2": sph_res}, c5_attested=True
        )
        assert mixed["t"] == 2
        none = count_trivial_zeros({"P1": cr_res}, c5_attested=True)
        assert none["t"] == 0


class TestDuality:
    def test_steinberg_self_swap(self):
        mod = steinberg_module()
        sub = RegularSubmodule.of(mod, [[1, 0]])
        res = benois_filtration(mod, sub)
        dual, dual_sub = dual_module(mod, sub)
        dual.validate()
        dres = benois_filtration(dual, dual_sub)
        assert (dres.gr0_dim, dres.gr1_dim) == (res.gr1_dim, res.gr0_dim)

    def test_spherical_swap(self):
        mod = PhiNModule(
            K1,
            [[1, 0], [0, 2]],
            [[0, 0], [0, 0]],
            hodge_filtration=[(0, [[1, 1]])],
            precision=N,
        )
        sub = RegularSubmodule.of(mod, [[0, 1]])
        res = benois_filtration(mod, sub)
        dual, dual_sub = dual_module(mod, sub)
        dres = benois_filtration(dual, dual_sub)
        assert (res.gr0_dim, res.gr1_dim) == (0, 1)
        assert (dres.gr0_dim, dres.gr1_dim) == (1, 0)
        # the dual count interpretation is flagged: its grade 0 carries
        # a weight-zero piece, violating the attested hypotheses
        assert dres.c4_c5_violation

    def test_inertia_degree_two_swap(self):
        mod = PhiNModule(
            K2,
            [[HALF, 0], [0, 1]],
            [[0, 1], [0, 0]],
            hodge_filtration=[(0, [[1, 1]])],
            precision=N,
        )
        sub = RegularSubmodule.of(mod, [[1, 0]])
        res = benois_filtration(mod, sub)
        dual, dual_sub = dual_module(mod, sub)
        dres = benois_filtration(dual, dual_sub)
        assert (dres.gr0_dim, dres.gr1_dim) == (res.gr1_dim, res.gr0_dim)


class TestPrecisionGuard:
    def test_exhausted_pivot(self):
        shallow = PadicScalar(P, 0, 1, 2)  # only 2 reliable digits
        with pytest.raises(PrecisionExhausted):
            linalg.rref([[shallow]])

    def test_guard_can_be_lowered(self):
        shallow = PadicScalar(P, 0, 1, 2)
        basis, pivots = linalg.rref([[shallow]], guard=1)
        assert pivots == [0]
