"""L-invariant evaluation.

All formulas reduce to logarithmic derivatives of eigenvalue families
at the weight basepoint:

  rank one        -log(chi(gamma)) dlog(ratio at p) / dlog(ratio at chi(gamma))
  Steinberg spin  -(1/f) dlog beta_1 in the parallel weight
  standard twists -(1/f) dlog of a beta-monomial depending on the twist
  adjoint (g = 2) prod_p 2/f_p^2 times the determinant of the Jacobian
                  of log F_{p,1}, F_{p,2} in the per-prime weights

and the general determinant det(iota_f o iota_c^{-1}) of the projection
pair on the canonical cocycle space.  The adjoint complementary block
iota_c is generated from the unit-action weight forms of the first two
graded characters, restricted to Q_p (an f-fold sum over embeddings):
its per-prime determinant f^2/2 is computed, not asserted, so the
2/f^2 prefactor of the direct formula has to emerge in the comparison.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from . import linalg
from .jets import dlog
from .padic import PadicScalar, iwasawa_log


class LinvariantError(ValueError):
    pass


# sign maps of the two graded characters feeding the adjoint block; the
# unit-action exponent of graded piece a is (k_0 + eps[a].k + const)/2
_ADJOINT_SIGN_ROWS = ((1, 1), (-1, 1))


@dataclass
class IotaMatrices:
    """Square projection matrices of the canonical cocycle basis.

    iota_f: projections to the crystalline coordinates.
    iota_c: projections to the complementary coordinates (must be
    invertible for the determinant to exist; singularity means the
    one-dimensional-intersection hypothesis fails for the input).
    labels: (prime label, graded index) per row, for reports.
    """

    iota_f: list
    iota_c: list
    labels: list = dc_field(default_factory=list)

    @property
    def dimension(self):
        return len(self.iota_f)


def linv_general(iotas, guard=linalg.GUARD_DIGITS):
    """det(iota_f o iota_c^{-1})."""
    try:
        inv_c = linalg.inverse_matrix(iotas.iota_c, guard)
    except linalg.SingularMatrix as exc:
        raise LinvariantError(
            "complementary projection iota_c is singular: the "
            "one-dimensional intersection hypothesis fails for this input"
        ) from exc
    composed = linalg.matmul(iotas.iota_f, inv_c)
    return linalg.determinant(composed, guard)


def linv_rank_one(
    delta_at_p,
    psi_at_p,
    delta_at_cyclo,
    psi_at_cyclo,
    gamma_value,
    var="T",
):
    """Two-character formula for a rank-one trivial zero.

    The four jets are the deformed character values at p and at
    chi_cycl(gamma); gamma_value is chi_cycl(gamma) itself.  Requires a
    nonvanishing denominator derivative (the deformation must move the
    cyclotomic direction).
    """
    ratio_p = delta_at_p / psi_at_p
    ratio_c = delta_at_cyclo / psi_at_cyclo
    denom = dlog(ratio_c, var)
    if denom.is_zero():
        raise LinvariantError(
            "derivative along the cyclotomic direction vanishes: "
            "the rank-one formula hypothesis is violated"
        )
    numer = dlog(ratio_p, var)
    return -(iwasawa_log(gamma_value) * numer / denom)


def linv_steinberg_spin(beta1_jet, f_p, var="k"):
    """-(1/f) d log beta_1 / dk at the basepoint (parallel weight)."""
    if beta1_jet.value.is_zero():
        raise LinvariantError("eigenvalue family with zero value")
    if var not in beta1_jet.partials:
        raise LinvariantError(f"family carries no partial in {var!r}")
    scale = Fraction(-1, f_p)
    return dlog(beta1_jet, var) * PadicScalar.from_fraction(
        scale, beta1_jet.value.p, _prec_of(beta1_jet)
    )


def _prec_of(jet):
    n = jet.value.N
    for d in jet.partials.values():
        n = min(n, d.N)
    return n


def linv_standard_twists(beta_jets, f_p, s, g, var="k", parallel_weight=None):
    """Twisted standard-representation local factor.

    s = 1 reduces to the beta_1 formula; s = g - 1 (g >= 3) uses the
    boundary monomial beta_{g-1} beta_g^{-2}; in between the monomial
    is beta_{s-1} beta_s^{-1}.  The twist range is 1 <= s <= g - 1,
    further capped by k - g - 1 when the parallel weight k is supplied.
    """
    if not 1 <= s <= g - 1:
        raise LinvariantError(f"twist {s} outside the range 1..{g - 1}")
    if parallel_weight is not None and s > parallel_weight - g - 1:
        raise LinvariantError(
            f"twist {s} exceeds the critical range for weight {parallel_weight}"
        )
    if s == 1:
        return linv_steinberg_spin(beta_jets[0], f_p, var)
    if s == g - 1:
        mono = beta_jets[g - 2] * beta_jets[g - 1] ** (-2)
    else:
        mono = beta_jets[s - 2] / beta_jets[s - 1]
    scale = Fraction(-1, f_p)
    return dlog(mono, var) * PadicScalar.from_fraction(
        scale, mono.value.p, _prec_of(mono)
    )


def _dlog_jacobian(f_pairs, var_pairs):
    rows = []
    for fp in f_pairs:
        for fam in fp:
            row = []
            for vp in var_pairs:
                for var in vp:
                    row.append(dlog(fam, var))
            rows.append(row)
    return rows


def linv_adjoint_gsp4(f_pairs, f_list, var_pairs, guard=linalg.GUARD_DIGITS):
    """prod_p 2/f_p^2 times det of the 2t x 2t log-derivative Jacobian.

    f_pairs[i] = (F_{p_i,1}, F_{p_i,2}) jets; var_pairs[j] names the two
    weight variables of prime j.  The block arrangement is one square
    determinant over all (prime, index) pairs.
    """
    t = len(f_pairs)
    if len(f_list) != t or len(var_pairs) != t:
        raise LinvariantError("need one (F_1, F_2) pair and variable pair per prime")
    jac = _dlog_jacobian(f_pairs, var_pairs)
    try:
        det = linalg.determinant(jac, guard)
    except linalg.SingularMatrix as exc:
        raise LinvariantError(
            f"singular log-derivative Jacobian (rank {exc.rank} of {2 * t})"
        ) from exc
    p = f_pairs[0][0].value.p
    prefactor = Fraction(1)
    for f in f_list:
        prefactor *= Fraction(2, f * f)
    return det * PadicScalar.from_fraction(prefactor, p, det.N + 4)


def adjoint_iota_wiring(f_pairs, f_list, var_pairs, precision=20):
    """IotaMatrices reproducing the adjoint determinant formula.

    iota_f is the log-derivative Jacobian.  iota_c rows are the
    negated gradients of the unit-action weight forms of the first two
    graded characters, summed over the f embeddings (restriction of the
    character to Q_p), block-diagonal across primes.
    """
    t = len(f_pairs)
    p = f_pairs[0][0].value.p
    iota_f = _dlog_jacobian(f_pairs, var_pairs)
    zero = PadicScalar.zero(p, precision)
    iota_c = [[zero for _ in range(2 * t)] for _ in range(2 * t)]
    labels = []
    for i in range(t):
        f = f_list[i]
        for a in range(2):
            labels.append((i, a + 1))
            for b in range(2):
                grad = Fraction(_ADJOINT_SIGN_ROWS[a][b], 2)
                iota_c[2 * i + a][2 * i + b] = PadicScalar.from_fraction(
                    -f * grad, p, precision
                )
    return IotaMatrices(iota_f=iota_f, iota_c=iota_c, labels=labels)


@dataclass
class LinvReport:
    """Assembled product of local factors with bookkeeping."""

    local_factors: dict
    trivial_zeros: dict
    spherical_status: str
    total: object
    status: str
    note: str
    conventions: dict
    precision: int

    def factored_count(self):
        return sum(self.trivial_zeros.values())


def assemble_report(
    prime,
    precision,
    local_factors,
    trivial_zeros,
    spherical_count=0,
    conventions=None,
):
    """Multiply computed local factors into the global L-invariant.

    trivial_zeros holds the per-prime counts (spherical contributions
    included); spherical_count is how many of those come from spherical
    primes.  The spherical part is a global object: it is 1 when no
    spherical prime contributes and unsupported otherwise, in which
    case the product of the local factors is reported as partial.
    """
    conventions = dict(conventions or {})
    total_zeros = sum(trivial_zeros.values())
    if total_zeros == 0:
        return LinvReport(
            local_factors={},
            trivial_zeros=dict(trivial_zeros),
            spherical_status="one",
            total=PadicScalar.one(prime, precision),
            status="not-applicable",
            note="no trivial zeros; L-invariant not applicable",
            conventions=conventions,
            precision=precision,
        )
    total = PadicScalar.one(prime, precision)
    for label in sorted(local_factors):
        total = total * local_factors[label]
    if spherical_count == 0:
        return LinvReport(
            local_factors=dict(local_factors),
            trivial_zeros=dict(trivial_zeros),
            spherical_status="one",
            total=total,
            status="complete",
            note="",
            conventions=conventions,
            precision=precision,
        )
    return LinvReport(
        local_factors=dict(local_factors),
        trivial_zeros=dict(trivial_zeros),
        spherical_status="unsupported: requires global cocycles",
        total=total,
        status="partial",
        note="spherical factor unsupported; total covers local factors only",
        conventions=conventions,
        precision=precision,
    )
