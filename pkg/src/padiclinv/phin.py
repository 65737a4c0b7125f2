"""Filtered (phi, N)-modules over the unramified extension.

A module is given by the matrix of the sigma-semilinear Frobenius phi
(phi(v) = PHI . sigma(v) on coordinates), the linear monodromy N with
N phi = p phi N, and a Hodge flag.  A regular submodule D is a
phi,N-stable complement of Fil^0.

The trivial-zero filtration built from D is

    D_{-1} = (1 - p^{-1} phi^{-1}) D + N(D^{phi=1})
    D_0    = D
    D_1    = D + { v : phi v = v, N v in D }

evaluated with exact linear algebra; eigenspaces of the semilinear phi
are cut out by unfolding over the f coordinate blocks of the extension,
which turns every fixed-point condition into an honest Q_p-linear
system.  The grade dimensions give the per-prime counts

    r   = dim D_0 / D_{-1}
    t_1 = dim D_1 / D_0 - r      (under the attested vanishing of the
                                  weight-zero graded piece, "C5")
    t_p = dim D_1 / D_0          (trivial zeros contributed locally).

The displayed grade--1 operator with phi in place of phi^{-1} is also
implemented ("printed" variant): the two differ on eigenvalue-p^{-1}
vectors, and the prose characterization of the graded pieces together
with the two-dimensional multiplicative worked example force the
phi^{-1} form, which is therefore the default.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from . import linalg
from .linalg import GUARD_DIGITS
from .padic import PadicScalar, UnramifiedField, frobenius


class PhinError(ValueError):
    pass


class AttestationError(PhinError):
    pass


def _sigma_vec(vec):
    return [frobenius(e) for e in vec]


def _sigma_matrix(rows):
    return [[frobenius(e) for e in row] for row in rows]


class PhiNModule:
    """Exact matrices for (phi, N) with a Hodge flag.

    hodge_filtration: iterable of (weight, basis) pairs with subspaces
    decreasing as the weight grows; only the piece at the smallest
    weight >= 0 enters regularity checks, the rest is carried for
    reports.
    """

    def __init__(self, ext_field, phi, nmat, hodge_filtration=(), precision=None):
        if not isinstance(ext_field, UnramifiedField):
            raise TypeError("ext_field must be an UnramifiedField")
        self.field = ext_field
        n = len(phi)
        self.dimension = n
        prec = precision or 20
        self.precision = prec
        self.phi = [
            [ext_field.coerce(e, prec) for e in row] for row in phi
        ]
        self.nmat = [
            [ext_field.coerce(e, prec) for e in row] for row in nmat
        ]
        if any(len(r) != n for r in self.phi) or len(self.nmat) != n or any(
            len(r) != n for r in self.nmat
        ):
            raise PhinError("phi and N must be square of the same size")
        flag = []
        for weight, basis in hodge_filtration:
            flag.append(
                (int(weight), [[ext_field.coerce(e, prec) for e in v] for v in basis])
            )
        flag.sort(key=lambda t: t[0])
        self.hodge_filtration = flag

    @property
    def degree(self):
        return self.field.f

    @property
    def p(self):
        return self.field.p

    def validate(self, guard=GUARD_DIGITS):
        """Check N nilpotent, N phi = p phi sigma(N), phi invertible."""
        power = self.nmat
        for _ in range(self.dimension):
            power = linalg.matmul(power, self.nmat)
        if any(not e.is_zero() for row in power for e in row):
            raise PhinError("monodromy N is not nilpotent")
        lhs = linalg.matmul(self.nmat, self.phi)
        rhs = linalg.matmul(self.phi, _sigma_matrix(self.nmat))
        p = self.p
        for lr, rr in zip(lhs, rhs):
            for a, b in zip(lr, rr):
                if not (a - b * p).is_zero():
                    raise PhinError("monodromy relation N phi = p phi N fails")
        try:
            linalg.inverse_matrix(self.phi, guard)
        except linalg.SingularMatrix as exc:
            raise PhinError("Frobenius matrix is singular") from exc
        return True

    def fil0(self):
        """Basis of the flag piece at the smallest weight >= 0."""
        for weight, basis in self.hodge_filtration:
            if weight >= 0:
                return basis
        return []

    # phi and its inverse as maps on coordinate vectors

    def phi_apply(self, vec):
        return linalg.matvec(self.phi, _sigma_vec(vec))

    def phi_inverse_apply(self, vec):
        # phi^{-1}(v) = sigma^{-1}(PHI^{-1} v), sigma^{-1} = sigma^(f-1)
        w = linalg.matvec(self._phi_inverse(), vec)
        for _ in range(self.field.f - 1):
            w = _sigma_vec(w)
        return w

    def _phi_inverse(self):
        if not hasattr(self, "_phi_inv_cache"):
            self._phi_inv_cache = linalg.inverse_matrix(self.phi)
        return self._phi_inv_cache

    def n_apply(self, vec):
        return linalg.matvec(self.nmat, vec)

    def standard_basis(self):
        return linalg.identity_matrix(self.dimension, self.phi[0][0])

    def qp_generators(self, vectors):
        """Unfold K-vectors into Q_p-generators: gen^j times each vector."""
        powers = [self.field.one(self.precision)]
        g = self.field.generator(self.precision)
        for _ in range(self.field.f - 1):
            powers.append(powers[-1] * g)
        out = []
        for v in vectors:
            for b in powers:
                out.append([b * e for e in v])
        return out


@dataclass
class RegularSubmodule:
    """A candidate regular submodule: basis plus observed stability."""

    basis: list
    phi_stable: bool = dc_field(default=False)
    n_stable: bool = dc_field(default=False)

    @classmethod
    def of(cls, module, vectors, precision=None):
        prec = precision or 20
        basis = [
            [module.field.coerce(e, prec) for e in v] for v in vectors
        ]
        basis = linalg.span(basis)
        phi_ok = all(
            linalg.in_span(module.phi_apply(v), basis) for v in basis
        ) if basis else True
        n_ok = all(
            linalg.in_span(module.n_apply(v), basis) for v in basis
        ) if basis else True
        return cls(basis=basis, phi_stable=phi_ok, n_stable=n_ok)


def linearize_frobenius(module):
    """The K-linear operator phi^f: PHI sigma(PHI) ... sigma^(f-1)(PHI)."""
    acc = module.phi
    twisted = module.phi
    for _ in range(module.field.f - 1):
        twisted = _sigma_matrix(twisted)
        acc = linalg.matmul(acc, twisted)
    return acc


def _flatten_qp(vec):
    """K^n vector -> list of n*f PadicScalar coordinates."""
    out = []
    for e in vec:
        out.extend(e.coefficients)
    return out


def fold_vector(ext_field, flat):
    """Inverse of the unfolding: n*f Q_p coordinates -> K^n vector."""
    f = ext_field.f
    if len(flat) % f:
        raise PhinError("flattened length is not a multiple of the degree")
    out = []
    for i in range(0, len(flat), f):
        out.append(ext_field.from_coefficients(list(flat[i : i + f])))
    return out


def _coerce_eigenvalue(module, lam):
    if isinstance(lam, (int, Fraction)):
        lam = PadicScalar.from_fraction(Fraction(lam), module.p, module.precision)
    return module.field.embed(lam)


def phi_eigenvectors(module, sub_basis, lam, guard=GUARD_DIGITS):
    """Q_p-basis of {v in span_K(sub_basis) : phi v = lam v}.

    The fixed-point condition of the semilinear phi is Q_p-linear, not
    K-linear, so it is solved on the unfolded Q_p-generators; the
    returned vectors are Q_p-independent and remain K-independent
    (fixed vectors of a semilinear map are K-free iff Q_p-free).
    """
    if not sub_basis:
        return []
    lam_e = _coerce_eigenvalue(module, lam)
    candidates = module.qp_generators(sub_basis)
    images = []
    for w in candidates:
        diff = [
            a - lam_e * b for a, b in zip(module.phi_apply(w), w)
        ]
        images.append(_flatten_qp(diff))
    # columns = candidates, rows = Q_p coordinates
    rows = [list(col) for col in zip(*images)]
    combos = linalg.kernel(rows, len(candidates), guard)
    out = []
    zero = sub_basis[0][0].same_zero()
    n = len(sub_basis[0])
    for combo in combos:
        vec = [zero] * n
        for coeff, cand in zip(combo, candidates):
            lifted = module.field.embed(coeff)
            vec = [x + lifted * y for x, y in zip(vec, cand)]
        out.append(vec)
    return out


def is_semisimple_at(module, lam, guard=GUARD_DIGITS):
    """phi semisimple at lam: ker(phi^f - lam^f) = ker((phi^f - lam^f)^2)."""
    a = linearize_frobenius(module)
    lam_e = _coerce_eigenvalue(module, lam)
    target = lam_e ** module.field.f
    n = module.dimension
    b = [
        [a[i][j] - (target if i == j else target.same_zero()) for j in range(n)]
        for i in range(n)
    ]
    b2 = linalg.matmul(b, b)
    k1 = linalg.kernel([list(r) for r in b], n, guard)
    k2 = linalg.kernel([list(r) for r in b2], n, guard)
    return len(linalg.span(k1, guard)) == len(linalg.span(k2, guard))


def check_regular(module, submodule, guard=GUARD_DIGITS):
    """D is regular when D and Fil^0 are transverse complements."""
    d_basis = linalg.span(submodule.basis, guard)
    fil = linalg.span(module.fil0(), guard)
    if len(d_basis) + len(fil) != module.dimension:
        return False
    if not d_basis or not fil:
        return True
    return len(linalg.intersection(d_basis, fil, guard)) == 0


@dataclass
class FiltrationResult:
    """Filtration subspaces and grade counts.

    The subspaces are coefficient-field (Q_p) spaces: the graded pieces
    are fixed spaces of the semilinear Frobenius, which are Q_p-forms,
    not K-submodules.  Bases are therefore stored in unfolded
    coordinates (n*f entries per vector, reduced echelon form), which
    makes subspace equality an exact comparison and grade dimensions
    the honest per-prime counts for any inertia degree.
    """

    d_minus1: list
    d_0: list
    d_1: list
    r: int
    t1: int
    gr0_dim: int
    gr1_dim: int
    variant: str
    variants_differ: bool
    c4_c5_violation: bool

    @property
    def trivial_zero_count(self):
        return self.gr1_dim

    @property
    def t0(self):
        # not determined by (phi, N) data; zero once C5 is attested
        return 0


def _grade_minus1(module, submodule, variant, guard):
    p = module.p
    p_inv = module.field.embed(PadicScalar.p_power(p, -1, module.precision))
    generators = []
    for w in module.qp_generators(submodule.basis):
        if variant == "prose":
            img = module.phi_inverse_apply(w)
        elif variant == "printed":
            img = module.phi_apply(w)
        else:
            raise PhinError(f"unknown filtration variant {variant!r}")
        generators.append(_flatten_qp([a - p_inv * b for a, b in zip(w, img)]))
    fixed = phi_eigenvectors(module, submodule.basis, 1, guard)
    for v in fixed:
        generators.append(_flatten_qp(module.n_apply(v)))
    return linalg.span(generators, guard)


def benois_filtration(
    module,
    submodule,
    variant="prose",
    guard=GUARD_DIGITS,
    validate=True,
):
    """The three-step filtration attached to a regular submodule.

    Preconditions (checked unless validate=False): the module relations
    hold, D is phi- and N-stable, regular, and phi is semisimple at 1
    and p^{-1}.  A negative t1 is reported as a flag: it means the
    input cannot satisfy the standing hypotheses (conditions C4/C5).
    """
    if validate:
        module.validate(guard)
        if not submodule.phi_stable:
            raise PhinError("submodule is not phi-stable")
        if not submodule.n_stable:
            raise PhinError("submodule is not N-stable")
        if not check_regular(module, submodule, guard):
            raise PhinError("submodule is not regular (not a complement of Fil^0)")
        for lam in (1, Fraction(1, module.p)):
            if not is_semisimple_at(module, lam, guard):
                raise PhinError(f"Frobenius is not semisimple at {lam}")

    d0 = linalg.span(
        [_flatten_qp(w) for w in module.qp_generators(submodule.basis)], guard
    )
    dm1 = _grade_minus1(module, submodule, variant, guard)
    other = _grade_minus1(
        module, submodule, "printed" if variant == "prose" else "prose", guard
    )
    differ = not linalg.subspace_eq(dm1, other, guard)

    # grade 1: phi-fixed vectors of the whole module whose image under N
    # falls back into D (such images are automatically eigenvalue-p^{-1})
    full = module.standard_basis()
    fixed = phi_eigenvectors(module, full, 1, guard)
    extra = []
    if fixed:
        d0_echelon, d0_pivots = linalg.rref(d0, guard)
        residuals = [
            linalg.reduce_against(
                _flatten_qp(module.n_apply(v)), d0_echelon, d0_pivots
            )
            for v in fixed
        ]
        rows = [list(col) for col in zip(*residuals)]
        combos = linalg.kernel(rows, len(fixed), guard) if rows else []
        for combo in combos:
            flat = None
            for coeff, base_vec in zip(combo, fixed):
                lifted = module.field.embed(coeff)
                scaled = _flatten_qp([lifted * y for y in base_vec])
                flat = scaled if flat is None else [x + y for x, y in zip(flat, scaled)]
            extra.append(flat)
    d1 = linalg.subspace_sum(d0, extra, guard)

    if not linalg.subspace_le(dm1, d0, guard) or not linalg.subspace_le(d0, d1, guard):
        raise PhinError("filtration nesting failed; input inconsistent")

    gr0 = len(d0) - len(dm1)
    gr1 = len(d1) - len(d0)
    t1 = gr1 - gr0
    return FiltrationResult(
        d_minus1=dm1,
        d_0=d0,
        d_1=d1,
        r=gr0,
        t1=t1,
        gr0_dim=gr0,
        gr1_dim=gr1,
        variant=variant,
        variants_differ=differ,
        c4_c5_violation=t1 < 0,
    )


def count_trivial_zeros(results, c5_attested=False):
    """Total expected trivial zeros t = sum over primes of dim D_1/D_0.

    The weight-zero graded piece is not computable from (phi, N) data
    alone; the caller must attest its vanishing (condition C5), which
    pins t0 = 0 and makes the count equal to the grade dimensions.
    """
    if not c5_attested:
        raise AttestationError(
            "trivial-zero counting requires attesting C5 "
            "(vanishing of the weight-zero graded piece W_0)"
        )
    per_prime = {}
    total = 0
    for label, res in results.items():
        if res.c4_c5_violation:
            raise PhinError(
                f"input at {label} violates C4/C5 (negative t1); count refused"
            )
        per_prime[label] = res.trivial_zero_count
        total += res.trivial_zero_count
    return {"t": total, "per_prime": per_prime}


def dual_module(module, submodule=None, guard=GUARD_DIGITS):
    """Dimension-level dual: inverse-transpose phi twisted by p^{-1},
    negated-transpose N, annihilator flag and annihilator submodule.

    Returns (dual_module, dual_submodule_or_None).  The Hodge flag of
    the dual is the annihilator of Fil^0 placed at weight 0, which is
    the reflection that keeps the regularity pairing exact at the
    dimension level.
    """
    p_inv = module.field.embed(PadicScalar.p_power(module.p, -1, module.precision))
    phi_t = [list(col) for col in zip(*module.phi)]
    phi_dual = [
        [p_inv * e for e in row] for row in linalg.inverse_matrix(phi_t, guard)
    ]
    n_dual = [[-e for e in col] for col in zip(*module.nmat)]
    like = module.phi[0][0]
    fil = module.fil0()
    fil_dual = linalg.annihilator(fil, module.dimension, like, guard)
    mdual = PhiNModule(
        module.field,
        phi_dual,
        n_dual,
        hodge_filtration=[(0, fil_dual)],
        precision=module.precision,
    )
    ddual = None
    if submodule is not None:
        ann = linalg.annihilator(submodule.basis, module.dimension, like, guard)
        ddual = RegularSubmodule.of(mdual, ann, precision=module.precision)
    return mdual, ddual
