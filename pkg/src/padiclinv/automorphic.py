"""Local Satake/Hecke combinatorics for GSp_2g.

Per-prime automorphic data: Satake values at the uniformizer, weight
tuples, raw Hecke eigenvalues and their normalization, the Steinberg
and Tadic reducibility predicates, refinement enumeration, Hodge-Tate
weight multisets for the spin and standard representations, and the
triangulation characters built from normalized Hecke eigenvalue
families.

Conventions fixed here (both surfaced in every report):
  * subsets of {1..g} are numbered by binary counting, I_1 = {} first,
    and the sign map of a subset is eps(i) = +1 iff i lies in it;
  * the Steinberg progression is alpha_i = q^(sign (i-1)) alpha_1 with
    the sign configurable ("q" or "q_inv", default "q").
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import permutations, product

from .padic import PadicScalar
from .rankone import LocalCharacter

STEINBERG = "Steinberg"
SPHERICAL = "Spherical"

STEINBERG_RATIO_Q = "q"
STEINBERG_RATIO_Q_INV = "q_inv"


class AutomorphicError(ValueError):
    pass


@dataclass
class SiegelLocalDatum:
    """Everything the local formulas consume at one prime.

    weight holds one increasing g-tuple per embedding (f of them);
    similitude_weight is the parallel similitude exponent.  Satake
    values are scalars at the uniformizer: alpha0 is the similitude
    parameter, alphas the g torus parameters.
    """

    genus: int
    inertia_degree: int
    prime: int
    alpha0: object = None
    alphas: tuple = ()
    weight: tuple = ()
    similitude_weight: int = 0
    hecke_eigenvalues: tuple = ()
    local_type: str = SPHERICAL

    def __post_init__(self):
        g = self.genus
        if g < 1:
            raise AutomorphicError("genus must be >= 1")
        if self.alphas and len(self.alphas) != g:
            raise AutomorphicError(f"need {g} Satake values, got {len(self.alphas)}")
        for ktuple in self.weight:
            if len(ktuple) != g:
                raise AutomorphicError("each embedding needs a g-tuple of weights")
            if any(ktuple[i] > ktuple[i + 1] for i in range(g - 1)):
                raise AutomorphicError("weights must be non-decreasing")
        if self.weight and len(self.weight) != self.inertia_degree:
            raise AutomorphicError(
                "one weight tuple per embedding of the unramified extension"
            )
        if self.local_type not in (STEINBERG, SPHERICAL):
            raise AutomorphicError(f"unknown local type {self.local_type!r}")

    @property
    def residue_cardinality(self):
        return self.prime**self.inertia_degree

    def q_scalar(self, precision=20):
        return PadicScalar.from_integer(
            self.residue_cardinality, self.prime, precision
        )

    def is_cohomological(self):
        g = self.genus
        return all(k[0] >= g + 1 for k in self.weight)


def _subsets_binary(g):
    """Subsets of {1..g} in binary counting order, empty set first."""
    out = []
    for code in range(2**g):
        out.append(tuple(i + 1 for i in range(g) if code >> i & 1))
    return out


def subset_sign_map(subset, g):
    """eps(i) = +1 iff i in subset."""
    return tuple(1 if i in subset else -1 for i in range(1, g + 1))


def spin_frobenius_eigenvalues(datum):
    """alpha_0 prod_{i in I} alpha_i over all subsets, binary order."""
    out = []
    for subset in _subsets_binary(datum.genus):
        acc = datum.alpha0
        for i in subset:
            acc = acc * datum.alphas[i - 1]
        out.append(acc)
    return out


def standard_frobenius_eigenvalues(datum):
    """(alpha_g^-1, ..., alpha_1^-1, 1, alpha_1, ..., alpha_g)."""
    for a in datum.alphas:
        if a.is_zero():
            raise AutomorphicError("zero Satake value has no inverse")
    one = datum.alphas[0].same_one()
    inv = [a.inverse() for a in reversed(datum.alphas)]
    return inv + [one] + list(datum.alphas)


def is_steinberg(datum, ratio_convention=STEINBERG_RATIO_Q):
    """Geometric-progression test alpha_i = q^(+-(i-1)) alpha_1.

    The source convention is ambiguous about the sign (and offset) of
    the exponent; the ratio_convention flag fixes the sign and is
    echoed in reports.
    """
    q = datum.q_scalar()
    if ratio_convention == STEINBERG_RATIO_Q_INV:
        q = q.inverse()
    elif ratio_convention != STEINBERG_RATIO_Q:
        raise AutomorphicError(f"unknown ratio convention {ratio_convention!r}")
    expected = datum.alphas[0]
    for i in range(1, datum.genus):
        expected = expected * q
        if not (datum.alphas[i] == expected):
            return False
    return True


def tadic_reducible(datum):
    """Reducibility of the unramified principal series.

    Condition (i) (three mutually distinct order-two characters) can
    never fire in the unramified model: the value at the uniformizer
    determines the character and only one has exact order two, so (i)
    is reported but structurally false here.
    """
    q = datum.q_scalar()
    q_inv = q.inverse()
    triggered = set()
    minus_one = -q.same_one()
    # (i): three mutually distinct exact-order-two characters.  All
    # unramified order-two characters share the value -1 at the
    # uniformizer, hence coincide: at most one distinct one exists and
    # the condition cannot fire in this model.
    distinct_order_two = 1 if any(a == minus_one for a in datum.alphas) else 0
    if distinct_order_two >= 3:
        triggered.add("i")
    for a in datum.alphas:
        if a == q or a == q_inv:
            triggered.add("ii")
            break
    g = datum.genus
    for i in range(g):
        for j in range(g):
            if i == j:
                continue
            ai, aj = datum.alphas[i], datum.alphas[j]
            if ai == q * aj or ai == q_inv * aj:
                triggered.add("iii")
            if ai * aj == q or ai * aj == q_inv:
                triggered.add("iii")
        if "iii" in triggered:
            break
    return {"reducible": bool(triggered), "triggered_conditions": sorted(triggered)}


@dataclass(frozen=True)
class Refinement:
    permutation: tuple
    signs: tuple
    alpha0: object
    alphas: tuple
    spin_sequence: tuple


def enumerate_p_stabilizations(datum):
    """All 2^g g! refinements of a spherical datum.

    A refinement reorders the Satake values and inverts a subset of
    them; the similitude value absorbs the inverted ones so the spin
    eigenvalue multiset is preserved.
    """
    if datum.local_type == STEINBERG:
        raise AutomorphicError(
            "Steinberg data admit a unique refinement (maximal monodromy)"
        )
    g = datum.genus
    out = []
    for perm in permutations(range(1, g + 1)):
        for signs in product((1, -1), repeat=g):
            alphas = []
            alpha0 = datum.alpha0
            for pos, eps in zip(perm, signs):
                a = datum.alphas[pos - 1]
                if eps == 1:
                    alphas.append(a)
                else:
                    alphas.append(a.inverse())
                    alpha0 = alpha0 * a
            refined = SiegelLocalDatum(
                genus=g,
                inertia_degree=datum.inertia_degree,
                prime=datum.prime,
                alpha0=alpha0,
                alphas=tuple(alphas),
                weight=datum.weight,
                similitude_weight=datum.similitude_weight,
                local_type=SPHERICAL,
            )
            out.append(
                Refinement(
                    permutation=perm,
                    signs=signs,
                    alpha0=alpha0,
                    alphas=tuple(alphas),
                    spin_sequence=tuple(spin_frobenius_eigenvalues(refined)),
                )
            )
    return out


def hecke_normalization(datum, j, precision=20):
    """Normalized eigenvalue beta_j = theta_j |lambda_j|.

    For 1 <= j < g the torus cocharacter exponent is
    sum_tau (k_{tau,1} + ... + k_{tau,j}) - k_0; for j = g it is half
    the full sum, which must be integral (odd parity is an error, not
    silently repaired).  The absolute value is the normalized one of
    the local field, so |p^e| = q^(-e).
    """
    g = datum.genus
    if not 1 <= j <= g:
        raise AutomorphicError(f"Hecke index {j} out of range 1..{g}")
    if not datum.weight:
        raise AutomorphicError("weight data required for normalization")
    if len(datum.hecke_eigenvalues) < j or datum.hecke_eigenvalues[j - 1] is None:
        raise AutomorphicError(f"raw Hecke eigenvalue {j} missing")
    if j < g:
        exponent = sum(sum(k[:j]) for k in datum.weight) - datum.similitude_weight
    else:
        total = sum(sum(k) for k in datum.weight) - datum.similitude_weight
        if total % 2:
            raise AutomorphicError(
                "normalization requires an even exponent; "
                "weight sum parity is odd for the top Hecke operator"
            )
        exponent = total // 2
    theta = datum.hecke_eigenvalues[j - 1]
    factor = PadicScalar.p_power(
        datum.prime, -exponent * datum.inertia_degree, precision
    )
    if theta.is_zero():
        return {"factor": factor, "beta": theta * factor, "finite_slope": False}
    return {"factor": factor, "beta": theta * factor, "finite_slope": True}


def hodge_tate_weights(datum, representation):
    """Per-embedding Hodge-Tate weight multisets.

    spin: (k_0 + sum_i eps(i) (k_{tau,i} - i)) / 2 over all sign maps;
    requires k_0 = sum_i (k_{tau,i} - i) mod 2, else the displayed
    formula is non-integral and a validation error is raised.
    standard: (1-k_{tau,g}, ..., g-k_{tau,1}, 0, k_{tau,1}-g, ..., k_{tau,g}-1).
    """
    g = datum.genus
    k0 = datum.similitude_weight
    out = []
    if representation == "spin":
        for ktuple in datum.weight:
            parity = (k0 - sum(ktuple[i] - (i + 1) for i in range(g))) % 2
            if parity:
                raise AutomorphicError(
                    "spin Hodge-Tate weights are non-integral: "
                    "k_0 and sum(k_i - i) have different parities"
                )
            weights = []
            for subset in _subsets_binary(g):
                eps = subset_sign_map(subset, g)
                total = k0 + sum(e * (ktuple[i] - (i + 1)) for i, e in enumerate(eps))
                weights.append(total // 2)
            out.append(tuple(sorted(weights)))
        return out
    if representation == "standard":
        for ktuple in datum.weight:
            left = [i - ktuple[g - i] for i in range(1, g + 1)]
            right = [ktuple[i - 1] - (g + 1 - i) for i in range(1, g + 1)]
            out.append(tuple(left + [0] + right))
        return out
    raise AutomorphicError(f"unknown representation {representation!r}")


@dataclass
class TriangulationDatum:
    """Triangulation characters built from normalized Hecke families.

    chi: the g flag characters (jet-valued at the uniformizer).
    deltas: the 2^g spin graded characters in binary subset order.
    Unit-action exponents may be half-integral when the similitude
    parity is odd; offset_report records, per graded piece, the
    constant offset needed to match the Hodge-Tate weights (the
    configurable integer offsets are not pinned by the normalization).
    """

    chi: list
    deltas: list
    subsets: list
    f1: object = None
    f2: object = None
    offset_report: dict = dc_field(default_factory=dict)


def triangulation_characters(datum, beta_jets, c_offsets=None, d_offsets=None):
    """Build the flag characters chi_i and spin graded characters.

    beta_jets: the g normalized Hecke eigenvalue families as jets.
    chi_1 = beta_1, chi_i = beta_{i-1}/beta_i (1 < i < g),
    chi_g = beta_{g-1}/beta_g^2; each graded character of the spin
    representation is beta_g times the chi over its subset.  For g = 2
    the first two graded pieces are re-parameterized as F_1, F_2 with
    delta(uniformizer) = F^{-1}: those inverses feed the adjoint
    determinant formula.
    """
    g = datum.genus
    if len(beta_jets) != g:
        raise AutomorphicError(f"need {g} eigenvalue families")
    for b in beta_jets:
        if b.value.is_zero():
            raise AutomorphicError("eigenvalue family with zero value")
    c_offsets = list(c_offsets or [0] * g)
    d_offsets = list(d_offsets or [0] * (2**g))

    chi_values = []
    for i in range(1, g + 1):
        if i == 1:
            chi_values.append(beta_jets[0])
        elif i < g:
            chi_values.append(beta_jets[i - 2] / beta_jets[i - 1])
        else:
            chi_values.append(beta_jets[g - 2] / beta_jets[g - 1] ** 2)

    d = datum.inertia_degree
    mu_shift = datum.genus + 1
    chi_chars = []
    for i, value in enumerate(chi_values, start=1):
        if datum.weight:
            exps = tuple(c_offsets[i - 1] + k[i - 1] - mu_shift for k in datum.weight)
        else:
            exps = tuple([c_offsets[i - 1]] * d)
        chi_chars.append(
            LocalCharacter(
                degree=d,
                uniformizer_value=value,
                weight_exponents=exps,
                norm_twist=False,
            )
        )

    subsets = _subsets_binary(g)
    deltas = []
    k0 = datum.similitude_weight
    offset_report = {}
    spin_weights = None
    try:
        spin_weights = hodge_tate_weights(datum, "spin") if datum.weight else None
    except AutomorphicError:
        spin_weights = None
    for idx, subset in enumerate(subsets):
        value = beta_jets[g - 1]
        for i in subset:
            value = value * chi_values[i - 1]
        eps = subset_sign_map(subset, g)
        exps = []
        for ktuple in datum.weight:
            total = Fraction(k0 + sum(e * ktuple[i] for i, e in enumerate(eps)), 2)
            exps.append(total + d_offsets[idx])
        if not exps:
            exps = [Fraction(d_offsets[idx])] * d
        exps = tuple(
            int(e) if isinstance(e, Fraction) and e.denominator == 1 else e
            for e in exps
        )
        deltas.append(
            LocalCharacter(
                degree=d,
                uniformizer_value=value,
                weight_exponents=exps,
                norm_twist=False,
            )
        )
        if datum.weight:
            # offset needed on top of d_j for the exponent to equal the
            # Hodge-Tate weight: d_j + sum(eps(i) i)/2, embedding-free
            required = Fraction(sum(e * (i + 1) for i, e in enumerate(eps)), 2)
            offset_report[idx + 1] = -required

    result = TriangulationDatum(
        chi=chi_chars, deltas=deltas, subsets=subsets, offset_report=offset_report
    )
    if g == 2:
        # graded order: the all-plus subset is the first graded piece
        all_plus = subsets.index((1, 2))
        minus_plus = subsets.index((2,))
        result.f1 = deltas[all_plus].uniformizer_value.inverse()
        result.f2 = deltas[minus_plus].uniformizer_value.inverse()
    return result
