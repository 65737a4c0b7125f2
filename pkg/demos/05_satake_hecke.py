"""GSp_2g local combinatorics: Satake values, refinements, Hecke data.

Everything a prime contributes to the global formulas: the spin and
standard Frobenius eigenvalue lists, the Steinberg progression test,
the reducibility conditions, refinement enumeration, Hecke eigenvalue
normalization, Hodge-Tate weights, and the triangulation characters.
"""

from fractions import Fraction

from padiclinv import (
    ExponentialFamily,
    PadicScalar,
    SiegelLocalDatum,
    enumerate_p_stabilizations,
    hecke_normalization,
    hodge_tate_weights,
    is_steinberg,
    spin_frobenius_eigenvalues,
    standard_frobenius_eigenvalues,
    tadic_reducible,
    triangulation_characters,
)

p, N = 5, 20
S = lambda x: PadicScalar.from_fraction(Fraction(x), p, N)

datum = SiegelLocalDatum(
    genus=2,
    inertia_degree=1,
    prime=p,
    alpha0=S(7),
    alphas=(S(2), S(3)),
    weight=((3, 4),),
    similitude_weight=8,
    hecke_eigenvalues=(S(1), S(1)),
)

# --- Frobenius eigenvalue lists ------------------------------------------------

print("spin eigenvalues (subset order):",
      [x.as_fraction() for x in spin_frobenius_eigenvalues(datum)])
std = standard_frobenius_eigenvalues(datum)
print("standard eigenvalues: 2g+1 =", len(std),
      "values, closed under inversion:",
      all(x * y == 1 for x, y in zip(std, reversed(std))))

# --- Steinberg progression and reducibility --------------------------------------

st = SiegelLocalDatum(genus=2, inertia_degree=1, prime=p,
                      alpha0=S(1), alphas=(S(2), S(10)))
print("\nalpha = (c, qc) is Steinberg:", is_steinberg(st, "q"))
print("its principal series is reducible via:",
      tadic_reducible(st)["triggered_conditions"])
print("independent values are irreducible:",
      not tadic_reducible(SiegelLocalDatum(
          genus=2, inertia_degree=1, prime=7,
          alpha0=PadicScalar.one(7, N),
          alphas=(PadicScalar.from_integer(2, 7, N),
                  PadicScalar.from_integer(3, 7, N))))["reducible"])

# --- refinements -----------------------------------------------------------------

refs = enumerate_p_stabilizations(datum)
print("\nnumber of refinements (2^g g!):", len(refs))
print("first refinement:", refs[0].permutation, refs[0].signs)
try:
    enumerate_p_stabilizations(st)
except Exception as exc:
    print("Steinberg data refuse re-refinement:", exc)

# --- Hecke normalization -----------------------------------------------------------

norm = hecke_normalization(datum, 1)
print("\nnormalized first Hecke eigenvalue:", norm["beta"],
      "| finite slope:", norm["finite_slope"])

# --- Hodge-Tate weights -------------------------------------------------------------

print("\nspin Hodge-Tate weights:", hodge_tate_weights(datum, "spin"))
print("standard Hodge-Tate weights:", hodge_tate_weights(datum, "standard"))

# --- triangulation characters --------------------------------------------------------

up = S(1 + p)
b1 = ExponentialFamily(S(3), up, {"k": 1}, {"k": 3}).jet()
b2 = ExponentialFamily(S(7), up, {"k": 2}, {"k": 3}).jet()
tri = triangulation_characters(datum, [b1, b2])
print("\ngraded character values at p (subset order):")
for subset, char in zip(tri.subsets, tri.deltas):
    print(f"  subset {subset or '{}'}: value {char.uniformizer_value.value},"
          f" exponents {char.weight_exponents}")
print("first two graded pieces inverted (feed the adjoint formula):")
print("  F1 value:", tri.f1.value, "| F2 value:", tri.f2.value)
print("offsets needed to match Hodge-Tate weights:", dict(tri.offset_report))
