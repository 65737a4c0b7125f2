"""Cohomology dimension tables for rank-one modules over local fields.

A continuous character of L^x (L/Q_p unramified of degree d) is pinned
by its value at p, its unit exponents and an optional norm twist.  Its
class decides the whole dimension table, and the local Euler
characteristic h0 - h1 + h2 = -d holds across all of them.
"""

from padiclinv import (
    CocycleCoordinates,
    LocalCharacter,
    PadicScalar,
    classify_character,
    cohomology_profile,
    induction_profile,
    is_crystalline_line,
    nonsplit_block_dims,
)

p, N = 5, 20

# --- the three classes -------------------------------------------------------

trivial = LocalCharacter(
    degree=3,
    uniformizer_value=PadicScalar.one(p, N),
    weight_exponents=(0, 0, 0),
)
print("trivial character, d = 3:", classify_character(trivial))
print("profile (h0, h1, h2, h1f):", cohomology_profile(trivial))

cyclo_like = LocalCharacter(
    degree=1,
    uniformizer_value=PadicScalar.one(p, N),
    weight_exponents=(1,),
    norm_twist=True,
)
print("\nnorm-twisted weight-1 character:", classify_character(cyclo_like))
print("profile:", cohomology_profile(cyclo_like))

generic = LocalCharacter(
    degree=2,
    uniformizer_value=PadicScalar.from_integer(3, p, N),
    weight_exponents=(1, 0),
)
print("\ngeneric character:", classify_character(generic))
print("profile:", cohomology_profile(generic))

# --- duality at the dimension level -------------------------------------------

dual = trivial.tate_dual()
print("\nTate dual of the trivial character:", classify_character(dual))
print("h0 <-> h2 swap:",
      cohomology_profile(trivial).h0 == cohomology_profile(dual).h2,
      cohomology_profile(trivial).h2 == cohomology_profile(dual).h0)

# --- induction bookkeeping ----------------------------------------------------

rec = induction_profile(trivial)
print("\ninduction to Q_p: rank", rec["rank_over_base"],
      "| profile preserved:", rec["h_i_preserved"],
      "| table:", rec["profile"].as_tuple())

# --- the two-coordinate cocycle picture ----------------------------------------

print("\ncrystalline line b = 0:")
print("  (1, 0):", is_crystalline_line(
    CocycleCoordinates(PadicScalar.one(p, N), PadicScalar.zero(p, N))))
print("  (0, 1):", is_crystalline_line(
    CocycleCoordinates(PadicScalar.zero(p, N), PadicScalar.one(p, N))))

# --- dimension counts for the non-split two-block extension ---------------------

print("\nnon-split block of rank r = 2 over degree d = 2:",
      nonsplit_block_dims(2, 2))
