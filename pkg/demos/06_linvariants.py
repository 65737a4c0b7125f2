"""Every L-invariant formula, on families built from explicit units.

For a family beta(k) = B (1+p)^(c(k - kbar)) the local multiplicative
factor is -(1/f) dlog beta = -(c/f) log(1+p) exactly, and the adjoint
determinant formula is reproduced by the general projection-pair
determinant once the complementary block is generated from the weight
forms of the first two graded characters.
"""

from fractions import Fraction

from padiclinv import (
    ExponentialFamily,
    IotaMatrices,
    PadicScalar,
    WeightJet,
    adjoint_iota_wiring,
    assemble_report,
    iwasawa_log,
    linv_adjoint_gsp4,
    linv_general,
    linv_rank_one,
    linv_standard_twists,
    linv_steinberg_spin,
)
from padiclinv import linalg

p, N = 5, 20
S = lambda x: PadicScalar.from_fraction(Fraction(x), p, N)
unit = S(1 + p)
log_unit = iwasawa_log(unit)

# --- the rank-one two-character formula -------------------------------------

one = WeightJet.constant(S(1), {"T": 0})
ratio_at_p = ExponentialFamily(S(1), unit, {"T": 3}, {"T": 0}).jet()
ratio_at_gamma = ExponentialFamily(S(1), unit, {"T": 2}, {"T": 0}).jet()
value = linv_rank_one(ratio_at_p, one, ratio_at_gamma, one, unit)
print("rank-one formula:", value)
print("equals -log(1+p) * 3/2:", value == -(log_unit * S(Fraction(3, 2))))

# --- the multiplicative (Steinberg) spin factor ------------------------------

beta1 = ExponentialFamily(S(3), unit, {"k": 2}, {"k": 8})
print("\nspin factor, f = 1:", linv_steinberg_spin(beta1.jet(), 1))
print("spin factor, f = 2 halves it:",
      linv_steinberg_spin(beta1.jet(), 2) == -log_unit)

# --- twisted standard factors -------------------------------------------------

jets = [
    ExponentialFamily(S(3), unit, {"k": 2}, {"k": 8}).jet(),
    ExponentialFamily(S(7), unit, {"k": 5}, {"k": 8}).jet(),
    ExponentialFamily(S(11), unit, {"k": 1}, {"k": 8}).jet(),
]
print("\ntwist s = 1 equals the spin factor:",
      linv_standard_twists(jets, 2, 1, 3) == linv_steinberg_spin(jets[0], 2))
print("boundary twist s = g-1 uses beta_{g-1} beta_g^{-2}:",
      linv_standard_twists(jets, 1, 2, 3) == -(5 - 2 * 1) * log_unit)

# --- the adjoint determinant (genus 2) ------------------------------------------

bp = {"k1": 3, "k2": 4}
F1 = ExponentialFamily(S(2), unit, {"k1": 1, "k2": 2}, bp).jet()
F2 = ExponentialFamily(S(7), unit, {"k1": 3, "k2": 5}, bp).jet()
adjoint = linv_adjoint_gsp4([(F1, F2)], [1], [("k1", "k2")])
print("\nadjoint factor:", adjoint)
print("equals 2 det(c) log^2:", adjoint == 2 * (1 * 5 - 2 * 3) * log_unit * log_unit)

# the same number through the general determinant: the complementary
# block is generated from the graded weight forms, and its determinant
# f^2/2 is what turns into the 2/f^2 prefactor
wiring = adjoint_iota_wiring([(F1, F2)], [1], [("k1", "k2")])
print("complementary block determinant:",
      linalg.determinant(wiring.iota_c), "= f^2/2")
print("general determinant agrees:", linv_general(wiring) == adjoint)

# --- the general determinant on bare projection matrices --------------------------

iotas = IotaMatrices(iota_f=[[S(6)]], iota_c=[[S(2)]])
print("\n1x1 general determinant 6/2:", linv_general(iotas) == 3)

# --- assembling a report over several primes ---------------------------------------

factors = {
    "P1": linv_steinberg_spin(beta1.jet(), 1),
    "P2": linv_steinberg_spin(
        ExponentialFamily(S(7), unit, {"k": 1}, {"k": 8}).jet(), 2
    ),
}
report = assemble_report(p, N, factors, {"P1": 1, "P2": 1}, spherical_count=0)
print("\nreport status:", report.status)
print("total = product of local factors:",
      report.total == factors["P1"] * factors["P2"])

partial = assemble_report(p, N, factors, {"P1": 1, "P2": 1, "P3": 1},
                          spherical_count=1)
print("with a spherical contribution:", partial.status, "|",
      partial.spherical_status)
