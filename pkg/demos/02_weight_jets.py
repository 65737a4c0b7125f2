"""First-order jets of eigenvalue families and logarithmic derivatives.

A family like beta(k) = 3 * 6^(2(k - kbar)) is carried as its value and
partial derivatives at kbar; dlog extracts the logarithmic derivative
that every L-invariant formula consumes.  Closed-form families can also
be evaluated at shifted weights, so finite differences give a fully
independent check of each derivative.
"""

from padiclinv import (
    ExponentialFamily,
    PadicScalar,
    WeightJet,
    dlog,
    iwasawa_log,
    specialize_parallel,
)

p, N = 5, 20
S = lambda n: PadicScalar.from_integer(n, p, N)

# --- jet arithmetic is exact first-order calculus ---------------------------

a = WeightJet(S(3), {"k": S(1)}, {"k": 6})     # value 3, d/dk = 1 at k = 6
b = WeightJet(S(2), {}, {"k": 6})              # a constant
print("product:", (a * b).value, "| partial:", (a * b).partial("k"))
print("a/a is the constant 1:", (a / a).value == 1, (a / a).partial("k").is_zero())

# --- families and dlog -------------------------------------------------------

family = ExponentialFamily(S(3), S(6), {"k": 2}, {"k": 6})
jet = family.jet()
print("\nfamily 3 * 6^(2(k-6)) at k = 6")
print("dlog:", dlog(jet, "k"))
print("equals 2 log 6:", dlog(jet, "k") == 2 * iwasawa_log(S(6)))

# dlog never sees constants or powers of p
scaled = jet * WeightJet.constant(S(7) * PadicScalar.p_power(p, 3, N), {"k": 6})
print("scale invariance of dlog:", dlog(scaled, "k") == dlog(jet, "k"))

# dlog turns products into sums
other = ExponentialFamily(S(7), S(6), {"k": 5}, {"k": 6}).jet()
print("dlog(fg) = dlog f + dlog g:",
      dlog(jet * other, "k") == dlog(jet, "k") + dlog(other, "k"))

# --- finite differences as an independent oracle ----------------------------

# with a unit whose log has high valuation the centered quotient agrees
# with the stored partial far beyond the naive error term
deep = ExponentialFamily(S(3), S(1 + p**6), {"k": 2}, {"k": 6})
m = 3
fd = deep.centered_difference("k", p**m)
diff = fd - deep.jet().partial("k")
print("\ncentered difference at step p^3:")
print("discrepancy valuation:", diff.N if diff.is_zero() else diff.valuation,
      ">= N - 2m =", N - 2 * m)

# --- specializing to parallel weight -----------------------------------------

multi = ExponentialFamily(
    S(1), S(1 + p), {"k_P1_1": 2, "k_P1_2": 3}, {"k_P1_1": 4, "k_P1_2": 4}
).jet()
par = specialize_parallel(multi, "k", ["k_P1_1", "k_P1_2"])
print("\nparallel restriction sums the partials:",
      dlog(par, "k") == 5 * iwasawa_log(S(1 + p)))
