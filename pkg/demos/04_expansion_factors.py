"""
Expansion factors of monomials
==============================

Multiplying by x^k permutes-and-folds coefficients mod Phi_M, so it can
grow the max norm of a ring element by at most a bounded factor. Powers of
two never grow anything (factor 1); odd prime powers double at worst; for
p^s q^t the factor tops out at 2p. The per-k profile comes from row sums
of the reduction matrix over a sliding column window, and a randomized
oracle confirms each value from below and above.
"""
from cycloring import (make_modulus, max_expansion_factor,
                       monomial_expansion_factor, randomized_expansion_check)

for M in (16, 9, 27, 21, 45, 35):
    m = make_modulus(M)
    report = max_expansion_factor(m)
    print(f"M={M:>3}: max factor {report.max_factor} at k={report.witness_k}, "
          f"witness g = {report.witness_g}")

# The in-between exponents are tame; the profile for M = 21 peaks at the
# distinguished exponent k = 11.
m = make_modulus(21)
report = max_expansion_factor(m)
print("\nper-k factors for M=21:", list(report.per_k))

factor, witness = monomial_expansion_factor(11, m)
print(f"k=11: factor {factor}, witness {witness}")
print("1000 random g stay within the factor:",
      randomized_expansion_check(11, m, 1000))
