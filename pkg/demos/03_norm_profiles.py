"""
Norm profiles across a whole modulus
====================================

Sweeping every pair 0 <= j < i < M records how large the coefficients of
the scaled inverses actually get, case by case. Two phenomena show up for
the scale-1 (coprime) case: the worst coefficient over all pairs depends
on more than the gap i - j (multiplying by the unit x^j moves norms), and
different M of the same shape behave differently: M = 33 tops out at
p - 1 = 2 while M = 35 reaches p - 1 = 4 only at four unit-gap pairs and
stays at p - 2 = 3 for every pure gap x^k - 1.
"""
from collections import Counter

from cycloring import InverseCase, make_modulus, norm_profile

for M in (33, 35):
    m = make_modulus(M)
    prof = norm_profile(m)
    rows = [r for r in prof.rows if r.case == InverseCase.COPRIME]
    hist = Counter(r.norm for r in rows)
    norm, i, j = prof.case_max[InverseCase.COPRIME]
    print(f"M={M} (p={m.shape.p}, q={m.shape.q})")
    print(f"  coprime-case norm histogram: {dict(sorted(hist.items()))}")
    print(f"  max {norm} first attained at (i,j)=({i},{j})")
    gap_max = max(r.norm for r in rows if r.j == 0)
    print(f"  max over pure gaps (j = 0): {gap_max}")

# Scales never drop below the constructed ones: every flagged row would
# mark a pair whose scale admits a smaller inverse, and none exist.
for M in (33, 35, 45, 121):
    prof = norm_profile(make_modulus(M))
    print(f"M={M}: flagged non-minimal scales: {len(prof.flagged)}")
