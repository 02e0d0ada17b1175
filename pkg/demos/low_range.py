"""Scan the first few hundred Perrin numbers for two-block decimal strings."""

from perrin_repdigits.search import brute_search, excluded_repdigits
from perrin_repdigits.sequences import SequenceCache

cache = SequenceCache()
print("P_0..P_23:", [cache[n] for n in range(24)])
print()

for rec in brute_search(0, 500, cache):
    p = rec.pattern
    print(f"P_{rec.n:<3} = {rec.value:<5}  {p.d1} repeated {p.ell}, then {p.d2} repeated {p.m}")

# a single repeated digit does not count
print()
print("repdigits (excluded):", excluded_repdigits(0, 500, cache))
