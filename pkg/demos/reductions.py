"""Shrink the astronomically large bounds with two continued-fraction reductions."""

from collections import Counter

from perrin_repdigits.baker import bound_chain
from perrin_repdigits.pipeline import stage1_constants, stage1_reduction, stage2_reduction

M = bound_chain("fidelity").ell_plus_m_bound

c = stage1_constants(M)
print(f"M ||tau q|| = {float(c['M_kappa_distance']):.7f} at q index {c['q_index']}")
for d1, d in c["mu_distance"].items():
    print(f"  d1 = {d1}: ||mu q|| = {float(d):.7f}")

s1 = stage1_reduction(M)
for o in s1.outcomes:
    print(f"d1 = {o.d1}: {o.method:<14} q index {o.q_index}  ell <= {o.k_bound}")
print("=> ell <=", s1.bound)
print()

s2 = stage2_reduction(M, s1.bound)
print(len(s2.outcomes), "instances in the second reduction")
print("convergent used:", dict(sorted(Counter(o.q_index for o in s2.outcomes).items())))
print(f"smallest epsilon: {float(s2.min_epsilon()):.6e}")
worst = max(s2.outcomes, key=lambda o: o.k_bound)
print(f"largest bound n <= {worst.k_bound} at (d1, d2, ell) = ({worst.d1}, {worst.d2}, {worst.ell})")
