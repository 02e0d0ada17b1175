"""The chain of estimates behind the initial bound on n.

The fidelity chain carries fixed envelope constants forward, checking at each
link that the freshly computed value is no larger.  The audit chain carries
the computed values.  The gap is large.
"""

from perrin_repdigits.baker import bound_chain
from perrin_repdigits.realfield import format_decimal

fid = bound_chain("fidelity")
aud = bound_chain("audit")

print(f"{'link':<22}{'computed (fidelity)':>22}{'envelope':>14}{'audit':>16}")
for name, step in fid.steps.items():
    print(f"{name:<22}{format_decimal(step.computed, 6, 'up'):>22}"
          f"{format_decimal(step.envelope, 3):>14}{format_decimal(aud.used(name), 6, 'up'):>16}")

print()
print("n bound:       fidelity", fid.n_bound, " audit", aud.n_bound)
print("ell + m bound: fidelity", fid.ell_plus_m_bound, " audit", aud.ell_plus_m_bound)
# reading n < H (1 + log n)^2 literally moves the n bound slightly, not the digit bound
print("n bound with (1 + log n):", format_decimal(fid.sound_n_bound, 6, "up"))
print("ell + m with (1 + log n):", format_decimal(fid.sound_ell_plus_m_bound, 6, "up"))
