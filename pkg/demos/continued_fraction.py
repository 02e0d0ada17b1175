"""Certified continued fraction of tau = log 10 / log alpha.

Each partial quotient is only accepted once the whole enclosure of the
current remainder has the same integer part.  If that fails the expansion
restarts with twice the digits.
"""

from perrin_repdigits.contfrac import a_max, tau, tau_expansion

M = 6 * 10**47

t = tau(60)
print("tau =", t)

cf = tau_expansion(6 * M, 12, 256)
print("quotients:", list(cf.quotients[:32]), "...")

k = cf.first_index_above(6 * M)
print(f"first q above 6M: index {k} (counting from 0)")
print("  p =", cf.p(k))
print("  q =", cf.q(k))
print("largest quotient up to there:", a_max(cf, M))
