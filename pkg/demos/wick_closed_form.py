"""Gaussian expectations of power sums of Z Z^*.

For small rho the expectation of p_rho(Z Z^*) is computed twice: by
enumerating all Wick pairings, and from the closed sum over permutations.
"""
from symclass import wick
from symclass.combinat import partitions_of

M, cap = 3, 8
for r in range(1, 4):
    for rho in partitions_of(r):
        brute = wick.p_expectation(rho, wick.MU, M, cap)
        closed = wick.p_expectation_closed(rho, M, cap)
        print(f"rho={rho}: {len(brute)} monomials, closed form {'matches' if brute == closed else 'DIFFERS'}")

print("\n<p_(2)> with M=2:")
for exps, c in wick.p_expectation((2,), wick.MU, 2, 4).items():
    print(f"  {c} * a^{exps[:2]} b^{exps[2:]}")
