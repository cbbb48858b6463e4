"""The W_{1+infinity} commutation law, specialized at q = a and q = b.

Checks [T_k(a), T_l(b)] = (a^l - b^k) T_{k+l}(ab) plus the central term on
all power sums of degree <= 4 for a couple of rational points.
"""
from fractions import Fraction

from symclass import vertex
from symclass.combinat import partitions_up_to
from symclass.symfun import SymF

N = 7
basis = [SymF.p(*lam) for lam in partitions_up_to(4)]
for a, b in [(Fraction(2), Fraction(3)), (Fraction(1, 2), Fraction(5))]:
    bad = 0
    for k in range(-2, 3):
        for l in range(-2, 3):
            A, B, C = vertex.t_at(k, a, N), vertex.t_at(l, b, N), vertex.t_at(k + l, a * b, N)
            for f in basis:
                rhs = C(f) * (a**l - b**k)
                if k == -l:
                    rhs = rhs + f * ((a ** (-k) - b ** (-l)) / (1 - a * b))
                bad += A(B(f)) - B(A(f)) != rhs
    print(f"(a, b) = ({a}, {b}): {25 * len(basis)} checks, {bad} failures")
