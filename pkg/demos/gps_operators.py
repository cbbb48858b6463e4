"""Multiplying class sums with a differential operator.

Builds H_(2,2) as an operator on degree-5 symmetric functions and uses it to
multiply C_(2,2,1) into every class of S_5, comparing with brute force.
"""
from symclass import wick
from symclass import group_algebra as ga
from symclass.combinat import partitions_of

n, rho = 5, (2, 2)
H = wick.gps_operator(rho, n)
print(f"H_{rho} has {len(H.terms)} normal-ordered terms up to degree {n}")

c_rho = ga.class_sum(n, rho)
for beta in partitions_of(n):
    cb = ga.class_sum(n, beta)
    via_operator = H(ga.frobenius(cb))
    brute = ga.frobenius(ga.ga_mul(c_rho, cb))
    dec = ga.structure_constants(n, rho, beta)
    terms = " + ".join(f"{c} C_{''.join(map(str, g))}" for g, c in dec.items())
    print(f"C_22 C_{''.join(map(str, beta))} = {terms}  [{'ok' if via_operator == brute else 'MISMATCH'}]")
