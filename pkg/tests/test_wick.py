from fractions import Fraction

import pytest

from symclass.combinat import compose, inverse, partitions_of, permutation_of_type
from symclass.diffop import apply
from symclass.group_algebra import class_sum, frobenius, ga_mul, structure_constants
from symclass.symfun import SymF
from symclass.vertex import d_operator
from symclass.wick import (
    MU,
    NU,
    MPoly,
    cauchy_log,
    gps_operator,
    hss_prediction,
    p_expectation,
    p_expectation_closed,
    partition_function,
    wick_expectation,
)


def geometric(M, cap, i, j, coeff):
    t = {}
    for l in range(cap // 2 + 1):
        e = [0] * (2 * M)
        e[i - 1] = e[M + j - 1] = l
        t[tuple(e)] = coeff
    return MPoly(M, cap, t)


def test_single_pairings():
    z, zs = (False, 1, 1), (True, 1, 1)
    assert wick_expectation([z, zs], MU, 1, 6) == geometric(1, 6, 1, 1, 2)
    assert wick_expectation([z, zs], NU, 1, 6) == 2
    assert not wick_expectation([z, zs, z], MU, 1, 6)
    assert not wick_expectation([z, z], MU, 1, 6)
    assert not wick_expectation([(False, 1, 2), (True, 2, 1)], NU, 2, 4)


def test_hafnian_count():
    one = MPoly.constant(4, 0)
    for k in range(1, 5):
        word = [(False, i, i) for i in range(1, k + 1)] + [(True, i, i) for i in range(1, k + 1)]
        got = wick_expectation(word, M=k, cap=0, propagator=lambda s, t: MPoly.constant(k, 0))
        assert got == [1, 1, 2, 6, 24][k]


def test_rho_one_mu():
    M, cap = 2, 8
    want = MPoly(M, cap)
    for m in range(1, cap // 2 + 1):
        want = want + MPoly.power_sum(M, cap, "a", m) * MPoly.power_sum(M, cap, "b", m) * 2
    assert p_expectation((1,), MU, M, cap) == want
    assert p_expectation_closed((1,), M, cap) == want


@pytest.mark.parametrize("rho", [(1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1)])
def test_closed_form(rho):
    assert p_expectation(rho, MU, 3, 8) == p_expectation_closed(rho, 3, 8)


@pytest.mark.parametrize("rho", [(4,), (2, 2)])
def test_closed_form_weight_four(rho):
    assert p_expectation(rho, MU, 4, 8) == p_expectation_closed(rho, 4, 8)


@pytest.mark.parametrize("n", range(1, 5))
def test_hss(n):
    for lam in partitions_of(n):
        want = hss_prediction(lam, lambda a, b: structure_constants(n, a, b), n, 2 * n)
        assert p_expectation(lam, NU, n, 2 * n) == want


def test_swap_symmetry():
    for rho in [(2,), (3,), (2, 1)]:
        f = p_expectation_closed(rho, 3, 8)
        assert f == f.swap_sides()


def test_partition_function():
    assert partition_function(1, 6) == geometric(1, 6, 1, 1, 1)
    z = partition_function(2, 4)
    for i in range(2):
        for j in range(2):
            e = [0, 0, 0, 0]
            e[i] = e[2 + j] = 1
            assert z.terms[tuple(e)] == 1
    assert partition_function(2, 6) == cauchy_log(2, 6)


def test_gps_examples():
    assert apply(gps_operator((2,), 6), SymF.p(1, 1, 1)) == SymF.p(2, 1) * 3
    assert apply(gps_operator((3,), 6), SymF.p(1, 1, 1, 1)) == SymF.p(3, 1) * 8
    assert gps_operator((2,), 8).same_on(d_operator(1, 8), 8)
    with pytest.raises(ValueError):
        gps_operator((2, 1), 5)


@pytest.mark.parametrize("n", range(2, 6))
def test_gps_law(n):
    for rho in [r for k in range(2, n + 1) for r in partitions_of(k) if 1 not in r]:
        H = gps_operator(rho, n)
        for beta in partitions_of(n):
            cb = class_sum(n, beta)
            assert H(frobenius(cb)) == frobenius(ga_mul(class_sum(n, rho), cb))


def test_sigma_invariance():
    rho = (3, 2)
    base = gps_operator(rho, 6)
    shift = (1, 2, 3, 4, 0)
    alt = compose(compose(shift, permutation_of_type(rho)), inverse(shift))
    assert alt != permutation_of_type(rho)
    assert gps_operator(rho, 6, sigma=alt).same_on(base, 6)
    assert p_expectation_closed((2, 1), 3, 6, sigma=(0, 2, 1)) == p_expectation_closed((2, 1), 3, 6)


def test_mpoly_json():
    f = p_expectation_closed((2,), 2, 6)
    assert MPoly.from_json(f.to_json()) == f
