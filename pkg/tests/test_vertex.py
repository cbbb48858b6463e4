from fractions import Fraction

import pytest

from symclass.combinat import contents, partitions_up_to
from symclass.diffop import boson, commutator, euler, goulden_closed, virasoro_d
from symclass.group_algebra import frobenius, jm_power_sum
from symclass.scalars import QLaurent
from symclass.symfun import SymF, schur_in_p
from symclass.vertex import (
    bracket_prediction,
    d_operator,
    d_operator_bernoulli,
    pn_relation_check,
    shifted_eigen,
    shifted_power_operator,
    t_at,
    t_mode,
    vertex_mode,
    w_operator,
)

p = SymF.p
q = QLaurent.q


def test_zero_mode_examples():
    v0 = vertex_mode(0, 4)
    assert v0(p()) == p()
    assert v0(p(1)) == p(1) * (q(-1) - 1 + q(1))


def test_vertex_mode_lowers_degree():
    for m in (-2, -1, 1, 2):
        assert vertex_mode(m, 5).degree_shifts() == {-m}


@pytest.mark.parametrize("k", [1, -1, 2, -2])
def test_mode_generation(k):
    br = commutator(vertex_mode(0, 8), boson(k).map_coeffs(QLaurent.const))
    pred = br.map_coeffs(lambda c: c.exact_div(1 - q(k)))
    assert pred.same_on(vertex_mode(k, 8), 6)


def test_w_division_is_exact():
    # raises on a nonzero remainder
    for k in range(-3, 4):
        w_operator(k, 6)


def test_t_modes_low():
    assert not t_mode(0, 0, 6).restrict(6)
    assert t_mode(0, 1, 6).same_on(-euler(6), 6)
    for k in (1, 2, 3):
        assert t_mode(k, 0, 7).same_on(-boson(k), 7)
        rhs = boson(k) * Fraction(k + 3, 2) - virasoro_d(k, "d", 7)
        assert t_mode(k, 1, 7).same_on(rhs, 7)


def test_d_operator_examples():
    assert d_operator(1, 4)(p(1, 1)) == p(2)
    assert d_operator(1, 4)(p(1, 1, 1)) == p(2, 1) * 3
    assert d_operator(2, 4)(schur_in_p((2, 1))) == schur_in_p((2, 1)) * 2
    for k in range(1, 4):
        assert d_operator(k, 4)(p()) == SymF.zero()


@pytest.mark.parametrize("k", range(1, 7))
def test_oracle_law(k):
    op = d_operator(k, 7)
    for n in range(1, 8):
        assert op(p(*(1,) * n)) == frobenius(jm_power_sum(n, k))


@pytest.mark.parametrize("k", range(1, 6))
def test_content_eigenvalues(k):
    op = d_operator(k, 7)
    for lam in partitions_up_to(7):
        s = schur_in_p(lam)
        assert op(s) == s * sum(c**k for c in contents(lam))


def test_goulden_forms():
    d1 = d_operator(1, 8)
    assert d1.same_on(goulden_closed(8), 8)
    assert d1.same_on((t_mode(0, 2, 8) + t_mode(0, 1, 8)) * Fraction(-1, 2), 8)


@pytest.mark.parametrize("k", range(1, 6))
def test_bernoulli_assembly(k):
    assert d_operator_bernoulli(k, 7).same_on(d_operator(k, 7), 7)


def test_bracket_law_one_point():
    a, b = Fraction(2), Fraction(3)
    for k, l in [(1, -1), (2, 1), (-2, 3), (0, 2)]:
        A, B, C = t_at(k, a, 7), t_at(l, b, 7), t_at(k + l, a * b, 7)
        for lam in partitions_up_to(4):
            f = p(*lam)
            rhs = C(f) * (a**l - b**k)
            if k == -l:
                rhs = rhs + f * ((a ** (-k) - b ** (-l)) / (1 - a * b))
            assert A(B(f)) - B(A(f)) == rhs


@pytest.mark.parametrize("j", [1, 2])
@pytest.mark.parametrize("k", [-2, -1, 1, 2])
def test_charge_one_brackets(j, k):
    lhs = commutator(d_operator(j, 8), boson(k))
    assert lhs.same_on(bracket_prediction(j, k, 8), 6)


def test_shifted_eigen_examples():
    assert shifted_eigen((2, 1), 2) == 3
    assert shifted_eigen((2, 1), 3) == 9
    assert all(shifted_eigen((), n) == 0 for n in range(1, 5))
    for lam in partitions_up_to(8):
        for n in range(1, 6):
            assert pn_relation_check(lam, n)


def test_shifted_power_operator():
    for m in range(1, 4):
        op = shifted_power_operator(m, 5)
        for lam in partitions_up_to(5):
            s = schur_in_p(lam)
            assert op(s) == s * shifted_eigen(lam, m)
