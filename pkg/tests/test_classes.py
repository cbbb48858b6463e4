from fractions import Fraction

import pytest

from symclass.classes import (
    OracleMismatch,
    a_class,
    a_structure,
    a_sym,
    format_row,
    jm_in_a,
    jm_table,
    phi_series,
    product_in_a,
    product_in_a_oracle_check,
    to_classes,
)
from symclass.combinat import factorial, partitions_up_to
from symclass.group_algebra import class_decomposition, class_sum, frobenius, jm_power_sum
from symclass.symfun import SymF
from symclass.verify import golden_table

F = Fraction


def test_a_sym_and_class():
    assert a_sym((2,), 3) == SymF.p(2, 1) * 6
    assert a_sym((3,), 2) == SymF.zero()
    assert a_class((2,), 3) == class_sum(3, (2, 1)) * 2
    assert frobenius(a_class((2,), 3)) == SymF.p(2, 1) * 6
    for kappa in partitions_up_to(3):
        for n in range(5):
            assert frobenius(a_class(kappa, n)) == a_sym(kappa, n)


def test_phi_series_examples():
    s = phi_series((2,), 4)
    assert (s[0], s[1], s[2], s[3]) == (0, F(1, 2), 0, F(1, 12))
    assert phi_series((1,), 5).coeffs == (1, 0, 0, 0, 0, 0)
    s = phi_series((2, 1), 4)
    assert s.valuation() == 3 and s[3] * factorial(3) == 1


def test_leading_terms():
    for kappa in partitions_up_to(8):
        if not kappa or sum(kappa) + len(kappa) > 8:
            continue
        low = sum(kappa) + len(kappa) - 2
        s = phi_series(kappa, low)
        mults = 1
        for part in set(kappa):
            mults *= factorial(kappa.count(part))
        assert s.valuation() == low
        assert s[low] == F(1, factorial(sum(kappa)) * mults)


def test_rows_small():
    assert jm_in_a(1) == {(2,): F(1, 2)}
    assert jm_in_a(2) == {(3,): F(1, 3), (1, 1): F(1, 2)}
    assert jm_in_a(4) == {
        (5,): F(1, 5),
        (2, 2): F(1, 2),
        (3, 1): F(1),
        (1, 1, 1): F(2, 3),
        (3,): F(5, 3),
        (1, 1): F(1, 2),
    }


def test_table_matches_published():
    assert jm_table(6) == golden_table()


def test_support_bounds():
    for m in range(1, 8):
        for kappa in jm_in_a(m):
            assert kappa != (1,)
            assert sum(kappa) <= m + 1
            assert len(kappa) <= m - sum(kappa) + 2


@pytest.mark.parametrize("n", range(1, 8))
def test_substitution(n):
    for m in range(1, 7):
        assert to_classes(jm_in_a(m), n) == class_decomposition(jm_power_sum(n, m))


def test_powersum_two_formula():
    for n in range(3, 8):
        assert to_classes(jm_in_a(2), n) == {(3,) + (1,) * (n - 3): 1, (1,) * n: F(n * (n - 1), 2)}


def test_product_examples():
    assert product_in_a(1, (1,), check_n=[3, 4, 5]) == {(2, 1): F(1, 2), (2,): F(1)}
    for m in range(1, 6):
        assert product_in_a(m) == jm_in_a(m)


@pytest.mark.parametrize("kappa", [(1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1)])
def test_product_n_independence(kappa):
    for m in range(1, 5):
        coeffs = product_in_a(m, kappa)
        for n in (4, 5, 6):
            product_in_a_oracle_check(m, kappa, coeffs, n)


def test_oracle_mismatch_is_loud():
    with pytest.raises(OracleMismatch):
        product_in_a_oracle_check(1, (1,), {(2, 1): F(1, 2)}, 4)


def test_a_structure_examples():
    assert a_structure((2,), (2,)) == {(2, 2): 1, (3,): 4, (1, 1): 2}
    assert a_structure((), (2, 1)) == {(2, 1): 1}
    g = a_structure((2,), (2,))
    assert all(v.denominator == 1 and v >= 0 for v in g.values())


def test_a_structure_windows_agree():
    small = [k for k in partitions_up_to(3)]
    for alpha in small:
        for beta in small:
            top = sum(alpha) + sum(beta)
            base = a_structure(alpha, beta)
            for offset in range(1, 3):
                if top + offset <= 7:
                    assert a_structure(alpha, beta, offset=offset) == base


def test_a_structure_window_too_large():
    with pytest.raises(ValueError):
        a_structure((3,), (3,), offset=2, max_n=7)


def test_format_row():
    assert format_row({(3,): F(1, 3), (1, 1): F(1, 2)}) == "1/3 a_3 + 1/2 a_11"
    assert format_row({(2,): F(-1)}) == "-a_2"
    assert format_row({}) == "0"
