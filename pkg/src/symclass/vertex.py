"""Vertex operator modes and the Jucys-Murphy multiplication operators.

The vertex operator

    V(z; q) = sigma_z((q-1)A) D_{sigma_{1/z}((1-q^{-1})A)} = sum_m V_m(q) z^{-m}

is assembled mode by mode from complete symmetric functions evaluated
at scaled alphabets.  The mode ``V_m`` lowers degree by ``m``.  From it:

* ``W_k(q) = (V_k - delta_{k,0}) / (1 - q^{-1})`` and ``T_k(q) = -q^{-1} W_k(q)``;
* ``T_{k,n} = n! [t^n] T_k(e^t)``;
* the operator multiplying by ``sum_i (q^{xi_i} - 1)`` in every ``Z S_n``,
  ``(V_0 - 1) / ((q-1)(1-q^{-1})) - E``, and its Taylor coefficients
  ``D_k`` which multiply by ``p_k`` of the Jucys-Murphy elements.

``q`` stays a formal Laurent variable through every division; ``t``
only appears at the end through ``q = e^t``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .combinat import binomial, contents
from .diffop import PolyDiffOp, euler
from .scalars import QLaurent, TSeries, bernoulli
from .symfun import h, reweight

__all__ = [
    "vertex_mode",
    "w_operator",
    "t_operator",
    "t_mode",
    "t_at",
    "jm_generating_operator",
    "d_operator",
    "d_operator_bernoulli",
    "shifted_power_operator",
    "bracket_coefficients",
    "bracket_prediction",
    "shifted_eigen",
    "pn_relation_check",
    "content_power_sum",
]

_Q = QLaurent.q


def _minus_weight(k):
    return _Q(k) - 1


def _plus_weight(k):
    return 1 - _Q(-k)


@lru_cache(maxsize=None)
def _h_scaled(a: int, side: str):
    """``h_a((q-1)A)`` or ``h_a((1-q^{-1})A)`` as SymF over QLaurent."""
    return reweight(h(a), _minus_weight if side == "left" else _plus_weight)


@lru_cache(maxsize=None)
def vertex_mode(m: int, n: int) -> PolyDiffOp:
    """Mode ``V_m(q)``, exact on inputs of degree ``<= n``.

    ``V_m = sum_{b - a = m} h_a((q-1)A) D_{h_b((1-q^{-1})A)}`` with ``b <= n``.
    """
    terms = {}
    for b in range(max(0, m), n + 1):
        a = b - m
        left = _h_scaled(a, "left").terms
        right = _h_scaled(b, "right").terms
        for mu, x in left.items():
            for nu, y in right.items():
                terms[(mu, nu)] = x * y
    return PolyDiffOp._raw(terms, n)


@lru_cache(maxsize=None)
def w_operator(k: int, n: int) -> PolyDiffOp:
    """``W_k(q) = (V_k(q) - delta_{k,0}) / (1 - q^{-1})`` by exact Laurent division."""
    v = vertex_mode(k, n)
    if k == 0:
        v = v - 1
    denom = 1 - _Q(-1)
    return v.map_coeffs(lambda c: c.exact_div(denom))


@lru_cache(maxsize=None)
def t_operator(k: int, n: int) -> PolyDiffOp:
    """``T_k(q) = -q^{-1} W_k(q)``."""
    factor = -_Q(-1)
    return w_operator(k, n).map_coeffs(lambda c: c * factor)


@lru_cache(maxsize=None)
def t_at(k: int, x, n: int) -> PolyDiffOp:
    """``T_k(q)`` specialized at the rational point ``q = x``."""
    return t_operator(k, n).evaluate_q(Fraction(x))


@lru_cache(maxsize=None)
def t_mode(k: int, j: int, n: int) -> PolyDiffOp:
    """``T_{k,j}``, the coefficient of ``t^j / j!`` in ``T_k(e^t)``."""
    return t_operator(k, n).map_coeffs(lambda c: c.to_tseries(j).derivative_at_zero(j))


@lru_cache(maxsize=None)
def jm_generating_operator(n: int) -> PolyDiffOp:
    """``(V_0 - 1)/((q-1)(1-q^{-1})) - E`` over QLaurent, exact up to degree ``n``.

    Acting on ``Sym_m`` it multiplies (through the Frobenius map) by
    ``sum_i (q^{xi_i} - 1)`` in the center of ``Z S_m``.
    """
    denom = (_Q(1) - 1) * (1 - _Q(-1))
    op = (vertex_mode(0, n) - 1).map_coeffs(lambda c: c.exact_div(denom))
    return op - euler(n).map_coeffs(QLaurent.const)


@lru_cache(maxsize=None)
def d_operator(k: int, n: int) -> PolyDiffOp:
    """``D_k``: multiplication by ``p_k(xi_1, ..., xi_m)`` on every ``Sym_m``, ``m <= n``.

    Extracted as ``k! [t^k]`` of the generating operator at ``q = e^t``.
    """
    if k < 1:
        raise ValueError("k must be >= 1 (D_0 is the Euler operator)")
    return jm_generating_operator(n).map_coeffs(lambda c: c.to_tseries(k).derivative_at_zero(k))


def d_operator_bernoulli(k: int, n: int) -> PolyDiffOp:
    """``D_k`` assembled from the modes ``T_{0,j}`` and Bernoulli numbers:

    ``D_k = sum_{i=0}^{k} (-1)^{i-1} C(k, i) B_i T_{0, k+1-i} / (k+1-i)``.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    out = PolyDiffOp.zero(n)
    for i in range(k + 1):
        sign = 1 if i % 2 else -1
        c = sign * binomial(k, i) * bernoulli(i) / Fraction(k + 1 - i)
        if c:
            out = out + t_mode(0, k + 1 - i, n) * c
    return out


def shifted_power_operator(m: int, n: int) -> PolyDiffOp:
    """``P_m = sum_{k<m} C(m, k) D_k`` with ``D_0 = E``."""
    out = euler(n)
    for k in range(1, m):
        out = out + d_operator(k, n) * binomial(m, k)
    return out


def bracket_coefficients(k: int, order: int) -> list:
    """Coefficients ``c_i`` of ``(e^{kt} - 1) / (1 - e^{-t}) = sum_i c_i t^i``.

    Since ``[T_0(q), alpha_k] = (1 - q^k) T_k(q)``, for ``j >= 1``
    ``[D_j, alpha_k] = j! sum_{i+m=j} c_i T_{k,m} / m!``.
    """
    num = TSeries.exp(k, order + 1) - 1
    den = 1 - TSeries.exp(-1, order + 1)
    return list((num.shift_down(1) / den.shift_down(1)).coeffs)


def bracket_prediction(j: int, k: int, n: int) -> PolyDiffOp:
    """``[D_j, alpha_k]`` written in terms of the ``T_{k,m}``."""
    if j < 1 or k == 0:
        raise ValueError("need j >= 1 and k != 0")
    c = bracket_coefficients(k, j)
    out = PolyDiffOp.zero(n)
    for i in range(j + 1):
        m = j - i
        coef = factorial(j) * c[i] / factorial(m)
        if coef:
            out = out + t_mode(k, m, n) * coef
    return out


def content_power_sum(lam, k: int) -> int:
    """``p_k`` of the contents of ``lam``; ``p_0`` is ``|lam|``."""
    return sum(c**k for c in contents(lam)) if k else sum(lam)


def shifted_eigen(lam, k: int) -> int:
    """``sum_j [(lam_j - j + 1)^k - (1 - j)^k]`` over rows ``j = 1, 2, ...``."""
    return sum((part - j + 1) ** k - (1 - j) ** k for j, part in enumerate(lam, start=1))


def pn_relation_check(lam, m: int) -> bool:
    """Whether ``shifted_eigen(lam, m) = sum_{k<m} C(m, k) p_k(contents(lam))``."""
    rhs = sum(binomial(m, k) * content_power_sum(lam, k) for k in range(m))
    return shifted_eigen(lam, m) == rhs
