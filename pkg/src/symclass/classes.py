"""Normalized conjugacy classes and n-independent class expansions.

For ``kappa`` of weight ``k`` the normalized class is

    a_{kappa;n} = z_{kappa,1^{n-k}} / (n-k)! * C_{kappa,1^{n-k}}

(zero when ``n < k``), with Frobenius image ``(n)_k p_{kappa,1^{n-k}}``.
Power sums of Jucys-Murphy elements, their products with normalized
classes, and products of normalized classes all expand in this family
with coefficients that do not depend on ``n``.  Each expansion here is
computed from a closed-form series and checked against the group-algebra
oracle, or fitted from the oracle across several ``n``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .combinat import (
    as_partition,
    binomial,
    difference,
    falling,
    factorial,
    pad,
    partition_key,
    partitions_of,
    partitions_up_to,
    sub_multisets,
    union,
    z_of,
)
from .group_algebra import DEFAULT_MAX_N, GAElem, central_product, class_sum, jm_power_sum
from .scalars import QLaurent, TSeries
from .symfun import SymF, h, reweight, shift_alphabet

__all__ = [
    "OracleMismatch",
    "a_sym",
    "a_class",
    "a_class_coeff",
    "to_classes",
    "phi_series",
    "phi_coeff",
    "jm_in_a",
    "jm_table",
    "table_to_json",
    "table_to_text",
    "format_row",
    "product_in_a",
    "product_in_a_oracle_check",
    "a_structure",
    "is_reduced",
]

_Q = QLaurent.q


class OracleMismatch(AssertionError):
    """A closed-form expansion disagrees with the group-algebra oracle."""


def is_reduced(rho) -> bool:
    return all(part > 1 for part in rho)


def _sorted(coeffs: dict) -> dict:
    return dict(sorted(((k, v) for k, v in coeffs.items() if v), key=lambda kv: partition_key(kv[0])))


# normalized classes ------------------------------------------------------------


def a_sym(kappa, n: int) -> SymF:
    """``(n)_k p_{kappa,1^{n-k}}``."""
    kappa = as_partition(kappa)
    k = sum(kappa)
    if n < k:
        return SymF.zero()
    return SymF.p(*pad(kappa, n), coeff=falling(n, k))


def a_class_coeff(kappa, n: int):
    """``(gamma, c)`` with ``a_{kappa;n} = c C_gamma``, or None when ``n < |kappa|``."""
    kappa = as_partition(kappa)
    k = sum(kappa)
    if n < k:
        return None
    gamma = pad(kappa, n)
    return gamma, Fraction(z_of(gamma), factorial(n - k))


def a_class(kappa, n: int) -> GAElem:
    found = a_class_coeff(kappa, n)
    if found is None:
        return GAElem.zero(n)
    gamma, c = found
    return class_sum(n, gamma) * c


def to_classes(coeffs, n: int) -> dict:
    """Class decomposition in ``S_n`` of ``sum_kappa c_kappa a_{kappa;n}``."""
    out = {}
    for kappa, c in dict(coeffs).items():
        found = a_class_coeff(kappa, n)
        if found is None:
            continue
        gamma, w = found
        out[gamma] = out.get(gamma, 0) + c * w
    return _sorted(out)


# the phi series and the table ----------------------------------------------------


@lru_cache(maxsize=None)
def _phi_numerator(kappa) -> QLaurent:
    # (1 - q^{-1})^{k-1} prod (q^{kappa_i} - 1) / (q - 1), exact in q
    k = sum(kappa)
    num = (1 - _Q(-1)) ** (k - 1)
    for part in kappa:
        num = num * (_Q(part) - 1)
    return num.exact_div(_Q(1) - 1)


def phi_series(kappa, order: int) -> TSeries:
    """``phi_kappa(t)`` through ``t^order``."""
    kappa = as_partition(kappa)
    if not kappa:
        raise ValueError("phi_kappa needs a nonempty partition")
    k = sum(kappa)
    return _phi_numerator(kappa).to_tseries(order) * Fraction(1, factorial(k) * z_of(kappa))


def phi_coeff(kappa, m: int) -> Fraction:
    """``phi_{kappa;m}``, the coefficient of ``t^m / m!`` in ``phi_kappa(t)``."""
    kappa = as_partition(kappa)
    k = sum(kappa)
    return _phi_numerator(kappa).t_derivative(m) / (factorial(k) * z_of(kappa))


@lru_cache(maxsize=None)
def _jm_in_a(m: int) -> tuple:
    row = {}
    for k in range(1, m + 2):
        for kappa in partitions_of(k):
            # phi_kappa starts at t^{|kappa| + l(kappa) - 2}
            if len(kappa) > m - k + 2:
                continue
            c = phi_coeff(kappa, m)
            if c:
                row[kappa] = c
    return tuple(_sorted(row).items())


def jm_in_a(m: int) -> dict:
    """Coefficients of ``p_m(Xi_n)`` on the normalized classes ``a_{kappa;n}``."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return dict(_jm_in_a(m))


def jm_table(max_m: int = 6) -> dict:
    return {m: jm_in_a(m) for m in range(1, max_m + 1)}


def _label(kappa) -> str:
    if any(part > 9 for part in kappa):
        return "a_{" + ",".join(map(str, kappa)) + "}"
    return "a_" + "".join(map(str, kappa)) if kappa else "a_0"


def format_row(row: dict) -> str:
    """``1/3 a_3 + 1/2 a_11`` style rendering of a-basis coefficients."""
    parts = []
    for kappa, c in _sorted(row).items():
        lead = "- " if c < 0 else "+ "
        mag = abs(c)
        text = _label(kappa) if mag == 1 else f"{mag} {_label(kappa)}"
        parts.append(lead + text)
    if not parts:
        return "0"
    out = " ".join(parts)
    return out[2:] if out.startswith("+ ") else "-" + out[2:]


def table_to_text(table: dict) -> str:
    return "\n".join(f"p_{m}(Xi) = {format_row(row)}" for m, row in sorted(table.items()))


def table_to_json(table: dict) -> dict:
    return {
        "rows": [
            {
                "m": m,
                "terms": [{"kappa": list(kappa), "coeff": str(c)} for kappa, c in _sorted(row).items()],
            }
            for m, row in sorted(table.items())
        ]
    }


# products with p_m(Xi) ----------------------------------------------------------


@lru_cache(maxsize=None)
def _h_left(r: int) -> SymF:
    # h_r((q - 1)A)
    return reweight(h(r), lambda k: _Q(k) - 1)


@lru_cache(maxsize=None)
def _h_right(r: int) -> SymF:
    # h_r((1 - q^{-1})(B + E)); p_k(E) = delta_{k,1}
    return shift_alphabet(reweight(h(r), lambda k: 1 - _Q(-k)), {1: 1})


@lru_cache(maxsize=None)
def _product_in_a(m: int, kappa) -> tuple:
    z_kappa = z_of(kappa)
    denom = (_Q(1) - 1) * (1 - _Q(-1))
    acc = {}
    # higher r only contribute beyond t^m
    for r in range(1, m + sum(kappa) + 2):
        left = _h_left(r).terms
        right = _h_right(r)
        for lam in sub_multisets(kappa):
            hb = right.coeff(difference(kappa, lam))
            if not hb:
                continue
            # sigma_1(AB) supplies p_lam(A) p_lam(B) / z_lam
            weight = hb * Fraction(z_kappa, z_of(lam))
            for mu, c in left.items():
                key = union(lam, mu)
                acc[key] = acc.get(key, 0) + c * weight
    out = {}
    for mu, c in acc.items():
        v = c.exact_div(denom).t_derivative(m)
        if v:
            out[mu] = v
    return tuple(_sorted(out).items())


def product_in_a_oracle_check(m: int, kappa, coeffs: dict, n: int) -> None:
    """Raise OracleMismatch unless ``p_m(Xi_n) a_{kappa;n}`` matches ``coeffs`` in ``S_n``."""
    lhs = central_product(jm_power_sum(n, m), a_class(kappa, n))
    rhs = to_classes(coeffs, n)
    if lhs != rhs:
        diff = {g: (lhs.get(g, 0), rhs.get(g, 0)) for g in set(lhs) | set(rhs) if lhs.get(g, 0) != rhs.get(g, 0)}
        gamma = min(diff, key=partition_key)
        raise OracleMismatch(
            f"p_{m}(Xi_{n}) x a_{list(kappa)}: class {list(gamma)} oracle {diff[gamma][0]} vs series {diff[gamma][1]}"
        )


def product_in_a(m: int, kappa=(), check_n=None) -> dict:
    """Coefficients ``d^mu_{kappa;m}`` of ``p_m(Xi_n) a_{kappa;n} = sum d^mu a_{mu;n}``.

    Read off from the two-alphabet generating series: the coefficient of
    ``t^m/m! p_kappa(B)/z_kappa`` in
    ``sigma_1(AB) sum_r h_r((q-1)A) h_r((1-q^{-1})(B+E)) / ((q-1)(1-q^{-1}))``
    with ``p_mu(A)`` standing for ``a_mu``.  Every ``n`` in ``check_n`` is
    cross-checked against the oracle.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    kappa = as_partition(kappa)
    out = dict(_product_in_a(m, kappa))
    for n in check_n or ():
        product_in_a_oracle_check(m, kappa, out, n)
    return out


# a-basis structure constants ----------------------------------------------------


@lru_cache(maxsize=None)
def _oracle_product(alpha, beta, n: int) -> dict:
    if n < max(sum(alpha), sum(beta)):
        return {}
    return central_product(a_class(alpha, n), a_class(beta, n))


def _fit_falling(values: list, start: int) -> list:
    """Coefficients ``g_i`` with ``y(x) = sum_i g_i (x)_i`` from ``y(start), y(start+1), ...``."""
    diffs = []
    row = list(values)
    while row:
        diffs.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]
    # Newton about start: y(x) = sum_j (Delta^j y(start) / j!) (x - start)_j, then
    # (x - start)_j = sum_i C(j, i) (x)_i (-start)_{j-i}
    newton = [Fraction(d, factorial(j)) for j, d in enumerate(diffs)]
    return [
        sum((newton[j] * binomial(j, i) * falling(-start, j - i) for j in range(i, len(newton))), Fraction(0))
        for i in range(len(newton))
    ]


def a_structure(alpha, beta, offset: int = 0, max_n: int = DEFAULT_MAX_N) -> dict:
    """``g_{alpha beta}^gamma`` in ``a_alpha a_beta = sum_gamma g^gamma a_gamma``.

    For a reduced ``rho`` of weight ``r`` the class ``C_{rho,1^{n-r}}``
    receives ``z_rho sum_j g_{rho,1^j} (n-r)_j``, a polynomial of degree at
    most ``|alpha| + |beta| - r`` in ``n - r``.  It is interpolated from the
    oracle at ``n - r = offset, offset + 1, ...``; the result is then checked
    at every ``n <= max_n`` not used for fitting (OracleMismatch on failure).
    """
    alpha, beta = as_partition(alpha), as_partition(beta)
    top = sum(alpha) + sum(beta)
    if top + offset > max_n:
        raise ValueError(f"fitting window needs n up to {top + offset} > max_n={max_n}")
    out = {}
    for rho in partitions_up_to(top):
        if not is_reduced(rho):
            continue
        r = sum(rho)
        values = []
        for x in range(offset, offset + top - r + 1):
            n = r + x
            values.append(_oracle_product(alpha, beta, n).get(pad(rho, n), 0) / Fraction(z_of(rho)))
        for i, g in enumerate(_fit_falling(values, offset)):
            if g:
                out[union(rho, (1,) * i)] = g
    out = _sorted(out)
    for n in range(max_n + 1):
        if _oracle_product(alpha, beta, n) != to_classes(out, n):
            raise OracleMismatch(f"a_{list(alpha)} a_{list(beta)} expansion fails in S_{n}")
    return out
