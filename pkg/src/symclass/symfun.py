"""Symmetric functions stored in the power-sum basis.

A :class:`SymF` is a finite sparse combination of power-sum monomials
``p_mu = p_{mu_1} p_{mu_2} ...`` with coefficients in any of the exact
scalar rings (``Fraction``, :class:`~symclass.scalars.QLaurent`,
:class:`~symclass.scalars.TSeries`).  Schur functions are produced on
demand from characters of the symmetric group computed with the
Murnaghan-Nakayama rule.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache

from .combinat import (
    as_partition,
    partition_key,
    partitions_of,
    union,
    z_of,
)
from .scalars import QLaurent, TSeries

__all__ = [
    "SymF",
    "skew_monomial",
    "scalar_product",
    "skew",
    "reweight",
    "shift_alphabet",
    "character",
    "char",
    "dim_f",
    "schur_in_p",
    "to_schur",
    "from_schur",
    "times_product",
    "h",
    "e",
]


class SymF:
    """Sparse symmetric function ``sum_mu c_mu p_mu``.

    Instances are immutable; arithmetic returns new objects.  Zero
    coefficients are never stored.
    """

    __slots__ = ("_t",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for mu, c in items:
                mu = as_partition(mu)
                c = _to_scalar(c)
                s = t.get(mu, 0) + c
                if s:
                    t[mu] = s
                else:
                    t.pop(mu, None)
        self._t = t

    @classmethod
    def _raw(cls, t):
        obj = cls.__new__(cls)
        obj._t = t
        return obj

    @classmethod
    def p(cls, *parts, coeff=1) -> "SymF":
        """The monomial ``coeff * p_parts``; parts may come in any order."""
        mu = tuple(sorted(parts, reverse=True))
        return cls({mu: coeff})

    @classmethod
    def one(cls) -> "SymF":
        return cls._raw({(): Fraction(1)})

    @classmethod
    def zero(cls) -> "SymF":
        return cls._raw({})

    @property
    def terms(self) -> dict:
        return dict(self._t)

    def items(self):
        """Terms in canonical order (weight descending, reverse lexicographic)."""
        return sorted(self._t.items(), key=lambda kv: partition_key(kv[0]))

    def __iter__(self):
        return iter(self.items())

    def __len__(self):
        return len(self._t)

    def coeff(self, mu):
        return self._t.get(tuple(mu), 0)

    def __bool__(self):
        return bool(self._t)

    def __eq__(self, other):
        if isinstance(other, SymF):
            if self._t.keys() != other._t.keys():
                return False
            return all(self._t[k] == other._t[k] for k in self._t)
        if isinstance(other, (int, Fraction)):
            return self == SymF({(): other}) if other else not self._t
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._t))

    def degrees(self) -> set:
        return {sum(mu) for mu in self._t}

    def degree(self) -> int:
        """Maximal degree of a term; -1 for the zero function."""
        return max((sum(mu) for mu in self._t), default=-1)

    def homogeneous(self, d: int) -> "SymF":
        return SymF._raw({mu: c for mu, c in self._t.items() if sum(mu) == d})

    def truncate(self, d: int) -> "SymF":
        """Drop all terms of degree above ``d``."""
        return SymF._raw({mu: c for mu, c in self._t.items() if sum(mu) <= d})

    def map_coeffs(self, fn) -> "SymF":
        out = {}
        for mu, c in self._t.items():
            v = fn(c)
            if v:
                out[mu] = v
        return SymF._raw(out)

    def evaluate_q(self, x) -> "SymF":
        """Specialize Laurent coefficients at ``q = x``."""
        return self.map_coeffs(lambda c: c.evaluate(x) if isinstance(c, QLaurent) else c)

    def __add__(self, other):
        if isinstance(other, (int, Fraction, QLaurent, TSeries)):
            other = SymF._raw({(): other}) if other else SymF._raw({})
        if not isinstance(other, SymF):
            return NotImplemented
        t = dict(self._t)
        for mu, c in other._t.items():
            s = t.get(mu, 0) + c
            if s:
                t[mu] = s
            else:
                t.pop(mu, None)
        return SymF._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return SymF._raw({mu: -c for mu, c in self._t.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, SymF):
            out = {}
            for mu, a in self._t.items():
                for nu, b in other._t.items():
                    key = union(mu, nu)
                    out[key] = out.get(key, 0) + a * b
            return SymF._raw({k: v for k, v in out.items() if v})
        if isinstance(other, (int, Fraction, QLaurent, TSeries)):
            if not other:
                return SymF._raw({})
            out = {}
            for mu, c in self._t.items():
                v = c * other
                if v:
                    out[mu] = v
            return SymF._raw(out)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self.map_coeffs(lambda c: c / other)

    def __pow__(self, k: int):
        out = SymF.one()
        for _ in range(k):
            out = out * self
        return out

    def __repr__(self):
        if not self._t:
            return "0"
        parts = []
        for mu, c in self.items():
            name = "p[" + ",".join(map(str, mu)) + "]"
            parts.append(f"({c})*{name}")
        return " + ".join(parts)

    def to_json(self, basis: str = "p") -> dict:
        """Serialize as ``{"basis": "p", "terms": [{"partition": .., "coeff": ..}]}``.

        With ``basis="s"`` the function (rational coefficients only) is
        first expanded in Schur functions.
        """
        if basis == "s":
            items = sorted(to_schur(self).items(), key=lambda kv: partition_key(kv[0]))
        elif basis == "p":
            items = self.items()
        else:
            raise ValueError(f"unknown basis {basis!r}")
        return {
            "basis": basis,
            "terms": [{"partition": list(mu), "coeff": _scalar_to_json(c)} for mu, c in items],
        }

    @classmethod
    def from_json(cls, data) -> "SymF":
        terms = [(tuple(t["partition"]), _scalar_from_json(t["coeff"])) for t in data["terms"]]
        if data.get("basis", "p") == "s":
            return from_schur(dict(terms))
        return cls(terms)


def _to_scalar(c):
    if isinstance(c, (QLaurent, TSeries, Fraction)):
        return c
    return Fraction(c)


def _scalar_to_json(c):
    if isinstance(c, (QLaurent, TSeries)):
        return c.to_json()
    return str(Fraction(c))


def _scalar_from_json(c):
    if isinstance(c, dict):
        return QLaurent.from_json(c) if "q" in c else TSeries.from_json(c)
    return Fraction(c)


# adjoint operators ---------------------------------------------------------


def skew_monomial(nu, lam):
    """Apply ``D_{p_nu}`` to ``p_lam``.

    Returns ``(coefficient, rest)`` with ``D_{p_nu} p_lam = coefficient *
    p_rest``, or None if the result is zero.  Each part ``k`` removed from
    ``p_lam`` contributes ``k`` times the number of copies available.
    """
    if not nu:
        return 1, lam
    cl = Counter(lam)
    coef = 1
    for k, m in Counter(nu).items():
        avail = cl[k]
        if avail < m:
            return None
        for i in range(m):
            coef *= k * (avail - i)
        cl[k] = avail - m
    rest = tuple(sorted(cl.elements(), reverse=True))
    return coef, rest


def scalar_product(f: SymF, g: SymF):
    """Hall scalar product, ``<p_lam, p_mu> = z_lam delta``."""
    small, big = (f, g) if len(f) <= len(g) else (g, f)
    total = 0
    for mu, c in small._t.items():
        d = big._t.get(mu)
        if d:
            total = total + c * d * z_of(mu)
    return total if not isinstance(total, int) else Fraction(total)


def skew(f: SymF, g: SymF) -> SymF:
    """``D_f g``: the adjoint of multiplication by ``f`` applied to ``g``."""
    out = {}
    for nu, a in f._t.items():
        for lam, b in g._t.items():
            r = skew_monomial(nu, lam)
            if r is None:
                continue
            coef, rest = r
            out[rest] = out.get(rest, 0) + a * b * coef
    return SymF._raw({k: v for k, v in out.items() if v})


def reweight(f: SymF, w) -> SymF:
    """Ring morphism ``p_k -> w(k) p_k``.

    ``w`` is a callable or a mapping from part sizes to scalars.  With
    ``w(k) = q^k - 1`` this evaluates ``f`` at the alphabet ``(q-1)A``.
    """
    get = w if callable(w) else w.__getitem__
    cache = {}
    out = {}
    for mu, c in f._t.items():
        factor = 1
        for k in mu:
            if k not in cache:
                cache[k] = get(k)
            factor = factor * cache[k]
        v = c * factor
        if v:
            out[mu] = out.get(mu, 0) + v
    return SymF._raw({k: v for k, v in out.items() if v})


def shift_alphabet(f: SymF, c) -> SymF:
    """Ring morphism ``p_k -> p_k + c(k)``.

    With ``c(1) = 1`` and ``c(k) = 0`` otherwise this evaluates ``f`` at
    ``A + E`` where ``E`` is the exponential alphabet.
    """
    get = c if callable(c) else (lambda k: c.get(k, 0))
    out = SymF.zero()
    for mu, coeff in f._t.items():
        term = SymF._raw({(): coeff})
        for k, m in Counter(mu).items():
            ck = get(k)
            base = SymF.p(k) + ck if ck else SymF.p(k)
            term = term * base**m
        out = out + term
    return out


# characters and Schur functions -------------------------------------------


def _beta(lam, length):
    return [lam[i] + length - 1 - i if i < len(lam) else length - 1 - i for i in range(length)]


def _from_beta(beta):
    beta = sorted(beta, reverse=True)
    n = len(beta)
    parts = [b - (n - 1 - i) for i, b in enumerate(beta)]
    return tuple(p for p in parts if p > 0)


@lru_cache(maxsize=None)
def character(lam, mu) -> int:
    """Irreducible character ``chi^lam`` at cycle type ``mu``.

    Murnaghan-Nakayama rule: border strips of size ``mu_1`` (the largest
    part) are removed first, with sign ``(-1)^(height)``.
    """
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise ValueError("partitions of different weights")
    if not mu:
        return 1
    r = mu[0]
    rest = mu[1:]
    length = len(lam)
    beta = _beta(lam, length)
    bset = set(beta)
    total = 0
    for b in beta:
        nb = b - r
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for x in beta if nb < x < b)
        new = [x for x in beta if x != b] + [nb]
        total += (-1) ** height * character(_from_beta(new), rest)
    return total


def char(lam, mu) -> Fraction:
    return Fraction(character(tuple(lam), tuple(mu)))


@lru_cache(maxsize=None)
def dim_f(lam) -> int:
    """Number of standard tableaux ``f^lam``."""
    return character(tuple(lam), (1,) * sum(lam))


@lru_cache(maxsize=None)
def schur_in_p(lam) -> SymF:
    """``s_lam = sum_mu chi^lam_mu p_mu / z_mu``."""
    lam = as_partition(lam)
    n = sum(lam)
    return SymF._raw(
        {
            mu: Fraction(character(lam, mu), z_of(mu))
            for mu in partitions_of(n)
            if character(lam, mu)
        }
    )


def to_schur(f: SymF) -> dict:
    """Schur coefficients ``<f, s_lam>`` of a rational symmetric function."""
    out = {}
    for d in sorted(f.degrees()):
        fd = f.homogeneous(d)
        for lam in partitions_of(d):
            v = sum((c * character(lam, mu) for mu, c in fd._t.items()), Fraction(0))
            if v:
                out[lam] = v
    return out


def from_schur(coeffs) -> SymF:
    out = SymF.zero()
    for lam, c in dict(coeffs).items():
        out = out + schur_in_p(tuple(lam)) * c
    return out


def times_product(f: SymF, g: SymF) -> SymF:
    """The product induced by convolution of central functions.

    ``s_lam x s_mu = delta_{lam mu} s_lam / f^lam``; homogeneous pieces
    of different degrees multiply to zero.
    """
    for c in list(f._t.values()) + list(g._t.values()):
        if isinstance(c, (QLaurent, TSeries)):
            raise TypeError("times_product is defined over rational coefficients only")
    a, b = to_schur(f), to_schur(g)
    out = {}
    for lam, x in a.items():
        y = b.get(lam)
        if y:
            out[lam] = x * y / dim_f(lam)
    return from_schur(out)


@lru_cache(maxsize=None)
def h(n: int) -> SymF:
    """Complete symmetric function ``h_n = sum_mu p_mu / z_mu``."""
    return SymF._raw({mu: Fraction(1, z_of(mu)) for mu in partitions_of(n)})


@lru_cache(maxsize=None)
def e(n: int) -> SymF:
    """Elementary symmetric function ``e_n = sum_mu (-1)^(n - l(mu)) p_mu / z_mu``."""
    return SymF._raw(
        {mu: Fraction((-1) ** (n - len(mu)), z_of(mu)) for mu in partitions_of(n)}
    )
