"""Gaussian matrix integrals by Wick pairing, and the GPS operators.

Everything is exact and finite: the eigenvalues ``a_1..a_M`` of ``A`` and
``b_1..b_M`` of ``B`` are polynomial variables and every series in them is
cut at a total degree ``cap``.  Two Gaussian measures are supported:

* ``NU``, the standard complex Gaussian, with ``<z_ij z*_ij> = 2``;
* ``MU``, the same tilted by ``exp(tr(AZBZ*)/2)`` and normalized, with
  ``<z_ij z*_ij> = 2 / (1 - a_i b_j)``.

Here ``z*_ij`` is the complex conjugate of the entry ``z_ij``, so the only
nonvanishing pairings are ``z_ij`` with ``z*_ij``.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product

from .combinat import (
    as_partition,
    compose,
    cycles,
    cycle_type,
    partitions_of,
    permutation_of_type,
    z_of,
)
from .diffop import PolyDiffOp

__all__ = [
    "NU",
    "MU",
    "MPoly",
    "WickWord",
    "Symbol",
    "matchings",
    "wick_expectation",
    "p_expectation",
    "p_expectation_closed",
    "partition_function",
    "cauchy_log",
    "p_L",
    "gps_operator",
    "hss_prediction",
]

NU = "NU"
MU = "MU"


class MPoly:
    """Truncated polynomial in ``a_1..a_M, b_1..b_M`` with rational coefficients.

    Terms are keyed by exponent tuples ``(e(a_1), .., e(a_M), e(b_1), .., e(b_M))``;
    monomials of total degree above ``cap`` are dropped on construction.
    """

    __slots__ = ("M", "cap", "_t")

    def __init__(self, M: int, cap: int, terms=None):
        self.M = M
        self.cap = cap
        t = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != 2 * M:
                raise ValueError(f"exponent vector {e} does not have length {2 * M}")
            if sum(e) > cap:
                continue
            v = t.get(e, 0) + Fraction(c)
            if v:
                t[e] = v
            else:
                t.pop(e, None)
        self._t = t

    @classmethod
    def _raw(cls, M, cap, t):
        obj = cls.__new__(cls)
        obj.M, obj.cap, obj._t = M, cap, t
        return obj

    @classmethod
    def constant(cls, M: int, cap: int, c=1) -> "MPoly":
        return cls._raw(M, cap, {(0,) * (2 * M): Fraction(c)} if c else {})

    @classmethod
    def var(cls, M: int, cap: int, side: str, i: int) -> "MPoly":
        """The variable ``a_i`` or ``b_i`` (one-based ``i``)."""
        e = [0] * (2 * M)
        e[(i - 1) + (M if side == "b" else 0)] = 1
        return cls(M, cap, {tuple(e): 1})

    @classmethod
    def power_sum(cls, M: int, cap: int, side: str, k: int) -> "MPoly":
        out = {}
        off = M if side == "b" else 0
        for i in range(M):
            e = [0] * (2 * M)
            e[off + i] = k
            out[tuple(e)] = 1
        return cls(M, cap, out)

    @classmethod
    def p_monomial(cls, M: int, cap: int, side: str, lam) -> "MPoly":
        out = cls.constant(M, cap)
        for k in lam:
            out = out * cls.power_sum(M, cap, side, k)
        return out

    @property
    def terms(self) -> dict:
        return dict(self._t)

    def items(self):
        return sorted(self._t.items())

    def __bool__(self):
        return bool(self._t)

    def __len__(self):
        return len(self._t)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.constant(self.M, self.cap, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return (self.M, self.cap, self._t) == (other.M, other.cap, other._t)

    def __hash__(self):
        return hash((self.M, self.cap, frozenset(self._t.items())))

    def _check(self, other):
        if (self.M, self.cap) != (other.M, other.cap):
            raise ValueError("MPoly shape mismatch")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.constant(self.M, self.cap, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        self._check(other)
        t = dict(self._t)
        for e, c in other._t.items():
            v = t.get(e, 0) + c
            if v:
                t[e] = v
            else:
                t.pop(e, None)
        return MPoly._raw(self.M, self.cap, t)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw(self.M, self.cap, {e: -c for e, c in self._t.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return MPoly._raw(self.M, self.cap, {})
            return MPoly._raw(self.M, self.cap, {e: c * other for e, c in self._t.items()})
        if not isinstance(other, MPoly):
            return NotImplemented
        self._check(other)
        cap = self.cap
        out = {}
        for e1, c1 in self._t.items():
            d1 = sum(e1)
            for e2, c2 in other._t.items():
                if d1 + sum(e2) > cap:
                    continue
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MPoly._raw(self.M, cap, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = MPoly.constant(self.M, self.cap)
        for _ in range(k):
            out = out * self
        return out

    def swap_sides(self) -> "MPoly":
        """Exchange the roles of the ``a`` and ``b`` variables."""
        M = self.M
        return MPoly._raw(M, self.cap, {e[M:] + e[:M]: c for e, c in self._t.items()})

    def __repr__(self):
        return f"MPoly(M={self.M}, cap={self.cap}, {len(self._t)} terms)"

    def to_json(self) -> dict:
        M = self.M
        return {
            "M": M,
            "cap": self.cap,
            "terms": [{"a": list(e[:M]), "b": list(e[M:]), "coeff": str(c)} for e, c in self.items()],
        }

    @classmethod
    def from_json(cls, data) -> "MPoly":
        return cls(
            data["M"],
            data["cap"],
            {tuple(t["a"]) + tuple(t["b"]): Fraction(t["coeff"]) for t in data["terms"]},
        )


def exp_mpoly(x: MPoly) -> MPoly:
    """``exp(x)`` for ``x`` without constant term."""
    if x._t.get((0,) * (2 * x.M)):
        raise ValueError("exp needs a series without constant term")
    out = MPoly.constant(x.M, x.cap)
    term = MPoly.constant(x.M, x.cap)
    for k in range(1, x.cap + 1):
        term = term * x * Fraction(1, k)
        if not term:
            break
        out = out + term
    return out


# Wick pairing -------------------------------------------------------------------

Symbol = tuple  # (starred: bool, i, j) with one-based i, j


class WickWord(tuple):
    """Ordered product of entries ``z_ij`` (``starred=False``) and ``z*_ij``."""

    def __new__(cls, symbols):
        return super().__new__(cls, tuple((bool(s), int(i), int(j)) for s, i, j in symbols))

    @property
    def plain(self):
        return [s for s in self if not s[0]]

    @property
    def starred(self):
        return [s for s in self if s[0]]

    def __repr__(self):
        return "WickWord(" + " ".join(("z*" if s else "z") + f"{i}{j}" for s, i, j in self) + ")"


def _propagator(kind: str, M: int, cap: int):
    if kind == NU:
        two = MPoly.constant(M, cap, 2)
        return lambda i, j: two
    if kind != MU:
        raise ValueError(f"unknown measure kind {kind!r}")
    cache = {}

    def prop(i, j):
        if (i, j) not in cache:
            # 2 / (1 - a_i b_j) = 2 sum_l (a_i b_j)^l
            t = {}
            for l in range(cap // 2 + 1):
                e = [0] * (2 * M)
                e[i - 1] = l
                e[M + j - 1] = l
                t[tuple(e)] = Fraction(2)
            cache[(i, j)] = MPoly(M, cap, t)
        return cache[(i, j)]

    return prop


def matchings(word: WickWord):
    """Perfect matchings of ``word`` pairing each ``z`` with an equal-index ``z*``.

    Yields tuples ``m`` with ``m[k]`` the position (among starred symbols)
    matched to the ``k``-th plain symbol.  Mixed pairings ``z z`` and
    ``z* z*`` vanish and are never produced.
    """
    plain, starred = word.plain, word.starred
    if len(plain) != len(starred):
        return
    for perm in permutations(range(len(starred))):
        if all(plain[k][1:] == starred[perm[k]][1:] for k in range(len(plain))):
            yield perm


def wick_expectation(word, kind: str = MU, M: int = 1, cap: int = 8, propagator=None) -> MPoly:
    """``<word>`` by Wick's formula.

    ``propagator`` overrides the weight of a pair and is called as
    ``propagator(plain_symbol, starred_symbol)``; it then replaces the
    index check, so every ``z``/``z*`` bijection is summed.
    """
    word = WickWord(word)
    zero = MPoly(M, cap)
    plain, starred = word.plain, word.starred
    if len(word) % 2 or len(plain) != len(starred):
        return zero
    total = zero
    if propagator is not None:
        for perm in permutations(range(len(starred))):
            w = MPoly.constant(M, cap)
            for k, s in enumerate(plain):
                w = w * propagator(s, starred[perm[k]])
            total = total + w
        return total
    prop = _propagator(kind, M, cap)
    for perm in matchings(word):
        w = MPoly.constant(M, cap)
        for k, s in enumerate(plain):
            w = w * prop(s[1], s[2])
        total = total + w
    return total


def _word_for(I, J, sigma) -> WickWord:
    # p_rho(A Z B Z*) = sum a_I b_J z_{i_1 j_1} .. z_{i_r j_r} z*_{i_s(1) j_1} .. z*_{i_s(r) j_r}
    r = len(I)
    return WickWord([(False, I[k], J[k]) for k in range(r)] + [(True, I[sigma[k]], J[k]) for k in range(r)])


def _canonical(word: WickWord):
    return tuple(sorted(s[1:] for s in word.plain)), tuple(sorted(s[1:] for s in word.starred))


def p_expectation(rho, kind: str = MU, M: int = 3, cap: int = 8, sigma=None) -> MPoly:
    """``<p_rho(A Z B Z*)>`` by enumerating index vectors and Wick pairings.

    ``sigma`` is the permutation of cycle type ``rho`` used to write the
    trace product (default ``(1..rho_1)(rho_1+1..)..``).
    """
    rho = as_partition(rho)
    r = sum(rho)
    if sigma is None:
        sigma = permutation_of_type(rho)
    prop = _propagator(kind, M, cap)
    by_pairs = {}
    for I in product(range(1, M + 1), repeat=r):
        for J in product(range(1, M + 1), repeat=r):
            word = _word_for(I, J, sigma)
            key = _canonical(word)
            if key[0] != key[1]:
                continue
            n_match = sum(1 for _ in matchings(word))
            if not n_match:
                continue
            e = [0] * (2 * M)
            for i in I:
                e[i - 1] += 1
            for j in J:
                e[M + j - 1] += 1
            mono = by_pairs.setdefault(key[0], {})
            mono[tuple(e)] = mono.get(tuple(e), 0) + n_match
    total = MPoly(M, cap)
    for pairs, mono in by_pairs.items():
        w = MPoly(M, cap, mono)
        for i, j in pairs:
            w = w * prop(i, j)
        total = total + w
    return total


def p_L(tau, L, M: int, cap: int, side: str) -> MPoly:
    """``p_L^tau``: the product over cycles ``g`` of ``tau`` of ``p_{sum_{i in g} l_i}``."""
    out = MPoly.constant(M, cap)
    for cyc in cycles(tau):
        out = out * MPoly.power_sum(M, cap, side, sum(L[i] for i in cyc))
    return out


def _compositions(r: int, max_total: int):
    """Vectors of ``r`` positive integers with sum ``<= max_total``."""
    if r == 0:
        yield ()
        return
    for first in range(1, max_total - (r - 1) + 1):
        for rest in _compositions(r - 1, max_total - first):
            yield (first,) + rest


def _cycle_partition(tau, L) -> tuple:
    return tuple(sorted((sum(L[i] for i in cyc) for cyc in cycles(tau)), reverse=True))


def p_expectation_closed(rho, M: int = 3, cap: int = 8, sigma=None) -> MPoly:
    """``2^r sum_L sum_tau p_L^{sigma tau}(a) p_L^tau(b)`` with ``|L| <= cap / 2``."""
    rho = as_partition(rho)
    r = sum(rho)
    if sigma is None:
        sigma = permutation_of_type(rho)
    pairs = Counter()
    for L in _compositions(r, cap // 2):
        for tau in permutations(range(r)):
            pairs[(_cycle_partition(compose(sigma, tau), L), _cycle_partition(tau, L))] += 1
    total = MPoly(M, cap)
    for (lam_a, lam_b), c in sorted(pairs.items()):
        term = MPoly.p_monomial(M, cap, "a", lam_a) * MPoly.p_monomial(M, cap, "b", lam_b)
        total = total + term * c
    return total * 2**r


def partition_function(M: int, cap: int) -> MPoly:
    """``prod_{i,j} 1 / (1 - a_i b_j)`` truncated at total degree ``cap``."""
    out = MPoly.constant(M, cap)
    for i in range(1, M + 1):
        for j in range(1, M + 1):
            t = {}
            for l in range(cap // 2 + 1):
                e = [0] * (2 * M)
                e[i - 1] = l
                e[M + j - 1] = l
                t[tuple(e)] = 1
            out = out * MPoly(M, cap, t)
    return out


def cauchy_log(M: int, cap: int) -> MPoly:
    """``exp(sum_m p_m(a) p_m(b) / m)``, the other side of the Cauchy identity."""
    s = MPoly(M, cap)
    for m in range(1, cap // 2 + 1):
        s = s + MPoly.power_sum(M, cap, "a", m) * MPoly.power_sum(M, cap, "b", m) * Fraction(1, m)
    return exp_mpoly(s)


def hss_prediction(lam, structure, M: int, cap: int) -> MPoly:
    """``2^n sum_{alpha,beta} c_{alpha beta}^lam p_alpha(a) p_beta(b)``.

    ``structure(alpha, beta)`` returns the class decomposition of
    ``C_alpha C_beta`` in ``S_n``.
    """
    lam = as_partition(lam)
    n = sum(lam)
    total = MPoly(M, cap)
    for alpha in partitions_of(n):
        for beta in partitions_of(n):
            c = structure(alpha, beta).get(lam, 0)
            if c:
                term = MPoly.p_monomial(M, cap, "a", alpha) * MPoly.p_monomial(M, cap, "b", beta)
                total = total + term * c
    return total * 2**n


# GPS operators -------------------------------------------------------------------


@lru_cache(maxsize=None)
def _gps_terms(rho, n: int, sigma) -> tuple:
    r = sum(rho)
    out = Counter()
    taus = list(permutations(range(r)))
    st = [compose(sigma, tau) for tau in taus]
    for L in _compositions(r, n):
        for tau, s_tau in zip(taus, st):
            out[(_cycle_partition(s_tau, L), _cycle_partition(tau, L))] += 1
    return tuple(sorted(out.items()))


def gps_operator(rho, n: int, sigma=None) -> PolyDiffOp:
    """``H_rho = (1/z_rho) sum_L sum_tau p_L^{sigma tau} D_{p_L^tau}`` with ``|L| <= n``.

    ``rho`` must be reduced.  On homogeneous ``G`` of degree ``m`` with
    ``|rho| <= m <= n`` this is the product with ``C_{rho,1^{m-|rho|}}``
    transported through the Frobenius map.
    """
    rho = as_partition(rho)
    if any(part == 1 for part in rho):
        raise ValueError(f"partition {list(rho)} is not reduced (has a part equal to 1)")
    if not rho:
        raise ValueError("rho must be nonempty")
    sigma = permutation_of_type(rho) if sigma is None else tuple(sigma)
    if cycle_type(sigma) != rho:
        raise ValueError("sigma must have cycle type rho")
    w = Fraction(1, z_of(rho))
    terms = {key: w * c for key, c in _gps_terms(rho, n, sigma)}
    return PolyDiffOp(terms, n)
