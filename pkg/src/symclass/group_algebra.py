"""Brute-force arithmetic in the rational group algebra of S_n.

Everything here works permutation by permutation and never consults
characters, so it serves as an independent check on the operator side.
Permutations are zero-based image tuples and multiply as
``(st)(i) = s(t(i))``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .combinat import (
    as_partition,
    compose,
    cycle_type,
    cycles,
    factorial,
    identity,
    inverse,
    pad,
    partition_key,
    partitions_of,
    perm_from_json,
    perm_to_json,
    permutation_of_type,
    z_of,
)
from .symfun import SymF

__all__ = [
    "DEFAULT_MAX_N",
    "GAElem",
    "NotCentralError",
    "all_permutations",
    "class_sum",
    "ga_mul",
    "jm_element",
    "jm_elements",
    "jm_power_sum",
    "jm_elementary",
    "frobenius",
    "class_decomposition",
    "from_classes",
    "is_central",
    "central_product",
    "structure_constants",
    "delta_map",
]

DEFAULT_MAX_N = 7


class NotCentralError(ValueError):
    """An element expected to be central is not constant on classes."""


class GAElem:
    """Element ``sum_s c_s s`` of the group algebra of ``S_n``."""

    __slots__ = ("n", "_t")

    def __init__(self, n: int, terms=None):
        self.n = n
        t = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for s, c in items:
                s = tuple(s)
                if len(s) != n:
                    raise ValueError(f"permutation {s} does not have degree {n}")
                v = t.get(s, 0) + Fraction(c)
                if v:
                    t[s] = v
                else:
                    t.pop(s, None)
        self._t = t

    @classmethod
    def _raw(cls, n, t):
        obj = cls.__new__(cls)
        obj.n = n
        obj._t = t
        return obj

    @classmethod
    def identity(cls, n: int) -> "GAElem":
        return cls._raw(n, {identity(n): Fraction(1)})

    @classmethod
    def zero(cls, n: int) -> "GAElem":
        return cls._raw(n, {})

    @property
    def terms(self) -> dict:
        return dict(self._t)

    def items(self):
        return sorted(self._t.items())

    def coeff(self, s):
        return self._t.get(tuple(s), Fraction(0))

    def __len__(self):
        return len(self._t)

    def __bool__(self):
        return bool(self._t)

    def __eq__(self, other):
        if not isinstance(other, GAElem):
            return NotImplemented
        return self.n == other.n and self._t == other._t

    def __hash__(self):
        return hash((self.n, frozenset(self._t)))

    def _check(self, other):
        if self.n != other.n:
            raise ValueError(f"degree mismatch: S_{self.n} vs S_{other.n}")

    def __add__(self, other):
        if not isinstance(other, GAElem):
            return NotImplemented
        self._check(other)
        t = dict(self._t)
        for s, c in other._t.items():
            v = t.get(s, 0) + c
            if v:
                t[s] = v
            else:
                t.pop(s, None)
        return GAElem._raw(self.n, t)

    def __neg__(self):
        return GAElem._raw(self.n, {s: -c for s, c in self._t.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, GAElem):
            return ga_mul(self, other)
        if isinstance(other, (int, Fraction)):
            if not other:
                return GAElem.zero(self.n)
            return GAElem._raw(self.n, {s: c * other for s, c in self._t.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        out = GAElem.identity(self.n)
        for _ in range(k):
            out = ga_mul(out, self)
        return out

    def __repr__(self):
        return f"GAElem(n={self.n}, {len(self._t)} terms)"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [{"perm": perm_to_json(s), "coeff": str(c)} for s, c in self.items()],
        }

    @classmethod
    def from_json(cls, data) -> "GAElem":
        return cls(data["n"], [(perm_from_json(t["perm"]), Fraction(t["coeff"])) for t in data["terms"]])


@lru_cache(maxsize=None)
def all_permutations(n: int) -> tuple:
    return tuple(permutations(range(n)))


@lru_cache(maxsize=None)
def _class_members(n: int, lam) -> tuple:
    return tuple(s for s in all_permutations(n) if cycle_type(s) == lam)


def class_sum(n: int, mu) -> GAElem:
    """Sum of all permutations of cycle type ``mu`` padded with ones to ``n``."""
    lam = pad(as_partition(mu), n)
    one = Fraction(1)
    return GAElem._raw(n, {s: one for s in _class_members(n, lam)})


def ga_mul(u: GAElem, v: GAElem) -> GAElem:
    """Convolution product, bilinear extension of composition."""
    u._check(v)
    out = {}
    for s, a in u._t.items():
        for t, b in v._t.items():
            st = tuple(s[i] for i in t)
            out[st] = out.get(st, 0) + a * b
    return GAElem._raw(u.n, {k: c for k, c in out.items() if c})


def jm_element(n: int, j: int) -> GAElem:
    """``xi_j = sum_{i<j} (i, j)`` with one-based ``j``; ``xi_1 = 0``."""
    one = Fraction(1)
    t = {}
    for i in range(j - 1):
        s = list(range(n))
        s[i], s[j - 1] = s[j - 1], s[i]
        t[tuple(s)] = one
    return GAElem._raw(n, t)


def jm_elements(n: int) -> list:
    return [jm_element(n, j) for j in range(1, n + 1)]


@lru_cache(maxsize=None)
def jm_power_sum(n: int, k: int) -> GAElem:
    """``p_k(xi_1, ..., xi_n)``; for ``k = 0`` this is ``n`` times the identity."""
    if k == 0:
        return GAElem.identity(n) * n if n else GAElem.zero(0)
    total = GAElem.zero(n)
    for j in range(2, n + 1):
        xi = jm_element(n, j)
        power = xi
        for _ in range(k - 1):
            power = ga_mul(power, xi)
        total = total + power
    return total


@lru_cache(maxsize=None)
def _jm_elementary_all(n: int) -> tuple:
    # coefficients of prod_j (1 + x xi_j)
    polys = [GAElem.identity(n)]
    for j in range(2, n + 1):
        xi = jm_element(n, j)
        new = list(polys) + [GAElem.zero(n)]
        for k in range(len(polys)):
            new[k + 1] = new[k + 1] + ga_mul(polys[k], xi)
        polys = new
    return tuple(polys)


def jm_elementary(n: int, k: int) -> GAElem:
    """``e_k(xi_1, ..., xi_n)``."""
    polys = _jm_elementary_all(n)
    if k < len(polys):
        return polys[k]
    return GAElem.zero(n)


def frobenius(u: GAElem) -> SymF:
    """Frobenius characteristic: a permutation of cycle type ``mu`` goes to ``p_mu``."""
    out = {}
    for s, c in u._t.items():
        mu = cycle_type(s)
        out[mu] = out.get(mu, 0) + c
    return SymF({mu: c for mu, c in out.items() if c})


def class_decomposition(u: GAElem, check: bool = True) -> dict:
    """Coefficients of ``u`` on the class sums, keyed by cycle type.

    With ``check`` the element must be constant on conjugacy classes
    (NotCentralError otherwise).
    """
    vals = {}
    counts = {}
    for s, c in u._t.items():
        mu = cycle_type(s)
        if mu in vals:
            if check and vals[mu] != c:
                raise NotCentralError(f"coefficients differ on class {list(mu)}")
        else:
            vals[mu] = c
        counts[mu] = counts.get(mu, 0) + 1
    if check:
        for mu, k in counts.items():
            if k != factorial(u.n) // z_of(mu):
                raise NotCentralError(f"class {list(mu)} only partially present")
    return dict(sorted(vals.items(), key=lambda kv: partition_key(kv[0])))


def from_classes(n: int, coeffs) -> GAElem:
    out = GAElem.zero(n)
    for mu, c in dict(coeffs).items():
        out = out + class_sum(n, mu) * Fraction(c)
    return out


def is_central(u: GAElem) -> bool:
    """Commutes with the Coxeter generators ``(i, i+1)``."""
    n = u.n
    for i in range(n - 1):
        s = list(range(n))
        s[i], s[i + 1] = s[i + 1], s[i]
        g = GAElem._raw(n, {tuple(s): Fraction(1)})
        if ga_mul(g, u) != ga_mul(u, g):
            return False
    return True


def central_product(u: GAElem, v: GAElem) -> dict:
    """Class decomposition of ``u v`` for central ``u`` and ``v``.

    Only the coefficient at one representative ``g`` of each class is
    computed, as ``sum_x u(x) v(x^{-1} g)``.
    """
    u._check(v)
    out = {}
    inv = [(inverse(x), a) for x, a in u._t.items()]
    for gamma in partitions_of(u.n):
        g = permutation_of_type(gamma)
        total = Fraction(0)
        for xi, a in inv:
            b = v._t.get(compose(xi, g))
            if b:
                total += a * b
        if total:
            out[gamma] = total
    return dict(sorted(out.items(), key=lambda kv: partition_key(kv[0])))


def structure_constants(n: int, alpha, beta, brute_force: bool = False) -> dict:
    """``c_{alpha beta}^gamma`` in ``C_alpha C_beta = sum c C_gamma`` for ``S_n``.

    ``alpha`` and ``beta`` are padded with ones.  By default the product is
    evaluated at class representatives; ``brute_force`` multiplies the
    full class sums and checks the result is central.
    """
    a, b = class_sum(n, alpha), class_sum(n, beta)
    if brute_force:
        return class_decomposition(ga_mul(a, b))
    return central_product(a, b)


# erasure maps ---------------------------------------------------------------


def _erase(s, k):
    """Cycles of ``s`` meeting the last ``k`` points, and ``s`` with those points erased."""
    n = len(s)
    doomed = set(range(n - k, n))
    cyc = cycles(s)
    touched = [c for c in cyc if doomed.intersection(c)]
    images = {}
    for c in cyc:
        kept = [x for x in c if x not in doomed]
        for i, x in enumerate(kept):
            images[x] = kept[(i + 1) % len(kept)]
    erased = tuple(images[x] for x in range(n - k))
    return touched, erased


def delta_map(u: GAElem, k: int, variant: str = "delta") -> GAElem:
    """Erasure maps from ``S_n`` to ``S_{n-k}``.

    ``variant`` is ``"prime"`` (one cycle of length ``l`` contains the last
    ``k`` points; weight ``1/((l-1)...(l-k))``, and ``1/(k-1)!`` when
    ``l = k``), ``"double"`` (the last ``k`` points form exactly two whole
    cycles of lengths ``i + j = k``; weight ``i j / (2 k!)`` summed over
    ordered pairs) or ``"delta"`` for their sum.
    """
    if variant not in ("prime", "double", "delta"):
        raise ValueError(f"unknown variant {variant!r}")
    n = u.n
    if k < 1 or k > n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    out = {}
    for s, c in u._t.items():
        touched, erased = _erase(s, k)
        weight = Fraction(0)
        if variant in ("prime", "delta") and len(touched) == 1:
            l = len(touched[0])
            if l == k:
                weight += Fraction(1, factorial(k - 1))
            else:
                denom = 1
                for i in range(1, k + 1):
                    denom *= l - i
                weight += Fraction(1, denom)
        if variant in ("double", "delta") and len(touched) == 2:
            i, j = len(touched[0]), len(touched[1])
            if i + j == k:
                # ordered pairs (i, j) and (j, i) both contribute unless i == j
                mult = 1 if i == j else 2
                weight += Fraction(mult * i * j, 2 * factorial(k))
        if weight:
            out[erased] = out.get(erased, 0) + c * weight
    return GAElem._raw(n - k, {s: c for s, c in out.items() if c})
