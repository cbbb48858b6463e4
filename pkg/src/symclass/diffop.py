"""Normal-ordered differential operators in the power sums.

A :class:`PolyDiffOp` is a finite sum ``sum c * p_mu * D_{p_nu}`` where all
multiplications stand to the left of all derivations and
``D_{p_k} = k d/dp_k`` is the adjoint of multiplication by ``p_k``.  The
bosons are ``alpha_{-k} = p_k`` and ``alpha_k = D_{p_k}``, with
``[alpha_j, alpha_k] = j delta_{j,-k}``.

Most operators of interest are infinite sums, so every operator carries
``exact_degree``: its action is guaranteed correct on inputs of degree at
most this bound (``math.inf`` for genuinely finite operators).  Applying
an operator outside that range raises :class:`ExactnessError`.
"""
from __future__ import annotations

import math
from collections import Counter, defaultdict
from fractions import Fraction

from .combinat import as_partition, binomial, partition_key, sub_multisets, union
from .scalars import QLaurent, TSeries, ring_of
from .symfun import SymF, skew_monomial

__all__ = [
    "ExactnessError",
    "PolyDiffOp",
    "apply",
    "compose",
    "commutator",
    "boson",
    "euler",
    "multiplication",
    "derivation",
    "virasoro_d",
    "goulden_closed",
]

INF = math.inf
_SCALARS = (int, Fraction, QLaurent, TSeries)


class ExactnessError(ValueError):
    """Input degree lies outside the range where an operator is exact."""


def _key_deg(mu):
    return sum(mu)


class PolyDiffOp:
    """Normal-ordered operator ``sum_{(mu, nu)} c p_mu D_{p_nu}``."""

    __slots__ = ("_t", "exact_degree", "_by_nu", "_images")

    def __init__(self, terms=None, exact_degree=INF):
        t = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for (mu, nu), c in items:
                key = (as_partition(mu), as_partition(nu))
                if not isinstance(c, (Fraction, QLaurent, TSeries)):
                    c = Fraction(c)
                s = t.get(key, 0) + c
                if s:
                    t[key] = s
                else:
                    t.pop(key, None)
        self._t = t
        self.exact_degree = exact_degree
        self._by_nu = None
        self._images = {}
        self._prune()

    @classmethod
    def _raw(cls, t, exact_degree):
        obj = cls.__new__(cls)
        obj._t = t
        obj.exact_degree = exact_degree
        obj._by_nu = None
        obj._images = {}
        obj._prune()
        return obj

    def _prune(self):
        # terms deriving more than exact_degree never act on a valid input
        if self.exact_degree != INF:
            n = self.exact_degree
            self._t = {k: c for k, c in self._t.items() if sum(k[1]) <= n}

    @classmethod
    def identity(cls) -> "PolyDiffOp":
        return cls._raw({((), ()): Fraction(1)}, INF)

    @classmethod
    def zero(cls, exact_degree=INF) -> "PolyDiffOp":
        return cls._raw({}, exact_degree)

    @property
    def terms(self) -> dict:
        return dict(self._t)

    def items(self):
        return sorted(
            self._t.items(), key=lambda kv: (partition_key(kv[0][1]), partition_key(kv[0][0]))
        )

    def __len__(self):
        return len(self._t)

    def __bool__(self):
        return bool(self._t)

    def __eq__(self, other):
        if not isinstance(other, PolyDiffOp):
            return NotImplemented
        return self.exact_degree == other.exact_degree and self._t == other._t

    __hash__ = None

    def coeff(self, mu, nu):
        return self._t.get((tuple(mu), tuple(nu)), 0)

    @property
    def ring(self) -> str:
        rings = {ring_of(c) for c in self._t.values()}
        if not rings:
            return "rational"
        if len(rings) == 1:
            return rings.pop()
        return "q-laurent" if "q-laurent" in rings else "mixed"

    def degree_shifts(self) -> set:
        return {sum(mu) - sum(nu) for mu, nu in self._t}

    def restrict(self, n) -> "PolyDiffOp":
        """Same operator declared exact only up to degree ``n`` (terms pruned)."""
        return PolyDiffOp._raw(dict(self._t), min(self.exact_degree, n))

    def with_exact_degree(self, n) -> "PolyDiffOp":
        return PolyDiffOp._raw(dict(self._t), n)

    def same_on(self, other: "PolyDiffOp", n: int) -> bool:
        """Equal as operators on inputs of degree ``<= n``.

        Normal-ordered forms are unique, so this compares the terms with
        ``|nu| <= n``.  Both operators must be exact up to ``n``.
        """
        for op in (self, other):
            if op.exact_degree < n:
                raise ExactnessError(f"operator only exact up to degree {op.exact_degree} < {n}")
        a = {k: c for k, c in self._t.items() if sum(k[1]) <= n}
        b = {k: c for k, c in other._t.items() if sum(k[1]) <= n}
        if a.keys() != b.keys():
            return False
        return all(a[k] == b[k] for k in a)

    def difference_on(self, other: "PolyDiffOp", n: int) -> dict:
        """Terms with ``|nu| <= n`` on which the two operators differ."""
        keys = {k for k in list(self._t) + list(other._t) if sum(k[1]) <= n}
        out = {}
        for k in keys:
            a, b = self._t.get(k, 0), other._t.get(k, 0)
            if a != b:
                out[k] = (a, b)
        return out

    def map_coeffs(self, fn) -> "PolyDiffOp":
        out = {}
        for k, c in self._t.items():
            v = fn(c)
            if v:
                out[k] = v
        return PolyDiffOp._raw(out, self.exact_degree)

    def evaluate_q(self, x) -> "PolyDiffOp":
        """Specialize Laurent coefficients at the rational point ``q = x``."""
        return self.map_coeffs(lambda c: c.evaluate(x) if isinstance(c, QLaurent) else c)

    def __add__(self, other):
        if isinstance(other, _SCALARS):
            other = PolyDiffOp.identity() * other
        if not isinstance(other, PolyDiffOp):
            return NotImplemented
        t = dict(self._t)
        for k, c in other._t.items():
            s = t.get(k, 0) + c
            if s:
                t[k] = s
            else:
                t.pop(k, None)
        return PolyDiffOp._raw(t, min(self.exact_degree, other.exact_degree))

    __radd__ = __add__

    def __neg__(self):
        return PolyDiffOp._raw({k: -c for k, c in self._t.items()}, self.exact_degree)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            return self.map_coeffs(lambda c: c * other)
        if isinstance(other, PolyDiffOp):
            return compose(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, _SCALARS):
            return self.map_coeffs(lambda c: other * c)
        return NotImplemented

    def __truediv__(self, other):
        return self.map_coeffs(lambda c: c / other)

    def __call__(self, f: SymF) -> SymF:
        return apply(self, f)

    def __repr__(self):
        ex = "inf" if self.exact_degree == INF else self.exact_degree
        return f"PolyDiffOp({len(self._t)} terms, exact_degree={ex})"

    def pretty(self) -> str:
        parts = []
        for (mu, nu), c in self.items():
            m = "p[" + ",".join(map(str, mu)) + "]" if mu else ""
            d = "D[" + ",".join(map(str, nu)) + "]" if nu else ""
            parts.append(f"({c})" + ("*" + m if m else "") + ("*" + d if d else ""))
        return " + ".join(parts) or "0"

    def to_json(self, ring_tag: bool = False) -> dict:
        out = {
            "exact_degree": None if self.exact_degree == INF else self.exact_degree,
            "terms": [
                {"mu": list(mu), "nu": list(nu), "coeff": _coeff_json(c)}
                for (mu, nu), c in self.items()
            ],
        }
        if ring_tag:
            out = {"ring": self.ring, **out}
        return out

    @classmethod
    def from_json(cls, data) -> "PolyDiffOp":
        ex = data.get("exact_degree")
        terms = [
            ((tuple(t["mu"]), tuple(t["nu"])), _coeff_from_json(t["coeff"]))
            for t in data["terms"]
        ]
        return cls(terms, INF if ex is None else ex)

    def _index(self):
        if self._by_nu is None:
            idx = defaultdict(list)
            for (mu, nu), c in self._t.items():
                idx[nu].append((mu, c))
            self._by_nu = dict(idx)
        return self._by_nu

    def image(self, lam) -> dict:
        """Terms of ``op(p_lam)``, memoized per monomial."""
        out = self._images.get(lam)
        if out is None:
            idx = self._index()
            acc = {}
            for nu in sub_multisets(lam):
                row = idx.get(nu)
                if not row:
                    continue
                coef, rest = skew_monomial(nu, lam)
                for mu, c in row:
                    key = union(mu, rest)
                    acc[key] = acc.get(key, 0) + c * coef
            out = {k: v for k, v in acc.items() if v}
            self._images[lam] = out
        return out


def _coeff_json(c):
    if isinstance(c, (QLaurent, TSeries)):
        return c.to_json()
    return str(c)


def _coeff_from_json(c):
    if isinstance(c, dict):
        return QLaurent.from_json(c) if "q" in c else TSeries.from_json(c)
    return Fraction(c)


def apply(op: PolyDiffOp, f: SymF) -> SymF:
    """Apply ``op`` to ``f``; raises ExactnessError if ``deg f`` is too large."""
    if f.degree() > op.exact_degree:
        raise ExactnessError(
            f"input of degree {f.degree()} exceeds exact degree {op.exact_degree}"
        )
    out = {}
    for lam, b in f.terms.items():
        for key, c in op.image(lam).items():
            out[key] = out.get(key, 0) + c * b
    return SymF._raw({k: v for k, v in out.items() if v})


def _contractions(nu_a, mu_b):
    """Ways of moving ``D_{p_nu_a}`` past ``p_mu_b``.

    Yields ``(weight, mu_left, nu_left)`` meaning
    ``D_{p_nu_a} p_mu_b = sum weight * p_mu_left * D_{p_nu_left}``.
    """
    ca, cb = Counter(nu_a), Counter(mu_b)
    common = sorted(set(ca) & set(cb))
    options = []
    for k in common:
        A, B = ca[k], cb[k]
        opts = []
        for j in range(min(A, B) + 1):
            w = binomial(A, j) * math.perm(B, j) * k**j
            opts.append((j, w))
        options.append((k, opts))

    def rec(i, weight, removed):
        if i == len(options):
            yield weight, removed
            return
        k, opts = options[i]
        for j, w in opts:
            yield from rec(i + 1, weight * w, removed + (k,) * j)

    for weight, removed in rec(0, 1, ()):
        rc = Counter(removed)
        mu_left = tuple(sorted((cb - rc).elements(), reverse=True))
        nu_left = tuple(sorted((ca - rc).elements(), reverse=True))
        yield weight, mu_left, nu_left


def compose(a: PolyDiffOp, b: PolyDiffOp) -> PolyDiffOp:
    """Normal-ordered form of ``a o b`` (apply ``b`` first).

    The result is exact on degree ``d`` whenever ``b`` is exact on ``d``
    and ``a`` is exact on every degree ``b`` can produce from ``d``.
    """
    shifts = b.degree_shifts()
    up = max(shifts) if shifts else 0
    exact = min(b.exact_degree, a.exact_degree - up)
    if exact < 0:
        return PolyDiffOp._raw({}, exact)
    out = {}
    cache = {}
    for (mu_a, nu_a), ca in a._t.items():
        for (mu_b, nu_b), cb in b._t.items():
            if sum(nu_b) > exact:
                continue
            pair = (nu_a, mu_b)
            if pair not in cache:
                cache[pair] = list(_contractions(nu_a, mu_b))
            base = ca * cb
            for w, mu_left, nu_left in cache[pair]:
                nu = union(nu_left, nu_b)
                if sum(nu) > exact:
                    continue
                key = (union(mu_a, mu_left), nu)
                out[key] = out.get(key, 0) + base * w
    return PolyDiffOp._raw({k: v for k, v in out.items() if v}, exact)


def commutator(a: PolyDiffOp, b: PolyDiffOp) -> PolyDiffOp:
    """``[a, b] = a b - b a``."""
    return compose(a, b) - compose(b, a)


def boson(k: int) -> PolyDiffOp:
    """``alpha_k``: ``D_{p_k}`` for ``k > 0``, multiplication by ``p_{-k}`` for
    ``k < 0`` and the identity (``p_0 = 1``) for ``k = 0``."""
    if k > 0:
        return PolyDiffOp._raw({((), (k,)): Fraction(1)}, INF)
    if k < 0:
        return PolyDiffOp._raw({((-k,), ()): Fraction(1)}, INF)
    return PolyDiffOp.identity()


def euler(n) -> PolyDiffOp:
    """Degree operator ``E = sum_k p_k D_{p_k}``, exact up to degree ``n``."""
    if n == INF:
        raise ValueError("the Euler operator needs a finite degree bound")
    return PolyDiffOp._raw({((k,), (k,)): Fraction(1) for k in range(1, n + 1)}, n)


def multiplication(f: SymF) -> PolyDiffOp:
    """Multiplication by the symmetric function ``f``."""
    return PolyDiffOp._raw({(mu, ()): c for mu, c in f.terms.items()}, INF)


def derivation(f: SymF) -> PolyDiffOp:
    """``D_f``, the adjoint of multiplication by ``f``."""
    return PolyDiffOp._raw({((), nu): c for nu, c in f.terms.items()}, INF)


def virasoro_d(k: int, variant: str = "d", n: int = 10) -> PolyDiffOp:
    """``d'_k = sum_{j>=0} p_j D_{p_{j+k}}`` (``p_0 = 1``),
    ``d''_k = 1/2 sum_{i+j=k} alpha_i alpha_j`` and ``d_k = d'_k + d''_k``.

    ``variant`` is ``"prime"``, ``"double"`` or ``"d"``.  The infinite
    sum in ``d'_k`` is truncated so the result is exact up to degree ``n``.
    """
    if k < 1:
        raise ValueError("only k >= 1 is supported")
    terms = {}
    if variant in ("prime", "d"):
        for j in range(0, n - k + 1):
            mu = (j,) if j else ()
            terms[(mu, (j + k,))] = Fraction(1)
    if variant in ("double", "d"):
        for i in range(1, k):
            nu = tuple(sorted((i, k - i), reverse=True))
            terms[((), nu)] = terms.get(((), nu), 0) + Fraction(1, 2)
    if variant not in ("prime", "double", "d"):
        raise ValueError(f"unknown variant {variant!r}")
    return PolyDiffOp._raw(terms, n if variant != "double" else INF)


def goulden_closed(n: int) -> PolyDiffOp:
    """Cut-and-join operator written out directly.

    ``1/2 sum_{i,j>=1} [(i+j) p_i p_j d/dp_{i+j} + i j p_{i+j} d^2/dp_i dp_j]``,
    which in the ``D_{p_k}`` normalization is
    ``1/2 sum_{i,j} [p_i p_j D_{p_{i+j}} + p_{i+j} D_{p_i} D_{p_j}]``.
    Exact up to degree ``n``.
    """
    half = Fraction(1, 2)
    terms = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1 - i):
            pair = tuple(sorted((i, j), reverse=True))
            join = ((i + j,), pair)
            cut = (pair, (i + j,))
            terms[join] = terms.get(join, 0) + half
            terms[cut] = terms.get(cut, 0) + half
    return PolyDiffOp._raw(terms, n)
