"""Exact scalar rings: Laurent polynomials in ``q`` and truncated series in ``t``.

Rationals are ``fractions.Fraction``.  :class:`QLaurent` is a sparse
Laurent polynomial over the rationals; :class:`TSeries` is a power series
in ``t`` truncated at a fixed order.  The two meet through
:meth:`QLaurent.to_tseries`, which substitutes ``q = exp(t)``.

Both classes are immutable and interoperate with ``int`` and ``Fraction``
under ``+ - *``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

__all__ = [
    "InexactDivision",
    "QLaurent",
    "TSeries",
    "bernoulli",
    "ring_of",
]


class InexactDivision(ArithmeticError):
    """Raised when an exact division leaves a nonzero remainder."""


_RATIONAL = (int, Fraction)


class QLaurent:
    """Laurent polynomial ``sum_e c_e q^e`` with rational coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for e, v in dict(coeffs).items():
                if v:
                    c[int(e)] = Fraction(v)
        self._c = c

    @classmethod
    def _raw(cls, c):
        obj = cls.__new__(cls)
        obj._c = c
        return obj

    @classmethod
    def q(cls, e: int = 1) -> "QLaurent":
        """The monomial ``q^e``."""
        return cls._raw({e: Fraction(1)})

    @classmethod
    def const(cls, v) -> "QLaurent":
        return cls({0: v})

    @classmethod
    def coerce(cls, x) -> "QLaurent":
        if isinstance(x, QLaurent):
            return x
        if isinstance(x, _RATIONAL):
            return cls.const(x)
        return NotImplemented

    @property
    def coeffs(self) -> dict:
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    def __iter__(self):
        return iter(self.items())

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        other = QLaurent.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if not self._c:
            return hash(0)
        if list(self._c) == [0]:
            return hash(self._c[0])
        return hash(frozenset(self._c.items()))

    def __add__(self, other):
        other = QLaurent.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        c = dict(self._c)
        for e, v in other._c.items():
            s = c.get(e, 0) + v
            if s:
                c[e] = s
            else:
                c.pop(e, None)
        return QLaurent._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return QLaurent._raw({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        other = QLaurent.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _RATIONAL):
            if not other:
                return QLaurent._raw({})
            return QLaurent._raw({e: v * other for e, v in self._c.items()})
        other = QLaurent.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        c = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + v1 * v2
        return QLaurent._raw({e: v for e, v in c.items() if v})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._c) != 1:
                raise InexactDivision("only monomials are invertible")
            ((e, v),) = self._c.items()
            return QLaurent._raw({e * k: Fraction(1) / v ** (-k)})
        out = QLaurent.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __truediv__(self, other):
        if isinstance(other, _RATIONAL):
            if not other:
                raise ZeroDivisionError("division by zero")
            return QLaurent._raw({e: v / other for e, v in self._c.items()})
        other = QLaurent.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.exact_div(other)

    def exact_div(self, other: "QLaurent") -> "QLaurent":
        """Quotient ``self / other``; raises InexactDivision on a remainder."""
        other = QLaurent.coerce(other)
        if not other:
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if not self:
            return QLaurent._raw({})
        gmin = min(other._c)
        fmin = min(self._c)
        g = {e - gmin: v for e, v in other._c.items()}
        rem = {e - fmin: v for e, v in self._c.items()}
        gdeg = max(g)
        lead = g[gdeg]
        quot = {}
        while rem:
            top = max(rem)
            if top < gdeg:
                raise InexactDivision("nonzero remainder in Laurent division")
            factor = rem[top] / lead
            shift = top - gdeg
            quot[shift] = factor
            for e, v in g.items():
                k = e + shift
                s = rem.get(k, 0) - factor * v
                if s:
                    rem[k] = s
                else:
                    rem.pop(k, None)
        off = fmin - gmin
        return QLaurent._raw({e + off: v for e, v in quot.items()})

    def divides(self, other) -> bool:
        try:
            QLaurent.coerce(other).exact_div(self)
        except InexactDivision:
            return False
        return True

    def evaluate(self, x):
        """Value at ``q = x`` for a nonzero rational ``x``."""
        x = Fraction(x)
        return sum((v * x**e for e, v in self._c.items()), Fraction(0))

    def invert_q(self) -> "QLaurent":
        """Substitute ``q -> 1/q``."""
        return QLaurent._raw({-e: v for e, v in self._c.items()})

    def to_tseries(self, order: int) -> "TSeries":
        """Substitute ``q = e^t`` exactly through ``t^order``."""
        coeffs = []
        for j in range(order + 1):
            s = sum((v * e**j for e, v in self._c.items()), Fraction(0))
            coeffs.append(s / factorial(j))
        return TSeries(coeffs, order)

    def t_derivative(self, j: int) -> Fraction:
        """``j``-th derivative at ``t = 0`` of ``self(e^t)``, i.e. ``sum_e c_e e^j``."""
        return sum((v * e**j for e, v in self._c.items()), Fraction(0))

    def __repr__(self):
        if not self._c:
            return "0"
        terms = []
        for e, v in self.items():
            if e == 0:
                terms.append(str(v))
            else:
                mono = "q" if e == 1 else f"q^{e}"
                if v == 1:
                    terms.append(mono)
                elif v == -1:
                    terms.append("-" + mono)
                else:
                    terms.append(f"{v}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")

    def to_json(self):
        return {"q": [[e, str(v)] for e, v in self.items()]}

    @classmethod
    def from_json(cls, data):
        return cls({int(e): Fraction(v) for e, v in data["q"]})


class TSeries:
    """Power series ``c_0 + c_1 t + ... + c_T t^T`` truncated at order ``T``."""

    __slots__ = ("_c", "order")

    def __init__(self, coeffs, order: int | None = None):
        coeffs = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        coeffs = coeffs[: order + 1]
        coeffs += [Fraction(0)] * (order + 1 - len(coeffs))
        self._c = tuple(coeffs)
        self.order = order

    @classmethod
    def const(cls, v, order: int) -> "TSeries":
        return cls([v], order)

    @classmethod
    def t(cls, order: int) -> "TSeries":
        return cls([0, 1], order)

    @classmethod
    def exp(cls, a, order: int) -> "TSeries":
        """Series of ``exp(a t)``."""
        a = Fraction(a)
        return cls([a**j / factorial(j) for j in range(order + 1)], order)

    def _coerce(self, x):
        if isinstance(x, TSeries):
            return x
        if isinstance(x, _RATIONAL):
            return TSeries.const(x, self.order)
        return NotImplemented

    @property
    def coeffs(self) -> tuple:
        return self._c

    def __getitem__(self, j: int) -> Fraction:
        if j > self.order:
            raise IndexError(f"coefficient t^{j} beyond truncation order {self.order}")
        return self._c[j] if j >= 0 else Fraction(0)

    def valuation(self):
        """Lowest exponent with a nonzero coefficient, None for zero."""
        for j, c in enumerate(self._c):
            if c:
                return j
        return None

    def __bool__(self):
        return any(self._c)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = min(self.order, other.order)
        return self._c[: n + 1] == other._c[: n + 1]

    def __hash__(self):
        return hash(self._c)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = min(self.order, other.order)
        return TSeries([a + b for a, b in zip(self._c[: n + 1], other._c[: n + 1])], n)

    __radd__ = __add__

    def __neg__(self):
        return TSeries([-a for a in self._c], self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _RATIONAL):
            return TSeries([a * other for a in self._c], self.order)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self._c, other._c
        out = []
        for k in range(n + 1):
            out.append(sum((a[i] * b[k - i] for i in range(k + 1) if a[i] and b[k - i]), Fraction(0)))
        return TSeries(out, n)

    __rmul__ = __mul__

    def inverse(self) -> "TSeries":
        a = self._c
        if not a[0]:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        out = [1 / a[0]]
        for k in range(1, self.order + 1):
            s = sum((a[i] * out[k - i] for i in range(1, k + 1)), Fraction(0))
            out.append(-s / a[0])
        return TSeries(out, self.order)

    def __truediv__(self, other):
        if isinstance(other, _RATIONAL):
            return TSeries([a / other for a in self._c], self.order)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def shift_down(self, k: int) -> "TSeries":
        """Divide by ``t^k``; the first ``k`` coefficients must vanish."""
        if any(self._c[:k]):
            raise InexactDivision(f"series not divisible by t^{k}")
        return TSeries(self._c[k:], self.order - k)

    def negate_var(self) -> "TSeries":
        """Substitute ``t -> -t``."""
        return TSeries([c if j % 2 == 0 else -c for j, c in enumerate(self._c)], self.order)

    def derivative_at_zero(self, j: int) -> Fraction:
        """``j! [t^j]``, the coefficient against ``t^j / j!``."""
        return self[j] * factorial(j)

    def __repr__(self):
        terms = [f"{c}*t^{j}" for j, c in enumerate(self._c) if c]
        return (" + ".join(terms) or "0") + f" + O(t^{self.order + 1})"

    def to_json(self):
        return {"order": self.order, "t": [str(c) for c in self._c]}

    @classmethod
    def from_json(cls, data):
        return cls([Fraction(c) for c in data["t"]], data["order"])


@lru_cache(maxsize=None)
def bernoulli(k: int) -> Fraction:
    """Bernoulli numbers with ``B_1 = -1/2`` (generating function ``t/(e^t-1)``).

    Uses ``sum_{j<=k} C(k+1, j) B_j = 0`` for ``k >= 1``.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return Fraction(1)
    # fill the cache bottom-up so deep k does not recurse
    for j in range(1, k):
        bernoulli(j)
    s = sum((comb(k + 1, j) * bernoulli(j) for j in range(k)), Fraction(0))
    return -s / (k + 1)


def ring_of(x) -> str:
    """Name of the scalar ring a coefficient lives in."""
    if isinstance(x, QLaurent):
        return "q-laurent"
    if isinstance(x, TSeries):
        return "t-series"
    return "rational"
