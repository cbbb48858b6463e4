"""Partitions, permutations and related counting functions.

Partitions are plain tuples of positive integers in weakly decreasing
order; ``()`` is the empty partition.  Permutations are tuples of images
of ``0..n-1`` (zero based) and are converted to the one-based one-line
notation only when serialized.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod

__all__ = [
    "as_partition",
    "is_partition",
    "partitions_of",
    "partitions_up_to",
    "multiplicities",
    "z_of",
    "contents",
    "pad",
    "union",
    "difference",
    "sub_multisets",
    "partition_key",
    "cycle_type",
    "cycles",
    "compose",
    "inverse",
    "identity",
    "permutation_of_type",
    "perm_to_json",
    "perm_from_json",
    "falling",
    "binomial",
    "factorial",
    "fraction_to_json",
    "fraction_from_json",
]


def is_partition(parts) -> bool:
    parts = tuple(parts)
    if any((not isinstance(p, int)) or p <= 0 for p in parts):
        return False
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def as_partition(parts) -> tuple:
    """Validate ``parts`` and return it as a tuple.

    Raises ValueError for anything that is not a weakly decreasing
    sequence of positive integers.
    """
    parts = tuple(int(p) for p in parts)
    if not is_partition(parts):
        raise ValueError(f"not a partition: {list(parts)}")
    return parts


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple:
    """All partitions of ``n`` in reverse lexicographic order.

    >>> partitions_of(4)
    ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = []

    def rec(remaining, largest, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(remaining, largest), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(n, n, [])
    return tuple(out)


def partitions_up_to(n: int, descending: bool = True) -> list:
    """Partitions of every weight ``<= n``; heaviest first by default."""
    weights = range(n, -1, -1) if descending else range(n + 1)
    return [lam for w in weights for lam in partitions_of(w)]


def partition_key(lam):
    """Sort key for the canonical order: weight descending, then reverse lex."""
    return (-sum(lam), tuple(-p for p in lam))


def multiplicities(lam) -> dict:
    return dict(Counter(lam))


@lru_cache(maxsize=None)
def z_of(lam) -> int:
    """``z_lambda = prod_i i^{m_i} m_i!``, the centralizer order."""
    return prod(i**m * factorial(m) for i, m in Counter(lam).items())


def contents(lam) -> list:
    """Contents ``column - row`` of the boxes of ``lam``, row by row."""
    return [col - row for row, length in enumerate(lam) for col in range(length)]


def pad(lam, n: int) -> tuple:
    """Append ones to ``lam`` so that it becomes a partition of ``n``."""
    k = sum(lam)
    if k > n:
        raise ValueError(f"partition {list(lam)} has weight {k} > {n}")
    return tuple(lam) + (1,) * (n - k)


def union(a, b) -> tuple:
    """Multiset union of two partitions."""
    if not a:
        return tuple(b)
    if not b:
        return tuple(a)
    return tuple(sorted(a + b, reverse=True))


def difference(a, b):
    """Multiset difference ``a - b``, or None when ``b`` is not contained in ``a``."""
    ca = Counter(a)
    for part, m in Counter(b).items():
        if ca[part] < m:
            return None
        ca[part] -= m
    return tuple(sorted(ca.elements(), reverse=True))


def sub_multisets(lam):
    """Yield every sub-multiset of ``lam`` as a partition (each once)."""
    items = sorted(Counter(lam).items(), reverse=True)

    def rec(i):
        if i == len(items):
            yield ()
            return
        part, m = items[i]
        for rest in rec(i + 1):
            for j in range(m + 1):
                yield (part,) * j + rest

    yield from rec(0)


def falling(n, k: int) -> int:
    """Falling factorial ``n (n-1) ... (n-k+1)``; equals 1 for ``k = 0``."""
    out = 1
    for i in range(k):
        out *= n - i
    return out


# permutations -------------------------------------------------------------


def identity(n: int) -> tuple:
    return tuple(range(n))


def compose(s, t) -> tuple:
    """The product ``st`` acting as ``(st)(i) = s(t(i))``."""
    return tuple(s[i] for i in t)


def inverse(s) -> tuple:
    out = [0] * len(s)
    for i, j in enumerate(s):
        out[j] = i
    return tuple(out)


def cycles(s) -> list:
    """Cycle decomposition, each cycle starting at its smallest element."""
    seen = [False] * len(s)
    out = []
    for start in range(len(s)):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = s[i]
        out.append(tuple(cyc))
    return out


def cycle_type(s) -> tuple:
    seen = bytearray(len(s))
    lengths = []
    for start in range(len(s)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = 1
            length += 1
            i = s[i]
        lengths.append(length)
    lengths.sort(reverse=True)
    return tuple(lengths)


def permutation_of_type(lam) -> tuple:
    """The permutation ``(0 1 .. l1-1)(l1 .. l1+l2-1)...`` of cycle type ``lam``."""
    n = sum(lam)
    images = list(range(n))
    start = 0
    for part in lam:
        for i in range(part):
            images[start + i] = start + (i + 1) % part
        start += part
    return tuple(images)


def perm_to_json(s) -> list:
    return [i + 1 for i in s]


def perm_from_json(images) -> tuple:
    s = tuple(int(i) - 1 for i in images)
    if sorted(s) != list(range(len(s))):
        raise ValueError(f"not a permutation: {list(images)}")
    return s


def fraction_to_json(x) -> str:
    return str(Fraction(x))


def fraction_from_json(text) -> Fraction:
    return Fraction(text)


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return comb(n, k)
