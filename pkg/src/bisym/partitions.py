"""Integer partitions and the small bits of number theory that index every basis.

A partition is a plain tuple of positive ints in weakly decreasing order; the
empty tuple is the unique partition of 0.  Tuples are hashable, so they key
every series dictionary directly.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator, Tuple

Partition = Tuple[int, ...]
Bipartition = Tuple[Partition, Partition]

EMPTY: Partition = ()


def make_partition(parts: Iterable[int]) -> Partition:
    """Validate and return ``parts`` as a canonical partition tuple.

    Zero parts are tolerated and stripped; the remaining parts must be
    positive and weakly decreasing.
    """
    lam = tuple(int(p) for p in parts if p != 0)
    if any(p < 0 for p in lam):
        raise ValueError(f"negative part in {lam}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"parts of {lam} are not weakly decreasing")
    return lam


def weight(lam: Partition) -> int:
    return sum(lam)


def length(lam: Partition) -> int:
    return len(lam)


def merge(lam: Partition, mu: Partition) -> Partition:
    """Union of the parts of two partitions (the index of p_lam * p_mu)."""
    if not lam:
        return mu
    if not mu:
        return lam
    return tuple(sorted(lam + mu, reverse=True))


def multiplicities(lam: Partition) -> Counter:
    return Counter(lam)


@lru_cache(maxsize=None)
def z_of(lam: Partition) -> int:
    """Order of the centralizer of a permutation of cycle type ``lam``."""
    return prod(i ** m * factorial(m) for i, m in Counter(lam).items())


def transpose(lam: Partition) -> Partition:
    if not lam:
        return EMPTY
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def stretch(lam: Partition, n: int) -> Partition:
    """Multiply every part by ``n`` (index of p_n composed with p_lam)."""
    if n < 1:
        raise ValueError("stretch factor must be positive")
    return tuple(n * p for p in lam)


def sign(lam: Partition) -> int:
    """Sign of a permutation of cycle type ``lam``: (-1)^(|lam| - l(lam))."""
    return -1 if (sum(lam) - len(lam)) % 2 else 1


def _partitions_bounded(n: int, largest: int) -> Iterator[Partition]:
    if n == 0:
        yield EMPTY
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partitions_of(n: int) -> Tuple[Partition, ...]:
    """All partitions of ``n`` in decreasing lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return tuple(_partitions_bounded(n, n))


def partitions_up_to(n: int) -> Iterator[Partition]:
    for k in range(n + 1):
        yield from partitions_of(k)


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """Partition function via Euler's pentagonal recurrence."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > n:
            break
        s = 1 if k % 2 else -1
        total += s * partition_count(n - g1)
        g2 = k * (3 * k + 1) // 2
        if g2 <= n:
            total += s * partition_count(n - g2)
        k += 1
    return total


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius is defined for n >= 1")
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def to_text(lam: Partition) -> str:
    """Text form used by the parser and JSON output: ``"3,1,1"`` or ``"[]"``."""
    return ",".join(map(str, lam)) if lam else "[]"


def from_text(text: str) -> Partition:
    text = text.strip()
    if text in ("[]", ""):
        return EMPTY
    text = text.strip("[]()")
    return make_partition(int(tok) for tok in text.split(",") if tok.strip())
