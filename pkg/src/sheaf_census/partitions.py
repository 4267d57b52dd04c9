"""Integer partitions, bipartitions, and the balanced/weighted variants.

Counting functions accept arbitrary rational arguments and return 0 off the
nonnegative integers, so convolution sums need no boundary cases.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integers."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        for i, p in enumerate(self.parts):
            if p < 1:
                raise ValueError(f"partition parts must be positive, got {p}")
            if i and self.parts[i - 1] < p:
                raise ValueError(f"parts must be weakly decreasing: {self.parts}")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return "+".join(map(str, self.parts)) if self.parts else "0"


@dataclass(frozen=True)
class BiPartition:
    """An ordered pair of partitions; weight is the sum of both weights."""

    first: Partition
    second: Partition

    @property
    def weight(self) -> int:
        return self.first.weight + self.second.weight


def _as_int(x) -> int | None:
    """Integer value of x, or None if x is not a (rational) integer."""
    if isinstance(x, bool):
        return None
    if isinstance(x, int):
        return x
    if isinstance(x, (Fraction, Rational)):
        return int(x) if x.denominator == 1 else None
    if isinstance(x, float):
        return int(x) if x.is_integer() else None
    return None


def _gen_partitions(n: int, max_part: int):
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _gen_partitions(n - first, first):
            yield (first,) + rest


def enum_partitions(n: int) -> list[Partition]:
    """All partitions of n, in lexicographically decreasing order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [Partition(p) for p in _gen_partitions(n, n)]


@lru_cache(maxsize=None)
def _partition_table(n: int) -> tuple[int, ...]:
    # dense DP over allowed part sizes; independent of any series expansion
    table = [0] * (n + 1)
    table[0] = 1
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            table[total] += table[total - part]
    return tuple(table)


def count_partitions(x) -> int:
    """p(x): number of partitions of x, and 0 when x is not in N."""
    n = _as_int(x)
    if n is None or n < 0:
        return 0
    return _partition_table(n)[n]


def count_bipartitions(x) -> int:
    """Number of ordered pairs of partitions with total weight x."""
    n = _as_int(x)
    if n is None or n < 0:
        return 0
    return sum(count_partitions(k) * count_partitions(n - k) for k in range(n + 1))


@lru_cache(maxsize=None)
def _distinct_table(n: int) -> tuple[int, ...]:
    table = [0] * (n + 1)
    table[0] = 1
    for part in range(1, n + 1):
        for total in range(n, part - 1, -1):
            table[total] += table[total - part]
    return tuple(table)


def count_distinct_partitions(x) -> int:
    """Number of partitions of x into distinct parts; 0 off N."""
    n = _as_int(x)
    if n is None or n < 0:
        return 0
    return _distinct_table(n)[n]


@lru_cache(maxsize=None)
def _distinct_odd_table(n: int) -> tuple[int, ...]:
    table = [0] * (n + 1)
    table[0] = 1
    for part in range(1, n + 1, 2):
        for total in range(n, part - 1, -1):
            table[total] += table[total - part]
    return tuple(table)


def count_distinct_odd_partitions(x) -> int:
    """Number of partitions of x into distinct odd parts; 0 off N."""
    n = _as_int(x)
    if n is None or n < 0:
        return 0
    return _distinct_odd_table(n)[n]


def _gen_distinct_odd(n: int, max_part: int):
    if n == 0:
        yield ()
        return
    first = min(n, max_part)
    if first % 2 == 0:
        first -= 1
    while first >= 1:
        for rest in _gen_distinct_odd(n - first, first - 2):
            yield (first,) + rest
        first -= 2


def enum_distinct_odd_balanced(n: int, t: int) -> list[Partition]:
    """Partitions of n into distinct odd parts whose count of parts congruent
    to 1 mod 4 exceeds the count congruent to 3 mod 4 by exactly t."""
    if n < 0:
        return []
    out = []
    for parts in _gen_distinct_odd(n, n):
        balance = sum(1 if p % 4 == 1 else -1 for p in parts)
        if balance == t:
            out.append(Partition(parts))
    return out


def _gen_odd_partitions(n: int, max_part: int):
    if n == 0:
        yield ()
        return
    first = min(n, max_part)
    if first % 2 == 0:
        first -= 1
    while first >= 1:
        for rest in _gen_odd_partitions(n - first, first):
            yield (first,) + rest
        first -= 2


def enum_odd_partitions(n: int) -> list[Partition]:
    """All partitions of n into odd parts, lexicographically decreasing."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [Partition(p) for p in _gen_odd_partitions(n, n)]


def weighted_odd_partition_sum(n: int) -> int:
    """Sum of wt over partitions of n into odd parts.

    Writing the parts as 2*mu_1+1 >= ... >= 2*mu_s+1, wt doubles once for
    each index j with a gap mu >= 2 at the prescribed alternating positions:
    pairs (2j-1, 2j) when the number of parts is odd, pairs (2j, 2j+1) when
    it is even.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = 0
    for parts in _gen_odd_partitions(n, n):
        mu = [(p - 1) // 2 for p in parts]
        s = len(mu)
        if s % 2 == 1:
            gaps = sum(1 for j in range(1, (s - 1) // 2 + 1)
                       if mu[2 * j - 2] >= mu[2 * j - 1] + 2)
        else:
            gaps = sum(1 for j in range(1, s // 2)
                       if mu[2 * j - 1] >= mu[2 * j] + 2)
        total += 2 ** gaps
    return total
