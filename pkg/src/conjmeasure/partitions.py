"""Integer partitions and the statistics attached to them.

A partition is a plain ``tuple[int, ...]`` of weakly decreasing positive
integers; ``()`` is the unique partition of 0.  Keeping partitions as tuples
makes them hashable dictionary keys for character tables and measures.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Iterator, Mapping

from .errors import DomainError, ParseError

Partition = tuple[int, ...]


@dataclass(frozen=True)
class PartitionStats:
    weight: int
    length: int
    multiplicities: Mapping[int, int]


def is_partition(parts: tuple[int, ...]) -> bool:
    return all(isinstance(p, int) and p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def make_partition(parts) -> Partition:
    """Sort ``parts`` into a partition, rejecting non-positive entries."""
    parts = tuple(int(p) for p in parts)
    if any(p < 1 for p in parts):
        raise DomainError(f"partition parts must be positive: {parts}")
    return tuple(sorted(parts, reverse=True))


def parse_partition(text: str) -> Partition:
    """Parse the canonical ``"a+b+c"`` form; ``""`` is the empty partition.

    >>> parse_partition("2+3")
    (3, 2)
    """
    text = text.strip()
    if not text:
        return ()
    parts = []
    for token in text.split("+"):
        token = token.strip()
        if not token.isdigit():
            raise ParseError(f"bad partition token {token!r} in {text!r}")
        value = int(token)
        if value == 0:
            raise ParseError(f"zero part in {text!r}")
        parts.append(value)
    return tuple(sorted(parts, reverse=True))


def format_partition(lam: Partition) -> str:
    return "+".join(str(p) for p in lam)


def _partitions_bounded(n: int, largest: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse-lexicographic order, ``(n,)`` first."""
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    return tuple(_partitions_bounded(n, n))


def multiplicities(lam: Partition) -> dict[int, int]:
    """Map each part value ``i`` to the number of times it occurs."""
    return dict(Counter(lam))


def partition_stats(lam: Partition) -> PartitionStats:
    return PartitionStats(weight=sum(lam), length=len(lam), multiplicities=multiplicities(lam))


def weights(lam: Partition) -> tuple[int, int]:
    """Return ``(c, d)`` with c = prod l_i! i^l_i and d = prod l_i!."""
    c = d = 1
    for part, count in Counter(lam).items():
        fc = factorial(count)
        c *= fc * part**count
        d *= fc
    return c, d


def centralizer_order(lam: Partition) -> int:
    return weights(lam)[0]


def class_size(lam: Partition) -> int:
    """Number of permutations of S_n with cycle type ``lam`` (n = sum of parts)."""
    n = sum(lam)
    c = weights(lam)[0]
    size, rem = divmod(factorial(n), c)
    assert rem == 0
    return size


def strip_ones(lam: Partition) -> Partition:
    return tuple(p for p in lam if p > 1)


def pad_ones(lam: Partition, n: int) -> Partition:
    weight = sum(lam)
    if n < weight:
        raise DomainError(f"cannot pad {format_partition(lam) or '()'} of weight {weight} to {n}")
    return tuple(lam) + (1,) * (n - weight)


def canonicalize_ones(lam: Partition, mode: str = "strip", n: int | None = None) -> Partition:
    """Strip every 1-part (``mode="strip"``) or pad with 1-parts up to weight ``n``."""
    if mode == "strip":
        return strip_ones(lam)
    if mode == "pad":
        if n is None:
            raise DomainError("pad mode needs the ambient n")
        return pad_ones(lam, n)
    raise DomainError(f"unknown mode {mode!r}")


def falling_factorial(n: int, m: int) -> int:
    """n (n-1) ... (n-m+1); 1 for m = 0 and 0 once a factor reaches zero."""
    if m < 0:
        raise DomainError(f"negative length {m}")
    if m > n >= 0:
        return 0
    return prod(range(n - m + 1, n + 1))


def double_factorial(m: int) -> int:
    if m < -1:
        raise DomainError(f"double factorial undefined for {m}")
    return prod(range(m, 0, -2))


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))
