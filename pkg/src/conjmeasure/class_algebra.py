"""Counting tuples of permutations with prescribed classes and product.

``frobenius_count`` evaluates the character-sum formula for the number of
tuples (g_1, ..., g_m) with g_j in given classes and g_1 ... g_m equal to a
fixed element.  ``brute_force_count`` enumerates the same tuples directly and
serves as its oracle.  ``b_count`` evaluates the class-target version of the
formula in closed form, and ``c_count`` enumerates tuples on a small ground
set with a prescribed symbol and product type.
"""
from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from itertools import product
from math import factorial, prod
from typing import Sequence, Union

from .characters import CharacterTable, table_for
from .errors import ConsistencyError, DomainError, RefusalError
from .partitions import Partition, class_size, falling_factorial, make_partition, pad_ones, strip_ones, weights
from .perms import Permutation, compose, cycle_type, enumerate_class

Spec = tuple[Partition, int]
Target = Union[Permutation, Partition]


def _env_int(name: str, default: int) -> int:
    value = os.environ.get(name)
    return int(value) if value else default


@dataclass(frozen=True)
class Bounds:
    """Limits on exhaustive enumeration; overridable from the environment."""

    max_n: int = field(default_factory=lambda: _env_int("CONJMEASURE_MAX_N", 6))
    max_length: int = field(default_factory=lambda: _env_int("CONJMEASURE_MAX_LENGTH", 4))
    max_ground: int = field(default_factory=lambda: _env_int("CONJMEASURE_MAX_GROUND", 6))
    max_tuples: int = field(default_factory=lambda: _env_int("CONJMEASURE_MAX_TUPLES", 2_000_000))


def normalize_specs(specs: Sequence[tuple[Sequence[int], int]]) -> tuple[Spec, ...]:
    out = []
    for nu, k in specs:
        if k < 0:
            raise DomainError(f"negative repetition {k}")
        out.append((make_partition(nu), int(k)))
    return tuple(out)


@dataclass(frozen=True)
class TupleCountQuery:
    n: int
    class_specs: tuple[Spec, ...]
    target: Target

    def __post_init__(self):
        specs = tuple((pad_ones(strip_ones(make_partition(nu)), self.n), k) for nu, k in normalize_specs(self.class_specs))
        object.__setattr__(self, "class_specs", specs)
        if isinstance(self.target, Permutation):
            if self.target.support and max(self.target.support) > self.n:
                raise DomainError(f"target {self.target} does not live in S_{self.n}")
        else:
            object.__setattr__(self, "target", pad_ones(strip_ones(make_partition(self.target)), self.n))

    @property
    def classes(self) -> list[Partition]:
        return [nu for nu, k in self.class_specs for _ in range(k)]


def _integral(value: Fraction, what: str) -> int:
    if value.denominator != 1 or value < 0:
        raise ConsistencyError(f"{what} evaluated to {value}, not a nonnegative integer")
    return value.numerator


def frobenius_count(q: TupleCountQuery, table: CharacterTable | None = None) -> int:
    """Count tuples via the character sum; a class target is one representative times the class size."""
    table = table or table_for(q.n)
    if table.n != q.n:
        raise DomainError(f"table is for S_{table.n}, query is in S_{q.n}")
    if isinstance(q.target, Permutation):
        target_class, scale = cycle_type(q.target, q.n), 1
    else:
        target_class, scale = q.target, class_size(q.target)
    classes = q.classes
    m = len(classes)
    total = Fraction(0)
    target_col = table.column(target_class)
    cols = [table.column(c) for c in classes]
    for lam in table.partitions:
        f = table.dims[lam]
        total += Fraction(prod(col[lam] for col in cols) * target_col[lam]) / Fraction(f) ** (m - 1)
    total *= Fraction(prod(class_size(c) for c in classes), factorial(q.n))
    return scale * _integral(total, "frobenius count")


@lru_cache(maxsize=None)
def _class_members(n: int, nu: Partition) -> tuple[Permutation, ...]:
    return tuple(enumerate_class(n, nu))


@lru_cache(maxsize=256)
def _product_histogram(n: int, classes: tuple[Partition, ...]) -> Counter:
    hist: Counter = Counter()
    identity = Permutation()
    for combo in product(*(_class_members(n, c) for c in classes)):
        hist[reduce(compose, combo, identity)] += 1
    return hist


def brute_force_count(q: TupleCountQuery, bounds: Bounds | None = None) -> int:
    """Enumerate every tuple from the given classes and count matching products."""
    bounds = bounds or Bounds()
    classes = tuple(q.classes)
    if q.n > bounds.max_n:
        raise RefusalError(f"n = {q.n} exceeds brute-force bound {bounds.max_n}")
    if len(classes) > bounds.max_length:
        raise RefusalError(f"tuple length {len(classes)} exceeds bound {bounds.max_length}")
    if prod(class_size(c) for c in classes) > bounds.max_tuples:
        raise RefusalError("tuple count exceeds enumeration bound")
    hist = _product_histogram(q.n, classes)
    if isinstance(q.target, Permutation):
        return hist.get(q.target, 0)
    return sum(c for p, c in hist.items() if cycle_type(p, q.n) == q.target)


def _check_theorem_specs(n: int, specs: tuple[Spec, ...]) -> None:
    for nu, _ in specs:
        if not nu or 1 in nu or sum(nu) >= n:
            raise DomainError(f"class {nu} must be nonempty, have no 1-parts and weight < n = {n}")


def b_count(n: int, specs, delta: Partition, table: CharacterTable | None = None) -> int:
    """Number of tuples, entries drawn spec by spec, whose product lies in class ``delta``.

    Evaluated from the closed character-sum expression; ``specs`` lists
    ``(nu, k)`` pairs with each ``nu`` free of 1-parts and of weight < n.
    """
    specs = normalize_specs(specs)
    _check_theorem_specs(n, specs)
    delta = make_partition(delta)
    if sum(delta) != n:
        raise DomainError(f"{delta} is not a partition of {n}")
    table = table or table_for(n)
    k = sum(ki for _, ki in specs)
    cols = [(table.column(pad_ones(nu, n)), ki) for nu, ki in specs]
    dcol = table.column(delta)
    acc = Fraction(0)
    for lam in table.partitions:
        num = prod(col[lam] ** ki for col, ki in cols) * dcol[lam]
        acc += Fraction(num) / Fraction(table.dims[lam]) ** (k - 1)
    prefactor = prod(Fraction(falling_factorial(n, sum(nu)), weights(nu)[0]) ** ki for nu, ki in specs)
    value = prefactor / factorial(n) * acc * Fraction(factorial(n), weights(delta)[0])
    return _integral(value, "B count")


def symbol_of_entries(entries: Sequence[Permutation]) -> Partition:
    counts = Counter(x for p in entries for x in p.support)
    return tuple(sorted(counts.values(), reverse=True))


def c_count(mu: Partition, delta: Partition, specs, ground: int | None = None, bounds: Bounds | None = None) -> int:
    """Tuples over S_ground with symbol exactly ``mu`` and product type ``delta`` (ones ignored)."""
    bounds = bounds or Bounds()
    specs = normalize_specs(specs)
    mu, delta = make_partition(mu), make_partition(delta)
    size = sum(sum(nu) * k for nu, k in specs)
    if sum(mu) != size or sum(delta) != size:
        raise DomainError(f"mu and delta must both be partitions of {size}")
    ground = len(mu) if ground is None else ground
    if ground != len(mu):
        raise DomainError(f"ground set size must equal the length of mu ({len(mu)})")
    if ground > bounds.max_ground:
        raise RefusalError(f"ground set {ground} exceeds bound {bounds.max_ground}")
    classes = [strip_ones(nu) for nu, k in specs for _ in range(k)]
    if any(sum(c) > ground for c in classes):
        return 0
    members = [_class_members(ground, pad_ones(c, ground)) for c in classes]
    if prod(len(m) for m in members) > bounds.max_tuples:
        raise RefusalError("tuple count exceeds enumeration bound")
    want = strip_ones(delta)
    identity = Permutation()
    count = 0
    for combo in product(*members):
        if symbol_of_entries(combo) != mu:
            continue
        if strip_ones(cycle_type(reduce(compose, combo, identity))) == want:
            count += 1
    return count


def pairing_limit_ratio(q: int, half_k: int, bounds: Bounds | None = None) -> Fraction:
    """C * q^k' / (q k')! for the all-2 symbol, identity product and 2k' copies of a q-cycle."""
    c = c_count((2,) * (q * half_k), (1,) * (2 * q * half_k), [((q,), 2 * half_k)], bounds=bounds)
    return Fraction(c * q**half_k, factorial(q * half_k))
