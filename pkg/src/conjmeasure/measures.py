"""Plancherel and conjugacy measures on the partitions of n.

Masses are exact ``Fraction`` values with common denominator n!.  Sampling
uses inverse-CDF lookup on the integer numerators, driven by the standard
library Mersenne Twister (``random.Random(seed)``), so draws are exact and
reproducible for a given seed.
"""
from __future__ import annotations

import random
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate
from math import factorial, lcm
from typing import Mapping

from .characters import CharacterTable, table_for
from .errors import DomainError
from .partitions import Partition

KINDS = ("plancherel", "conjugacy")


@dataclass(frozen=True)
class SpectralMeasure:
    n: int
    kind: str
    atoms: Mapping[Partition, Fraction]

    def mass(self, lam: Partition) -> Fraction:
        return self.atoms.get(tuple(lam), Fraction(0))


def _check(n: int, table: CharacterTable) -> None:
    if table.n != n:
        raise DomainError(f"table is for S_{table.n}, measure requested for S_{n}")


def plancherel(n: int, table: CharacterTable | None = None) -> SpectralMeasure:
    """Mass (f^lambda)^2 / n! at each lambda."""
    if n == 0:
        return SpectralMeasure(0, "plancherel", {(): Fraction(1)})
    table = table or table_for(n)
    _check(n, table)
    order = factorial(n)
    atoms = {lam: Fraction(f * f, order) for lam, f in table.dims.items()}
    return SpectralMeasure(n, "plancherel", atoms)


def conjugacy(n: int, table: CharacterTable | None = None) -> SpectralMeasure:
    """Mass f^lambda * (sum over classes of chi^lambda) / n! at each lambda."""
    if n == 0:
        return SpectralMeasure(0, "conjugacy", {(): Fraction(1)})
    table = table or table_for(n)
    _check(n, table)
    order = factorial(n)
    atoms = {lam: Fraction(table.dims[lam] * table.colsums[lam], order) for lam in table.partitions}
    return SpectralMeasure(n, "conjugacy", atoms)


def measure(kind: str, n: int, table: CharacterTable | None = None) -> SpectralMeasure:
    if kind == "plancherel":
        return plancherel(n, table)
    if kind == "conjugacy":
        return conjugacy(n, table)
    raise DomainError(f"unknown measure kind {kind!r}; expected one of {KINDS}")


def total_mass(m: SpectralMeasure) -> Fraction:
    return sum(m.atoms.values(), Fraction(0))


def sample(m: SpectralMeasure, seed: int, count: int) -> list[Partition]:
    """Draw ``count`` partitions from ``m`` by inverse CDF in enumeration order."""
    if count < 0:
        raise DomainError(f"count must be nonnegative, got {count}")
    if count == 0:
        return []
    support = [(lam, w) for lam, w in m.atoms.items() if w > 0]
    if not support:
        raise DomainError("measure has no positive atoms")
    den = lcm(*(w.denominator for _, w in support))
    cumulative = list(accumulate(w.numerator * (den // w.denominator) for _, w in support))
    total = cumulative[-1]
    rng = random.Random(seed)
    return [support[bisect_right(cumulative, rng.randrange(total))][0] for _ in range(count)]
