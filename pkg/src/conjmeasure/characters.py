"""Irreducible characters of the symmetric group.

Two independent routes to chi^lambda(mu):

* :func:`mn_character` removes border strips from lambda, one part of mu at a
  time (largest first), memoized on the remaining shape and class.
* :class:`CharacterTable` computes whole columns by expanding the power sum
  p_mu in the Schur basis, adding rim hooks on a bead abacus encoded as an
  int bitmask.  Column sums for large n come from a generating recursion over
  sum_{mu |- n} p_mu without materializing the full table.
"""
from __future__ import annotations

from collections import defaultdict
from functools import cached_property, lru_cache
from math import factorial, prod
from typing import Mapping

from .errors import DomainError
from .partitions import Partition, class_size, enumerate_partitions, weights

Vector = dict[int, int]  # abacus bitmask -> coefficient


def _mask(lam: Partition, beads: int) -> int:
    padded = tuple(lam) + (0,) * (beads - len(lam))
    mask = 0
    for i, part in enumerate(padded):
        mask |= 1 << (part + beads - 1 - i)
    return mask


def _unmask(mask: int, beads: int) -> Partition:
    positions = [b for b in range(mask.bit_length()) if mask >> b & 1]
    positions.reverse()
    parts = [pos - (beads - 1 - i) for i, pos in enumerate(positions)]
    return tuple(p for p in parts if p > 0)


def _add_hooks(vec: Vector, k: int, top: int) -> Vector:
    """Multiply a Schur expansion by the power sum p_k.

    ``top`` is the highest bead position allowed; it must leave room for the
    largest partition the caller will reach.
    """
    out: Vector = defaultdict(int)
    gap = (1 << (k - 1)) - 1
    for mask, coef in vec.items():
        m = mask
        while m:
            low = m & -m
            b = low.bit_length() - 1
            m ^= low
            dest = b + k
            if dest > top or mask >> dest & 1:
                continue
            height = (mask >> (b + 1) & gap).bit_count()
            new = mask ^ low ^ (1 << dest)
            out[new] += -coef if height & 1 else coef
    return {m: c for m, c in out.items() if c}


class CharacterTable:
    """chi^lambda(mu) for all lambda, mu |- n, with dimensions and column sums.

    Columns are computed on demand and cached; ``rows`` materializes the whole
    table.  Pass ``rows`` to wrap an existing (possibly corrupted) table.
    """

    def __init__(self, n: int, rows: Mapping[Partition, Mapping[Partition, int]] | None = None):
        if n < 0:
            raise DomainError(f"n must be nonnegative, got {n}")
        self.n = n
        self.partitions: tuple[Partition, ...] = enumerate_partitions(n)
        self._beads = max(n, 1)
        self._top = 2 * self._beads
        self._prefix: dict[tuple[int, ...], Vector] = {(): {_mask((), self._beads): 1}}
        self._columns: dict[Partition, dict[Partition, int]] = {}
        self._given = rows is not None
        if rows is not None:
            for mu in self.partitions:
                self._columns[mu] = {lam: int(rows[lam][mu]) for lam in self.partitions}

    def _pvec(self, parts: tuple[int, ...]) -> Vector:
        # parts sorted increasing so that prefixes are shared between classes
        vec = self._prefix.get(parts)
        if vec is None:
            vec = _add_hooks(self._pvec(parts[:-1]), parts[-1], self._top)
            self._prefix[parts] = vec
        return vec

    def column(self, mu: Partition) -> dict[Partition, int]:
        mu = tuple(mu)
        if sum(mu) != self.n:
            raise DomainError(f"class {mu} does not have weight {self.n}")
        col = self._columns.get(mu)
        if col is None:
            vec = self._pvec(tuple(reversed(mu)))
            found = {_unmask(m, self._beads): c for m, c in vec.items()}
            col = {lam: found.get(lam, 0) for lam in self.partitions}
            self._columns[mu] = col
        return col

    def chi(self, lam: Partition, mu: Partition) -> int:
        col = self.column(mu)
        if tuple(lam) not in col:
            raise DomainError(f"{lam} is not a partition of {self.n}")
        return col[tuple(lam)]

    @cached_property
    def rows(self) -> dict[Partition, dict[Partition, int]]:
        cols = {mu: self.column(mu) for mu in self.partitions}
        self._prefix.clear()
        return {lam: {mu: cols[mu][lam] for mu in self.partitions} for lam in self.partitions}

    @cached_property
    def dims(self) -> dict[Partition, int]:
        return dict(self.column((1,) * self.n))

    @cached_property
    def colsums(self) -> dict[Partition, int]:
        if self._given or len(self._columns) == len(self.partitions):
            return {lam: sum(row.values()) for lam, row in self.rows.items()}
        return _column_sums(self.n)

    def is_complete(self) -> bool:
        return len(self._columns) == len(self.partitions)


def _column_sums(n: int) -> dict[Partition, int]:
    """Schur coefficients of sum_{mu |- n} p_mu, i.e. sum_mu chi^lambda(mu)."""
    beads = max(n, 1)
    top = 2 * beads
    empty = _mask((), beads)
    # level[m][j]: sum of p_mu over mu |- m with parts <= j
    level: list[list[Vector]] = [[{empty: 1} for _ in range(n + 1)]]
    for m in range(1, n + 1):
        row: list[Vector] = [{}]
        for j in range(1, n + 1):
            acc = defaultdict(int, row[j - 1])
            if j <= m:
                for mask, c in _add_hooks(level[m - j][j], j, top).items():
                    acc[mask] += c
            row.append({k: v for k, v in acc.items() if v})
        level.append(row)
    found = {_unmask(mk, beads): c for mk, c in level[n][n].items()}
    return {lam: found.get(lam, 0) for lam in enumerate_partitions(n)}


@lru_cache(maxsize=64)
def build_table(n: int) -> CharacterTable:
    """Fully materialized character table of S_n (cached per n)."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    table = CharacterTable(n)
    table.rows
    return table


@lru_cache(maxsize=64)
def table_for(n: int) -> CharacterTable:
    """Lazily filled table: columns and column sums computed as requested."""
    return CharacterTable(n)


def hook_lengths(lam: Partition) -> list[int]:
    conj = [sum(1 for p in lam if p > j) for j in range(lam[0])] if lam else []
    return [lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i])]


def hook_dimension(lam: Partition) -> int:
    """f^lambda = n! / product of hook lengths."""
    lam = tuple(lam)
    dim, rem = divmod(factorial(sum(lam)), prod(hook_lengths(lam)))
    assert rem == 0
    return dim


@lru_cache(maxsize=None)
def _mn(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1 if not lam else 0
    k, rest = mu[0], mu[1:]
    beads = len(lam)
    mask = _mask(lam, beads)
    total = 0
    m = mask
    while m:
        low = m & -m
        b = low.bit_length() - 1
        m ^= low
        dest = b - k
        if dest < 0 or mask >> dest & 1:
            continue
        height = (mask >> (dest + 1) & ((1 << (k - 1)) - 1)).bit_count()
        sub = _unmask(mask ^ low ^ (1 << dest), beads)
        value = _mn(sub, rest)
        total += -value if height & 1 else value
    return total


def mn_character(lam: Partition, mu: Partition) -> int:
    """chi^lambda(mu) by recursive border-strip removal."""
    lam, mu = tuple(lam), tuple(sorted(mu, reverse=True))
    if sum(lam) != sum(mu):
        raise DomainError(f"weight mismatch: {lam} vs {mu}")
    return _mn(lam, mu)


def conjugacy_multiplicity(table: CharacterTable, lam: Partition) -> int:
    """Multiplicity of S^lambda in the conjugation representation (a column sum)."""
    lam = tuple(lam)
    if lam not in table.colsums:
        raise DomainError(f"{lam} is not a partition of {table.n}")
    return table.colsums[lam]


def conjugacy_rep_character(n: int, mu: Partition) -> int:
    """Character of the conjugation representation: n! / |class of mu| = c(mu)."""
    if sum(mu) != n:
        raise DomainError(f"class {mu} does not have weight {n}")
    return weights(tuple(mu))[0]


def verify_orthogonality(table: CharacterTable) -> bool:
    """Check sum_mu |C_mu| chi^a(mu) chi^b(mu) = n! [a = b] for every pair of rows."""
    rows = table.rows
    sizes = {mu: class_size(mu) for mu in table.partitions}
    order = factorial(table.n)
    parts = table.partitions
    for x, a in enumerate(parts):
        for b in parts[x:]:
            s = sum(sizes[mu] * rows[a][mu] * rows[b][mu] for mu in parts)
            if s != (order if a == b else 0):
                return False
    return True
