"""Finite-support permutations and tuples of cycle words.

Products are read left to right: ``compose(p, q)`` applies ``p`` first, so
the tuple ``(1 2);(1 3);(5 6);(1 6)`` multiplies out to ``(1 2 3 6 5)``.
"""
from __future__ import annotations

import re
from collections import Counter
from functools import reduce
from itertools import permutations as _orderings
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import DomainError, ParseError
from .partitions import Partition, strip_ones

Cycle = tuple[int, ...]
Entry = tuple[Cycle, ...]
CycleTuple = tuple[Entry, ...]


class Permutation:
    """A bijection of the positive integers moving finitely many points."""

    __slots__ = ("_map", "_key")

    def __init__(self, mapping: Mapping[int, int] | None = None):
        moved = {x: y for x, y in (mapping or {}).items() if x != y}
        if sorted(moved) != sorted(moved.values()):
            raise DomainError(f"mapping is not a bijection of its support: {moved}")
        self._map = moved
        self._key = tuple(sorted(moved.items()))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]]) -> "Permutation":
        mapping: dict[int, int] = {}
        for cyc in cycles:
            for i, x in enumerate(cyc):
                if x in mapping:
                    raise DomainError(f"point {x} repeated across cycles")
                mapping[x] = cyc[(i + 1) % len(cyc)]
        return cls(mapping)

    @classmethod
    def identity(cls) -> "Permutation":
        return cls()

    def __call__(self, x: int) -> int:
        return self._map.get(x, x)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self._map)

    def is_identity(self) -> bool:
        return not self._map

    def then(self, other: "Permutation") -> "Permutation":
        """Apply ``self`` first, then ``other``."""
        points = self._map.keys() | other._map.keys()
        return Permutation({x: other(self(x)) for x in points})

    def inverse(self) -> "Permutation":
        return Permutation({y: x for x, y in self._map.items()})

    def cycles(self) -> list[Cycle]:
        """Nontrivial cycles, each starting at its least point, sorted by that point."""
        seen: set[int] = set()
        out = []
        for start in sorted(self._map):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self._map[start]
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self._map[x]
            out.append(tuple(cyc))
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self.cycles())!r})"

    def __str__(self) -> str:
        return format_cycles(self.cycles())


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Left-to-right product: the result sends x to q(p(x))."""
    return p.then(q)


def format_cycles(cycles: Iterable[Sequence[int]]) -> str:
    text = "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)
    return text or "()"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def _parse_entry(text: str) -> Entry:
    text = text.strip()
    if re.sub(_CYCLE_RE, "", text).strip():
        raise ParseError(f"malformed cycle notation {text!r}")
    cycles = []
    seen: set[int] = set()
    for body in _CYCLE_RE.findall(text):
        tokens = [t for t in re.split(r"[\s,]+", body.strip()) if t]
        if not tokens:
            continue  # "()" spells the identity
        if not all(t.isdigit() and int(t) > 0 for t in tokens):
            raise ParseError(f"bad point in cycle ({body})")
        cyc = tuple(int(t) for t in tokens)
        if len(cyc) < 2:
            raise ParseError(f"cycle ({body}) has length < 2")
        if len(set(cyc)) != len(cyc) or seen & set(cyc):
            raise ParseError(f"repeated point in entry {text!r}")
        seen.update(cyc)
        cycles.append(cyc)
    return tuple(cycles)


def parse_tuple(text: str) -> CycleTuple:
    """Parse ``"(1 2)(3 4);(1 3)"``: entries split on ';', points on spaces or commas."""
    text = text.strip()
    if not text:
        return ()
    return tuple(_parse_entry(part) for part in text.split(";"))


def format_tuple(omega: CycleTuple) -> str:
    return ";".join(format_cycles(entry) for entry in omega)


def entry_permutation(entry: Entry) -> Permutation:
    return Permutation.from_cycles(entry)


def tuple_product(omega: CycleTuple) -> Permutation:
    return reduce(compose, (entry_permutation(e) for e in omega), Permutation())


def cycle_type(p: Permutation, ambient: int = 0) -> Partition:
    """Cycle lengths of ``p``; padded with ones to weight ``ambient`` unless it is 0."""
    lengths = sorted((len(c) for c in p.cycles()), reverse=True)
    if ambient == 0:
        return tuple(lengths)
    if p.support and ambient < max(p.support):
        raise DomainError(f"ambient {ambient} smaller than support maximum {max(p.support)}")
    return tuple(lengths) + (1,) * (ambient - sum(lengths))


def point_counts(omega: CycleTuple) -> Counter:
    return Counter(x for entry in omega for cyc in entry for x in cyc)


def tuple_symbol(omega: CycleTuple) -> Partition:
    """Occurrence counts of every written point, sorted decreasing."""
    return tuple(sorted(point_counts(omega).values(), reverse=True))


def points_written(omega: CycleTuple) -> int:
    return sum(len(cyc) for entry in omega for cyc in entry)


def _class_cycles(points: list[int], lengths: Counter) -> Iterator[list[Cycle]]:
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for length in sorted(lengths, reverse=True):
        remaining = lengths.copy()
        remaining[length] -= 1
        if not remaining[length]:
            del remaining[length]
        for tail in _orderings(rest, length - 1):
            cyc = (first,) + tail
            left = [x for x in rest if x not in tail]
            for others in _class_cycles(left, remaining):
                yield [cyc] + others


def enumerate_class(n: int, lam: Partition) -> Iterator[Permutation]:
    """Stream every permutation of {1..n} with cycle type ``lam``, each once."""
    if sum(lam) != n or any(p < 1 for p in lam):
        raise DomainError(f"{lam} is not a partition of {n}")
    for cycles in _class_cycles(list(range(1, n + 1)), Counter(lam)):
        yield Permutation.from_cycles(c for c in cycles if len(c) > 1)


def stripped_type(p: Permutation) -> Partition:
    return strip_ones(cycle_type(p))


def canonical_tuples(
    max_entries: int,
    lengths: Sequence[int] = (2, 3),
    max_points: int = 6,
    max_cycles_per_entry: int | None = None,
    max_count: int | None = None,
    single_heavy: bool = False,
) -> Iterator[CycleTuple]:
    """Cycle tuples over {1..max_points}, one or more per relabeling class.

    Points are introduced in order of first appearance and every cycle word
    starts at its least point, with cycles inside an entry ordered by that
    point.  Every tuple of the requested kind is a relabeling of at least one
    yielded tuple, so relabeling-invariant properties can be checked
    exhaustively on this stream.  ``max_count`` prunes tuples in which some
    point is written more than that many times, and ``single_heavy`` prunes
    tuples in which two different points are each written three or more
    times (both filters are monotone, so pruning loses nothing below).
    """
    lengths = sorted(set(lengths))
    cap_cycles = max_cycles_per_entry if max_cycles_per_entry is not None else max_points

    def words(used: int, length: int, avoid: frozenset[int], floor: int) -> Iterator[tuple[Cycle, int]]:
        # first letter is the word minimum and must exceed ``floor``
        def extend(word: tuple[int, ...], top: int) -> Iterator[tuple[Cycle, int]]:
            if len(word) == length:
                yield word, top
                return
            for x in range(word[0] + 1, min(top + 1, max_points) + 1):
                if x in word or x in avoid:
                    continue
                yield from extend(word + (x,), max(top, x))

        for first in range(floor + 1, min(used + 1, max_points) + 1):
            if first in avoid:
                continue
            yield from extend((first,), max(used, first))

    def grow(entries: list[list[Cycle]], used: int, counts: Counter) -> Iterator[CycleTuple]:
        yield tuple(tuple(e) for e in entries)
        options = []
        if entries and len(entries[-1]) < cap_cycles:
            last = entries[-1]
            avoid = frozenset(x for c in last for x in c)
            options.append((False, avoid, last[-1][0]))
        if len(entries) < max_entries:
            options.append((True, frozenset(), 0))
        for new_entry, avoid, floor in options:
            for length in lengths:
                for word, top in words(used, length, avoid, floor):
                    counts.update(word)
                    heavy_ok = not single_heavy or sum(1 for c in counts.values() if c >= 3) <= 1
                    if heavy_ok and (max_count is None or max(counts[x] for x in word) <= max_count):
                        if new_entry:
                            entries.append([word])
                        else:
                            entries[-1].append(word)
                        yield from grow(entries, top, counts)
                        if new_entry:
                            entries.pop()
                        else:
                            entries[-1].pop()
                    counts.subtract(word)

    yield from grow([], 0, Counter())
