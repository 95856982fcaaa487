"""Pairwise deletion of matching neighbours around a pivot point.

A tuple of cycle words whose symbol is ``(q, 2, ..., 2, 1, ..., 1)`` is
shrunk by repeatedly picking the pivot ``a`` (the point of largest
multiplicity), lining up the cycles through ``a`` in tuple order with ``a``
rotated to the front, and deleting a point ``x`` that sits last in one cycle and second in the next
one (cyclically).  The product multiplies to the identity exactly when some
sequence of such deletions empties the tuple; :func:`reduce` in ``"search"``
mode decides that by backtracking.

Which adjacency counts is the ``rule``.  ``"last/second"`` (the default)
preserves the left-to-right product at every step.  ``"second/last"`` is its
mirror image and preserves the right-to-left product.  ``"either"`` accepts
both; it no longer preserves the product, and on 127 of the 23868
single-cycle tuples over {1..6} with at most four entries it empties a tuple
whose product is not the identity, e.g. ``(1 2);(1 3);(1 2 3)``.

A deletion between neighbours in tuple order leaves the product unchanged.
The wrap-around deletion (last cycle through ``a`` paired with the first)
amounts to rotating the tuple before deleting, so it replaces the product by
a conjugate: the cycle type, and in particular being the identity, survives.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DomainError
from .perms import CycleTuple, format_tuple, point_counts, tuple_symbol

Position = tuple[int, int]  # (entry index, cycle index), both 1-based
RULES = ("last/second", "second/last", "either")


@dataclass(frozen=True)
class ReductionStep:
    pivot: int
    first: Position
    second: Position
    deleted: int
    variant: str  # "last/second" or "second/last"

    def describe(self, k: int) -> str:
        (i, j), (i2, j2) = self.first, self.second
        return f"step {k}: pivot={self.pivot}, delete {self.deleted} from ({i},{j})~({i2},{j2})"


@dataclass(frozen=True)
class ReductionTrace:
    initial: CycleTuple
    steps: tuple[ReductionStep, ...]
    final: CycleTuple
    reached_empty: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "reached_empty", self.final == ())

    def lines(self) -> list[str]:
        out = [step.describe(k) for k, step in enumerate(self.steps, start=1)]
        out.append(f"final: {format_tuple(self.final) or '()'}")
        return out


def has_reducible_shape(omega: CycleTuple) -> bool:
    """True when the symbol is (q, 2, ..., 2, 1, ..., 1) with q >= 2."""
    sym = tuple_symbol(omega)
    return bool(sym) and sym[0] >= 2 and all(c <= 2 for c in sym[1:])


def _check_shape(omega: CycleTuple) -> None:
    if not has_reducible_shape(omega):
        raise DomainError(f"symbol {tuple_symbol(omega)} is not of shape (q,2,...,2,1,...,1) with q >= 2")


def _rotate_to(cyc: tuple[int, ...], a: int) -> tuple[int, ...]:
    k = cyc.index(a)
    return cyc[k:] + cyc[:k]


def apply_step(omega: CycleTuple, step: ReductionStep) -> CycleTuple:
    """Delete ``step.deleted`` from the two named cycles, then drop singletons and empty entries."""
    targets = {step.first, step.second}
    entries = []
    for i, entry in enumerate(omega, start=1):
        cycles = []
        for j, cyc in enumerate(entry, start=1):
            if (i, j) in targets:
                if step.deleted not in cyc:
                    raise DomainError(f"{step.deleted} not in cycle at ({i},{j})")
                cyc = tuple(x for x in cyc if x != step.deleted)
            if len(cyc) >= 2:
                cycles.append(cyc)
        if cycles:
            entries.append(tuple(cycles))
    return tuple(entries)


def _pivots(omega: CycleTuple) -> list[int]:
    counts = point_counts(omega)
    top = max(counts.values())
    return sorted(x for x, c in counts.items() if c == top)


def _moves(omega: CycleTuple, pivot: int, rule: str) -> list[ReductionStep]:
    through = [
        (i, j, _rotate_to(cyc, pivot))
        for i, entry in enumerate(omega, start=1)
        for j, cyc in enumerate(entry, start=1)
        if pivot in cyc
    ]
    q = len(through)
    moves = []
    for t in range(q):
        i, j, cur = through[t]
        i2, j2, nxt = through[(t + 1) % q]
        if (i, j) == (i2, j2):
            continue
        if rule != "second/last" and cur[-1] == nxt[1]:
            moves.append(ReductionStep(pivot, (i, j), (i2, j2), cur[-1], "last/second"))
        if rule != "last/second" and cur[1] == nxt[-1]:
            moves.append(ReductionStep(pivot, (i, j), (i2, j2), cur[1], "second/last"))
    return moves


def reduction_step(
    omega: CycleTuple, policy: str = "deterministic", rule: str = "last/second"
) -> list[tuple[CycleTuple, ReductionStep]]:
    """Successors of ``omega`` under one deletion.

    ``policy="deterministic"`` returns at most one successor: the smallest
    pivot and the first admissible pair scanning t = 1..q, last/second before
    second/last.  ``policy="enumerate"`` returns every admissible successor.
    """
    if policy not in ("deterministic", "enumerate"):
        raise DomainError(f"unknown policy {policy!r}")
    if rule not in RULES:
        raise DomainError(f"unknown rule {rule!r}")
    _check_shape(omega)
    out = []
    for pivot in _pivots(omega):
        for step in _moves(omega, pivot, rule):
            out.append((apply_step(omega, step), step))
            if policy == "deterministic":
                return out
    return out


def _terminal(omega: CycleTuple) -> bool:
    return not omega or max(point_counts(omega).values()) <= 1


def _deterministic(omega: CycleTuple, rule: str) -> ReductionTrace:
    steps = []
    cur = omega
    while not _terminal(cur):
        succ = reduction_step(cur, "deterministic", rule)
        if not succ:
            break
        cur, step = succ[0]
        steps.append(step)
    return ReductionTrace(omega, tuple(steps), cur)


def reduce(omega: CycleTuple, mode: str = "search", rule: str = "last/second") -> ReductionTrace:
    """Run the deletion procedure to a fixed point.

    ``"deterministic"`` follows one fixed choice policy.  ``"search"``
    backtracks over every pivot and deletion and returns a trace ending in
    the empty tuple when one exists, otherwise the deterministic trace.
    """
    if omega:
        _check_shape(omega)
    if mode == "deterministic":
        return _deterministic(omega, rule)
    if mode != "search":
        raise DomainError(f"unknown mode {mode!r}")

    dead: set[CycleTuple] = set()

    def dfs(cur: CycleTuple) -> list[ReductionStep] | None:
        if not cur:
            return []
        if _terminal(cur) or cur in dead:
            return None
        for nxt, step in reduction_step(cur, "enumerate", rule):
            rest = dfs(nxt)
            if rest is not None:
                return [step] + rest
        dead.add(cur)
        return None

    path = dfs(omega)
    if path is None:
        return _deterministic(omega, rule)
    final = omega
    for step in path:
        final = apply_step(final, step)
    return ReductionTrace(omega, tuple(path), final)


def identity_by_reduction(omega: CycleTuple, rule: str = "last/second") -> bool:
    _check_shape(omega)
    return reduce(omega, "search", rule).reached_empty


def check_pairing(omega: CycleTuple) -> bool:
    """True iff the cycles split into mutually inverse pairs from distinct entries.

    Requires every written point to occur exactly twice.
    """
    if any(c != 2 for c in tuple_symbol(omega)):
        raise DomainError(f"symbol {tuple_symbol(omega)} is not all 2s")
    located = [(i, cyc) for i, entry in enumerate(omega) for cyc in entry]
    for k, (i, cyc) in enumerate(located):
        (i2, other), = [(i2, c2) for k2, (i2, c2) in enumerate(located) if k2 != k and cyc[0] in c2]
        if i2 == i or _rotate_to(other[::-1], cyc[0]) != cyc:
            return False
    return True
