"""Verification sweeps behind ``conjmeasure verify``.

Each sweep returns a list of :class:`Check` records; :func:`summary` renders
the machine-readable ``PASS k/k`` / ``FAIL i/k`` line.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .characters import build_table, table_for
from .class_algebra import Bounds, TupleCountQuery, brute_force_count, frobenius_count
from .measures import conjugacy, plancherel, total_mass
from .moments import exact_mixed_moment, format_specs, moment_via_counts
from .partitions import enumerate_partitions, format_partition
from .perms import Permutation, canonical_tuples, format_tuple, tuple_product, tuple_symbol
from .reduction import check_pairing, has_reducible_shape, identity_by_reduction


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        text = f"{'ok  ' if self.ok else 'FAIL'} {self.name}"
        return f"{text}: {self.detail}" if self.detail else text


def summary(checks: Sequence[Check]) -> str:
    failed = sum(not c.ok for c in checks)
    return f"FAIL {failed}/{len(checks)}" if failed else f"PASS {len(checks)}/{len(checks)}"


def _representative(lam) -> Permutation:
    cycles, start = [], 1
    for part in lam:
        if part > 1:
            cycles.append(tuple(range(start, start + part)))
        start += part
    return Permutation.from_cycles(cycles)


def frobenius_checks(n: int, max_m: int, bounds: Bounds | None = None) -> list[Check]:
    """Character-sum tuple counts against enumeration, every ordered class combination."""
    table = build_table(n)
    classes = enumerate_partitions(n)
    out = []
    for m in range(max_m + 1):
        for combo in product(classes, repeat=m):
            for delta in classes:
                q = TupleCountQuery(n, [(c, 1) for c in combo], _representative(delta))
                a, b = frobenius_count(q, table), brute_force_count(q, bounds)
                label = "[" + ",".join(format_partition(c) for c in combo) + "] -> " + format_partition(delta)
                out.append(Check(label, a == b, f"{a} vs {b}"))
    return out


def reduction_checks(
    max_entries: int = 4,
    lengths: Iterable[int] = (2, 3),
    ground: int = 6,
    max_cycles: int = 1,
    rule: str = "last/second",
) -> list[Check]:
    out = []
    for omega in canonical_tuples(max_entries, tuple(lengths), ground, max_cycles, single_heavy=True):
        if not omega or not has_reducible_shape(omega):
            continue
        a = identity_by_reduction(omega, rule)
        b = tuple_product(omega).is_identity()
        out.append(Check(format_tuple(omega), a == b, f"reduced-empty={a} identity={b}"))
    return out


def pairing_checks(max_q: int = 4) -> list[Check]:
    out = []
    seen = set()
    for q in range(2, max_q + 1):
        for omega in canonical_tuples(q, range(2, q + 1), q, None, max_count=2):
            if tuple_symbol(omega) != (2,) * q or omega in seen:
                continue
            seen.add(omega)
            a = check_pairing(omega)
            b = tuple_product(omega).is_identity()
            out.append(Check(format_tuple(omega), a == b, f"paired={a} identity={b}"))
    return out


DEFAULT_EQ5_SPECS = (
    (((2,), 1),),
    (((2,), 2),),
    (((3,), 1),),
    (((2,), 1), ((3,), 1)),
)


def eq5_checks(ns: Iterable[int] = (4, 5), spec_list=DEFAULT_EQ5_SPECS) -> list[Check]:
    out = []
    for n in ns:
        table = build_table(n)
        m = conjugacy(n, table)
        for specs in spec_list:
            direct = exact_mixed_moment(m, specs, table)
            counted = moment_via_counts(n, specs, table)
            out.append(Check(f"n={n} {format_specs(specs)}", direct == counted, f"{direct} vs {counted}"))
    return out


def normalization_checks(n_max: int) -> list[Check]:
    out = []
    for n in range(1, n_max + 1):
        table = table_for(n)
        for m in (plancherel(n, table), conjugacy(n, table)):
            mass = total_mass(m)
            out.append(Check(f"n={n} {m.kind} total mass", mass == Fraction(1), str(mass)))
        neg = [lam for lam, s in table.colsums.items() if s < 0]
        out.append(Check(f"n={n} column sums nonnegative", not neg, ",".join(map(format_partition, neg))))
    return out
