"""CSV schemas and writers.

Every file is UTF-8 with a header row and ``\\n`` line endings; rationals are
split into numerator/denominator columns and partitions use ``a+b+c``.
"""
from __future__ import annotations

import csv
import io
from typing import Iterable, Sequence, TextIO

from .characters import CharacterTable
from .errors import DomainError
from .measures import SpectralMeasure
from .moments import MomentReport, format_specs
from .partitions import format_partition

SCHEMAS: dict[str, tuple[str, ...]] = {
    "chartab": ("lambda", "mu", "chi"),
    "measure": ("lambda", "mass_num", "mass_den", "mass_float"),
    "moments": (
        "n", "kind", "specs", "exact_coeff_num", "exact_coeff_den", "radicand",
        "float", "limit_num", "limit_den", "abs_dev",
    ),
    "sample_partitions": ("lambda", "count"),
    "sample_values": ("value", "value_float", "count"),
}


def write_rows(rows: Iterable[Sequence], schema: str, stream: TextIO) -> int:
    if schema not in SCHEMAS:
        raise DomainError(f"unknown schema {schema!r}")
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(SCHEMAS[schema])
    count = 0
    for row in rows:
        writer.writerow(row)
        count += 1
    return count


def emit_csv(rows: Iterable[Sequence], schema: str, path: str | None) -> str:
    """Write ``rows`` under ``schema`` to ``path`` (or return the text when path is None)."""
    if path is None:
        buf = io.StringIO()
        write_rows(rows, schema, buf)
        return buf.getvalue()
    with open(path, "w", encoding="utf-8", newline="") as fh:
        write_rows(rows, schema, fh)
    return path


def chartab_rows(table: CharacterTable) -> list[tuple]:
    rows = table.rows
    return [(format_partition(lam), format_partition(mu), rows[lam][mu]) for lam in table.partitions for mu in table.partitions]


def measure_rows(m: SpectralMeasure) -> list[tuple]:
    return [
        (format_partition(lam), w.numerator, w.denominator, repr(float(w)))
        for lam, w in m.atoms.items()
    ]


def report_rows(reports: Iterable[MomentReport]) -> list[tuple]:
    return [
        (
            r.n, r.kind, format_specs(r.specs), r.exact.coeff.numerator, r.exact.coeff.denominator,
            r.exact.radicand, str(r.approx), r.limit.numerator, r.limit.denominator, str(r.abs_dev),
        )
        for r in reports
    ]
