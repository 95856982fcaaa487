"""Normalized character ratios, their exact moments, and Gaussian limits.

For a class nu without fixed points and n > |nu| the ratio is

    W(lambda) = [n]_|nu| * chi^lambda(nu) / f^lambda * sqrt(d(nu) / (c(nu) n^|nu|))

with chi evaluated at nu padded by fixed points.  Under the Plancherel
measure the same formula is traditionally called X.  Limits of mixed moments
are products over cycle lengths j of E[prod_i He_{l_j(nu_i)}(Z)^{k_i}] for a
standard normal Z, evaluated symbolically.
"""
from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Callable, Iterable, Sequence

from .characters import CharacterTable, table_for
from .class_algebra import Bounds, TupleCountQuery, b_count, brute_force_count, normalize_specs
from .errors import DomainError
from .measures import SpectralMeasure, measure
from .partitions import Partition, double_factorial, enumerate_partitions, falling_factorial, multiplicities, pad_ones, weights
from .radical import RadicalRational

Spec = tuple[Partition, int]


def _check_class(nu: Partition, n: int) -> None:
    if not nu or 1 in nu or sum(nu) >= n:
        raise DomainError(f"class {nu} must be nonempty, have no 1-parts and weight < n = {n}")


@lru_cache(maxsize=1024)
def _radical(nu: Partition, n: int) -> RadicalRational:
    c, d = weights(nu)
    return RadicalRational.sqrt(Fraction(d, c * n ** sum(nu)))


def char_ratio(lam: Partition, nu: Partition, n: int, table: CharacterTable | None = None) -> RadicalRational:
    lam, nu = tuple(lam), tuple(sorted(nu, reverse=True))
    _check_class(nu, n)
    if sum(lam) != n:
        raise DomainError(f"{lam} is not a partition of {n}")
    table = table or table_for(n)
    chi = table.chi(lam, pad_ones(nu, n))
    return _radical(nu, n) * Fraction(falling_factorial(n, sum(nu)) * chi, table.dims[lam])


def exact_mixed_moment(m: SpectralMeasure, specs, table: CharacterTable | None = None) -> RadicalRational:
    """E[prod_i W_{nu_i}^{k_i}] under ``m``, exactly."""
    specs = normalize_specs(specs)
    table = table or table_for(m.n)
    if table.n != m.n:
        raise DomainError(f"table is for S_{table.n}, measure for S_{m.n}")
    for nu, _ in specs:
        _check_class(nu, m.n)
    total = RadicalRational(Fraction(0))
    for lam, mass in m.atoms.items():
        if not mass:
            continue
        term = RadicalRational(mass)
        for nu, k in specs:
            term = term * char_ratio(lam, nu, m.n, table) ** k
        total = total + term
    return total


def moment_via_counts(
    n: int,
    specs,
    table: CharacterTable | None = None,
    counts: str = "enumerate",
    bounds: Bounds | None = None,
) -> RadicalRational:
    """The conjugacy-measure moment rewritten as a sum over product classes delta.

    sum_delta c(delta)/n! * B(delta) * sqrt(prod_i (d_i c_i / n^|nu_i|)^{k_i}),
    where B(delta) counts tuples whose product has type delta.  With
    ``counts="enumerate"`` B comes from exhaustive enumeration (refused above
    the brute-force bounds); ``counts="formula"`` uses :func:`b_count`.
    """
    specs = normalize_specs(specs)
    for nu, _ in specs:
        _check_class(nu, n)
    if counts not in ("enumerate", "formula"):
        raise DomainError(f"unknown counts mode {counts!r}")
    table = table or table_for(n)
    scale = RadicalRational.sqrt(
        prod(Fraction(prod(weights(nu)), n ** sum(nu)) ** k for nu, k in specs) if specs else Fraction(1)
    )
    acc = Fraction(0)
    for delta in enumerate_partitions(n):
        if counts == "enumerate":
            b = brute_force_count(TupleCountQuery(n, specs, delta), bounds)
        else:
            b = b_count(n, specs, delta, table)
        acc += Fraction(weights(delta)[0] * b, factorial(n))
    return scale * acc


@lru_cache(maxsize=None)
def hermite(j: int) -> tuple[int, ...]:
    """Coefficients (constant term first) of the probabilists' Hermite polynomial He_j."""
    if j < 0:
        raise DomainError(f"negative degree {j}")
    prev, cur = (1,), (0, 1)
    if j == 0:
        return prev
    for m in range(1, j):
        shifted = (0,) + cur
        lowered = tuple(m * c for c in prev) + (0,) * (len(shifted) - len(prev))
        prev, cur = cur, tuple(a - b for a, b in zip(shifted, lowered))
    return cur


def poly_mul(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def poly_pow(a: Sequence[int], k: int) -> tuple[int, ...]:
    out: tuple[int, ...] = (1,)
    for _ in range(k):
        out = poly_mul(out, a)
    return out


def gaussian_moment(m: int) -> int:
    """E[Z^m] for a standard normal Z."""
    if m < 0:
        raise DomainError(f"negative moment order {m}")
    return 0 if m & 1 else double_factorial(m - 1)


def gaussian_expectation(poly: Sequence[int]) -> int:
    return sum(c * gaussian_moment(p) for p, c in enumerate(poly))


def limit_mixed_moment(specs) -> Fraction:
    """Large-n limit of E[prod_i W_{nu_i}^{k_i}], as an exact rational."""
    specs = normalize_specs(specs)
    for nu, _ in specs:
        if 1 in nu:
            raise DomainError(f"class {nu} has fixed points")
    mults = [(multiplicities(nu), k) for nu, k in specs]
    lengths = sorted({j for m, _ in mults for j in m})
    result = Fraction(1)
    for j in lengths:
        poly: tuple[int, ...] = (1,)
        for m, k in mults:
            poly = poly_mul(poly, poly_pow(hermite(m.get(j, 0)), k))
        result *= gaussian_expectation(poly)
    return result


def format_specs(specs) -> str:
    return ";".join(f"{'+'.join(map(str, nu))}^{k}" for nu, k in normalize_specs(specs))


@dataclass(frozen=True)
class MomentReport:
    n: int
    kind: str
    specs: tuple[Spec, ...]
    exact: RadicalRational
    limit: Fraction

    @property
    def approx(self) -> Decimal:
        return self.exact.to_decimal(30)

    @property
    def abs_dev(self) -> Decimal:
        limit = Decimal(self.limit.numerator) / Decimal(self.limit.denominator)
        return abs(self.approx - limit)


def convergence_report(
    n_values: Iterable[int],
    kind: str,
    specs,
    table_provider: Callable[[int], CharacterTable] = table_for,
) -> list[MomentReport]:
    specs = normalize_specs(specs)
    n_values = list(n_values)
    if any(b <= a for a, b in zip(n_values, n_values[1:])):
        raise DomainError(f"n values must be increasing: {n_values}")
    limit = limit_mixed_moment(specs)
    out = []
    for n in n_values:
        table = table_provider(n)
        m = measure(kind, n, table)
        out.append(MomentReport(n, kind, specs, exact_mixed_moment(m, specs, table), limit))
    return out
