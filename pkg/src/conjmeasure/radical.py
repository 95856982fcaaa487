"""Exact numbers of the form a * sqrt(s), a rational and s squarefree."""
from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache

from .errors import ConsistencyError, DomainError


@lru_cache(maxsize=4096)
def square_split(m: int) -> tuple[int, int]:
    """Write m = t^2 * s with s squarefree; returns (t, s)."""
    if m <= 0:
        raise DomainError(f"square_split needs a positive integer, got {m}")
    t, s = 1, 1
    p = 2
    while p * p <= m:
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        t *= p ** (e // 2)
        if e & 1:
            s *= p
        p += 1 if p == 2 else 2
    return t, s * m


def is_squarefree(m: int) -> bool:
    return m >= 1 and square_split(m)[0] == 1


@dataclass(frozen=True)
class RadicalRational:
    coeff: Fraction
    radicand: int = 1

    def __post_init__(self):
        coeff = Fraction(self.coeff)
        radicand = int(self.radicand)
        if coeff == 0:
            radicand = 1
        elif not is_squarefree(radicand):
            t, radicand = square_split(radicand)
            coeff *= t
        object.__setattr__(self, "coeff", coeff)
        object.__setattr__(self, "radicand", radicand)

    @classmethod
    def sqrt(cls, value: Fraction | int) -> "RadicalRational":
        """Exact square root of a nonnegative rational."""
        value = Fraction(value)
        if value < 0:
            raise DomainError(f"square root of negative {value}")
        if value == 0:
            return cls(Fraction(0))
        t, s = square_split(value.numerator * value.denominator)
        return cls(Fraction(t, value.denominator), s)

    def is_rational(self) -> bool:
        return self.radicand == 1

    def __mul__(self, other: "RadicalRational | Fraction | int") -> "RadicalRational":
        if not isinstance(other, RadicalRational):
            return RadicalRational(self.coeff * Fraction(other), self.radicand)
        t, s = square_split(self.radicand * other.radicand)
        return RadicalRational(self.coeff * other.coeff * t, s)

    __rmul__ = __mul__

    def __add__(self, other: "RadicalRational | Fraction | int") -> "RadicalRational":
        if not isinstance(other, RadicalRational):
            other = RadicalRational(Fraction(other))
        if other.coeff == 0:
            return self
        if self.coeff == 0:
            return other
        if self.radicand != other.radicand:
            raise ConsistencyError(f"cannot add sqrt({self.radicand}) and sqrt({other.radicand}) terms exactly")
        return RadicalRational(self.coeff + other.coeff, self.radicand)

    __radd__ = __add__

    def __neg__(self) -> "RadicalRational":
        return RadicalRational(-self.coeff, self.radicand)

    def __sub__(self, other) -> "RadicalRational":
        return self + (-other if isinstance(other, RadicalRational) else -Fraction(other))

    def __pow__(self, k: int) -> "RadicalRational":
        if k < 0:
            raise DomainError("negative powers are not supported")
        return RadicalRational(self.coeff**k * self.radicand ** (k // 2), self.radicand if k & 1 else 1)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RadicalRational):
            return self.coeff == other.coeff and self.radicand == other.radicand
        if isinstance(other, (int, Fraction)):
            return self.radicand == 1 and self.coeff == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.coeff, self.radicand))

    def to_decimal(self, digits: int = 40) -> Decimal:
        with localcontext() as ctx:
            ctx.prec = digits + 5
            value = Decimal(self.coeff.numerator) / Decimal(self.coeff.denominator)
            if self.radicand != 1:
                value *= Decimal(self.radicand).sqrt()
            ctx.prec = digits
            return +value

    def __float__(self) -> float:
        return float(self.to_decimal(30))

    def __str__(self) -> str:
        if self.radicand == 1:
            return str(self.coeff)
        if self.coeff == 1:
            return f"sqrt({self.radicand})"
        if self.coeff == -1:
            return f"-sqrt({self.radicand})"
        return f"{self.coeff}*sqrt({self.radicand})"
