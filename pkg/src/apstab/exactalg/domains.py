"""Coefficient domains: the integers, the rationals and prime fields."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

INTEGERS = "Z"
RATIONALS = "Q"
PRIME_FIELD = "Fp"


class UnsupportedDomainError(ValueError):
    """An operation was asked to work over a domain it does not support."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class CoefficientDomain:
    kind: str
    p: int = 0

    def __post_init__(self):
        if self.kind not in (INTEGERS, RATIONALS, PRIME_FIELD):
            raise ValueError(f"unknown domain kind {self.kind!r}")
        if self.kind == PRIME_FIELD and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.kind != PRIME_FIELD and self.p != 0:
            raise ValueError("only prime fields carry a characteristic")

    @property
    def is_field(self) -> bool:
        return self.kind != INTEGERS

    @property
    def characteristic(self) -> int:
        return self.p

    def normalize(self, x):
        """Bring ``x`` into canonical form for this domain."""
        if self.kind == PRIME_FIELD:
            if isinstance(x, Fraction):
                return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
            return int(x) % self.p
        if self.kind == INTEGERS:
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise ValueError(f"{x} is not an integer")
                return x.numerator
            if not isinstance(x, int):
                raise TypeError(f"exact integer expected, got {type(x).__name__}")
            return x
        if isinstance(x, float):
            raise TypeError("floating point entries are not allowed")
        x = Fraction(x)
        return x.numerator if x.denominator == 1 else x

    def inverse(self, x):
        if self.kind == PRIME_FIELD:
            return pow(int(x), -1, self.p)
        if self.kind == RATIONALS:
            return 1 / Fraction(x)
        if x in (1, -1):
            return x
        raise ZeroDivisionError(f"{x} is not a unit in Z")

    def __str__(self):
        return f"F{self.p}" if self.kind == PRIME_FIELD else self.kind


ZZ = CoefficientDomain(INTEGERS)
QQ = CoefficientDomain(RATIONALS)


def GF(p: int) -> CoefficientDomain:
    return CoefficientDomain(PRIME_FIELD, p)


def parse_domain(text: str) -> CoefficientDomain:
    """Parse ``Z``, ``Q`` or ``F<p>`` (also ``GF<p>``)."""
    t = text.strip()
    if t in ("Z", "ZZ"):
        return ZZ
    if t in ("Q", "QQ"):
        return QQ
    for prefix in ("GF", "F"):
        if t.startswith(prefix) and t[len(prefix):].isdigit():
            return GF(int(t[len(prefix):]))
    raise ValueError(f"cannot parse coefficient domain {text!r}")
