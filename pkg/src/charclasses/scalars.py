"""Exact scalar arithmetic for the coefficient fields.

Characteristic 0 coefficients are ``fractions.Fraction`` values straight from
the standard library; Fraction already maintains the normal form we need
(gcd(num, den) = 1, positive denominator, 0/1 for zero).  Characteristic p
coefficients are :class:`PrimeScalar` values.  The two kinds never mix: any
binary operation across characteristics raises ``TypeError``, and operations
between prime-field scalars with different moduli raise ``ValueError``.

Canonical text forms:

* rational input: ``"a/b"`` or ``"a"`` (optional sign, no decimals);
  machine output is always ``"a/b"``, so integers render as ``"a/1"``
* prime field: ``"k mod p"``
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "Fraction",
    "PrimeScalar",
    "format_rational",
    "is_prime",
    "parse_rational",
    "scalar_from_int",
    "scalar_one",
    "scalar_zero",
]

_PRIMALITY_BOUND = 10**6

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (intended for n <= 10^6)."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True, slots=True)
class PrimeScalar:
    """An element of the field with ``modulus`` elements.

    ``value`` is stored reduced to the range 0..modulus-1.  The modulus is
    validated to be prime when it is at most 10^6; above that, primality is a
    documented precondition of the caller.
    """

    value: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 2:
            raise ValueError(f"modulus must be at least 2, got {self.modulus}")
        if self.modulus <= _PRIMALITY_BOUND and not is_prime(self.modulus):
            raise ValueError(f"modulus {self.modulus} is not prime")
        object.__setattr__(self, "value", self.value % self.modulus)

    def _coerce(self, other: object) -> "PrimeScalar":
        if isinstance(other, PrimeScalar):
            if other.modulus != self.modulus:
                raise ValueError(
                    f"cannot mix scalars mod {self.modulus} and mod {other.modulus}"
                )
            return other
        if isinstance(other, int):
            return PrimeScalar(other, self.modulus)
        if isinstance(other, Fraction):
            raise TypeError(
                "cannot mix characteristic 0 and prime-field scalars"
            )
        raise TypeError(f"cannot coerce {other!r} into a prime-field scalar")

    def __add__(self, other: object) -> "PrimeScalar":
        other = self._coerce(other)
        return PrimeScalar(self.value + other.value, self.modulus)

    __radd__ = __add__

    def __sub__(self, other: object) -> "PrimeScalar":
        other = self._coerce(other)
        return PrimeScalar(self.value - other.value, self.modulus)

    def __rsub__(self, other: object) -> "PrimeScalar":
        return self._coerce(other).__sub__(self)

    def __mul__(self, other: object) -> "PrimeScalar":
        other = self._coerce(other)
        return PrimeScalar(self.value * other.value, self.modulus)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "PrimeScalar":
        other = self._coerce(other)
        if other.value == 0:
            raise ZeroDivisionError(f"division by zero in field mod {self.modulus}")
        inverse = pow(other.value, -1, self.modulus)
        return PrimeScalar(self.value * inverse, self.modulus)

    def __rtruediv__(self, other: object) -> "PrimeScalar":
        return self._coerce(other).__truediv__(self)

    def __neg__(self) -> "PrimeScalar":
        return PrimeScalar(-self.value, self.modulus)

    def __bool__(self) -> bool:
        return self.value != 0

    def __str__(self) -> str:
        return f"{self.value} mod {self.modulus}"


def parse_rational(text: str) -> Fraction:
    """Parse ``"a/b"`` or ``"a"`` into a Fraction.

    Decimal and exponent notation are rejected: every scalar in this package
    is an exact integer ratio.  A zero denominator raises ZeroDivisionError.
    """
    stripped = text.strip()
    if not _RATIONAL_RE.match(stripped):
        raise ValueError(f"not a rational literal: {text!r}")
    return Fraction(stripped)


def format_rational(q: Fraction) -> str:
    """Render a Fraction in the machine form ``"a/b"`` (so 3 becomes "3/1")."""
    return f"{q.numerator}/{q.denominator}"


def scalar_zero(characteristic: int) -> Fraction | PrimeScalar:
    """The additive identity of the coefficient field."""
    if characteristic == 0:
        return Fraction(0)
    return PrimeScalar(0, characteristic)


def scalar_one(characteristic: int) -> Fraction | PrimeScalar:
    """The multiplicative identity of the coefficient field."""
    if characteristic == 0:
        return Fraction(1)
    return PrimeScalar(1, characteristic)


def scalar_from_int(n: int, characteristic: int) -> Fraction | PrimeScalar:
    """Image of the integer n in the coefficient field."""
    if characteristic == 0:
        return Fraction(n)
    return PrimeScalar(n, characteristic)
