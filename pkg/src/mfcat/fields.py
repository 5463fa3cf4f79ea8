"""Exact scalar arithmetic for the two supported coefficient fields.

Scalars are plain Python values: ``fractions.Fraction`` for the rationals
(lowest terms and positive denominator are guaranteed by Fraction itself)
and ``int`` in the canonical range [0, p) for a prime field.  A field
object supplies the operations and the canonical parsing/formatting, so a
scalar is always interpreted relative to the field carried by the
surrounding ring context.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Scalar = Union[Fraction, int]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class RationalField:
    """The field of rational numbers with exact Fraction arithmetic."""

    name: str = "Q"

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def coerce(self, value) -> Fraction:
        if isinstance(value, bool):
            raise ValueError("context-mismatch: bool is not a rational scalar")
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        raise ValueError(f"context-mismatch: cannot coerce {value!r} into Q")

    def add(self, a: Fraction, b: Fraction) -> Fraction:
        return a + b

    def sub(self, a: Fraction, b: Fraction) -> Fraction:
        return a - b

    def mul(self, a: Fraction, b: Fraction) -> Fraction:
        return a * b

    def neg(self, a: Fraction) -> Fraction:
        return -a

    def inv(self, a: Fraction) -> Fraction:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in Q")
        return 1 / Fraction(a)

    def div(self, a: Fraction, b: Fraction) -> Fraction:
        if b == 0:
            raise ZeroDivisionError("division by zero in Q")
        return Fraction(a) / Fraction(b)

    def is_zero(self, a: Fraction) -> bool:
        return a == 0

    def from_fraction(self, num: int, den: int) -> Fraction:
        if den == 0:
            raise ValueError("non-invertible-denominator: zero denominator")
        return Fraction(num, den)

    def is_negative(self, a: Fraction) -> bool:
        # Used only for pretty-printing the sign of a term.
        return a < 0

    def abs(self, a: Fraction) -> Fraction:
        return -a if a < 0 else a

    def format(self, a: Fraction) -> str:
        return str(a)


@dataclass(frozen=True)
class PrimeField:
    """The prime field with p elements, values stored canonically in [0, p)."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not _is_prime(self.p):
            raise ValueError(f"context-mismatch: {self.p!r} is not a prime modulus")

    @property
    def name(self) -> str:
        return f"F{self.p}"

    def zero(self) -> int:
        return 0

    def one(self) -> int:
        return 1

    def from_int(self, n: int) -> int:
        return n % self.p

    def coerce(self, value) -> int:
        if isinstance(value, bool):
            raise ValueError("context-mismatch: bool is not a prime-field scalar")
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Fraction):
            return self.from_fraction(value.numerator, value.denominator)
        raise ValueError(f"context-mismatch: cannot coerce {value!r} into F_{self.p}")

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError(f"inverse of zero in F_{self.p}")
        return pow(a, self.p - 2, self.p)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def is_zero(self, a: int) -> bool:
        return a % self.p == 0

    def from_fraction(self, num: int, den: int) -> int:
        if den == 0:
            raise ValueError("non-invertible-denominator: zero denominator")
        if den % self.p == 0:
            raise ValueError(
                f"non-invertible-denominator: {den} is not invertible mod {self.p}"
            )
        return self.mul(num % self.p, self.inv(den % self.p))

    def is_negative(self, a: int) -> bool:
        # Canonical representatives are never printed with a minus sign.
        return False

    def abs(self, a: int) -> int:
        return a % self.p

    def format(self, a: int) -> str:
        return str(a % self.p)


QQ = RationalField()

Field = Union[RationalField, PrimeField]


def field_from_token(token: str) -> Field:
    """Build a field from a CLI token: "Q" or "Fp:<prime>"."""
    if token == "Q":
        return QQ
    if token.startswith("Fp:"):
        try:
            p = int(token[3:])
        except ValueError:
            raise ValueError(f"context-mismatch: bad field token {token!r}") from None
        return PrimeField(p)
    raise ValueError(f"context-mismatch: bad field token {token!r} (want Q or Fp:<p>)")
