"""
Exact arithmetic in the torsion group of roots of unity.

A root of unity e^{2πi k/N} is stored as the reduced fraction k/N modulo 1,
so equality, products and powers are integer operations and every zero test
the reflection theory needs is decided by order divisibility.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from math import gcd

from ..errors import InvalidArgument, ParseError


@total_ordering
@dataclass(frozen=True)
class UnityRoot:
    """
    The root of unity e^{2πi·num/den}.

    Always canonical: 0 <= num < den and gcd(num, den) = 1, so den is the
    multiplicative order. Use ``make`` rather than the constructor.
    """

    num: int
    den: int

    def __post_init__(self):
        if self.den < 1 or not 0 <= self.num < self.den:
            raise InvalidArgument(f"non-canonical root {self.num}/{self.den}")
        if gcd(self.num, self.den) != 1:
            raise InvalidArgument(f"non-reduced root {self.num}/{self.den}")

    @classmethod
    def from_fraction(cls, exponent: Fraction) -> "UnityRoot":
        return _reduced(exponent.numerator, exponent.denominator)

    @property
    def exponent(self) -> Fraction:
        return Fraction(self.num, self.den)

    @property
    def order(self) -> int:
        return self.den

    def is_one(self) -> bool:
        return self.den == 1

    def __mul__(self, other: "UnityRoot") -> "UnityRoot":
        if not isinstance(other, UnityRoot):
            return NotImplemented
        return _reduced(self.num * other.den + other.num * self.den, self.den * other.den)

    def __truediv__(self, other: "UnityRoot") -> "UnityRoot":
        if not isinstance(other, UnityRoot):
            return NotImplemented
        return _reduced(self.num * other.den - other.num * self.den, self.den * other.den)

    def __pow__(self, n: int) -> "UnityRoot":
        return _reduced(self.num * n, self.den)

    def __neg__(self) -> "UnityRoot":
        return self * MINUS_ONE

    def inverse(self) -> "UnityRoot":
        return _reduced(-self.num, self.den)

    def __lt__(self, other: "UnityRoot") -> bool:
        return (self.den, self.num) < (other.den, other.num)

    def to_complex(self) -> complex:
        import cmath
        return cmath.exp(2j * cmath.pi * self.num / self.den)

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"

    def __repr__(self) -> str:
        return f"UnityRoot({self.num}/{self.den})"


def _reduced(num: int, den: int) -> UnityRoot:
    """Reduce num/den mod 1 (den >= 1) without re-validating."""
    num %= den
    g = gcd(num, den)
    root = object.__new__(UnityRoot)
    object.__setattr__(root, "num", num // g)
    object.__setattr__(root, "den", den // g)
    return root


ONE = UnityRoot(0, 1)
MINUS_ONE = UnityRoot(1, 2)


def make(k: int, n: int) -> UnityRoot:
    """
    Canonical representative of e^{2πik/N}.

    Args:
        k: Exponent numerator (any integer)
        n: Denominator, N >= 1

    Returns:
        Reduced UnityRoot
    """
    if n < 1:
        raise InvalidArgument(f"denominator must be >= 1, got {n}")
    return _reduced(k, n)


def order(a: UnityRoot) -> int:
    return a.den


def is_primitive(a: UnityRoot, n: int) -> bool:
    return a.den == n


def qnum_is_zero(n: int, q: UnityRoot) -> bool:
    """(n)_q = 1 + q + ... + q^{n-1} vanishes iff ord(q) > 1 divides n."""
    if n < 1:
        raise InvalidArgument(f"quantum number index must be >= 1, got {n}")
    return q.den > 1 and n % q.den == 0


# ============================================================================
# LITERAL GRAMMAR
# ============================================================================

_LITERAL = re.compile(
    r"""^(?P<neg>-)?
        (?:
            (?P<k>-?\d+)/(?P<n>\d+)
          | z(?P<zn>\d+)(?:\^(?P<zk>-?\d+))?
          | (?P<one>1)
        )$""",
    re.VERBOSE,
)


def parse_scalar(text: str, position: int = 0) -> UnityRoot:
    """
    Parse a scalar literal.

    Grammar: ``k/N``, ``1``, ``-1``, ``zN``, ``zN^k``; a leading ``-``
    multiplies by -1 (adds 1/2 to the exponent).

    Args:
        text: Literal text
        position: Offset of the literal in a larger input, for error reports
    """
    token = text.strip()
    match = _LITERAL.match(token)
    if match is None:
        raise ParseError("malformed scalar literal", token, position)

    if match.group("k") is not None:
        denominator = int(match.group("n"))
        if denominator == 0:
            raise ParseError("zero denominator", token, position)
        value = make(int(match.group("k")), denominator)
    elif match.group("zn") is not None:
        denominator = int(match.group("zn"))
        if denominator == 0:
            raise ParseError("zero denominator", token, position)
        value = make(int(match.group("zk") or 1), denominator)
    else:
        value = ONE

    return -value if match.group("neg") else value


def format_scalar(a: UnityRoot) -> str:
    """Canonical print: reduced ``k/N`` (the value 1 prints as ``0/1``)."""
    return str(a)
