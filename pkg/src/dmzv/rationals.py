"""Exact rational scalars and elementary combinatorial functions.

Every coefficient and every value in this package is a
``fractions.Fraction``: arbitrary precision, reduced on construction,
denominator always positive.  There is no floating-point mode anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence, Union

Rational = Fraction
RationalLike = Union[Fraction, int]

__all__ = [
    "Rational",
    "binomial",
    "pochhammer",
    "multinomial",
    "format_rational",
    "parse_rational",
]


def binomial(n: int, k: int) -> int:
    """C(n, k), with the convention C(n, k) = 0 for k < 0 or k > n.

    Requires n >= 0.
    """
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def pochhammer(s: RationalLike, k: int) -> Fraction:
    """Rising factorial s(s+1)...(s+k-1); the empty product 1 for k = 0."""
    if k < 0:
        raise ValueError(f"pochhammer requires k >= 0, got k={k}")
    out = Fraction(1)
    for i in range(k):
        out *= s + i
    return out


def multinomial(parts: Sequence[int] | Iterable[int]) -> int:
    """(sum parts)! / prod(part!) for non-negative integer parts."""
    total = 0
    out = 1
    for p in parts:
        if p < 0:
            raise ValueError(f"multinomial parts must be >= 0, got {p}")
        total += p
        out *= comb(total, p)
    return out


def format_rational(value: RationalLike) -> str:
    """Render as "p/q", omitting the denominator when it is 1."""
    return str(Fraction(value))


def parse_rational(text: str) -> Fraction:
    """Inverse of :func:`format_rational`; accepts "p/q" and "p"."""
    return Fraction(text.strip())
