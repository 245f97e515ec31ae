"""Exact rational arithmetic helpers.

Rationals are :class:`fractions.Fraction` values, which are immutable and
kept in lowest terms with a positive denominator by every operation.  This
module adds the pieces ``Fraction`` lacks: exact square (and higher) root
detection and the ``p/q`` text format used at every I/O boundary.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

Rat = Fraction

__all__ = [
    "Rat",
    "NotASquareError",
    "rat",
    "int_isqrt",
    "int_iroot",
    "is_perfect_square",
    "sqrt_exact",
    "exact_root",
    "parse_rat",
    "format_rat",
    "sign",
]


class NotASquareError(ValueError):
    """Raised when an exact square root is requested of a non-square."""


def rat(num: int, den: int = 1) -> Rat:
    """Return ``num/den`` in canonical form.

    >>> rat(6, 4)
    Fraction(3, 2)
    >>> rat(3, -9)
    Fraction(-1, 3)
    """
    if den == 0:
        raise ZeroDivisionError("rational with zero denominator")
    return Fraction(num, den)


def int_isqrt(n: int) -> int:
    """Floor of the square root of a nonnegative integer, computed exactly."""
    if n < 0:
        raise ValueError(f"int_isqrt of negative integer {n}")
    return isqrt(n)


def int_iroot(n: int, k: int) -> int:
    """Floor of the k-th root of a nonnegative integer (Newton iteration)."""
    if n < 0:
        raise ValueError(f"int_iroot of negative integer {n}")
    if k < 1:
        raise ValueError("root index must be positive")
    if n < 2 or k == 1:
        return n
    if k == 2:
        return isqrt(n)
    # start above the root, then decrease monotonically
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def _int_root_exact(n: int, k: int) -> int | None:
    if n < 0:
        return None
    root = int_iroot(n, k)
    return root if root**k == n else None


def is_perfect_square(x: Rat | int) -> bool:
    """True iff ``x`` is the square of a rational number (0 included)."""
    x = Fraction(x)
    if x < 0:
        return False
    return (
        _int_root_exact(x.numerator, 2) is not None
        and _int_root_exact(x.denominator, 2) is not None
    )


def sqrt_exact(x: Rat | int) -> Rat:
    """The nonnegative rational square root of ``x``.

    Raises :class:`NotASquareError` when ``x`` is negative or not a square.
    """
    root = exact_root(x, 2)
    if root is None:
        raise NotASquareError(f"{format_rat(Fraction(x))} is not a rational square")
    return root


def exact_root(x: Rat | int, k: int) -> Rat | None:
    """The nonnegative rational k-th root of ``x``, or None if it is not rational.

    Odd roots of negative numbers are returned negative.
    """
    x = Fraction(x)
    if x < 0:
        if k % 2 == 0:
            return None
        root = exact_root(-x, k)
        return None if root is None else -root
    num = _int_root_exact(x.numerator, k)
    if num is None:
        return None
    den = _int_root_exact(x.denominator, k)
    if den is None:
        return None
    return Fraction(num, den)


def sign(x: Rat | int) -> int:
    return (x > 0) - (x < 0)


def parse_rat(text: str) -> Rat:
    """Parse the exact text form ``p/q`` (or a bare integer ``p``).

    Decimal notation is rejected: every value crossing an I/O boundary must be
    exact.
    """
    s = text.strip()
    num, slash, den = s.partition("/")
    try:
        n = int(num)
        d = int(den) if slash else 1
    except ValueError:
        raise ValueError(f"not an exact rational: {text!r}") from None
    if d == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(n, d)


def format_rat(x: Rat | int) -> str:
    """Serialize as ``p/q`` in lowest terms; the denominator is omitted when 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
