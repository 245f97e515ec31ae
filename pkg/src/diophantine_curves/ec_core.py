"""Exact group law on elliptic curves y^2 = x^3 + a2 x^2 + a4 x + a6 over Q.

Two curve types share the arithmetic:

* :class:`Curve` -- the factored model y^2 = (x+p)(x+q)(x+w), used for every
  curve with full rational 2-torsion.
* :class:`MonicCurve` -- a general monic cubic given by coefficients, for
  curves whose cubic does not split (e.g. Y^2 = X^3+X^2+X+1).

Points are :class:`Point` tuples; the point at infinity is :data:`IDENTITY`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import NamedTuple, Union

from .qarith import Rat, exact_root, format_rat, is_perfect_square, sqrt_exact

__all__ = [
    "Curve",
    "MonicCurve",
    "Point",
    "IDENTITY",
    "MAX_TORSION_ORDER",
    "SingularCurveError",
    "NotOnCurveError",
    "on_curve",
    "negate",
    "add",
    "mul",
    "order_of",
    "short_form",
    "to_short_model",
    "from_short_model",
    "j_invariant",
    "is_isomorphic_over_Q",
    "halves_of",
]

# Mazur: a rational torsion point has order at most 12.
MAX_TORSION_ORDER = 12


class SingularCurveError(ValueError):
    pass


class NotOnCurveError(ValueError):
    pass


class Point(NamedTuple):
    x: Rat | None
    y: Rat | None

    @property
    def is_identity(self) -> bool:
        return self.x is None

    @classmethod
    def affine(cls, x, y) -> "Point":
        return cls(Fraction(x), Fraction(y))

    def __str__(self) -> str:
        if self.is_identity:
            return "O"
        return f"({format_rat(self.x)}, {format_rat(self.y)})"


IDENTITY = Point(None, None)


@dataclass(frozen=True)
class MonicCurve:
    """y^2 = x^3 + a2 x^2 + a4 x + a6 with rational coefficients."""

    a2: Rat
    a4: Rat
    a6: Rat

    def __post_init__(self):
        for name in ("a2", "a4", "a6"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.discriminant == 0:
            raise SingularCurveError(f"singular cubic: {self}")

    def rhs(self, x: Rat) -> Rat:
        return ((x + self.a2) * x + self.a4) * x + self.a6

    @property
    def discriminant(self) -> Rat:
        # discriminant of the cubic; the curve discriminant is 16 times this
        a, b, c = self.a2, self.a4, self.a6
        return a * a * b * b - 4 * b**3 - 4 * a**3 * c - 27 * c * c + 18 * a * b * c

    def __str__(self) -> str:
        return (
            f"y^2 = x^3 + ({format_rat(self.a2)})x^2 + ({format_rat(self.a4)})x"
            f" + ({format_rat(self.a6)})"
        )


@dataclass(frozen=True)
class Curve:
    """y^2 = (x+p)(x+q)(x+w); the cubic has roots -p, -q, -w."""

    p: Rat
    q: Rat
    w: Rat
    a2: Rat = field(init=False, repr=False, compare=False)
    a4: Rat = field(init=False, repr=False, compare=False)
    a6: Rat = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        p, q, w = (Fraction(v) for v in (self.p, self.q, self.w))
        if p == q or p == w or q == w:
            raise SingularCurveError(
                f"repeated root in (x+{p})(x+{q})(x+{w}); curve is singular"
            )
        for name, value in (
            ("p", p),
            ("q", q),
            ("w", w),
            ("a2", p + q + w),
            ("a4", p * q + p * w + q * w),
            ("a6", p * q * w),
        ):
            object.__setattr__(self, name, value)

    @classmethod
    def from_roots(cls, e1, e2, e3) -> "Curve":
        return cls(-Fraction(e1), -Fraction(e2), -Fraction(e3))

    @property
    def roots(self) -> tuple[Rat, Rat, Rat]:
        return (-self.p, -self.q, -self.w)

    def two_torsion(self) -> list[Point]:
        return [Point(e, Fraction(0)) for e in self.roots]

    def rhs(self, x: Rat) -> Rat:
        return (x + self.p) * (x + self.q) * (x + self.w)

    @property
    def discriminant(self) -> Rat:
        p, q, w = self.p, self.q, self.w
        return ((p - q) * (p - w) * (q - w)) ** 2

    def __str__(self) -> str:
        p, q, w = (format_rat(v) for v in (self.p, self.q, self.w))
        return f"y^2 = (x + {p})(x + {q})(x + {w})"


AnyCurve = Union[Curve, MonicCurve]


def on_curve(c: AnyCurve, pt: Point) -> bool:
    if pt.is_identity:
        return True
    return pt.y * pt.y == c.rhs(pt.x)


def _check(c: AnyCurve, *pts: Point) -> None:
    for pt in pts:
        if not on_curve(c, pt):
            raise NotOnCurveError(f"{pt} is not on {c}")


def _neg(pt: Point) -> Point:
    if pt.is_identity:
        return pt
    return Point(pt.x, -pt.y)


def _add(c: AnyCurve, p1: Point, p2: Point) -> Point:
    if p1.is_identity:
        return p2
    if p2.is_identity:
        return p1
    x1, y1 = p1
    x2, y2 = p2
    if x1 == x2:
        # vertical line: inverse pair, or doubling a point with y = 0
        if y1 != y2 or y1 == 0:
            return IDENTITY
        slope = (3 * x1 * x1 + 2 * c.a2 * x1 + c.a4) / (2 * y1)
    else:
        slope = (y2 - y1) / (x2 - x1)
    x3 = slope * slope - c.a2 - x1 - x2
    y3 = slope * (x1 - x3) - y1
    return Point(x3, y3)


def _mul(c: AnyCurve, n: int, pt: Point) -> Point:
    if n < 0:
        return _mul(c, -n, _neg(pt))
    result = IDENTITY
    addend = pt
    while n:
        if n & 1:
            result = _add(c, result, addend)
        n >>= 1
        if n:
            addend = _add(c, addend, addend)
    return result


def negate(c: AnyCurve, pt: Point) -> Point:
    _check(c, pt)
    return _neg(pt)


def add(c: AnyCurve, p1: Point, p2: Point) -> Point:
    """Chord-tangent sum of two points of ``c``."""
    _check(c, p1, p2)
    return _add(c, p1, p2)


def mul(c: AnyCurve, n: int, pt: Point) -> Point:
    """``n * pt`` by double-and-add; negative ``n`` multiplies the negation."""
    _check(c, pt)
    return _mul(c, n, pt)


def order_of(c: AnyCurve, pt: Point) -> int | None:
    """Order of a rational point, or None when the point has infinite order.

    Rational torsion points have order at most 12 (Mazur), so a point with no
    multiple up to 12 equal to the identity has infinite order.
    """
    _check(c, pt)
    acc = pt
    for n in range(1, MAX_TORSION_ORDER + 1):
        if acc.is_identity:
            return n
        acc = _add(c, acc, pt)
    return None


def short_form(c: AnyCurve) -> tuple[Rat, Rat]:
    """Coefficients (A, B) of y^2 = x^3 + A x + B obtained by x -> x - a2/3."""
    a2, a4, a6 = c.a2, c.a4, c.a6
    A = a4 - a2 * a2 / 3
    B = 2 * a2**3 / 27 - a2 * a4 / 3 + a6
    return A, B


def to_short_model(c: AnyCurve, pt: Point) -> Point:
    """Transport a point of ``c`` to its :func:`short_form` model."""
    if pt.is_identity:
        return pt
    return Point(pt.x + c.a2 / 3, pt.y)


def from_short_model(c: AnyCurve, pt: Point) -> Point:
    if pt.is_identity:
        return pt
    return Point(pt.x - c.a2 / 3, pt.y)


def j_invariant(c: AnyCurve) -> Rat:
    A, B = short_form(c)
    return 1728 * 4 * A**3 / (4 * A**3 + 27 * B * B)


def is_isomorphic_over_Q(c1: AnyCurve, c2: AnyCurve) -> bool:
    """True iff the short models satisfy A2 = u^4 A1, B2 = u^6 B1 for rational u."""
    A1, B1 = short_form(c1)
    A2, B2 = short_form(c2)
    if (A1 == 0) != (A2 == 0) or (B1 == 0) != (B2 == 0):
        return False
    if A1 == 0:
        return exact_root(B2 / B1, 6) is not None
    if B1 == 0:
        return exact_root(A2 / A1, 4) is not None
    u2 = (A1 * B2) / (A2 * B1)
    if not is_perfect_square(u2):
        return False
    return A2 == u2 * u2 * A1 and B2 == u2**3 * B1


def halves_of(c: Curve, pt: Point) -> list[Point]:
    """All rational points Q with 2Q = pt.

    ``pt`` is in 2E(Q) exactly when x0 - e is a rational square for each root
    e of the cubic.  Candidates x0 + d1 d2 + d1 d3 + d2 d3 are formed over all
    sign choices of the square roots d_i and kept only if they double back.
    """
    _check(c, pt)
    if pt.is_identity:
        raise ValueError("halves_of requires a non-identity point")
    diffs = [pt.x - e for e in c.roots]
    if not all(is_perfect_square(d) for d in diffs):
        return []
    roots = [sqrt_exact(d) for d in diffs]
    halves: list[Point] = []
    for signs in product((1, -1), repeat=3):
        d1, d2, d3 = (s * r for s, r in zip(signs, roots))
        x = pt.x + d1 * d2 + d1 * d3 + d2 * d3
        y2 = c.rhs(x)
        if not is_perfect_square(y2):
            continue
        y = sqrt_exact(y2)
        for cand in (Point(x, y), Point(x, -y)):
            if cand not in halves and _add(c, cand, cand) == pt:
                halves.append(cand)
    return halves
