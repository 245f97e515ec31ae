"""Rational Diophantine triples and their induced elliptic curves.

A triple {a, b, c} of distinct nonzero rationals with ab+1, ac+1, bc+1 all
squares induces

    E :  y^2 = (ax+1)(bx+1)(cx+1)

which x -> x/abc, y -> y/abc carries to the factored model

    E':  y^2 = (x+ab)(x+ac)(x+bc).

Everything here works on E'.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .ec_core import Curve, Point, _add
from .qarith import Rat, format_rat, is_perfect_square, sqrt_exact

__all__ = [
    "Triple",
    "CanonicalPoints",
    "InvalidElementError",
    "NotATripleError",
    "validate",
    "induced_curve",
    "canonical_points",
    "on_E",
    "transform_to_Eprime",
    "is_regular",
    "regular_roles",
    "regular_point_sign",
]


class InvalidElementError(ValueError):
    pass


class NotATripleError(ValueError):
    def __init__(self, pair: tuple[Rat, Rat]):
        self.pair = pair
        x, y = pair
        super().__init__(
            f"{format_rat(x)}*{format_rat(y)}+1 = {format_rat(x * y + 1)} is not a square"
        )


@dataclass(frozen=True)
class Triple:
    """An ordered rational Diophantine triple with r, s, t >= 0.

    r^2 = ab+1, s^2 = ac+1, t^2 = bc+1.  Build instances with :func:`validate`.
    """

    a: Rat
    b: Rat
    c: Rat
    r: Rat
    s: Rat
    t: Rat

    @property
    def elements(self) -> tuple[Rat, Rat, Rat]:
        return (self.a, self.b, self.c)

    def as_set(self) -> frozenset[Rat]:
        """Key for comparing triples up to permutation."""
        return frozenset(self.elements)

    def negated(self) -> "Triple":
        return Triple(-self.a, -self.b, -self.c, self.r, self.s, self.t)

    def __str__(self) -> str:
        return "{" + ", ".join(format_rat(v) for v in self.elements) + "}"


class CanonicalPoints(NamedTuple):
    A: Point
    B: Point
    C: Point
    P: Point
    S: Point
    R: Point


def validate(a, b, c) -> Triple:
    """Check the Diophantine property and return the triple with its roots.

    ab+1 = 0 is allowed (then r = 0).
    """
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if 0 in (a, b, c):
        raise InvalidElementError("triple elements must be nonzero")
    if len({a, b, c}) < 3:
        raise InvalidElementError("triple elements must be distinct")
    roots = []
    for x, y in ((a, b), (a, c), (b, c)):
        if not is_perfect_square(x * y + 1):
            raise NotATripleError((x, y))
        roots.append(sqrt_exact(x * y + 1))
    return Triple(a, b, c, *roots)


def induced_curve(tr: Triple) -> Curve:
    return Curve(tr.a * tr.b, tr.a * tr.c, tr.b * tr.c)


def canonical_points(tr: Triple) -> CanonicalPoints:
    """A', B', C', P', S' and R' (the half of S') on the induced curve E'."""
    a, b, c, r, s, t = tr.a, tr.b, tr.c, tr.r, tr.s, tr.t
    zero = Fraction(0)
    pts = CanonicalPoints(
        A=Point(-b * c, zero),
        B=Point(-a * c, zero),
        C=Point(-a * b, zero),
        P=Point(zero, a * b * c),
        S=Point(Fraction(1), r * s * t),
        R=Point(r * s + r * t + s * t + 1, (r + s) * (r + t) * (s + t)),
    )
    curve = induced_curve(tr)
    if _add(curve, pts.R, pts.R) != pts.S:
        raise AssertionError(f"2R' != S' for {tr}")
    return pts


def on_E(tr: Triple, pt: Point) -> bool:
    """Incidence on the original model y^2 = (ax+1)(bx+1)(cx+1)."""
    if pt.is_identity:
        return True
    x, y = pt
    return y * y == (tr.a * x + 1) * (tr.b * x + 1) * (tr.c * x + 1)


def transform_to_Eprime(tr: Triple, pt_on_E: Point) -> Point:
    if not on_E(tr, pt_on_E):
        raise ValueError(f"{pt_on_E} is not on y^2 = (ax+1)(bx+1)(cx+1) for {tr}")
    if pt_on_E.is_identity:
        return pt_on_E
    abc = tr.a * tr.b * tr.c
    return Point(abc * pt_on_E.x, abc * pt_on_E.y)


def is_regular(tr: Triple) -> tuple[bool, int | None]:
    """Whether c = a + b + sigma*2r; returns (True, sigma) or (False, None).

    When r = 0 both signs coincide and +1 is reported.
    """
    base = tr.a + tr.b
    if tr.c == base + 2 * tr.r:
        return True, 1
    if tr.c == base - 2 * tr.r:
        return True, -1
    return False, None


def regular_roles(tr: Triple) -> list[tuple[int, int]]:
    """Check regularity with each element in the role of c.

    Returns (index of the element playing c, sigma) for every regular role.
    """
    found = []
    roles = (
        (2, tr.a, tr.b, tr.c, tr.r),
        (1, tr.a, tr.c, tr.b, tr.s),
        (0, tr.b, tr.c, tr.a, tr.t),
    )
    for index, x, y, z, root in roles:
        for sigma in (1, -1):
            if z == x + y + sigma * 2 * root:
                found.append((index, sigma))
                break
    return found



def regular_point_sign(tr: Triple) -> int | None:
    """tau with S' = tau * 2P' for a regular triple, None if not regular.

    Writing c = a + b + 2*rho (rho = sigma*r), the signed roots a+rho, b+rho of
    ac+1, bc+1 give the point (1, rho(a+rho)(b+rho)) = -2P'.  S' carries the
    nonnegative product rst, so tau = -sign(rho(a+rho)(b+rho)), or -1 if zero.
    """
    regular, sigma = is_regular(tr)
    if not regular:
        return None
    rho = sigma * tr.r
    return 1 if rho * (tr.a + rho) * (tr.b + rho) < 0 else -1
