"""Parametric families of rational Diophantine triples with prescribed torsion.

Each generator returns the ordered triple exactly as the closed formulas give
it.  Parameters that make a denominator or an element vanish (or collide two
elements) raise :class:`FamilyDegenerateError`.
"""

from __future__ import annotations

from fractions import Fraction

from .qarith import sign
from .triples import InvalidElementError, Triple, validate

__all__ = [
    "FamilyDegenerateError",
    "FAMILIES",
    "mixed_sign_family",
    "z2z6_family",
    "z2z6_family_t",
    "z2z8_family",
    "sign_pattern",
    "all_same_sign",
]


class FamilyDegenerateError(ValueError):
    pass


def _build(name: str, a, b, c) -> Triple:
    try:
        return validate(a, b, c)
    except InvalidElementError as exc:
        raise FamilyDegenerateError(f"{name}: {exc}") from None


def _require_nonzero(name: str, **denominators) -> None:
    for label, value in denominators.items():
        if value == 0:
            raise FamilyDegenerateError(f"{name}: {label} vanishes")


def mixed_sign_family(u, t) -> Triple:
    """{a, -1/a, c} with a = (ut+1)/(t-u), c = 4ut/((ut+1)(t-u))."""
    u, t = Fraction(u), Fraction(t)
    _require_nonzero("mixed", **{"t-u": t - u, "ut+1": u * t + 1})
    a = (u * t + 1) / (t - u)
    b = (u - t) / (u * t + 1)
    c = 4 * u * t / ((u * t + 1) * (t - u))
    return _build("mixed", a, b, c)


def z2z6_family(r) -> Triple:
    """Regular triples (c = a + b + 2r, ab + 1 = r^2) on which 3S = O."""
    r = Fraction(r)
    _require_nonzero("z2z6a", r=r, **{"2r^2-1": 2 * r * r - 1})
    a = -2 * r * (r - 1) * (r + 1) / (2 * r * r - 1)
    b = -(2 * r * r - 1) / (2 * r)
    c = (2 * r - 1) * (2 * r + 1) / (2 * (2 * r * r - 1) * r)
    return _build("z2z6a", a, b, c)


def z2z6_family_t(t) -> Triple:
    """The 3S = O branch from the root with sqrt(8r^2+1), via r = -t/(t^2-2)."""
    t = Fraction(t)
    _require_nonzero("z2z6t", t=t, **{"t^2-2": t * t - 2})
    a = -t * (t - 2) * (t + 2) / (2 * (t * t - 2))
    b = 2 * (t - 1) * (t + 1) / ((t * t - 2) * t)
    c = -(t * t - 2) / (2 * t)
    return _build("z2z6t", a, b, c)


def z2z8_family(T) -> Triple:
    """{2T/(T^2-1), (1-T^2)/(2T), (6T^2-T^4-1)/(2T(T^2-1))}; torsion Z/2 x Z/8."""
    T = Fraction(T)
    _require_nonzero("z2z8", T=T, **{"T^2-1": T * T - 1})
    a = 2 * T / (T * T - 1)
    b = (1 - T * T) / (2 * T)
    c = (6 * T * T - T**4 - 1) / (2 * T * (T * T - 1))
    return _build("z2z8", a, b, c)


FAMILIES = {
    "mixed": (mixed_sign_family, 2),
    "z2z6a": (z2z6_family, 1),
    "z2z6t": (z2z6_family_t, 1),
    "z2z8": (z2z8_family, 1),
}


def sign_pattern(tr: Triple) -> tuple[int, int, int]:
    return tuple(sign(x) for x in tr.elements)


def all_same_sign(tr: Triple) -> bool:
    return len(set(sign_pattern(tr))) == 1
