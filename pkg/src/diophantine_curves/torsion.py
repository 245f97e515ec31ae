"""Torsion of curves with full rational 2-torsion, and the order-of-S criteria.

With all three 2-torsion points rational, Mazur leaves four possible groups:
Z/2 x Z/2, Z/2 x Z/4, Z/2 x Z/6 and Z/2 x Z/8.  The 2-primary part is found
exactly by halving; the 3-part by probing supplied points, with a mod-p point
count to rule it out when no probe witnesses it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .ec_core import IDENTITY, Curve, Point, _add, _check, halves_of, order_of
from .qarith import Rat
from .triples import Triple, canonical_points, induced_curve

__all__ = [
    "TorsionClass",
    "TorsionInfo",
    "TorsionUndetermined",
    "lemma_2S",
    "lemma_3S_value",
    "lemma_4S_factors",
    "ConsistencyReport",
    "order_consistency",
    "torsion_info",
    "classify",
    "classify_triple",
    "count_points_mod_p",
    "point_orders",
]


class TorsionClass(str, enum.Enum):
    Z2xZ2 = "Z2xZ2"
    Z2xZ4 = "Z2xZ4"
    Z2xZ6 = "Z2xZ6"
    Z2xZ8 = "Z2xZ8"

    def __str__(self) -> str:
        return self.value


class TorsionUndetermined(RuntimeError):
    """No probe has order 3 or 6, yet the 3-part could not be excluded."""


def lemma_2S(tr: Triple) -> bool:
    a, b, c = tr.elements
    return (a * b + 1) * (a * c + 1) * (b * c + 1) == 0


def lemma_3S_value(tr: Triple) -> Rat:
    a, b, c = tr.elements
    abc = a * b * c
    return (
        3
        + 4 * (a * b + a * c + b * c)
        + 6 * abc * (a + b + c)
        + 12 * abc**2
        - abc**2 * (a * a + b * b + c * c - 2 * a * b - 2 * a * c - 2 * b * c)
    )


def lemma_4S_factors(tr: Triple) -> tuple[Rat, Rat, Rat]:
    """Values whose vanishing puts 2S' on C'=(-ab,0), B'=(-ac,0), A'=(-bc,0)."""
    a, b, c = tr.elements
    return (
        (a * b + 1) ** 2 - a * b * (c - a) * (c - b),
        (a * c + 1) ** 2 - a * c * (b - a) * (b - c),
        (b * c + 1) ** 2 - b * c * (a - b) * (a - c),
    )


@dataclass
class ConsistencyReport:
    s_order: int | None
    lemma_2S: bool
    lemma_3S: bool
    lemma_4S: tuple[bool, bool, bool]
    mismatches: list[str] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return not self.mismatches


def order_consistency(tr: Triple) -> ConsistencyReport:
    """Compare the closed-form criteria for the order of S' with the group law."""
    curve = induced_curve(tr)
    pts = canonical_points(tr)
    n = order_of(curve, pts.S)
    two = lemma_2S(tr)
    three = lemma_3S_value(tr) == 0
    four = tuple(f == 0 for f in lemma_4S_factors(tr))
    report = ConsistencyReport(n, two, three, four)

    if (n == 2) != two:
        report.mismatches.append(f"order {n} but 2S criterion is {two}")
    if (n == 3) != three:
        report.mismatches.append(f"order {n} but 3S criterion is {three}")
    if (n == 4) != (any(four) and not two):
        report.mismatches.append(f"order {n} but 4S criterion is {four}")
    if n == 4:
        landing = _add(curve, pts.S, pts.S)
        for vanishes, target, label in zip(four, (pts.C, pts.B, pts.A), "CBA"):
            if vanishes != (landing == target):
                report.mismatches.append(f"2S' vs {label}': factor zero is {vanishes}")
    return report


def _two_part(curve: Curve) -> tuple[int, Point | None]:
    """Exponent 2^k of the largest cyclic 2-power factor, with a witness."""
    best, witness = 2, curve.two_torsion()[0]
    for t2 in curve.two_torsion():
        for q4 in halves_of(curve, t2):
            if best < 4:
                best, witness = 4, q4
            eights = halves_of(curve, q4)
            if eights:
                return 8, eights[0]
    return best, witness


def _legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def count_points_mod_p(curve, p: int) -> int | None:
    """#E(F_p) for an odd prime of good reduction, else None."""
    coeffs = (curve.a2, curve.a4, curve.a6, curve.discriminant)
    if any(x.denominator % p == 0 for x in coeffs):
        return None
    a2, a4, a6, disc = (x.numerator * pow(x.denominator, -1, p) % p for x in coeffs)
    if disc == 0:
        return None
    total = p + 1
    for x in range(p):
        total += _legendre(((x + a2) * x + a4) * x + a6, p)
    return total


_SMALL_PRIMES = [p for p in range(5, 400) if all(p % d for d in range(2, int(p**0.5) + 1))]


def _three_part_excluded(curve: Curve) -> bool:
    # torsion injects into E(F_p) for good odd p, so 3 | #E(F_p) is forced
    for p in _SMALL_PRIMES:
        n = count_points_mod_p(curve, p)
        if n is not None and n % 3:
            return True
    return False


@dataclass
class TorsionInfo:
    torsion: TorsionClass | None
    two_part: int
    three_part: str  # "found", "excluded", "impossible" or "undetermined"
    witness: Point | None = None


def torsion_info(curve: Curve, probes: list[Point] = ()) -> TorsionInfo:
    _check(curve, *probes)
    two, witness = _two_part(curve)
    if two == 8:
        return TorsionInfo(TorsionClass.Z2xZ8, 8, "impossible", witness)
    if two == 4:
        return TorsionInfo(TorsionClass.Z2xZ4, 4, "impossible", witness)
    translates = [IDENTITY, *curve.two_torsion()]
    for pt in probes:
        for t2 in translates:
            cand = _add(curve, pt, t2)
            if order_of(curve, cand) in (3, 6):
                return TorsionInfo(TorsionClass.Z2xZ6, 2, "found", cand)
    if _three_part_excluded(curve):
        return TorsionInfo(TorsionClass.Z2xZ2, 2, "excluded", witness)
    return TorsionInfo(None, 2, "undetermined")


def classify(curve: Curve, probes: list[Point] = ()) -> TorsionClass:
    """Torsion group of ``curve``; ``probes`` are rational points used to find 3-torsion.

    Raises :class:`TorsionUndetermined` instead of guessing when the 3-part
    can neither be found among the probes nor excluded.
    """
    info = torsion_info(curve, probes)
    if info.torsion is None:
        raise TorsionUndetermined(f"3-part not detected by probes on {curve}")
    return info.torsion


def classify_triple(tr: Triple) -> TorsionClass:
    """Classify the induced curve, probing with the canonical points."""
    pts = canonical_points(tr)
    return classify(induced_curve(tr), [pts.P, pts.S, pts.R])


def point_orders(tr: Triple) -> dict[str, int | None]:
    curve = induced_curve(tr)
    return {name: order_of(curve, pt) for name, pt in canonical_points(tr)._asdict().items()}
