"""Naive-height point search: lower-bound evidence for the rank.

Finding a point of infinite order proves rank >= 1.  Finding none proves
nothing; the report says so.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt, lcm

import numpy as np

from .ec_core import Curve, Point, on_curve, order_of
from .qarith import format_rat

__all__ = ["RankEvidence", "rank_evidence", "iter_curve_points"]

# moduli for the quadratic-residue sieve; each must stay below ~3e9 for int64
_SIEVE_MODULI = (64, 63, 65, 11, 17, 19, 23, 29, 31, 37, 41, 43)
_SQUARE_TABLES = {
    m: np.isin(np.arange(m), np.arange(m) ** 2 % m) for m in _SIEVE_MODULI
}


@dataclass
class RankEvidence:
    height_bound: int
    torsion_points: list[tuple[Point, int]] = field(default_factory=list)
    infinite_points: list[Point] = field(default_factory=list)

    @property
    def rank_at_least_one(self) -> bool:
        return bool(self.infinite_points)

    @property
    def conclusion(self) -> str:
        if self.infinite_points:
            return "rank >= 1"
        return f"no non-torsion point up to height {self.height_bound} (not a proof of rank 0)"

    def to_json(self) -> dict:
        return {
            "height_bound": self.height_bound,
            "torsion_points": [
                {"x": format_rat(p.x), "y": format_rat(p.y), "order": n}
                for p, n in self.torsion_points
            ],
            "infinite_points": [
                {"x": format_rat(p.x), "y": format_rat(p.y)} for p in self.infinite_points
            ],
            "conclusion": self.conclusion,
        }


def _height_shell(h: int) -> tuple[np.ndarray, np.ndarray]:
    """All coprime (num, den) with den > 0 and max(|num|, den) == h."""
    top = np.arange(-h, h + 1, dtype=np.int64)
    nums = [top]
    dens = [np.full(top.shape, h, dtype=np.int64)]
    if h > 1:
        side = np.arange(1, h, dtype=np.int64)
        nums += [np.full(side.shape, h, dtype=np.int64), np.full(side.shape, -h, dtype=np.int64)]
        dens += [side, side]
    num = np.concatenate(nums)
    den = np.concatenate(dens)
    keep = np.gcd(num, den) == 1
    return num[keep], den[keep]


def iter_curve_points(curve: Curve, height_bound: int):
    """Yield affine points (x, y), y >= 0, with height of x at most the bound.

    x = num/den is on the curve iff D*den*prod(D*num + n_i*den) is a square,
    where D clears the denominators of the roots and n_i = D*p_i.  Candidates
    are sieved by quadratic residues before the exact isqrt test.
    """
    coeffs = (curve.p, curve.q, curve.w)
    D = lcm(*(c.denominator for c in coeffs))
    ns = [int(c * D) for c in coeffs]
    for h in range(1, height_bound + 1):
        num, den = _height_shell(h)
        mask = np.ones(num.shape, dtype=bool)
        for m in _SIEVE_MODULI:
            nm, dm = num % m, den % m
            val = (D % m) * dm % m
            for n_i in ns:
                val = val * ((D % m) * nm % m + (n_i % m) * dm % m) % m
            mask &= _SQUARE_TABLES[m][val]
        for a, b in zip(num[mask].tolist(), den[mask].tolist()):
            big = D * b
            for n_i in ns:
                big *= D * a + n_i * b
            if big < 0:
                continue
            root = isqrt(big)
            if root * root != big:
                continue
            pt = Point(Fraction(a, b), Fraction(root, D * D * b * b))
            assert on_curve(curve, pt)
            yield pt


def rank_evidence(curve: Curve, height_bound: int) -> RankEvidence:
    """Search x of height <= ``height_bound`` in ascending height and sort the
    points found by whether they are torsion.

    Only one of (x, y), (x, -y) is reported.
    """
    if height_bound < 1:
        raise ValueError("height_bound must be >= 1")
    report = RankEvidence(height_bound)
    for pt in iter_curve_points(curve, height_bound):
        n = order_of(curve, pt)
        if n is None:
            report.infinite_points.append(pt)
        else:
            report.torsion_points.append((pt, n))
    return report
