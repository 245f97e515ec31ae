"""Search for same-sign triples whose induced curve has torsion Z/2 x Z/8.

Fix r, put b = (r^2-1)/a and c = a + b + 2r.  S' then has order 4 (2S' = C')
exactly when

    (2r^3 - 2r) a^2 + (4r^4 - 6r^2 + 1) a + (2r^5 + 2r - 4r^3) = 0,

whose discriminant is 1 + 4r^2 - 4r^4.  Rational r with a square discriminant
are the points of the quartic d^2 = 1 + 4r^2 - 4r^4, which is birational to

    E1:  Y^2 = X^3 + X^2 + X + 1,   generator P1 = (0, 1),  T1 = (-1, 0).

Walking the multiples n*P1 and pulling them back to r yields candidates.
"""

from __future__ import annotations

import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Iterator

from .ec_core import IDENTITY, MonicCurve, Point, _add, is_isomorphic_over_Q, j_invariant, order_of
from .families import all_same_sign, z2z8_family
from .qarith import Rat, format_rat, is_perfect_square, parse_rat, sqrt_exact
from .torsion import TorsionClass, classify_triple, lemma_4S_factors
from .triples import InvalidElementError, NotATripleError, Triple, canonical_points, induced_curve, validate

__all__ = [
    "E1",
    "P1",
    "T1",
    "R_MAP_SIGN",
    "ExceptionalPointError",
    "DegenerateParameterError",
    "CandidateRecord",
    "RECORD_FIELDS",
    "e1_multiple",
    "e1_ladder",
    "point_to_r",
    "r_to_point",
    "quartic_disc",
    "quadratic_coefficients",
    "r_to_triples",
    "evaluate_multiple",
    "scan",
    "candidates",
    "RecordStream",
    "verify_family_T",
]

log = logging.getLogger(__name__)

E1 = MonicCurve(1, 1, 1)
P1 = Point.affine(0, 1)
T1 = Point.affine(-1, 0)

# Orientation of the pullback r = R_MAP_SIGN * (X + 1) / Y.  Flipping it is the
# same as translating by T1; +1 sends 6*P1 to r = -3855558/3603685.
R_MAP_SIGN = 1


class ExceptionalPointError(ValueError):
    """The birational map E1 -> quartic is undefined at this point."""


class DegenerateParameterError(ValueError):
    """r in {0, 1, -1}: the quadratic in a loses its leading term."""


def e1_ladder(n_max: int) -> Iterator[tuple[int, Point]]:
    """Yield (n, n*P1) for n = 1..n_max by repeated addition."""
    pt = IDENTITY
    for n in range(1, n_max + 1):
        pt = _add(E1, pt, P1)
        yield n, pt


def e1_multiple(n: int) -> Point:
    if n < 1:
        raise ValueError("multiple index must be >= 1")
    for _, pt in e1_ladder(n):
        pass
    return pt


def point_to_r(pt: Point) -> Rat:
    """Quartic parameter r of a point of E1 (the quartic point is (r, 2Xr^2 - 1))."""
    if pt.is_identity or pt.y == 0:
        raise ExceptionalPointError(f"{pt} has no image on the quartic")
    return R_MAP_SIGN * (pt.x + 1) / pt.y


def r_to_point(r, d) -> Point:
    """Inverse of :func:`point_to_r` for a quartic point (r, d), d^2 = 1+4r^2-4r^4."""
    r, d = Fraction(r), Fraction(d)
    if d * d != quartic_disc(r):
        raise ValueError(f"({format_rat(r)}, {format_rat(d)}) is not on the quartic")
    if r == 0:
        raise ExceptionalPointError("r = 0 is the base point of the quartic")
    u = R_MAP_SIGN * r
    return Point((d + 1) / (2 * u * u), (d + 1 + 2 * u * u) / (2 * u**3))


def quartic_disc(r) -> Rat:
    r = Fraction(r)
    return 1 - 4 * r**4 + 4 * r**2


def quadratic_coefficients(r) -> tuple[Rat, Rat, Rat]:
    r = Fraction(r)
    return (
        2 * r**3 - 2 * r,
        4 * r**4 - 6 * r**2 + 1,
        2 * r**5 + 2 * r - 4 * r**3,
    )


def _triples_with_branch(r: Rat) -> list[tuple[str, Triple]]:
    if r in (0, 1, -1):
        raise DegenerateParameterError(f"r = {format_rat(r)} is degenerate")
    A, B, C = quadratic_coefficients(r)
    disc = B * B - 4 * A * C
    if not is_perfect_square(disc):
        return []
    root = sqrt_exact(disc)
    found = []
    for branch, d in (("+", root), ("-", -root)):
        a = (-B + d) / (2 * A)
        b = (r * r - 1) / a
        try:
            found.append((branch, validate(a, b, a + b + 2 * r)))
        except (InvalidElementError, NotATripleError):
            continue
        if root == 0:
            break
    return found


def r_to_triples(r) -> list[Triple]:
    """Triples (a, (r^2-1)/a, a+b+2r) for each rational root a of the quadratic.

    The two roots multiply to r^2-1, so they give the same triple with a and b
    exchanged.
    """
    return [tr for _, tr in _triples_with_branch(Fraction(r))]


RECORD_FIELDS = (
    "n",
    "r",
    "root_branch",
    "a",
    "b",
    "c",
    "all_positive",
    "torsion",
    "s_order",
    "j",
    "skipped",
    "skip_reason",
)


@dataclass(frozen=True)
class CandidateRecord:
    n: int
    r: Rat | None = None
    root_branch: str | None = None
    triple: Triple | None = None
    all_positive: bool = False
    torsion: TorsionClass | None = None
    s_order: int | None = None
    j: Rat | None = None
    skipped: bool = False
    skip_reason: str | None = None

    @classmethod
    def skip(cls, n: int, reason: str, r: Rat | None = None) -> "CandidateRecord":
        return cls(n=n, r=r, skipped=True, skip_reason=reason)

    def to_json(self) -> dict:
        def fmt(x):
            return None if x is None else format_rat(x)

        elems = self.triple.elements if self.triple else (None, None, None)
        return {
            "n": self.n,
            "r": fmt(self.r),
            "root_branch": self.root_branch,
            "a": fmt(elems[0]),
            "b": fmt(elems[1]),
            "c": fmt(elems[2]),
            "all_positive": self.all_positive,
            "torsion": None if self.torsion is None else self.torsion.value,
            "s_order": self.s_order,
            "j": fmt(self.j),
            "skipped": self.skipped,
            "skip_reason": self.skip_reason,
        }

    @classmethod
    def from_json(cls, data: dict) -> "CandidateRecord":
        def parse(x):
            return None if x is None else parse_rat(x)

        triple = None
        if data.get("a") is not None:
            triple = validate(parse_rat(data["a"]), parse_rat(data["b"]), parse_rat(data["c"]))
        torsion = data.get("torsion")
        return cls(
            n=int(data["n"]),
            r=parse(data.get("r")),
            root_branch=data.get("root_branch"),
            triple=triple,
            all_positive=bool(data.get("all_positive")),
            torsion=None if torsion is None else TorsionClass(torsion),
            s_order=data.get("s_order"),
            j=parse(data.get("j")),
            skipped=bool(data.get("skipped")),
            skip_reason=data.get("skip_reason"),
        )


def _candidate(n: int, r: Rat, branch: str, tr: Triple) -> CandidateRecord:
    curve = induced_curve(tr)
    s_order = order_of(curve, canonical_points(tr).S)
    torsion = classify_triple(tr)
    if s_order != 4 or torsion is not TorsionClass.Z2xZ8 or lemma_4S_factors(tr)[0] != 0:
        raise AssertionError(f"n={n}: S' order {s_order}, torsion {torsion} for {tr}")
    return CandidateRecord(
        n=n,
        r=r,
        root_branch=branch,
        triple=tr,
        all_positive=all(x > 0 for x in tr.elements),
        torsion=torsion,
        s_order=s_order,
        j=j_invariant(curve),
    )


def evaluate_multiple(n: int, pt: Point, verbose: bool = False) -> list[CandidateRecord]:
    """Records for one multiple n*P1; always at least one (possibly a skip)."""
    try:
        r = point_to_r(pt)
        branches = _triples_with_branch(r)
    except ExceptionalPointError as exc:
        return [CandidateRecord.skip(n, f"exceptional point: {exc}")]
    except DegenerateParameterError as exc:
        return [CandidateRecord.skip(n, str(exc), r)]
    if not branches:
        return [CandidateRecord.skip(n, "no valid triple from the quadratic", r)]

    records, seen = [], set()
    for branch, tr in branches:
        same = all_same_sign(tr)
        if not (same or verbose):
            continue
        if same and tr.a < 0:
            # negating every element keeps the Diophantine property
            tr = tr.negated()
        if tr.as_set() in seen:
            continue
        seen.add(tr.as_set())
        records.append(_candidate(n, r, branch, tr))
    if not records:
        return [CandidateRecord.skip(n, "mixed signs", r)]
    return records


def _evaluate_job(args):
    return evaluate_multiple(*args)


class RecordStream:
    """Append-only JSON-lines file of :class:`CandidateRecord`, grouped by n.

    Each n is written in a single flushed write, so after an interruption the
    file holds whole groups plus at most one torn trailing line, which
    :meth:`load` discards.
    """

    def __init__(self, path):
        self.path = Path(path)

    def load(self) -> list[CandidateRecord]:
        if not self.path.exists():
            return []
        records = []
        good_bytes = 0
        with open(self.path, "rb") as fh:
            for raw in fh:
                if not raw.endswith(b"\n"):
                    break
                try:
                    records.append(CandidateRecord.from_json(json.loads(raw)))
                except (json.JSONDecodeError, KeyError, ValueError):
                    break
                good_bytes += len(raw)
        if good_bytes != self.path.stat().st_size:
            log.warning("truncating torn tail of %s at byte %d", self.path, good_bytes)
            with open(self.path, "r+b") as fh:
                fh.truncate(good_bytes)
        return records

    def last_completed(self) -> int:
        return max((rec.n for rec in self.load()), default=0)

    def append(self, group: Iterable[CandidateRecord]) -> None:
        text = "".join(json.dumps(rec.to_json()) + "\n" for rec in group)
        with open(self.path, "a", encoding="utf-8") as fh:
            fh.write(text)
            fh.flush()
            os.fsync(fh.fileno())


def scan(
    n_max: int,
    *,
    verbose: bool = False,
    workers: int = 1,
    stream: RecordStream | None = None,
) -> list[CandidateRecord]:
    """Run the pipeline for n = 1..n_max and return every record (skips included).

    With a ``stream``, already-completed n are read back instead of recomputed
    and new groups are appended as they finish.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    records = stream.load() if stream else []
    start = max((rec.n for rec in records), default=0) + 1
    jobs = [(n, pt, verbose) for n, pt in e1_ladder(n_max) if n >= start]

    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            groups = pool.map(_evaluate_job, jobs)
            for group in groups:
                _collect(group, records, stream)
    else:
        for job in jobs:
            _collect(_evaluate_job(job), records, stream)
    return records


def _collect(group, records, stream) -> None:
    if stream:
        stream.append(group)
    records.extend(group)
    log.debug("n=%d: %d record(s)", group[0].n, len(group))


def candidates(records: Iterable[CandidateRecord]) -> list[CandidateRecord]:
    return [rec for rec in records if not rec.skipped and rec.all_positive]


def verify_family_T(c, T) -> bool:
    """Whether ``c`` is Q-isomorphic to the Z/2 x Z/8 family curve at T."""
    return is_isomorphic_over_Q(c, induced_curve(z2z8_family(T)))
