import json
import random
from fractions import Fraction as F

import pytest
import sympy

from diophantine_curves.ec_core import IDENTITY, Point, _add, is_isomorphic_over_Q, on_curve, order_of
from diophantine_curves.qarith import is_perfect_square
from diophantine_curves.search import (
    E1,
    P1,
    T1,
    CandidateRecord,
    DegenerateParameterError,
    ExceptionalPointError,
    RECORD_FIELDS,
    RecordStream,
    candidates,
    e1_ladder,
    e1_multiple,
    point_to_r,
    quadratic_coefficients,
    quartic_disc,
    r_to_point,
    r_to_triples,
    scan,
    verify_family_T,
)
from diophantine_curves.torsion import TorsionClass, lemma_4S_factors
from diophantine_curves.triples import induced_curve, validate

from conftest import R6, R11, T_11P, TRIPLE_6P, TRIPLE_11P


def test_e1_context():
    assert on_curve(E1, P1) and on_curve(E1, T1)
    assert order_of(E1, T1) == 2
    assert order_of(E1, P1) is None


def test_e1_multiples():
    assert e1_multiple(1) == Point.affine(0, 1)
    assert e1_multiple(2) == Point.affine(F(-3, 4), F(-5, 8))
    assert point_to_r(e1_multiple(6)) == R6
    assert point_to_r(e1_multiple(11)) == R11
    with pytest.raises(ValueError):
        e1_multiple(0)


def test_quadratic_discriminant_symbolic():
    r = sympy.symbols("r")
    A, B, C = 2 * r**3 - 2 * r, 4 * r**4 - 6 * r**2 + 1, 2 * r**5 + 2 * r - 4 * r**3
    assert sympy.expand(B**2 - 4 * A * C - (1 - 4 * r**4 + 4 * r**2)) == 0
    rng = random.Random(5)
    for _ in range(50):
        x = F(rng.randint(-99, 99), rng.randint(1, 99))
        want = [sympy.Rational(e.subs(r, sympy.Rational(x.numerator, x.denominator))) for e in (A, B, C)]
        assert [sympy.Rational(g.numerator, g.denominator) for g in quadratic_coefficients(x)] == want


@pytest.mark.parametrize("r, value", [(0, 1), (1, 1), (F(1, 2), F(7, 4))])
def test_quartic_disc(r, value):
    assert quartic_disc(r) == value


def test_pullback_lands_on_quartic():
    for n, pt in e1_ladder(15):
        r = point_to_r(pt)
        d = 2 * pt.x * r * r - 1
        assert d * d == quartic_disc(r)
        assert is_perfect_square(quartic_disc(r))
        assert r_to_point(r, d) == pt


def test_map_exceptional_points():
    for pt in (IDENTITY, T1):
        with pytest.raises(ExceptionalPointError):
            point_to_r(pt)
    with pytest.raises(ExceptionalPointError):
        r_to_point(0, 1)
    with pytest.raises(ValueError):
        r_to_point(F(1, 2), 1)


def test_t1_translation_negates_r():
    for n, pt in e1_ladder(11):
        assert point_to_r(_add(E1, pt, T1)) == -point_to_r(pt)


def test_ladder_heights_grow():
    heights = [max(abs(r.numerator), r.denominator)
               for r in (point_to_r(pt) for _, pt in e1_ladder(20))]
    assert all(h1 < h2 for h1, h2 in zip(heights, heights[1:]))


def test_r_to_triples_anchors():
    assert TRIPLE_6P not in [t.elements for t in r_to_triples(R6)]  # raw triples are negative
    assert TRIPLE_6P in [t.negated().elements for t in r_to_triples(R6)]
    assert TRIPLE_11P in [t.elements for t in r_to_triples(R11)]


def test_r_to_triples_roots_swap_a_and_b():
    first, second = r_to_triples(R6)
    assert (first.a, first.b, first.c) == (second.b, second.a, second.c)


def test_r_to_triples_degenerate():
    for r in (0, 1, -1):
        with pytest.raises(DegenerateParameterError):
            r_to_triples(r)
    assert r_to_triples(F(1, 3)) == []  # 1 + 4/9 - 4/81 is not a square


def test_minus_r_gives_isomorphic_curves():
    for _, pt in e1_ladder(8):
        r = point_to_r(pt)
        if r in (0, 1, -1):
            continue
        for tr_pos, tr_neg in zip(r_to_triples(r), r_to_triples(-r)):
            assert is_isomorphic_over_Q(induced_curve(tr_pos), induced_curve(tr_neg))


def test_scan_counts():
    assert candidates(scan(5)) == []
    assert [rec.n for rec in candidates(scan(6))] == [6]
    found = candidates(scan(11))
    assert [rec.n for rec in found] == [6, 11]
    assert found[0].r == R6 and found[0].triple.as_set() == frozenset(TRIPLE_6P)
    assert found[1].r == R11 and found[1].triple.as_set() == frozenset(TRIPLE_11P)


def test_scan_record_invariants():
    records = scan(11, verbose=True)
    assert [rec.n for rec in records if rec.skipped] == [1]
    for rec in records:
        if rec.skipped:
            continue
        assert validate(*rec.triple.elements) == rec.triple
        assert rec.s_order == 4 and rec.torsion is TorsionClass.Z2xZ8
        assert lemma_4S_factors(rec.triple)[0] == 0
        assert rec.all_positive == (rec.n in (6, 11))


def test_scan_first_record_is_degenerate_skip():
    (rec,) = scan(1)
    assert rec.skipped and rec.r == 1 and "degenerate" in rec.skip_reason


def test_record_json_schema_roundtrip():
    for rec in scan(11, verbose=True):
        data = json.loads(json.dumps(rec.to_json()))
        assert tuple(data) == RECORD_FIELDS
        assert CandidateRecord.from_json(data) == rec


def test_stream_resume(tmp_path):
    path = tmp_path / "cands.jsonl"
    stream = RecordStream(path)
    first = scan(4, stream=stream)
    assert stream.last_completed() == 4
    # simulate a torn write at the end of the file
    with open(path, "a") as fh:
        fh.write('{"n": 5, "r": "12')
    resumed = scan(11, stream=RecordStream(path))
    assert resumed[: len(first)] == first
    assert [rec.to_json() for rec in resumed] == [rec.to_json() for rec in scan(11)]
    lines = path.read_text().splitlines()
    assert [json.loads(line)["n"] for line in lines] == list(range(1, 12))


def test_scan_parallel_matches_serial():
    assert scan(11, workers=3) == scan(11)


def test_verify_family_T():
    curve_11 = induced_curve(validate(*TRIPLE_11P))
    assert verify_family_T(curve_11, T_11P)
    assert not verify_family_T(curve_11, 2)
    assert verify_family_T(induced_curve(validate(F(4, 3), F(-3, 4), F(7, 12))), 2)
