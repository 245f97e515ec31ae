from fractions import Fraction as F
from math import gcd

import pytest
from hypothesis import given, strategies as st

from diophantine_curves.qarith import (
    NotASquareError,
    exact_root,
    format_rat,
    int_iroot,
    int_isqrt,
    is_perfect_square,
    parse_rat,
    rat,
    sqrt_exact,
)

rationals = st.fractions(max_denominator=10**12).filter(lambda x: abs(x.numerator) < 10**30)


@pytest.mark.parametrize(
    "num, den, expected",
    [(6, 4, F(3, 2)), (3, -9, F(-1, 3)), (0, 7, F(0, 1))],
)
def test_rat_canonical(num, den, expected):
    x = rat(num, den)
    assert (x.numerator, x.denominator) == (expected.numerator, expected.denominator)


def test_rat_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        rat(1, 0)


@pytest.mark.parametrize("x, expected", [(1 * 3 + 1, True), (2, False), (0, True), (F(-4), False)])
def test_is_perfect_square(x, expected):
    assert is_perfect_square(x) is expected


@pytest.mark.parametrize("x, root", [(F(121, 9), F(11, 3)), (3 * 8 + 1, 5)])
def test_sqrt_exact(x, root):
    assert sqrt_exact(x) == root


@pytest.mark.parametrize("x", [2, F(-1), F(1, 2)])
def test_sqrt_exact_rejects(x):
    with pytest.raises(NotASquareError):
        sqrt_exact(x)


@pytest.mark.parametrize("n, root", [(0, 0), (24, 4), (25, 5)])
def test_int_isqrt(n, root):
    assert int_isqrt(n) == root


def test_int_isqrt_negative():
    with pytest.raises(ValueError):
        int_isqrt(-1)


@given(st.integers(min_value=0, max_value=10**80))
def test_int_isqrt_bracket(n):
    k = int_isqrt(n)
    assert k * k <= n < (k + 1) ** 2


@given(st.integers(min_value=0, max_value=10**60), st.integers(min_value=1, max_value=7))
def test_int_iroot_bracket(n, k):
    root = int_iroot(n, k)
    assert root**k <= n < (root + 1) ** k


@given(rationals)
def test_square_roundtrip(q):
    assert is_perfect_square(q * q)
    assert sqrt_exact(q * q) == abs(q)


@given(rationals, st.sampled_from([3, 4, 6]))
def test_exact_root_of_power(q, k):
    root = exact_root(q**k, k)
    assert root is not None and root**k == q**k


@given(rationals, rationals, rationals)
def test_field_axioms_and_canonical_form(x, y, z):
    for v in (x + y, x - y, x * y):
        assert v.denominator > 0 and gcd(abs(v.numerator), v.denominator) == 1
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    if y:
        assert (x / y) * y == x


@given(rationals)
def test_text_roundtrip(q):
    assert parse_rat(format_rat(q)) == q


def test_format():
    assert format_rat(F(-1, 3)) == "-1/3"
    assert format_rat(F(25)) == "25"


@pytest.mark.parametrize("text", ["0.5", "1/0", "abc", "1/2/3"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        parse_rat(text)
