import random
from fractions import Fraction

import pytest

from mhopf.scalar import I, DivisionByZero, arith, conj, format_scalar, gaussian, parse_scalar


def test_rational_arithmetic():
    assert arith("add", Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert arith("div", 1, 3) == Fraction(1, 3)
    assert arith("sub", 1, 1) == 0


def test_i_squared():
    assert arith("mul", I, I) == -1
    assert isinstance(I * I, int)


def test_gaussian_collapses_to_rational():
    assert gaussian(Fraction(3, 2), 0) == Fraction(3, 2)
    assert (1 + I) + (1 - I) == 2


def test_conjugate():
    assert conj(Fraction(3, 4)) == Fraction(3, 4)
    assert conj(1 + 2 * I) == 1 - 2 * I


def test_conjugate_involution_random():
    rng = random.Random(0)
    for _ in range(100):
        x = gaussian(Fraction(rng.randint(-9, 9), rng.randint(1, 9)), Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
        assert conj(conj(x)) == x


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        arith("div", 1, 0)


@pytest.mark.parametrize("text, value", [
    ("1/2", Fraction(1, 2)),
    ("-3", -3),
    ("1/2+1/3i", gaussian(Fraction(1, 2), Fraction(1, 3))),
    ("0-1i", -I),
    ("i", I),
])
def test_parse(text, value):
    assert parse_scalar(text) == value


def test_format_round_trip():
    for x in (Fraction(-7, 3), 5, gaussian(Fraction(1, 2), -2), I):
        assert parse_scalar(format_scalar(x)) == x


def test_parse_rejects_garbage():
    for bad in ("1.5", "x", "", True, 1.5):
        with pytest.raises(ValueError):
            parse_scalar(bad)
