"""Expression grammar, error reporting, and print/parse round-trips."""

import random
from fractions import Fraction

import pytest

from helpers import rand_poly
from polymat.parsing import ParseError, parse_polynomial
from polymat.poly import Polynomial


def test_worked_expression():
    p = parse_polynomial("z1^2 - z1*z2", 3)
    assert p.terms == {(2, 0, 0): Fraction(1), (1, 1, 0): Fraction(-1)}


def test_zero():
    assert parse_polynomial("0", 3).is_zero
    assert parse_polynomial("z1 - z1", 3).is_zero


def test_rationals_and_unary_minus():
    p = parse_polynomial("-(3/2)*z2^3 + z1", 3)
    assert p.terms == {(0, 3, 0): Fraction(-3, 2), (1, 0, 0): Fraction(1)}
    q = parse_polynomial("-3/2*z2^3 + z1", 3)
    assert p == q


def test_precedence():
    # ^ binds tighter than unary minus, which binds tighter than *
    assert parse_polynomial("-z1^2", 3) == -(Polynomial.variable(3, 0) ** 2)
    assert parse_polynomial("2*z1 + 3*z2*z3^2", 3) == \
        parse_polynomial("z1 + z1 + 3*(z3^2*z2)", 3)
    assert parse_polynomial("(z1 + z2)^2", 3) == \
        parse_polynomial("z1^2 + 2*z1*z2 + z2^2", 3)


def test_implicit_multiplication_rejected():
    with pytest.raises(ParseError):
        parse_polynomial("z1 z2", 3)
    with pytest.raises(ParseError):
        parse_polynomial("2 z1", 3)


def test_unknown_variable():
    with pytest.raises(ParseError) as info:
        parse_polynomial("z1 + z9", 3)
    assert "z9" in str(info.value)
    assert info.value.column == 6


def test_error_positions():
    with pytest.raises(ParseError) as info:
        parse_polynomial("z1 + ", 3)
    assert info.value.line == 1
    assert info.value.column == 6
    with pytest.raises(ParseError) as info:
        parse_polynomial("z1 +\n* z2", 3)
    assert info.value.line == 2
    assert info.value.column == 1


def test_exponent_overflow():
    with pytest.raises(ParseError) as info:
        parse_polynomial("z1^10000000", 3)
    assert "overflow" in str(info.value)


def test_zero_denominator():
    with pytest.raises(ParseError):
        parse_polynomial("1/0", 3)


def test_bad_tokens():
    for text in ("z1 & z2", "z", "()", "z1^z2", "z1 * * z2"):
        with pytest.raises(ParseError):
            parse_polynomial(text, 3)


def test_round_trip_random():
    rng = random.Random(2024)
    for _ in range(200):
        p = rand_poly(rng, max_deg=4, max_terms=5, coeff_bound=9)
        if rng.random() < 0.3:
            p = p * Fraction(rng.randint(1, 7), rng.randint(2, 9))
        again = parse_polynomial(str(p), 3)
        assert again == p and again.terms == p.terms


def test_round_trip_worked(ex1, ex2, eq_ex):
    for data in (ex1, ex2, eq_ex):
        for row in data["F"].entries:
            for p in row:
                assert parse_polynomial(str(p), 3) == p
