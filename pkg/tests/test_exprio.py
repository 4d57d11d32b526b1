from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import bpolys
from simplederiv.exprio import (
    MAX_EXPONENT,
    PolyParseError,
    format_poly,
    parse_poly,
    parse_rational,
    parse_upoly,
)
from simplederiv.qpoly import BPoly, UPoly, X, Y


def test_parse_examples():
    assert parse_poly("x^2*y - 3/2") == BPoly({(2, 1): 1, (0, 0): Fraction(-3, 2)})
    assert parse_poly("(x+y)^2") == X * X + 2 * X * Y + Y * Y
    assert parse_poly("-x^2") == -(X * X)
    assert parse_poly("  2 * x -  - y ") == 2 * X + Y
    assert parse_poly("-(x - 1)*3") == 3 - 3 * X
    assert parse_poly("1 / 2") == BPoly.const(Fraction(1, 2))
    assert parse_poly("x^0") == BPoly.const(1)


@pytest.mark.parametrize(
    "text, position",
    [
        ("x^-1", 3),
        ("2x", 2),
        ("x +", 4),
        ("", 1),
        ("x ^ y", 5),
        ("(x + y", 7),
        ("x + z", 5),
        ("1/0", 3),
        ("x*/2", 3),
        ("3/x", 3),
        ("x)", 2),
        (f"x^{MAX_EXPONENT + 1}", 3),
    ],
)
def test_errors_carry_position(text, position):
    with pytest.raises(PolyParseError) as info:
        parse_poly(text)
    assert info.value.position == position
    assert f"position {position}" in str(info.value)


def test_format_examples():
    assert format_poly(X * X + 2 * X * Y + Y * Y) == "x^2 + 2*x*y + y^2"
    assert format_poly(BPoly()) == "0"
    assert format_poly(BPoly({(1, 1): Fraction(-1, 2), (0, 0): 3})) == "-1/2*x*y + 3"
    assert format_poly(BPoly({(0, 2): -1, (3, 0): 1})) == "x^3 - y^2"
    assert format_poly(BPoly.const(Fraction(-7, 3))) == "-7/3"


def test_upoly_and_rational_helpers():
    assert parse_upoly("x^2 + 1") == UPoly([1, 0, 1])
    with pytest.raises(PolyParseError):
        parse_upoly("x + y")
    assert parse_rational("-3/2") == Fraction(-3, 2)
    with pytest.raises(PolyParseError):
        parse_rational("x")


@settings(max_examples=500)
@given(bpolys(8, 8))
def test_parse_inverts_format(f):
    assert parse_poly(format_poly(f)) == f


@settings(max_examples=500)
@given(bpolys(8, 8))
def test_format_of_parse_is_identity_on_canonical_strings(f):
    s = format_poly(f)
    assert format_poly(parse_poly(s)) == s


@pytest.mark.parametrize("text", ["(x+1)*(x-1)", "y*x*2/3*x", "-(-(x))", "x^2*y + y*x^2", "3 - 3"])
def test_canonical_convergence_in_one_pass(text):
    once = format_poly(parse_poly(text))
    assert format_poly(parse_poly(once)) == once
