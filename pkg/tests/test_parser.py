import pytest
from gmpy2 import mpq

from polarinv.family import FamilySpec, parse_family
from polarinv.parser import BadExponent, ParseError, UnknownIdentifier, parse_polynomial
from polarinv.poly import Polynomial, VarSet, format_polynomial

from conftest import FIXTURES

XY = VarSet(("x", "y"))
ABC = VarSet(("a", "b", "c"))


def test_x_plus_x2y():
    p = parse_polynomial("x + x^2*y", XY)
    assert p == Polynomial(XY, {(1, 0): 1, (2, 1): 1})


def test_identity_is_zero():
    assert parse_polynomial("(x+y)^2 - (x^2+2*x*y+y^2)", XY).is_zero()


def test_rational_literals():
    p = parse_polynomial("1/2*x - 3/4", XY)
    assert p == Polynomial(XY, {(1, 0): mpq(1, 2), (0, 0): mpq(-3, 4)})


def test_precedence():
    a, b, c = (Polynomial.variable(ABC, n) for n in "abc")
    assert parse_polynomial("a+b*c^2", ABC) == a + b * c**2


def test_unary_minus_looser_than_power():
    assert parse_polynomial("-x^2", XY) == -(Polynomial.variable(XY, "x") ** 2)
    assert parse_polynomial("2*-x", XY) == Polynomial.variable(XY, "x").scale(-2)


@pytest.mark.parametrize("text,exc", [
    ("x +", ParseError),
    ("x y", ParseError),
    ("2x", ParseError),
    ("x / 2", ParseError),
    ("w + 1", UnknownIdentifier),
    ("x^y", BadExponent),
    ("x^-1", BadExponent),
    ("1/0", ParseError),
    ("", ParseError),
    ("x + $", ParseError),
])
def test_errors(text, exc):
    with pytest.raises(exc):
        parse_polynomial(text, XY)


def test_error_position():
    with pytest.raises(ParseError) as info:
        parse_polynomial("x +\n  * y", XY)
    assert (info.value.line, info.value.column) == (2, 3)


@pytest.mark.parametrize("text", [
    "x + x^2*y", "(x-1)^3*y - 7/3", "-x^2 - 1/2*y + 5", "x*y*(x+y)^2 - 11/13*x^4", "0",
] + [v[0] for v in FIXTURES.values()])
def test_roundtrip(text):
    vs = VarSet(("x", "y", "z", "x1", "x2"))
    p = parse_polynomial(text, vs)
    assert parse_polynomial(format_polynomial(p), vs) == p


def test_family_fiber_mode():
    fam = parse_family(FamilySpec("x + x^2*y", ("x", "y"), "t", "fiber"))
    assert format_polynomial(fam.F) == format_polynomial(
        parse_polynomial("x+x^2*y-t", VarSet.family("t", ("x", "y"))))
    assert fam.n == 2 and fam.d == 3


def test_family_general_mode():
    fam = parse_family(FamilySpec("x^2+y^2-t", ("x", "y"), "t", "general"))
    assert fam.F == parse_polynomial("x^2+y^2-t", VarSet.family("t", ("x", "y")))


def test_family_three_variables():
    fam = parse_family(FamilySpec("x + x^2*y*z", ("x", "y", "z"), "t", "fiber"))
    assert fam.F == parse_polynomial("x+x^2*y*z-t", VarSet.family("t", ("x", "y", "z")))
    assert fam.d == 4


def test_parameter_in_fiber_expression():
    with pytest.raises(ValueError, match="parameter"):
        parse_family(FamilySpec("x + t", ("x", "y"), "t", "fiber"))


def test_needs_space_variable():
    with pytest.raises(ValueError):
        FamilySpec("x", (), "t")


def test_parameter_clash():
    with pytest.raises(ValueError):
        FamilySpec("x", ("x", "t"), "t")
