from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ncvaluation import QQ, FreeAlgebra, LocalRing, MonomialOrder, ParseError, Poly, PrimeField, format_poly, parse_poly
from ncvaluation.free_algebra import Alphabet

ORDER = MonomialOrder(Alphabet(("X", "Y", "Z")))


def P(text, ring=QQ):
    return parse_poly(text, ORDER, ring)


def test_parse_examples():
    f = P("3/2*X*Y - Y + 1")
    assert f.coeffs == {(0, 1): Fraction(3, 2), (1,): -1, (): 1}
    assert P("-X") == Poly(QQ, ORDER, [((0,), -1)])
    assert P("0").is_zero()
    assert P("X - X").is_zero()
    assert P("2*X*X*Y") == P("2*X^2*Y")
    assert P("  Y *X  ") == P("Y*X")


def test_format_examples():
    assert format_poly(P("1 + Y - 3/2*X*Y")) == "-3/2*X*Y + Y + 1"
    assert format_poly(P("-X*X + Z")) == "-X*X + Z"
    assert format_poly(P("0")) == "0"
    assert format_poly(P("-1/3")) == "-1/3"
    assert str(P("X + 2*Y")) == "2*Y + X"


def test_prime_field_coefficients():
    f = P("1/2*X + 7", PrimeField(5))
    assert f.coeffs == {(0,): 3, (): 2}
    assert P("5*X", PrimeField(5)).is_zero()


@pytest.mark.parametrize(
    "text, column, fragment",
    [
        ("X + ", 5, "expected generator name"),
        ("X + Q", 5, "unknown generator 'Q'"),
        ("3/0*X", 3, "zero denominator"),
        ("X ** Y", 4, "expected generator name"),
        ("X^0", 3, "exponent must be positive"),
        ("X $ Y", 3, "unexpected character"),
        ("2 X", 3, "unexpected 'X'"),
        ("1.5*X", 2, "unexpected character"),
    ],
)
def test_errors_carry_position(text, column, fragment):
    with pytest.raises(ParseError) as info:
        parse_poly(text, ORDER, line=4)
    err = info.value
    assert err.line == 4
    assert err.column == column
    assert fragment in err.message
    assert str(err).startswith(f"line 4, column {column}:")


def test_coefficient_outside_ring():
    with pytest.raises(ParseError, match="not integral"):
        parse_poly("1/3*X", ORDER, LocalRing(3))
    with pytest.raises(ParseError):
        parse_poly("1/5*X", ORDER, PrimeField(5))


words = st.lists(st.integers(0, 2), max_size=4).map(tuple)
coeffs = st.fractions(min_value=-20, max_value=20, max_denominator=9)


@given(st.lists(st.tuples(words, coeffs), max_size=6))
def test_round_trip(terms):
    f = Poly(QQ, ORDER, terms)
    assert parse_poly(format_poly(f), ORDER) == f


@given(st.lists(st.tuples(words, st.integers(0, 6)), max_size=6))
def test_round_trip_prime_field(terms):
    F7 = PrimeField(7)
    f = Poly(F7, ORDER, terms)
    assert parse_poly(format_poly(f), ORDER, F7) == f


def test_algebra_call_parses_strings():
    F = FreeAlgebra.create("a b")
    assert F("a*b - b") == F.gen("a") * F.gen("b") - F.gen("b")
