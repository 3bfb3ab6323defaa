import random
from fractions import Fraction

import pytest

from ovalkit import Polynomial, parse_polynomial, render_polynomial
from ovalkit.errors import ParseError
from ovalkit.parsing import parse_rational_function, render_rational_function


def test_square_polynomial_golden(square_poly):
    p = parse_polynomial("x^2*y^2 - x^2*y - x*y^2 + x*y", ["x", "y"])
    assert p == square_poly
    assert len(p.terms) == 4


def test_zero():
    assert parse_polynomial("0", ["x"]).is_zero
    assert render_polynomial(Polynomial.zero(("x",))) == "0"


def test_factored_equals_expanded(quartic_poly):
    assert parse_polynomial("(y^2-x)^2 - x^3", ["x", "y"]) == quartic_poly


def test_render_quartic_golden(quartic_poly):
    assert render_polynomial(quartic_poly) == "y^4 - 2*x*y^2 - x^3 + x^2"


def test_roundtrip_random():
    rng = random.Random(23)
    for _ in range(40):
        terms = {}
        for _ in range(rng.randint(1, 6)):
            exps = (rng.randint(0, 4), rng.randint(0, 4))
            terms[exps] = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        p = Polynomial(("x", "y"), terms)
        assert parse_polynomial(render_polynomial(p), ["x", "y"]) == p


def test_whitespace_and_parens_invariance():
    base = parse_polynomial("x^2-3*x+1/2", ["x"])
    assert parse_polynomial("  x^2 - 3 * x + 1/2 ", ["x"]) == base
    assert parse_polynomial("((x^2)) - ((3*x)) + ((1/2))", ["x"]) == base
    assert parse_polynomial("(x^2 - 3*x) + 1/2", ["x"]) == base


def test_random_products_expand():
    rng = random.Random(29)
    for _ in range(15):
        a = rng.randint(-4, 4)
        b = rng.randint(-4, 4)
        c = rng.randint(1, 4)
        text = f"({a} + x)*({b} - {c}*x)"
        lhs = parse_polynomial(text, ["x"])
        x = Polynomial.variable("x")
        assert lhs == (x + a) * (Polynomial.constant(b, ("x",)) - c * x)


def test_implicit_multiplication_rejected():
    with pytest.raises(ParseError):
        parse_polynomial("2x", ["x"])


def test_undeclared_variable():
    with pytest.raises(ParseError) as err:
        parse_polynomial("x + z", ["x", "y"])
    assert "z" in str(err.value)
    assert err.value.position >= 0


def test_bad_exponents():
    with pytest.raises(ParseError):
        parse_polynomial("x^-2", ["x"])
    with pytest.raises(ParseError):
        parse_polynomial("x^(2)", ["x"])
    with pytest.raises(ParseError):
        parse_polynomial("x^y", ["x", "y"])


def test_empty_expression():
    with pytest.raises(ParseError):
        parse_polynomial("   ", ["x"])


def test_syntax_error_position():
    with pytest.raises(ParseError) as err:
        parse_polynomial("x + * 2", ["x"])
    assert err.value.position == 4


def test_division_rejected_in_polynomial_mode():
    with pytest.raises(ParseError):
        parse_polynomial("x/(1-x)", ["x"])
    # but integer literals may form rationals
    assert parse_polynomial("3/4", ["x"]).constant_term() == Fraction(3, 4)


def test_rational_function_examples():
    g = parse_rational_function("3*(1-t)^2*t", "t")
    assert g.is_polynomial
    assert g.num.degree() == 3
    m = parse_rational_function("t/(1-t)", "t")
    assert not m.is_polynomial
    assert m.evaluate(Fraction(1, 2)) == 1
    reduced = parse_rational_function("(t^2-1)/(t-1)", "t")
    assert reduced.is_polynomial and reduced.num.degree() == 1


def test_rational_function_zero_denominator():
    with pytest.raises((ParseError, ZeroDivisionError)):
        parse_rational_function("t/0", "t")
    with pytest.raises((ParseError, ZeroDivisionError)):
        parse_rational_function("t/(t - t)", "t")


def test_render_rational_function():
    m = parse_rational_function("t/(1-t)", "t")
    text = render_rational_function(m)
    again = parse_rational_function(text, "t")
    assert again == m


def test_leading_negative_roundtrip():
    p = parse_polynomial("-x^3 + x", ["x"])
    assert render_polynomial(p) == "-x^3 + x"
    assert parse_polynomial(render_polynomial(p), ["x"]) == p
