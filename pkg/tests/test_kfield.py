from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from propcirc.kfield import (ONE, ZERO, S, Scalar, ScalarError, format_scalar, parse_scalar,
                             poly_divmod, poly_gcd, poly_mul, scalar_normalize)

from oracles import from_sympy, s as sym_s, to_sympy

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
polys = st.lists(rationals, max_size=4)


@st.composite
def scalars(draw):
    num = draw(polys)
    den = draw(polys.filter(lambda p: any(p)))
    return Scalar(num, den)


nonzero = scalars().filter(bool)


def test_add_fractions():
    assert Scalar.coerce(Fraction(1, 2)) + Fraction(1, 3) == Scalar.coerce(Fraction(5, 6))


def test_inverse_cancellation():
    assert (S / (S + 1)) * ((S + 1) / S) == ONE


def test_capacitor_impedance():
    # sC (phi2 - phi1) = I1 with C = 2 gives (phi2 - phi1) / I1 = 1 / (2s)
    z = ONE / (2 * S)
    assert z == Scalar((1,), (0, 2))
    assert format_scalar(z) == "(1/2)/(s)"


@pytest.mark.parametrize("num, den, expected", [
    ((2, 2), (4, 4), Scalar.coerce(Fraction(1, 2))),
    ((), (1, 0, 0, 1), ZERO),
    ((-1, 0, 1), (-1, 1), S + 1),
])
def test_normalize_examples(num, den, expected):
    got = scalar_normalize(num, den)
    assert got == expected
    assert got.num == expected.num and got.den == expected.den


def test_normalize_zero_denominator():
    with pytest.raises(ScalarError, match="zero denominator"):
        scalar_normalize((1,), (0, 0))


@settings(deadline=None)
@given(polys, polys.filter(any))
def test_normalize_matches_sympy(num, den):
    x = Scalar(num, den)
    ref = sympy.cancel(sum(sympy.Rational(c.numerator, c.denominator) * sym_s**k for k, c in enumerate(num))
                       / sum(sympy.Rational(c.numerator, c.denominator) * sym_s**k for k, c in enumerate(den)))
    n, d = sympy.fraction(ref)
    lead = sympy.Poly(d, sym_s).LC()
    assert x.den[-1] == 1
    assert to_sympy(x).equals(ref)
    assert sympy.Poly(to_sympy(Scalar(x.num, (1,))), sym_s) == sympy.Poly(sympy.expand(n / lead), sym_s)


@settings(deadline=None)
@given(polys.filter(any), polys.filter(any))
def test_gcd_divides_both(a, b):
    a, b = tuple(a), tuple(b)
    g = poly_gcd(a, b)
    assert g[-1] == 1
    for p in (a, b):
        while p and p[-1] == 0:
            p = p[:-1]
        assert poly_divmod(p, g)[1] == ()
    ref = sympy.gcd(*(sum(sympy.Rational(c.numerator, c.denominator) * sym_s**k for k, c in enumerate(p))
                      for p in (a, b)))
    assert sympy.degree(ref, sym_s) == len(g) - 1


@given(polys, polys.filter(any))
def test_divmod_reconstructs(a, b):
    q, r = poly_divmod(tuple(a), tuple(b))
    assert Scalar(poly_mul(q, tuple(b))) + Scalar(r) == Scalar(a)


@settings(max_examples=60)
@given(scalars(), scalars(), scalars())
def test_field_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a and a * ONE == a
    assert a - a == ZERO


@given(nonzero)
def test_inverse(a):
    assert a * a.inverse() == ONE
    assert ONE / a == a.inverse()


@settings(max_examples=40, deadline=None)
@given(scalars(), scalars())
def test_arithmetic_matches_sympy(a, b):
    assert to_sympy(a * b + a).equals(to_sympy(a) * to_sympy(b) + to_sympy(a))
    assert from_sympy(to_sympy(a) - to_sympy(b)) == a - b


def test_division_by_zero():
    with pytest.raises(ScalarError, match="division by zero"):
        S / ZERO
    with pytest.raises(ScalarError):
        ZERO.inverse()


@given(scalars(), scalars())
def test_hash_consistent_with_equality(a, b):
    if a == b:
        assert hash(a) == hash(b)
    assert hash(Scalar(a.num, a.den)) == hash(a)


def test_equality_with_plain_numbers():
    assert Scalar.coerce(3) == 3
    assert Scalar.coerce(Fraction(1, 2)) == Fraction(1, 2)
    assert S != 0


@pytest.mark.parametrize("text, expected", [
    ("3/4", Scalar.coerce(Fraction(3, 4))),
    ("(s+1)/(s)", (S + 1) / S),
    ("s^2+1/2", S * S + Fraction(1, 2)),
    ("-s", -S),
    ("-3/2*s^3 - 2", Scalar.coerce(Fraction(-3, 2)) * S * S * S - 2),
    ("( 2*s + 2 ) / ( 4*s + 4 )", Scalar.coerce(Fraction(1, 2))),
])
def test_parse(text, expected):
    assert parse_scalar(text) == expected


@pytest.mark.parametrize("text", ["3/4", "(s+1)/(s)", "s^2+1/2", "-1*s", "0", "(1/2)/(s)"])
def test_format_round_trip(text):
    assert format_scalar(parse_scalar(text)) == text


def test_polynomial_has_unit_denominator():
    x = parse_scalar("s^2+1/2")
    assert x.den == (1,)
    assert x.num == (Fraction(1, 2), 0, 1)


@given(scalars())
def test_round_trip_any(x):
    assert parse_scalar(format_scalar(x)) == x


@pytest.mark.parametrize("text, position", [
    ("3/0", 2),
    ("s+x", 2),
    ("(s+1)/(0)", 7),
    ("s^", 2),
    ("(s+1)", 5),
    ("1 2", 2),
])
def test_parse_errors_carry_position(text, position):
    with pytest.raises(ScalarError, match=f"position {position}"):
        parse_scalar(text)


def test_parse_rejects_non_text():
    with pytest.raises(ScalarError):
        parse_scalar(3)


def test_constant_access():
    assert Scalar.coerce(Fraction(2, 3)).constant() == Fraction(2, 3)
    assert not S.is_constant()
    with pytest.raises(ValueError):
        S.constant()


@given(scalars())
def test_normalize_idempotent(x):
    again = scalar_normalize(x.num, x.den)
    assert (again.num, again.den) == (x.num, x.den)
