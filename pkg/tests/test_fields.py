from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mathieu_kit.errors import BothZero, DivisionByZero, FieldMismatch, ZeroPolynomial
from mathieu_kit.fields import (
    GF,
    QQ,
    Field,
    Poly,
    field_arith,
    poly_ext_gcd,
    poly_gcd,
    poly_split_at_zero,
)

F2 = GF(2)
F5 = GF(5)


def test_characteristic_must_be_prime_or_zero():
    with pytest.raises(ValueError):
        Field(4)
    with pytest.raises(ValueError):
        Field(1)
    assert Field(0) == QQ
    assert GF(7).order == 7


def test_basic_arith_examples():
    assert field_arith(F5, "mul", 2, 3) == 1  # 6 mod 5
    assert field_arith(QQ, "inv", Fraction(2, 3)) == Fraction(3, 2)
    with pytest.raises(DivisionByZero):
        field_arith(F5, "inv", 0)
    with pytest.raises(DivisionByZero):
        field_arith(QQ, "inv", Fraction(0))


def test_field_arith_rejects_foreign_scalars():
    with pytest.raises(FieldMismatch):
        field_arith(F5, "add", 7, 1)  # out of range residue
    with pytest.raises(FieldMismatch):
        field_arith(F5, "add", Fraction(1, 2), 1)
    with pytest.raises(ValueError):
        field_arith(F5, "frobnicate", 1, 1)


def test_scalar_serialization_round_trip():
    assert F5.format(3) == "3"
    assert F5.parse("3") == 3
    assert QQ.format(Fraction(-3, 2)) == "-3/2"
    assert QQ.parse("-3/2") == Fraction(-3, 2)
    assert QQ.format(Fraction(4)) == "4/1"
    assert QQ.parse("4") == Fraction(4)


@given(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4))
def test_field_axioms_f5(a, b, c):
    assert F5.add(F5.add(a, b), c) == F5.add(a, F5.add(b, c))
    assert F5.mul(F5.mul(a, b), c) == F5.mul(a, F5.mul(b, c))
    assert F5.mul(a, F5.add(b, c)) == F5.add(F5.mul(a, b), F5.mul(a, c))
    assert F5.add(a, F5.neg(a)) == 0
    if a != 0:
        assert F5.mul(a, F5.inv(a)) == 1


@given(
    st.fractions(max_denominator=50),
    st.fractions(max_denominator=50),
    st.fractions(max_denominator=50),
)
def test_field_axioms_rationals(a, b, c):
    assert QQ.mul(a, QQ.add(b, c)) == QQ.add(QQ.mul(a, b), QQ.mul(a, c))
    assert QQ.sub(a, a) == 0
    if a != 0:
        assert QQ.mul(a, QQ.inv(a)) == 1


# -- polynomials ----------------------------------------------------------------


def t_poly(field, *ints):
    return Poly.from_ints(field, ints)


def test_poly_normalization_and_degree():
    assert t_poly(F5, 1, 2, 0, 0).coeffs == (1, 2)
    assert Poly.zero(F5).degree == -1
    assert Poly.x(F5).degree == 1
    assert t_poly(F5, 0).is_zero


def test_poly_divmod_exact():
    f = t_poly(F5, 1, 0, 1)  # 1 + t^2
    g = t_poly(F5, 1, 1)  # 1 + t
    q, r = divmod(f, g)
    assert q * g + r == f
    assert r.degree < g.degree


def test_ext_gcd_frozen_examples():
    # gcd(t, t-1) = 1 with 1 = 1*t + (-1)*(t-1)
    t = Poly.x(QQ)
    one = Poly.one(QQ)
    tm1 = t - one
    d, u, v = poly_ext_gcd(t, tm1)
    assert (d, u, v) == (one, one, -one)
    assert u * t + v * tm1 == one

    # gcd(t^2, t-1) = 1 with 1 = t^2 - (t+1)(t-1)
    t2 = t * t
    d, u, v = poly_ext_gcd(t2, tm1)
    assert d == one
    assert u == one
    assert v == -(t + one)
    assert u * t2 + v * tm1 == one

    # gcd(t^2 - t, t) = t
    d, u, v = poly_ext_gcd(t2 - t, t)
    assert d == t
    assert (u, v) == (Poly.zero(QQ), one)
    assert u * (t2 - t) + v * t == t


def test_ext_gcd_both_zero():
    with pytest.raises(BothZero):
        poly_ext_gcd(Poly.zero(F5), Poly.zero(F5))


def test_split_at_zero_examples():
    t = Poly.x(QQ)
    one = Poly.one(QQ)
    assert poly_split_at_zero(t * t - t) == (1, t - one)
    assert poly_split_at_zero(t * t * t) == (3, one)
    assert poly_split_at_zero(t * t * t - t * t) == (2, t - one)
    with pytest.raises(ZeroPolynomial):
        poly_split_at_zero(Poly.zero(QQ))


@st.composite
def f5_polys(draw, max_degree=6):
    coeffs = draw(st.lists(st.integers(0, 4), max_size=max_degree + 1))
    return Poly(F5, coeffs)


@given(f5_polys(), f5_polys())
@settings(max_examples=200)
def test_bezout_identity_random(f, g):
    if f.is_zero and g.is_zero:
        return
    d, u, v = poly_ext_gcd(f, g)
    assert u * f + v * g == d
    assert d.is_monic
    if not f.is_zero:
        assert (f % d).is_zero
    if not g.is_zero:
        assert (g % d).is_zero
    assert poly_gcd(f, g) == d


@given(f5_polys())
def test_split_round_trip_random(f):
    if f.is_zero:
        return
    k, h = poly_split_at_zero(f)
    assert h(0) != 0
    assert h.shift(k) == f


def test_poly_eval_horner():
    f = t_poly(F5, 1, 2, 3)  # 1 + 2t + 3t^2
    assert f(2) == (1 + 4 + 12) % 5
    g = Poly(QQ, [Fraction(1, 2), Fraction(1)])
    assert g(Fraction(3)) == Fraction(7, 2)
