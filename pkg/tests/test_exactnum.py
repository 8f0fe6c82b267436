from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from besselprod.errors import PiArithmeticError
from besselprod.exactnum import ExactComplex
from besselprod.numerics import format_complex, parse_complex, parse_scalar

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)
gaussians = st.builds(ExactComplex, rationals, rationals)


def test_basic_arithmetic():
    a = ExactComplex(F(1, 3), F(-2, 5))
    b = ExactComplex(2, F(1, 2))
    assert a + b == ExactComplex(F(7, 3), F(1, 10))
    assert a * b == ExactComplex(F(1, 3) * 2 + F(2, 5) * F(1, 2), F(1, 6) - F(4, 5))
    assert (a / b) * b == a
    assert -a + a == ExactComplex(0)
    assert a ** 3 == a * a * a


def test_int_and_fraction_mixing():
    a = ExactComplex(F(1, 2))
    assert 1 + a == ExactComplex(F(3, 2))
    assert 2 * a == ExactComplex(1)
    assert a / 2 == ExactComplex(F(1, 4))
    assert 1 / ExactComplex(0, 1) == ExactComplex(0, -1)


def test_float_rejected():
    with pytest.raises(TypeError):
        ExactComplex(0.5)
    assert ExactComplex(1).__add__(0.5) is NotImplemented


def test_pi_carrying():
    half_pi = ExactComplex(0, 0, F(1, 2))
    assert half_pi.has_pi
    assert (half_pi * 2).pi_re == 1
    assert (half_pi / 2).pi_re == F(1, 4)
    assert (half_pi + ExactComplex(1)).rational_part() == ExactComplex(1)
    with pytest.raises(PiArithmeticError):
        half_pi * half_pi
    with pytest.raises(PiArithmeticError):
        ExactComplex(1) / half_pi


def test_zero_division():
    with pytest.raises(ZeroDivisionError):
        ExactComplex(1) / ExactComplex(0)


@settings(max_examples=40, deadline=None)
@given(gaussians, gaussians, gaussians)
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert a + (b + c) == (a + b) + c
    if not b.is_zero():
        assert (a / b) * b == a


@settings(max_examples=40, deadline=None)
@given(rationals, rationals, rationals, rationals)
def test_scalar_text_roundtrip(re, im, pre, pim):
    v = ExactComplex(re, im, pre, pim)
    text = format_complex(v, exact=True)
    assert parse_scalar(text, exact=True, bits=64) == v


def test_parse_complex_forms():
    assert parse_complex("3/7") == (F(3, 7), 0)
    assert parse_complex("1.5") == (F(3, 2), 0)
    assert parse_complex("1/2+1/3i") == (F(1, 2), F(1, 3))
    assert parse_complex("-0.25-2i") == (F(-1, 4), -2)
    assert parse_complex("2e-3") == (F(1, 500), 0)
    with pytest.raises(ValueError):
        parse_complex("i+1")


def test_pi_string_forms():
    v = ExactComplex(0, 0, F(-1, 16))
    assert format_complex(v, exact=True) == "(-1/16)*pi"
    mixed = ExactComplex(F(1, 2), 0, F(-1, 16))
    assert format_complex(mixed, exact=True) == "1/2+(-1/16)*pi"
    assert parse_scalar("1/2+(-1/16)*pi", exact=True, bits=64) == mixed


def test_immutable():
    v = ExactComplex(F(1, 2))
    with pytest.raises(AttributeError):
        v.re = F(1, 3)
