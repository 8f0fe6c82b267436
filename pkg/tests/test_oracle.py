from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from besselprod.core import FamilyId, make_params
from besselprod.errors import LengthMismatch, NonzeroConstantTerm
from besselprod.exactnum import ExactComplex
from besselprod.oracle import (
    PowerSeries,
    bessel_core,
    cauchy_product,
    h_series,
    oracle_coeffs,
    series_exp,
)

EC = ExactComplex.coerce


def ec_series(*vals):
    return PowerSeries(tuple(EC(v) for v in vals))


def test_bessel_core_examples():
    nu = ExactComplex(F(1, 7))
    core = bessel_core("J", nu, 2)
    assert core[2] == -1 / (4 * (nu + 1))
    core_i = bessel_core("I", nu, 4)
    assert core_i[4] == 1 / (32 * (nu + 1) * (nu + 2))
    core0 = bessel_core("J", ExactComplex(0), 4)
    assert list(core0.coeffs) == [EC(1), EC(0), EC(F(-1, 4)), EC(0), EC(F(1, 64))]


def test_bessel_core_j_i_relation():
    nu = ExactComplex(F(2, 5))
    j = bessel_core("J", nu, 24)
    i = bessel_core("I", nu, 24)
    for n in range(0, 25, 2):
        assert j[n] == (-1) ** (n // 2) * i[n]
    for n in range(1, 25, 2):
        assert j[n].is_zero() and i[n].is_zero()


def test_h_series_examples():
    params = make_params(nu=0, p=ExactComplex(F(1, 2)), exact=True)
    arcsin5 = h_series("arcsin", params, 5)
    assert arcsin5[5] == 3 * params.p ** 5 / 40

    arccos0 = h_series("arccos", params, 0)
    assert arccos0[0] == ExactComplex(0, 0, F(1, 2))  # pi/2

    one = make_params(nu=0, p=1, exact=True)
    ea = h_series("exp_arctan", one, 3)
    assert list(ea.coeffs) == [EC(1), EC(-1), EC(F(1, 2)), EC(F(1, 6))]


def test_h_series_parity():
    params = make_params(nu=0, p=ExactComplex(F(2, 3)), exact=True)
    for kind, zero_parity in (("sin", 0), ("sinh", 0), ("arcsin", 0), ("cos", 1), ("cosh", 1)):
        s = h_series(kind, params, 12)
        for n in range(13):
            if n % 2 == zero_parity:
                assert s[n].is_zero(), (kind, n)
    arccos = h_series("arccos", params, 12)
    for n in range(2, 13, 2):
        assert arccos[n].is_zero()


def test_series_exp_examples():
    f = series_exp(ec_series(0, 1, 0, 0, 0))
    assert list(f.coeffs) == [EC(1), EC(1), EC(F(1, 2)), EC(F(1, 6)), EC(F(1, 24))]
    f0 = series_exp(ec_series(0, 0, 0))
    assert list(f0.coeffs) == [EC(1), EC(0), EC(0)]
    with pytest.raises(NonzeroConstantTerm):
        series_exp(ec_series(1, 1))


def test_series_exp_of_neg_arctan_matches_factor_seed():
    one = make_params(nu=0, p=1, exact=True)
    ea = h_series("exp_arctan", one, 2)
    assert ea[2] == EC(F(1, 2))


def test_cauchy_product_examples():
    a = ec_series(1, 1, 0)
    b = ec_series(1, -1, 0)
    assert list(cauchy_product(a, b, 2).coeffs) == [EC(1), EC(0), EC(-1)]

    unit = ec_series(1, 0, 0, 0)
    other = ec_series(2, F(1, 3), -4, 5)
    assert cauchy_product(unit, other, 3).coeffs == other.coeffs

    params = make_params(nu=0, p=1, exact=True)
    conv = cauchy_product(h_series("exp", params, 3), bessel_core("J", params.nu, 3), 3)
    assert conv[3] == EC(F(-1, 12))

    with pytest.raises(LengthMismatch):
        cauchy_product(ec_series(1), ec_series(1, 2), 1)


def test_oracle_coeffs_examples():
    params = make_params(nu=0, p=1, exact=True)
    seq = oracle_coeffs(FamilyId("exp", "J"), params, 3)
    assert [c for c in seq.coeffs] == [EC(1), EC(1), EC(F(1, 4)), EC(F(-1, 12))]

    pr = make_params(nu=F(1, 3), p=F(2, 7), exact=True)
    sin_seq = oracle_coeffs(FamilyId("sin", "J"), pr, 20)
    for n in range(0, 21, 2):
        assert sin_seq[n].is_zero()

    arc = oracle_coeffs(FamilyId("arcsin", "J"), pr, 3)
    assert arc[3] == pr.p ** 3 / 6 - pr.p / (4 * (pr.nu + 1))


small_rationals = st.fractions(min_value=-6, max_value=6, max_denominator=4)


@settings(max_examples=20, deadline=None)
@given(st.lists(small_rationals, min_size=3, max_size=5),
       st.lists(small_rationals, min_size=3, max_size=5))
def test_series_exp_is_multiplicative(g1, g2):
    n = min(len(g1), len(g2)) - 1
    a = PowerSeries(tuple(EC(0 if i == 0 else v) for i, v in enumerate(g1)))
    b = PowerSeries(tuple(EC(0 if i == 0 else v) for i, v in enumerate(g2)))
    lhs = series_exp(PowerSeries(tuple(x + y for x, y in zip(a.coeffs, b.coeffs))))
    rhs = cauchy_product(series_exp(a), series_exp(b), n)
    assert all(lhs[k] == rhs[k] for k in range(n + 1))


@settings(max_examples=20, deadline=None)
@given(st.lists(small_rationals, min_size=4, max_size=4),
       st.lists(small_rationals, min_size=4, max_size=4),
       st.lists(small_rationals, min_size=4, max_size=4))
def test_cauchy_product_bilinear_commutative(xs, ys, zs):
    a = PowerSeries(tuple(EC(v) for v in xs))
    b = PowerSeries(tuple(EC(v) for v in ys))
    c = PowerSeries(tuple(EC(v) for v in zs))
    ab = cauchy_product(a, b, 3)
    ba = cauchy_product(b, a, 3)
    assert ab.coeffs == ba.coeffs
    a_plus_c = PowerSeries(tuple(x + y for x, y in zip(a.coeffs, c.coeffs)))
    lhs = cauchy_product(a_plus_c, b, 3)
    rhs = [x + y for x, y in zip(ab.coeffs, cauchy_product(c, b, 3).coeffs)]
    assert list(lhs.coeffs) == rhs


class Counting:
    """Scalar wrapper counting multiplications (duck-typed into the oracle)."""

    mults = 0

    def __init__(self, v):
        self.v = v

    def __mul__(self, other):
        Counting.mults += 1
        return Counting(self.v * other.v)

    def __add__(self, other):
        o = other.v if isinstance(other, Counting) else other
        return Counting(self.v + o)

    __radd__ = __add__


def test_convolution_cost_is_quadratic():
    N = 30
    a = PowerSeries(tuple(Counting(1) for _ in range(N + 1)))
    b = PowerSeries(tuple(Counting(2) for _ in range(N + 1)))
    Counting.mults = 0
    cauchy_product(a, b, N)
    assert Counting.mults == (N + 1) * (N + 2) // 2
