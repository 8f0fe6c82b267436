"""Ground-truth series: elementary factors, Bessel cores, convolution.

Everything here is definitional.  The normalized Bessel core S is the
even series with S(0) = 1 in

    J_nu(z) = z^nu / (2^nu Gamma(nu+1)) * S(z)

whose coefficients follow the ratio rule c_(2n+2) = -+ c_(2n) / (4 (n+1)
(nu+n+1)) (minus for J, plus for I), so no Gamma value is ever computed
and rational orders stay exactly rational.  Product coefficients are the
plain Cauchy convolution of the factor series with the core; this O(N^2)
path is the oracle that the O(N) recurrences are judged against.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from operator import mul

from gmpy2 import mpc

from .core import (
    CoefficientSequence,
    FamilyId,
    NORM_HALF,
    NORM_HALF_I,
    NORM_STANDARD,
    Params,
    validate,
)
from .errors import LengthMismatch, NonzeroConstantTerm
from .exactnum import ExactComplex
from .numerics import EXACT, FLOAT, ScalarDomain, precision


@dataclass(frozen=True)
class PowerSeries:
    """Dense Maclaurin coefficients about 0, no prefactor."""

    coeffs: tuple

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, n):
        return self.coeffs[n]


def _domain_of(scalar, default_bits=None) -> ScalarDomain:
    if isinstance(scalar, (ExactComplex, int, Fraction)):
        return ScalarDomain(EXACT)
    if isinstance(scalar, mpc):
        return ScalarDomain(FLOAT, scalar.precision[0])
    raise TypeError(f"no scalar domain for {type(scalar).__name__}")


def bessel_core(kind: str, nu, N: int) -> PowerSeries:
    """Normalized core series for J (alternating) or I (positive)."""
    if kind not in ("J", "I"):
        raise ValueError(f"Bessel kind must be J or I, got {kind!r}")
    dom = _domain_of(nu)
    sign = 1 if kind == "I" else -1
    nu = dom.of(nu)

    def build():
        out = [dom.zero()] * (N + 1)
        if N >= 0:
            term = dom.one()
            out[0] = term
            for m in range(0, (N - 1) // 2 + 1):
                term = sign * term / (4 * (m + 1) * (nu + m + 1))
                if 2 * m + 2 <= N:
                    out[2 * m + 2] = term
        return PowerSeries(tuple(out))

    if dom.exact:
        return build()
    with precision(dom.bits):
        return build()


def h_series(h_kind: str, params: Params, N: int) -> PowerSeries:
    """Maclaurin series of the auxiliary factor itself.

    The ``*_via_exp`` kinds reuse the series of the function they expand
    (their split into exponential runs is a recurrence-side construction).
    """
    dom = params.domain
    p = params.p
    base = {
        "sinh_via_exp": "sinh",
        "cosh_via_exp": "cosh",
        "sin_via_exp": "sin",
        "cos_via_exp": "cos",
    }.get(h_kind, h_kind)

    def build():
        out = [dom.zero()] * (N + 1)
        if base == "exp":
            term = dom.one()
            out[0] = term
            for n in range(1, N + 1):
                term = term * p / n
                out[n] = term
        elif base in ("sin", "sinh"):
            sign = -1 if base == "sin" else 1
            term = dom.of(p)
            for k in range(0, N + 1):
                idx = 2 * k + 1
                if idx > N:
                    break
                out[idx] = term
                term = sign * term * p * p / ((2 * k + 2) * (2 * k + 3))
        elif base in ("cos", "cosh"):
            sign = -1 if base == "cos" else 1
            term = dom.one()
            for k in range(0, N + 1):
                idx = 2 * k
                if idx > N:
                    break
                out[idx] = term
                term = sign * term * p * p / ((2 * k + 1) * (2 * k + 2))
        elif base == "power":
            theta = params.theta
            term = dom.one()
            out[0] = term
            for n in range(1, N + 1):
                # binomial(p, n) (-theta)^n built by the descending product
                term = term * (p - (n - 1)) / n * (-theta)
                out[n] = term
        elif base == "arcsin":
            term = dom.of(p)
            for k in range(0, N + 1):
                idx = 2 * k + 1
                if idx > N:
                    break
                out[idx] = term
                term = term * p * p * (2 * k + 1) ** 2 / ((2 * k + 2) * (2 * k + 3))
        elif base == "arccos":
            inner = h_series("arcsin", params, N)
            out = [-c for c in inner.coeffs]
            out[0] = dom.pi() / 2
        elif base == "exp_arctan":
            garc = [dom.zero()] * (N + 1)
            term = -dom.of(p)
            for k in range(0, N + 1):
                idx = 2 * k + 1
                if idx > N:
                    break
                garc[idx] = term / (2 * k + 1)
                term = -term
            return series_exp(PowerSeries(tuple(garc)))
        else:
            raise ValueError(f"unknown h kind {h_kind!r}")
        return PowerSeries(tuple(out))

    if dom.exact:
        return build()
    with precision(dom.bits):
        return build()


def series_exp(g: PowerSeries) -> PowerSeries:
    """exp of a series with zero constant term: n f_n = sum k g_k f_(n-k)."""
    if len(g) == 0:
        return PowerSeries(tuple())
    g0 = g[0]
    if not (isinstance(g0, ExactComplex) and g0.is_zero()) and not g0 == 0:
        raise NonzeroConstantTerm("series_exp needs g[0] == 0")
    n_max = len(g) - 1
    one = ExactComplex(1) if isinstance(g0, (int, Fraction, ExactComplex)) else g0 + 1
    out = [one]
    for n in range(1, n_max + 1):
        acc = None
        for k in range(1, n + 1):
            contrib = k * g[k] * out[n - k]
            acc = contrib if acc is None else acc + contrib
        out.append(acc / n)
    return PowerSeries(tuple(out))


def cauchy_product(a: PowerSeries, b: PowerSeries, N: int) -> PowerSeries:
    """c_n = sum_k a_k b_(n-k) for n <= N."""
    av, bv = a.coeffs, b.coeffs
    if len(av) < N + 1 or len(bv) < N + 1:
        raise LengthMismatch(
            f"need length >= {N + 1}, got {len(av)} and {len(bv)}"
        )
    out = []
    for n in range(N + 1):
        out.append(sum(map(mul, av, bv[n::-1])))
    return PowerSeries(tuple(out))


def oracle_coeffs(family: FamilyId, params: Params, N: int) -> CoefficientSequence:
    """Definitional coefficients of one family via series convolution.

    The two-sequence families are reported in their own halved
    normalization, i.e. scaled by 2 (or 2i for the sine split) relative
    to the plain product coefficients.
    """
    from .families import family_parity  # local import; families needs core only

    validate(params, family)
    dom = params.domain

    def build():
        h = h_series(family.h_kind, params, N)
        core = bessel_core(family.bessel_kind, params.nu, N)
        conv = cauchy_product(h, core, N)
        norm = NORM_STANDARD
        coeffs = conv.coeffs
        if family.h_kind in ("sinh_via_exp", "cosh_via_exp", "cos_via_exp"):
            coeffs = tuple(c * 2 for c in coeffs)
            norm = NORM_HALF
        elif family.h_kind == "sin_via_exp":
            two_i = dom.of(2) * dom.i()
            coeffs = tuple(c * two_i for c in coeffs)
            norm = NORM_HALF_I
        return CoefficientSequence(
            family, params, coeffs, family_parity(family), norm
        )

    if dom.exact:
        return build()
    with precision(dom.bits):
        return build()
