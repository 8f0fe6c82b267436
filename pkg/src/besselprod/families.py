"""Per-family seeds and recurrence weights for all 26 product families.

Weight functions are written once over a generic scalar type: the order
``nu`` and factor parameters ``p``/``theta`` may be ExactComplex or
gmpy2.mpc, and the step index may be an int or (for parity-compacted
runs) a Fraction.  Each ``*_printed`` function transcribes the published
table verbatim; where exact verification against the convolution oracle
demanded a correction, the working form lives next to it and the
divergence is recorded in ``RECONCILED`` for reporting.

Structure kinds:
  plain    dense forward recurrence u[n+1] = sum_i b_i(n) u[n-i]
  two_seq  two exponential runs at transformed parameters, combined
  parity   three-term recurrence on the nonzero subsequence, weight
           argument shifted by a calibrated offset
  deep     dense 14-term recurrence starting at n = 13
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .core import (
    BESSEL_KINDS,
    FamilyId,
    NORM_HALF,
    NORM_HALF_I,
    NORM_STANDARD,
    PARITY_EVEN_ZERO,
    PARITY_NONE,
    PARITY_ODD_ZERO,
    Params,
)

F = Fraction


def _d1(nu, n):
    return (n + 1) * (2 * nu + n + 1)


def _d2(nu, n):
    return (4 * nu * nu - 1) * (n + 1) * (n + 2) * (2 * nu + n + 1) * (2 * nu + n + 2)


def _d3(nu, n):
    return (4 * nu * nu - 1) * n * (n + 1) * (2 * nu + n) * (2 * nu + n + 1)


# ---------------------------------------------------------------------------
# Exponential factor (depth 2); also drives the two-sequence families.
# ---------------------------------------------------------------------------

def _seeds_exp(params):
    return [params.scalar(1), params.p]


def _betas_exp_j(params, n, p=None):
    nu = params.nu
    p = params.p if p is None else p
    d = _d1(nu, n)
    return (p * (2 * nu + 2 * n + 1) / d, -(p * p + 1) / d)


def _betas_exp_i(params, n, p=None):
    nu = params.nu
    p = params.p if p is None else p
    d = _d1(nu, n)
    return (p * (2 * nu + 2 * n + 1) / d, (1 - p * p) / d)


# ---------------------------------------------------------------------------
# Binomial factor (1 - theta z)^p (depth 4).
# ---------------------------------------------------------------------------

def _seeds_power_j(params):
    nu, p, th = params.nu, params.p, params.theta
    return [
        params.scalar(1),
        -th * p,
        th * th * (p - 1) * p / 2 - 1 / (4 * (nu + 1)),
        th * p / (4 * (nu + 1)) - th ** 3 * (p - 2) * (p - 1) * p / 6,
    ]


def _seeds_power_i(params):
    nu, p, th = params.nu, params.p, params.theta
    return [
        params.scalar(1),
        -th * p,
        th * th * (p - 1) * p / 2 + 1 / (4 * (nu + 1)),
        -(th ** 3) * (p - 2) * (p - 1) * p / 6 - th * p / (4 * (nu + 1)),
    ]


def _betas_power_j_printed(params, n):
    nu, p, th = params.nu, params.p, params.theta
    d = _d1(nu, n)
    return (
        th * (2 * n * n + 4 * nu * n - 2 * n * p - 2 * nu * p - p) / d,
        (th * th * (n - p - 1) * (2 * nu + n - p - 1) + 1) / d,
        2 * th / d,
        -(th * th) / d,
    )


def _betas_power_j(params, n):
    # Published weight on u[n-1] carries the wrong overall sign; the
    # corrected form reduces to the J core at theta = 0 and verifies
    # exactly against the oracle.
    b0, b1, b2, b3 = _betas_power_j_printed(params, n)
    return (b0, -b1, b2, b3)


def _betas_power_i(params, n):
    nu, p, th = params.nu, params.p, params.theta
    d = _d1(nu, n)
    return (
        th * (2 * n * n + 4 * nu * n - 2 * n * p - 2 * nu * p - p) / d,
        (1 - th * th * (n - p - 1) * (2 * nu + n - p - 1)) / d,
        -2 * th / d,
        (th * th) / d,
    )


# ---------------------------------------------------------------------------
# exp(-p arctan z) factor (printed depth 5; the working recurrence is
# depth 6 with a vanishing weight in the fifth slot).
# ---------------------------------------------------------------------------

def _seeds_exp_arctan_j(params):
    nu, p = params.nu, params.p
    return [
        params.scalar(1),
        -p,
        p * p / 2 - 1 / (4 * (nu + 1)),
        (p - p ** 3 / 2) / 3 + p / (4 * (nu + 1)),
        (3 / (nu * nu + 3 * nu + 2) + 4 * p * p * (-3 / (nu + 1) + p * p - 8)) / 96,
    ]


def _seeds_exp_arctan_i(params):
    nu, p = params.nu, params.p
    return [
        params.scalar(1),
        -p,
        p * p / 2 + 1 / (4 * (nu + 1)),
        (p - p ** 3 / 2) / 3 - p / (4 * (nu + 1)),
        (3 / (nu * nu + 3 * nu + 2) + 4 * p * p * (3 / (nu + 1) + p * p - 8)) / 96,
    ]


def _betas_exp_arctan_j_printed(params, n):
    nu, p = params.nu, params.p
    d = _d1(nu, n)
    return (
        -p * (2 * nu + 2 * n + 1) / d,
        -(-4 * nu + 2 * n * (2 * nu + n - 2) + p * p + 3) / d,
        p * (-2 * nu - 2 * n + 5) / d,
        (6 * nu - n * (2 * nu + n - 6) - 11) / d,
        -1 / d,
    )


def _betas_exp_arctan_j(params, n):
    # The final printed weight belongs on u[n-5], not u[n-4]: the product
    # satisfies z(1+z^2)^2 f'' + ... + z(1+z^2)^2 f = 0, whose z^5 f term
    # reaches back five indices.  Verified exactly by the oracle.
    b = _betas_exp_arctan_j_printed(params, n)
    zero = params.scalar(0)
    return (b[0], b[1], b[2], b[3], zero, b[4])


def _betas_exp_arctan_i_printed(params, n):
    nu, p = params.nu, params.p
    d = _d1(nu, n)
    return (
        -p * (2 * nu + 2 * n + 1) / d,
        -(-4 * nu + 2 * n * (2 * nu + n - 2) + p * p + 1) / d,
        p * (-2 * nu - 2 * n + 5) / d,
        (6 * nu - n * (2 * nu + n - 6) - 7) / d,
        1 / d,
    )


def _betas_exp_arctan_i(params, n):
    b = _betas_exp_arctan_i_printed(params, n)
    zero = params.scalar(0)
    return (b[0], b[1], b[2], b[3], zero, b[4])


# ---------------------------------------------------------------------------
# sin/cos (J side): shared three-term weights on the parity subsequence.
# ---------------------------------------------------------------------------

def _seeds_sin_j(params):
    nu, p = params.nu, params.p
    return [
        params.scalar(1) * p,
        -(p ** 3) / 6 - p / (4 * (nu + 1)),
        p ** 5 / 120 + p ** 3 / (24 * (nu + 1)) + p / (32 * (nu + 1) * (nu + 2)),
    ]


def _seeds_cos_j(params):
    nu, p = params.nu, params.p
    return [
        params.scalar(1),
        -1 / (4 * (nu + 1)) - p * p / 2,
        1 / (32 * (nu + 1) * (nu + 2)) + p ** 4 / 24 + p * p / (8 * (nu + 1)),
    ]


def _betas_trig_j(params, n):
    nu, p = params.nu, params.p
    p2 = p * p
    p4 = p2 * p2
    d = _d2(nu, n)
    num0 = (
        -4 * (p2 - 1) * n ** 4
        - 16 * (nu - 1) * (p2 - 1) * n ** 3
        + 2 * (4 * (nu - 6) * nu + (-12 * (nu - 2) * nu - 7) * p2 + 9) * n ** 2
        + 2 * (-2 * nu * (2 * nu * (2 * nu + 5) - 9) + (3 - 2 * nu * (4 * nu * nu - 2 * nu + 7)) * p2 + 1) * n
        - (2 * nu - 1) * (2 * nu + 1) ** 2 * (2 * (nu + 1) * p2 + 1)
    )
    num1 = (
        8 * n ** 2 * (p4 - 1)
        + 16 * (nu - 2) * n * (p4 - 1)
        + (p2 - 1) * (-4 * nu * (nu + 8) + (4 * nu * (5 * nu - 8) + 27) * p2 + 33)
    )
    num2 = 4 * (p2 - 1) ** 3
    return (num0 / d, -num1 / d, -num2 / d)


# ---------------------------------------------------------------------------
# sinh/cosh (J side).
# ---------------------------------------------------------------------------

def _seeds_sinh_j(params):
    nu, p = params.nu, params.p
    return [
        params.scalar(1) * p,
        p ** 3 / 6 - p / (4 * (nu + 1)),
        p ** 5 / 120 - p ** 3 / (24 * (nu + 1)) + p / (32 * (nu + 1) * (nu + 2)),
    ]


def _seeds_cosh_j(params):
    nu, p = params.nu, params.p
    return [
        params.scalar(1),
        p * p / 2 - 1 / (4 * (nu + 1)),
        1 / (32 * (nu + 1) * (nu + 2)) + p ** 4 / 24 - p * p / (8 * (nu + 1)),
    ]


def _betas_hyp_j(params, n):
    nu, p = params.nu, params.p
    p2 = p * p
    p4 = p2 * p2
    d = _d2(nu, n)
    num0 = (
        4 * (p2 + 1) * n ** 4
        + 16 * (nu - 1) * (p2 + 1) * n ** 3
        + 2 * (4 * (nu - 6) * nu + (12 * (nu - 2) * nu + 7) * p2 + 9) * n ** 2
        + 2 * (-2 * nu * (2 * nu * (2 * nu + 5) - 9) + (2 * nu * (4 * nu * nu - 2 * nu + 7) - 3) * p2 + 1) * n
        + (2 * nu - 1) * (2 * nu + 1) ** 2 * (2 * (nu + 1) * p2 - 1)
    )
    num1 = (
        8 * (p4 - 1) * n ** 2
        + 16 * (p4 - 1) * (nu - 2) * n
        + (p2 + 1) * ((4 * nu * (5 * nu - 8) + 27) * p2 + 4 * nu * (nu + 8) - 33)
    )
    num2 = 4 * (p2 + 1) ** 3
    return (num0 / d, -num1 / d, num2 / d)


# ---------------------------------------------------------------------------
# sin/cos (I side).
# ---------------------------------------------------------------------------

def _seeds_sin_i(params):
    nu, p = params.nu, params.p
    return [
        params.scalar(1) * p,
        -(p ** 3) / 6 + p / (4 * (nu + 1)),
        p ** 5 / 120 - p ** 3 / (24 * (nu + 1)) + p / (32 * (nu + 1) * (nu + 2)),
    ]


def _seeds_cos_i(params):
    nu, p = params.nu, params.p
    return [
        params.scalar(1),
        1 / (4 * (nu + 1)) - p * p / 2,
        1 / (32 * (nu + 1) * (nu + 2)) + p ** 4 / 24 - p * p / (8 * (nu + 1)),
    ]


def _betas_trig_i(params, n):
    nu, p = params.nu, params.p
    p2 = p * p
    p4 = p2 * p2
    d = _d2(nu, n)
    num0 = (
        4 * (p2 + 1) * n ** 4
        + 16 * (nu - 1) * (p2 + 1) * n ** 3
        + 2 * (4 * (nu - 6) * nu + (12 * (nu - 2) * nu + 7) * p2 + 9) * n ** 2
        + 2 * (-2 * nu * (2 * nu * (2 * nu + 5) - 9) + (2 * nu * (4 * nu * nu - 2 * nu + 7) - 3) * p2 + 1) * n
        + (2 * nu - 1) * (2 * nu + 1) ** 2 * (2 * (nu + 1) * p2 - 1)
    )
    num1 = (
        8 * n ** 2 * (p4 - 1)
        + 16 * (nu - 2) * n * (p4 - 1)
        + (p2 + 1) * (4 * nu * (nu + 8) + (4 * nu * (5 * nu - 8) + 27) * p2 - 33)
    )
    num2 = 4 * (p2 + 1) ** 3
    return (-num0 / d, -num1 / d, -num2 / d)


# ---------------------------------------------------------------------------
# sinh/cosh (I side).
# ---------------------------------------------------------------------------

def _seeds_sinh_i(params):
    nu, p = params.nu, params.p
    return [
        params.scalar(1) * p,
        p ** 3 / 6 + p / (4 * (nu + 1)),
        p ** 5 / 120 + p ** 3 / (24 * (nu + 1)) + p / (32 * (nu + 1) * (nu + 2)),
    ]


def _seeds_cosh_i(params):
    nu, p = params.nu, params.p
    return [
        params.scalar(1),
        p * p / 2 + 1 / (4 * (nu + 1)),
        (-3 / (nu + 2) + 4 * p ** 4 + (12 * p * p + 3) / (nu + 1)) / 96,
    ]


def _betas_hyp_i(params, n):
    nu, p = params.nu, params.p
    p2 = p * p
    p4 = p2 * p2
    d = _d2(nu, n)
    num0 = (
        4 * (p2 - 1) * n ** 4
        + 16 * (nu - 1) * (p2 - 1) * n ** 3
        + 2 * (-4 * (nu - 6) * nu + (12 * (nu - 2) * nu + 7) * p2 - 9) * n ** 2
        + 2 * (2 * nu * (2 * nu * (2 * nu + 5) - 9) + (2 * nu * (4 * nu * nu - 2 * nu + 7) - 3) * p2 - 1) * n
        + (2 * nu - 1) * (2 * nu + 1) ** 2 * (2 * (nu + 1) * p2 + 1)
    )
    num1 = (
        8 * n ** 2 * (p4 - 1)
        + 16 * (nu - 2) * n * (p4 - 1)
        + (p2 - 1) * (-4 * nu * (nu + 8) + (4 * nu * (5 * nu - 8) + 27) * p2 + 33)
    )
    num2 = 4 * (p2 - 1) ** 3
    return (num0 / d, -num1 / d, num2 / d)


# ---------------------------------------------------------------------------
# arcsin/arccos (J side): dense depth-14 weights, n >= 13.
# ---------------------------------------------------------------------------

def _seeds_arcsin_j(params):
    nu, p = params.nu, params.p
    zero = params.scalar(0)
    q1 = nu + 1
    q2 = q1 * (nu + 2)
    q3 = q2 * (nu + 3)
    q4 = q3 * (nu + 4)
    q5 = q4 * (nu + 5)
    q6 = q5 * (nu + 6)
    return [
        zero,
        params.scalar(1) * p,
        zero,
        p ** 3 / 6 - p / (4 * q1),
        zero,
        3 * p ** 5 / 40 - p ** 3 / (24 * q1) + p / (32 * q2),
        zero,
        5 * p ** 7 / 112 - 3 * p ** 5 / (160 * q1) + p ** 3 / (192 * q2) - p / (384 * q3),
        zero,
        35 * p ** 9 / 1152 - 5 * p ** 7 / (448 * q1) + 3 * p ** 5 / (1280 * q2)
        - p ** 3 / (2304 * q3) + p / (6144 * q4),
        zero,
        63 * p ** 11 / 2816 - 35 * p ** 9 / (4608 * q1) + 5 * p ** 7 / (3584 * q2)
        - p ** 5 / (5120 * q3) + p ** 3 / (36864 * q4) - p / (122880 * q5),
        zero,
        231 * p ** 13 / 13312 - 63 * p ** 11 / (11264 * q1) + 35 * p ** 9 / (36864 * q2)
        - 5 * p ** 7 / (43008 * q3) + p ** 5 / (81920 * q4)
        - p ** 3 / (737280 * q5) + p / (2949120 * q6),
    ]


def _seeds_arccos_j(params):
    nu, p = params.nu, params.p
    pi = params.domain.pi()
    q1 = nu + 1
    q2 = q1 * (nu + 2)
    q3 = q2 * (nu + 3)
    q4 = q3 * (nu + 4)
    q5 = q4 * (nu + 5)
    q6 = q5 * (nu + 6)
    odd = _seeds_arcsin_j(params)
    return [
        pi / 2,
        -odd[1],
        -pi / (8 * q1),
        -odd[3],
        pi / (64 * q2),
        -odd[5],
        -pi / (768 * q3),
        -odd[7],
        pi / (12288 * q4),
        -odd[9],
        -pi / (245760 * q5),
        -odd[11],
        pi / (5898240 * q6),
        -odd[13],
    ]


def _betas_arc_j(params, n):
    nu, p = params.nu, params.p
    p2 = p * p
    p4 = p2 * p2
    p6 = p4 * p2
    p8 = p4 * p4
    nu2 = nu * nu
    d1 = _d1(nu, n)
    d = _d3(nu, n)

    b0 = 2 * p2 * (nu + n) / d1

    b1_num = (
        -(n - 4) * (n - 3) * (n - 2) * (n - 1) * (p4 + 4 * (4 * nu2 - 1) * p2 + 4)
        - 2 * (2 * nu + 1) * (n - 3) * (n - 2) * (n - 1) * (p4 + 8 * (2 * nu2 + nu - 1) * p2 + 4)
        - 2 * (n - 2) * (n - 1) * (4 * nu2 - 1) * (4 * (nu + 1) * (2 * nu + 1) * p2 + 1)
        + (2 * nu - 1) * (2 * nu + 1) ** 2
        + 2 * (2 * nu - 1) * (2 * nu + 1) * (n - 1) * (nu * (p4 + 2) + p4 + 4)
    )
    b1 = -b1_num / d

    b2_num = (
        4 * (n - 5) * (n - 4) * (n - 3) * (n - 2) * p2
        + 2 * (n - 4) * (n - 3) * (n - 2) * (p4 + (4 * nu * (3 * nu + 2) - 1) * p2 + 4)
        + 3 * (n - 3) * (n - 2) * (2 * nu + 1) * (p2 * (6 * nu * (2 * nu + 1) + p2 - 8) + 4)
        + (4 * nu2 - 1) * (n - 2) * (p4 + 2 * (nu * (6 * nu + 5) - 2) * p2 + 2)
        - 2 * (nu + 2) * (2 * nu - 1) * (2 * nu + 1)
    )
    b2 = -p2 * b2_num / d

    b3_num = (
        2 * (n - 6) * (n - 5) * (n - 4) * (n - 3) * p2 * (p4 + 3 * (4 * nu2 - 1) * p2 + 8)
        + 8 * (n - 5) * (n - 4) * (n - 3) * p2 * (8 * nu + p2 * (nu * (12 * nu * (nu + 1) + p2 - 3) - 3) + 4)
        - (n - 4) * (n - 3) * (p8 + 12 * nu * p6 - 6 * (2 * nu * (2 * nu * (4 * nu2 + 6 * nu + 1) - 3) - 3) * p4 + (8 - 32 * nu2) * p2 + 8)
        - (2 * nu + 1) * (n - 3) * (p8 + 4 * (2 * nu * (nu + 1) - 3) * p6 + 6 * p4 + 16 * (nu + 2) * (2 * nu - 1) * p2 + 8)
        - (2 * nu - 1) * (2 * nu + 1) * (-p4 + (8 * nu + 4) * p2 - 1)
    )
    b3 = -b3_num / d

    b4_num = (
        -8 * (n - 7) * (n - 6) * (n - 5) * (n - 4) * p4
        - 2 * (n - 6) * (n - 5) * (n - 4) * p2 * (p4 + (4 * nu * (3 * nu + 4) + 9) * p2 + 12)
        - (n - 5) * (n - 4) * p2 * (72 * nu + (6 * nu + 1) * p4 + 6 * (12 * (nu + 1) * nu2 + nu - 1) * p2 + 12)
        - (n - 4) * ((2 * nu - 3) * (2 * nu + 1) * p6 + (2 * nu * (2 * nu * (2 * nu * (6 * nu + 1) - 9) - 1) + 4) * p4 + (24 * (nu - 2) * nu - 26) * p2 - 8)
        + (2 * nu + 1) * (p4 + 2 * (nu * (6 * nu + 5) - 5) * p2 + 4)
    )
    b4 = -p2 * b4_num / d

    b5_num = (
        -(n - 8) * (n - 7) * (n - 6) * (n - 5) * p4 * (p4 + 4 * (4 * nu2 - 1) * p2 + 24)
        - 2 * (n - 7) * (n - 6) * (n - 5) * p4 * (48 * nu + (2 * nu - 1) * p2 * (8 * (nu + 1) * (2 * nu + 1) + p2) + 24)
        + 4 * (n - 6) * (n - 5) * p2 * ((3 * nu + 2) * p6 + (-4 * (4 * nu2 + 6 * nu + 1) * nu2 + 6 * nu + 5) * p4 + (3 - 12 * nu2) * p2 + 8)
        + 2 * (n - 5) * p2 * (32 * nu + (4 * (nu + 2) * nu2 + nu - 1) * p6 + 4 * (3 * nu + 1) * p4 + 12 * (nu + 2) * (2 * nu - 1) * (2 * nu + 1) * p2 + 16)
        - p8 - 2 * (4 * nu2 + 2 * nu - 3) * p6 + (12 * nu * (4 * nu2 + 2 * nu - 1) - 11) * p4 + 4 * (1 - 4 * nu2) * p2 - 4
    )
    b5 = -b5_num / d

    b6_num = (
        4 * (n - 9) * (n - 8) * (n - 7) * (n - 6) * p4
        + 2 * (n - 8) * (n - 7) * (n - 6) * p2 * ((4 * nu * (nu + 2) + 9) * p2 + 12)
        + 6 * (n - 7) * (n - 6) * p2 * (12 * nu + (2 * nu + 1) * (2 * nu2 + nu + 2) * p2 - 2)
        + 2 * (n - 6) * (((1 - 2 * nu) ** 2 * nu * (2 * nu + 1) - 1) * p4 + (12 * (nu - 4) * nu - 31) * p2 - 12)
        + (1 - 2 * nu) * p4 - 2 * nu * (2 * nu + 1) * (6 * nu + 1) * p2 + 8 - 24 * nu
    )
    b6 = -p4 * b6_num / d

    b7_num = (
        (n - 10) * (n - 9) * (n - 8) * (n - 7) * p4 * ((4 * nu2 - 1) * p2 + 16)
        + 4 * (n - 9) * (n - 8) * (n - 7) * (2 * nu + 1) * p4 * ((2 * nu2 + nu - 1) * p2 + 8)
        + 2 * (n - 8) * (n - 7) * p2 * ((nu * (2 * nu * (4 * nu2 + 6 * nu + 1) - 3) - 4) * p4 + 4 * (4 * nu2 - 1) * p2 - 24)
        - 2 * (n - 7) * p2 * (48 * nu + (6 * nu + 1) * p4 + 8 * (nu + 2) * (2 * nu - 1) * (2 * nu + 1) * p2 + 24)
        + (4 * nu * (nu + 1) + 3) * p6 + 2 * (7 - 4 * nu * (4 * nu2 + 2 * nu - 1)) * p4 + 6 * (4 * nu2 - 1) * p2 + 16
    )
    b7 = -p2 * b7_num / d

    b8_num = (
        (n - 1) * ((4 * (nu - 51) * nu + 835) * p2 - 12)
        - 12 * nu + 6 * (2 * nu - 17) * (n - 1) ** 2 * p2 + 4 * (n - 1) ** 3 * p2
        - (nu * (4 * nu * (nu + 7) - 835) + 2222) * p2 + 98
    )
    b8 = 2 * p6 * b8_num / d

    b9_num = (
        2 * n ** 4 + 8 * (nu - 10) * n ** 3 + (4 * nu2 - 240 * nu + 1197) * n ** 2
        - (8 * nu2 * nu + 92 * nu2 - 2394 * nu + 7937) * n
        - 2 * p2 * (-4 * nu2 - 144 * nu + 8 * n ** 2 + 16 * (nu - 9) * n + 649)
        + p4 * (68 * nu2 * nu + 502 * nu2 - 7937 * nu + 19677) + 12
    )
    b9 = 2 * p4 * b9_num / d

    b10 = 8 * p8 * (nu + n - 12) / d

    b11 = p6 * (p2 * (-4 * nu2 - 176 * nu + 8 * n ** 2 + 16 * (nu - 11) * n + 969) - 16) / d

    b12 = params.scalar(0)

    b13 = 4 * p8 / d

    return (b0, b1, b2, b3, b4, b5, b6, b7, b8, b9, b10, b11, b12, b13)


# ---------------------------------------------------------------------------
# arcsin/arccos (I side).
# ---------------------------------------------------------------------------

def _seeds_arcsin_i(params):
    nu, p = params.nu, params.p
    zero = params.scalar(0)
    q1 = nu + 1
    q2 = q1 * (nu + 2)
    q3 = q2 * (nu + 3)
    q4 = q3 * (nu + 4)
    q5 = q4 * (nu + 5)
    q6 = q5 * (nu + 6)
    return [
        zero,
        params.scalar(1) * p,
        zero,
        p ** 3 / 6 + p / (4 * q1),
        zero,
        3 * p ** 5 / 40 + p ** 3 / (24 * q1) + p / (32 * q2),
        zero,
        5 * p ** 7 / 112 + 3 * p ** 5 / (160 * q1) + p ** 3 / (192 * q2) + p / (384 * q3),
        zero,
        35 * p ** 9 / 1152 + 5 * p ** 7 / (448 * q1) + 3 * p ** 5 / (1280 * q2)
        + p ** 3 / (2304 * q3) + p / (6144 * q4),
        zero,
        63 * p ** 11 / 2816 + 35 * p ** 9 / (4608 * q1) + 5 * p ** 7 / (3584 * q2)
        + p ** 5 / (5120 * q3) + p ** 3 / (36864 * q4) + p / (122880 * q5),
        zero,
        231 * p ** 13 / 13312 + 63 * p ** 11 / (11264 * q1) + 35 * p ** 9 / (36864 * q2)
        + 5 * p ** 7 / (43008 * q3) + p ** 5 / (81920 * q4)
        + p ** 3 / (737280 * q5) + p / (2949120 * q6),
    ]


def _seeds_arccos_i(params):
    nu, p = params.nu, params.p
    pi = params.domain.pi()
    q1 = nu + 1
    q2 = q1 * (nu + 2)
    q3 = q2 * (nu + 3)
    q4 = q3 * (nu + 4)
    q5 = q4 * (nu + 5)
    q6 = q5 * (nu + 6)
    odd = _seeds_arcsin_i(params)
    return [
        pi / 2,
        -odd[1],
        pi / (8 * q1),
        -odd[3],
        pi / (64 * q2),
        -odd[5],
        pi / (768 * q3),
        -odd[7],
        pi / (12288 * q4),
        -odd[9],
        pi / (245760 * q5),
        -odd[11],
        pi / (5898240 * q6),
        -odd[13],
    ]


def _betas_arc_i(params, n):
    nu, p = params.nu, params.p
    p2 = p * p
    p4 = p2 * p2
    p6 = p4 * p2
    p8 = p4 * p4
    nu2 = nu * nu
    d1 = _d1(nu, n)
    d = _d3(nu, n)

    b0 = 2 * p2 * (nu + n) / d1

    b1_num = (
        (n - 4) * (n - 3) * (n - 2) * (n - 1) * (p4 + 4 * (4 * nu2 - 1) * p2 - 4)
        + 2 * (2 * nu + 1) * (n - 3) * (n - 2) * (n - 1) * (p4 + 8 * (2 * nu2 + nu - 1) * p2 - 4)
        + 2 * (4 * nu2 - 1) * (n - 2) * (n - 1) * (4 * (nu + 1) * (2 * nu + 1) * p2 - 1)
        + (2 * nu - 1) * (2 * nu + 1) ** 2
        - 2 * (2 * nu - 1) * (2 * nu + 1) * (n - 1) * ((nu + 1) * p4 - 2 * (nu + 2))
    )
    b1 = b1_num / d

    b2_num = (
        4 * (n - 5) * (n - 4) * (n - 3) * (n - 2) * p2
        + 2 * (n - 4) * (n - 3) * (n - 2) * (p4 + (4 * nu * (3 * nu + 2) - 1) * p2 - 4)
        + 3 * (2 * nu + 1) * (n - 3) * (n - 2) * (p2 * (6 * nu * (2 * nu + 1) + p2 - 8) - 4)
        + (4 * nu2 - 1) * (n - 2) * (p4 + 2 * (nu * (6 * nu + 5) - 2) * p2 - 2)
        + 2 * (nu + 2) * (2 * nu - 1) * (2 * nu + 1)
    )
    b2 = -p2 * b2_num / d

    b3_num = (
        -2 * (n - 6) * (n - 5) * (n - 4) * (n - 3) * p2 * (p4 + 3 * (4 * nu2 - 1) * p2 - 8)
        - 8 * (n - 5) * (n - 4) * (n - 3) * p2 * (-8 * nu + p2 * (nu * (12 * nu * (nu + 1) + p2 - 3) - 3) - 4)
        + (n - 4) * (n - 3) * (p8 + 12 * nu * p6 - 6 * (2 * nu * (2 * nu * (4 * nu2 + 6 * nu + 1) - 3) - 1) * p4 + 8 * (4 * nu2 - 1) * p2 + 8)
        + (2 * nu + 1) * (n - 3) * (p8 + 4 * (2 * nu * (nu + 1) - 3) * p6 - 6 * p4 - 16 * (nu + 2) * (2 * nu - 1) * p2 + 8)
        - (2 * nu - 1) * (2 * nu + 1) * (-p4 + (8 * nu + 4) * p2 + 1)
    )
    b3 = b3_num / d

    b4_num = (
        8 * n ** 4 * p4
        + 2 * n ** 3 * p2 * (p4 + (12 * nu2 + 16 * nu - 79) * p2 - 12)
        + n ** 2 * p2 * (-72 * nu + (6 * nu - 29) * p4 + 2 * (36 * nu2 * nu - 144 * nu2 - 237 * nu + 578) * p2 + 348)
        + 2 * n * ((2 * nu2 - 29 * nu + 68) * p6 + (24 * nu2 * nu2 - 320 * nu2 * nu + 546 * nu2 + 1156 * nu - 1855) * p4 + (-12 * nu2 + 348 * nu - 821) * p2 - 4)
        - 8 * nu - 8 * (2 * nu2 - 17 * nu + 26) * p6
        + (-192 * nu2 * nu2 + 1408 * nu2 * nu - 1296 * nu2 - 3710 * nu + 4409) * p4
        + 2 * (12 * nu2 * nu + 64 * nu2 - 821 * nu + 1263) * p2 + 28
    )
    b4 = p2 * b4_num / d

    b5_num = (
        (n - 8) * (n - 7) * (n - 6) * (n - 5) * p4 * (p4 + 4 * (4 * nu2 - 1) * p2 - 24)
        + 2 * (n - 7) * (n - 6) * (n - 5) * ((2 * nu - 1) * p8 + 8 * (nu + 1) * (2 * nu - 1) * (2 * nu + 1) * p6 - 24 * (2 * nu + 1) * p4)
        - 4 * (n - 6) * (n - 5) * p2 * ((3 * nu + 2) * p6 - (2 * nu * (2 * nu * (4 * nu2 + 6 * nu + 1) - 3) + 1) * p4 + 3 * (4 * nu2 - 1) * p2 + 8)
        - 2 * (n - 5) * p2 * (32 * nu + (4 * (nu + 2) * nu2 + nu - 1) * p6 - 4 * (3 * nu + 1) * p4 + 12 * (-4 * nu2 * nu - 8 * nu2 + nu + 2) * p2 + 16)
        - p8 - 2 * (4 * nu2 + 2 * nu - 3) * p6 + (12 * nu * (4 * nu2 + 2 * nu - 1) - 1) * p4 + 4 * (4 * nu2 - 1) * p2 - 4
    )
    b5 = b5_num / d

    b6_num = (
        -4 * (n - 9) * (n - 8) * (n - 7) * (n - 6) * p4
        - 2 * (n - 8) * (n - 7) * (n - 6) * p2 * ((4 * nu * (nu + 2) + 9) * p2 - 12)
        - 6 * (n - 7) * (n - 6) * p2 * (-12 * nu + (2 * nu + 1) * (2 * nu2 + nu + 2) * p2 + 2)
        - 2 * (n - 6) * ((nu * (2 * nu + 1) * (1 - 2 * nu) ** 2 + 1) * p4 + (31 - 12 * (nu - 4) * nu) * p2 - 12)
        + 24 * nu + (1 - 2 * nu) * p4 - 2 * nu * (2 * nu + 1) * (6 * nu + 1) * p2 - 8
    )
    b6 = p4 * b6_num / d

    b7_num = (
        (n - 10) * (n - 9) * (n - 8) * (n - 7) * p6 * ((4 * nu2 - 1) * p2 - 16)
        + 4 * (2 * nu + 1) * (n - 9) * (n - 8) * (n - 7) * p6 * ((2 * nu2 + nu - 1) * p2 - 8)
        + 2 * (n - 8) * (n - 7) * p4 * ((nu * (2 * nu * (4 * nu2 + 6 * nu + 1) - 3) + 2) * p4 + (4 - 16 * nu2) * p2 - 24)
        + 2 * (n - 7) * ((6 * nu + 1) * p8 + 8 * (nu + 2) * (2 * nu - 1) * (2 * nu + 1) * p6 - 24 * (2 * nu + 1) * p4)
        - p2 * ((4 * nu * (nu + 1) + 3) * p6 - 2 * (4 * nu * (4 * nu2 + 2 * nu - 1) + 3) * p4 + (6 - 24 * nu2) * p2 + 16)
    )
    b7 = -b7_num / d

    b8_num = (
        -4 * n ** 3 * p2 + 6 * (19 - 2 * nu) * n ** 2 * p2
        - n * ((4 * (nu - 57) * nu + 1051) * p2 + 12)
        - 12 * nu + (nu * (4 * nu * (nu + 8) - 1051) + 3163) * p2 + 110
    )
    b8 = 2 * p6 * b8_num / d

    b9_num = (
        -2 * n ** 4 * p4 - 8 * (nu - 10) * n ** 3 * p4
        - n ** 2 * p2 * ((4 * nu2 - 240 * nu + 1197) * p2 + 16)
        + n * ((8 * nu2 * nu + 92 * nu2 - 2394 * nu + 7937) * p4 - 32 * (nu - 9) * p2)
        - (68 * nu2 * nu + 502 * nu2 - 7937 * nu + 19672) * p4
        + 2 * (4 * nu2 + 144 * nu - 649) * p2 - 12
    )
    b9 = 2 * p4 * b9_num / d

    b10 = 8 * p8 * (nu + n - 12) / d

    b11 = p6 * (p2 * (-4 * nu * (nu + 44) + 8 * n ** 2 + 16 * (nu - 11) * n + 969) + 16) / d

    b12 = params.scalar(0)

    b13 = -4 * p8 / d

    return (b0, b1, b2, b3, b4, b5, b6, b7, b8, b9, b10, b11, b12, b13)


# ---------------------------------------------------------------------------
# Registry.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FamilyDef:
    family: FamilyId
    structure: str  # plain | two_seq | parity | deep
    parity: str
    normalization: str
    depth: int
    min_n: int
    seeds: Callable[[Params], list]
    betas_printed: Optional[Callable] = None
    betas_fixed: Optional[Callable] = None
    subsequence: Optional[str] = None  # "odd" | "even" for parity families
    index_offset: Optional[Fraction] = None  # calibrated shift of the weight argument
    exp_split: Optional[str] = None  # "real" (+-p) | "imag" (+-ip) for two_seq
    combine_sign: int = 1

    @property
    def betas_working(self) -> Callable:
        return self.betas_fixed if self.betas_fixed is not None else self.betas_printed


def _defs():
    out = {}

    def add(d: FamilyDef):
        out[d.family] = d

    for kind, exp_betas in (("J", _betas_exp_j), ("I", _betas_exp_i)):
        add(FamilyDef(
            family=FamilyId("exp", kind), structure="plain", parity=PARITY_NONE,
            normalization=NORM_STANDARD, depth=2, min_n=1,
            seeds=_seeds_exp, betas_printed=exp_betas,
        ))
        add(FamilyDef(
            family=FamilyId("sinh_via_exp", kind), structure="two_seq",
            parity=PARITY_EVEN_ZERO, normalization=NORM_HALF, depth=2, min_n=1,
            seeds=_seeds_exp, betas_printed=exp_betas,
            exp_split="real", combine_sign=-1,
        ))
        add(FamilyDef(
            family=FamilyId("cosh_via_exp", kind), structure="two_seq",
            parity=PARITY_ODD_ZERO, normalization=NORM_HALF, depth=2, min_n=1,
            seeds=_seeds_exp, betas_printed=exp_betas,
            exp_split="real", combine_sign=1,
        ))
        add(FamilyDef(
            family=FamilyId("sin_via_exp", kind), structure="two_seq",
            parity=PARITY_EVEN_ZERO, normalization=NORM_HALF_I, depth=2, min_n=1,
            seeds=_seeds_exp, betas_printed=exp_betas,
            exp_split="imag", combine_sign=-1,
        ))
        add(FamilyDef(
            family=FamilyId("cos_via_exp", kind), structure="two_seq",
            parity=PARITY_ODD_ZERO, normalization=NORM_HALF, depth=2, min_n=1,
            seeds=_seeds_exp, betas_printed=exp_betas,
            exp_split="imag", combine_sign=1,
        ))

    add(FamilyDef(
        family=FamilyId("power", "J"), structure="plain", parity=PARITY_NONE,
        normalization=NORM_STANDARD, depth=4, min_n=3,
        seeds=_seeds_power_j, betas_printed=_betas_power_j_printed,
        betas_fixed=_betas_power_j,
    ))
    add(FamilyDef(
        family=FamilyId("power", "I"), structure="plain", parity=PARITY_NONE,
        normalization=NORM_STANDARD, depth=4, min_n=3,
        seeds=_seeds_power_i, betas_printed=_betas_power_i,
    ))

    add(FamilyDef(
        family=FamilyId("exp_arctan", "J"), structure="plain", parity=PARITY_NONE,
        normalization=NORM_STANDARD, depth=5, min_n=4,
        seeds=_seeds_exp_arctan_j, betas_printed=_betas_exp_arctan_j_printed,
        betas_fixed=_betas_exp_arctan_j,
    ))
    add(FamilyDef(
        family=FamilyId("exp_arctan", "I"), structure="plain", parity=PARITY_NONE,
        normalization=NORM_STANDARD, depth=5, min_n=4,
        seeds=_seeds_exp_arctan_i, betas_printed=_betas_exp_arctan_i_printed,
        betas_fixed=_betas_exp_arctan_i,
    ))

    parity_defs = [
        ("sin", "J", _seeds_sin_j, _betas_trig_j, "odd", F(1, 2)),
        ("cos", "J", _seeds_cos_j, _betas_trig_j, "even", F(0)),
        ("sinh", "J", _seeds_sinh_j, _betas_hyp_j, "odd", F(1, 2)),
        ("cosh", "J", _seeds_cosh_j, _betas_hyp_j, "even", F(0)),
        ("sin", "I", _seeds_sin_i, _betas_trig_i, "odd", F(1, 2)),
        ("cos", "I", _seeds_cos_i, _betas_trig_i, "even", F(0)),
        ("sinh", "I", _seeds_sinh_i, _betas_hyp_i, "odd", F(1, 2)),
        ("cosh", "I", _seeds_cosh_i, _betas_hyp_i, "even", F(0)),
    ]
    for h, kind, seeds, betas, sub, offset in parity_defs:
        add(FamilyDef(
            family=FamilyId(h, kind), structure="parity",
            parity=PARITY_EVEN_ZERO if sub == "odd" else PARITY_ODD_ZERO,
            normalization=NORM_STANDARD, depth=3, min_n=2,
            seeds=seeds, betas_printed=betas,
            subsequence=sub, index_offset=offset,
        ))

    add(FamilyDef(
        family=FamilyId("arcsin", "J"), structure="deep", parity=PARITY_EVEN_ZERO,
        normalization=NORM_STANDARD, depth=14, min_n=13,
        seeds=_seeds_arcsin_j, betas_printed=_betas_arc_j,
    ))
    add(FamilyDef(
        family=FamilyId("arccos", "J"), structure="deep", parity=PARITY_NONE,
        normalization=NORM_STANDARD, depth=14, min_n=13,
        seeds=_seeds_arccos_j, betas_printed=_betas_arc_j,
    ))
    add(FamilyDef(
        family=FamilyId("arcsin", "I"), structure="deep", parity=PARITY_EVEN_ZERO,
        normalization=NORM_STANDARD, depth=14, min_n=13,
        seeds=_seeds_arcsin_i, betas_printed=_betas_arc_i,
    ))
    add(FamilyDef(
        family=FamilyId("arccos", "I"), structure="deep", parity=PARITY_NONE,
        normalization=NORM_STANDARD, depth=14, min_n=13,
        seeds=_seeds_arccos_i, betas_printed=_betas_arc_i,
    ))
    return out


FAMILY_DEFS = _defs()


def get_def(family: FamilyId) -> FamilyDef:
    return FAMILY_DEFS[family]


def family_parity(family: FamilyId) -> str:
    return FAMILY_DEFS[family].parity


def family_normalization(family: FamilyId) -> str:
    return FAMILY_DEFS[family].normalization


# ---------------------------------------------------------------------------
# Frozen adjudication results (established by exact-arithmetic comparison
# against the convolution oracle through index 40 at four rational points,
# re-checked by the verify module at runtime).
#
#   as_printed    published table verifies exactly
#   index_offset  unique repair: parity-subsequence offset, or a one-slot
#                 shift of a single weight's target index
#   sign_flip     unique repair: one weight negated as a whole
#   unresolved    no repair within the tiny correction space; generation
#                 falls back to the oracle and the output is flagged
# ---------------------------------------------------------------------------

def _recon(status, **kw):
    rec = {"status": status}
    rec.update(kw)
    return rec


RECONCILED = {}
for _b in BESSEL_KINDS:
    for _h in ("exp", "sinh_via_exp", "cosh_via_exp", "sin_via_exp", "cos_via_exp"):
        RECONCILED[FamilyId(_h, _b)] = _recon("as_printed")
    RECONCILED[FamilyId("cos", _b)] = _recon("as_printed", offset=F(0))
    RECONCILED[FamilyId("cosh", _b)] = _recon("as_printed", offset=F(0))
    RECONCILED[FamilyId("sin", _b)] = _recon("index_offset", offset=F(1, 2))
    RECONCILED[FamilyId("sinh", _b)] = _recon("index_offset", offset=F(1, 2))
    RECONCILED[FamilyId("exp_arctan", _b)] = _recon(
        "index_offset", term_index=4, shift=1
    )
    RECONCILED[FamilyId("arcsin", _b)] = _recon("unresolved")
    RECONCILED[FamilyId("arccos", _b)] = _recon("unresolved")
RECONCILED[FamilyId("power", "J")] = _recon("sign_flip", term_index=1)
RECONCILED[FamilyId("power", "I")] = _recon("as_printed")


def reconciled_status(family: FamilyId) -> dict:
    return dict(RECONCILED[family])


def uses_oracle_fallback(family: FamilyId) -> bool:
    return RECONCILED[family]["status"] == "unresolved"
