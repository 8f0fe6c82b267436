"""Numeric evaluation of truncated expansions, a recurrence-free reference
path, and the recurrence-vs-convolution scaling benchmark.

``evaluate`` sums the stored coefficients under the z^nu/(2^nu
Gamma(nu+1)) prefactor (principal branches); ``direct_value`` recomputes
the same product from the factor's closed form and termwise summation of
the defining Bessel series, touching no recurrence, so the two paths
check each other.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from math import log

import gmpy2
from gmpy2 import mpc, mpfr

from .core import CoefficientSequence, FamilyId, NORM_HALF, NORM_HALF_I, Params, validate
from .errors import BranchCut, OutsideDisc
from .gammafn import gamma
from .numerics import precision, to_mpc
from .oracle import oracle_coeffs
from .recurrence import generate


@dataclass(frozen=True)
class EvalResult:
    z: mpc
    value: mpc
    truncation_index: int
    tail_estimate: float


@dataclass(frozen=True)
class BenchResult:
    family: FamilyId
    sizes: tuple
    recurrence_ns: tuple
    convolution_ns: tuple
    fitted_exponents: tuple  # (recurrence slope, convolution slope)


def _is_nonneg_int(z: mpc) -> bool:
    return z.imag == 0 and z.real >= 0 and z.real == gmpy2.floor(z.real)


def _check_branch(z: mpc, nu: mpc):
    if _is_nonneg_int(nu):
        return
    if z == 0:
        raise BranchCut("z = 0 is a branch point for non-integer order")
    if z.imag == 0 and z.real < 0:
        raise BranchCut("z on the negative real axis with non-integer order")


def _norm_scale(normalization: str, bits: int) -> mpc:
    with precision(bits):
        if normalization == NORM_HALF:
            return 1 / mpc(2)
        if normalization == NORM_HALF_I:
            return 1 / mpc(mpfr(0), mpfr(2))
        return mpc(1)


def evaluate(seq: CoefficientSequence, z) -> EvalResult:
    """Value of the truncated expansion at z, principal branches.

    The reported tail_estimate is the magnitude of the last retained
    term (prefactor included), a heuristic truncation indicator only.
    """
    params = seq.params
    bits = params.precision_bits
    with precision(bits):
        zv = to_mpc(z, bits)
        nu = to_mpc(params.nu, bits)
        if params.theta is not None and seq.family.h_kind == "power":
            theta_abs = abs(to_mpc(params.theta, bits))
            if theta_abs != 0 and abs(zv) >= 1 / theta_abs:
                raise OutsideDisc(
                    f"|z| = {abs(zv)} outside the binomial disc of radius {1 / theta_abs}"
                )
        scale = _norm_scale(seq.normalization, bits)
        coeffs = [to_mpc(c, bits) for c in seq.coeffs]
        N = len(coeffs) - 1

        if zv == 0:
            if nu == 0:
                value = coeffs[0] * scale / gamma(nu + 1, bits)
                return EvalResult(zv, value, N, 0.0)
            if nu.real > 0:
                # z^nu -> 0 along every path; the product extends by 0
                return EvalResult(zv, mpc(0), N, 0.0)
            raise BranchCut("z = 0 is singular for this order")
        _check_branch(zv, nu)

        # Horner on the polynomial part, then the common prefactor.
        acc = coeffs[N]
        for n in range(N - 1, -1, -1):
            acc = acc * zv + coeffs[n]
        pref = zv ** nu / (mpc(2) ** nu * gamma(nu + 1, bits)) * scale
        value = pref * acc
        tail = abs(pref) * abs(coeffs[N]) * abs(zv) ** N
    return EvalResult(zv, value, N, float(tail))


def _factor_value(family: FamilyId, params: Params, zv: mpc, bits: int) -> mpc:
    p = to_mpc(params.p, bits)
    kind = family.h_kind
    base = {
        "sinh_via_exp": "sinh",
        "cosh_via_exp": "cosh",
        "sin_via_exp": "sin",
        "cos_via_exp": "cos",
    }.get(kind, kind)
    if base == "exp":
        return gmpy2.exp(p * zv)
    if base == "sin":
        return gmpy2.sin(p * zv)
    if base == "cos":
        return gmpy2.cos(p * zv)
    if base == "sinh":
        return gmpy2.sinh(p * zv)
    if base == "cosh":
        return gmpy2.cosh(p * zv)
    if base == "power":
        theta = to_mpc(params.theta, bits)
        if abs(theta) != 0 and abs(zv) * abs(theta) >= 1:
            raise OutsideDisc("theta*z outside the unit disc")
        return gmpy2.exp(p * gmpy2.log(1 - theta * zv))
    if base == "exp_arctan":
        return gmpy2.exp(-p * gmpy2.atan(zv))
    if base == "arcsin":
        return gmpy2.asin(p * zv)
    if base == "arccos":
        return gmpy2.acos(p * zv)
    raise ValueError(f"unknown factor {kind!r}")


def direct_value(family: FamilyId, params: Params, z, terms: int = 80) -> mpc:
    """h(z) * B_nu(z) with B summed termwise from its defining series.

    Each term uses an independently computed Gamma(nu+n+1); no recurrence
    output enters anywhere, making this the evaluation-side reference.
    """
    params = validate(params, family)
    bits = params.precision_bits
    with precision(bits):
        zv = to_mpc(z, bits)
        nu = to_mpc(params.nu, bits)
        sign = -1 if family.bessel_kind == "J" else 1

        if zv == 0:
            if nu == 0:
                bessel = mpc(1)
            elif nu.real > 0:
                return mpc(0)
            else:
                raise BranchCut("z = 0 is singular for this order")
        else:
            _check_branch(zv, nu)
            half = zv / 2
            step = sign * half * half  # -+ (z/2)^2 folded into the power
            acc = mpc(0)
            power = mpc(1)  # (-+1)^n (z/2)^(2n)
            fact = mpfr(1)  # n!
            for n in range(terms):
                if n > 0:
                    power = power * step
                    fact = fact * n
                acc += power / (fact * gamma(nu + n + 1, bits))
            bessel = half ** nu * acc
        return _factor_value(family, params, zv, bits) * bessel


def safe_radius(family: FamilyId, params: Params) -> float:
    """Radius of the disc where truncated evaluation is supported/tested.

    Half the factor's convergence radius, capped at 1 (entire factors
    use 1; the arctan composite has branch points at +-i).
    """
    bits = params.precision_bits
    kind = family.h_kind
    with precision(bits):
        if kind == "power":
            t = abs(to_mpc(params.theta, bits)) if params.theta is not None else 0
            return min(1.0, float(1 / (2 * t))) if t != 0 else 1.0
        if kind in ("arcsin", "arccos"):
            p = abs(to_mpc(params.p, bits))
            return min(1.0, float(1 / (2 * p))) if p != 0 else 1.0
        if kind == "exp_arctan":
            return 0.5
    return 1.0


# ---------------------------------------------------------------------------
# Benchmark.
# ---------------------------------------------------------------------------

_BENCH_MIN_SIZE = 2 ** 8
_BENCH_MAX_SIZE = 2 ** 16
_TARGET_NS = 25_000_000  # repeat fast runs until ~25 ms of samples


def _time_once(fn) -> int:
    t0 = time.perf_counter_ns()
    fn()
    return time.perf_counter_ns() - t0


def _time_best(fn) -> int:
    t = _time_once(fn)
    if t >= _TARGET_NS:
        return t
    reps = max(1, min(50, _TARGET_NS // max(t, 1)))
    best = t
    for _ in range(reps):
        best = min(best, _time_once(fn))
    return best


def _fit_slope(sizes, times_ns) -> float:
    xs = [log(s) for s in sizes]
    ys = [log(max(t, 1)) for t in times_ns]
    n = len(xs)
    mx = sum(xs) / n
    my = sum(ys) / n
    sxx = sum((x - mx) ** 2 for x in xs)
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    return sxy / sxx


def bench(family: FamilyId, params: Params, sizes) -> BenchResult:
    """Wall-time scaling of recurrence generation vs oracle convolution.

    Times the raw recurrence path (fallback disabled) and the O(N^2)
    convolution at the params' fixed float precision, then fits the
    log-log slope of each.
    """
    sizes = tuple(sizes)
    if len(sizes) < 4:
        raise ValueError("need at least 4 sizes")
    if list(sizes) != sorted(set(sizes)):
        raise ValueError("sizes must be strictly increasing")
    if sizes[0] < _BENCH_MIN_SIZE or sizes[-1] > _BENCH_MAX_SIZE:
        raise ValueError(f"sizes must lie in [{_BENCH_MIN_SIZE}, {_BENCH_MAX_SIZE}]")
    if params.exact:
        raise ValueError("benchmarks run in float mode")
    params = validate(params, family)

    rec_ns, conv_ns = [], []
    for N in sizes:
        rec_ns.append(_time_best(lambda: generate(family, params, N, allow_fallback=False)))
        conv_ns.append(_time_best(lambda: oracle_coeffs(family, params, N)))
    return BenchResult(
        family=family,
        sizes=sizes,
        recurrence_ns=tuple(rec_ns),
        convolution_ns=tuple(conv_ns),
        fitted_exponents=(_fit_slope(sizes, rec_ns), _fit_slope(sizes, conv_ns)),
    )
