"""Complex gamma at working precision via Spouge's shifted-factorial form.

    Gamma(z+1) = (z+a)^(z+1/2) e^-(z+a) [ c_0 + sum_{k=1}^{a-1} c_k/(z+k) ]

with c_0 = sqrt(2 pi) and c_k = ((-1)^(k-1)/(k-1)!) (a-k)^(k-1/2) e^(a-k).
The parameter a scales with the precision so the approximation error
stays below the target mantissa (error ~ a^(1/2) (2 pi)^-(a+1/2) for
Re z > 0); the reflection formula covers Re z < 1/2.  Used only for
evaluation of truncated expansions, never for coefficients.
"""

from __future__ import annotations

import gmpy2
from gmpy2 import mpc, mpfr

from .errors import EvaluationError
from .numerics import precision

_GUARD_BITS = 48
_coefficients = {}


def _spouge_a(bits: int) -> int:
    # need about 0.30103*bits decimal digits; each unit of a buys ~0.7982
    return int(0.39 * bits) + 12


def _coeffs(bits: int):
    key = bits
    cached = _coefficients.get(key)
    if cached is not None:
        return cached
    a = _spouge_a(bits)
    work = bits + _GUARD_BITS
    with precision(work):
        cs = [gmpy2.sqrt(2 * gmpy2.const_pi())]
        sign = 1
        fact = mpfr(1)  # (k-1)!
        for k in range(1, a):
            if k > 1:
                fact = fact * (k - 1)
            ak = mpfr(a - k)
            cs.append(sign * ak ** (mpfr(k) - 0.5) * gmpy2.exp(ak) / fact)
            sign = -sign
    _coefficients[key] = (a, cs)
    return a, cs


def gamma(z, bits: int) -> mpc:
    """Principal-branch Gamma(z) at the given mantissa precision."""
    a, cs = _coeffs(bits)
    work = bits + _GUARD_BITS
    with precision(work):
        z = mpc(z)
        if z.imag == 0 and z.real <= 0 and z.real == gmpy2.floor(z.real):
            raise EvaluationError(f"gamma pole at z={z}")
        if z.real < 0.5:
            # Gamma(z) = pi / (sin(pi z) Gamma(1-z))
            pi = gmpy2.const_pi()
            value = pi / (gmpy2.sin(pi * z) * gamma(1 - z, work))
        else:
            w = z - 1
            x = w + a
            acc = mpc(cs[0])
            for k in range(1, a):
                acc += cs[k] / (w + k)
            value = x ** (w + 0.5) * gmpy2.exp(-x) * acc
    with precision(bits):
        return mpc(value)
