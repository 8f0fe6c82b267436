"""Scalar backends: exact Gaussian rationals and gmpy2 binary floats.

Float mode uses ``gmpy2.mpc`` at a caller-chosen mantissa precision
(default 128 bits).  gmpy2 contexts are global, so every public entry
point of the package runs its numeric work inside
``with precision(bits):``.  Exact mode uses :class:`ExactComplex`.

A :class:`ScalarDomain` bundles the handful of mode-dependent
constructions (the imaginary unit, pi, coercion of rationals) so that
recurrence weights and series generators can be written once for both
modes.
"""

from __future__ import annotations

from fractions import Fraction

import gmpy2
from gmpy2 import mpc, mpfr

from .exactnum import ExactComplex

EXACT = "exact"
FLOAT = "float"

MIN_PRECISION = 53
DEFAULT_PRECISION = 128


def precision(bits: int):
    """Context manager installing a gmpy2 context with the given mantissa."""
    return gmpy2.context(precision=bits)


def to_mpc(x, bits: int) -> mpc:
    """Convert ints, Fractions, floats, complex, mpfr/mpc or ExactComplex."""
    with precision(bits):
        if isinstance(x, ExactComplex):
            value = mpc(mpfr(x.re), mpfr(x.im))
            if x.has_pi:
                value += mpc(mpfr(x.pi_re), mpfr(x.pi_im)) * gmpy2.const_pi()
            return value
        if isinstance(x, (int, Fraction)):
            return mpc(mpfr(x), 0)
        if isinstance(x, float):
            return mpc(mpfr(x), 0)
        if isinstance(x, complex):
            return mpc(mpfr(x.real), mpfr(x.imag))
        if isinstance(x, (mpfr, mpc)):
            return mpc(x)
        if isinstance(x, tuple) and len(x) == 2:
            return mpc(mpfr(x[0]), mpfr(x[1]))
    raise TypeError(f"cannot convert {type(x).__name__} to mpc")


def is_exact_scalar(x) -> bool:
    return isinstance(x, (ExactComplex, int, Fraction))


class ScalarDomain:
    """Mode-dependent scalar constructions shared by all generators."""

    def __init__(self, mode: str, bits: int = DEFAULT_PRECISION):
        if mode not in (EXACT, FLOAT):
            raise ValueError(f"unknown scalar mode {mode!r}")
        self.mode = mode
        self.bits = bits

    @property
    def exact(self) -> bool:
        return self.mode == EXACT

    def of(self, x):
        """Coerce an int / Fraction / existing scalar into this domain."""
        if self.exact:
            return ExactComplex.coerce(x)
        return to_mpc(x, self.bits)

    def zero(self):
        return self.of(0)

    def one(self):
        return self.of(1)

    def i(self):
        if self.exact:
            return ExactComplex(0, 1)
        with precision(self.bits):
            return mpc(mpfr(0), mpfr(1))

    def pi(self):
        if self.exact:
            return ExactComplex(0, 0, 1)
        with precision(self.bits):
            return mpc(gmpy2.const_pi())

    def is_zero(self, x) -> bool:
        if self.exact:
            return ExactComplex.coerce(x).is_zero()
        return x == 0


# ---------------------------------------------------------------------------
# Text encoding of complex scalars: re[+im i] with decimal or a/b components.
# ---------------------------------------------------------------------------

import re as _re

_COMPONENT = r"[+-]?(?:\d+/\d+|\d+\.?\d*(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?)"
_COMPLEX_RE = _re.compile(
    rf"^\s*(?P<re>{_COMPONENT})\s*(?:(?P<im>[+-]\s*(?:{_COMPONENT})?)\s*[ij])?\s*$"
)


def parse_complex(text: str) -> tuple[Fraction, Fraction]:
    """Parse ``re[+im i]`` into exact Fraction components.

    Components may be decimals (possibly scientific) or rationals ``a/b``;
    both convert to Fractions without rounding.  A bare ``+``/``-`` before
    the trailing ``i`` means +-1.
    """
    m = _COMPLEX_RE.match(text)
    if not m:
        raise ValueError(f"malformed complex scalar: {text!r}")
    re_part = Fraction(m.group("re"))
    im_text = m.group("im")
    if im_text is None:
        return re_part, Fraction(0)
    im_text = im_text.replace(" ", "")
    if im_text in ("+", "-"):
        im_text += "1"
    return re_part, Fraction(im_text)


def mpfr_to_decimal(x: mpfr) -> str:
    """Decimal string with enough digits to reproduce x bit-exactly."""
    if gmpy2.is_nan(x):
        return "nan"
    if gmpy2.is_infinite(x):
        return "inf" if x > 0 else "-inf"
    if x == 0:
        return "0"
    digits, exp, _ = x.digits(10, 0)
    sign = ""
    if digits.startswith("-"):
        sign, digits = "-", digits[1:]
    # digits d1 d2 ... dk with value 0.d1d2...dk * 10**exp
    return f"{sign}0.{digits}e{exp}"


def decimal_to_mpfr(text: str, bits: int) -> mpfr:
    with precision(bits):
        return mpfr(text)


def format_complex(value, exact: bool) -> str:
    """Single-token text form of a scalar, matching the CLI input syntax.

    Exact values render their components as Fractions; a pi multiple is
    appended as ``(q)*pi`` (so -pi/16 prints as ``(-1/16)*pi``).  Float
    values use round-trip decimal strings.
    """
    if exact:
        v = ExactComplex.coerce(value)
        rat = _format_pair(str(v.re), str(v.im))
        if not v.has_pi:
            return rat
        pi_txt = f"({_format_pair(str(v.pi_re), str(v.pi_im))})*pi"
        if v.re or v.im:
            return f"{rat}+{pi_txt}"
        return pi_txt
    z = value if isinstance(value, mpc) else mpc(value)
    return _format_pair(mpfr_to_decimal(z.real), mpfr_to_decimal(z.imag))


def _format_pair(re_txt: str, im_txt: str) -> str:
    if im_txt in ("0", "-0", "0.0"):
        return re_txt
    sign = "" if im_txt.startswith("-") else "+"
    return f"{re_txt}{sign}{im_txt}i"


def parse_scalar(text: str, exact: bool, bits: int):
    """Inverse of :func:`format_complex`."""
    text = text.strip()
    if exact:
        rat_txt, pi_txt = text, None
        if text.endswith(")*pi"):
            open_idx = text.rfind("(")
            if open_idx < 0:
                raise ValueError(f"malformed exact scalar: {text!r}")
            pi_txt = text[open_idx + 1 : -len(")*pi")]
            rat_txt = text[:open_idx]
            if rat_txt.endswith("+"):
                rat_txt = rat_txt[:-1]
        pr, pi_ = parse_complex(pi_txt) if pi_txt else (Fraction(0), Fraction(0))
        rr, ri = parse_complex(rat_txt) if rat_txt else (Fraction(0), Fraction(0))
        return ExactComplex(rr, ri, pr, pi_)
    rr, ri = parse_complex(text)
    with precision(bits):
        return mpc(mpfr(rr), mpfr(ri))
