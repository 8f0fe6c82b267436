"""Domain types: product families, validated parameters, coefficient runs.

A *family* pairs one auxiliary factor h(z) with one Bessel kind.  The
coefficient sequence of a family collects the u_n of

    h(z) * B_nu(z) = prefactor(nu) * sum_n u_n z^(n+nu)

where B is either Bessel kind and the prefactor is 1/(2^nu Gamma(nu+1))
(``standard``), 1/(2^(nu+1) Gamma(nu+1)) (``half``, difference/sum pairs
of exponentials) or 1/(2^(nu+1) i Gamma(nu+1)) (``half_i``).  The z^nu
power and the prefactor stay out of the coefficients so that exact mode
works with Gaussian rationals throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from gmpy2 import mpc

from .errors import (
    ExactModeError,
    ExcludedOrder,
    HalfIntegerOrder,
    MissingParam,
)
from .exactnum import ExactComplex
from .numerics import (
    DEFAULT_PRECISION,
    MIN_PRECISION,
    EXACT,
    FLOAT,
    ScalarDomain,
    parse_complex,
    to_mpc,
)

H_KINDS = (
    "exp",
    "sinh_via_exp",
    "cosh_via_exp",
    "sin_via_exp",
    "cos_via_exp",
    "power",
    "exp_arctan",
    "sin",
    "cos",
    "sinh",
    "cosh",
    "arcsin",
    "arccos",
)

BESSEL_KINDS = ("J", "I")

# Families whose recurrence weights carry a 1/(4 nu^2 - 1) factor.
QUARTER_SINGULAR_H_KINDS = frozenset({"sin", "cos", "sinh", "cosh", "arcsin", "arccos"})

# Two-sequence formulations built from exponential runs at +-p or +-ip.
VIA_EXP_H_KINDS = frozenset({"sinh_via_exp", "cosh_via_exp", "sin_via_exp", "cos_via_exp"})

PARITY_NONE = "none"
PARITY_EVEN_ZERO = "even_zero"  # coeffs[2k] == 0
PARITY_ODD_ZERO = "odd_zero"  # coeffs[2k+1] == 0

NORM_STANDARD = "standard"
NORM_HALF = "half"
NORM_HALF_I = "half_i"


@dataclass(frozen=True, order=True)
class FamilyId:
    h_kind: str
    bessel_kind: str

    def __post_init__(self):
        if self.h_kind not in H_KINDS:
            raise ValueError(f"unknown h kind {self.h_kind!r}")
        if self.bessel_kind not in BESSEL_KINDS:
            raise ValueError(f"unknown Bessel kind {self.bessel_kind!r}")

    @property
    def name(self) -> str:
        return f"{self.h_kind}-{self.bessel_kind}"

    def __str__(self) -> str:
        return self.name

    @classmethod
    def parse(cls, text: str) -> "FamilyId":
        head, sep, tail = text.rpartition("-")
        if not sep:
            raise ValueError(f"family id must look like 'exp-J', got {text!r}")
        return cls(head, tail)

    @property
    def needs_quarter_regular_order(self) -> bool:
        return self.h_kind in QUARTER_SINGULAR_H_KINDS


ALL_FAMILIES = tuple(
    FamilyId(h, b) for b in BESSEL_KINDS for h in H_KINDS
)


def _coerce_param(value, exact: bool, bits: int):
    if value is None:
        return None
    if exact:
        if isinstance(value, str):
            re_part, im_part = parse_complex(value)
            return ExactComplex(re_part, im_part)
        if isinstance(value, (int, Fraction, ExactComplex)):
            coerced = ExactComplex.coerce(value)
            if coerced.has_pi:
                raise ExactModeError("parameters must be Gaussian rationals, not pi multiples")
            return coerced
        raise ExactModeError(
            f"exact mode needs rational components, got {type(value).__name__}"
        )
    if isinstance(value, str):
        re_part, im_part = parse_complex(value)
        return to_mpc((re_part, im_part), bits)
    return to_mpc(value, bits)


@dataclass(frozen=True)
class Params:
    """Validated-or-not parameter set for one family."""

    nu: object
    p: object
    theta: Optional[object] = None
    precision_bits: int = DEFAULT_PRECISION
    exact: bool = False

    @property
    def domain(self) -> ScalarDomain:
        return ScalarDomain(EXACT if self.exact else FLOAT, self.precision_bits)

    def scalar(self, x):
        return self.domain.of(x)


def make_params(
    nu,
    p=0,
    theta=None,
    precision_bits: int = DEFAULT_PRECISION,
    exact: bool = False,
) -> Params:
    """Coerce raw inputs into a Params value of the requested mode."""
    if precision_bits < MIN_PRECISION:
        raise ValueError(f"precision_bits must be >= {MIN_PRECISION}")
    return Params(
        nu=_coerce_param(nu, exact, precision_bits),
        p=_coerce_param(p, exact, precision_bits),
        theta=_coerce_param(theta, exact, precision_bits),
        precision_bits=precision_bits,
        exact=exact,
    )


def _real_rational_of(value, exact: bool) -> Optional[Fraction]:
    """The value as a real Fraction, or None if complex/non-representable."""
    if exact:
        v = ExactComplex.coerce(value)
        if v.im or v.has_pi:
            return None
        return v.re
    z = value if isinstance(value, mpc) else mpc(value)
    if z.imag != 0:
        return None
    # mpfr values are dyadic rationals; the conversion below is exact.
    mant, exp = z.real.as_mantissa_exp()
    return Fraction(int(mant), 1) * Fraction(2) ** int(exp)


def validate(params: Params, family: FamilyId) -> Params:
    """Check the family's order restrictions; return params unchanged.

    Rejections:
      * nu in {-1/2, -1, -3/2, -2, ...}: some (n+1)(2 nu + n + 1) vanishes;
      * nu = +-1/2 for families dividing by 4 nu^2 - 1;
      * a missing theta for the binomial-factor family.
    """
    if family.h_kind == "power" and params.theta is None:
        raise MissingParam(f"family {family} needs theta")
    if params.p is None:
        raise MissingParam(f"family {family} needs p")
    nu_rat = _real_rational_of(params.nu, params.exact)
    if nu_rat is not None:
        twice = 2 * nu_rat
        if family.needs_quarter_regular_order and abs(twice) == 1:
            raise HalfIntegerOrder(nu_rat, family.name)
        if twice.denominator == 1 and twice <= -1:
            # 2 nu + n + 1 = 0 at n = -2 nu - 1 >= 0.
            raise ExcludedOrder(nu_rat, int(-twice) - 1)
    return params


@dataclass(frozen=True)
class CoefficientSequence:
    """Dense run u_0..u_N of one family at one parameter point.

    ``source`` records how the values were produced: ``recurrence`` for a
    verified forward recurrence, ``oracle_fallback`` when the published
    table failed exact verification and the convolution oracle was used
    instead (the flag travels with the data into every output format).
    """

    family: FamilyId
    params: Params
    coeffs: tuple
    parity: str = PARITY_NONE
    normalization: str = NORM_STANDARD
    source: str = "recurrence"

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n):
        return self.coeffs[n]

    @property
    def max_index(self) -> int:
        return len(self.coeffs) - 1

    def standardized(self) -> "CoefficientSequence":
        """Rescale to the standard 1/(2^nu Gamma(nu+1)) convention."""
        if self.normalization == NORM_STANDARD:
            return self
        from .numerics import precision

        def build():
            dom = self.params.domain
            divisor = dom.of(2) if self.normalization == NORM_HALF else dom.of(2) * dom.i()
            return tuple(c / divisor for c in self.coeffs)

        if self.exact_mode:
            coeffs = build()
        else:
            with precision(self.params.precision_bits):
                coeffs = build()
        return CoefficientSequence(
            self.family, self.params, coeffs, self.parity, NORM_STANDARD, self.source
        )

    @property
    def exact_mode(self) -> bool:
        return self.params.exact


@dataclass(frozen=True)
class RecurrenceSpec:
    """Seeds plus weight generator for one forward recurrence.

    ``beta(n)`` yields the weights [b_0(n), ..., b_(depth-1)(n)] applied to
    the ``depth`` previous values; for parity-compacted runs the argument
    is shifted by ``index_offset`` (a Fraction, possibly half-integral).
    """

    depth: int
    seeds: tuple
    beta: Callable[[object], Sequence]
    index_offset: Fraction = Fraction(0)
    min_n: int = 1
