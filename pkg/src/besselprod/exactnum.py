"""Exact complex scalars for the coefficient pipeline.

An :class:`ExactComplex` represents

    (re + im*i) + (pi_re + pi_im*i) * pi

with all four components ``fractions.Fraction``.  Coefficients of every
product family live in this module over Q(i): the recurrence weights are
rational functions of the parameters, and only the arccos seeds introduce
a pi multiple.  Since those pi terms are only ever scaled by pi-free
values, products of two pi-carrying scalars never arise; attempting one
raises :class:`~besselprod.errors.PiArithmeticError` rather than silently
leaving the domain.

Floats are rejected everywhere: exact mode exists precisely to avoid
binary-rounding artifacts, so callers must pass ints, Fractions or other
ExactComplex values.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import PiArithmeticError

_RAT = (int, Fraction)


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational component: {x!r}")


class ExactComplex:
    """A Gaussian rational plus a Gaussian-rational multiple of pi.

    Immutable; values may be shared freely across threads.
    """

    __slots__ = ("re", "im", "pi_re", "pi_im")

    def __init__(self, re=0, im=0, pi_re=0, pi_im=0):
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))
        object.__setattr__(self, "pi_re", _frac(pi_re))
        object.__setattr__(self, "pi_im", _frac(pi_im))

    def __setattr__(self, name, value):
        raise AttributeError("ExactComplex is immutable")

    # -- helpers -----------------------------------------------------------

    @classmethod
    def coerce(cls, x) -> "ExactComplex":
        if isinstance(x, ExactComplex):
            return x
        if isinstance(x, _RAT):
            return cls(x)
        raise TypeError(f"cannot coerce {type(x).__name__} into ExactComplex")

    @property
    def has_pi(self) -> bool:
        return bool(self.pi_re) or bool(self.pi_im)

    def is_zero(self) -> bool:
        return not (self.re or self.im or self.pi_re or self.pi_im)

    def rational_part(self) -> "ExactComplex":
        return ExactComplex(self.re, self.im)

    def pi_multiple(self) -> "ExactComplex":
        """The Gaussian rational q such that self = rational_part + q*pi."""
        return ExactComplex(self.pi_re, self.pi_im)

    def conjugate(self) -> "ExactComplex":
        return ExactComplex(self.re, -self.im, self.pi_re, -self.pi_im)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        try:
            o = ExactComplex.coerce(other)
        except TypeError:
            return NotImplemented
        return ExactComplex(
            self.re + o.re, self.im + o.im, self.pi_re + o.pi_re, self.pi_im + o.pi_im
        )

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = ExactComplex.coerce(other)
        except TypeError:
            return NotImplemented
        return ExactComplex(
            self.re - o.re, self.im - o.im, self.pi_re - o.pi_re, self.pi_im - o.pi_im
        )

    def __rsub__(self, other):
        try:
            o = ExactComplex.coerce(other)
        except TypeError:
            return NotImplemented
        return o - self

    def __neg__(self):
        return ExactComplex(-self.re, -self.im, -self.pi_re, -self.pi_im)

    def __mul__(self, other):
        try:
            o = ExactComplex.coerce(other)
        except TypeError:
            return NotImplemented
        if self.has_pi and o.has_pi:
            raise PiArithmeticError("product of two pi-carrying scalars")
        # One factor is pi-free; multiply both components of the other by it.
        if o.has_pi:
            self, o = o, self
        a, b = self.re, self.im
        c, d = o.re, o.im
        pa, pb = self.pi_re, self.pi_im
        return ExactComplex(
            a * c - b * d, a * d + b * c, pa * c - pb * d, pa * d + pb * c
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = ExactComplex.coerce(other)
        except TypeError:
            return NotImplemented
        if o.has_pi:
            raise PiArithmeticError("division by a pi-carrying scalar")
        c, d = o.re, o.im
        n = c * c + d * d
        if n == 0:
            raise ZeroDivisionError("division by exact zero")
        # Multiply by conjugate(o)/|o|^2; acts on both rational and pi parts.
        return self * ExactComplex(c / n, -d / n)

    def __rtruediv__(self, other):
        try:
            o = ExactComplex.coerce(other)
        except TypeError:
            return NotImplemented
        return o / self

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = ExactComplex(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base_needed = k >> 1
            if base_needed:
                base = base * base
            k = base_needed
        return out

    # -- comparison & misc ---------------------------------------------------

    def __eq__(self, other):
        try:
            o = ExactComplex.coerce(other)
        except TypeError:
            return NotImplemented
        return (
            self.re == o.re
            and self.im == o.im
            and self.pi_re == o.pi_re
            and self.pi_im == o.pi_im
        )

    def __hash__(self):
        return hash((self.re, self.im, self.pi_re, self.pi_im))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"ExactComplex({self.re!r}, {self.im!r}, {self.pi_re!r}, {self.pi_im!r})"

    def __str__(self):
        parts = []
        if self.re or self.im:
            parts.append(_gaussian_str(self.re, self.im))
        if self.has_pi:
            parts.append(f"({_gaussian_str(self.pi_re, self.pi_im)})*pi")
        if not parts:
            return "0"
        return "+".join(parts).replace("+-", "-")


def _gaussian_str(re: Fraction, im: Fraction) -> str:
    if not im:
        return str(re)
    ims = f"{im}i"
    if not re:
        return ims
    sign = "+" if im >= 0 else ""
    return f"{re}{sign}{ims}"


ZERO = ExactComplex(0)
ONE = ExactComplex(1)
I = ExactComplex(0, 1)
PI = ExactComplex(0, 0, 1)
