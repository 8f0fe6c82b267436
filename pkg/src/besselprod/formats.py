"""Stable JSON/CSV encodings of coefficient runs.

JSON top level: {family, params: {nu, p, theta}, precision_bits, exact,
N, coefficients: [...]}.  Complex numbers are {re, im} with round-trip
decimal strings in float mode, and {re_num, re_den, im_num, im_den} with
an optional pi_multiple object (same four fields) in exact mode, so the
pi-carrying arccos coefficients stay symbol-exact.  CSV rows are
``index,value`` using the same single-token scalar syntax the CLI
accepts.  Integer fields may exceed 53-bit range; parsers must read them
as bignums (Python's json does).
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from gmpy2 import mpc

from .core import CoefficientSequence, FamilyId, Params
from .exactnum import ExactComplex
from .families import get_def
from .numerics import (
    decimal_to_mpfr,
    format_complex,
    mpfr_to_decimal,
    parse_scalar,
    precision,
)


def scalar_to_json(value, exact: bool):
    if value is None:
        return None
    if exact:
        v = ExactComplex.coerce(value)
        out = {
            "re_num": v.re.numerator,
            "re_den": v.re.denominator,
            "im_num": v.im.numerator,
            "im_den": v.im.denominator,
        }
        if v.has_pi:
            out["pi_multiple"] = {
                "re_num": v.pi_re.numerator,
                "re_den": v.pi_re.denominator,
                "im_num": v.pi_im.numerator,
                "im_den": v.pi_im.denominator,
            }
        return out
    z = value if isinstance(value, mpc) else mpc(value)
    return {"re": mpfr_to_decimal(z.real), "im": mpfr_to_decimal(z.imag)}


def scalar_from_json(obj, exact: bool, bits: int):
    if obj is None:
        return None
    if exact:
        rat = ExactComplex(
            Fraction(obj["re_num"], obj["re_den"]),
            Fraction(obj["im_num"], obj["im_den"]),
        )
        pi_obj = obj.get("pi_multiple")
        if pi_obj:
            rat = rat + ExactComplex(
                0, 0,
                Fraction(pi_obj["re_num"], pi_obj["re_den"]),
                Fraction(pi_obj["im_num"], pi_obj["im_den"]),
            )
        return rat
    with precision(bits):
        return mpc(decimal_to_mpfr(obj["re"], bits), decimal_to_mpfr(obj["im"], bits))


def sequence_to_json(seq: CoefficientSequence) -> dict:
    p = seq.params
    return {
        "family": seq.family.name,
        "params": {
            "nu": scalar_to_json(p.nu, p.exact),
            "p": scalar_to_json(p.p, p.exact),
            "theta": scalar_to_json(p.theta, p.exact),
        },
        "precision_bits": p.precision_bits,
        "exact": p.exact,
        "N": seq.max_index,
        "source": seq.source,
        "coefficients": [scalar_to_json(c, p.exact) for c in seq.coeffs],
    }


def sequence_from_json(obj: dict) -> CoefficientSequence:
    family = FamilyId.parse(obj["family"])
    exact = bool(obj["exact"])
    bits = int(obj["precision_bits"])
    params = Params(
        nu=scalar_from_json(obj["params"]["nu"], exact, bits),
        p=scalar_from_json(obj["params"]["p"], exact, bits),
        theta=scalar_from_json(obj["params"].get("theta"), exact, bits),
        precision_bits=bits,
        exact=exact,
    )
    fd = get_def(family)
    coeffs = tuple(scalar_from_json(c, exact, bits) for c in obj["coefficients"])
    return CoefficientSequence(
        family, params, coeffs, fd.parity, fd.normalization,
        source=obj.get("source", "recurrence"),
    )


def sequence_to_json_text(seq: CoefficientSequence) -> str:
    return json.dumps(sequence_to_json(seq), indent=2)


def sequence_from_json_text(text: str) -> CoefficientSequence:
    return sequence_from_json(json.loads(text))


def sequence_to_csv(seq: CoefficientSequence) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for n, c in enumerate(seq.coeffs):
        writer.writerow([n, format_complex(c, seq.params.exact)])
    return buf.getvalue()


def csv_to_values(text: str, exact: bool, bits: int):
    """Parse ``index,value`` rows back into (index, scalar) pairs."""
    out = []
    for row in csv.reader(io.StringIO(text)):
        if not row:
            continue
        out.append((int(row[0]), parse_scalar(row[1], exact, bits)))
    return out


def sequences_equal(a: CoefficientSequence, b: CoefficientSequence) -> bool:
    """Bit-exact (float) / symbol-exact (exact) coefficient equality."""
    if len(a.coeffs) != len(b.coeffs) or a.params.exact != b.params.exact:
        return False
    if a.params.exact:
        return all(
            ExactComplex.coerce(x) == ExactComplex.coerce(y)
            for x, y in zip(a.coeffs, b.coeffs)
        )
    for x, y in zip(a.coeffs, b.coeffs):
        if (
            mpfr_to_decimal(x.real) != mpfr_to_decimal(y.real)
            or mpfr_to_decimal(x.imag) != mpfr_to_decimal(y.imag)
        ):
            return False
    return True
