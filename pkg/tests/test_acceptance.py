"""Acceptance suite: one test per criterion, each printing PASS/FAIL.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the criterion
lines; the bench criterion needs a couple of minutes, everything else is
seconds.
"""

import random
import time
from fractions import Fraction as F

import gmpy2

from besselprod.analysis import bench, direct_value, evaluate, safe_radius
from besselprod.core import (
    ALL_FAMILIES,
    FamilyId,
    make_params,
    validate,
)
from besselprod.errors import ValidationError
from besselprod.exactnum import ExactComplex
from besselprod.formats import (
    sequence_from_json_text,
    sequence_to_json_text,
    sequences_equal,
)
from besselprod.numerics import precision
from besselprod.oracle import bessel_core, oracle_coeffs
from besselprod.recurrence import generate
from besselprod.verify import compare, cross_identities

EC = ExactComplex.coerce

UNRESOLVED_FAMILIES = {
    FamilyId.parse(n) for n in ("arcsin-J", "arccos-J", "arcsin-I", "arccos-I")
}


def _report(num, name, passed, detail=""):
    status = "PASS" if passed else "FAIL"
    suffix = f"  ({detail})" if detail else ""
    print(f"[criterion {num}] {name}: {status}{suffix}")
    assert passed, f"criterion {num} ({name}) failed {suffix}"


def _valid_points(fam, pts):
    out = []
    for params in pts:
        try:
            validate(params, fam)
        except ValidationError:
            continue
        out.append(params)
    return out


def test_criterion_1_exact_oracle_equivalence(exact_points, all_reconciliations):
    failures = []
    verified = 0
    documented = 0
    for fam in ALL_FAMILIES:
        pts = _valid_points(fam, exact_points)
        if len(pts) < 3:
            failures.append(f"{fam}: fewer than 3 valid exact points")
            continue
        recon = all_reconciliations[fam]
        if recon.status != "unresolved":
            bad = [
                (str(pr.nu), rep.first_divergence)
                for pr in pts
                for rep in [compare(fam, pr, 40)]
                if not rep.exact_match
            ]
            if bad:
                failures.append(f"{fam}: recurrence diverges {bad}")
            else:
                verified += 1
        else:
            if fam not in UNRESOLVED_FAMILIES:
                failures.append(f"{fam}: unexpected unresolved status")
                continue
            # the divergence must be real, reproducible and documented,
            # and the flagged fallback must be oracle-exact
            for pr in pts:
                raw = compare(fam, pr, 40, use_fallback=False)
                if raw.exact_match or raw.first_divergence is None:
                    failures.append(f"{fam}: claimed divergence not reproducible")
                    break
                shipped = compare(fam, pr, 40, use_fallback=True)
                if not shipped.exact_match:
                    failures.append(f"{fam}: oracle fallback broken")
                    break
            else:
                if not recon.notes:
                    failures.append(f"{fam}: unresolved without evidence notes")
                else:
                    documented += 1
    _report(
        1,
        "exact oracle equivalence (indices <= 40, >= 3 rational points)",
        not failures,
        f"{verified} families verify via recurrence, {documented} documented "
        f"unresolved with exact fallback" + ("; " + "; ".join(failures) if failures else ""),
    )


def test_criterion_2_seed_closed_forms(exact_points):
    failures = []
    for fam in ALL_FAMILIES:
        for params in _valid_points(fam, exact_points):
            raw = generate(fam, params, 13, allow_fallback=False)
            target = oracle_coeffs(fam, params, 13)
            for n in range(14):
                if EC(raw.coeffs[n]) != EC(target.coeffs[n]):
                    failures.append(f"{fam} seed index {n} at nu={params.nu}")
                    break
    _report(2, "published seed values match the oracle exactly", not failures,
            "; ".join(failures))


def test_criterion_3_parity_exactness():
    failures = []
    even_zero = ("sin", "sinh", "arcsin", "sin_via_exp", "sinh_via_exp")
    odd_zero = ("cos", "cosh", "cos_via_exp", "cosh_via_exp")
    for kind in ("J", "I"):
        for exact in (True, False):
            params = make_params(nu=F(1, 3), p=2, exact=exact, precision_bits=128)
            for h in even_zero:
                seq = generate(FamilyId(h, kind), params, 40)
                for n in range(0, 41, 2):
                    c = seq[n]
                    ok = c.is_zero() if exact else c == 0
                    if not ok:
                        failures.append(f"{h}-{kind} exact={exact} index {n}")
                        break
            for h in odd_zero:
                seq = generate(FamilyId(h, kind), params, 40)
                for n in range(1, 41, 2):
                    c = seq[n]
                    ok = c.is_zero() if exact else c == 0
                    if not ok:
                        failures.append(f"{h}-{kind} exact={exact} index {n}")
                        break
    _report(3, "parity families produce exact zeros (indices <= 40)",
            not failures, "; ".join(failures))


def test_criterion_4_cross_identities(exact_points):
    failures = []
    for params in exact_points:
        rep = cross_identities(params, N=40)
        if not rep.exact_match:
            bad = [n for n in rep.notes if not n.endswith(": ok")]
            failures.append(f"nu={params.nu}: {bad}")
    _report(4, "cross identities (a)-(e) hold exactly through index 40",
            not failures, "; ".join(failures))


def test_criterion_5_reduction_limits():
    failures = []
    nu = F(2, 5)
    half_pi = ExactComplex(0, 0, F(1, 2))
    for kind in ("J", "I"):
        core = bessel_core(kind, EC(nu), 30)
        p0 = make_params(nu=nu, p=0, theta=F(1, 2), exact=True)
        expectations = {
            "exp": "core", "cos": "core", "cosh": "core", "exp_arctan": "core",
            "power": "core", "cos_via_exp": "core", "cosh_via_exp": "core",
            "sin": "zero", "sinh": "zero", "arcsin": "zero",
            "sin_via_exp": "zero", "sinh_via_exp": "zero",
            "arccos": "half_pi_core",
        }
        for h, expect in expectations.items():
            seq = generate(FamilyId(h, kind), p0, 30).standardized()
            for n in range(31):
                got = EC(seq[n])
                if expect == "core":
                    want = EC(core[n])
                elif expect == "zero":
                    want = ExactComplex(0)
                else:
                    want = half_pi * EC(core[n])
                if got != want:
                    failures.append(f"{h}-{kind} p=0 index {n}")
                    break
        theta0 = make_params(nu=nu, p=F(3, 4), theta=0, exact=True)
        seq = generate(FamilyId("power", kind), theta0, 30)
        if any(EC(seq[n]) != EC(core[n]) for n in range(31)):
            failures.append(f"power-{kind} theta=0")
    _report(5, "p=0 and theta=0 reductions collapse exactly", not failures,
            "; ".join(failures))


def test_criterion_6_evaluation_residual():
    t0 = time.time()
    failures = []
    worst = 0.0
    rng = random.Random(20260810)
    params = make_params(nu=F(1, 3), p=2, theta=F(1, 2), precision_bits=128)
    for fam in ALL_FAMILIES:
        seq = generate(fam, params, 60)
        radius = 0.8 * safe_radius(fam, params)
        for _ in range(20):
            r = radius * (0.05 + 0.95 * rng.random())
            ang = rng.uniform(-3.1, 3.1)
            z = complex(r * gmpy2.cos(ang), r * gmpy2.sin(ang))
            res = evaluate(seq, z)
            ref = direct_value(fam, params, z, terms=80)
            with precision(128):
                rel = float(abs(res.value - ref) / max(gmpy2.mpfr(1), abs(ref)))
            worst = max(worst, rel)
            if rel > 1e-20:
                failures.append(f"{fam} z={z} rel={rel:.2e}")
    _report(6, "evaluation residual <= 1e-20 relative (N=60, 128-bit, 20 z/family)",
            not failures,
            f"worst {worst:.2e}, {time.time() - t0:.1f}s" +
            ("; " + "; ".join(failures[:4]) if failures else ""))


def test_criterion_7_performance_scaling():
    t0 = time.time()
    params = make_params(nu=F(1, 3), p=2, precision_bits=128)
    sizes = [2 ** 10, 2 ** 11, 2 ** 12, 2 ** 13, 2 ** 14]
    result = bench(FamilyId("exp", "J"), params, sizes)
    rec_slope, conv_slope = result.fitted_exponents
    ratio = result.convolution_ns[-1] / result.recurrence_ns[-1]
    elapsed = time.time() - t0
    ok = rec_slope <= 1.2 and conv_slope >= 1.8 and ratio >= 50
    _report(7, "scaling: recurrence <= 1.2, convolution >= 1.8, ratio >= 50x",
            ok,
            f"recurrence slope {rec_slope:.3f}, convolution slope {conv_slope:.3f}, "
            f"ratio at 2^14 = {ratio:.0f}x, {elapsed:.0f}s")


def test_criterion_8_format_stability():
    failures = []
    cases = [
        ("exp-J", True), ("power-I", True), ("arccos-J", True),
        ("sin-J", False), ("exp_arctan-I", False),
    ]
    for name, exact in cases:
        fam = FamilyId.parse(name)
        params = make_params(
            nu=F(1, 3), p=2, theta=F(1, 2), exact=exact, precision_bits=128
        )
        seq = generate(fam, params, 24)
        text = sequence_to_json_text(seq)
        back = sequence_from_json_text(text)
        if not sequences_equal(seq, back):
            failures.append(f"{name} exact={exact}: values differ")
        elif sequence_to_json_text(back) != text:
            failures.append(f"{name} exact={exact}: reserialization differs")
    _report(8, "gen -> parse -> gen round-trip is bit/symbol exact (5 families)",
            not failures, "; ".join(failures))
