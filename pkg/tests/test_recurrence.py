from fractions import Fraction as F

import pytest

from besselprod.core import FamilyId, make_params
from besselprod.errors import CalibrationFailed, IndexTooSmall
from besselprod.exactnum import ExactComplex
from besselprod.oracle import bessel_core, oracle_coeffs
from besselprod.recurrence import (
    betas,
    calibrate_parity,
    generate,
    recurrence_spec,
    seeds,
)

EC = ExactComplex.coerce


def P(nu, p=0, theta=None, **kw):
    return make_params(nu=nu, p=p, theta=theta, exact=True, **kw)


def test_seed_examples():
    assert seeds(FamilyId("exp", "J"), P(F(1, 5), p=F(2, 3))) == [EC(1), EC(F(2, 3))]

    pr = P(F(1, 3), p=F(2, 7), theta=F(1, 2))
    nu, p, th = pr.nu, pr.p, pr.theta
    power_seeds = seeds(FamilyId("power", "J"), pr)
    assert power_seeds[2] == th * th * (p - 1) * p / 2 - 1 / (4 * (nu + 1))

    arccos_seeds = seeds(FamilyId("arccos", "J"), P(F(1, 3), p=F(2, 7)))
    assert arccos_seeds[0] == ExactComplex(0, 0, F(1, 2))
    assert arccos_seeds[2] == ExactComplex(0, 0, F(-1, 8)) / (nu + 1)

    ea = seeds(FamilyId("exp_arctan", "J"), P(0, p=1))
    assert ea[3] == EC(F(5, 12))


def test_seeds_match_oracle_prefix(exact_points):
    from besselprod.core import ALL_FAMILIES, validate
    from besselprod.errors import ValidationError

    for fam in ALL_FAMILIES:
        for params in exact_points:
            try:
                validate(params, fam)
            except ValidationError:
                continue
            raw = generate(fam, params, 13, allow_fallback=False)
            target = oracle_coeffs(fam, params, 13)
            assert all(
                EC(a) == EC(b) for a, b in zip(raw.coeffs, target.coeffs)
            ), fam.name


def test_betas_examples():
    b = betas(FamilyId("exp", "J"), P(0, p=1), 2)
    assert list(b) == [EC(F(5, 9)), EC(F(-2, 9))]

    pr = P(F(1, 3), p=F(2, 7), theta=0)
    b = betas(FamilyId("power", "J"), pr, 5)
    assert b[0].is_zero() and b[2].is_zero() and b[3].is_zero()

    b = betas(FamilyId("arcsin", "J"), P(F(1, 3), p=2), 14)
    assert b[12].is_zero()
    assert len(b) == 14


def test_betas_two_sequence_returns_pair():
    bu, bv = betas(FamilyId("sinh_via_exp", "J"), P(F(1, 3), p=2), 3)
    assert bu[0] == -bv[0]  # v runs at -p
    assert bu[1] == bv[1]


def test_betas_index_too_small():
    with pytest.raises(IndexTooSmall):
        betas(FamilyId("power", "J"), P(F(1, 3), p=1, theta=F(1, 2)), 2)


def test_generate_examples():
    seq = generate(FamilyId("exp", "J"), P(F(1, 2), p=1), 2)
    assert seq[2] == EC(F(1, 3))

    nu = ExactComplex(F(3, 11))
    seq = generate(FamilyId("exp", "J"), P(F(3, 11), p=0), 4)
    assert seq[0] == EC(1) and seq[1].is_zero() and seq[3].is_zero()
    assert seq[2] == -1 / (4 * (nu + 1))
    assert seq[4] == 1 / (32 * (nu + 1) * (nu + 2))

    pr = P(F(1, 3), p=F(2, 7))
    nu, p = pr.nu, pr.p
    cos_seq = generate(FamilyId("cos", "J"), pr, 4)
    assert cos_seq[4] == 1 / (32 * (nu + 1) * (nu + 2)) + p ** 4 / 24 + p * p / (8 * (nu + 1))

    sinh_i = generate(FamilyId("sinh", "I"), pr, 3)
    assert sinh_i[3] == p ** 3 / 6 + p / (4 * (nu + 1))


def test_prefix_stability_and_determinism():
    pr = P(F(1, 3), p=2, theta=F(1, 2))
    for fam in (FamilyId("exp", "J"), FamilyId("power", "I"), FamilyId("sin", "J")):
        long = generate(fam, pr, 25)
        short = generate(fam, pr, 11)
        assert long.coeffs[:12] == short.coeffs
        again = generate(fam, pr, 25)
        assert long.coeffs == again.coeffs


def test_parity_zeros_are_exact():
    pr = P(F(1, 3), p=2)
    prf = make_params(nu=F(1, 3), p=2)
    for name in ("sin-J", "sinh-I", "sin_via_exp-J", "arcsin-I"):
        fam = FamilyId.parse(name)
        for params in (pr, prf):
            seq = generate(fam, params, 40)
            for n in range(0, 41, 2):
                c = seq[n]
                assert (c.is_zero() if params.exact else c == 0), (name, n)
    for name in ("cos-J", "cosh-I", "cos_via_exp-I"):
        fam = FamilyId.parse(name)
        seq = generate(fam, pr, 40)
        for n in range(1, 41, 2):
            assert seq[n].is_zero(), (name, n)


def test_two_sequence_v_is_u_at_negated_parameter():
    pr = P(F(1, 3), p=F(2, 7))
    neg = P(F(1, 3), p=F(-2, 7))
    u = generate(FamilyId("exp", "J"), pr, 40)
    v = generate(FamilyId("exp", "J"), neg, 40)
    for n in range(41):
        assert v[n] == (-1) ** n * u[n]


def test_reduction_at_p_zero():
    nu = F(2, 5)
    core_j = bessel_core("J", ExactComplex(nu), 20)
    for name in ("exp-J", "cos-J", "cosh-J", "exp_arctan-J"):
        seq = generate(FamilyId.parse(name), P(nu, p=0), 20).standardized()
        assert all(EC(a) == EC(b) for a, b in zip(seq.coeffs, core_j.coeffs)), name
    for name in ("sin-J", "sinh-J", "arcsin-J"):
        seq = generate(FamilyId.parse(name), P(nu, p=0), 20)
        assert all(c.is_zero() for c in seq.coeffs), name
    arccos = generate(FamilyId("arccos", "J"), P(nu, p=0), 20)
    half_pi = ExactComplex(0, 0, F(1, 2))
    assert all(EC(a) == half_pi * EC(b) for a, b in zip(arccos.coeffs, core_j.coeffs))


def test_reduction_at_theta_zero():
    nu = F(2, 5)
    core_i = bessel_core("I", ExactComplex(nu), 20)
    seq = generate(FamilyId("power", "I"), P(nu, p=F(3, 4), theta=0), 20)
    assert all(EC(a) == EC(b) for a, b in zip(seq.coeffs, core_i.coeffs))


def test_calibrate_parity_offsets():
    pr = P(F(1, 3), p=2, theta=F(1, 2))
    assert calibrate_parity(FamilyId("cos", "J"), pr).offset == 0
    assert calibrate_parity(FamilyId("sin", "J"), pr).offset == F(1, 2)
    assert calibrate_parity(FamilyId("sinh", "I"), pr).offset == F(1, 2)
    assert calibrate_parity(FamilyId("cosh", "I"), pr).offset == 0
    cal = calibrate_parity(FamilyId("sin", "I"), pr)
    assert cal.verified_to >= 20


def test_calibrate_parity_rejects_non_parity_family():
    with pytest.raises(CalibrationFailed):
        calibrate_parity(FamilyId("exp", "J"), P(F(1, 3), p=1))


def test_deep_families_fall_back_flagged():
    pr = P(F(1, 3), p=2)
    seq = generate(FamilyId("arcsin", "J"), pr, 20)
    assert seq.source == "oracle_fallback"
    target = oracle_coeffs(FamilyId("arcsin", "J"), pr, 20)
    assert all(EC(a) == EC(b) for a, b in zip(seq.coeffs, target.coeffs))
    raw = generate(FamilyId("arcsin", "J"), pr, 20, allow_fallback=False)
    assert raw.source == "recurrence"
    assert any(EC(a) != EC(b) for a, b in zip(raw.coeffs, target.coeffs))


def test_recurrence_spec_fields():
    spec = recurrence_spec(FamilyId("power", "J"), P(F(1, 3), p=1, theta=F(1, 2)))
    assert spec.depth == 4
    assert spec.min_n == 3
    assert len(spec.seeds) >= spec.depth
    assert len(spec.beta(5)) == spec.depth
    spec_sin = recurrence_spec(FamilyId("sin", "J"), P(F(1, 3), p=1))
    assert spec_sin.index_offset == F(1, 2)


def test_float_parity_generation_accurate_at_larger_n():
    # forward instability must be absorbed by the internal guard bits
    from besselprod.oracle import oracle_coeffs
    import gmpy2
    from besselprod.numerics import precision

    params = make_params(nu=F(1, 3), p=2, precision_bits=128)
    seq = generate(FamilyId("cos", "J"), params, 200)
    target = oracle_coeffs(FamilyId("cos", "J"), params, 200)
    with precision(128):
        for n in range(201):
            err = abs(seq[n] - target[n])
            scale = max(gmpy2.mpfr(1), abs(target[n]))
            assert err / scale < gmpy2.mpfr(2) ** -100, n
