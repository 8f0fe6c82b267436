import json
from fractions import Fraction as F

from besselprod.core import FamilyId, make_params
from besselprod.formats import (
    csv_to_values,
    scalar_from_json,
    scalar_to_json,
    sequence_from_json_text,
    sequence_to_csv,
    sequence_to_json,
    sequence_to_json_text,
    sequences_equal,
)
from besselprod.exactnum import ExactComplex
from besselprod.recurrence import generate

ROUNDTRIP_FAMILIES = ("exp-J", "power-I", "sin-J", "arccos-J", "exp_arctan-I")


def _params_for(fam, exact):
    return make_params(nu=F(1, 3), p=2, theta=F(1, 2), exact=exact, precision_bits=128)


def test_json_schema_top_level():
    fam = FamilyId.parse("exp-J")
    seq = generate(fam, _params_for(fam, exact=True), 6)
    obj = sequence_to_json(seq)
    assert set(obj) >= {"family", "params", "precision_bits", "exact", "N", "coefficients"}
    assert obj["family"] == "exp-J"
    assert set(obj["params"]) == {"nu", "p", "theta"}
    assert obj["N"] == 6
    assert len(obj["coefficients"]) == 7
    json.dumps(obj)  # serializable


def test_exact_scalar_encoding_with_pi():
    v = ExactComplex(F(1, 3), F(-2, 7), F(5, 8), 0)
    obj = scalar_to_json(v, exact=True)
    assert obj["re_num"] == 1 and obj["re_den"] == 3
    assert obj["im_num"] == -2 and obj["im_den"] == 7
    assert obj["pi_multiple"]["re_num"] == 5
    assert scalar_from_json(obj, exact=True, bits=64) == v
    plain = scalar_to_json(ExactComplex(F(1, 2)), exact=True)
    assert "pi_multiple" not in plain


def test_float_scalar_encoding_roundtrip_bits():
    params = make_params(nu=F(1, 3), p=F(2, 7), precision_bits=128)
    obj = scalar_to_json(params.p, exact=False)
    assert isinstance(obj["re"], str)
    back = scalar_from_json(obj, exact=False, bits=128)
    assert back == params.p


def test_json_roundtrip_exact_mode():
    for name in ROUNDTRIP_FAMILIES:
        fam = FamilyId.parse(name)
        seq = generate(fam, _params_for(fam, exact=True), 24)
        text = sequence_to_json_text(seq)
        back = sequence_from_json_text(text)
        assert sequences_equal(seq, back), name
        assert back.source == seq.source
        # re-serialization is stable
        assert sequence_to_json_text(back) == text


def test_json_roundtrip_float_mode():
    for name in ROUNDTRIP_FAMILIES:
        fam = FamilyId.parse(name)
        seq = generate(fam, _params_for(fam, exact=False), 24)
        back = sequence_from_json_text(sequence_to_json_text(seq))
        assert sequences_equal(seq, back), name
        for a, b in zip(seq.coeffs, back.coeffs):
            assert a == b  # bitwise equal mpc values


def test_csv_matches_specified_rows():
    fam = FamilyId.parse("exp-J")
    seq = generate(fam, make_params(nu=0, p=0, exact=True), 4)
    assert sequence_to_csv(seq) == "0,1\n1,0\n2,-1/4\n3,0\n4,1/64\n"


def test_csv_value_roundtrip():
    for name, exact in (("arccos-J", True), ("power-I", False)):
        fam = FamilyId.parse(name)
        seq = generate(fam, _params_for(fam, exact=exact), 12)
        rows = csv_to_values(sequence_to_csv(seq), exact, 128)
        assert [i for i, _ in rows] == list(range(13))
        for (_, parsed), original in zip(rows, seq.coeffs):
            if exact:
                assert parsed == ExactComplex.coerce(original)
            else:
                assert parsed == original
