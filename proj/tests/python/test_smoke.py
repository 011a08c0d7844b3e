import json

import pytest

import cdiff


def test_field_arithmetic():
    f = cdiff.Field(3, 2)
    assert (f.p, f.n, f.q) == (3, 2, 9)
    assert f.modulus == [1, 0, 1]
    for a in range(1, 9):
        assert f.mul(a, f.inv(a)) == 1
        assert f.eta(a) in (1, -1)
    assert f.add(1, 2) == 0
    assert f.subfield_degree(2) == 1
    assert f.subfield_degree(3) == 2
    with pytest.raises(ValueError):
        f.inv(0)
    with pytest.raises(ValueError):
        cdiff.Field(9, 1)


def test_spectra():
    f7 = cdiff.Field(7)
    assert cdiff.spectrum_brute(f7, 6) == {0: 4, 2: 2, 3: 1}
    assert cdiff.spectrum_brute(f7, 0) == {0: 3, 1: 1, 2: 3}
    f9 = cdiff.Field(3, 2)
    closed = cdiff.closed_spectrum(f9, 3)
    assert closed["spectrum"] == {"0": 2, "1": 5, "2": 2}
    printed = cdiff.closed_spectrum(f9, 3, "printed")
    assert printed["spectrum"] == {"0": 1, "1": 7, "2": 1}
    assert cdiff.classify(f9, 3) == "GEN_ETA1_I+C_SQUARE_MINUS1"
    with pytest.raises(cdiff.InvalidInput):
        cdiff.closed_spectrum(f7, 1)


def test_moments_and_curves():
    f7 = cdiff.Field(7)
    assert cdiff.n4(f7, 6) == 115
    assert cdiff.n4(cdiff.Field(3), 2) == 15
    t = cdiff.curve_trace(cdiff.Field(5), 2)
    assert (t["count"], t["t"], t["s"]) == (8, -2, 2)
    assert cdiff.trace_x3_minus_x(7) == 0
    assert cdiff.trace_lift(0, 3, 2) == -6
    a, b = cdiff.cornacchia(13)
    assert a * a + b * b == 13 and b % 2 == 0 and (a + b) % 4 == 1
    A, B, C = cdiff.abc_sums(cdiff.Field(3, 2), 3)
    assert (A, B, C) == (2, 2, 5)


def test_verify_record():
    rec = cdiff.verify(cdiff.Field(3, 2), 3)
    assert rec["C_PRIMITIVE"]["match"] is True
    assert rec["AS_PRINTED"]["match"] is False
    assert rec["bridge"] is True
    assert rec["moments"]["second_ok"] is True


def test_run_cli():
    code, out, err = cdiff.run_cli(["spectrum", "--p", "7", "--c", "6"])
    assert code == 0 and err == ""
    assert json.loads(out)["uniformity"] == 3
    code, out, err = cdiff.run_cli(["spectrum", "--p", "7", "--c", "1"])
    assert code == 2 and out == "" and "out of scope" in err
