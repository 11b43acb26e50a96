import pytest

import gforge


def test_factor_and_discriminant():
    assert gforge.factor("Y^2 - 1", "GF(5)") == [("Y + 1", 1), ("Y + 4", 1)]
    assert gforge.factor("(Y - 1)^2*(Y^2 + 1)") == [("Y - 1", 2), ("Y^2 + 1", 1)]
    assert gforge.discriminant_y("Y^3 + T*Y + T") == "-4*T^3 - 27*T^2"


def test_specialization():
    report = gforge.specialize_at("Y^2 - T", 2, "GF(5)")
    assert report["unramified"]
    assert [f["degree"] for f in report["fibers"]] == [2]
    decomposition = gforge.frobenius_decomposition("Y^2 - T", 2, "GF(5)")
    assert decomposition[0]["group_order"] == 2


def test_group_certificates():
    assert gforge.certify_sn("Y^5 - Y - 1")["claimed_group"] == "S5"
    reducible = gforge.certify_sn("(Y - 1)*(Y - 2)", 100)
    assert reducible["claimed_group"] == "inconclusive"
    assert gforge.cubic_galois_group("Y^3 - 3*Y - 1")["claimed_group"] == "C3"


def test_trinomials():
    split = gforge.split_trinomial("Q", alpha=2)
    assert split["a"] == "-343/36"
    assert split["roots"] == ["-7/6", "-7/3", "7/2"]
    assert gforge.lp_trinomial(0)["discriminant_nonsquare"]
    with pytest.raises(gforge.GforgeError, match="SplitTrinomialNotFound"):
        gforge.split_trinomial("GF(7)")


def test_bb_construct_round_trip():
    cert = gforge.bb_construct("Y^3 - 2", 3)
    assert cert["fiber0"] == "Y^3 - 2"
    assert cert["sn_certificate"]["claimed_group"] == "S3"
    assert gforge.verify_bb_certificate(cert) == {"ok": True, "reasons": []}
    cert["R"] += " + 1"
    result = gforge.verify_bb_certificate(cert)
    assert not result["ok"]
    assert "node mismatch at T=0" in result["reasons"]


def test_skew():
    ring = "GF(4);frob"
    assert gforge.skew_mul(ring, "T", "g") == "g^2*T"
    assert gforge.right_divide(ring, "T^2", "g*T") == ("g*T", "0")
    assert gforge.ore_witness(ring, "T", "g") == ("1", "g^2*T")
    assert gforge.center_test(ring, "T^2")
    assert not gforge.center_test(ring, "g*T^2")
    assert gforge.skew_mul("H;conj(i)", "T", "j") == "-j*T"


def test_groups():
    assert gforge.normalizer_quotient(3, "S3", "(1 2)")["order"] == 1
    assert gforge.normalizer_quotient(4, "S4", "(1 2)(3 4), (1 3)(2 4)")["order"] == 6
    assert gforge.degree_bookkeeping(6, 2) == 3
    with pytest.raises(gforge.GforgeError, match="NonDivisible"):
        gforge.degree_bookkeeping(6, 4)


def test_parse_errors_carry_position():
    with pytest.raises(gforge.ParseError, match="column 10"):
        gforge.factor("Y^2 + Y +")
    assert issubclass(gforge.ParseError, gforge.GforgeError)
