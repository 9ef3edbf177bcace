import pytest

import tle


def test_exponent_report():
    r = tle.exponent_report(15)
    assert r["n"] == 15
    assert r["exponents"]["pm"]["kind"] == "infinite"
    assert all(c["status"] == "verified" for c in r["certificates"])


def test_coefficients_exact():
    c = tle.coefficients(12, p=4)
    assert c["coefficients"]["A2"] == "1575/1"
    assert c["coefficients"]["A1"] == "141/1"
    with pytest.raises(tle.TleError):
        tle.coefficients(12, p=4, k=2)


def test_stability_flip():
    assert tle.singular_stability(15, p=6000) == "unstable"
    assert tle.singular_stability(15, p=7000) == "stable"


def test_certify_single_lemma():
    b = tle.certify("8.3", n_max=100)
    assert b["schema_version"] == 1
    assert b["summary"]["status"] == "verified"
    assert [c["claim_id"] for c in b["certificates"]] == ["lemma-8.3"]


def test_alpha_split():
    assert tle.alpha_split(21, "0.9342")["status"] == "verified"
    assert tle.alpha_split(21, "0.99")["status"] == "falsified"


def test_fd_check():
    r = tle.fd_check(12, 4, "gaussian", 1, 1.2)
    assert r["relative_residual"] < 1e-6
    assert 1.8 < r["convergence_order_estimate"] < 2.2


def test_radial_and_pohozaev():
    prof = tle.radial_solve(15, 7)
    assert prof["kind"] == "radial-profile"
    assert not prof["blow_up"]
    rep = tle.pohozaev(prof, 2.0)
    assert rep["relative_residual"] < 1e-6
    with pytest.raises(tle.TleError):
        tle.pohozaev(prof, 5.0)
