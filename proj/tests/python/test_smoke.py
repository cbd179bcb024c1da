import pytest

import dnmod


def test_published_pairs():
    pairs = dnmod.published_pairs()
    assert len(pairs) == 17
    assert (2, 1) in pairs
    assert set(pairs) == set(dnmod.necessary_pairs(200, 6))


def test_recover_level_two():
    r = dnmod.recover(2, 1)
    assert r["matrix"]["N"] == 3
    assert r["operator"] == dnmod.dn_build(r["matrix"])


def test_operator_algebra():
    assert dnmod.normalize("D*t") == "t*(D+1)"
    op = dnmod.recover(11, 1)["operator"]
    minus = dnmod.normalize("-(" + op + ")")
    assert dnmod.adjoint(op) == minus


def test_fit_round_trip():
    op = dnmod.recover(5, 1)["operator"]
    assert dnmod.fit_d3(dnmod.phi_t(5, 1)) == op


def test_series():
    assert dnmod.reversion(["0", "1", "1", "0", "0"]) == ["0", "1", "-1", "2", "-5"]


def test_nilpotence():
    op = dnmod.recover(3, 1)["operator"]
    statuses = dict(dnmod.nilpotence(op, 5, 13))
    assert "not-nilpotent" not in statuses.values()
    assert dict(dnmod.nilpotence("D-t", 5, 7)) == {5: "not-nilpotent", 7: "not-nilpotent"}


def test_verify_single_pair():
    report = dnmod.verify([(6, 1)], nilpotence=False)
    assert report["ok"] is True


def test_errors():
    with pytest.raises(dnmod.Error):
        dnmod.normalize("t^")
    with pytest.raises(dnmod.Error):
        dnmod.recover(7, 7)
