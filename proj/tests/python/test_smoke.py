"""Smoke tests for the python bindings."""

import pytest

import dessinforge as df


def test_build_group_and_arithmetic():
    q8 = df.build_group("quaternion")
    assert q8.order == 8
    assert q8.label == "quaternion"
    z = q8.commutator(q8.x, q8.y)
    assert q8.element_order(z) == 2
    assert z == q8.power(q8.x, 2)
    assert q8.is_generating_pair(q8.x, q8.y)
    assert not q8.is_generating_pair(q8.identity, q8.identity)


def test_dessins_quaternion():
    res = df.dessins("quaternion")
    assert res["generating_pairs"] == 24
    assert res["aut_order"] == 24
    assert len(res["classes"]) == 1
    cls = res["classes"][0]
    assert cls["type"] == [4, 4, 4]
    assert cls["genus"] == 2
    assert cls["multiplicity"] == 2
    assert cls["totally_symmetric"] is True


def test_metacyclic_universal():
    assert len(df.dessins("metacyclic64")["classes"]) == 3
    u = df.universal("metacyclic64")
    assert u["order"] == 128
    assert u["invariants"]["type"] == [8, 8, 8]
    assert u["invariants"]["genus"] == 41
    assert u["unique"] is True
    assert u["totally_symmetric"] is True


def test_psi_and_lift_unit():
    assert df.psi(12) == 24
    assert [df.psi(n) for n in (1, 7, 8)] == [1, 8, 12]
    assert df.lift_unit(2, 3, 12) == 5
    with pytest.raises(ValueError):
        df.lift_unit(2, 4, 8)


def test_cyclic_counts_match_psi():
    for n in (2, 5, 12):
        assert len(df.dessins(f"cyclic:{n}")["classes"]) == df.psi(n)


def test_verify_family_report():
    rep = df.verify_family("iii", 2, 2)
    assert rep["ok"] is True
    claims = {c["claim"]: c for c in rep["claims"]}
    assert claims["dessin classes"]["computed_value"] == "1"
    assert claims["multiplicity"]["computed_value"] == "2"


def test_unique_dessin_groups():
    assert df.is_unique_dessin_group("abelsq:p=5,a=1") is True
    assert df.is_unique_dessin_group("metacyclic64") is False


def test_spec_errors():
    with pytest.raises(ValueError):
        df.build_group("family:i,p=2,a=1,b=1")
    with pytest.raises(RuntimeError):
        df.build_group("cyclic:100", order_cap=10)
