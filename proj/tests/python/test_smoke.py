from fractions import Fraction

import pytest

import dslab


def test_algebra_dims():
    assert dslab.algebra("gl", 2, 2).sdim == (8, 8)
    assert dslab.algebra("p", 3, 3).sdim == (9, 9)
    g = dslab.algebra("gl", 1, 1)
    assert g.labels == ["I", "h", "E", "F"]
    assert g.bracket("E", "F") == g.element("I")
    assert g.is_lie()


def test_ds_kac_trivial():
    g = dslab.algebra("gl", 1, 1)
    u = dslab.odd(g, "E")
    d = dslab.ds(dslab.kac_module(g), u)
    assert d.sdim == (1, 1)
    back = dslab.ds_from_json(d.to_json())
    assert back.to_json() == d.to_json()


def test_ds_properties():
    g = dslab.algebra("gl", 2, 1)
    u = dslab.standard(g, r=1)
    assert u.rank == Fraction(1)
    nat = dslab.natural(g)
    assert dslab.ds(nat, u).sdim == (1, 0)
    assert dslab.ds(dslab.parity_shift(nat), u).sdim == (0, 1)
    assert dslab.ds(dslab.dual(nat), u).sdim == (1, 0)
    assert dslab.tensor_iso_check(nat, dslab.adjoint(g), u).passed
    assert dslab.gu_sdim(u) == (1, 0)


def test_odd_from_dict_and_square():
    g = dslab.algebra("gl", 1, 1)
    u = dslab.odd(g, {"E": 1, "F": Fraction(1, 2)})
    assert u.square == [Fraction(1), 0, 0, 0]


def test_verifications():
    g = dslab.algebra("gl", 2, 2)
    r = dslab.verify_thm3(g, dslab.standard(g, r=2))
    assert r.passed
    assert r.dims["g(u,k)"] == (0, 2)
    assert dslab.verify_kac_freeness(g, "det-det").passed
    assert dslab.verify_split(1).passed
    assert dslab.verify_spherical(2, [2, 2]).passed
    with pytest.raises(dslab.DslabError):
        dslab.verify_thm3(g, dslab.odd(g, "E13"))


def test_suite_and_cli(tmp_path):
    ok, reports, manifest = dslab.run_suite("split", seed=3)
    assert ok and len(reports) == 3
    assert '"seed": 3' in manifest
    code, out, _ = dslab.cli(["algebra", "info", "--family", "q", "--n", "2", "--out", str(tmp_path)])
    assert code == 0 and "(4|4)" in out
    assert dslab.cli(["verify", "nope"])[0] == 2


def test_errors_are_exceptions():
    with pytest.raises(dslab.DslabError):
        dslab.algebra("xx", 1, 1)
    g = dslab.algebra("gl", 1, 1)
    with pytest.raises(dslab.DslabError):
        dslab.ds(dslab.natural(g), dslab.odd(g, "I"))
