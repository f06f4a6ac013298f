import pytest

import ncforms


def test_weyl_normal_order():
    alg = ncforms.Algebra.weyl(1)
    assert alg.normalize("p1*q1") == "q1*p1 + h"
    assert alg.normalize("q1*p1") == "q1*p1"


def test_free_differential_and_primitive():
    alg = ncforms.Algebra.free(2)
    assert alg.d("x1*x2") == "y1*x2 + x1*y2"
    primitive, remainder = alg.primitive("x1*y1 + y1*x1")
    assert primitive == "x1^2"
    assert remainder == "0"
    assert alg.d(primitive) == "y1*x1 + x1*y1"


def test_not_closed_raises():
    alg = ncforms.Algebra.free(2)
    with pytest.raises(ncforms.NotClosedError):
        alg.primitive("x1*y1")


def test_qspace_partial_and_normalize():
    alg = ncforms.Algebra.qspace(2)
    assert alg.normalize("x2*x1") == "Q[1,2]^-1*x1*x2"
    assert alg.partial("x1*x2", "x2") == "Q[1,2]*x1"


def test_contract():
    alg = ncforms.Algebra.free(1)
    assert alg.contract("y1", {"x1": "x1^2"}) == "x1^2"


def test_complex_audits():
    for preset, kwargs in [
        ("aff1", {}),
        ("gl", {"n": 2, "variant": "left"}),
        ("so", {"n": 3}),
        ("general", {"lie": "sl2"}),
    ]:
        alg = ncforms.Algebra.preset(preset, **kwargs)
        audit = alg.audit()
        assert audit["d_compatible"], preset
        assert audit["locally_confluent"], preset


def test_ghostless_obstruction():
    verdict = ncforms.sl2_ghostless()
    assert verdict["determinant"] == "0"
    assert not verdict["exists"]


def test_discrete_roundtrip():
    w = ncforms.discrete_d("y*x^2", variant=1)
    prim = ncforms.discrete_primitive(w["dy"], w["dx"], variant=1)
    again = ncforms.discrete_d(prim, variant=1)
    assert again == w


def test_clebsch_presets():
    for name in ["aff1", "sl2", "gl2", "so3", "gl2-fermionic"]:
        assert ncforms.clebsch_verify(name)["ok"], name


def test_verify_suite():
    result = ncforms.verify("free-calculus", seed=11, cases=10, max_deg=3)
    assert result["ok"]
    assert any(c["name"].startswith("poincare/") for c in result["checks"])
