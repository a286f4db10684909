import pytest

from perfectcones import forms, voronoi, verify
from perfectcones.errors import MinNormMismatch, NotPerfect, NotPSD

A2 = forms.root_form(2)
A3 = forms.root_form(3)


def test_rank1_rays_pass():
    for g in (1, 2, 3):
        assert verify.check_rank1_rays(g).verdict == "PASS"


def test_interior_pass_and_fail():
    c = verify.check_interior(((2, 0), (0, 2)))
    assert c.verdict == "PASS" and c.payload["value"] > 1
    c = verify.check_interior(forms.rank1((1, 2)))
    assert c.verdict == "FAIL" and c.payload["value"] == 1
    c = verify.check_interior(((1, 1, 0), (1, 1, 0), (0, 0, 1)))  # psd rank 2
    assert c.verdict == "PASS"
    with pytest.raises(NotPSD):
        verify.check_interior(((1, 2), (2, 1)))


def test_product_pass():
    c = verify.check_product(((2,),), ((2,),))
    assert c.verdict == "PASS"
    c = verify.check_product(A2, A2)
    assert c.verdict == "PASS"
    assert c.payload["minima_match"] and c.payload["face_match"]


def test_product_errors():
    with pytest.raises(MinNormMismatch):
        verify.check_product(A2, ((4,),))
    with pytest.raises(NotPerfect):
        verify.check_product(((2, 0), (0, 2)), A2)


def test_closure_top_face():
    dom = voronoi.domain(A3)
    c = verify.check_closure(dom.rays)
    assert c.verdict == "PASS"
    assert all(p["verdict"] == "PASS" for p in c.payload["pieces"])


def test_closure_minimal_face():
    c = verify.check_closure(((1, 0), (0, 1)), minimal_input=True)
    assert c.verdict == "PASS"


def test_codim_one_r1():
    c = verify.check_codim_one(((2,),))
    assert c.verdict == "PASS"
    assert all(not d["is_cone"] for d in c.payload["nonunit_candidates"])
    assert verify.reverify(c)


def test_codim_one_r2():
    c = verify.check_codim_one(A2)
    assert c.verdict == "PASS"
    assert len(c.payload["unit_candidates"]) == 1
    assert c.payload["nonunit_candidates"]
    assert c.payload["canonical_ok"]
    assert verify.reverify(c)


def test_codim_one_rejects_imperfect():
    with pytest.raises(NotPerfect):
        verify.check_codim_one(((2, 0), (0, 2)))
