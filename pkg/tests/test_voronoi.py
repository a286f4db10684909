from fractions import Fraction

import pytest

from perfectcones import forms, matops, minvec, equivalence, voronoi
from perfectcones.errors import NotPSD, DimensionTooLarge

A2 = forms.root_form(2)
A3 = forms.root_form(3)


def test_is_perfect():
    assert voronoi.is_perfect(A2)
    assert voronoi.is_perfect(forms.root_form(4))
    assert not voronoi.is_perfect(((2, 0), (0, 2)))
    assert voronoi.is_perfect(((1,),))


def test_domain_a2():
    dom = voronoi.domain(A2)
    assert dom.rays == ((0, 1), (1, 0), (1, 1))
    assert dom.span_dim == 3 and len(dom.facet_normals) == 3
    for h in dom.facet_normals:
        tight = [x for x in dom.rays if forms.evaluate(h, x) == 0]
        assert len(tight) == 2
        assert all(forms.evaluate(h, x) >= 0 for x in dom.rays)


def test_domain_g1():
    dom = voronoi.domain(((1,),))
    assert dom.rays == ((1,),) and dom.facet_normals == ()


def test_neighbor_a2_returns_a2_class():
    dom = voronoi.domain(A2)
    for i in range(len(dom.facet_normals)):
        q2 = voronoi.neighbor(dom, i)
        assert q2 != A2 or True
        assert equivalence.are_equivalent(A2, q2) is not None


def test_neighbor_is_involutive():
    dom = voronoi.domain(A3)
    for i in range(len(dom.facet_normals)):
        q2 = voronoi.neighbor(dom, i)
        dom2 = voronoi.domain(q2)
        shared = frozenset(dom.rays[j] for j in dom.facet_rays(i))
        back = None
        for k in range(len(dom2.facet_normals)):
            if frozenset(dom2.rays[j] for j in dom2.facet_rays(k)) == shared:
                back = voronoi.neighbor(dom2, k)
                break
        assert back == A3


def test_enumerate_counts():
    for g, n in ((1, 1), (2, 1), (3, 1), (4, 2)):
        enum = voronoi.enumerate_perfect(g)
        assert len(enum.classes) == n
    enum = voronoi.enumerate_perfect(4)
    assert sorted(c.aut_order for c in enum.classes) == [240, 1152]
    with pytest.raises(DimensionTooLarge):
        voronoi.enumerate_perfect(7)


def test_enumeration_witnesses():
    enum = voronoi.enumerate_perfect(4)
    reps = {c.id: c.representative for c in enum.classes}
    for c in enum.classes:
        dom = voronoi.cached_domain(c.representative)
        for facet, orbit_size, dst, witness in c.neighbors:
            assert orbit_size >= 1
            crossed = voronoi.neighbor(dom, facet)
            assert forms.transform(crossed, witness) == reps[dst]


def test_locate_identity_face():
    enum = voronoi.enumerate_perfect(2)
    loc = voronoi.locate(((1, 0), (0, 1)), enum)
    assert set(loc.face_rays) == {(0, 1), (1, 0)}
    assert loc.objective == 2
    comb = loc.combination
    assert comb.verify()
    assert sorted(comb.coeffs) == [1, 1]


def test_locate_rank_one_hits_a_ray():
    enum = voronoi.enumerate_perfect(3)
    loc = voronoi.locate(forms.rank1((2, 1, 1)), enum)
    assert loc.objective == 1  # trace_pair(q, x x^T) = q(x) = min on a ray
    assert len(loc.face_rays) == 1


def test_locate_interior_point():
    enum = voronoi.enumerate_perfect(2)
    # the barycenter of D(A2) is interior to it
    bary = ((2, 1), (1, 2))
    loc = voronoi.locate(bary, enum)
    assert loc.terminal_form == A2
    assert loc.objective == 3
    assert set(loc.face_rays) == set(voronoi.domain(A2).rays)
    assert loc.class_id == 0
    assert forms.transform(loc.terminal_form, loc.witness) == enum.classes[0].representative


def test_locate_rejects_non_psd():
    enum = voronoi.enumerate_perfect(2)
    with pytest.raises(NotPSD):
        voronoi.locate(((1, 2), (2, 1)), enum)


def test_reduce_form():
    u = ((1, 4), (0, 1))
    q = forms.transform(A2, u)
    loc = voronoi.reduce_form(q)
    assert loc.class_id == 0
    md = minvec.min_data(loc.terminal_form)
    assert md.min_norm == loc.min_norm


def test_conic_combination_verify():
    bad = voronoi.ConicCombination(((1, 0),), (Fraction(1),), ((2, 0), (0, 0)))
    assert not bad.verify()
