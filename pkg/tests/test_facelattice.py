from math import comb

from perfectcones import forms, voronoi, facelattice

A2 = forms.root_form(2)
A3 = forms.root_form(3)


def test_faces_a2():
    dom = voronoi.domain(A2)
    fs = facelattice.faces(dom)
    by_dim = {}
    for f in fs:
        by_dim[f.dim] = by_dim.get(f.dim, 0) + 1
    assert by_dim == {1: 3, 2: 3, 3: 1}
    top = [f for f in fs if f.dim == 3][0]
    assert top.barycenter_rank == 2
    for f in fs:
        if f.dim == 1:
            assert f.barycenter_rank == 1


def test_simplicial_f_vector_binomial():
    # D(A3) is simplicial: 6 rays in dimension 6
    dom = voronoi.domain(A3)
    assert len(dom.rays) == dom.span_dim == 6
    fs = facelattice.faces(dom)
    by_dim = {}
    for f in fs:
        by_dim[f.dim] = by_dim.get(f.dim, 0) + 1
    assert by_dim == {d: comb(6, d) for d in range(1, 7)}


def test_subfaces_and_minimality():
    dom = voronoi.domain(A2)
    fs = facelattice.faces(dom)
    top = [f for f in fs if f.dim == 3][0]
    subs = facelattice.subfaces(dom, top.ray_subset)
    # all proper nonempty ray subsets that are faces: 3 rays + 3 facets
    assert len(subs) == 6
    # a single ray has rank 1 and is minimal among rank-1 faces
    ray_face = [f for f in fs if f.dim == 1][0]
    assert facelattice.is_minimal_in_rank(dom, ray_face.ray_subset)
    # the top face has rank 2 but contains smaller rank-2 faces
    assert not facelattice.is_minimal_in_rank(dom, top.ray_subset)


def test_standardize_rays():
    rays = ((1, 0, 2), (0, 0, 1))
    coords, basis = facelattice.standardize_rays(rays)
    assert len(coords[0]) == 2
    # full-rank input: saturation is the whole lattice, coordinates unchanged
    assert facelattice.standardize_rays(((2, 0), (0, 3)))[0] == ((2, 0), (0, 3))
    # a ray on a sublattice direction standardizes to a primitive coordinate
    assert facelattice.standardize_rays(((3, 6),))[0] == ((3,),)


def test_faces_equivalent():
    assert facelattice.faces_equivalent(((1, 0), (0, 1)), ((1, 1), (0, 1)))
    assert not facelattice.faces_equivalent(((1, 0), (0, 1)),
                                            ((1, 0), (0, 1), (1, 1)))


def test_strata_poset_g2():
    p = facelattice.strata_poset(2)
    labels = sorted((n.dim, n.rank, n.minimal) for n in p.nodes)
    assert labels == [(0, 0, True), (1, 1, True), (2, 2, True), (3, 2, False)]
    ids = {(n.dim, n.rank): n.id for n in p.nodes}
    assert set(p.edges) == {(ids[(0, 0)], ids[(1, 1)]),
                            (ids[(1, 1)], ids[(2, 2)]),
                            (ids[(2, 2)], ids[(3, 2)])}


def test_strata_poset_g3():
    p = facelattice.strata_poset(3)
    assert len(p.nodes) == 9
    minimal_by_rank = {}
    for n in p.nodes:
        if n.minimal:
            minimal_by_rank[n.rank] = minimal_by_rank.get(n.rank, 0) + 1
    # one minimal orbit per rank: the A_r principal cones
    assert minimal_by_rank == {0: 1, 1: 1, 2: 1, 3: 1}


def test_restriction_isomorphism():
    p2 = facelattice.strata_poset(2)
    p3 = facelattice.strata_poset(3)
    assert facelattice.posets_isomorphic(facelattice.restrict_poset(p3, 2), p2)
    assert not facelattice.posets_isomorphic(facelattice.restrict_poset(p3, 3), p2)


def test_codim_complement_check():
    assert facelattice.codim_complement_check(2, 1)
    assert facelattice.codim_complement_check(3, 2)
