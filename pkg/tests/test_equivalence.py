import random

from perfectcones import forms, matops, equivalence

A2 = forms.root_form(2)
A3 = forms.root_form(3)
A4 = forms.root_form(4)
D4 = ((2, 0, -1, 0), (0, 2, -1, 0), (-1, -1, 2, -1), (0, 0, -1, 2))


def random_unimodular(g, rng, shears=6):
    u = [list(row) for row in matops.identity(g)]
    for _ in range(shears):
        i, j = rng.sample(range(g), 2)
        t = rng.choice((-2, -1, 1, 2))
        for k in range(g):
            u[k][j] += t * u[k][i]
    return tuple(tuple(row) for row in u)


def test_fingerprint_invariance():
    u = ((1, 0), (3, 1))
    assert equivalence.fingerprint(A2).key() == \
        equivalence.fingerprint(forms.transform(A2, u)).key()


def test_equivalent_with_witness():
    b = ((2, 1), (1, 2))
    w = equivalence.are_equivalent(A2, b)
    assert w is not None and forms.transform(A2, w) == b


def test_not_equivalent():
    assert equivalence.are_equivalent(A4, D4) is None          # det 5 vs 4
    assert equivalence.are_equivalent(A2, ((2, 0), (0, 2))) is None


def test_automorphism_orders():
    for q, order in ((forms.root_form(1), 2), (A2, 12), (A3, 48),
                     (A4, 240), (D4, 1152)):
        gens, n = equivalence.automorphisms(q)
        assert n == order
        for u in gens:
            assert forms.transform(q, u) == q and matops.det(u) in (1, -1)


def test_witness_soundness_randomized():
    rng = random.Random(20260826)
    for _ in range(40):
        g = rng.choice((2, 3))
        q = forms.root_form(g)
        u = random_unimodular(g, rng)
        b = forms.transform(q, u)
        w = equivalence.are_equivalent(q, b)
        assert w is not None and forms.transform(q, w) == b


def test_isometries_all_is_closed_under_inverse():
    us = equivalence.isometries_all(A2, A2)
    assert len(us) == 12
    mats = set(us)
    for u in us:
        assert matops.int_inverse(u) in mats
