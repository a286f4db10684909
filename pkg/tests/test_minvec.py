from fractions import Fraction

import pytest

from perfectcones import forms, matops, minvec
from perfectcones.errors import NotPositiveDefinite

A2 = forms.root_form(2)
D4 = ((2, 0, -1, 0), (0, 2, -1, 0), (-1, -1, 2, -1), (0, 0, -1, 2))


def test_min_data_a2():
    md = minvec.min_data(A2)
    assert md.min_norm == 2
    assert set(md.vectors) == {(0, 1), (1, 0), (1, 1)}


def test_min_data_a3_d4():
    md = minvec.min_data(forms.root_form(3))
    assert md.min_norm == 2 and len(md.vectors) == 6
    md = minvec.min_data(D4)
    assert md.min_norm == 2 and len(md.vectors) == 12


def test_min_data_rejects_indefinite():
    with pytest.raises(NotPositiveDefinite):
        minvec.min_data(((1, 2), (2, 1)))


def test_vectors_up_to_identity():
    q = ((1, 0), (0, 1))
    vs = minvec.vectors_up_to(q, 4)
    assert [v for v, _ in vs][:2] == [(0, 1), (1, 0)]
    assert len(vs) == 6  # (0,1),(1,0),(1,1),(1,-1),(0,2),(2,0)
    assert all(forms.evaluate(q, v) == val for v, val in vs)
    values = [val for _, val in vs]
    assert values == sorted(values)


def test_vectors_up_to_is_complete_vs_bruteforce():
    q = ((2, 1), (1, 3))
    bound = 12
    brute = set()
    for x in range(-8, 9):
        for y in range(-8, 9):
            if (x, y) != (0, 0) and forms.evaluate(q, (x, y)) <= bound:
                brute.add(matops.canon_sign((x, y)))
    assert {v for v, _ in minvec.vectors_up_to(q, bound)} == brute


def test_min_data_unimodular_invariance():
    u = ((1, 2, 0), (0, 1, -1), (0, 0, 1))
    q = forms.root_form(3)
    qt = forms.transform(q, u)
    md, mdt = minvec.min_data(q), minvec.min_data(qt)
    assert md.min_norm == mdt.min_norm
    ui = matops.int_inverse(u)
    mapped = {matops.canon_sign(matops.mat_vec(ui, v)) for v in md.vectors}
    assert mapped == set(mdt.vectors)


def test_min_data_rational():
    q = tuple(tuple(Fraction(x, 2) for x in row) for row in A2)
    md = minvec.min_data_rational(q)
    assert md.min_norm == 1
    assert set(md.vectors) == {(0, 1), (1, 0), (1, 1)}


def test_size_reduce_is_congruence():
    q = ((10, 9), (9, 10))
    red, u = minvec.size_reduce(q)
    assert forms.transform(q, u) == red
    assert matops.det(u) in (1, -1)
    assert max(abs(x) for row in red for x in row) <= 10


def test_int_range_exact():
    assert minvec._int_range(Fraction(0), 4) == (-2, 2)
    assert minvec._int_range(Fraction(1, 2), Fraction(1, 4)) == (-1, 0)
    lo, hi = minvec._int_range(Fraction(1, 2), Fraction(1, 5))
    assert lo > hi  # empty: no integer x has (x + 1/2)^2 <= 1/5
    assert minvec._int_range(Fraction(-7, 2), Fraction(0)) == (1, 0)


def test_shell_enumeration_terminates_on_awkward_form():
    # regression: an empty coordinate interval used to loop forever
    q = ((4, -2, -2, 1, 2), (-2, 4, 1, -2, -1), (-2, 1, 4, -2, -1),
         (1, -2, -2, 4, -1), (2, -1, -1, -1, 4))
    md = minvec.min_data(q)
    assert md.min_norm == 4 and len(md.vectors) == 15
    assert len(minvec.vectors_up_to(q, 8)) == 30
