from fractions import Fraction

import pytest

from perfectcones import forms, matops
from perfectcones.errors import DimensionMismatch, NotPositiveDefinite


A2 = ((2, -1), (-1, 2))
A3 = ((2, -1, 0), (-1, 2, -1), (0, -1, 2))


def test_evaluate_and_bilinear():
    assert forms.evaluate(A2, (1, 0)) == 2
    assert forms.evaluate(A2, (1, 1)) == 2
    assert forms.evaluate(A2, (2, 1)) == 6
    assert forms.bilinear(A2, (1, 0), (0, 1)) == -1
    with pytest.raises(DimensionMismatch):
        forms.evaluate(A2, (1, 0, 0))


def test_trace_pair_matches_vec_coordinates():
    p = ((1, 2), (2, 5))
    f = ((3, -1), (-1, 0))
    assert forms.trace_pair(p, f) == 3 + 0 + 2 * (2 * -1)
    assert matops.vec_dot(forms.dual_vec(p), forms.sym_vec(f)) == forms.trace_pair(p, f)


def test_rank1_and_transform():
    r = forms.rank1((1, -2))
    assert r == ((1, -2), (-2, 4))
    u = ((1, 1), (0, 1))
    t = forms.transform(A2, u)
    # congruent: same determinant, still positive definite
    assert matops.det(t) == matops.det(A2) == 3
    assert forms.is_positive_definite(t)


def test_block_sum():
    b = forms.block_sum(A2, ((2,),))
    assert b == ((2, -1, 0), (-1, 2, 0), (0, 0, 2))


def test_psd_rank_definite():
    info = forms.psd_rank(A3)
    assert info.is_psd and info.rank == 3 and info.kernel_basis == ()


def test_psd_rank_rank_one_all_ones():
    # regression: elimination must use the pivot row before zeroing it
    info = forms.psd_rank(forms.rank1((1, 1, 1)))
    assert info.is_psd and info.rank == 1
    assert len(info.kernel_basis) == 2


def test_psd_rank_indefinite_and_kernel():
    assert not forms.psd_rank(((1, 2), (2, 1))).is_psd
    assert not forms.psd_rank(((0, 1), (1, 0))).is_psd
    info = forms.psd_rank(((1, 1, 0), (1, 1, 0), (0, 0, 0)))
    assert info.is_psd and info.rank == 1
    for k in info.kernel_basis:
        assert forms.evaluate(((1, 1, 0), (1, 1, 0), (0, 0, 0)), k) == 0


def test_root_forms():
    assert forms.root_form(1) == ((1,),)
    assert forms.root_form(2) == A2
    assert matops.det(forms.root_form(4)) == 5


def test_primitive_integral():
    q = ((Fraction(4, 3), Fraction(-2, 3)), (Fraction(-2, 3), Fraction(4, 3)))
    assert forms.primitive_integral(q) == ((2, -1), (-1, 2))


def test_matops_hnf_kernel_saturation():
    a = ((2, 4, 4), (-6, 6, 12), (10, 4, 16))
    h, u = matops.hnf_rows(a)
    assert matops.matmul(u, a) == h
    assert matops.det(u) in (1, -1)

    k = matops.integer_kernel(((1, 1, 1), (2, 2, 2)))
    assert len(k) == 2
    for v in k:
        assert matops.mat_vec(((1, 1, 1), (2, 2, 2)), v) == (0, 0)

    s = matops.saturation_basis(((2, 0, 2),))
    assert len(s) == 1 and matops.is_primitive(s[0])


def test_extend_to_unimodular():
    rows = ((2, 1), )
    m = matops.extend_to_unimodular(rows)
    assert m[0] == rows[0]
    assert matops.det(m) in (1, -1)
    rows = ((1, 2, 3), (0, 1, 4))
    m = matops.extend_to_unimodular(rows)
    assert m[:2] == rows and matops.det(m) in (1, -1)


def test_matops_inverse_solve():
    a = ((2, 1), (1, 1))
    assert matops.matmul(a, matops.int_inverse(a)) == matops.identity(2)
    x = matops.solve(((1, 2), (3, 4)), (5, 6))
    assert x == (Fraction(-4), Fraction(9, 2))
