"""GL_g(Z)-equivalence of positive definite forms, with explicit witnesses.

The backtracking maps candidate columns u_1, ..., u_g with prescribed Gram
matrix; any complete Gram match between forms of equal (nonzero) determinant
is automatically unimodular.
"""

from dataclasses import dataclass

from .errors import NotPositiveDefinite, DimensionMismatch
from . import forms, matops, minvec


@dataclass(frozen=True)
class Fingerprint:
    dim: int
    det: int
    min_norm: object
    pair_count: int
    gram_abs: tuple      # sorted multiset |b(v,w)| over minimal pairs v < w
    shell2: tuple        # sorted value multiset of vectors up to 2*min_norm

    def key(self):
        return (self.dim, self.det, self.min_norm, self.pair_count,
                self.gram_abs, self.shell2)


def fingerprint(q, md=None):
    """GL-invariant necessary data for equivalence (never rejects a true one)."""
    if md is None:
        md = minvec.min_data(q)
    vecs = md.vectors
    gram = []
    for i in range(len(vecs)):
        for j in range(i + 1, len(vecs)):
            gram.append(abs(forms.bilinear(q, vecs[i], vecs[j])))
    shell = tuple(sorted(v for _, v in minvec.vectors_up_to(q, 2 * md.min_norm)))
    return Fingerprint(len(q), int(matops.det(q)), md.min_norm, len(vecs),
                       tuple(sorted(gram)), shell)


def _isometries(q1, q2, find_all=False):
    """All (or the first) U with U^T q1 U == q2.

    Candidate columns are drawn from vectors of q1 with the norms on q2's
    diagonal, pruned by partial Gram agreement; complete at these dimensions.
    """
    g = len(q1)
    if len(q2) != g:
        raise DimensionMismatch("forms of different dimension")
    maxdiag = max(q2[i][i] for i in range(g))
    cands = []
    for v, _ in minvec.vectors_up_to(q1, maxdiag):
        cands.append(v)
        cands.append(matops.vec_neg(v))
    norms = {}
    for v in cands:
        norms[v] = forms.evaluate(q1, v)

    results = []
    cols = []

    def rec(i):
        if i == g:
            u = matops.transpose(tuple(cols))
            results.append(u)
            return not find_all
        target_norm = q2[i][i]
        for v in cands:
            if norms[v] != target_norm:
                continue
            ok = True
            for j in range(i):
                if forms.bilinear(q1, cols[j], v) != q2[j][i]:
                    ok = False
                    break
            if ok:
                cols.append(v)
                if rec(i + 1):
                    return True
                cols.pop()
        return False

    rec(0)
    out = []
    for u in results:
        assert forms.transform(q1, u) == forms.as_form(q2)
        assert matops.det(u) in (1, -1)
        out.append(u)
    return out


def are_equivalent(q1, q2):
    """A unimodular U with U^T q1 U == q2, or None. Exact and complete."""
    if len(q1) != len(q2):
        raise DimensionMismatch("forms of different dimension")
    for q in (q1, q2):
        if not forms.is_positive_definite(q):
            raise NotPositiveDefinite("equivalence requires positive definite forms")
    if q1 == forms.as_form(q2):
        return matops.identity(len(q1))
    if fingerprint(q1).key() != fingerprint(q2).key():
        return None
    found = _isometries(q1, q2, find_all=False)
    return found[0] if found else None


def isometries_all(q1, q2):
    """Every unimodular U with U^T q1 U == q2."""
    for q in (q1, q2):
        if not forms.is_positive_definite(q):
            raise NotPositiveDefinite("isometry search requires positive definite forms")
    return _isometries(q1, q2, find_all=True)


def _closure(gens, g):
    ident = matops.identity(g)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for b in gens:
                c = matops.matmul(a, b)
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return seen


def automorphisms(q):
    """(generators, order) of { U unimodular : U^T q U == q }."""
    if not forms.is_positive_definite(q):
        raise NotPositiveDefinite("automorphisms require a positive definite form")
    elements = _isometries(q, q, find_all=True)
    order = len(elements)
    g = len(q)
    gens = []
    have = _closure(gens, g)
    for u in sorted(elements):
        if u not in have:
            gens.append(u)
            have = _closure(gens, g)
            if len(have) == order:
                break
    assert len(have) == order
    return gens, order
