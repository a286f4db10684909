"""Perfection testing, Voronoi domains, facet crossing and the enumeration of
perfect forms up to GL_g(Z)-equivalence, plus reduction of psd forms into the
perfect-cone decomposition."""

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (NotPositiveDefinite, NotPerfect, NotPSD, FacetUnbounded,
                     SearchOverflow, DimensionTooLarge)
from . import forms, matops, minvec, equivalence, polyhedra


@dataclass(frozen=True)
class PerfectDomain:
    form: tuple                 # the perfect form q
    min_norm: object
    rays: tuple                 # minimal vector pairs (canonical, lex sorted)
    span_dim: int               # g(g+1)/2 for maximal domains
    facet_normals: tuple        # primitive integral symmetric matrices,
                                # trace_pair(H, rank1(ray)) >= 0, == 0 on the facet

    def facet_rays(self, i):
        h = self.facet_normals[i]
        return tuple(j for j, x in enumerate(self.rays) if forms.evaluate(h, x) == 0)


@dataclass(frozen=True)
class PerfectClass:
    id: int
    representative: tuple
    fingerprint: tuple
    aut_order: int
    neighbors: tuple            # (facet index, orbit size, class id, witness)


@dataclass(frozen=True)
class Enumeration:
    g: int
    classes: tuple              # PerfectClass, BFS order from the root form
    edges: tuple                # (src id, facet index, dst id)


def is_perfect(q):
    """True iff the rank-1 forms of Min(q) span the g(g+1)/2-dim form space."""
    md = minvec.min_data(q)
    vecs = [forms.sym_vec(forms.rank1(x)) for x in md.vectors]
    return matops.rank(vecs) == forms.sym_dim(len(q))


def domain(q):
    """The perfect domain D(q): rays and complete irredundant facet normals."""
    md = minvec.min_data(q)
    g = len(q)
    rays = md.vectors
    vecs = [forms.sym_vec(forms.rank1(x)) for x in rays]
    span = matops.rank(vecs)
    if span != forms.sym_dim(g):
        raise NotPerfect("form is not perfect (ray span %d < %d)" % (span, forms.sym_dim(g)))
    if g == 1:
        normals = ()
    else:
        duals = polyhedra.dual_extreme_rays(vecs)
        normals = tuple(forms.primitive_integral(forms.dual_vec_to_sym(h, g))
                        for h in duals)
    return PerfectDomain(forms.as_form(q), md.min_norm, rays, span, normals)


_domain_cache = {}


def cached_domain(q):
    q = forms.as_form(q)
    if q not in _domain_cache:
        _domain_cache[q] = domain(q)
    return _domain_cache[q]


def _vectors_up_to_rational(f, bound):
    """vectors_up_to for a rational positive definite form."""
    from math import gcd
    den = 1
    for row in f:
        for x in row:
            if isinstance(x, Fraction):
                den = den * x.denominator // gcd(den, x.denominator)
    fi = tuple(tuple(int(x * den) for x in row) for row in f)
    return [(v, Fraction(val, den)) for v, val in minvec.vectors_up_to(fi, Fraction(bound) * den)]


def neighbor(dom, facet):
    """The contiguous perfect form across the given facet, min-normalized to a
    primitive integral matrix.

    Bracket the crossing parameter by exponential doubling, contract by exact
    rational bisection, then finish with the exact linear solve for the first
    new minimal vectors; the result is certified by a final min_data call.
    """
    q = dom.form
    m = dom.min_norm
    h = dom.facet_normals[facet]
    hval = lambda y: forms.evaluate(h, y)
    facet_rays = set(dom.facet_rays(facet))
    if forms.psd_rank(h).is_psd:
        raise FacetUnbounded("facet normal is psd; no crossing exists")

    def probe(rho):
        f = forms.add(q, forms.scale(h, rho))
        info = forms.psd_rank(f)
        if not (info.is_psd and info.rank == len(q)):
            return ("npd", None)
        md = minvec.min_data_rational(f)
        if md.min_norm < m:
            return ("over", f)
        assert md.min_norm == m
        if any(hval(v) < 0 for v in md.vectors):
            return ("exact", f)
        return ("under", None)

    lo = Fraction(0)
    hi = None
    rho = Fraction(1)
    state = None
    for _ in range(64):
        state, f_at = probe(rho)
        if state == "under":
            lo = rho
            rho *= 2
        else:
            hi = rho
            break
    if hi is None:
        raise SearchOverflow("no crossing bracketed after 64 doublings")

    for _ in range(256):
        if state != "npd":
            break
        mid = (lo + hi) / 2
        state, f_at = probe(mid)
        if state == "under":
            lo = mid
        else:
            hi = mid
    if state == "npd":
        raise SearchOverflow("bisection failed to reach the crossing region")

    if state == "exact":
        rho_star = hi if hi is not None else rho
        candidates = []
    else:  # "over": all candidate new minimal vectors are below level m here
        candidates = [v for v, _ in _vectors_up_to_rational(f_at, m) if hval(v) < 0]
        assert candidates
        rho_star = min(Fraction(m - forms.evaluate(q, v), hval(v)) for v in candidates)

    qn = forms.add(q, forms.scale(h, rho_star))
    qn = forms.primitive_integral(qn)
    md = minvec.min_data(qn)
    new_rays = set(md.vectors)
    assert all(dom.rays[j] in new_rays for j in facet_rays), "facet rays must stay minimal"
    assert any(hval(v) < 0 for v in md.vectors), "crossing must add vectors beyond the facet"
    if not is_perfect(qn):
        raise NotPerfect("crossed form is not perfect")
    return qn


def _ray_permutation(rays, u):
    """Index permutation of canonical ray vectors under x -> canon(U x)."""
    index = {v: i for i, v in enumerate(rays)}
    perm = []
    for v in rays:
        w = matops.canon_sign(matops.mat_vec(u, v))
        perm.append(index[w])
    return tuple(perm)


def facet_orbits(dom, aut_gens):
    """Orbits of facet indices under the automorphism action on rays."""
    n = len(dom.facet_normals)
    facet_sets = [frozenset(dom.facet_rays(i)) for i in range(n)]
    lookup = {}
    for i, s in enumerate(facet_sets):
        lookup.setdefault(s, []).append(i)
    perms = [_ray_permutation(dom.rays, u) for u in aut_gens]
    seen = set()
    orbits = []
    for i in range(n):
        if i in seen:
            continue
        orbit = {i}
        frontier = [facet_sets[i]]
        reached = {facet_sets[i]}
        while frontier:
            nxt = []
            for s in frontier:
                for p in perms:
                    t = frozenset(p[j] for j in s)
                    if t not in reached:
                        reached.add(t)
                        nxt.append(t)
                        orbit.update(lookup[t])
            frontier = nxt
        seen |= orbit
        orbits.append(tuple(sorted(orbit)))
    return orbits


_enum_cache = {}


def enumerate_perfect(g, force=False):
    """All perfect forms in g variables up to GL_g(Z)-equivalence.

    BFS over facet crossings from the A_g root form; one edge per facet-orbit,
    each edge carrying a witness mapping the crossed form into the stored
    representative of its class.
    """
    if g < 1:
        raise ValueError("dimension must be >= 1")
    if g > 6 and not force:
        raise DimensionTooLarge("g > 6 needs force=True")
    if g in _enum_cache:
        return _enum_cache[g]

    root = forms.root_form(g)
    reps = []
    fps = []
    fp_index = {}

    def add_class(q):
        qr, _ = minvec.size_reduce(q)
        cid = len(reps)
        reps.append(forms.as_form(qr))
        fp = equivalence.fingerprint(qr)
        fps.append(fp)
        fp_index.setdefault(fp.key(), []).append(cid)
        return cid

    def identify(q):
        fp = equivalence.fingerprint(q)
        for cid in fp_index.get(fp.key(), []):
            w = equivalence.are_equivalent(q, reps[cid])
            if w is not None:
                return cid, w
        return None, None

    add_class(root)
    neighbors = {0: []}
    edges = []
    frontier = [0]
    while frontier:
        cid = frontier.pop(0)
        rep = reps[cid]
        dom = cached_domain(rep)
        gens, _ = equivalence.automorphisms(rep)
        for orbit in facet_orbits(dom, gens):
            fidx = orbit[0]
            qn = neighbor(dom, fidx)
            target, witness = identify(qn)
            if target is None:
                target = add_class(qn)
                neighbors[target] = []
                frontier.append(target)
                witness = equivalence.are_equivalent(qn, reps[target])
            neighbors[cid].append((fidx, len(orbit), target, witness))
            edges.append((cid, fidx, target))

    classes = []
    for cid, rep in enumerate(reps):
        _, order = equivalence.automorphisms(rep)
        classes.append(PerfectClass(cid, rep, fps[cid].key(), order,
                                    tuple(neighbors[cid])))
    result = Enumeration(g, tuple(classes), tuple(edges))
    _enum_cache[g] = result
    return result


@dataclass(frozen=True)
class ConicCombination:
    rays: tuple        # integer vectors x; the cone generators are x x^T
    coeffs: tuple      # nonnegative rationals
    target: tuple      # rational symmetric form, == sum coeffs[i] rank1(rays[i])

    def verify(self):
        g = len(self.target)
        acc = [[Fraction(0)] * g for _ in range(g)]
        for v, c in zip(self.rays, self.coeffs):
            r = forms.rank1(v)
            for i in range(g):
                for j in range(g):
                    acc[i][j] += c * r[i][j]
        return all(acc[i][j] == Fraction(self.target[i][j])
                   for i in range(g) for j in range(g))


@dataclass(frozen=True)
class Location:
    terminal_form: tuple        # perfect form q with f in D(q)
    min_norm: object
    face_rays: tuple            # rays of the minimal face of D(q) containing f
    combination: ConicCombination
    objective: object           # trace_pair(q, f) / min(q) at the optimum
    steps: int
    class_id: object = None     # set when an enumeration is supplied
    witness: object = None      # W with W^T q W == representative


def locate(f, enum=None, max_steps=1000):
    """Voronoi reduction: walk facet crossings until f lies in the domain.

    The objective trace_pair(q, f)/min(q) strictly decreases across accepted
    steps; returns the terminal domain, the minimal face containing f, and an
    explicit nonnegative combination of its rays equal to f.
    """
    info = forms.psd_rank(f)
    if not info.is_psd or all(x == 0 for row in f for x in row):
        raise NotPSD("reduction needs a nonzero psd form")
    g = len(f)
    q = forms.root_form(g)
    steps = 0
    obj = Fraction(forms.trace_pair(q, f), 1) / cached_domain(q).min_norm
    while True:
        dom = cached_domain(q)
        vals = [forms.trace_pair(h, f) for h in dom.facet_normals]
        neg = [(v, i) for i, v in enumerate(vals) if v < 0]
        if not neg:
            break
        if steps >= max_steps:
            raise SearchOverflow("reduction exceeded %d steps" % max_steps)
        _, i = min(neg, key=lambda t: (t[0], t[1]))
        q = neighbor(dom, i)
        steps += 1
        new_obj = Fraction(forms.trace_pair(q, f), 1) / cached_domain(q).min_norm
        assert new_obj < obj, "objective must strictly decrease"
        obj = new_obj

    dom = cached_domain(q)
    tight = [i for i, v in enumerate(vals) if v == 0] if dom.facet_normals else []
    if tight:
        face_idx = [j for j in range(len(dom.rays))
                    if all(forms.evaluate(dom.facet_normals[i], dom.rays[j]) == 0
                           for i in tight)]
    else:
        face_idx = list(range(len(dom.rays)))
    face_rays = tuple(dom.rays[j] for j in face_idx)
    lam = polyhedra.nonneg_combination([forms.sym_vec(forms.rank1(v)) for v in face_rays],
                                       forms.sym_vec(f))
    assert lam is not None, "psd form must decompose over its containing face"
    combo = ConicCombination(face_rays, lam, forms.as_form(f))
    assert combo.verify()

    class_id = None
    witness = None
    if enum is not None:
        fp = equivalence.fingerprint(q).key()
        for cls in enum.classes:
            if cls.fingerprint == fp:
                w = equivalence.are_equivalent(q, cls.representative)
                if w is not None:
                    class_id = cls.id
                    witness = w
                    break
        assert class_id is not None, "terminal form must belong to an enumerated class"
    return Location(q, dom.min_norm, face_rays, combo, obj, steps, class_id, witness)


def reduce_form(f, g_enum=True, max_steps=1000):
    """Spec-level reduce: class id, containing face and conic combination."""
    enum = enumerate_perfect(len(f)) if g_enum else None
    return locate(f, enum, max_steps)
