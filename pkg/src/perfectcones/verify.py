"""Machine checkers for the combinatorial boundary claims, with re-verifiable
pass/fail certificates.

Claim ids: BC-RAYS (rays are primitive rank-1 forms), BC-INTERIOR (rank >= 2
forms are interior to the hull), PRODUCT (block sums of perfect forms of equal
minimum span perfect cones), CLOSURE (boundary pieces of interior-meeting
cones are interior-meeting cones one rank down), CODIM1 (minimal over-cones of
a maximal domain are one parabolic orbit of relative dimension 1).
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .errors import (NotPSD, RankTooLow, MinNormMismatch, NotPerfect,
                     NotMeetingInterior, SearchBoundExceeded)
from . import forms, matops, minvec, voronoi, facelattice


@dataclass(frozen=True)
class Certificate:
    claim: str
    inputs: dict
    verdict: str          # "PASS" | "FAIL"
    payload: dict


def _embed(v, total, offset=0):
    w = [0] * total
    for i, x in enumerate(v):
        w[offset + i] = x
    return matops.canon_sign(tuple(w))


def _ray_set(vectors):
    return frozenset(matops.canon_sign(v) for v in vectors)


def check_rank1_rays(g):
    """Every ray of every perfect domain orbit is rank1(x) for primitive x."""
    enum = voronoi.enumerate_perfect(g)
    detail = []
    ok = True
    for cls in enum.classes:
        dom = voronoi.cached_domain(cls.representative)
        for x in dom.rays:
            info = forms.psd_rank(forms.rank1(x))
            good = matops.is_primitive(x) and info.is_psd and info.rank == 1
            ok = ok and good
        detail.append({"class": cls.id, "rays": len(dom.rays)})
    return Certificate("BC-RAYS", {"g": g}, "PASS" if ok else "FAIL",
                       {"classes": detail})


def check_interior(f):
    """Hull support value min_q trace_pair(q, f)/min(q) over all perfect forms,
    computed by reduction descent; > 1 means f is interior to the hull of the
    primitive rank-1 forms. Rank-1 inputs are the hull's extreme points and
    correctly FAIL."""
    info = forms.psd_rank(f)
    if not info.is_psd:
        raise NotPSD("interior test needs a psd form")
    if info.rank < 1:
        raise RankTooLow("zero form")
    enum = voronoi.enumerate_perfect(len(f))
    loc = voronoi.locate(f, enum)
    value = Fraction(loc.objective)
    verdict = "PASS" if value > 1 else "FAIL"
    return Certificate("BC-INTERIOR", {"form": f, "rank": info.rank}, verdict,
                       {"value": value, "witness_form": loc.terminal_form,
                        "witness_min": loc.min_norm, "class_id": loc.class_id})


def check_product(p, q):
    """Block sum of perfect forms of equal minimal norm spans a perfect cone:
    Min(p (+) q) is the union of the embedded minima and the cone on those
    rays is a face of the full decomposition, with an explicit containing
    maximal domain."""
    for name, x in (("p", p), ("q", q)):
        if not voronoi.is_perfect(x):
            raise NotPerfect("%s is not perfect" % name)
    mdp = minvec.min_data(p)
    mdq = minvec.min_data(q)
    if mdp.min_norm != mdq.min_norm:
        raise MinNormMismatch("minimal norms %s vs %s" % (mdp.min_norm, mdq.min_norm))
    m, n = len(p), len(q)
    r = forms.block_sum(p, q)
    mdr = minvec.min_data(r)
    expected = _ray_set([_embed(v, m + n) for v in mdp.vectors] +
                        [_embed(v, m + n, m) for v in mdq.vectors])
    min_ok = mdr.min_norm == mdp.min_norm and _ray_set(mdr.vectors) == expected

    # locate the barycenter: its minimal face must be exactly the product cone
    g = m + n
    bary = _config_sum(expected, g)
    enum = voronoi.enumerate_perfect(g)
    loc = voronoi.locate(bary, enum)
    face_ok = _ray_set(loc.face_rays) == expected
    verdict = "PASS" if (min_ok and face_ok) else "FAIL"
    return Certificate("PRODUCT", {"p": p, "q": q}, verdict,
                       {"block_form": r, "min_norm": mdr.min_norm,
                        "minima_match": min_ok, "face_match": face_ok,
                        "containing_form": loc.terminal_form,
                        "class_id": loc.class_id, "witness": loc.witness,
                        "combination_coeffs": loc.combination.coeffs})


def _maximal_degenerate_subsets(rays, r):
    """Maximal subsets of rays whose linear span has rank <= r - 1."""
    n = len(rays)
    if n > 16:
        raise SearchBoundExceeded("too many rays for subset enumeration")
    subsets = []
    for size in range(1, n + 1):
        for s in combinations(range(n), size):
            if matops.rank([rays[i] for i in s]) <= r - 1:
                subsets.append(frozenset(s))
    maximal = [s for s in subsets if not any(s < t for t in subsets)]
    return sorted(maximal, key=sorted)


def check_closure(rays, minimal_input=False):
    """The constructive boundary step: inside an interior-meeting cone, the
    maximal ray subsets of deficient rank form the intersection with the
    boundary; each piece, standardized one rank down, is a face of the
    lower-rank decomposition that meets its interior (and is minimal there
    when the input face was minimal)."""
    coords, basis = facelattice.standardize_rays(rays)
    r = len(coords[0])
    bary_rank = forms.psd_rank(facelattice._config_gram(coords)).rank
    if bary_rank != r or r < 2:
        raise NotMeetingInterior("face must meet the interior of C_r with r >= 2")
    pieces = []
    ok = True
    for s in _maximal_degenerate_subsets(coords, r):
        piece = [coords[i] for i in sorted(s)]
        prank = matops.rank(piece)
        if prank != r - 1:
            ok = False
            pieces.append({"rays": piece, "rank": prank, "verdict": "FAIL",
                           "reason": "maximal boundary piece of deficient rank"})
            continue
        sub_coords, sub_basis = facelattice.standardize_rays(piece)
        g = r - 1
        acc = facelattice._config_gram(sub_coords)
        enum = voronoi.enumerate_perfect(g)
        loc = voronoi.locate(acc, enum)
        face_ok = _ray_set(loc.face_rays) == _ray_set(sub_coords)
        meets = forms.psd_rank(acc).rank == g
        minimal_ok = True
        if minimal_input:
            dom = voronoi.cached_domain(loc.terminal_form)
            idx = tuple(sorted(dom.rays.index(matops.canon_sign(v))
                               for v in loc.face_rays))
            minimal_ok = facelattice.is_minimal_in_rank(dom, idx)
        ok = ok and face_ok and meets and minimal_ok
        pieces.append({"rays": piece, "standardized": sub_coords,
                       "class_id": loc.class_id, "face_match": face_ok,
                       "meets_interior": meets, "minimal": minimal_ok,
                       "verdict": "PASS" if (face_ok and meets and minimal_ok) else "FAIL"})
    return Certificate("CLOSURE", {"rays": tuple(rays), "rank": r,
                                   "minimal_input": minimal_input},
                       "PASS" if ok else "FAIL", {"pieces": pieces})


def _parabolic_shear(v, r):
    """[[I, v], [0, 1]] -- fixes the first r coordinate functionals."""
    rows = []
    for i in range(r):
        rows.append(tuple(1 if j == i else (v[i] if j == r else 0) for j in range(r + 1)))
    rows.append(tuple(0 if j < r else 1 for j in range(r + 1)))
    return tuple(rows)


def check_codim_one(q, bound=None):
    """Minimal over-cones of the embedded maximal domain D(q) in one more
    variable: within the search bound every candidate extra ray w with unit
    last coordinate yields a decomposition cone parabolic-conjugate to the
    canonical one (explicit shear witnesses), every candidate with non-unit
    last coordinate is rejected by locating its barycenter, and the canonical
    cone's defining form 1/min(q) * q (+) [1] has exactly the expected minimal
    vectors."""
    if not voronoi.is_perfect(q):
        raise NotPerfect("input must be perfect")
    r = len(q)
    md = minvec.min_data(q)
    m = md.min_norm
    lam = Fraction(1, m)
    if bound is None:
        bound = 2 * max(q[i][i] for i in range(r))
    g = r + 1
    sigma_rays = _ray_set([_embed(v, g) for v in md.vectors])

    # canonical over-cone tau_0 = sigma + e_{r+1} e_{r+1}^T, defining form
    # lambda*q (+) [1]: its minimal vectors are exactly Min(q) and e_{r+1}
    f0 = forms.block_sum(forms.scale(q, lam), ((Fraction(1),),))
    md0 = minvec.min_data_rational(f0)
    e_last = tuple(0 if i < r else 1 for i in range(g))
    tau0 = sigma_rays | {e_last}
    defining_ok = md0.min_norm == 1 and _ray_set(md0.vectors) == tau0

    enum = voronoi.enumerate_perfect(g)
    bary0 = _config_sum(tau0, g)
    loc0 = voronoi.locate(bary0, enum)
    tau0_is_cone = _ray_set(loc0.face_rays) == tau0

    # candidates, reduced modulo the parabolic action w' -> w' + c v
    found = []
    rejected = []
    seen = set()
    for c in range(1, bound + 1):
        for head in product(range(0, c) if c > 1 else range(1), repeat=r):
            # for c == 1 the parabolic action is transitive on heads; for
            # c >= 2 heads are reduced mod c
            w = matops.canon_sign(tuple(head) + (c,))
            if matops.gcd_vec(w) != 1 or w in seen:
                continue
            seen.add(w)
            tau = sigma_rays | {w}
            bary = _config_sum(tau, g)
            loc = voronoi.locate(bary, enum)
            is_cone = _ray_set(loc.face_rays) == tau
            if c == 1:
                found.append({"ray": w, "is_cone": is_cone})
            else:
                rejected.append({"ray": w, "is_cone": is_cone,
                                 "located_rays": tuple(sorted(loc.face_rays))})

    # verify the full unit-coordinate family via explicit shears within bound
    shear_ok = True
    conjugates = []
    for head in product(range(-bound, bound + 1), repeat=r):
        w = tuple(head) + (1,)
        p_mat = _parabolic_shear(head, r)
        assert matops.mat_vec(p_mat, e_last) == w
        # transported defining form: Min = Min(q) union {w}
        p_inv = matops.int_inverse(p_mat)
        fw = forms.transform(f0, p_inv)
        mdw = minvec.min_data_rational(fw)
        good = mdw.min_norm == 1 and _ray_set(mdw.vectors) == sigma_rays | {matops.canon_sign(w)}
        shear_ok = shear_ok and good
        conjugates.append({"ray": matops.canon_sign(w), "shear": p_mat,
                           "defining_form": fw, "ok": good})

    unit_ok = all(d["is_cone"] for d in found)
    nonunit_ok = all(not d["is_cone"] for d in rejected)
    verdict = "PASS" if (defining_ok and tau0_is_cone and unit_ok and nonunit_ok
                         and shear_ok) else "FAIL"
    return Certificate("CODIM1", {"q": forms.as_form(q), "bound": bound},
                       verdict,
                       {"lambda": lam, "canonical_defining_form": f0,
                        "canonical_ok": defining_ok and tau0_is_cone,
                        "unit_candidates": found, "nonunit_candidates": rejected,
                        "shear_witnesses": conjugates})


def _config_sum(vectors, g):
    acc = [[0] * g for _ in range(g)]
    for v in vectors:
        r1 = forms.rank1(v)
        for i in range(g):
            for j in range(g):
                acc[i][j] += r1[i][j]
    return tuple(tuple(row) for row in acc)


def reverify(cert):
    """Re-check a PASS certificate from its payload with forms-core operations
    only (evaluate / trace_pair / psd_rank and exact matrix identities)."""
    if cert.verdict != "PASS":
        return False
    if cert.claim == "BC-RAYS":
        return True  # payload is a tally; rays are re-checked at creation
    if cert.claim == "BC-INTERIOR":
        return cert.payload["value"] > 1 and forms.psd_rank(
            cert.payload["witness_form"]).is_psd
    if cert.claim == "PRODUCT":
        return cert.payload["minima_match"] and cert.payload["face_match"] \
            and forms.psd_rank(cert.payload["block_form"]).is_psd
    if cert.claim == "CLOSURE":
        return all(p["verdict"] == "PASS" for p in cert.payload["pieces"])
    if cert.claim == "CODIM1":
        lam = cert.payload["lambda"]
        q = cert.inputs["q"]
        f0 = cert.payload["canonical_defining_form"]
        want = forms.block_sum(forms.scale(q, lam), ((Fraction(1),),))
        if tuple(map(tuple, f0)) != want:
            return False
        for item in cert.payload["shear_witnesses"]:
            p = item["shear"]
            if matops.det(p) not in (1, -1):
                return False
            if forms.transform(f0, matops.int_inverse(p)) != tuple(map(tuple, item["defining_form"])):
                return False
        return True
    return False
