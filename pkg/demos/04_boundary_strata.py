"""Boundary combinatorics: strata posets and the five certificate checkers.

Faces of the decomposition are graded by the rank of the sum of their ray
forms. Their GL-orbits form a poset; restricting the g=3 poset to rank <= 2
reproduces the g=2 poset, the combinatorial shadow of "each stratum closure
is built from lower-rank strata".
"""

from perfectcones import facelattice, forms, verify

p2 = facelattice.strata_poset(2)
p3 = facelattice.strata_poset(3)
for p in (p2, p3):
    print("g=%d strata orbits:" % p.g)
    for n in p.nodes:
        print("  node %d: dim %d, rank %d, minimal %s, orbit size %d"
              % (n.id, n.dim, n.rank, n.minimal, n.orbit_size))
assert facelattice.posets_isomorphic(facelattice.restrict_poset(p3, 2), p2)
print("restriction of g=3 poset to rank <= 2 is isomorphic to the g=2 poset\n")

# certificates: each checker returns PASS/FAIL with a re-verifiable payload
a2 = forms.root_form(2)
print("BC-RAYS g=3:", verify.check_rank1_rays(3).verdict)
print("BC-INTERIOR 2*I:", verify.check_interior(((2, 0), (0, 2))).verdict)
print("BC-INTERIOR rank-1 (expected FAIL):",
      verify.check_interior(forms.rank1((1, 2))).verdict)
print("PRODUCT A2 (+) A2:", verify.check_product(a2, a2).verdict)

dom_rays = ((1, 0), (0, 1))
print("CLOSURE of a minimal rank-2 face:",
      verify.check_closure(dom_rays, minimal_input=True).verdict)

c = verify.check_codim_one(a2)
print("CODIM1 over A2:", c.verdict)
print("  canonical defining form:", c.payload["canonical_defining_form"])
print("  unit-last-coordinate candidates fuse into one parabolic orbit;")
print("  %d reduced candidates with |last| >= 2 all rejected"
      % len(c.payload["nonunit_candidates"]))
assert verify.reverify(c)
