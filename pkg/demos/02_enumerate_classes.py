"""Enumerate perfect forms up to unimodular equivalence, g = 1..5.

Starting from the principal form A_g, the walk crosses one facet per orbit
under the automorphism group, identifies the contiguous form's class, and
stops when no facet leads anywhere new. Expected class counts: 1, 1, 1, 2, 3.
"""

import time

from perfectcones import equivalence, voronoi

for g in range(1, 6):
    t0 = time.time()
    enum = voronoi.enumerate_perfect(g)
    dt = time.time() - t0
    print("g=%d: %d class(es) in %.1fs" % (g, len(enum.classes), dt))
    for cls in enum.classes:
        dom = voronoi.cached_domain(cls.representative)
        print("  class %d: %d minimal pairs, |Aut| = %d, %d facets in %d orbit(s)"
              % (cls.id, len(dom.rays), cls.aut_order,
                 len(dom.facet_normals), len(cls.neighbors)))

# every neighbor edge carries a witness mapping the crossed form into the
# stored representative of its class
enum = voronoi.enumerate_perfect(4)
reps = {c.id: c.representative for c in enum.classes}
cls = enum.classes[0]
dom = voronoi.cached_domain(cls.representative)
facet, _, dst, witness = cls.neighbors[0]
crossed = voronoi.neighbor(dom, facet)
from perfectcones import forms
assert forms.transform(crossed, witness) == reps[dst]
print("\nneighbor witness re-verified: U^T q U == representative of class", dst)
assert equivalence.are_equivalent(crossed, reps[dst]) is not None
