"""Voronoi reduction: locate any psd form inside the perfect-cone decomposition.

The descent strictly decreases trace_pair(q, f) / min(q) over perfect forms q
until f lies in D(q); the minimal face containing f comes with an exact
nonnegative combination of its rays.
"""

from perfectcones import forms, voronoi

enum = voronoi.enumerate_perfect(3)

targets = {
    "identity": ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
    "rank-1": forms.rank1((2, 1, 1)),
    "rank-2 degenerate": ((1, 1, 0), (1, 1, 0), (0, 0, 1)),
    "skewed pd": ((5, 4, 0), (4, 5, 2), (0, 2, 3)),
}

for name, f in targets.items():
    loc = voronoi.locate(f, enum)
    comb = loc.combination
    assert comb.verify()
    print("%s:" % name)
    print("  steps %d, objective %s, class %s" % (loc.steps, loc.objective, loc.class_id))
    print("  minimal face has %d ray(s):" % len(loc.face_rays))
    for v, c in zip(comb.rays, comb.coeffs):
        print("    %s * %s%s^T" % (c, v, v))

# the objective is the support value of f against the hull of rank-1 forms:
# 1 exactly on the rank-1 rays, > 1 for everything of rank >= 2
assert voronoi.locate(forms.rank1((1, 1, 0)), enum).objective == 1
assert voronoi.locate(((2, 0, 0), (0, 2, 0), (0, 0, 2)), enum).objective > 1
print("\nsupport values behave as expected (== 1 on rank-1 rays, > 1 inside)")
