"""Minimal vectors of classical forms, computed exactly.

The enumeration is Fincke-Pohst over a rational LDL^T split of the Gram
matrix; no floating point ever decides anything, so the reported minima and
vector lists are exact.
"""

from perfectcones import forms, minvec

D4 = ((2, 0, -1, 0), (0, 2, -1, 0), (-1, -1, 2, -1), (0, 0, -1, 2))

for name, q in (("A2", forms.root_form(2)),
                ("A3", forms.root_form(3)),
                ("D4", D4),
                ("A5", forms.root_form(5))):
    md = minvec.min_data(q)
    print("%s: min %s with %d vector pairs" % (name, md.min_norm, len(md.vectors)))
    if len(q) == 2:
        print("   minimal vectors:", md.vectors)

# shells: everything up to twice the minimum
q = forms.root_form(2)
print("\nA2 vectors with q(x) <= 4, sorted by value:")
for v, value in minvec.vectors_up_to(q, 4):
    print("  q%s = %s" % (v, value))

# a badly skewed basis is handled by size reduction first
skew = ((10, 9), (9, 10))
red, u = minvec.size_reduce(skew)
print("\nsize reduction of %s -> %s (same minimum %s)"
      % (skew, red, minvec.min_data(skew).min_norm))
