"""Exact rational polyhedral cone machinery.

- double description for the extreme rays of {y : <a_i, y> >= 0}
- a small phase-1 simplex for nonnegative conic combinations
"""

from fractions import Fraction

from . import matops


def dual_extreme_rays(constraints):
    """Extreme rays of {y in R^n : <a, y> >= 0 for each a in constraints}.

    The cone must be pointed (the constraints span R^n); rays are returned as
    primitive integer vectors sorted lexicographically. For a full-dimensional
    pointed primal cone these are exactly its facet normals.
    """
    rows = [tuple(a) for a in constraints]
    n = len(rows[0])
    if matops.rank(rows) < n:
        raise ValueError("constraints do not span; dual cone is not pointed")
    rows = sorted(rows)
    # greedy initial basis of n independent constraints
    base_idx = []
    for i, a in enumerate(rows):
        if matops.rank([rows[j] for j in base_idx] + [a]) > len(base_idx):
            base_idx.append(i)
        if len(base_idx) == n:
            break
    rest_idx = [i for i in range(len(rows)) if i not in base_idx]
    order = base_idx + rest_idx
    a0 = tuple(rows[i] for i in base_idx)
    inv = matops.inverse(a0)
    gens = [matops.primitive_vector(col) for col in matops.transpose(inv)]

    processed = [rows[i] for i in base_idx]
    # tight sets as frozensets of processed-constraint indices
    def tight_set(y, upto):
        return frozenset(k for k in range(upto) if matops.vec_dot(processed[k], y) == 0)

    tights = [tight_set(y, n) for y in gens]

    for pos in range(n, len(order)):
        a = rows[order[pos]]
        processed.append(a)
        vals = [matops.vec_dot(a, y) for y in gens]
        keep = [i for i, v in enumerate(vals) if v >= 0]
        negs = [i for i, v in enumerate(vals) if v < 0]
        poss = [i for i, v in enumerate(vals) if v > 0]
        new_gens = []
        new_tights = []
        for i in keep:
            new_gens.append(gens[i])
            t = tights[i] | ({len(processed) - 1} if vals[i] == 0 else frozenset())
            new_tights.append(t)
        for ip in poss:
            for im in negs:
                common = tights[ip] & tights[im]
                # combinatorial adjacency: no third generator tight on all of common
                adjacent = True
                for k in range(len(gens)):
                    if k in (ip, im):
                        continue
                    if common <= tights[k]:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                y = matops.primitive_vector(tuple(
                    vals[ip] * gens[im][j] - vals[im] * gens[ip][j] for j in range(n)))
                new_gens.append(y)
                new_tights.append(common | {len(processed) - 1})
        gens, tights = new_gens, new_tights

    uniq = sorted(set(gens))
    return uniq


def nonneg_combination(rays, target):
    """lambda >= 0 with sum lambda_i rays[i] == target, or None.

    Exact phase-1 simplex with Bland's rule. rays and target are vectors of
    equal length; the returned coefficients are Fractions.
    """
    m = len(target)
    k = len(rays)
    # tableau for: minimize sum of artificials s.t. R lambda + s = target (rows
    # flipped so target >= 0)
    rowsign = [1 if target[i] >= 0 else -1 for i in range(m)]
    a = [[Fraction(rowsign[i] * rays[j][i]) for j in range(k)] +
         [Fraction(1 if i == r else 0) for r in range(m)] +
         [Fraction(rowsign[i] * target[i])]
         for i in range(m)]
    basis = [k + i for i in range(m)]
    # cost row for phase 1 (sum of artificial rows)
    cost = [Fraction(0)] * (k + m + 1)
    for i in range(m):
        for j in range(k + m + 1):
            cost[j] += a[i][j]

    while True:
        enter = None
        for j in range(k):
            if cost[j] > 0 and j not in basis:
                enter = j
                break
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            if a[i][enter] > 0:
                ratio = a[i][-1] / a[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            break  # unbounded (cannot happen for phase 1)
        piv = a[leave][enter]
        a[leave] = [x / piv for x in a[leave]]
        for i in range(m):
            if i != leave and a[i][enter] != 0:
                f = a[i][enter]
                a[i] = [x - f * y for x, y in zip(a[i], a[leave])]
        f = cost[enter]
        cost = [x - f * y for x, y in zip(cost, a[leave])]
        basis[leave] = enter

    # optimal phase-1 value = remaining artificial mass
    value = sum(a[i][-1] for i in range(m) if basis[i] >= k)
    if value != 0:
        return None
    lam = [Fraction(0)] * k
    for i in range(m):
        if basis[i] < k:
            lam[basis[i]] = a[i][-1]
    return tuple(lam)
