"""Exact rational feasibility for small cone problems.

Only two questions are ever asked: is there a nonnegative nonzero
combination of given vectors that vanishes, and is there a functional
strictly positive on all of them.  Gordan's alternative says exactly one
holds, and each answer comes with a certificate that is checked exactly.
"""

from fractions import Fraction


def feasible_point(A, b):
    """Some x >= 0 with A x = b, or None.  Phase one simplex, Bland's rule."""
    m = len(A)
    k = len(A[0]) if m else 0
    rows = []
    for i in range(m):
        r = [Fraction(a) for a in A[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            r = [-a for a in r]
            rhs = -rhs
        rows.append(r + [Fraction(int(i == j)) for j in range(m)] + [rhs])
    basis = [k + i for i in range(m)]
    width = k + m
    # objective: minimise the sum of artificials, kept as reduced costs
    cost = [Fraction(0)] * (width + 1)
    for r in rows:
        for j in range(k):
            cost[j] -= r[j]
        cost[width] -= r[width]
    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        for i, r in enumerate(rows):
            if r[enter] > 0:
                ratio = r[width] / r[enter]
                if best is None or ratio < best[0] or \
                        (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            break  # cannot happen in phase one: objective is bounded below
        i = best[1]
        p = rows[i][enter]
        rows[i] = [x / p for x in rows[i]]
        for t in range(m):
            if t != i and rows[t][enter] != 0:
                f = rows[t][enter]
                rows[t] = [x - f * y for x, y in zip(rows[t], rows[i])]
        f = cost[enter]
        cost = [x - f * y for x, y in zip(cost, rows[i])]
        basis[i] = enter
    if cost[width] != 0:
        return None
    x = [Fraction(0)] * k
    for i, j in enumerate(basis):
        if j < k:
            x[j] = rows[i][width]
    return x


def vanishing_combination(vectors):
    """lambda >= 0 with sum lambda = 1 and sum lambda_i v_i = 0, or None."""
    if not vectors:
        return None
    dim = len(vectors[0])
    A = [[v[c] for v in vectors] for c in range(dim)] + [[1] * len(vectors)]
    b = [0] * dim + [1]
    return feasible_point(A, b)


def positive_functional(vectors):
    """w with <v, w> >= 1 for every v, or None."""
    if not vectors:
        return []
    dim = len(vectors[0])
    # w = wp - wm, surplus s >= 0
    A = []
    for i, v in enumerate(vectors):
        A.append(list(v) + [-x for x in v] +
                 [-1 if j == i else 0 for j in range(len(vectors))])
    x = feasible_point(A, [1] * len(vectors))
    if x is None:
        return None
    return [x[j] - x[j + dim] for j in range(dim)]


def fourier_motzkin_feasible(rows, rhs):
    """Decide whether {w : rows . w >= rhs} is nonempty by elimination."""
    system = [([Fraction(a) for a in r], Fraction(c)) for r, c in zip(rows, rhs)]
    dim = len(rows[0]) if rows else 0
    for var in range(dim):
        pos = [s for s in system if s[0][var] > 0]
        negs = [s for s in system if s[0][var] < 0]
        rest = [s for s in system if s[0][var] == 0]
        for p, pc in pos:
            for q, qc in negs:
                a, b = p[var], -q[var]
                rest.append(([b * x + a * y for x, y in zip(p, q)], b * pc + a * qc))
        system = _dedupe(rest)
    return all(c <= 0 for _, c in system)


def _dedupe(system):
    seen = {}
    for r, c in system:
        lead = next((x for x in r if x != 0), None)
        if lead is None:
            key = (tuple(r), c)
        else:
            s = abs(lead)
            key = (tuple(x / s for x in r), c / s)
        seen[key] = (list(key[0]), key[1])
    return list(seen.values())
