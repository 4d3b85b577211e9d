"""Exact linear algebra over the integers and rationals.

Small dense matrices are plain lists of lists.  Smith and Hermite normal
forms come from sympy; the Gaussian elimination helpers below exist because
they run in tight loops (one call per transversal) where sympy's overhead
dominates.
"""

from fractions import Fraction
from math import floor

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import hermite_normal_form, invariant_factors


def det(M):
    """Determinant of a square integer matrix (Bareiss, fraction free)."""
    n = len(M)
    if n == 0:
        return 1
    a = [list(row) for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def inverse(M):
    """Inverse of a square rational matrix, or None if singular."""
    n = len(M)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(M)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def rank(M):
    """Rank over Q."""
    a = [[Fraction(x) for x in row] for row in M]
    r = 0
    cols = len(a[0]) if a else 0
    for c in range(cols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return r


def smith_invariants(M):
    """Invariant factors d1 | d2 | ... of an integer matrix, units included."""
    if not M or not M[0]:
        return ()
    return tuple(abs(int(d)) for d in invariant_factors(Matrix(M), domain=ZZ))


class LatticeReducer:
    """Canonical coset representatives for a full-rank sublattice of Z^k.

    The lattice is generated by the rows of `gens`.  Its column-style
    Hermite basis H is upper triangular, so every coset has exactly one
    member in the box prod [0, H[j][j]).
    """

    def __init__(self, gens):
        k = len(gens[0])
        H = hermite_normal_form(Matrix(gens).T)
        if H.shape != (k, k):
            raise ValueError("lattice is not of full rank")
        self.k = k
        self.H = [[int(H[i, j]) for j in range(k)] for i in range(k)]
        self.diag = tuple(self.H[j][j] for j in range(k))

    def reduce(self, v):
        """Canonical representative of v + L; v may hold Fractions."""
        v = list(v)
        H = self.H
        for j in range(self.k - 1, -1, -1):
            q = floor(Fraction(v[j]) / H[j][j])
            if q:
                for i in range(j + 1):
                    v[i] -= q * H[i][j]
        return tuple(v)

    def reduce_scaled(self, v, scale):
        """Integer version of reduce for the lattice scale * L."""
        v = list(v)
        H = self.H
        for j in range(self.k - 1, -1, -1):
            q = v[j] // (scale * H[j][j])
            if q:
                for i in range(j + 1):
                    v[i] -= q * scale * H[i][j]
        return tuple(v)

    def contains(self, v):
        return all(x == 0 for x in self.reduce(v))

    def index(self):
        out = 1
        for d in self.diag:
            out *= d
        return out
