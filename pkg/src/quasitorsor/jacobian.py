"""Jacobian groups, orientations and circuit reversal classes.

An orientation is stored as a tuple of signs s in {+1, -1}; its value is
s/2 on each edge.  Half-integer vectors in general are stored doubled, as
tuples of odd integers, so all arithmetic stays in the integers.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import exact
from .errors import TooLarge
from .orthomat import support, neg


def project_pi(v):
    n = len(v) // 2
    return tuple(v[i] + v[i + n] for i in range(n))


def orientation_str(O):
    return "".join("+" if s > 0 else "-" for s in O)


def parse_orientation(s):
    return tuple(1 if c == "+" else -1 for c in s.replace("−", "-"))


def all_orientations(n):
    return [tuple(O) for O in product((1, -1), repeat=n)]


class JacGroup:
    """Z^E modulo the span of pi(C) over signed circuits C."""

    def __init__(self, rep):
        self.n = rep.n
        self.generators = rep.i_plus_a()
        self.reducer = exact.LatticeReducer(self.generators)
        self.invariant_factors = tuple(d for d in exact.smith_invariants(self.generators)
                                       if d != 1)
        self.order = self.reducer.index()

    def __repr__(self):
        return f"JacGroup({self.describe()})"

    def describe(self):
        if not self.invariant_factors:
            return "0"
        return " + ".join(f"Z/{d}" for d in self.invariant_factors)

    def reduce(self, v):
        return tuple(int(x) for x in self.reducer.reduce(v))

    def reduce_half(self, v2):
        """Canonical doubled representative of the class of v2 / 2."""
        return self.reducer.reduce_scaled(v2, 2)

    def equivalent(self, u, v):
        return self.reducer.contains([a - b for a, b in zip(u, v)])

    def equivalent_half(self, u2, v2):
        d = [a - b for a, b in zip(u2, v2)]
        return all(x % 2 == 0 for x in d) and self.reducer.contains([x // 2 for x in d])

    def elements(self):
        """All canonical representatives, in lexicographic order."""
        return [tuple(v) for v in product(*(range(d) for d in self.reducer.diag))]

    @property
    def zero(self):
        return (0,) * self.n

    def add(self, g, h):
        return self.reduce([a + b for a, b in zip(g, h)])

    def neg(self, g):
        return self.reduce([-a for a in g])

    def scale(self, k, g):
        return self.reduce([k * a for a in g])

    def elem(self, v):
        return self.reduce(v)

    def element_order(self, g):
        k, h = 1, g
        while any(h):
            h = self.add(h, g)
            k += 1
        return k


def jac(rep):
    return JacGroup(rep)


@dataclass(frozen=True)
class ReversalClass:
    representative: tuple
    members: frozenset

    def __str__(self):
        return orientation_str(self.representative)

    def __contains__(self, O):
        return tuple(O) in self.members


def _class_sort_key(O):
    return orientation_str(O)


def reversal_classes(rep, max_n=16):
    """Partition of all orientations by circuit reversals."""
    n = rep.n
    if n > max_n:
        raise TooLarge(f"{n} edges exceeds the exhaustive limit {max_n}")
    parent = {O: O for O in all_orientations(n)}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for C in rep.circuits:
        p = project_pi(C)
        supp = [i for i in range(n) if p[i]]
        free = [i for i in range(n) if not p[i]]
        for bits in product((1, -1), repeat=len(free)):
            O = [0] * n
            for i in supp:
                O[i] = -p[i]
            for i, b in zip(free, bits):
                O[i] = b
            O = tuple(O)
            flipped = tuple(-O[i] if p[i] else O[i] for i in range(n))
            a, b = find(O), find(flipped)
            if a != b:
                parent[a] = b
    groups = {}
    for O in parent:
        groups.setdefault(find(O), []).append(O)
    out = [ReversalClass(min(g, key=_class_sort_key), frozenset(g)) for g in groups.values()]
    return sorted(out, key=lambda r: _class_sort_key(r.representative))


class ReversalSystem:
    """Reversal classes with lookup by orientation and by lattice class."""

    def __init__(self, rep, group=None, classes=None):
        self.rep = rep
        self.group = group or JacGroup(rep)
        self.classes = classes if classes is not None else reversal_classes(rep)
        self.by_orientation = {O: r for r in self.classes for O in r.members}
        self.by_lattice = {self.group.reduce_half(r.representative): r for r in self.classes}

    def class_of(self, O):
        return self.by_orientation[tuple(O)]

    def class_of_half(self, v2):
        """The class whose orientations are J-equivalent to v2 / 2."""
        return self.by_lattice[self.group.reduce_half(v2)]

    def __len__(self):
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)


def defect(v2):
    """Sum of |v(j)| - 1/2 for the doubled vector v2, as a Fraction."""
    return Fraction(sum(abs(x) - 1 for x in v2), 2)


def reduce_to_orientation(rep, v2, trace=None):
    """An orientation J-equivalent to v2 / 2, by descending the defect.

    v2 is a doubled half-integer vector (odd entries).  When a list is given
    as `trace`, the defect before each step and the circuit added are
    appended to it.
    """
    n = rep.n
    v = list(v2)
    if any(x % 2 == 0 for x in v):
        raise ValueError("expected a half-integer vector")
    while True:
        d = defect(v)
        if d == 0:
            if trace is not None:
                trace.append((d, None))
            return tuple(1 if x > 0 else -1 for x in v)
        i = next(j for j in range(n) if abs(v[j]) > 1)
        f = [1 if x < 0 else -1 for x in v]
        C = None
        for D in rep.circuits:
            p = project_pi(D)
            if p[i] == f[i] and all(p[j] == 0 or p[j] == f[j] for j in range(n)):
                C = D
                break
        if C is None:
            raise AssertionError("no circuit available for the descent step")
        if trace is not None:
            trace.append((d, C))
        p = project_pi(C)
        v = [x + 2 * y for x, y in zip(v, p)]


def act(rep, g, r, system=None):
    """J[g] . R[O] computed by descending g + representative(r)."""
    v2 = [2 * a + b for a, b in zip(g, r.representative)]
    O = reduce_to_orientation(rep, v2)
    if system is not None:
        return system.class_of(O)
    for c in reversal_classes(rep):
        if O in c.members:
            return c
    raise AssertionError("orientation missing from the class list")


def compatible_circuits(rep, O):
    out = []
    for C in rep.circuits:
        p = project_pi(C)
        if all(p[i] * O[i] > 0 for i in range(rep.n) if p[i]):
            out.append(C)
    return out


def decompose_difference(rep, O1, O2):
    """Disjoint circuits whose projections sum to O2 - O1, or None."""
    n = rep.n
    d = [(a - b) // 2 for a, b in zip(O2, O1)]
    idx = [i for i in range(n) if d[i]]
    lift = None
    for sides in product((0, 1), repeat=len(idx)):
        v = [0] * (2 * n)
        for i, s in zip(idx, sides):
            v[i + s * n] = d[i]
        if rep.in_span(v):
            lift = v
            break
    if lift is None:
        return None
    out = []
    while any(lift):
        C = next((C for C in rep.circuits
                  if all(C[x] == 0 or C[x] == lift[x] for x in range(2 * n))), None)
        if C is None:
            raise AssertionError("lift is not a sum of conformal circuits")
        out.append(C)
        lift = [a - b for a, b in zip(lift, C)]
    return out


def psi_lift(rep, O):
    """Doubled lift of O to E and E*; its support is a transversal."""
    n = rep.n
    comp = compatible_circuits(rep, O)
    out = [0] * (2 * n)
    for e in range(n):
        if any(C[e] for C in comp):
            out[e] = O[e]
        else:
            out[e + n] = O[e]
    return tuple(out)
