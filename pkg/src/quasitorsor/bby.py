"""Circuit signatures, triangulating maps, BBY bijections and torsors."""

from dataclasses import dataclass, field
from fractions import Fraction

from . import lp
from .errors import NotTriangulating, NotBijective
from .jacobian import JacGroup, ReversalSystem, act
from .orthomat import (support, neg, contains_circuit, fourientation_of,
                       reorient_vector)


class CircuitSignature:
    """One signed circuit per support, stored as {support: vector}."""

    def __init__(self, chosen):
        self.chosen = dict(chosen)

    @classmethod
    def from_circuits(cls, circuits):
        out = {}
        for C in circuits:
            S = support(C)
            if S in out and out[S] != C:
                raise ValueError("both signs of a circuit were chosen")
            out[S] = C
        return cls(out)

    def __eq__(self, other):
        return isinstance(other, CircuitSignature) and self.chosen == other.chosen

    def __len__(self):
        return len(self.chosen)

    def __iter__(self):
        return iter(self.chosen.values())

    def __contains__(self, C):
        return self.chosen.get(support(C)) == tuple(C)

    def __getitem__(self, S):
        return self.chosen[frozenset(S)]

    def flipped(self, S):
        """The signature with the circuit on S replaced by its negative."""
        out = dict(self.chosen)
        out[frozenset(S)] = neg(out[frozenset(S)])
        return CircuitSignature(out)

    def reorient(self, X):
        X = {e - 1 for e in X}
        return CircuitSignature({S: reorient_vector(C, X) for S, C in self.chosen.items()})

    def sorted_circuits(self, rep):
        return sorted(self.chosen.values(), key=rep.circuit_key)


def lex_signature(rep, order=None):
    """Each circuit signed +1 at its least element under `order`."""
    order = list(rep.ground.elements if order is None else order)
    rank = {x: i for i, x in enumerate(order)}
    out = {}
    for C in rep.circuits:
        S = support(C)
        if C[min(S, key=rank.__getitem__)] == 1:
            out[S] = C
    return CircuitSignature(out)


@dataclass
class AcyclicityResult:
    acyclic: bool
    witness: list = field(default=None)      # w with <C, w> >= 1 on sigma
    dependency: dict = field(default=None)   # {circuit: lambda}

    def __bool__(self):
        return self.acyclic


def is_acyclic(rep, sigma):
    """Exact decision with a certificate, checked before returning.

    A circuit is determined by its coordinates outside the base, so the
    cone problem is solved there; the witness w is zero on the base.
    """
    circuits = sigma.sorted_circuits(rep)
    if not circuits:
        return AcyclicityResult(True, witness=[0] * (2 * rep.n))
    coords = [rep.ground.star(b) for b in rep.base_order]
    short = [[C[c] for c in coords] for C in circuits]
    lam = lp.vanishing_combination(short)
    if lam is not None:
        dep = {C: l for C, l in zip(circuits, lam) if l}
        total = [sum(l * C[x] for C, l in dep.items()) for x in range(2 * rep.n)]
        assert all(t == 0 for t in total) and sum(dep.values()) == 1
        return AcyclicityResult(False, dependency=dep)
    u = lp.positive_functional(short)
    if u is None:
        raise AssertionError("neither certificate found; Gordan's alternative fails")
    w = [Fraction(0)] * (2 * rep.n)
    for c, x in zip(coords, u):
        w[c] = x
    assert all(sum(a * b for a, b in zip(C, w)) > 0 for C in circuits)
    return AcyclicityResult(True, witness=w)


def beta_sigma(rep, sigma):
    """{basis: orientation} from the signs of sigma's fundamental circuits."""
    n = rep.n
    out = {}
    for B in rep.bases:
        fc = rep.fundamental_circuits(B)
        O = []
        for e in range(n):
            ep = e if e not in B else e + n
            C = sigma[support(fc[ep])]
            O.append(C[ep])
        out[B] = tuple(O)
    return out


def is_triangulating(rep, beta):
    """(True, None) or (False, (B1, B2, C)) for the first failing pair.

    C lies in F1 and in -F2 exactly when C lies in F1 and -C lies in F2, so
    containment is tabulated once per basis as bitmasks over the circuits.
    """
    n = rep.n
    circuits = rep.circuits
    pos, negs = {}, {}
    for B in rep.bases:
        F = fourientation_of(B, beta[B], n)
        p = m = 0
        for k, C in enumerate(circuits):
            if F.contains(C):
                p |= 1 << k
            if F.contains(neg(C)):
                m |= 1 << k
        pos[B], negs[B] = p, m
    for B1 in rep.bases:
        for B2 in rep.bases:
            if B1 == B2:
                continue
            hit = pos[B1] & negs[B2]
            if hit:
                k = (hit & -hit).bit_length() - 1
                return False, (B1, B2, circuits[k])
    return True, None


def bby_bijection(rep, beta, system=None):
    """{basis: reversal class of beta(basis)}; rejects non-triangulating maps."""
    ok, wit = is_triangulating(rep, beta)
    if not ok:
        B1, B2, C = wit
        g = rep.ground
        raise NotTriangulating(f"{g.transversal_name(B1)}, {g.transversal_name(B2)} "
                               f"share {g.vector_str(C)}")
    system = system or ReversalSystem(rep)
    out = {B: system.class_of(beta[B]) for B in rep.bases}
    if len(set(out.values())) != len(out):
        raise NotBijective("triangulating map with colliding classes")
    return out


def induced_classes(rep, beta, system=None):
    """B -> class of beta(B), without requiring injectivity."""
    system = system or ReversalSystem(rep)
    return {B: system.class_of(beta[B]) for B in rep.bases}


class TorsorTable:
    """Full action table of Jac on the bases."""

    def __init__(self, rep, group, bijection, table):
        self.rep = rep
        self.group = group
        self.bijection = bijection
        self.table = table
        self.bases = rep.bases

    def act(self, g, B):
        return self.table[(self.group.reduce(g), frozenset(B))]

    def __eq__(self, other):
        return isinstance(other, TorsorTable) and self.table == other.table

    def is_simply_transitive(self):
        elems = self.group.elements()
        for B1 in self.bases:
            if len({self.table[(g, B1)] for g in elems}) != len(self.bases):
                return False
        return len(elems) == len(self.bases)

    def rows(self):
        g = self.rep.ground
        for h in self.group.elements():
            for B in self.bases:
                yield h, g.transversal_name(B), g.transversal_name(self.table[(h, B)])


def torsor(rep, beta, system=None, group=None, via="lattice"):
    """Gamma(g, B) = beta-bar^-1(g . beta-bar(B)).

    via="lattice" resolves g + beta(B) by its lattice class, which is the
    definition of the action; via="descent" runs the defect descent for
    every entry.  Both give the same table.
    """
    group = group or JacGroup(rep)
    system = system or ReversalSystem(rep, group)
    bij = bby_bijection(rep, beta, system)
    inv = {r: B for B, r in bij.items()}
    table = {}
    for g in group.elements():
        for B in rep.bases:
            if via == "descent":
                r = act(rep, g, bij[B], system)
            else:
                r = system.class_of_half([2 * a + b for a, b in zip(g, bij[B].representative)])
            table[(g, B)] = inv[r]
    return TorsorTable(rep, group, bij, table)


def reorient_map(beta, X):
    X = {e - 1 for e in X}
    return {B: tuple(-s if i in X else s for i, s in enumerate(O)) for B, O in beta.items()}


def reorient_signature(sigma, X):
    return sigma.reorient(X)
