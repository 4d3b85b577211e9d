"""Graphic lifts and proportion spaces.

The graphic lift places the signed cycles of a directed graph on E and its
signed bonds on E*.  A proportion relation is kept as a set of quadruples
of indices into a finite ground list.
"""

from collections import namedtuple
from dataclasses import dataclass, field
from itertools import combinations

from . import exact
from .errors import (Disconnected, NotGenusZero, NotSimplyTransitive,
                     AxiomsFailed, ParseError)
from .jacobian import JacGroup, ReversalSystem
from .orthomat import OrthoRep, neg


SimpleGraph = namedtuple("SimpleGraph", "nv edges")


def parse_graph(text):
    """Edge-list format: 'graph', 'nv <k>', then 'e <u> <v>' (1-based)."""
    nv, edges, header = None, [], False
    for lineno, raw in enumerate(text.splitlines(), 1):
        toks = raw.split("#", 1)[0].split()
        if not toks:
            continue
        if not header:
            if toks != ["graph"]:
                raise ParseError(f"line {lineno}: expected 'graph'", line=lineno)
            header = True
        elif toks[0] == "nv" and len(toks) == 2 and toks[1].isdigit():
            nv = int(toks[1])
        elif toks[0] == "e" and len(toks) == 3 and nv is not None:
            u, v = int(toks[1]), int(toks[2])
            if not (1 <= u <= nv and 1 <= v <= nv):
                raise ParseError(f"line {lineno}: vertex out of range", line=lineno)
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"line {lineno}: cannot parse {raw.strip()!r}", line=lineno)
    if nv is None or not edges:
        raise ParseError("graph needs 'nv' and at least one edge")
    return SimpleGraph(nv, tuple(edges))


def underlying_graph(G):
    """The directed graph of a ribbon graph, tails to heads."""
    from .ribbonmap import Dart
    return SimpleGraph(len(G.vertices), tuple(
        (G.vertex_of[Dart(e, -1)], G.vertex_of[Dart(e, 1)]) for e in G.edges))


def _components(nv, edges, keep):
    parent = list(range(nv))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in keep:
        u, v = edges[i]
        parent[find(u)] = find(v)
    return [find(x) for x in range(nv)]


def _is_connected(nv, edges, keep):
    return len(set(_components(nv, edges, keep))) == 1


def signed_cycles(g):
    """Signed circuits of the graph's cycle matroid, as vectors on E."""
    m = len(g.edges)
    dep = []
    for k in range(1, m + 1):
        for S in combinations(range(m), k):
            if any(set(D) <= set(S) for D in dep):
                continue
            if _cycle_rank(g, S) > 0:
                dep.append(S)
    out = set()
    for S in dep:
        out.add(_orient_cycle(g, S))
    return out | {neg(c) for c in out}


def _cycle_rank(g, S):
    comps = len(set(_components(g.nv, g.edges, S)))
    return len(S) - (g.nv - comps)


def _orient_cycle(g, S):
    """Walk the cycle S starting along its first edge in reference direction."""
    m = len(g.edges)
    vec = [0] * m
    first = S[0]
    u, v = g.edges[first]
    vec[first] = 1
    cur, used = v, {first}
    while cur != u or len(used) < len(S):
        nxt = next(i for i in S if i not in used and cur in g.edges[i])
        a, b = g.edges[nxt]
        vec[nxt] = 1 if a == cur else -1
        cur = b if a == cur else a
        used.add(nxt)
    return tuple(vec)


def signed_bonds(g):
    """Signed cocircuits: minimal cuts, +1 on edges leaving the tail side."""
    m = len(g.edges)
    bonds = []
    for k in range(1, m + 1):
        for S in combinations(range(m), k):
            if any(set(D) <= set(S) for D in bonds):
                continue
            keep = [i for i in range(m) if i not in S]
            if not _is_connected(g.nv, g.edges, keep):
                bonds.append(S)
    out = set()
    for S in bonds:
        keep = [i for i in range(m) if i not in S]
        comp = _components(g.nv, g.edges, keep)
        side = comp[g.edges[S[0]][0]]
        vec = [0] * m
        for i in S:
            vec[i] = 1 if comp[g.edges[i][0]] == side else -1
        out.add(tuple(vec))
    return out | {neg(c) for c in out}


def graphic_cd_rep(g):
    """Lift of the cycle matroid: cycles on E, bonds on E*."""
    m = len(g.edges)
    if not _is_connected(g.nv, g.edges, range(m)):
        raise Disconnected("graph is not connected")
    circuits = [tuple(c) + (0,) * m for c in signed_cycles(g)]
    circuits += [(0,) * m + tuple(b) for b in signed_bonds(g)]
    return OrthoRep.from_circuits(m, circuits)


def spanning_trees(g):
    m = len(g.edges)
    return [frozenset(T) for T in combinations(range(m), g.nv - 1)
            if _is_connected(g.nv, g.edges, T)]


def incidence_matrix(g):
    D = [[0] * len(g.edges) for _ in range(g.nv)]
    for i, (u, v) in enumerate(g.edges):
        D[u][i] -= 1
        D[v][i] += 1
    return D


def reduced_laplacian(g):
    L = [[0] * g.nv for _ in range(g.nv)]
    for u, v in g.edges:
        if u != v:
            L[u][u] += 1
            L[v][v] += 1
            L[u][v] -= 1
            L[v][u] -= 1
    return [row[1:] for row in L[1:]]


@dataclass
class Report:
    ok: bool = True
    checks: dict = field(default_factory=dict)
    first_failure: str = None
    details: dict = field(default_factory=dict)

    def record(self, name, ok, detail=""):
        self.checks[name] = ok
        if not ok and self.ok:
            self.ok = False
            self.first_failure = f"{name}: {detail}" if detail else name


def compare_sphere(G):
    """Ribbon and graphic pictures of a plane graph side by side."""
    from .ribbontorsor import canonical_rep
    if G.euler_data()[3] != 0:
        raise NotGenusZero("map is not planar")
    rep = canonical_rep(G)
    g = underlying_graph(G)
    cd = graphic_cd_rep(g)
    rpt = Report()
    qt = {frozenset(e - 1 for e in Q) for Q in G.quasi_trees()}
    rpt.record("quasi-trees are spanning trees", qt == set(spanning_trees(g)))
    J1, J2 = JacGroup(rep), JacGroup(cd)
    rpt.details["jac"] = (J1.invariant_factors, J2.invariant_factors)
    rpt.record("invariant factors", J1.invariant_factors == J2.invariant_factors)
    rpt.record("same circuits", set(rep.circuits) == set(cd.circuits))
    r1, r2 = ReversalSystem(rep, J1), ReversalSystem(cd, J2)
    same = {c.members for c in r1} == {c.members for c in r2}
    rpt.record("reversal classes", same)
    return rpt


# -- proportion spaces -------------------------------------------------------

class ProportionRelation:
    """(a, b) ~ (c, d) stored as a set of index quadruples over `points`."""

    def __init__(self, points, quads):
        self.points = list(points)
        self.quads = frozenset(quads)

    def __contains__(self, q):
        return q in self.quads

    def __len__(self):
        return len(self.quads)


def proportion_from_torsor(t):
    """(a, b) ~ (c, d) iff the element moving b to a also moves d to c."""
    if not t.is_simply_transitive():
        raise NotSimplyTransitive("action is not simply transitive")
    pts = list(t.bases)
    idx = {B: i for i, B in enumerate(pts)}
    quads = set()
    for g in t.group.elements():
        moves = [(idx[t.table[(g, B)]], idx[B]) for B in pts]
        for a, b in moves:
            for c, d in moves:
                quads.add((a, b, c, d))
    return ProportionRelation(pts, quads)


def check_ps_axioms(r):
    """{axiom: (passed, witness)} for PS1a-PS1d and PS2."""
    X = range(len(r.points))
    R = r.quads
    out = {}
    related, by_outer = {}, {}
    for a, b, c, d in R:
        related.setdefault((a, b), []).append((c, d))
        by_outer.setdefault((a, c), []).append((b, d))
    classes = {p: frozenset(q) for p, q in related.items()}
    bad = next(((a, b) for a in X for b in X
                if (a, b) not in classes.get((a, b), ())), None)
    if bad is None:
        bad = next((p + q for p, qs in classes.items() for q in qs
                    if classes.get(q) != qs), None)
    out["PS1a"] = (bad is None, bad)
    bad = next(((a, b) for a in X for b in X if (a, a, b, b) not in R), None)
    out["PS1b"] = (bad is None, bad)
    bad = next((q for q in R if (q[1], q[0], q[3], q[2]) not in R), None)
    out["PS1c"] = (bad is None, bad)
    bad = next(((a, b, c, d, e, f) for a, b, c, d in R
                for e, f in by_outer.get((b, d), ()) if (a, e, c, f) not in R), None)
    out["PS1d"] = (bad is None, bad)
    fourth = {}
    for a, b, c, d in R:
        fourth.setdefault((a, b, c), []).append(d)
    bad = next(((a, b, c, fourth.get((a, b, c), [])) for a in X for b in X for c in X
                if len(fourth.get((a, b, c), ())) != 1), None)
    out["PS2"] = (bad is None, bad)
    return out


def dual_relation(r):
    """(a, b) ~' (c, d) iff (a, c) ~ (b, d)."""
    return ProportionRelation(r.points, {(a, c, b, d) for a, b, c, d in r.quads})


@dataclass
class PairGroup:
    """Group of pair classes; elements are class ids 0..k-1, 0 the identity."""
    points: list
    class_of: dict
    mul: dict
    identity: int
    size: int

    def act(self, g, x):
        """The unique a with (a, x) in class g."""
        return next(a for (a, b), c in self.class_of.items() if b == x and c == g)

    def order_of(self, g):
        k, h = 1, g
        while h != self.identity:
            h = self.mul[(h, g)]
            k += 1
        return k


def group_from_proportion(r):
    rpt = check_ps_axioms(r)
    if not all(ok for ok, _ in rpt.values()):
        raise AxiomsFailed(", ".join(k for k, (ok, _) in rpt.items() if not ok))
    X = range(len(r.points))
    class_of, ids = {}, 0
    for a in X:
        for b in X:
            if (a, b) in class_of:
                continue
            for c in X:
                for d in X:
                    if (a, b, c, d) in r.quads:
                        class_of[(c, d)] = ids
            ids += 1
    # renumber so that the diagonal class is 0
    diag = class_of[(0, 0)]
    relabel = {diag: 0}
    for c in sorted(set(class_of.values())):
        relabel.setdefault(c, len(relabel))
    class_of = {k: relabel[v] for k, v in class_of.items()}
    mul = {}
    for a in X:
        for b in X:
            for c in X:
                mul[(class_of[(a, b)], class_of[(b, c)])] = class_of[(a, c)]
    return PairGroup(list(r.points), class_of, mul, 0, len(set(class_of.values())))


def abelian_invariants(mul, identity, elements):
    """Invariant factors of a finite abelian group given by its table.

    For a prime p, log_p |{g : p^i g = 0}| grows by the number of cyclic
    p-parts of order at least p^i; that pins down every p-part.
    """
    def killed(k):
        count = 0
        for g in elements:
            h = identity
            for _ in range(k):
                h = mul[(h, g)]
            count += h == identity
        return count

    size = len(elements)
    parts = {}
    for p in _prime_factors(size):
        logs = [0]
        while True:
            logs.append(_logp(killed(p ** len(logs)), p))
            if logs[-1] == logs[-2]:
                break
        at_least = [logs[i] - logs[i - 1] for i in range(1, len(logs))]
        orders = []
        for i, c in enumerate(at_least):
            nxt = at_least[i + 1] if i + 1 < len(at_least) else 0
            orders += [p ** (i + 1)] * (c - nxt)
        parts[p] = sorted(orders, reverse=True)
    width = max((len(v) for v in parts.values()), default=0)
    factors = []
    for k in range(width):
        d = 1
        for v in parts.values():
            d *= v[k] if k < len(v) else 1
        factors.append(d)
    return tuple(sorted(factors))


def _prime_factors(n):
    out, p = [], 2
    while n > 1:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    return out


def _logp(c, p):
    k = 0
    while c > 1:
        c //= p
        k += 1
    return k


def torsor_isomorphism(t, pg):
    """Map Jac -> pair group with phi(g) . x = g . x for all x, or None."""
    pts = list(t.bases)
    idx = {B: i for i, B in enumerate(pts)}
    x0 = pts[0]
    phi = {g: pg.class_of[(idx[t.table[(g, x0)]], 0)] for g in t.group.elements()}
    if len(set(phi.values())) != pg.size:
        return None
    for g, c in phi.items():
        for B in pts:
            if pg.class_of[(idx[t.table[(g, B)]], idx[B])] != c:
                return None
    for g in phi:
        for h in phi:
            if phi[t.group.add(g, h)] != pg.mul[(phi[g], phi[h])]:
                return None
    return phi
