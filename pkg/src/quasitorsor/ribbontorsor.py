"""Bernardi tours and the canonical torsor of a ribbon graph."""

from dataclasses import dataclass, field

from .bby import CircuitSignature, beta_sigma, torsor, is_acyclic
from .errors import InconsistentExtraction
from .jacobian import JacGroup, ReversalSystem
from .orthomat import GroundSet, rep_from_quasi_tree, support, neg
from .ribbonmap import Dart


def gamma_h(G, h, Q):
    """Direct each edge by its first half met on the tour of Q from h.

    Returns {edge: (tail dart, head dart)}.  An edge outside Q points at its
    first-met half.  An edge of Q takes the direction that makes its coedge
    run away from the first-met coedge half.
    """
    h = Dart(*h)
    tour = G._tour_from(Q, h)
    out = {}
    for c in tour:
        if c.edge in out:
            continue
        first = Dart(c.edge, c.pole)
        head = first.opposite if c.star else first
        out[c.edge] = (head.opposite, head)
    return out


def orientation_from_directions(dirs, reference=None):
    """Signs of a direction assignment against a reference assignment.

    Without a reference the dart labels themselves serve: (e-, e+) is +.
    """
    n = len(dirs)
    out = []
    for e in range(1, n + 1):
        tail, head = dirs[e]
        ref_head = reference[e][1] if reference is not None else Dart(e, 1)
        out.append(1 if head == ref_head else -1)
    return tuple(out)


def reference_directions(G):
    return {e: (Dart(e, -1), Dart(e, 1)) for e in G.edges}


def bernardi_map(G, h, rep=None):
    """{basis: orientation} with beta'(B)(e) = + iff gamma agrees with e."""
    rep = rep or canonical_rep(G)
    out = {}
    for B in rep.bases:
        Q = {x + 1 for x in B if x < G.n}
        out[B] = orientation_from_directions(gamma_h(G, h, Q))
    return out


def canonical_rep(G):
    return rep_from_quasi_tree(G, G.quasi_trees()[0])


def extract_signature(G, h, rep=None, beta=None):
    """The signature whose fundamental circuit signs reproduce beta'_h."""
    rep = rep or canonical_rep(G)
    beta = beta or bernardi_map(G, h, rep)
    n = rep.n
    chosen = {}
    for B in rep.bases:
        fc = rep.fundamental_circuits(B)
        for e in range(n):
            ep = e if e not in B else e + n
            C = fc[ep] if beta[B][e] > 0 else neg(fc[ep])
            S = support(C)
            if S in chosen and chosen[S] != C:
                raise InconsistentExtraction(
                    f"circuit {rep.ground.vector_str(C)} gets both signs")
            chosen[S] = C
    if len(chosen) * 2 != len(rep.circuits):
        raise InconsistentExtraction("some circuit is fundamental for no basis")
    return CircuitSignature(chosen)


def point_signature(G, h, rep=None):
    """sigma_p read geometrically: each circuit signed by the side holding p.

    The point p of anchor h lies in the corner ending at h, so every
    circuit is oriented as the boundary of the component containing it.
    """
    rep = rep or canonical_rep(G)
    g = rep.ground
    corner = G.sigma_inv[Dart(*h)]
    chosen = {}
    for S in rep.circuit_supports:
        comps = G.complement_components({(x % g.n + 1, x >= g.n) for x in S})
        C = [0] * (2 * g.n)
        for x in S:
            C[x] = 1 if comps[Dart(x % g.n + 1, -1)] == comps[corner] else -1
        chosen[S] = tuple(C)
    return CircuitSignature(chosen)


def signed_ribbon_cycles(G):
    """All signed circuits of M(G) straight from the surface.

    Supports are the minimal subtransversals whose removal disconnects the
    surface; the sign is +1 where the element agrees with the boundary of
    the component lying on the side of its tail.
    """
    g = GroundSet(G.n)
    dep = [S for S in g.all_subtransversals() if S and not
           G.is_connected_complement({(x % g.n + 1, x >= g.n) for x in S})]
    minimal = [S for S in dep if not any(T < S for T in dep)]
    out = set()
    for S in minimal:
        comps = G.complement_components({(x % g.n + 1, x >= g.n) for x in S})
        ref = comps[Dart(min(S) % g.n + 1, -1)]
        C = [0] * (2 * g.n)
        for x in S:
            C[x] = 1 if comps[Dart(x % g.n + 1, -1)] == ref else -1
        out.add(tuple(C))
        out.add(neg(C))
    return out


def geometric_bases(G):
    g = GroundSet(G.n)
    return {T for T in g.all_transversals()
            if G.is_connected_complement({(x % g.n + 1, x >= g.n) for x in T})}


def bernardi_torsor(G, h, rep=None, system=None):
    rep = rep or canonical_rep(G)
    return torsor(rep, bernardi_map(G, h, rep), system)


def canonical_torsor(G, rep=None, system=None, check_all=False):
    """Torsor from the least dart; optionally confirm every anchor agrees."""
    rep = rep or canonical_rep(G)
    system = system or ReversalSystem(rep)
    t = torsor(rep, bernardi_map(G, G.darts[0], rep), system)
    if check_all:
        for h in G.darts[1:]:
            other = torsor(rep, bernardi_map(G, h, rep), system)
            if other.table != t.table:
                raise AssertionError(f"anchor {h} gives a different action")
    return t


@dataclass
class Apparatus:
    graph: object
    rep: object
    maps: dict


def opposite_apparatus(G):
    """Clockwise surface, left-hand coedges: the standard apparatus of the mirror."""
    M = G.mirror()
    rep = canonical_rep(M)
    return Apparatus(M, rep, {h: bernardi_map(M, h, rep) for h in M.darts})


def standard_apparatus(G):
    rep = canonical_rep(G)
    return Apparatus(G, rep, {h: bernardi_map(G, h, rep) for h in G.darts})


@dataclass
class DualityReport:
    ok: bool = True
    checks: dict = field(default_factory=dict)
    first_failure: str = None

    def record(self, name, ok, detail=""):
        self.checks[name] = ok
        if not ok and self.ok:
            self.ok = False
            self.first_failure = f"{name}: {detail}" if detail else name


def dual_apparatus_graph(G):
    """G* under the left-hand rule, as a map whose standard apparatus applies."""
    return G.dual().mirror()


def duality_check(G):
    """Compare Gamma on G with Gamma* on the dual under the left-hand rule."""
    report = DualityReport()
    rep = canonical_rep(G)
    D = dual_apparatus_graph(G)
    drep = canonical_rep(D)
    g = rep.ground
    star_circuits = {tuple(C[g.n:]) + tuple(C[:g.n]) for C in rep.circuits}
    report.record("circuits", set(drep.circuits) == star_circuits,
                  "dual circuits differ from the starred circuits")
    star_b = {B: frozenset(g.star(x) for x in B) for B in rep.bases}
    report.record("bases", set(star_b.values()) == set(drep.bases))
    if not report.ok:
        return report
    t = canonical_torsor(G, rep)
    dt = canonical_torsor(D, drep)
    report.record("groups", t.group.reducer.H == dt.group.reducer.H)
    for (v, B1), B2 in t.table.items():
        lhs = dt.table[(t.group.neg(v), star_b[B1])]
        if lhs != star_b[B2]:
            report.record("table", False,
                          f"v={v} B1={g.transversal_name(B1)}")
            return report
    report.record("table", True)
    return report


def left_right_comparison(G):
    """Whether the right-hand and left-hand canonical torsors on G coincide."""
    rep = canonical_rep(G)
    t = canonical_torsor(G, rep)
    M = G.mirror()
    mrep = canonical_rep(M)
    mt = canonical_torsor(M, mrep)
    same_bases = set(rep.bases) == set(mrep.bases)
    return same_bases and t.table == mt.table


def geometric_step(rep, O, e, system):
    """Push the directed edge e onto O as the surface description prescribes.

    If O points e backwards, flip e.  Otherwise reverse a compatible circuit
    through e first, then flip e.
    """
    O = list(O)
    if O[e] < 0:
        O[e] = 1
        return system.class_of(O)
    from .jacobian import compatible_circuits, project_pi
    for C in compatible_circuits(rep, O):
        p = project_pi(C)
        if p[e]:
            O = [-s if p[i] else s for i, s in enumerate(O)]
            O[e] = 1
            return system.class_of(O)
    raise AssertionError("no compatible circuit through the edge")


def all_positive_check(G, h, Q):
    """beta'_h at Q, rebuilt with gamma_h(Q) as reference, is all +."""
    dirs = gamma_h(G, h, Q)
    flip = {e for e, (t, hd) in dirs.items() if hd.pole < 0}
    H = G.reoriented(flip)
    hd = Dart(h.edge, -h.pole) if h.edge in flip else Dart(*h)
    O = orientation_from_directions(gamma_h(H, hd, Q))
    return all(s > 0 for s in O)


def acyclicity_of_extraction(G, h):
    rep = canonical_rep(G)
    return bool(is_acyclic(rep, extract_signature(G, h, rep)))
