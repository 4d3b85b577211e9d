"""Exhaustive property checks on a single ribbon graph.

Each check yields (identifier, passed, detail).  Identifiers are stable
strings of the form module.property so failures can be named in reports.
passed is None when a check was skipped because the map is too large.
"""

import random
from itertools import combinations

from . import bby, bridges, exact, ribbontorsor as rt
from .jacobian import (JacGroup, ReversalSystem, project_pi, psi_lift,
                       reduce_to_orientation, decompose_difference,
                       all_orientations, compatible_circuits, act)
from .orthomat import (rep_from_quasi_tree, validate_axioms, support, neg,
                       circuit_supports_brute_force, pairing, farkas,
                       Fourientation, PLUS, restrict, reorient)
from .ribbonmap import interlacement_matrix, Dart


class Context:
    """Shared, lazily built objects for one map."""

    def __init__(self, G, seed=0, max_bases=64):
        self.G = G
        self.max_bases = max_bases
        self.rng = random.Random(seed)
        self.rep = rt.canonical_rep(G)
        self.group = JacGroup(self.rep)
        self.system = ReversalSystem(self.rep, self.group)
        self._torsor = None

    @property
    def torsor(self):
        if self._torsor is None:
            self._torsor = rt.canonical_torsor(self.G, self.rep, self.system)
        return self._torsor


def _ok(name, cond, detail=""):
    return (name, bool(cond), "" if cond else detail)


def _skip(name, why):
    return (name, None, why)


def check_ribbonmap(ctx):
    G = ctx.G
    for k in range(G.n + 1):
        for Q in combinations(G.edges, k):
            tour = G.boundary_tour(Q)
            halves = [c for comp in tour for c in comp]
            if len(halves) != 2 * G.n or len(set(halves)) != 2 * G.n:
                yield _ok("ribbonmap.tour-halves", False, f"Q={list(Q)}")
                break
        else:
            continue
        break
    else:
        yield _ok("ribbonmap.tour-halves", True)
    qts = G.quasi_trees()
    yield _ok("ribbonmap.quasi-trees-nonempty", qts)
    D = G.dual()
    yield _ok("ribbonmap.dual-involution", D.dual() == G.reoriented(G.edges))
    dq = set(D.quasi_trees())
    yield _ok("ribbonmap.dual-complements",
              dq == {frozenset(G.edges) - Q for Q in qts})
    bad = None
    for Q in qts:
        A = interlacement_matrix(G, Q).entries
        for k in range(1, G.n + 1):
            for S in combinations(range(G.n), k):
                if exact.det([[A[i][j] for j in S] for i in S]) not in (0, 1):
                    bad = (sorted(Q), S)
    yield _ok("ribbonmap.principally-unimodular", bad is None, str(bad))


def check_orthomat(ctx):
    G, rep = ctx.G, ctx.rep
    g = rep.ground
    reps = [rep_from_quasi_tree(G, Q) for Q in G.quasi_trees()]
    yield _ok("orthomat.quasi-tree-independence", all(r == rep for r in reps))
    yield _ok("orthomat.geometric-circuits", set(rep.circuits) == rt.signed_ribbon_cycles(G))
    yield _ok("orthomat.geometric-bases", set(rep.bases) == rt.geometric_bases(G))
    yield _ok("orthomat.brute-force-supports",
              set(circuit_supports_brute_force(rep)) == set(rep.circuit_supports))
    rpt = validate_axioms(rep)
    yield _ok("orthomat.axioms", rpt.ok, str(rpt.failures()))
    yield _ok("orthomat.pairing", all(pairing(C, D) == 0 for C in rep.circuits
                                      for D in rep.circuits))
    # every circuit is a sum of fundamental circuits of any basis
    bad = None
    for B in rep.bases:
        fc = rep.fundamental_circuits(B)
        for C in rep.circuits:
            total = [0] * (2 * g.n)
            for e in support(C) - B:
                Ce = fc[e] if C[e] == 1 else neg(fc[e])
                total = [a + b for a, b in zip(total, Ce)]
            if tuple(total) != C:
                bad = (g.transversal_name(B), g.vector_str(C))
    yield _ok("orthomat.fundamental-sum", bad is None, str(bad))
    bad = None
    for B in rep.bases:
        fc = rep.fundamental_circuits(B)
        for e1, e2 in combinations(sorted(fc), 2):
            C1, C2 = fc[e1], fc[e2]
            if C1[e1] * C2[g.star(e1)] + C1[g.star(e2)] * C2[e2] != 0:
                bad = (g.transversal_name(B), g.name(e1), g.name(e2))
    yield _ok("orthomat.two-fundamental", bad is None, str(bad))
    Fp = Fourientation([PLUS] * (2 * g.n))
    try:
        for e in range(g.n):
            farkas(rep, Fp, e)
        yield _ok("orthomat.farkas-exclusive", True)
    except AssertionError as exc:
        yield _ok("orthomat.farkas-exclusive", False, str(exc))
    bad = None
    subs = sorted(g.all_subtransversals(), key=lambda S: (len(S), sorted(S)))
    for S in ctx.rng.sample(subs, min(6, len(subs))):
        res = restrict(rep, S).check_axioms()
        if not all(ok for ok, _ in res.values()):
            bad = (g.transversal_name(S), [k for k, (ok, _) in res.items() if not ok])
    yield _ok("orthomat.restriction", bad is None, str(bad))


def check_jacobian(ctx):
    G, rep, J, sys_ = ctx.G, ctx.rep, ctx.group, ctx.system
    n = rep.n
    nb = len(rep.bases)
    dets = {Q: exact.det(rep_from_quasi_tree(G, Q).i_plus_a()) for Q in G.quasi_trees()}
    yield _ok("jacobian.count-det", all(d == nb for d in dets.values()), str(dets))
    yield _ok("jacobian.count-quasi-trees", len(G.quasi_trees()) == nb)
    yield _ok("jacobian.count-jac", J.order == nb)
    yield _ok("jacobian.count-classes", len(sys_) == nb)
    invs = {exact.smith_invariants(rep_from_quasi_tree(G, Q).i_plus_a())
            for Q in G.quasi_trees()}
    yield _ok("jacobian.critical-group", len(invs) == 1)
    span = [project_pi(C) for C in rep.circuits]
    yield _ok("jacobian.circuit-span",
              all(J.reducer.contains(v) for v in span) and
              exact.LatticeReducer(span).H == J.reducer.H)
    # simple transitivity on classes
    elems = J.elements()
    bad = None
    for r1 in sys_:
        images = [sys_.class_of_half([2 * a + b for a, b in zip(gv, r1.representative)])
                  for gv in elems]
        if len(set(images)) != len(elems):
            bad = str(r1)
    yield _ok("jacobian.simply-transitive", bad is None, str(bad))
    # lattice class = reversal class
    orients = all_orientations(n)
    bad = None
    sample = orients if n <= 5 else ctx.rng.sample(orients, 32)
    for O1 in sample:
        for O2 in sample:
            same = sys_.class_of(O1) == sys_.class_of(O2)
            dec = decompose_difference(rep, O1, O2)
            if same != (dec is not None):
                bad = (O1, O2)
            elif dec is not None:
                used = [x for C in dec for x in support(C)]
                if len(used) != len(set(used)) or not rep.ground.is_subtransversal(used):
                    bad = (O1, O2)
                tot = [0] * n
                for C in dec:
                    tot = [a + b for a, b in zip(tot, project_pi(C))]
                if [2 * t for t in tot] != [a - b for a, b in zip(O2, O1)]:
                    bad = (O1, O2)
    yield _ok("jacobian.reversal-equals-lattice", bad is None, str(bad))
    bad = None
    for O1 in sample:
        p1 = psi_lift(rep, O1)
        for C in rep.circuits:
            p = project_pi(C)
            O2 = tuple(a + 2 * b for a, b in zip(O1, p))
            lhs = all(abs(x) == 1 for x in O2)
            rhs = False
            if lhs:
                rhs = psi_lift(rep, O2) == tuple(a + 2 * b for a, b in zip(p1, C))
            else:
                p2_candidate = tuple(a + 2 * b for a, b in zip(p1, C))
                rhs = False if any(abs(x) > 1 for x in p2_candidate) else \
                    _is_psi(rep, p2_candidate)
            if lhs != rhs:
                bad = (O1, rep.ground.vector_str(C))
    yield _ok("jacobian.psi-pullback", bad is None, str(bad))
    bad = None
    for gv in elems[:8]:
        for r in sys_:
            trace = []
            v2 = [2 * a + b for a, b in zip(gv, r.representative)]
            reduce_to_orientation(rep, v2, trace)
            ds = [d for d, _ in trace]
            if any(a <= b for a, b in zip(ds, ds[1:])):
                bad = (gv, str(r))
            if act(rep, gv, r, sys_) != sys_.class_of_half(v2):
                bad = (gv, str(r), "descent")
    yield _ok("jacobian.defect-descent", bad is None, str(bad))
    X = {e for e in range(1, n + 1) if ctx.rng.random() < 0.5}
    rX = reorient(rep, X)
    JX = JacGroup(rX)
    sX = ReversalSystem(rX, JX)
    flip = [-1 if i + 1 in X else 1 for i in range(n)]
    same = {frozenset(tuple(f * s for f, s in zip(flip, O)) for O in c.members)
            for c in sys_} == {c.members for c in sX}
    yield _ok("jacobian.reorientation", same and JX.invariant_factors == J.invariant_factors)


def _is_psi(rep, v2):
    n = rep.n
    if any(v2[i] and v2[i + n] for i in range(n)):
        return False
    O = tuple(v2[i] + v2[i + n] for i in range(n))
    if any(abs(x) != 1 for x in O):
        return False
    return psi_lift(rep, O) == tuple(v2)


def check_bby(ctx):
    rep, sys_ = ctx.rep, ctx.system
    lex = bby.lex_signature(rep)
    lex_acyclic = bby.is_acyclic(rep, lex).acyclic
    yield _ok("bby.lex-acyclic", lex_acyclic)
    b = bby.beta_sigma(rep, lex)
    tri, wit = bby.is_triangulating(rep, b)
    yield _ok("bby.lex-triangulating", tri, str(wit))
    if tri:
        t = bby.torsor(rep, b, sys_, ctx.group)
        yield _ok("bby.lex-torsor", t.is_simply_transitive())
    bad = None
    for C in rep.circuits:
        for B in rep.bases:
            F = bby.fourientation_of(B, b[B], rep.n)
            if F.contains(C) and C not in lex:
                bad = (rep.ground.transversal_name(B), rep.ground.vector_str(C))
    yield _ok("bby.fourientation-membership", bad is None, str(bad))
    bad = None
    for _ in range(5 if len(rep.bases) <= ctx.max_bases else 1):
        X = {e for e in range(1, rep.n + 1) if ctx.rng.random() < 0.5}
        rX = reorient(rep, X)
        sX = bby.reorient_signature(lex, X)
        if bby.is_acyclic(rX, sX).acyclic != lex_acyclic:
            bad = ("ii", X)
        bX = bby.reorient_map(b, X)
        if bby.beta_sigma(rX, sX) != bX:
            bad = ("iv", X)
        if bby.is_triangulating(rX, bX)[0] != tri:
            bad = ("i", X)
        if tri:
            sysX = ReversalSystem(rX)
            tX = bby.torsor(rX, bX, sysX)
            flip = [-1 if i + 1 in X else 1 for i in range(rep.n)]
            for (v, B1), B2 in t.table.items():
                vX = tX.group.reduce([f * a for f, a in zip(flip, v)])
                if tX.table[(vX, B1)] != B2:
                    bad = ("torsor", X)
                    break
            for B, r in t.bijection.items():
                mapped = frozenset(tuple(f * s for f, s in zip(flip, O)) for O in r.members)
                if tX.bijection[B].members != mapped:
                    bad = ("iii/v", X)
    yield _ok("bby.cut-switching", bad is None, str(bad))


def check_ribbontorsor(ctx):
    G, rep, sys_ = ctx.G, ctx.rep, ctx.system
    bad_eq = bad_acyc = bad_geo = None
    for h in G.darts:
        bm = rt.bernardi_map(G, h, rep)
        s = rt.extract_signature(G, h, rep, bm)
        if bby.beta_sigma(rep, s) != bm:
            bad_eq = str(h)
        if not bby.is_acyclic(rep, s).acyclic:
            bad_acyc = str(h)
        if s != rt.point_signature(G, h, rep):
            bad_geo = str(h)
    yield _ok("ribbontorsor.bernardi-equals-bby", bad_eq is None, str(bad_eq))
    yield _ok("ribbontorsor.signature-acyclic", bad_acyc is None, str(bad_acyc))
    yield _ok("ribbontorsor.signature-geometric", bad_geo is None, str(bad_geo))
    t = ctx.torsor
    bad = None
    for h in G.darts[1:]:
        if rt.bernardi_torsor(G, h, rep, sys_).table != t.table:
            bad = str(h)
    yield _ok("ribbontorsor.anchor-independence", bad is None, str(bad))
    yield _ok("ribbontorsor.simply-transitive", t.is_simply_transitive())
    bad = None
    for h in G.darts:
        for Q in G.quasi_trees():
            if not rt.all_positive_check(G, h, Q):
                bad = (str(h), sorted(Q))
    yield _ok("ribbontorsor.all-positive", bad is None, str(bad))
    bad = None
    for e in range(G.n):
        unit = [0] * G.n
        unit[e] = 1
        for r in sys_:
            for O in sorted(r.members)[:2]:
                got = rt.geometric_step(rep, O, e, sys_)
                if got != act(rep, tuple(unit), r, sys_):
                    bad = (e + 1, str(r))
    yield _ok("ribbontorsor.geometric-action", bad is None, str(bad))
    X = {e for e in G.edges if ctx.rng.random() < 0.5}
    H = G.reoriented(X)
    hrep = rt.canonical_rep(H)
    ht = rt.canonical_torsor(H, hrep)
    flip = [-1 if i + 1 in X else 1 for i in range(G.n)]
    ok = all(ht.table[(ht.group.reduce([f * a for f, a in zip(flip, v)]), B1)] == B2
             for (v, B1), B2 in t.table.items())
    yield _ok("ribbontorsor.reference-independence", ok, str(sorted(X)))
    rpt = rt.duality_check(G)
    yield _ok("ribbontorsor.duality", rpt.ok, str(rpt.first_failure))
    opp = rt.opposite_apparatus(G)
    yield _ok("ribbontorsor.opposite-circuits", opp.rep == rep.opposite())
    back = rt.opposite_apparatus(opp.graph)
    yield _ok("ribbontorsor.opposite-involution", back.graph == G)


def check_bridges(ctx):
    G = ctx.G
    if len(ctx.rep.bases) > ctx.max_bases:
        why = f"{len(ctx.rep.bases)} bases exceeds {ctx.max_bases}"
        for name in ("bridges.ps-axioms", "bridges.abelian", "bridges.round-trip"):
            yield _skip(name, why)
        return
    if G.euler_data()[3] == 0:
        rpt = bridges.compare_sphere(G)
        yield _ok("bridges.sphere", rpt.ok, str(rpt.first_failure))
        g = bridges.underlying_graph(G)
        lap = tuple(d for d in exact.smith_invariants(bridges.reduced_laplacian(g)) if d != 1) \
            if g.nv > 1 else ()
        yield _ok("bridges.laplacian", lap == ctx.group.invariant_factors)
    t = ctx.torsor
    pr = bridges.proportion_from_torsor(t)
    ax = bridges.check_ps_axioms(pr)
    yield _ok("bridges.ps-axioms", all(ok for ok, _ in ax.values()))
    yield _ok("bridges.abelian", bridges.dual_relation(pr).quads == pr.quads)
    pg = bridges.group_from_proportion(pr)
    inv = bridges.abelian_invariants(pg.mul, pg.identity, list(range(pg.size)))
    yield _ok("bridges.round-trip",
              inv == ctx.group.invariant_factors and
              bridges.torsor_isomorphism(t, pg) is not None)


SUITES = [check_ribbonmap, check_orthomat, check_jacobian, check_bby,
          check_ribbontorsor, check_bridges]


def run_all(G, seed=0, max_bases=64):
    ctx = Context(G, seed, max_bases)
    for suite in SUITES:
        yield from suite(ctx)
