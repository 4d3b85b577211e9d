"""Ribbon graphs as combinatorial maps.

A dart is a pair (edge, pole) with pole +1 for the head e_+ and -1 for the
tail e_-, so the dart labels carry the reference orientation.  The rotation
sigma lists the darts counterclockwise around each vertex.  The surface is
cut into 2n corner regions by the edges and coedges: corner(d) is the
region swept going counterclockwise from d to sigma(d).  Everything
geometric in this module is phrased in terms of those corners.
"""

from collections import namedtuple
from itertools import combinations
import random as _random

from .errors import (DuplicateDart, MissingDart, Disconnected,
                     RmapSyntaxError, NotQuasiTree)


class Dart(namedtuple("Dart", "edge pole")):
    __slots__ = ()

    def __str__(self):
        return f"{self.edge}{'+' if self.pole > 0 else '-'}"

    @property
    def opposite(self):
        return Dart(self.edge, -self.pole)


def parse_dart(tok):
    if len(tok) < 2 or tok[-1] not in "+-" or not tok[:-1].isdigit():
        raise ValueError(f"bad dart token {tok!r}")
    return Dart(int(tok[:-1]), 1 if tok[-1] == "+" else -1)


class HalfCrossing(namedtuple("HalfCrossing", "edge star pole")):
    """A half-edge (star False) or half-coedge (star True) met by a walk."""
    __slots__ = ()

    def __str__(self):
        return f"{self.edge}{'*' if self.star else ''}{'+' if self.pole > 0 else '-'}"


def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


class RibbonGraph:
    """An oriented connected combinatorial map with labelled, directed edges."""

    def __init__(self, n, vertices):
        self.n = n
        self.vertices = tuple(tuple(Dart(*d) for d in cyc) for cyc in vertices)
        self._validate()
        self.sigma = {}
        self.vertex_of = {}
        for vi, cyc in enumerate(self.vertices):
            for i, d in enumerate(cyc):
                self.sigma[d] = cyc[(i + 1) % len(cyc)]
                self.vertex_of[d] = vi
        self.sigma_inv = {b: a for a, b in self.sigma.items()}
        self.darts = tuple(sorted(self.sigma))

    def _validate(self):
        if self.n < 1:
            raise RmapSyntaxError("a ribbon graph needs at least one edge")
        seen = set()
        for cyc in self.vertices:
            if not cyc:
                raise RmapSyntaxError("vertex with no darts")
            for d in cyc:
                if not 1 <= d.edge <= self.n or d.pole not in (1, -1):
                    raise RmapSyntaxError(f"dart {d} out of range")
                if d in seen:
                    raise DuplicateDart(f"dart {d} appears twice")
                seen.add(d)
        for e in range(1, self.n + 1):
            for s in (-1, 1):
                if Dart(e, s) not in seen:
                    raise MissingDart(f"dart {Dart(e, s)} is missing")
        # connectivity through vertices and edges
        parent = list(range(len(self.vertices)))
        where = {d: i for i, cyc in enumerate(self.vertices) for d in cyc}
        for e in range(1, self.n + 1):
            a, b = _find(parent, where[Dart(e, 1)]), _find(parent, where[Dart(e, -1)])
            parent[a] = b
        if len({_find(parent, i) for i in range(len(self.vertices))}) != 1:
            raise Disconnected("the map is not connected")

    def __eq__(self, other):
        return isinstance(other, RibbonGraph) and self.n == other.n and \
            self.sigma == other.sigma

    def __hash__(self):
        return hash((self.n, frozenset(self.sigma.items())))

    def __repr__(self):
        return f"RibbonGraph(n={self.n}, V={len(self.vertices)})"

    @property
    def edges(self):
        return range(1, self.n + 1)

    # -- faces and Euler data ------------------------------------------------

    def face_cycles(self):
        """Orbits of sigma after alpha; each face listed from its least dart."""
        seen, out = set(), []
        for d0 in self.darts:
            if d0 in seen:
                continue
            cyc, d = [], d0
            while d not in seen:
                seen.add(d)
                cyc.append(d)
                d = self.sigma[d.opposite]
            out.append(tuple(cyc))
        return out

    def euler_data(self):
        V, E, F = len(self.vertices), self.n, len(self.face_cycles())
        return V, E, F, (2 - V + E - F) // 2

    # -- boundary walks ------------------------------------------------------

    def boundary_tour(self, Q):
        """Boundary curves of the thickening of the spanning subgraph Q.

        The walk keeps the thickened subgraph on its left.  Arriving at dart
        d of an edge outside Q we cross the half-edge d and continue round
        the vertex; for an edge of Q we cross the half-coedge on the same
        side and continue at the far end of the edge.
        """
        Q = frozenset(Q)
        seen, comps = set(), []
        for d0 in self.darts:
            if d0 in seen:
                continue
            comp, d = [], d0
            while d not in seen:
                seen.add(d)
                if d.edge in Q:
                    comp.append(HalfCrossing(d.edge, True, d.pole))
                    d = self.sigma[d.opposite]
                else:
                    comp.append(HalfCrossing(d.edge, False, d.pole))
                    d = self.sigma[d]
            comps.append(tuple(comp))
        return comps

    def _tour_from(self, Q, h):
        """The single boundary component of quasi-tree Q read from dart h."""
        Q = frozenset(Q)
        out, d = [], h
        while True:
            if d.edge in Q:
                out.append(HalfCrossing(d.edge, True, d.pole))
                d = self.sigma[d.opposite]
            else:
                out.append(HalfCrossing(d.edge, False, d.pole))
                d = self.sigma[d]
            if d == h:
                break
        if len(out) != 2 * self.n:
            raise NotQuasiTree(f"{sorted(Q)} is not a spanning quasi-tree")
        return out

    def is_connected_subgraph(self, Q):
        parent = list(range(len(self.vertices)))
        for e in Q:
            a = _find(parent, self.vertex_of[Dart(e, 1)])
            b = _find(parent, self.vertex_of[Dart(e, -1)])
            parent[a] = b
        return len({_find(parent, i) for i in range(len(parent))}) == 1

    def is_quasi_tree(self, Q):
        return self.is_connected_subgraph(Q) and len(self.boundary_tour(Q)) == 1

    def quasi_trees(self):
        """All spanning quasi-trees, ordered by size and then lexicographically."""
        out = []
        for k in range(self.n + 1):
            for Q in combinations(self.edges, k):
                if self.is_quasi_tree(Q):
                    out.append(frozenset(Q))
        return out

    def spanning_trees(self):
        V = len(self.vertices)
        return [frozenset(Q) for Q in combinations(self.edges, V - 1)
                if self.is_connected_subgraph(Q)]

    # -- derived maps --------------------------------------------------------

    def dual(self):
        """The dual map, with coedges directed by the right-hand rule.

        Coedge e* keeps the label e; its head half is the one on the left of
        e.  Around a face centre the coedge halves turn counterclockwise by
        sigma* = (sigma alpha)^-1, i.e. sigma*(d) = alpha(sigma^-1(d)).
        """
        seen, verts = set(), []
        for d0 in self.darts:
            if d0 in seen:
                continue
            cyc, d = [], d0
            while d not in seen:
                seen.add(d)
                cyc.append(d)
                d = self.sigma_inv[d].opposite
            verts.append(cyc)
        return RibbonGraph(self.n, verts)

    def mirror(self):
        """The same map on the surface with its orientation reversed.

        Standard constructions on the mirror realise the clockwise,
        left-hand-rule conventions on the original.
        """
        return RibbonGraph(self.n, [tuple(reversed(c)) for c in self.vertices])

    def reoriented(self, X):
        """Swap the reference direction of every edge in X."""
        X = set(X)
        return RibbonGraph(self.n, [
            tuple(Dart(d.edge, -d.pole) if d.edge in X else d for d in c)
            for c in self.vertices])

    def relabeled(self, perm):
        """Rename edge e to perm[e] (a dict on 1..n)."""
        return RibbonGraph(self.n, [tuple(Dart(perm[d.edge], d.pole) for d in c)
                                    for c in self.vertices])

    def to_rmap(self):
        lines = ["rmap 1", f"n {self.n}"]
        lines += ["v " + " ".join(str(d) for d in c) for c in self.vertices]
        return "\n".join(lines) + "\n"

    # -- corner regions ------------------------------------------------------

    def complement_components(self, S):
        """Components of the surface minus the edges/coedges named in S.

        S is a collection of (edge, star) pairs.  Returns a map from darts
        (as corner names) to component roots.
        """
        S = set(S)
        parent = {d: d for d in self.darts}

        def join(a, b):
            parent[_find(parent, a)] = _find(parent, b)

        for e in self.edges:
            hp, hm = Dart(e, 1), Dart(e, -1)
            if (e, False) not in S:
                join(self.sigma_inv[hp], hp)
                join(self.sigma_inv[hm], hm)
            if (e, True) not in S:
                # e*_+ lies between corner(e_-) and the corner ending at e_+
                join(hm, self.sigma_inv[hp])
                join(hp, self.sigma_inv[hm])
        return {d: _find(parent, d) for d in self.darts}

    def is_connected_complement(self, S):
        return len(set(self.complement_components(S).values())) == 1


def parse_rmap(text):
    """Parse RMAP text into a RibbonGraph."""
    n = None
    verts = []
    header = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        try:
            if not header:
                if toks != ["rmap", "1"]:
                    raise RmapSyntaxError("expected header 'rmap 1'")
                header = True
            elif toks[0] == "n" and n is None:
                if len(toks) != 2 or not toks[1].isdigit():
                    raise RmapSyntaxError("expected 'n <edge-count>'")
                n = int(toks[1])
            elif toks[0] == "v":
                if n is None:
                    raise RmapSyntaxError("vertex line before 'n'")
                if len(toks) < 2:
                    raise RmapSyntaxError("vertex with no darts")
                try:
                    verts.append(tuple(parse_dart(t) for t in toks[1:]))
                except ValueError as exc:
                    raise RmapSyntaxError(str(exc)) from None
            else:
                raise RmapSyntaxError(f"unexpected token {toks[0]!r}")
        except RmapSyntaxError as exc:
            raise type(exc)(f"line {lineno}: {exc}", line=lineno) from None
    if not header or n is None:
        raise RmapSyntaxError("missing header or edge count")
    try:
        return RibbonGraph(n, verts)
    except (DuplicateDart, MissingDart) as exc:
        lineno = _line_of_dart(text, str(exc).split()[1])
        raise type(exc)(f"line {lineno}: {exc}", line=lineno) from None


def _line_of_dart(text, tok):
    hits = [i for i, raw in enumerate(text.splitlines(), 1)
            if tok in raw.split("#", 1)[0].split()]
    return hits[-1] if hits else 0


def load_rmap(path):
    with open(path, encoding="utf-8") as fh:
        return parse_rmap(fh.read())


def euler_data(G):
    return G.euler_data()


def boundary_tour(G, Q):
    return G.boundary_tour(Q)


def is_quasi_tree(G, Q):
    return G.is_quasi_tree(Q)


def quasi_trees(G):
    return G.quasi_trees()


def dual(G):
    return G.dual()


class InterlacementMatrix(namedtuple("InterlacementMatrix", "indices entries")):
    """Rows and columns indexed by (edge, star) pairs, one per edge."""
    __slots__ = ()


def _interlace(pos, x, y):
    """+1 for the cyclic pattern y+ x+ y- x-, -1 for x+ y+ x- y-, else 0."""
    size = len(pos)
    start = pos[x + (1,)]
    ranked = sorted([(0, "x+"),
                     ((pos[x + (-1,)] - start) % size, "x-"),
                     ((pos[y + (1,)] - start) % size, "y+"),
                     ((pos[y + (-1,)] - start) % size, "y-")])
    pattern = [r[1] for r in ranked]
    if pattern == ["x+", "y-", "x-", "y+"]:
        return 1
    if pattern == ["x+", "y+", "x-", "y-"]:
        return -1
    return 0


def interlacement_matrix(G, Q, raw=False):
    """A(G,Q) indexed by Q* and the edges outside Q, in edge order.

    The interlacement pattern alone yields the representation of the
    opposite (left-hand) convention; entries between an edge and a coedge
    keep that sign while the others flip, which gives the right-hand
    convention used throughout.  raw=True returns the uncorrected pattern.
    """
    Q = frozenset(Q)
    if not G.is_quasi_tree(Q):
        raise NotQuasiTree(f"{sorted(Q)} is not a spanning quasi-tree")
    (tour,) = G.boundary_tour(Q)
    pos = {(c.edge, c.star, c.pole): i for i, c in enumerate(tour)}
    idx = [(e, e in Q) for e in G.edges]
    rows = []
    for x in idx:
        row = []
        for y in idx:
            a = 0 if x == y else _interlace(pos, x, y)
            if not raw and x[1] == y[1]:
                a = -a
            row.append(a)
        rows.append(tuple(row))
    return InterlacementMatrix(tuple(idx), tuple(rows))


def random_map(n, rng=None, max_vertices=4, max_genus=None):
    """A uniformly shuffled connected rotation system with n edges."""
    rng = rng or _random.Random()
    darts = [Dart(e, s) for e in range(1, n + 1) for s in (1, -1)]
    while True:
        rng.shuffle(darts)
        k = rng.randint(1, min(max_vertices, 2 * n))
        cuts = sorted(rng.sample(range(1, 2 * n), k - 1))
        bounds = [0] + cuts + [2 * n]
        verts = [tuple(darts[a:b]) for a, b in zip(bounds, bounds[1:])]
        try:
            G = RibbonGraph(n, verts)
        except Disconnected:
            continue
        if max_genus is None or G.euler_data()[3] <= max_genus:
            return G
