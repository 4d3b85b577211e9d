"""Regular orthogonal matroids given by a matrix (I A).

Elements of E and E* are integers 0..2n-1: x < n is the plain element x+1
and x >= n is its star.  Vectors over E and E* are tuples of length 2n in
that coordinate order.  A transversal is a frozenset of element ids.
"""

from fractions import Fraction
from functools import cached_property
from itertools import combinations, product

from . import exact
from .errors import (NotSkewSymmetric, NotPU, NotABasis, NotCobasisElement,
                     NotSubtransversal, NotHalfFourientation, NotQuasiTree)


class GroundSet:
    """The set E and its skew copy E*, with names like '3' and '3*'."""

    def __init__(self, n):
        self.n = n

    def __eq__(self, other):
        return isinstance(other, GroundSet) and other.n == self.n

    def __hash__(self):
        return hash(self.n)

    def star(self, x):
        return x + self.n if x < self.n else x - self.n

    def under(self, x):
        return x % self.n

    def is_star(self, x):
        return x >= self.n

    def elem(self, edge, star=False):
        return edge - 1 + (self.n if star else 0)

    def name(self, x):
        return f"{x % self.n + 1}{'*' if x >= self.n else ''}"

    def parse(self, tok):
        star = tok.endswith("*")
        e = int(tok.rstrip("*"))
        if not 1 <= e <= self.n:
            raise ValueError(f"element {tok!r} out of range")
        return self.elem(e, star)

    def key(self, x):
        """Sort key realising 1 < 1* < 2 < 2* < ..."""
        return (x % self.n, x >= self.n)

    @property
    def elements(self):
        return sorted(range(2 * self.n), key=self.key)

    def transversal_name(self, T):
        return "".join(self.name(x) for x in sorted(T, key=self.key))

    def parse_transversal(self, s):
        """Parse '12*3' (single-digit edges) or '1 2* 10' (separated)."""
        if any(c in s for c in " ,"):
            toks = s.replace(",", " ").split()
        else:
            toks = []
            for c in s:
                if c == "*":
                    toks[-1] += "*"
                else:
                    toks.append(c)
        return frozenset(self.parse(t) for t in toks)

    def transversal(self, starred):
        """Transversal with e* for e in `starred` (edge numbers) and e otherwise."""
        starred = set(starred)
        return frozenset(self.elem(e, e in starred) for e in range(1, self.n + 1))

    def all_transversals(self):
        for flags in product((False, True), repeat=self.n):
            yield frozenset(i + self.n * f for i, f in enumerate(flags))

    def all_subtransversals(self):
        for flags in product((None, False, True), repeat=self.n):
            yield frozenset(i + self.n * f for i, f in enumerate(flags) if f is not None)

    def is_subtransversal(self, S):
        return len({x % self.n for x in S}) == len(S)

    def unit(self, x):
        v = [0] * (2 * self.n)
        v[x] = 1
        return tuple(v)

    def vector_str(self, v):
        return " ".join(f"{self.name(x)}:{v[x]:+d}"
                        for x in self.elements if v[x])

    def parse_vector(self, toks):
        v = [0] * (2 * self.n)
        for t in toks:
            name, val = t.split(":")
            v[self.parse(name)] = int(val)
        return tuple(v)


def support(v):
    return frozenset(i for i, x in enumerate(v) if x)


def neg(v):
    return tuple(-x for x in v)


def pairing(C, D):
    """<C, D> = sum over elements x of C(x) D(x*)."""
    n = len(C) // 2
    return sum(C[i] * D[i + n] + C[i + n] * D[i] for i in range(n))


def star_vector(v):
    n = len(v) // 2
    return tuple(v[n:]) + tuple(v[:n])


def reorient_vector(v, X):
    """Negate the coordinates of edges in X (0-based edge ids) and their stars."""
    n = len(v) // 2
    return tuple(-x if i % n in X else x for i, x in enumerate(v))


class OrthoRep:
    """A regular orthogonal representation with distinguished basis B.

    base_order[i] is the element of B over edge i.  Row i of Lambda is the
    circuit C_i = delta(base_order[i]*) + sum_j A[i][j] delta(base_order[j]),
    whose support is the fundamental circuit of B at base_order[i]*.
    """

    def __init__(self, n, base, A, check=True):
        self.ground = GroundSet(n)
        self.n = n
        self.base = frozenset(base)
        if len(self.base) != n or not self.ground.is_subtransversal(self.base):
            raise ValueError("base must be a transversal")
        self.base_order = tuple(sorted(self.base, key=lambda x: x % n))
        self.A = tuple(tuple(int(a) for a in row) for row in A)
        if len(self.A) != n or any(len(r) != n for r in self.A):
            raise ValueError("A must be n x n")
        for i in range(n):
            for j in range(n):
                if self.A[i][j] != -self.A[j][i]:
                    raise NotSkewSymmetric(f"A[{i + 1}][{j + 1}] != -A[{j + 1}][{i + 1}]")
        if check and n <= 12:
            self._check_pu()
        self._fc_cache = {}

    def _check_pu(self):
        for k in range(1, self.n + 1):
            for S in combinations(range(self.n), k):
                d = exact.det([[self.A[i][j] for j in S] for i in S])
                if d not in (0, 1):
                    raise NotPU(f"principal minor on rows {[i + 1 for i in S]} is {d}")

    def __eq__(self, other):
        """Equal circuit sets; decided by comparing row spaces of Lambda.

        Circuits are the minimal-support vectors of the row space, so the
        space determines them and conversely they span it.
        """
        return isinstance(other, OrthoRep) and self.n == other.n and \
            all(other.in_span(r) for r in self.lam) and \
            all(self.in_span(r) for r in other.lam)

    def __hash__(self):
        return hash((self.n, frozenset(self.bases)))

    def __repr__(self):
        return f"OrthoRep(n={self.n}, base={self.ground.transversal_name(self.base)})"

    @cached_property
    def lam(self):
        rows = []
        for i, b in enumerate(self.base_order):
            v = [0] * (2 * self.n)
            v[self.ground.star(b)] = 1
            for j, c in enumerate(self.base_order):
                v[c] += self.A[i][j]
            rows.append(tuple(v))
        return tuple(rows)

    def i_plus_a(self):
        return [[int(i == j) + self.A[i][j] for j in range(self.n)]
                for i in range(self.n)]

    # -- bases ---------------------------------------------------------------

    def _flip_set(self, T):
        return [i for i, b in enumerate(self.base_order) if b not in T]

    def is_basis(self, T):
        T = frozenset(T)
        if len(T) != self.n or not self.ground.is_subtransversal(T):
            return False
        S = self._flip_set(T)
        return exact.det([[self.A[i][j] for j in S] for i in S]) != 0

    @cached_property
    def bases(self):
        """All bases, ordered by number of plain elements, then by name."""
        out = [T for T in self.ground.all_transversals() if self.is_basis(T)]
        return tuple(sorted(out, key=self.basis_key))

    def basis_key(self, T):
        plain = sorted(x + 1 for x in T if x < self.n)
        return (len(plain), plain)

    # -- circuits ------------------------------------------------------------

    def fundamental_circuits(self, T):
        """{e: FC(T, e)} over e outside T, each normalised with C(e) = +1."""
        T = frozenset(T)
        if T in self._fc_cache:
            return self._fc_cache[T]
        if not self.is_basis(T):
            raise NotABasis(f"{self.ground.transversal_name(T)} is not a basis")
        cob = sorted((self.ground.star(x) for x in T), key=lambda x: x % self.n)
        L = self.lam
        M = exact.inverse([[L[i][c] for c in cob] for i in range(self.n)])
        out = {}
        for k, e in enumerate(cob):
            coeff = M[k]
            v = []
            for col in range(2 * self.n):
                s = sum(coeff[i] * L[i][col] for i in range(self.n))
                if s.denominator != 1:
                    raise ArithmeticError("non-integral fundamental circuit")
                v.append(int(s))
            out[e] = tuple(v)
        self._fc_cache[T] = out
        return out

    def fundamental_circuit(self, T, e):
        T = frozenset(T)
        if e in T or self.ground.star(e) not in T:
            raise NotCobasisElement(f"{self.ground.name(e)} is not outside {self.ground.transversal_name(T)}")
        return self.fundamental_circuits(T)[e]

    def circuit_key(self, C):
        supp = sorted(support(C), key=self.ground.key)
        return ([self.ground.key(x) for x in supp], C[supp[0]] < 0)

    @cached_property
    def circuits(self):
        """All signed circuits, both signs, in canonical order."""
        found = set()
        for T in self.bases:
            for C in self.fundamental_circuits(T).values():
                found.add(C)
                found.add(neg(C))
        return tuple(sorted(found, key=self.circuit_key))

    @cached_property
    def circuit_supports(self):
        return tuple(sorted({support(C) for C in self.circuits},
                            key=lambda S: sorted(self.ground.key(x) for x in S)))

    def positive_circuit(self, S, x=None):
        """The circuit on support S taking +1 at x (default: least element)."""
        S = frozenset(S)
        x = min(S, key=self.ground.key) if x is None else x
        for C in self.circuits:
            if support(C) == S and C[x] == 1:
                return C
        raise KeyError("no circuit with that support")

    def in_span(self, v):
        """Membership of an integer vector in the Z-span of the circuits."""
        y = [v[self.ground.star(b)] for b in self.base_order]
        w = [sum(y[i] * self.lam[i][c] for i in range(self.n)) for c in range(2 * self.n)]
        return tuple(w) == tuple(v)

    # -- constructions -------------------------------------------------------

    @classmethod
    def from_circuits(cls, n, circuits):
        """Rebuild a representation from its complete signed circuit set."""
        ground = GroundSet(n)
        circuits = set(circuits) | {neg(C) for C in circuits}
        supports = {support(C) for C in circuits}
        base = None
        for T in ground.all_transversals():
            if not any(S <= T for S in supports):
                base = T
                break
        if base is None:
            raise ValueError("circuit set admits no basis")
        order = sorted(base, key=lambda x: x % n)
        A = []
        for b in order:
            bs = ground.star(b)
            C = next(C for C in circuits
                     if C[bs] == 1 and support(C) <= base | {bs})
            A.append([C[c] for c in order])
        rep = cls(n, base, A)
        if set(rep.circuits) != circuits:
            raise ValueError("circuit set is not a regular orthogonal representation")
        return rep

    def dual(self):
        """The representation of the dual orthogonal matroid (C -> C*)."""
        return OrthoRep(self.n, {self.ground.star(b) for b in self.base}, self.A, check=False)

    def opposite(self):
        """Circuits with their E* coordinates negated."""
        s = [-1 if b >= self.n else 1 for b in self.base_order]
        A = [[-s[i] * s[j] * self.A[i][j] for j in range(self.n)] for i in range(self.n)]
        return OrthoRep(self.n, self.base, A, check=False)

    def restrict(self, S):
        return restrict(self, S)

    def reorient(self, X):
        return reorient(self, X)


def rep_from_pu_matrix(A, base=None):
    n = len(A)
    ground = GroundSet(n)
    base = frozenset(range(n)) if base is None else frozenset(base)
    return OrthoRep(ground.n, base, A)


def rep_from_quasi_tree(G, Q, raw=False):
    """Representation of M(G) read off the boundary tour of quasi-tree Q."""
    from .ribbonmap import interlacement_matrix
    Q = frozenset(Q)
    if not G.is_quasi_tree(Q):
        raise NotQuasiTree(f"{sorted(Q)} is not a spanning quasi-tree")
    n = G.n
    ground = GroundSet(n)
    base = ground.transversal(set(G.edges) - Q)
    M = interlacement_matrix(G, Q, raw=raw)
    # A(G,Q) lives on the complement of the base; transport it along star
    return OrthoRep(n, base, M.entries, check=False)


def bases(rep):
    return rep.bases


def fundamental_circuit(rep, T, e):
    return rep.fundamental_circuit(T, e)


def all_signed_circuits(rep):
    return rep.circuits


def reorient(rep, X):
    """Reorientation on X, a set of edge numbers 1..n."""
    s = [-1 if b % rep.n + 1 in X else 1 for b in rep.base_order]
    A = [[s[i] * s[j] * rep.A[i][j] for j in range(rep.n)] for i in range(rep.n)]
    out = OrthoRep(rep.n, rep.base, A, check=False)
    ids = {e - 1 for e in X}
    for T, fc in rep._fc_cache.items():
        new = {}
        for e, C in fc.items():
            C = reorient_vector(C, ids)
            new[e] = C if C[e] == 1 else neg(C)
        out._fc_cache[T] = new
    return out


def edge_ids(X):
    """Edge numbers 1..n to 0-based ids."""
    return {e - 1 for e in X}


class Restriction:
    """The regular matroid of circuits of a representation inside S."""

    def __init__(self, ground, S, circuits):
        self.ground = ground
        self.S = frozenset(S)
        self.circuits = tuple(circuits)
        self.supports = frozenset(support(C) for C in circuits)

    def rank(self, X):
        X = frozenset(X)
        for k in range(len(X), -1, -1):
            for Y in combinations(sorted(X), k):
                Y = frozenset(Y)
                if not any(C <= Y for C in self.supports):
                    return k
        return 0

    def check_axioms(self):
        """Regular matroid conditions; returns {name: (ok, witness)}."""
        sup = self.supports
        out = {}
        out["nonempty"] = _first(C for C in sup if not C)
        out["incomparable"] = _first((a, b) for a in sup for b in sup if a < b)
        circ = self.circuits
        out["negation"] = _first(C for C in circ if neg(C) not in circ)
        bad = None
        for C in circ:
            for D in circ:
                if support(C) == support(D) and C != D and C != neg(D):
                    bad = (C, D)
        out["unique_sign"] = bad
        bad = None
        ground_elems = sorted(self.S)
        subsets = [frozenset(Y) for k in range(len(ground_elems) + 1)
                   for Y in combinations(ground_elems, k)]
        rk = {Y: self.rank(Y) for Y in subsets}
        for X in subsets:
            for Y in subsets:
                if rk[X | Y] + rk[X & Y] > rk[X] + rk[Y]:
                    bad = (X, Y)
                    break
            if bad:
                break
        out["submodular"] = bad
        # circuit elimination in the oriented sense
        bad = None
        for C in circ:
            for D in circ:
                if C == neg(D):
                    continue
                for x in support(C) & support(D):
                    if C[x] != -D[x]:
                        continue
                    if not any(E[x] == 0 and all(
                            E[y] == 0 or E[y] in (C[y], D[y]) for y in range(len(E)))
                            and support(E) <= (support(C) | support(D))
                            for E in circ):
                        bad = (C, D, x)
        out["elimination"] = bad
        return {k: (v is None, v) for k, v in out.items()}


def _first(gen):
    return next(iter(gen), None)


def restrict(rep, S):
    S = frozenset(S)
    if not rep.ground.is_subtransversal(S):
        raise NotSubtransversal("restriction set contains a skew pair")
    return Restriction(rep.ground, S, [C for C in rep.circuits if support(C) <= S])


# -- fourientations ----------------------------------------------------------

PLUS, MINUS = 1, 2
BOTH, NONE = 3, 0


def sign_bit(s):
    return PLUS if s > 0 else MINUS


class Fourientation(tuple):
    """Per element, a bitmask over {+1: PLUS, -1: MINUS}."""

    def __new__(cls, bits):
        return super().__new__(cls, bits)

    def __neg__(self):
        return Fourientation(((b & 1) << 1) | ((b >> 1) & 1) for b in self)

    def __and__(self, other):
        return Fourientation(a & b for a, b in zip(self, other))

    def contains(self, C):
        return all(C[x] == 0 or self[x] & sign_bit(C[x]) for x in range(len(C)))

    def is_positive(self):
        n = len(self) // 2
        flipped = -self
        return all(self[i] == BOTH & ~flipped[i + n] for i in range(n))

    def is_negative(self):
        n = len(self) // 2
        return all(self[i] == BOTH & ~self[i + n] for i in range(n))

    def __str__(self):
        sym = {NONE: "0", PLUS: "+", MINUS: "-", BOTH: "B"}
        n = len(self) // 2
        return "".join(sym[b] for b in self[:n]) + "|" + "".join(sym[b] for b in self[n:])


def fourientation_of(B, O, n):
    """Bi-orient B; every other element follows the sign of O on its edge."""
    out = []
    for x in range(2 * n):
        out.append(BOTH if x in B else sign_bit(O[x % n]))
    return Fourientation(out)


def contains_circuit(rep, F):
    for C in rep.circuits:
        if F.contains(C):
            return C
    return None


def farkas(rep, F, e):
    """Farkas dichotomy for a positive or negative fourientation.

    e is an element of E (0-based) with |F(e)| = 1.  Returns ('e' or 'e*',
    witness) after checking that exactly one side has a witness.
    """
    n = rep.n
    if not (F.is_positive() or F.is_negative()):
        raise NotHalfFourientation("fourientation is neither positive nor negative")
    if F[e] not in (PLUS, MINUS):
        raise NotHalfFourientation("F(e) must be a single direction")
    inside = [C for C in rep.circuits if F.contains(C)]
    side_e = [C for C in inside if C[e]]
    side_s = [C for C in inside if C[e + n]]
    if bool(side_e) == bool(side_s):
        raise AssertionError(f"Farkas dichotomy violated at element {e + 1}")
    return ("e", side_e[0]) if side_e else ("e*", side_s[0])


# -- axioms ------------------------------------------------------------------

class AxiomReport(dict):
    """{axiom name: (passed, witness)}."""

    @property
    def ok(self):
        return all(v[0] for v in self.values())

    def failures(self):
        return {k: v[1] for k, v in self.items() if not v[0]}


def circuit_supports_brute_force(rep):
    """Minimal subtransversals contained in no basis."""
    bases = rep.bases
    dep = [S for S in rep.ground.all_subtransversals()
           if S and not any(S <= B for B in bases)]
    return sorted((S for S in dep if not any(T < S for T in dep)),
                  key=lambda S: sorted(rep.ground.key(x) for x in S))


def validate_axioms(rep, circuits=None):
    """Exhaustive check of the basis and circuit axioms and orthogonality."""
    g = rep.ground
    n = rep.n
    circuits = tuple(rep.circuits if circuits is None else circuits)
    B = set(rep.bases)
    sup = {support(C) for C in circuits}
    rep_out = AxiomReport()

    bad = None
    for B1 in B:
        for B2 in B:
            diff = B1 - B2
            for e in diff:
                if not any(f != e and B1 ^ {e, g.star(e), f, g.star(f)} in B
                           for f in diff):
                    bad = (g.transversal_name(B1), g.transversal_name(B2), g.name(e))
                    break
            if bad:
                break
        if bad:
            break
    rep_out["B"] = (bad is None, bad)
    rep_out["C1"] = (all(S for S in sup), None)
    bad = next(((a, b) for a in sup for b in sup if a < b), None)
    rep_out["C2"] = (bad is None, bad)
    bad = next((S for S in sup if not g.is_subtransversal(S)), None)
    rep_out["C3"] = (bad is None, bad)
    bad = next(((a, b) for a in sup for b in sup
                if len(a & {g.star(x) for x in b}) == 1), None)
    rep_out["C4"] = (bad is None, bad)
    bad = None
    for T in g.all_transversals():
        for e in T:
            es = g.star(e)
            if not any(S <= T | {es} for S in sup):
                bad = (g.transversal_name(T), g.name(es))
                break
        if bad:
            break
    rep_out["C5"] = (bad is None, bad)
    bad = next((C for C in circuits if neg(C) not in circuits), None)
    rep_out["negation"] = (bad is None, bad)
    bad = next(((C, D) for C in circuits for D in circuits if pairing(C, D)), None)
    rep_out["pairing"] = (bad is None, bad)
    bad = next((C for C in circuits if any(x not in (-1, 0, 1) for x in C)), None)
    rep_out["entries"] = (bad is None, bad)
    return rep_out


# -- text formats ------------------------------------------------------------

def format_matrix(M):
    rows = len(M)
    cols = len(M[0]) if rows else 0
    return "\n".join([f"mat {rows} {cols}"] + [" ".join(str(x) for x in r) for r in M]) + "\n"


def parse_matrix(text):
    lines = [l.split("#", 1)[0].split() for l in text.splitlines()]
    lines = [l for l in lines if l]
    if not lines or lines[0][0] != "mat" or len(lines[0]) != 3:
        raise ValueError("expected 'mat <rows> <cols>' header")
    r, c = int(lines[0][1]), int(lines[0][2])
    body = [[int(x) for x in l] for l in lines[1:]]
    if len(body) != r or any(len(row) != c for row in body):
        raise ValueError("matrix shape does not match header")
    return body


def format_circuit(rep, C, tag="circuit"):
    return f"{tag} {rep.ground.vector_str(C)}"


def parse_circuit_line(ground, line, tag="circuit"):
    toks = line.split()
    if not toks or toks[0] != tag:
        raise ValueError(f"expected '{tag} ...'")
    return ground.parse_vector(toks[1:])
