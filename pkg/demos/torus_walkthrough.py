"""Walk through the two-vertex torus map step by step.

    python demos/torus_walkthrough.py
"""

from quasitorsor import bby
from quasitorsor import ribbontorsor as rt
from quasitorsor.cli import load_fixture
from quasitorsor.jacobian import JacGroup, ReversalSystem, orientation_str, psi_lift
from quasitorsor.ribbonmap import Dart, interlacement_matrix

G = load_fixture("torus")
V, E, F, genus = G.euler_data()
print(f"torus map: {V} vertices, {E} edges, {F} faces, genus {genus}")

# Quasi-trees are the edge sets whose thickening has one boundary curve.
qts = G.quasi_trees()
print("quasi-trees:", [sorted(Q) for Q in qts])

(tour,) = G.boundary_tour(qts[0])
print(f"boundary of {sorted(qts[0])}:", " ".join(str(c) for c in tour))

M = interlacement_matrix(G, qts[0])
print("interlacement matrix rows:", M.entries)

rep = rt.canonical_rep(G)
g = rep.ground
print("bases:", ", ".join(g.transversal_name(B) for B in rep.bases))
print("circuits (one sign each):")
for C in bby.lex_signature(rep).sorted_circuits(rep):
    print("   ", g.vector_str(C))

J = JacGroup(rep)
system = ReversalSystem(rep, J)
print(f"Jacobian {J.describe()}, order {J.order}")
for r in system:
    print(f"   class of {r}: {len(r.members)} orientations")

for s in ("++++", "+++-"):
    lift = psi_lift(rep, tuple(1 if c == "+" else -1 for c in s))
    print(f"psi({s}) doubled = {lift}")

# Bernardi tour from 1-, then the torsor it induces.
h = Dart(1, -1)
beta = rt.bernardi_map(G, h, rep)
sigma = rt.extract_signature(G, h, rep, beta)
res = bby.is_acyclic(rep, sigma)
print(f"signature read off from {h}: acyclic={res.acyclic}, "
      f"witness=({' '.join(str(x) for x in res.witness)})")
for B in rep.bases:
    print(f"   {g.transversal_name(B):8} -> {orientation_str(beta[B])}")

t = rt.canonical_torsor(G, rep, system, check_all=True)
print("action of Jac on bases (all 8 anchors agree):")
for v, B, image in t.rows():
    print(f"   {v} . {B} = {image}")

# Flip one circuit and acyclicity breaks.
bad = sigma.flipped({g.parse("3"), g.parse("4")})
res = bby.is_acyclic(rep, bad)
print("after flipping the circuit on {3, 4}:")
for C, lam in res.dependency.items():
    print(f"   {lam} * ({g.vector_str(C)})")
ok, (B1, B2, C) = bby.is_triangulating(rep, bby.beta_sigma(rep, bad))
print(f"   not triangulating: {g.transversal_name(B1)} and {g.transversal_name(B2)} "
      f"share {g.vector_str(C)}")
