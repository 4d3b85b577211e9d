"""On the sphere the ribbon picture and the graph picture agree.

    python demos/plane_graphs.py
"""

from quasitorsor import bridges, exact
from quasitorsor import ribbontorsor as rt
from quasitorsor.cli import load_fixture
from quasitorsor.jacobian import JacGroup

for name in ("c3", "k4"):
    G = load_fixture(name)
    g = bridges.underlying_graph(G)
    rep = rt.canonical_rep(G)
    lap = [d for d in exact.smith_invariants(bridges.reduced_laplacian(g)) if d != 1]
    print(f"{name}: {len(G.quasi_trees())} quasi-trees, "
          f"{len(bridges.spanning_trees(g))} spanning trees")
    print(f"    Jacobian {JacGroup(rep).describe()}, Laplacian invariants {lap}")
    rpt = bridges.compare_sphere(G)
    for check, ok in rpt.checks.items():
        print(f"    {check}: {'agree' if ok else 'DIFFER'}")

# The torsor rebuilt from its proportion relation alone.
G = load_fixture("k4")
t = rt.canonical_torsor(G)
pr = bridges.proportion_from_torsor(t)
pg = bridges.group_from_proportion(pr)
inv = bridges.abelian_invariants(pg.mul, pg.identity, list(range(pg.size)))
print(f"k4 proportion relation: {len(pr)} quadruples, group of order {pg.size}, "
      f"invariants {inv}")
print("isomorphic as torsors:", bridges.torsor_isomorphism(t, pg) is not None)
