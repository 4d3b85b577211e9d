import pytest

from conftest import FIXTURE_NAMES, CORPUS_LABELS, RECORDS, graph, context
from quasitorsor import bridges, exact
from quasitorsor.cli import load_fixture
from quasitorsor.errors import NotGenusZero, ParseError, AxiomsFailed

ALL = FIXTURE_NAMES + CORPUS_LABELS
PLANE = [l for l in ALL if RECORDS[l]["euler"][3] == 0]


def test_parse_graph():
    g = bridges.parse_graph("graph\nnv 3\ne 1 2\ne 2 3\ne 3 1\n")
    assert g == bridges.SimpleGraph(3, ((0, 1), (1, 2), (2, 0)))
    with pytest.raises(ParseError):
        bridges.parse_graph("graph\nnv 2\ne 1 5\n")
    with pytest.raises(ParseError):
        bridges.parse_graph("nope\n")


def test_triangle_jacobian():
    G = load_fixture("c3")
    assert context("c3").group.invariant_factors == (3,)
    rpt = bridges.compare_sphere(G)
    assert rpt.ok and rpt.details["jac"] == ((3,), (3,))


def test_k4_jacobian_and_laplacian():
    G = load_fixture("k4")
    g = bridges.underlying_graph(G)
    lap = exact.smith_invariants(bridges.reduced_laplacian(g))
    assert lap == (1, 4, 4)
    assert context("k4").group.invariant_factors == (4, 4)
    assert len(bridges.spanning_trees(g)) == 16


@pytest.mark.parametrize("label", PLANE)
def test_sphere_comparison(label):
    rpt = bridges.compare_sphere(graph(label))
    assert rpt.ok, rpt.first_failure


@pytest.mark.parametrize("label", PLANE)
def test_laplacian_matches_oracle(label):
    g = bridges.underlying_graph(graph(label))
    lap = [d for d in exact.smith_invariants(bridges.reduced_laplacian(g)) if d != 1] \
        if g.nv > 1 else []
    assert lap == RECORDS[label]["laplacian_invariants"]


def test_sphere_only_for_genus_zero(torus):
    with pytest.raises(NotGenusZero):
        bridges.compare_sphere(torus)


def test_graphic_lift_circuits():
    g = bridges.parse_graph("graph\nnv 2\ne 1 2\ne 1 2\n")
    rep = bridges.graphic_cd_rep(g)
    assert len(rep.bases) == 2
    assert (1, -1, 0, 0) in set(rep.circuits) or (-1, 1, 0, 0) in set(rep.circuits)


@pytest.mark.parametrize("label", [l for l in ALL if len(RECORDS[l]["quasi_trees"]) <= 24])
def test_proportion_round_trip(label):
    t = context(label).torsor
    pr = bridges.proportion_from_torsor(t)
    ax = bridges.check_ps_axioms(pr)
    assert all(ok for ok, _ in ax.values()), ax
    assert bridges.dual_relation(pr).quads == pr.quads
    pg = bridges.group_from_proportion(pr)
    assert pg.size == t.group.order
    inv = bridges.abelian_invariants(pg.mul, pg.identity, list(range(pg.size)))
    assert inv == t.group.invariant_factors
    phi = bridges.torsor_isomorphism(t, pg)
    assert phi is not None and phi[t.group.zero] == pg.identity


def test_torus_pair_group_is_cyclic(torus):
    t = context("torus").torsor
    pg = bridges.group_from_proportion(bridges.proportion_from_torsor(t))
    assert sorted(pg.order_of(g) for g in range(pg.size)) == [1, 2, 4, 4]


def test_broken_relation_is_rejected():
    t = context("torus").torsor
    pr = bridges.proportion_from_torsor(t)
    broken = bridges.ProportionRelation(pr.points, set(pr.quads) - {next(iter(sorted(pr.quads)))})
    assert not all(ok for ok, _ in bridges.check_ps_axioms(broken).values())
    with pytest.raises(AxiomsFailed):
        bridges.group_from_proportion(broken)


def test_abelian_invariants_of_klein_four():
    elems = [(a, b) for a in range(2) for b in range(2)]
    idx = {e: i for i, e in enumerate(elems)}
    mul = {(idx[x], idx[y]): idx[((x[0] + y[0]) % 2, (x[1] + y[1]) % 2)]
           for x in elems for y in elems}
    assert bridges.abelian_invariants(mul, 0, list(range(4))) == (2, 2)
