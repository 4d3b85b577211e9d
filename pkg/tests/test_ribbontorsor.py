import random

import pytest

import golden
from conftest import FIXTURE_NAMES, CORPUS_LABELS, RECORDS, graph, context
from quasitorsor import bby
from quasitorsor import ribbontorsor as rt
from quasitorsor.jacobian import orientation_str, act
from quasitorsor.ribbonmap import Dart

ALL = FIXTURE_NAMES + CORPUS_LABELS


def _named(rep, beta):
    return {rep.ground.transversal_name(B): orientation_str(O) for B, O in beta.items()}


def test_gamma_on_torus(torus):
    dirs = rt.gamma_h(torus, Dart(1, -1), {1})
    differs = {e for e, (t, h) in dirs.items() if h != Dart(e, 1)}
    assert differs == golden.GAMMA_DIFFERS


def test_bernardi_first_row(torus):
    rep = rt.canonical_rep(torus)
    beta = rt.bernardi_map(torus, Dart(1, -1), rep)
    B = rep.ground.parse_transversal("12*3*4*")
    assert orientation_str(beta[B]) == golden.BERNARDI_FIRST


def test_bernardi_is_table_three(torus):
    rep = rt.canonical_rep(torus)
    assert _named(rep, rt.bernardi_map(torus, Dart(1, -1), rep)) == golden.TABLE_BETA


def test_point_signature_is_sigma(torus):
    rep = rt.canonical_rep(torus)
    want = bby.CircuitSignature.from_circuits([golden.vec(d) for d in golden.SIGMA])
    assert rt.extract_signature(torus, Dart(1, -1), rep) == want
    assert rt.point_signature(torus, Dart(1, -1), rep) == want


def test_torus_canonical_torsor(torus):
    t = rt.canonical_torsor(torus, check_all=True)
    assert t.is_simply_transitive()
    g = t.rep.ground
    B1 = g.parse_transversal("12*3*4*")
    orbit = [g.transversal_name(t.act(v, B1)) for v in golden.JAC_REPRESENTATIVES]
    assert sorted(orbit) == sorted(golden.BASES)


@pytest.mark.parametrize("label", ALL)
def test_bernardi_equals_bby_for_every_anchor(label):
    G, rep = graph(label), context(label).rep
    for h in G.darts:
        beta = rt.bernardi_map(G, h, rep)
        s = rt.extract_signature(G, h, rep, beta)
        assert bby.beta_sigma(rep, s) == beta
        assert bby.is_acyclic(rep, s).acyclic
        assert s == rt.point_signature(G, h, rep)


@pytest.mark.parametrize("label", ALL)
def test_anchor_independence(label):
    G, ctx = graph(label), context(label)
    t = ctx.torsor
    assert t.is_simply_transitive()
    for h in G.darts[1:]:
        assert rt.bernardi_torsor(G, h, ctx.rep, ctx.system).table == t.table


@pytest.mark.parametrize("label", ALL)
def test_all_positive_on_own_orientation(label):
    G = graph(label)
    for h in G.darts:
        for Q in G.quasi_trees():
            assert rt.all_positive_check(G, h, Q)


@pytest.mark.parametrize("label", ALL)
def test_geometric_step_is_the_unit_action(label):
    ctx = context(label)
    n = ctx.rep.n
    for e in range(n):
        unit = tuple(int(i == e) for i in range(n))
        for r in ctx.system:
            for O in sorted(r.members)[:2]:
                assert rt.geometric_step(ctx.rep, O, e, ctx.system) == \
                    act(ctx.rep, unit, r, ctx.system)


@pytest.mark.parametrize("label", ALL)
def test_reference_orientation_independence(label):
    G, ctx = graph(label), context(label)
    rng = random.Random(label)
    X = {e for e in G.edges if rng.random() < 0.5}
    H = G.reoriented(X)
    ht = rt.canonical_torsor(H)
    flip = [-1 if i + 1 in X else 1 for i in range(G.n)]
    for (v, B1), B2 in ctx.torsor.table.items():
        assert ht.table[(ht.group.reduce([f * a for f, a in zip(flip, v)]), B1)] == B2


@pytest.mark.parametrize("label", ALL)
def test_duality(label):
    rpt = rt.duality_check(graph(label))
    assert rpt.ok, rpt.first_failure
    assert set(rpt.checks) == {"circuits", "bases", "groups", "table"}


@pytest.mark.parametrize("label", ALL)
def test_opposite_apparatus(label):
    G, rep = graph(label), context(label).rep
    opp = rt.opposite_apparatus(G)
    assert opp.rep == rep.opposite()
    assert rt.opposite_apparatus(opp.graph).graph == G


def test_left_and_right_agree_on_the_triangle():
    from quasitorsor.cli import load_fixture
    assert rt.left_right_comparison(load_fixture("c3"))


def test_left_and_right_differ_somewhere():
    """The two conventions are not interchangeable in general."""
    outcomes = {rt.left_right_comparison(graph(l)) for l in ALL}
    assert outcomes == {True, False}


def test_extraction_detects_inconsistency(torus):
    from quasitorsor.errors import InconsistentExtraction
    rep = rt.canonical_rep(torus)
    beta = dict(rt.bernardi_map(torus, Dart(1, -1), rep))
    B = rep.ground.parse_transversal("1234*")
    beta[B] = tuple(-s for s in beta[B])
    with pytest.raises(InconsistentExtraction):
        rt.extract_signature(torus, Dart(1, -1), rep, beta)
