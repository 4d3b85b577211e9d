from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

import golden
from conftest import RECORDS, FIXTURE_NAMES, CORPUS_LABELS, graph, context
from quasitorsor import ribbontorsor as rt
from quasitorsor.errors import NotSkewSymmetric, NotPU, NotHalfFourientation
from quasitorsor.orthomat import (
    GroundSet, OrthoRep, Fourientation, PLUS, MINUS, BOTH, NONE, support, neg, pairing,
    rep_from_pu_matrix, rep_from_quasi_tree, validate_axioms, restrict, reorient,
    farkas, fourientation_of, circuit_supports_brute_force, format_matrix, parse_matrix,
    format_circuit, parse_circuit_line)

ALL = FIXTURE_NAMES + CORPUS_LABELS


def _names(S, g):
    return sorted(g.name(x) for x in S)


def test_ground_set_names():
    g = GroundSet(4)
    assert [g.name(x) for x in g.elements] == ["1", "1*", "2", "2*", "3", "3*", "4", "4*"]
    assert g.parse("3*") == 6 and g.star(6) == 2 and g.under(6) == 2
    assert g.transversal_name(g.parse_transversal("12*3*4*")) == "12*3*4*"
    assert g.parse_transversal("1 2* 3") == frozenset({0, 5, 2})
    assert len(list(g.all_transversals())) == 16


def test_torus_bases(torus):
    rep = rt.canonical_rep(torus)
    assert [rep.ground.transversal_name(B) for B in rep.bases] == golden.BASES


def test_torus_circuits_match_printed_up_to_sign(torus):
    rep = rt.canonical_rep(torus)
    printed = {golden.vec(d) for d in golden.CIRCUITS}
    printed |= {neg(C) for C in printed}
    assert set(rep.circuits) == printed


@pytest.mark.parametrize("label", ALL)
def test_circuit_supports_match_oracle(label):
    rep = context(label).rep
    got = sorted(_names(S, rep.ground) for S in rep.circuit_supports)
    assert got == RECORDS[label]["circuit_supports"]


@pytest.mark.parametrize("label", ALL)
def test_bases_match_oracle(label):
    rep = context(label).rep
    n = rep.n
    want = {frozenset(e - 1 for e in Q) | {e - 1 + n for e in range(1, n + 1) if e not in Q}
            for Q in RECORDS[label]["quasi_trees"]}
    assert set(rep.bases) == want


@pytest.mark.parametrize("label", ALL)
def test_every_quasi_tree_gives_the_same_rep(label):
    G = graph(label)
    rep = context(label).rep
    assert all(rep_from_quasi_tree(G, Q) == rep for Q in G.quasi_trees())


@pytest.mark.parametrize("label", ALL)
def test_circuits_are_the_signed_ribbon_cycles(label):
    G = graph(label)
    assert set(context(label).rep.circuits) == rt.signed_ribbon_cycles(G)
    assert set(context(label).rep.bases) == rt.geometric_bases(G)


@pytest.mark.parametrize("label", ALL)
def test_axioms(label):
    report = validate_axioms(context(label).rep)
    assert report.ok, report.failures()


@pytest.mark.parametrize("label", ALL)
def test_circuit_pairing_vanishes(label):
    cs = context(label).rep.circuits
    assert all(pairing(C, D) == 0 for C in cs for D in cs)


@pytest.mark.parametrize("label", ALL)
def test_fundamental_circuit_sum(label):
    rep = context(label).rep
    for B in rep.bases:
        fc = rep.fundamental_circuits(B)
        for C in rep.circuits:
            total = [0] * (2 * rep.n)
            for e in support(C) - B:
                Ce = fc[e] if C[e] == 1 else neg(fc[e])
                total = [a + b for a, b in zip(total, Ce)]
            assert tuple(total) == C


@pytest.mark.parametrize("label", ALL)
def test_two_fundamental_circuits(label):
    rep = context(label).rep
    g = rep.ground
    for B in rep.bases:
        fc = rep.fundamental_circuits(B)
        for e1, e2 in combinations(sorted(fc), 2):
            C1, C2 = fc[e1], fc[e2]
            assert C1[e1] * C2[g.star(e1)] + C1[g.star(e2)] * C2[e2] == 0


def test_fundamental_circuit_shape(torus):
    rep = rt.canonical_rep(torus)
    g = rep.ground
    B = g.parse_transversal("12*3*4*")
    C = rep.fundamental_circuit(B, g.parse("2"))
    assert C[g.parse("2")] == 1 and support(C) <= B | {g.parse("2")}
    assert support(C) == frozenset(g.parse(x) for x in ["1", "2", "3*", "4*"])


def test_basis_criterion(torus):
    rep = rt.canonical_rep(torus)
    g = rep.ground
    bases = set(rep.bases)
    for T in g.all_transversals():
        assert rep.is_basis(T) == (T in bases)


def test_det_counts_bases(torus):
    from quasitorsor import exact
    rep = rt.canonical_rep(torus)
    assert exact.det(rep.i_plus_a()) == len(rep.bases) == 4


def test_skew_and_pu_checks():
    with pytest.raises(NotSkewSymmetric):
        OrthoRep(2, {0, 1}, [[0, 1], [1, 0]])
    with pytest.raises(NotPU):
        rep_from_pu_matrix([[0, 2], [-2, 0]])
    rep = rep_from_pu_matrix([[0, 1], [-1, 0]])
    assert len(rep.bases) == 2


def test_from_circuits_round_trip(torus):
    rep = rt.canonical_rep(torus)
    assert OrthoRep.from_circuits(4, rep.circuits) == rep


def test_dual_and_opposite(torus):
    rep = rt.canonical_rep(torus)
    n = rep.n
    starred = {tuple(C[n:]) + tuple(C[:n]) for C in rep.circuits}
    assert set(rep.dual().circuits) == starred
    opp = {tuple(C[:n]) + tuple(-x for x in C[n:]) for C in rep.circuits}
    assert set(rep.opposite().circuits) == opp
    assert rep.opposite().opposite() == rep


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(ALL[:30]), st.sets(st.integers(1, 7)))
def test_reorientation_flips_coordinates(label, X):
    rep = context(label).rep
    X = {e for e in X if e <= rep.n}
    rX = reorient(rep, X)
    flip = [-1 if (i % rep.n) + 1 in X else 1 for i in range(2 * rep.n)]
    assert set(rX.circuits) == {tuple(f * c for f, c in zip(flip, C)) for C in rep.circuits}
    assert set(rX.bases) == set(rep.bases)


@pytest.mark.parametrize("label", ALL[:25])
def test_restrictions_are_regular_matroids(label):
    rep = context(label).rep
    g = rep.ground
    subs = sorted(g.all_subtransversals(), key=lambda S: (len(S), sorted(S)))
    for S in subs[:: max(1, len(subs) // 12)]:
        res = restrict(rep, S).check_axioms()
        assert all(ok for ok, _ in res.values()), (g.transversal_name(S), res)


@pytest.mark.parametrize("label", ALL)
def test_brute_force_supports(label):
    rep = context(label).rep
    assert set(circuit_supports_brute_force(rep)) == set(rep.circuit_supports)


def test_fourientation_algebra():
    F = Fourientation([PLUS, MINUS, BOTH, NONE])
    assert (-F) == Fourientation([MINUS, PLUS, BOTH, NONE])
    assert (F & -F) == Fourientation([NONE, NONE, BOTH, NONE])
    assert F.contains((1, -1, 1, 0)) and F.contains((0, 0, -1, 0))
    assert not F.contains((0, 0, 0, 1))


def test_fourientation_of_basis(torus):
    rep = rt.canonical_rep(torus)
    g = rep.ground
    B = g.parse_transversal("12*3*4*")
    F = fourientation_of(B, golden.signs("+--+"), 4)
    assert F == Fourientation([BOTH, MINUS, MINUS, PLUS, PLUS, BOTH, BOTH, BOTH])


@pytest.mark.parametrize("label", ALL[:30])
def test_farkas_exactly_one_side(label):
    rep = context(label).rep
    n = rep.n
    for mask in range(min(2 ** n, 16)):
        top = [PLUS if mask >> i & 1 else MINUS for i in range(n)]
        for positive in (True, False):
            bottom = top if positive else [BOTH ^ b for b in top]
            F = Fourientation(top + bottom)
            assert F.is_positive() if positive else F.is_negative()
            for e in range(n):
                side, C = farkas(rep, F, e)
                assert F.contains(C)
                assert C[e] if side == "e" else C[e + n]


def test_farkas_rejects_mixed(torus):
    rep = rt.canonical_rep(torus)
    with pytest.raises(NotHalfFourientation):
        farkas(rep, Fourientation([PLUS, MINUS, PLUS, MINUS, BOTH, BOTH, BOTH, BOTH]), 0)


def test_matrix_and_circuit_text_round_trip(torus):
    rep = rt.canonical_rep(torus)
    assert parse_matrix(format_matrix(rep.lam)) == [list(r) for r in rep.lam]
    for C in rep.circuits:
        assert parse_circuit_line(rep.ground, format_circuit(rep, C)) == C
