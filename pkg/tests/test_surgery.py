import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import presentations
from tgp.arrow import invariants, parse, relabel
from tgp.catalog import by_name, catalog
from tgp.errors import TooLarge, UnknownEdge
from tgp.surgery import (Atom, contract, delete, fingerprint, geometric_dual, partial_dual, partial_petrial,
                         petrial, twisted_dual)

THETA = parse("(a+ b+ c+)(c+ b+ a+)")
LOOP = parse("(a+ a+)")
TWISTED_LOOP = parse("(a+ a-)")
PATH = parse("(a+)(a+)")
SMALL = [ent for ent in catalog() if ent.expected.e <= 4]


def inv_tuple(ap):
    i = invariants(ap)
    return i.v, i.e, i.c, i.f, i.gamma, i.orientable


def subsets(edges):
    for r in range(len(edges) + 1):
        yield from itertools.combinations(edges, r)


# -- delete / contract ----------------------------------------------------------

def test_delete_examples():
    assert delete(LOOP, ["a"]) == parse("()")
    assert inv_tuple(delete(THETA, ["a"])) == inv_tuple(by_name("digon").graph)
    assert delete(THETA, []) == THETA
    with pytest.raises(UnknownEdge):
        delete(THETA, ["z"])


def test_contract_matches_loop_table():
    assert contract(PATH, "a") == parse("()")
    assert contract(LOOP, "a") == parse("()()")
    assert contract(TWISTED_LOOP, "a") == parse("()")
    with pytest.raises(UnknownEdge):
        contract(LOOP, "b")


@settings(max_examples=100, deadline=None)
@given(presentations(min_edges=1), st.data())
def test_contract_is_dual_then_delete(ap, data):
    e = data.draw(st.sampled_from(ap.edges))
    assert delete(partial_dual(ap, [e]), [e]) == contract(ap, e)


@settings(max_examples=100, deadline=None)
@given(presentations(min_edges=1), st.data())
def test_contracting_a_non_loop_merges_two_vertices(ap, data):
    e = data.draw(st.sampled_from(ap.edges))
    tr = ap.tracer
    ka, kb = tr.occurrences[tr.edge_index[e]]
    before = invariants(ap)
    after = invariants(contract(ap, e))
    assert after.e == before.e - 1
    if tr.circle_of_token[ka] != tr.circle_of_token[kb]:
        assert after.v == before.v - 1 and after.f == before.f and after.gamma == before.gamma


# -- partial Petrials ------------------------------------------------------------

def test_petrial_examples():
    assert fingerprint(partial_petrial(LOOP, ["a"])) == fingerprint(TWISTED_LOOP)
    assert partial_petrial(THETA, []) == THETA
    assert fingerprint(petrial(LOOP)) == fingerprint(TWISTED_LOOP)
    with pytest.raises(UnknownEdge):
        partial_petrial(LOOP, ["q"])


def test_abcabc_dual_petrial_is_plane_triangle():
    h = petrial(geometric_dual(by_name("abcabc").graph))
    assert inv_tuple(h) == (3, 3, 1, 2, 0, True)


@settings(max_examples=100, deadline=None)
@given(presentations(), st.data())
def test_tau_is_an_involution_and_changes_f_by_at_most_one(ap, data):
    A = data.draw(st.sets(st.sampled_from(ap.edges))) if ap.edges else set()
    assert fingerprint(partial_petrial(partial_petrial(ap, A), A)) == fingerprint(ap)
    for e in ap.edges:
        f0 = invariants(ap).f
        inv = invariants(partial_petrial(ap, [e]))
        assert abs(inv.f - f0) <= 1
        assert inv.v - inv.e + inv.f == 2 * inv.c - inv.gamma


# -- partial duals ----------------------------------------------------------------

def test_partial_dual_examples():
    assert inv_tuple(partial_dual(LOOP, ["a"])) == (2, 1, 1, 1, 0, True)
    assert inv_tuple(partial_dual(PATH, ["a"])) == inv_tuple(LOOP)
    assert inv_tuple(partial_dual(TWISTED_LOOP, ["a"])) == inv_tuple(TWISTED_LOOP)
    assert partial_dual(THETA, []) == THETA
    with pytest.raises(UnknownEdge):
        partial_dual(THETA, ["x"])


def test_geometric_dual_examples():
    assert inv_tuple(geometric_dual(THETA)) == (3, 3, 1, 2, 0, True)
    assert geometric_dual(parse("()")) == parse("()")
    assert inv_tuple(geometric_dual(PATH)) == inv_tuple(LOOP)


@pytest.mark.parametrize("entry", catalog(), ids=lambda ent: ent.name)
def test_geometric_dual_swaps_vertices_and_faces(entry):
    g = entry.graph
    d = geometric_dual(g)
    gi, di = invariants(g), invariants(d)
    assert (di.v, di.f, di.e, di.gamma, di.c, di.orientable) == (gi.f, gi.v, gi.e, gi.gamma, gi.c, gi.orientable)
    assert fingerprint(geometric_dual(d)) == fingerprint(g)


@pytest.mark.parametrize("entry", SMALL, ids=lambda ent: ent.name)
def test_partial_dual_group_laws(entry):
    g = entry.graph
    fp = fingerprint(g)
    for e in g.edges:
        assert fingerprint(partial_dual(partial_dual(g, [e]), [e])) == fp
    for e, f in itertools.combinations(g.edges, 2):
        assert fingerprint(partial_dual(partial_dual(g, [e]), [f])) == fingerprint(partial_dual(partial_dual(g, [f]), [e]))
    for A in subsets(g.edges):
        rest = [e for e in g.edges if e not in A]
        for B in subsets(rest):
            assert fingerprint(partial_dual(partial_dual(g, A), B)) == fingerprint(partial_dual(g, A + B))


@pytest.mark.parametrize("entry", SMALL, ids=lambda ent: ent.name)
def test_single_edge_s3_relation(entry):
    g = entry.graph
    for e in g.edges:
        left = twisted_dual(g, [("delta", [e]), ("tau", [e]), ("delta", [e])])
        right = twisted_dual(g, [("tau", [e]), ("delta", [e]), ("tau", [e])])
        assert fingerprint(left) == fingerprint(right)


@pytest.mark.parametrize("entry", SMALL, ids=lambda ent: ent.name)
def test_partial_dual_petrial_word_relation(entry):
    # tau(E) delta(E) tau(A) delta(E) acts like delta(A) followed by tau(E)
    g = entry.graph
    E = g.edges
    for A in subsets(E):
        left = twisted_dual(g, [("tau", E), ("delta", E), ("tau", A), ("delta", E)])
        right = twisted_dual(g, [("delta", A), ("tau", E)])
        assert fingerprint(left) == fingerprint(right)


@settings(max_examples=60, deadline=None)
@given(presentations(max_edges=5))
def test_euler_identity_survives_surgery(ap):
    for op in (geometric_dual, petrial):
        inv = invariants(op(ap))
        assert inv.v - inv.e + inv.f == 2 * inv.c - inv.gamma and inv.gamma >= 0
    for e in ap.edges:
        for g in (partial_dual(ap, [e]), contract(ap, e), delete(ap, [e])):
            inv = invariants(g)
            assert inv.v - inv.e + inv.f == 2 * inv.c - inv.gamma and inv.gamma >= 0


# -- twisted duals and fingerprints ---------------------------------------------------

def test_twisted_dual_examples():
    word = [Atom("delta", THETA.edges), Atom("tau", THETA.edges)]
    assert inv_tuple(twisted_dual(THETA, word)) == inv_tuple(petrial(geometric_dual(THETA)))
    assert twisted_dual(THETA, []) == THETA
    with pytest.raises(ValueError):
        Atom("sigma", {"a"})
    with pytest.raises(UnknownEdge):
        twisted_dual(THETA, [("tau", ["z"])])


def test_fingerprint_examples():
    assert fingerprint(LOOP) != fingerprint(TWISTED_LOOP)
    assert fingerprint(parse("(x+ x+)")) == fingerprint(LOOP)
    assert fingerprint(LOOP) == fingerprint(parse("(a- a-)"))
    with pytest.raises(TooLarge):
        fingerprint(parse(" ".join(f"(e{i}+ e{i}+)" for i in range(11))))


@settings(max_examples=60, deadline=None)
@given(presentations(max_edges=5), st.data())
def test_fingerprint_symmetries(ap, data):
    fp = fingerprint(ap)
    perm = data.draw(st.permutations(list(ap.edges)))
    assert fingerprint(relabel(ap, {o: n + "1" for o, n in zip(ap.edges, perm)})) == fp
    if ap.edges:
        e = data.draw(st.sampled_from(ap.edges))
        flipped = type(ap)(tuple(tuple((lab, -s if lab == e else s) for lab, s in c) for c in ap.circles))
        assert fingerprint(flipped) == fp
    i = data.draw(st.integers(0, ap.num_vertices - 1))
    circles = list(ap.circles)
    circles[i] = tuple((lab, -s) for lab, s in reversed(circles[i]))
    assert fingerprint(type(ap)(tuple(circles))) == fp
