import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from colour_oracle import all_proper_colourings, cycle_colourings, extends, induced_cycles
from conftest import hub_graph
from tfpmis import generators
from tfpmis.coloring import (
    CertificateInvalid,
    Coloring,
    DegreeTooHigh,
    ImproperCycleColoring,
    SolverTimeout,
    boost_independent_set,
    boost_sets,
    color3_exact,
    color3_monochromatic,
    gimbel_bad_pattern,
    mono3_gadget,
)
from tfpmis.graph import AbstractGraph, is_independent
from tfpmis.oracle import alpha_exact

STAR = AbstractGraph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
small_graphs = st.builds(generators.gen_random_tfp, st.integers(3, 11), st.integers(0, 10**6))


def test_c5_colours():
    g = generators.cycle(5)
    col = color3_exact(g)
    assert col.is_proper(g) and set(col.assignment) == set(range(5))


def test_total_precolouring_returned():
    pre = {i: (1, 2, 3)[i % 3] for i in range(6)}
    assert color3_exact(generators.cycle(6), pre).assignment == pre


def test_hub_cannot_extend():
    pre = {i: (1, 2, 3)[i % 3] for i in range(6)}
    assert color3_exact(hub_graph(), pre) is None
    rows = all_proper_colourings(7, hub_graph().edges)
    assert not extends(rows, pre)


def test_improper_precolouring_rejected():
    with pytest.raises(ValueError):
        color3_exact(generators.cycle(4), {0: 1, 1: 1})
    with pytest.raises(ValueError):
        color3_exact(generators.cycle(4), {0: 4})


def test_timeout_raised():
    with pytest.raises(SolverTimeout):
        color3_exact(generators.cycle(7), {}, timeout=0.0)


@settings(max_examples=50, deadline=None)
@given(small_graphs, st.randoms(use_true_random=False))
def test_decision_matches_exhaustive(g, rnd):
    ag = g.to_abstract()
    rows = all_proper_colourings(ag.n, ag.edges)
    for _ in range(5):
        pre = {v: rnd.choice((1, 2, 3)) for v in range(ag.n) if rnd.random() < 0.35}
        if any(pre.get(u) == pre.get(v) is not None for u, v in ag.edges):
            continue
        col = color3_exact(ag, pre)
        assert (col is not None) == extends(rows, pre)
        if col is not None:
            assert col.is_proper(ag) and all(col[v] == c for v, c in pre.items())


def test_gimbel_pattern():
    assert gimbel_bad_pattern((1, 2, 3, 1, 2, 3))
    assert gimbel_bad_pattern((2, 3, 1, 2, 3, 1))
    assert not gimbel_bad_pattern((1, 2, 1, 2, 1, 2))
    assert not gimbel_bad_pattern((1, 2, 3, 2, 3, 2))
    for cols in cycle_colourings(4):
        assert not gimbel_bad_pattern(cols)
    with pytest.raises(ImproperCycleColoring):
        gimbel_bad_pattern((1, 1, 2, 3))


def test_gimbel_dichotomy_on_hub():
    g = hub_graph()
    rows = all_proper_colourings(g.n, g.edges)
    for cyc in induced_cycles(g):
        for cols in cycle_colourings(len(cyc)):
            pre = dict(zip(cyc, cols))
            if not extends(rows, pre):
                assert len(cyc) == 6 and gimbel_bad_pattern(cols)


def mono_ok(g, col, v):
    return col.is_proper(g) and len({col[w] for w in g.adj[v]}) <= 1


def test_gadget_examples():
    c5 = generators.cycle(5)
    assert mono_ok(c5, mono3_gadget(c5, 0), 0)
    k23 = generators.k23()
    assert mono_ok(k23, mono3_gadget(k23, 2), 2)
    lone = generators.stars(1)  # an edge
    assert mono_ok(lone, mono3_gadget(lone, 1), 1)


def test_gadget_degree_limit():
    with pytest.raises(DegreeTooHigh):
        mono3_gadget(generators.stars(4), 0)


def test_monochromatic_star():
    col, cert = color3_monochromatic(STAR, {0}, set())
    assert cert.Q_prime == {0}
    assert len({col[w] for w in (1, 2, 3)}) == 1 and col[0] != col[1]


def test_monochromatic_k23():
    g = generators.k23()
    col, cert = color3_monochromatic(g, {0}, set())
    assert cert.Q_prime == {0} and len({col[w] for w in (2, 3, 4)}) == 1


def test_monochromatic_drops_impossible_vertices():
    # neighbourhood of 1 in C5 is {0, 2}; of 3 is {2, 4}; together they force
    # 0, 2, 4 into one class, which contains the edge (4, 0)
    c5 = generators.cycle(5)
    col, cert = color3_monochromatic(c5, {1, 3}, set())
    assert cert.dropped == (1,) and cert.Q_prime == {3}
    assert col.is_proper(c5)


def test_monochromatic_rejects_dependent_q():
    with pytest.raises(ValueError):
        color3_monochromatic(generators.cycle(5), {0, 1}, set())


def test_monochromatic_jones8_pipeline_certificates():
    from tfpmis.solver import pipeline_set

    g = generators.jones(8)
    tr = pipeline_set(g)
    col, cert = color3_monochromatic(g, tr.Q, tr.X)
    assert set(cert.Q_prime) | set(cert.dropped) == set(tr.Q)
    for q in cert.Q_prime:
        assert len({col[w] for w in g.adj[q] - tr.X}) <= 1


def test_boost_star():
    col = Coloring({0: 2, 1: 1, 2: 1, 3: 1})
    sets = boost_sets(STAR, set(), {0}, col)
    assert sum(map(len, sets)) >= 5
    assert boost_independent_set(STAR, set(), {0}, col) == {1, 2, 3}


def test_boost_k23():
    g = generators.k23()
    col = Coloring({0: 2, 1: 2, 2: 1, 3: 1, 4: 1})
    sets = boost_sets(g, set(), {0}, col)
    assert sorted(map(len, sets)) == [1, 2, 3]
    best = boost_independent_set(g, set(), {0}, col)
    assert len(best) == 3 == alpha_exact(g)[0]


def test_boost_without_q_is_largest_class():
    g = generators.cycle(7)
    col = color3_exact(g)
    best = boost_independent_set(g, set(), set(), col)
    assert 3 * len(best) >= 7


def test_boost_rejects_bichromatic():
    col = Coloring({0: 2, 1: 1, 2: 3, 3: 1})
    with pytest.raises(CertificateInvalid):
        boost_sets(STAR, set(), {0}, col)


@settings(max_examples=40, deadline=None)
@given(st.builds(generators.gen_random_tfp, st.integers(4, 40), st.integers(0, 10**6)))
def test_boost_identity_in_pipeline(g):
    from tfpmis.solver import pipeline_set

    tr = pipeline_set(g)
    assert sum(tr.boost_sizes) >= tr.bound
    assert is_independent(g.adj, tr.result)[0]
    assert 3 * len(tr.result) >= tr.bound
