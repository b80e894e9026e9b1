from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tfpmis import generators
from tfpmis.errors import NotTriangleFree
from tfpmis.graph import is_independent
from tfpmis.oracle import alpha_exact
from tfpmis.plane_graph import build_plane_graph
from tfpmis.solver import SolverConfig, analyze, decide, find_set, pipeline_set

random_graphs = st.builds(generators.gen_random_tfp, st.integers(3, 22), st.integers(0, 10**6))


def test_decide_c5():
    assert decide(generators.cycle(5), 1).answer == "yes"
    assert decide(generators.cycle(5), 2).answer == "no"


def test_decide_jones14():
    g = generators.jones(14)
    assert decide(g, 1).answer == "yes"
    rep = decide(g, 2)
    assert rep.answer == "no" and rep.alpha == 5


def test_find_examples():
    r = find_set(generators.jones(8), 1)
    assert r.status == "found" and len(r.vertices) == 3
    assert is_independent(generators.jones(8).adj, r.vertices)[0]
    assert find_set(generators.cycle(5), 2).status == "none"
    h = generators.hex_fragment(3, 3)
    r = find_set(h, 1)
    assert r.status == "found" and 3 * len(r.vertices) >= h.n + 1


def test_rejects_triangles_and_negative_k():
    k4 = build_plane_graph(4, [(1, 2, 3), (0, 3, 2), (0, 1, 3), (0, 2, 1)])
    with pytest.raises(NotTriangleFree):
        decide(k4, 0)
    with pytest.raises(ValueError):
        decide(generators.cycle(5), -1)


def test_config_validation():
    with pytest.raises(ValueError):
        SolverConfig(mode="theorem")
    with pytest.raises(ValueError):
        SolverConfig(c_theorem=Fraction(1, 2))
    with pytest.raises(ValueError):
        SolverConfig(W_max=0)
    with pytest.raises(ValueError):
        SolverConfig(mode="theorem", c_theorem=Fraction(-1))


def test_width_budget_gives_unknown():
    rep = decide(generators.cube(), 1, SolverConfig(W_max=1))
    assert rep.answer == "unknown" and rep.width_used > 1
    assert find_set(generators.cube(), 1, SolverConfig(W_max=1)).status == "unknown"


def test_theorem_shortcut_and_pipeline():
    cfg = SolverConfig(mode="theorem", c_theorem=Fraction(1, 10))
    g = generators.hex_fragment(3, 3)
    rep = decide(g, 1, cfg)
    assert rep.path == "theorem_shortcut" and rep.answer == "yes"
    r = find_set(g, 1, cfg)
    assert r.status == "found" and is_independent(g.adj, r.vertices)[0]
    assert 3 * len(r.vertices) >= g.n + 1
    assert r.trace is not None and sum(r.trace.boost_sizes) >= r.trace.bound


def test_unsound_constant_still_never_returns_bad_set():
    # c far too large: the shortcut claims yes, the search must still verify
    cfg = SolverConfig(mode="theorem", c_theorem=Fraction(10))
    g = generators.jones(8)
    r = find_set(g, 5, cfg)
    assert r.status == "none"


def test_analyze_examples():
    rep = analyze(generators.cube())
    assert rep["s_hat"] == 8 and rep["separating_4cycles"] == 0 and rep["alpha"] == 4
    rep = analyze(generators.k23())
    assert rep["s_hat"] == 5 and rep["alpha"] == 3 and rep["low_degree_count"] == 5
    rep = analyze(generators.jones(11), c=Fraction(1, 100))
    assert rep["alpha"] == 4 and rep["meets_n_plus_1_over_3"] and "s_hat" in rep
    assert rep["width_bound_slack"] >= 0


@settings(max_examples=40, deadline=None)
@given(random_graphs)
def test_decide_sound(g):
    alpha = alpha_exact(g)[0]
    assert decide(g, 0).answer == "yes"
    for k in range(7):
        rep = decide(g, k)
        assert rep.answer == ("yes" if 3 * alpha >= g.n + k else "no")
        found = find_set(g, k)
        if rep.answer == "yes":
            assert found.status == "found"
            assert is_independent(g.adj, found.vertices)[0]
            assert 3 * len(found.vertices) >= g.n + k


@settings(max_examples=30, deadline=None)
@given(st.builds(generators.gen_random_tfp, st.integers(4, 40), st.integers(0, 10**6)))
def test_pipeline_set_is_certified(g):
    tr = pipeline_set(g)
    assert is_independent(g.adj, tr.result)[0]
    assert tr.Q_prime <= tr.Q and not tr.Q & tr.X
    assert 3 * len(tr.result) >= tr.bound
