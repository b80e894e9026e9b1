from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import cube_with_inner_vertex, nested_squares
from tfpmis import generators
from tfpmis.cycles4 import (
    closed_interior,
    descend_to_innermost,
    enumerate_4cycles,
    find_separating_4cycle_fast,
    innermost_separating_4cycle,
    swept_decompose,
)

random_graphs = st.builds(generators.gen_random_tfp, st.integers(4, 45), st.integers(0, 10**6))


def is_4cycle(g, cyc):
    return len(set(cyc)) == 4 and all(g.has_edge(cyc[i], cyc[(i + 1) % 4]) for i in range(4))


def test_cube_cycles_all_facial():
    ws = enumerate_4cycles(generators.cube())
    assert len(ws) == 6
    assert all(w.facial and not w.separating for w in ws)
    assert find_separating_4cycle_fast(generators.cube()) is None


def test_c8_has_no_4cycles():
    assert enumerate_4cycles(generators.cycle(8)) == []


def test_k23_three_facial_cycles():
    g = generators.k23()
    ws = enumerate_4cycles(g)
    assert len(ws) == 3 and not any(w.separating for w in ws)
    assert find_separating_4cycle_fast(g) is None


def test_cube_with_inner_vertex(cube_w):
    seps = [w for w in enumerate_4cycles(cube_w) if w.separating]
    assert [w.vertices for w in seps] == [(4, 5, 6, 7)]
    assert seps[0].interior == {8}
    fast = find_separating_4cycle_fast(cube_w)
    assert fast is not None and fast.separating
    assert innermost_separating_4cycle(cube_w).vertices == (4, 5, 6, 7)
    assert descend_to_innermost(cube_w).vertices == (4, 5, 6, 7)


def test_nested_picks_inner(nested):
    w = innermost_separating_4cycle(nested)
    assert w.vertices == (12, 13, 14, 15)
    assert w.interior_vertex_count == 1
    assert descend_to_innermost(nested).vertices == (12, 13, 14, 15)


def test_innermost_none_without_separating():
    assert innermost_separating_4cycle(generators.cycle(6)) is None
    assert descend_to_innermost(generators.cube()) is None


def test_swept_examples(cube_w):
    sd = swept_decompose(generators.cycle(6))
    assert len(sd.parts) == 1 and sd.s_hat == 6
    assert swept_decompose(generators.k23()).s_hat == 5
    sd = swept_decompose(cube_w)
    assert sorted(p.size for p in sd.parts) == [5, 8]
    assert sd.s_hat == 8
    assert sd.joins == ((0, 1, (4, 5, 6, 7)),)


def check_swept(g, sd):
    host = set(g.edges())
    seen = set()
    for p in sd.parts:
        assert not any(w.separating for w in enumerate_4cycles(p.graph))
        host_faces = {frozenset(f.directed_edges()) for f in g.faces()}
        for f in p.graph.faces():
            walk = frozenset((p.labels[a], p.labels[b]) for a, b in f.directed_edges())
            if walk not in host_faces:
                assert f.length == 4
        assert p.edges <= host
        seen |= p.edges
    assert seen == host
    covered = set().union(*(set(p.labels) for p in sd.parts)) if sd.parts else set()
    assert covered == {v for v in range(g.n)}


@settings(max_examples=80, deadline=None)
@given(random_graphs)
def test_fast_finder_agrees_with_enumeration(g):
    exists = any(w.separating for w in enumerate_4cycles(g))
    fast = find_separating_4cycle_fast(g)
    assert (fast is not None) == exists
    if fast is not None:
        assert fast.separating and is_4cycle(g, fast.vertices)


@settings(max_examples=60, deadline=None)
@given(random_graphs)
def test_innermost_has_nothing_inside(g):
    w = innermost_separating_4cycle(g)
    if w is None:
        return
    h, _ = closed_interior(g, w)
    assert not any(x.separating for x in enumerate_4cycles(h))
    d = descend_to_innermost(g)
    h2, _ = closed_interior(g, d)
    assert not any(x.separating for x in enumerate_4cycles(h2))


@settings(max_examples=60, deadline=None)
@given(random_graphs)
def test_swept_invariants(g):
    sd = swept_decompose(g)
    check_swept(g, sd)
    if not any(w.separating for w in enumerate_4cycles(g)):
        assert sd.s_hat == g.n


def test_swept_invariants_on_fixtures():
    for g in (cube_with_inner_vertex(), nested_squares(), generators.hex_fragment(2, 3), generators.jones(14)):
        check_swept(g, swept_decompose(g))
