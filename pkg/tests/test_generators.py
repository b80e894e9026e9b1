from itertools import combinations

import pytest

from tfpmis import generators
from tfpmis.generators import BadParams, GenSpec, gen_named
from tfpmis.graph import AbstractGraph, bfs_distances
from tfpmis.oracle import alpha_exact
from tfpmis.plane_graph import check_triangle_free


def test_jones_5_is_pentagon():
    g = gen_named(GenSpec("jones", {"n": 5}))
    assert g.n == 5 and g.m == 5
    assert alpha_exact(g)[0] == 2


def test_jones_8_alpha():
    g = gen_named(GenSpec("jones", {"n": 8}))
    assert g.n == 8 and check_triangle_free(g)
    assert alpha_exact(g)[0] == 3


@pytest.mark.parametrize("n", [5, 8, 11, 14, 17, 20])
def test_jones_faces_are_pentagons_and_alpha_tight(n):
    g = generators.jones(n)
    assert all(f.length == 5 for f in g.faces())
    assert 3 * alpha_exact(g)[0] == n + 1


@pytest.mark.parametrize("n", [2, 4, 6, 7, 9])
def test_jones_rejects_bad_sizes(n):
    with pytest.raises(BadParams):
        generators.jones(n)


def test_stars_three():
    g = gen_named(GenSpec("stars", {"a": 3}))
    assert g.n == 12 and g.m == 9


def test_random_tfp_deterministic_and_triangle_free():
    a = generators.gen_random_tfp(10, 1)
    b = generators.gen_random_tfp(10, 1)
    assert a == b and a.n == 10
    assert check_triangle_free(a)


def test_random_tfp_steinberg_tovey_at_22():
    g = generators.gen_random_tfp(22, 7)
    assert 3 * alpha_exact(g)[0] >= g.n + 1


def test_random_tfp_needs_seed():
    with pytest.raises(BadParams):
        gen_named(GenSpec("random_tfp", {"n": 10}))


def test_unknown_family_and_missing_param():
    with pytest.raises(BadParams):
        gen_named(GenSpec("petersen"))
    with pytest.raises(BadParams):
        gen_named(GenSpec("hex", {"rows": 2}))


@pytest.mark.parametrize("a", [1, 2, 3])
def test_stars_scattered_after_removal(a):
    """Largest 2-scattered set after deleting r vertices is r*a + (a - r)."""
    g = generators.stars(a).to_abstract()
    for r in range(a + 1):
        best = 0
        for drop in combinations(range(g.n), r):
            h = g.remove_vertices(drop)
            keep = [v for v in range(g.n) if v not in drop]
            # 2-scattered sets of h are independent sets of its square
            sq = set()
            for v in keep:
                for w, dist in bfs_distances(h.adj, v, 2, frozenset(drop)).items():
                    if 0 < dist <= 2 and w > v:
                        sq.add((v, w))
            sq_graph = AbstractGraph.from_edges(g.n, sq)
            alpha = alpha_exact(sq_graph.remove_vertices(drop))[0] - r  # dropped vertices are isolated
            best = max(best, alpha)
        assert best == r * a + (a - r)


def test_corpus_respects_bounds_and_is_deterministic():
    c1 = generators.corpus(40, 20, seed=4)
    c2 = generators.corpus(40, 20, seed=4)
    assert [n for n, _ in c1] == [n for n, _ in c2]
    assert all(3 <= g.n <= 20 and check_triangle_free(g) for _, g in c1)
