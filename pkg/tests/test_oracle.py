import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tfpmis import generators
from tfpmis.errors import BudgetExceeded
from tfpmis.graph import AbstractGraph
from tfpmis.oracle import OracleBudget, alpha_exact, verify_independent


def nx_alpha(g: AbstractGraph) -> int:
    G = nx.Graph(list(g.edges))
    G.add_nodes_from(range(g.n))
    return max(len(c) for c in nx.find_cliques(nx.complement(G)))


def test_examples():
    assert alpha_exact(generators.cycle(5))[0] == 2
    size, wit = alpha_exact(generators.cube())
    assert size == 4 and verify_independent(generators.cube(), wit)[0]
    assert alpha_exact(generators.jones(11))[0] == 4


def test_verify_examples():
    c5 = generators.cycle(5)
    assert verify_independent(c5, {0, 2}) == (True, None)
    assert verify_independent(c5, {0, 1}) == (False, (0, 1))
    assert verify_independent(c5, set()) == (True, None)
    with pytest.raises(ValueError):
        verify_independent(c5, {9})


def test_witness_is_lexicographically_smallest():
    # C6 has maximum sets {0,2,4} and {1,3,5}
    assert alpha_exact(generators.cycle(6))[1] == {0, 2, 4}
    # path 0-1-2-3: maximum sets {0,2}, {0,3}, {1,3}
    p4 = AbstractGraph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert alpha_exact(p4)[1] == {0, 2}


def test_budgets():
    with pytest.raises(BudgetExceeded):
        alpha_exact(generators.cycle(10), OracleBudget(max_n=8))
    with pytest.raises(BudgetExceeded):
        alpha_exact(generators.gen_random_tfp(40, 1), OracleBudget(max_nodes=3))
    with pytest.raises(ValueError):
        OracleBudget(max_n=63)
    assert alpha_exact(AbstractGraph(0, frozenset())) == (0, frozenset())


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 24), st.data())
def test_matches_networkx_on_arbitrary_graphs(n, data):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = data.draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    g = AbstractGraph.from_edges(n, edges)
    size, wit = alpha_exact(g)
    assert size == nx_alpha(g) == len(wit)
    assert verify_independent(g, wit)[0]


@settings(max_examples=60, deadline=None)
@given(st.builds(generators.gen_random_tfp, st.integers(3, 30), st.integers(0, 10**6)))
def test_third_plus_one_bound(g):
    assert 3 * alpha_exact(g)[0] >= g.n + 1
