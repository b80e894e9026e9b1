"""Low-indegree orientations and iterated transitive-fraternal augmentation."""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from .graph import AbstractGraph


@dataclass(frozen=True)
class Digraph:
    n: int
    arcs: frozenset
    out_nbrs: tuple = field(init=False, repr=False, compare=False)
    in_nbrs: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        outs = [set() for _ in range(self.n)]
        ins = [set() for _ in range(self.n)]
        for u, v in self.arcs:
            if u == v:
                raise ValueError(f"loop at {u}")
            if u in outs[v]:
                raise ValueError(f"arcs in both directions between {u} and {v}")
            outs[u].add(v)
            ins[v].add(u)
        object.__setattr__(self, "out_nbrs", tuple(frozenset(s) for s in outs))
        object.__setattr__(self, "in_nbrs", tuple(frozenset(s) for s in ins))

    @property
    def indegree(self) -> tuple:
        return tuple(len(s) for s in self.in_nbrs)

    @property
    def max_indegree(self) -> int:
        return max(self.indegree, default=0)

    def adjacent(self, u: int, v: int) -> bool:
        return v in self.out_nbrs[u] or u in self.out_nbrs[v]

    def underlying(self) -> AbstractGraph:
        return AbstractGraph.from_edges(self.n, self.arcs)


@dataclass(frozen=True)
class AugmentStats:
    rounds: int
    max_indegree_per_round: tuple

    @property
    def m_d(self) -> int:
        return self.max_indegree_per_round[-1]


def _peel_order(g: AbstractGraph) -> list:
    deg = [g.degree(v) for v in range(g.n)]
    heap = [(d, v) for v, d in enumerate(deg)]
    heapq.heapify(heap)
    done = [False] * g.n
    order = []
    while heap:
        d, v = heapq.heappop(heap)
        if done[v] or d != deg[v]:
            continue
        done[v] = True
        order.append(v)
        for w in g.adj[v]:
            if not done[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    return order


def degeneracy_orientation(g: AbstractGraph) -> Digraph:
    """Orient every edge towards the endpoint peeled off first.

    The indegree of a vertex is its degree at the moment it is peeled, so the
    maximum indegree equals the degeneracy.
    """
    rank = {v: i for i, v in enumerate(_peel_order(g))}
    arcs = frozenset((u, v) if rank[v] < rank[u] else (v, u) for u, v in g.edges)
    return Digraph(g.n, arcs)


def augment_step(d: Digraph) -> Digraph:
    """One round of transitivity and fraternality, read off ``d`` alone.

    Transitive demands between non-adjacent pairs keep their direction unless
    both directions are demanded; such pairs join the fraternal edges, and all
    of those are oriented together by a degeneracy orientation.
    """
    demanded = set()
    for z in range(d.n):
        for x in d.in_nbrs[z]:
            for y in d.out_nbrs[z]:
                if x != y and not d.adjacent(x, y):
                    demanded.add((x, y))
    free = set()
    forced = set()
    for x, y in demanded:
        if (y, x) in demanded:
            free.add((min(x, y), max(x, y)))
        else:
            forced.add((x, y))
    linked = {(min(a, b), max(a, b)) for a, b in forced}
    for z in range(d.n):
        ins = sorted(d.in_nbrs[z])
        for i, x in enumerate(ins):
            for y in ins[i + 1:]:
                if (x, y) not in linked and not d.adjacent(x, y):
                    free.add((x, y))
    oriented = degeneracy_orientation(AbstractGraph(d.n, frozenset(free))).arcs
    return Digraph(d.n, d.arcs | forced | oriented)


def augment_l(g: AbstractGraph, l: int) -> tuple[Digraph, AugmentStats]:
    """``l``-th oriented augmentation of ``g`` with per-round maximum indegrees."""
    if l < 0:
        raise ValueError("rounds must be >= 0")
    d = degeneracy_orientation(g)
    seq = [d.max_indegree]
    for _ in range(l):
        nxt = augment_step(d)
        if nxt.arcs == d.arcs:
            seq.extend([d.max_indegree] * (l - len(seq) + 1))
            break
        d = nxt
        seq.append(d.max_indegree)
    return d, AugmentStats(l, tuple(seq))
