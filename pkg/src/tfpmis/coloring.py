"""Exact 3-colouring with precolouring, and the colour-class boost for independent sets."""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass, field

from .errors import BudgetExceeded, InvariantViolation, TfpmisError
from .graph import AbstractGraph, components, is_independent

COLORS = (1, 2, 3)
_FULL = 0b111


class SolverTimeout(BudgetExceeded):
    pass


class ImproperCycleColoring(TfpmisError, ValueError):
    pass


class DegreeTooHigh(TfpmisError, ValueError):
    pass


class CertificateInvalid(TfpmisError, ValueError):
    pass


@dataclass(frozen=True)
class Coloring:
    assignment: dict
    domain: frozenset = field(default=None)

    def __post_init__(self):
        if self.domain is None:
            object.__setattr__(self, "domain", frozenset(self.assignment))

    def __getitem__(self, v):
        return self.assignment[v]

    def conflict(self, g) -> tuple | None:
        """An edge inside the domain whose ends share a colour, if any."""
        a = self.assignment
        for u, v in sorted(_edges(g)):
            if u in a and v in a and a[u] == a[v]:
                return (u, v)
        return None

    def is_proper(self, g) -> bool:
        return self.conflict(g) is None


@dataclass(frozen=True)
class MonoCertificate:
    Q_prime: frozenset
    dropped: tuple


def _edges(g):
    return g.edges if isinstance(g, AbstractGraph) else g.edges()


def _abstract(g) -> AbstractGraph:
    return g if isinstance(g, AbstractGraph) else g.to_abstract()


class _Search:
    def __init__(self, adj, deadline):
        self.adj = adj
        self.deadline = deadline
        self.nodes = 0

    def run(self, dom: dict) -> dict | None:
        self.nodes += 1
        if self.nodes & 1023 == 1 and self.deadline is not None and time.monotonic() > self.deadline:
            raise SolverTimeout("3-colouring search ran out of time")
        open_ = [v for v, m in dom.items() if m & (m - 1)]
        if not open_:
            return dom
        adj = self.adj
        # saturation order: fewest remaining colours, then most open neighbours
        v = min(
            open_,
            key=lambda x: (bin(dom[x]).count("1"), -sum(1 for w in adj[x] if dom[w] & (dom[w] - 1)), x),
        )
        for c in (1, 2, 4):
            if not dom[v] & c:
                continue
            new = self._assign(dict(dom), v, c)
            if new is not None:
                out = self.run(new)
                if out is not None:
                    return out
        return None

    def _assign(self, dom, v, c):
        stack = [(v, c)]
        while stack:
            x, col = stack.pop()
            if not dom[x] & col:
                return None
            dom[x] = col
            for w in self.adj[x]:
                if w not in dom:
                    continue
                m = dom[w]
                if m & col:
                    m &= ~col
                    if not m:
                        return None
                    dom[w] = m
                    if not m & (m - 1):
                        stack.append((w, m))
        return dom


def color3_exact(g, precoloring: dict | None = None, timeout: float | None = 10.0) -> Coloring | None:
    """Proper 3-colouring extending ``precoloring``, or None if none exists.

    Backtracking with saturation-ordered branching and forward checking, one
    connected component at a time. Raises SolverTimeout after ``timeout`` seconds.
    """
    g = _abstract(g)
    pre = dict(precoloring or {})
    for v, c in pre.items():
        if c not in COLORS:
            raise ValueError(f"colour {c} of vertex {v} is not in {{1, 2, 3}}")
        for w in g.adj[v]:
            if pre.get(w) == c:
                raise ValueError(f"precolouring is improper on edge ({v}, {w})")
    deadline = None if timeout is None else time.monotonic() + timeout
    search = _Search(g.adj, deadline)
    out = {}
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * g.n + 1000))
    try:
        for comp in components(g.n, g.adj):
            dom = {v: _FULL for v in comp}
            for v in sorted(comp):
                if v in pre:
                    dom = search._assign(dom, v, 1 << (pre[v] - 1))
                    if dom is None:
                        return None
            sol = search.run(dom)
            if sol is None:
                return None
            out.update({v: m.bit_length() for v, m in sol.items()})
    finally:
        sys.setrecursionlimit(limit)
    col = Coloring(out, frozenset(range(g.n)))
    if not col.is_proper(g):
        raise InvariantViolation("colouring search produced an improper colouring")
    return col


def gimbel_bad_pattern(cycle_coloring) -> bool:
    """True iff a 6-cycle is coloured with opposite vertices equal and all three colours used."""
    c = list(cycle_coloring)
    k = len(c)
    if k > 6:
        raise ValueError("only cycles of length at most 6 are covered")
    for i in range(k):
        if c[i] == c[(i + 1) % k]:
            raise ImproperCycleColoring(f"positions {i} and {(i + 1) % k} share colour {c[i]}")
    return k == 6 and all(c[i] == c[i + 3] for i in range(3)) and len(set(c)) == 3


def mono3_gadget(g, v: int, timeout: float | None = 10.0) -> Coloring:
    """3-colouring of ``g`` in which all neighbours of ``v`` get colour 1.

    ``v`` is replaced by an alternating cycle through its neighbours and new
    vertices, precoloured 1 and 2; the extension then gives ``v`` colour 2.
    """
    nbrs = list(g.rotations[v]) if hasattr(g, "rotations") else sorted(g.adj[v])
    t = len(nbrs)
    if t > 3:
        raise DegreeTooHigh(f"vertex {v} has degree {t} > 3")
    ag = _abstract(g)
    if t <= 1:
        col = color3_exact(ag, {}, timeout)
        if col is None:
            raise InvariantViolation("a triangle-free plane graph had no 3-colouring")
        return col
    n = ag.n
    edges = {e for e in ag.edges if v not in e}
    new = list(range(n, n + t))
    for i in range(t):
        a, b = nbrs[i], nbrs[(i + 1) % t]
        edges.add((a, new[i]))
        edges.add((b, new[i]))
    gp = AbstractGraph.from_edges(n + t, edges)
    pre = {x: 1 for x in nbrs}
    pre.update({u: 2 for u in new})
    col = color3_exact(gp, pre, timeout)
    if col is None:
        raise InvariantViolation(f"precoloured cycle around vertex {v} did not extend")
    out = {x: c for x, c in col.assignment.items() if x < n}
    out[v] = 2
    res = Coloring(out, frozenset(range(n)))
    if not res.is_proper(ag) or len({out[x] for x in nbrs}) != 1:
        raise InvariantViolation(f"gadget colouring for vertex {v} failed its certificate")
    return res


class _DSU:
    def __init__(self, items):
        self.p = {x: x for x in items}

    def find(self, x):
        while self.p[x] != x:
            self.p[x] = self.p[self.p[x]]
            x = self.p[x]
        return x

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a != b:
            self.p[max(a, b)] = min(a, b)


def _contracted(ag: AbstractGraph, alive, Q):
    """Quotient of ``G[alive]`` merging each ``N(q)``; returns (graph, rep map, bad q's)."""
    dsu = _DSU(alive)
    for q in sorted(Q):
        nb = sorted(ag.adj[q] & alive)
        for w in nb[1:]:
            dsu.union(nb[0], w)
    reps = sorted({dsu.find(v) for v in alive})
    idx = {r: i for i, r in enumerate(reps)}
    where = {v: idx[dsu.find(v)] for v in alive}
    looped = set()
    edges = set()
    for u, v in ag.edges:
        if u in alive and v in alive:
            a, b = where[u], where[v]
            if a == b:
                looped.add(a)
            else:
                edges.add((min(a, b), max(a, b)))
    bad = sorted(q for q in Q if any(where[w] in looped for w in ag.adj[q] & alive))
    return AbstractGraph(len(reps), frozenset(edges)), where, bad


def color3_monochromatic(g, Q, X, timeout: float | None = 10.0) -> tuple[Coloring, MonoCertificate]:
    """3-colour ``G - X`` so that as many ``q`` in ``Q`` as possible see one colour.

    Each ``N(q)`` outside ``X`` is contracted to a single vertex (overlapping
    neighbourhoods merge). When a contraction creates a loop, or the contracted
    graph has no colouring in time, the smallest remaining ``q`` is dropped.
    """
    ag = _abstract(g)
    Q, X = frozenset(Q), frozenset(X)
    if Q & X:
        raise ValueError("Q and X must be disjoint")
    alive = frozenset(range(ag.n)) - X
    ok, edge = is_independent(ag.adj, Q)
    if not ok:
        raise ValueError(f"Q is not independent: edge {edge}")
    keep = sorted(Q)
    dropped = []
    while True:
        h, where, bad = _contracted(ag, alive, keep)
        if bad:
            keep.remove(bad[0])
            dropped.append(bad[0])
            continue
        try:
            col = color3_exact(h, {}, timeout)
        except SolverTimeout:
            if not keep:
                raise
            col = None
        if col is not None:
            break
        if not keep:
            raise InvariantViolation("G - X has no 3-colouring")
        dropped.append(keep.pop(0))
    assignment = {v: col[where[v]] for v in alive}
    res = Coloring(assignment, alive)
    if not res.is_proper(ag):
        raise InvariantViolation("lifted colouring is improper")
    for q in keep:
        if len({assignment[w] for w in ag.adj[q] & alive}) > 1:
            raise InvariantViolation(f"neighbourhood of {q} is not monochromatic")
    return res, MonoCertificate(frozenset(keep), tuple(dropped))


def boost_sets(g, X, Q, coloring: Coloring) -> tuple:
    """The three candidate sets ``V_i + Q_0 + Q_{i+1} + Q_{i+2}`` for colours i = 1, 2, 3.

    ``Q_0`` holds the ``q`` with no neighbour outside ``X``; ``Q_j`` those whose
    neighbours all have colour ``j``.
    """
    ag = _abstract(g)
    X, Q = frozenset(X), frozenset(Q)
    if Q & X:
        raise ValueError("Q and X must be disjoint")
    alive = frozenset(range(ag.n)) - X
    a = coloring.assignment
    missing = [v for v in alive if v not in a]
    if missing:
        raise CertificateInvalid(f"vertex {min(missing)} of G - X is uncoloured")
    byc = {c: set() for c in (0,) + COLORS}
    for q in Q:
        seen = {a[w] for w in ag.adj[q] & alive}
        if len(seen) > 1:
            raise CertificateInvalid(f"neighbourhood of {q} uses colours {sorted(seen)}")
        byc[seen.pop() if seen else 0].add(q)
    classes = {c: {v for v in alive if a[v] == c} for c in COLORS}
    out = []
    for i in COLORS:
        j, k = i % 3 + 1, (i + 1) % 3 + 1
        out.append(frozenset(classes[i] | byc[0] | byc[j] | byc[k]))
    return tuple(out)


def boost_independent_set(g, X, Q, coloring: Coloring) -> frozenset:
    """Largest of the three boosted colour classes (ties to the lowest colour)."""
    ag = _abstract(g)
    sets = boost_sets(ag, X, Q, coloring)
    need = ag.n - len(set(X)) + len(set(Q))
    if sum(len(s) for s in sets) < need:
        raise InvariantViolation("boosted sets are smaller than the counting bound")
    best = max(sets, key=len)
    ok, edge = is_independent(ag.adj, best)
    if not ok:
        raise InvariantViolation(f"boosted set contains edge {edge}")
    return best
