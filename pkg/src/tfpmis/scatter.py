"""Scattered-set extraction: bipartite selection and the fatness procedure."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .augment import _peel_order, augment_l
from .errors import InvariantViolation, TfpmisError
from .graph import AbstractGraph


class DegreeCapViolated(TfpmisError, ValueError):
    pass


@dataclass(frozen=True)
class FatConstants:
    cap: int
    t: int
    K0: int
    K: int
    thresholds: tuple  # d_0 .. d_cap as Fractions

    @classmethod
    def build(cls, cap: int, t: int, m_d: int | None = None) -> "FatConstants":
        if cap < 1 or t < 1:
            raise ValueError("cap and t must be >= 1")
        c = cap
        K0 = c ** (2 * c) * (2 * c + 2) ** (c + 1) * t ** c
        ds = tuple(
            Fraction(K0, c ** (2 * i + 1) * (2 * c + 2) ** (i + 1) * t ** i) for i in range(c + 1)
        )
        md = cap if m_d is None else m_d
        return cls(cap, t, K0, (2 * md + 1) * K0, ds)


@dataclass(frozen=True)
class ScatterResult:
    Q: frozenset
    X: frozenset
    d: int
    S_size: int
    constants: FatConstants

    @property
    def ratios(self) -> tuple:
        """``(|Q|*K >= |S|, |X|*t <= |Q|)``."""
        return (
            len(self.Q) * self.constants.K >= self.S_size,
            len(self.X) * self.constants.t <= len(self.Q),
        )


def spec_select(S, Z, edges, cap: int, t: int):
    """Pick ``Q`` within ``S`` and ``X`` within ``Z`` such that any two ``Q``
    vertices share neighbours only inside ``X``.

    ``edges`` are ``(s, z)`` pairs. Returns ``(Q, X, constants)``.
    """
    S = sorted(set(S))
    Z = set(Z)
    nb = {s: set() for s in S}
    zdeg = {z: 0 for z in Z}
    for s, z in edges:
        if s not in nb or z not in zdeg:
            raise ValueError(f"edge ({s}, {z}) leaves the bipartition")
        if z not in nb[s]:
            nb[s].add(z)
            zdeg[z] += 1
    for s in S:
        if len(nb[s]) > cap:
            raise DegreeCapViolated(f"vertex {s} has {len(nb[s])} neighbours, cap is {cap}")
    const = FatConstants.build(cap, t)
    ds = const.thresholds

    def bucket(z):
        deg = zdeg[z]
        if deg >= ds[0]:
            return 0
        for i in range(1, cap + 1):
            if deg >= ds[i]:
                return i
        return None  # isolated in the bipartite graph

    level = {z: bucket(z) for z in Z}
    best_i, best_b = 0, None
    for i in range(cap + 1):
        b = [s for s in S if all(level[z] != i for z in nb[s])]
        if best_b is None or len(b) > len(best_b):
            best_i, best_b = i, b
    X = frozenset(z for z in Z if level[z] is not None and level[z] < best_i)
    taken = set()
    Q = []
    for s in best_b:
        outside = nb[s] - X
        if not outside & taken:
            Q.append(s)
            taken |= outside
    return frozenset(Q), X, const


def verify_scattered(g, Q, X, d: int) -> tuple[bool, tuple | None]:
    """``(True, None)`` if all ``Q`` vertices are more than ``d`` apart in ``G - X``."""
    Q, X = set(Q), set(X)
    if Q & X:
        raise ValueError("Q and X must be disjoint")
    adj = g.adj
    for q in sorted(Q):
        dist = {q: 0}
        queue = deque([q])
        while queue:
            u = queue.popleft()
            if dist[u] == d:
                continue
            for w in adj[u]:
                if w in dist or w in X:
                    continue
                dist[w] = dist[u] + 1
                if w in Q:
                    return False, (q, w)
                queue.append(w)
    return True, None


def _smallest_last_coloring(g: AbstractGraph) -> list:
    color = [0] * g.n
    for v in reversed(_peel_order(g)):
        used = {color[w] for w in g.adj[v] if color[w]}
        c = 1
        while c in used:
            c += 1
        color[v] = c
    return color


def fat_extract(g, S, d: int, t: int) -> ScatterResult:
    """Extract ``Q`` from ``S`` and a small ``X`` so that ``Q`` is ``d``-scattered in ``G - X``.

    Every result is re-checked; a failed check raises InvariantViolation.
    """
    if d < 1 or t < 1:
        raise ValueError("d and t must be >= 1")
    ag = g if isinstance(g, AbstractGraph) else g.to_abstract()
    S = frozenset(S)
    if any(not 0 <= v < ag.n for v in S):
        raise ValueError("S must be a subset of the vertex set")
    D, stats = augment_l(ag, d)
    m_d = stats.m_d
    colors = _smallest_last_coloring(D.underlying())
    if colors and max(colors) > 2 * m_d + 1:
        raise InvariantViolation(f"greedy colouring used {max(colors)} > 2*{m_d}+1 colours")
    classes = {}
    for v in sorted(S):
        classes.setdefault(colors[v], []).append(v)
    S0 = max(classes.values(), key=len) if classes else []
    Z = set()
    h_edges = []
    for s in S0:
        for z in D.in_nbrs[s]:
            Z.add(z)
            h_edges.append((s, z))
    # S0 is independent in the augmented graph, so the two sides are disjoint.
    Q, X, _ = spec_select(S0, Z, h_edges, max(1, m_d), t)
    const = FatConstants.build(max(1, m_d), t, m_d=m_d)
    res = ScatterResult(Q, X, d, len(S), const)
    ok, pair = verify_scattered(ag, Q, X, d)
    if not ok:
        raise InvariantViolation(f"vertices {pair} of Q are within distance {d} in G - X")
    if not all(res.ratios):
        raise InvariantViolation(f"size certificates failed: |S|={len(S)}, |Q|={len(Q)}, |X|={len(X)}")
    return res
