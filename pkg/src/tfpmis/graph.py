"""Plain undirected graphs without an embedding."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class AbstractGraph:
    """Simple graph on vertices ``0..n-1`` with a canonical edge set."""

    n: int
    edges: frozenset
    adj: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        nbrs = [set() for _ in range(self.n)]
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        object.__setattr__(self, "adj", tuple(frozenset(s) for s in nbrs))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable) -> "AbstractGraph":
        return cls(n, frozenset(_norm(int(u), int(v)) for u, v in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def bitmasks(self) -> np.ndarray:
        """Neighbourhoods as int64 bitmasks; only valid for n <= 62."""
        if self.n > 62:
            raise ValueError("bitmask form needs n <= 62")
        out = np.zeros(self.n, dtype=np.int64)
        for v in range(self.n):
            mask = 0
            for u in self.adj[v]:
                mask |= 1 << u
            out[v] = mask
        return out

    def remove_vertices(self, drop: Iterable) -> "AbstractGraph":
        """Same vertex ids, with every edge touching ``drop`` deleted."""
        drop = set(drop)
        return AbstractGraph(
            self.n,
            frozenset(e for e in self.edges if e[0] not in drop and e[1] not in drop),
        )

    def is_triangle_free(self) -> bool:
        return all(not (self.adj[u] & self.adj[v]) for u, v in self.edges)


def bfs_distances(adj, source: int, limit: int | None = None, blocked=frozenset()) -> dict:
    """Hop distances from ``source`` avoiding ``blocked``; stops past ``limit``."""
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        if limit is not None and dist[u] >= limit:
            continue
        for w in adj[u]:
            if w not in dist and w not in blocked:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def components(n: int, adj) -> list:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    seen = [False] * n
    out = []
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        out.append(sorted(comp))
    return out


def is_independent(adj, vertices) -> tuple[bool, tuple | None]:
    vs = sorted(set(vertices))
    inside = set(vs)
    for u in vs:
        for w in sorted(adj[u]):
            if w in inside and u < w:
                return False, (u, w)
    return True, None
