"""Exhaustive 3-colouring enumeration for small graphs (n <= 12)."""

import itertools

import numpy as np


def all_proper_colourings(n, edges):
    """Every proper colouring with colours 1..3, one row per colouring."""
    grid = np.array(list(itertools.product((1, 2, 3), repeat=n)), dtype=np.int8).reshape(-1, n)
    ok = np.ones(len(grid), dtype=bool)
    for u, v in edges:
        ok &= grid[:, u] != grid[:, v]
    return grid[ok]


def extends(rows, precolouring):
    mask = np.ones(len(rows), dtype=bool)
    for v, c in precolouring.items():
        mask &= rows[:, v] == c
    return bool(mask.any())


def induced_cycles(g, max_len=6):
    """Induced cycles of length 4..max_len, each once, starting at their smallest vertex."""
    adj = g.adj
    found = set()

    def grow(path):
        for w in adj[path[-1]]:
            if w == path[0] and len(path) >= 4:
                chords = sum(1 for a, b in itertools.combinations(path, 2) if b in adj[a])
                if chords == len(path):
                    found.add(min(tuple(path), (path[0],) + tuple(reversed(path[1:]))))
            elif w > path[0] and w not in path and len(path) < max_len:
                grow(path + [w])

    for s in range(g.n):
        grow([s])
    return sorted(found, key=lambda c: (len(c), c))


def cycle_colourings(k):
    for cols in itertools.product((1, 2, 3), repeat=k):
        if all(cols[i] != cols[(i + 1) % k] for i in range(k)):
            yield cols
