"""Graph families used as the test corpus, all emitted with an embedding."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

import networkx as nx

from .errors import TfpmisError
from .plane_graph import PlaneGraph, build_plane_graph, check_triangle_free

FAMILIES = ("jones", "hex", "stars", "k23", "cube", "cycle", "random_tfp")


class BadParams(TfpmisError, ValueError):
    pass


@dataclass(frozen=True)
class GenSpec:
    family: str
    params: dict = field(default_factory=dict)
    seed: int | None = None


def _rotations_from_coords(n, edges, pos):
    nbrs = [[] for _ in range(n)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    rot = []
    for v in range(n):
        x0, y0 = pos[v]
        rot.append(sorted(nbrs[v], key=lambda w: -math.atan2(pos[w][1] - y0, pos[w][0] - x0)))
    return rot


def from_drawing(n: int, edges, pos) -> PlaneGraph:
    """Embed a graph from a crossing-free straight-line drawing (clockwise rotations)."""
    return build_plane_graph(n, _rotations_from_coords(n, edges, pos))


def _from_networkx(G) -> PlaneGraph:
    """Embed a planar networkx graph whose nodes are 0..n-1."""
    ok, emb = nx.check_planarity(G)
    if not ok:  # pragma: no cover - callers only pass planar graphs
        raise BadParams("graph is not planar")
    n = G.number_of_nodes()
    return build_plane_graph(n, [list(emb.neighbors_cw_order(v)) for v in range(n)])


def cycle(length: int) -> PlaneGraph:
    if length < 3:
        raise BadParams("cycle length must be >= 3")
    return build_plane_graph(length, [((i - 1) % length, (i + 1) % length) for i in range(length)])


def k23() -> PlaneGraph:
    # parts {0, 1} and {2, 3, 4}
    return build_plane_graph(5, [(2, 3, 4), (4, 3, 2), (0, 1), (0, 1), (0, 1)])


def cube() -> PlaneGraph:
    pos = [(-2, -2), (2, -2), (2, 2), (-2, 2), (-1, -1), (1, -1), (1, 1), (-1, 1)]
    edges = [(i, (i + 1) % 4) for i in range(4)]
    edges += [(4 + i, 4 + (i + 1) % 4) for i in range(4)]
    edges += [(i, i + 4) for i in range(4)]
    return from_drawing(8, edges, pos)


def stars(a: int) -> PlaneGraph:
    """Disjoint union of ``a`` stars with ``a`` rays each; centres come first in each block."""
    if a < 1:
        raise BadParams("stars needs a >= 1")
    rot = []
    for s in range(a):
        base = s * (a + 1)
        rot.append(tuple(base + 1 + j for j in range(a)))
        rot.extend((base,) for _ in range(a))
    return build_plane_graph(a * (a + 1), rot)


def hex_fragment(rows: int, cols: int) -> PlaneGraph:
    """A ``rows`` x ``cols`` patch of the hexagonal lattice (girth 6)."""
    if rows < 1 or cols < 1:
        raise BadParams("hex needs rows, cols >= 1")
    H = nx.hexagonal_lattice_graph(rows, cols, with_positions=True)
    nodes = sorted(H.nodes())
    ids = {v: i for i, v in enumerate(nodes)}
    pos = [H.nodes[v]["pos"] for v in nodes]
    edges = [(ids[u], ids[v]) for u, v in H.edges()]
    return from_drawing(len(nodes), edges, pos)


def jones(n: int) -> PlaneGraph:
    """Chain of pentagons with independence number exactly (n+1)/3.

    Vertices 0..4 form the first pentagon a b c d e. Block i >= 2 adds
    c_i, d_i, e_i = 3i-1, 3i, 3i+1 closing the pentagon e_{i-1} d_{i-1} c_i d_i e_i,
    plus one long edge c_i e_{i-2} (with e_0 = a).
    """
    if n < 5 or n % 3 != 2:
        raise BadParams("jones needs n >= 5 with n = 2 (mod 3)")
    blocks = (n - 2) // 3
    G = nx.Graph()
    G.add_nodes_from(range(n))
    G.add_edges_from([(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])

    def d(i):
        return 3 if i == 1 else 3 * i

    def e(i):
        return 0 if i == 0 else (4 if i == 1 else 3 * i + 1)

    for i in range(2, blocks + 1):
        c_i = 3 * i - 1
        G.add_edges_from([(d(i - 1), c_i), (c_i, d(i)), (d(i), e(i)), (e(i), e(i - 1)), (c_i, e(i - 2))])
    return _from_networkx(G)


# ---------------------------------------------------------------------------
# seeded random triangle-free plane graphs
# ---------------------------------------------------------------------------

class _Builder:
    """Mutable rotation system grown by operations that stay inside one face."""

    def __init__(self, rot):
        self.rot = [list(r) for r in rot]

    @property
    def n(self):
        return len(self.rot)

    def freeze(self) -> PlaneGraph:
        return PlaneGraph(self.n, tuple(tuple(r) for r in self.rot))

    def _insert(self, v, after, w):
        r = self.rot[v]
        r.insert(r.index(after) + 1, w)

    def attach(self, corners, chain_len):
        """Join the given face corners through a new path of ``chain_len`` vertices.

        A corner is ``(prev, v)``: vertex ``v`` entered from ``prev`` along the
        face walk. With one corner the new path is pendant.
        """
        new = list(range(self.n, self.n + chain_len))
        for i, x in enumerate(new):
            r = []
            if i > 0:
                r.append(new[i - 1])
            if i + 1 < chain_len:
                r.append(new[i + 1])
            self.rot.append(r)
        (p_prev, p), = corners[:1]
        self._insert(p, p_prev, new[0])
        self.rot[new[0]].insert(0, p)
        if len(corners) == 2:
            q_prev, q = corners[1]
            self._insert(q, q_prev, new[-1])
            self.rot[new[-1]].append(q)

    def chord(self, c1, c2):
        (p_prev, p), (q_prev, q) = c1, c2
        self._insert(p, p_prev, q)
        self._insert(q, q_prev, p)


def gen_random_tfp(n: int, seed: int) -> PlaneGraph:
    """Seeded triangle-free plane graph with exactly ``max(n, 4)`` vertices.

    Grows from a 4-cycle by operations inside a single face (new 1- or 2-vertex
    paths between corners, pendant vertices, chords), refusing any step that
    would close a triangle, then deletes a random subset of edges.
    """
    if n < 3:
        raise BadParams("random_tfp needs n >= 3")
    rng = random.Random(seed)
    b = _Builder([(1, 3), (2, 0), (3, 1), (0, 2)])
    if n == 3:
        b = _Builder([(1,), (0, 2), (1,)])
    while b.n < n:
        g = b.freeze()
        walks = [f for f in g.faces() if f.length >= 2]
        face = rng.choice(walks).vertices
        L = len(face)
        corners = [(face[i - 1], face[i]) for i in range(L)]
        op = rng.random()
        adj = g.adj
        if op < 0.12 or L < 4:
            b.attach([rng.choice(corners)], 1)
            continue
        i, j = sorted(rng.sample(range(L), 2))
        p, q = corners[i][1], corners[j][1]
        if p == q:
            continue
        if op < 0.55:
            if q not in adj[p]:
                b.attach([corners[i], corners[j]], 1)
        elif op < 0.85:
            if b.n + 2 <= n:
                b.attach([corners[i], corners[j]], 2)
        else:
            if q not in adj[p] and not (adj[p] & adj[q]):
                b.chord(corners[i], corners[j])
    g = b.freeze()
    drop = {e for e in g.edges() if rng.random() < 0.08}
    if drop:
        rot = [tuple(w for w in g.rotations[v] if (min(v, w), max(v, w)) not in drop) for v in range(g.n)]
        g = PlaneGraph(g.n, tuple(rot))
    assert check_triangle_free(g)
    return g


def gen_named(spec: GenSpec) -> PlaneGraph:
    p = dict(spec.params)
    fam = spec.family

    def need(key):
        if key not in p:
            raise BadParams(f"family {fam!r} needs parameter {key!r}")
        try:
            return int(p[key])
        except (TypeError, ValueError):
            raise BadParams(f"parameter {key!r} must be an integer") from None

    if fam == "jones":
        return jones(need("n"))
    if fam == "hex":
        return hex_fragment(need("rows"), need("cols"))
    if fam == "stars":
        return stars(need("a"))
    if fam == "k23":
        return k23()
    if fam == "cube":
        return cube()
    if fam == "cycle":
        return cycle(need("length"))
    if fam == "random_tfp":
        if spec.seed is None:
            raise BadParams("random_tfp needs an explicit seed")
        return gen_random_tfp(need("n"), spec.seed)
    raise BadParams(f"unknown family {fam!r}; choose from {', '.join(FAMILIES)}")


def corpus(count: int, max_n: int, seed: int = 0, min_n: int = 3) -> list:
    """Deterministic mix of named families and random graphs with ``min_n <= n <= max_n``.

    Returns ``(name, graph)`` pairs.
    """
    named = [("k23", k23()), ("cube", cube())]
    named += [(f"cycle{L}", cycle(L)) for L in range(4, 13)]
    named += [(f"jones{m}", jones(m)) for m in range(5, max_n + 1, 3)]
    named += [(f"stars{a}", stars(a)) for a in (1, 2, 3, 4)]
    named += [(f"hex{r}x{c}", hex_fragment(r, c)) for r in (1, 2) for c in (1, 2, 3)]
    out = [(name, g) for name, g in named if min_n <= g.n <= max_n]
    rng = random.Random(seed)
    k = 0
    while len(out) < count:
        size = rng.randint(min_n, max_n)
        out.append((f"random_tfp(n={size},seed={seed * 100003 + k})", gen_random_tfp(size, seed * 100003 + k)))
        k += 1
    return out[:count]
