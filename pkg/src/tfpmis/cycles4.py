"""Separating 4-cycles and the decomposition into 4-swept pieces.

Sides of a cycle are found combinatorially: at each cycle vertex the rotation
splits the remaining neighbours into the two sides, and a search in ``G - C``
from those seeds collects each side. A component of ``G`` that does not touch
the cycle counts for neither side. The side with fewer vertices is called the
interior (ties go to the side swept clockwise from the predecessor in the
canonical cycle order).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from itertools import combinations

from .errors import TfpmisError
from .plane_graph import PlaneGraph, subgraph


class NotPlanarOrder(TfpmisError, ValueError):
    """No vertex with at most 5 remaining neighbours: the input cannot be planar."""


@dataclass(frozen=True)
class CycleWitness:
    vertices: tuple
    separating: bool
    interior_vertex_count: int
    exterior_vertex_count: int = 0
    facial: bool = False
    interior: frozenset = field(default=frozenset(), repr=False)
    interior_chords: frozenset = field(default=frozenset(), repr=False)


def canonical_cycle(cyc) -> tuple:
    k = len(cyc)
    i = min(range(k), key=lambda j: cyc[j])
    fwd = tuple(cyc[(i + j) % k] for j in range(k))
    bwd = tuple(cyc[(i - j) % k] for j in range(k))
    return min(fwd, bwd)


def _sides(g: PlaneGraph, cyc):
    on_cycle = set(cyc)
    k = len(cyc)
    seeds = ([], [])
    chords = (set(), set())
    for i, v in enumerate(cyc):
        prev, nxt = cyc[i - 1], cyc[(i + 1) % k]
        rot = g.rotations[v]
        start = rot.index(prev)
        side = 0
        for step in range(1, len(rot)):
            w = rot[(start + step) % len(rot)]
            if w == nxt:
                side = 1
                continue
            if w in on_cycle:
                chords[side].add((min(v, w), max(v, w)))
            else:
                seeds[side].append(w)
    out = []
    for s in seeds:
        seen = set(s)
        stack = list(s)
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w not in seen and w not in on_cycle:
                    seen.add(w)
                    stack.append(w)
        out.append(frozenset(seen))
    if out[0] & out[1]:
        raise ValueError(f"cycle {cyc} has a vertex on both sides; rotation system is inconsistent")
    return out[0], out[1], frozenset(chords[0]), frozenset(chords[1])


def _is_facial(g: PlaneGraph, cyc) -> bool:
    k = len(cyc)
    for seq in (cyc, cyc[::-1]):
        fid = g.face_index(seq[0], seq[1])
        if g.faces()[fid].length == k and all(
            g.face_index(seq[i], seq[(i + 1) % k]) == fid for i in range(k)
        ):
            return True
    return False


def classify_cycle(g: PlaneGraph, cyc) -> CycleWitness:
    cyc = canonical_cycle(tuple(cyc))
    a, b, ca, cb = _sides(g, cyc)
    if len(b) < len(a):
        a, b, ca, cb = b, a, cb, ca
    facial = (not a and not ca) or (not b and not cb)
    return CycleWitness(cyc, bool(a) and bool(b), len(a), len(b), facial, a, ca)


def _is_separating(g: PlaneGraph, cyc) -> bool:
    if _is_facial(g, cyc):
        return False
    a, b, _, _ = _sides(g, cyc)
    return bool(a) and bool(b)


def enumerate_4cycles(g: PlaneGraph) -> list:
    """Every 4-cycle of ``g`` once, classified, in canonical-tuple order."""
    found = set()
    adj = g.adj
    for a in range(g.n):
        for b, d in combinations(sorted(adj[a]), 2):
            for c in adj[b] & adj[d]:
                if c != a:
                    found.add(canonical_cycle((a, b, c, d)))
    return [classify_cycle(g, cyc) for cyc in sorted(found)]


def degeneracy_order(g: PlaneGraph, max_back: int = 5) -> list:
    """Order in which every vertex has at most ``max_back`` earlier neighbours."""
    deg = [g.degree(v) for v in range(g.n)]
    heap = [(d, v) for v, d in enumerate(deg)]
    heapq.heapify(heap)
    removed = [False] * g.n
    peel = []
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:
            continue
        if d > max_back:
            raise NotPlanarOrder(f"every remaining vertex has degree > {max_back}")
        removed[v] = True
        peel.append(v)
        for w in g.adj[v]:
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    return peel[::-1]


def find_separating_4cycle_fast(g: PlaneGraph) -> CycleWitness | None:
    """Some separating 4-cycle, or None, by the two-phase ordering search.

    Phase 1 tests cycles v1 v2 v3 v4 with i2 < max(i1, i3) < i4. Any
    separating cycle missed there has its two largest-index vertices opposite;
    phase 2 groups triples (a, b, c) by the pair (a, b) of common earlier
    neighbours and tests at most four candidates per group.
    """
    order = degeneracy_order(g)
    idx = [0] * g.n
    for i, v in enumerate(order):
        idx[v] = i
    back = [sorted((w for w in g.adj[v] if idx[w] < idx[v]), key=idx.__getitem__) for v in range(g.n)]

    for v4 in order:
        for v1, v3 in combinations(back[v4], 2):
            hi, lo = (v3, v1) if idx[v3] > idx[v1] else (v1, v3)
            for v2 in back[hi]:
                if v2 != lo and v2 in g.adj[lo]:
                    cyc = (v1, v2, v3, v4)
                    if _is_separating(g, cyc):
                        return classify_cycle(g, cyc)

    triples = []
    for c in range(g.n):
        ib = sorted(idx[w] for w in back[c])
        for a, b in combinations(ib, 2):
            triples.append((a, b, idx[c]))
    triples.sort()
    i = 0
    while i < len(triples):
        j = i
        while j < len(triples) and triples[j][:2] == triples[i][:2]:
            j += 1
        a, b = order[triples[i][0]], order[triples[i][1]]
        cs = [order[t[2]] for t in triples[i:min(j, i + 4)]]
        for c1, c2 in combinations(cs, 2):
            cyc = (a, c1, b, c2)
            if _is_separating(g, cyc):
                return classify_cycle(g, cyc)
        i = j
    return None


def innermost_separating_4cycle(g: PlaneGraph) -> CycleWitness | None:
    """Separating 4-cycle with the fewest interior vertices (then smallest tuple).

    Such a cycle has no separating 4-cycle inside it: one would have a
    smaller side strictly contained in this cycle's interior.
    """
    seps = [w for w in enumerate_4cycles(g) if w.separating]
    if not seps:
        return None
    return min(seps, key=lambda w: (w.interior_vertex_count, w.vertices))


def closed_interior(g: PlaneGraph, w: CycleWitness):
    """The subgraph drawn in the closed interior of ``w`` as ``(h, labels)``."""
    keep = set(w.interior) | set(w.vertices)
    cyc = w.vertices
    edges = {(min(cyc[i], cyc[(i + 1) % 4]), max(cyc[i], cyc[(i + 1) % 4])) for i in range(4)}
    edges |= set(w.interior_chords)
    for u in w.interior:
        for x in g.adj[u]:
            edges.add((min(u, x), max(u, x)))
    return subgraph(g, keep, edges)


def descend_to_innermost(g: PlaneGraph) -> CycleWitness | None:
    """Find any separating 4-cycle, then repeatedly look inside its closed interior."""
    w = find_separating_4cycle_fast(g)
    while w is not None:
        h, labels = closed_interior(g, w)
        inner = find_separating_4cycle_fast(h)
        if inner is None:
            return w
        cyc = tuple(labels[v] for v in inner.vertices)
        a, b, ca, cb = _sides(g, canonical_cycle(cyc))
        side, chords = (a, ca) if a <= w.interior else (b, cb)
        other = b if side is a else a
        w = CycleWitness(canonical_cycle(cyc), True, len(side), len(other), False, side, chords)
    return None


@dataclass(frozen=True)
class SweptPart:
    labels: tuple  # sorted ids in the host graph
    edges: frozenset  # host-graph edges (u < v)
    graph: PlaneGraph  # the part relabelled to 0..k-1 along ``labels``

    @property
    def size(self) -> int:
        return len(self.labels)


@dataclass(frozen=True)
class SweptDecomposition:
    parts: tuple
    cycles: tuple  # cycles[i] split off parts[i]
    joins: tuple  # (i, j, cycle): part i hangs on later part j along cycle
    shared_faces: dict
    s_hat: int

    def largest_part(self) -> SweptPart:
        return max(self.parts, key=lambda p: p.size)


def swept_decompose(g: PlaneGraph) -> SweptDecomposition:
    """Repeatedly cut off the closed interior of an innermost separating 4-cycle."""
    cur_v = set(range(g.n))
    cur_e = set(g.edges())
    parts, cycles = [], []
    while True:
        h, labels = subgraph(g, cur_v, cur_e)
        w = innermost_separating_4cycle(h)
        if w is None:
            parts.append(SweptPart(labels, frozenset(cur_e), h))
            break
        cyc = tuple(labels[v] for v in w.vertices)
        inside = {labels[v] for v in w.interior}
        chords = {(labels[a], labels[b]) for a, b in w.interior_chords}
        chords = {(min(e), max(e)) for e in chords}
        cyc_edges = {(min(cyc[i], cyc[(i + 1) % 4]), max(cyc[i], cyc[(i + 1) % 4])) for i in range(4)}
        part_e = {e for e in cur_e if e[0] in inside or e[1] in inside} | chords | cyc_edges
        part_v = inside | set(cyc)
        ph, plabels = subgraph(g, part_v, part_e)
        parts.append(SweptPart(plabels, frozenset(part_e), ph))
        cycles.append(cyc)
        cur_v -= inside
        cur_e -= {e for e in part_e if e not in cyc_edges}
    joins = []
    for i, cyc in enumerate(cycles):
        cyc_edges = {(min(cyc[t], cyc[(t + 1) % 4]), max(cyc[t], cyc[(t + 1) % 4])) for t in range(4)}
        j = next(j for j in range(i + 1, len(parts)) if cyc_edges <= parts[j].edges)
        joins.append((i, j, cyc))
    shared = {}
    for i, j in combinations(range(len(parts)), 2):
        common = set(parts[i].labels) & set(parts[j].labels)
        if common:
            shared[(i, j)] = tuple(sorted(common))
    return SweptDecomposition(
        tuple(parts), tuple(cycles), tuple(joins), shared, max((p.size for p in parts), default=0)
    )
