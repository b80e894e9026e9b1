"""Tree decompositions: checking, heuristics, face augmentation, clique-sums and MIS by DP."""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from . import kernels
from .errors import BudgetExceeded, TfpmisError
from .graph import AbstractGraph
from .plane_graph import PlaneGraph, require_triangle_free

DEFAULT_W_MAX = 24


class WidthBudgetExceeded(BudgetExceeded):
    pass


class JoinNotClique(TfpmisError, ValueError):
    pass


class JoinNotInBag(TfpmisError, ValueError):
    pass


class TdFormatError(TfpmisError, ValueError):
    pass


@dataclass(frozen=True)
class TreeDecomposition:
    bags: tuple
    tree_edges: tuple

    def __post_init__(self):
        object.__setattr__(self, "bags", tuple(frozenset(b) for b in self.bags))
        object.__setattr__(self, "tree_edges", tuple((int(a), int(b)) for a, b in self.tree_edges))

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1


# violation reports ---------------------------------------------------------

@dataclass(frozen=True)
class NotATree:
    reason: str


@dataclass(frozen=True)
class MissingVertex:
    vertex: int


@dataclass(frozen=True)
class UncoveredEdge:
    edge: tuple


@dataclass(frozen=True)
class DisconnectedOccurrence:
    vertex: int


def _tree_problem(nb: int, tree_edges) -> str | None:
    if nb == 0:
        return None if not tree_edges else "edges without bags"
    if len(tree_edges) != nb - 1:
        return f"{len(tree_edges)} edges for {nb} bags"
    parent = list(range(nb))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in tree_edges:
        if not (0 <= a < nb and 0 <= b < nb):
            return f"edge ({a}, {b}) references a missing bag"
        ra, rb = find(a), find(b)
        if ra == rb:
            return f"edge ({a}, {b}) closes a cycle"
        parent[ra] = rb
    return None


def validate_td(g: AbstractGraph, td: TreeDecomposition):
    """Return None for a valid decomposition, else the first violation found.

    Checks in order: tree shape, vertex coverage, edge coverage, and
    connectivity of each vertex's occurrences.
    """
    nb = len(td.bags)
    problem = _tree_problem(nb, td.tree_edges)
    if problem:
        return NotATree(problem)
    where = [[] for _ in range(g.n)]
    for i, bag in enumerate(td.bags):
        for v in bag:
            if not 0 <= v < g.n:
                return NotATree(f"bag {i} holds vertex {v} outside the graph")
            where[v].append(i)
    for v in range(g.n):
        if not where[v]:
            return MissingVertex(v)
    for u, v in g.sorted_edges():
        if not any(v in td.bags[i] for i in where[u]):
            return UncoveredEdge((u, v))
    tadj = [[] for _ in range(nb)]
    for a, b in td.tree_edges:
        tadj[a].append(b)
        tadj[b].append(a)
    for v in range(g.n):
        occ = set(where[v])
        start = where[v][0]
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in tadj[x]:
                if y in occ and y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != len(occ):
            return DisconnectedOccurrence(v)
    return None


def is_valid_td(g: AbstractGraph, td: TreeDecomposition) -> bool:
    return validate_td(g, td) is None


# heuristics ----------------------------------------------------------------

def _fill_in(nbrs, v) -> int:
    ns = list(nbrs[v])
    missing = 0
    for i, a in enumerate(ns):
        na = nbrs[a]
        for b in ns[i + 1:]:
            if b not in na:
                missing += 1
    return missing


def elimination_order(g: AbstractGraph, strategy: str = "min_fill") -> list:
    if strategy not in ("min_degree", "min_fill"):
        raise ValueError(f"unknown strategy {strategy!r}")
    nbrs = [set(a) for a in g.adj]
    alive = set(range(g.n))
    order = []
    fill = {v: _fill_in(nbrs, v) for v in alive} if strategy == "min_fill" else None
    while alive:
        if fill is None:
            v = min(alive, key=lambda x: (len(nbrs[x]), x))
        else:
            v = min(alive, key=lambda x: (fill[x], len(nbrs[x]), x))
        order.append(v)
        ns = nbrs[v]
        touched = set(ns)
        for a in ns:
            nbrs[a].discard(v)
            nbrs[a] |= ns - {a}
        alive.discard(v)
        if fill is not None:
            del fill[v]
            for a in ns:
                touched |= nbrs[a]
            for x in touched & alive:
                fill[x] = _fill_in(nbrs, x)
        nbrs[v] = set()
    return order


def td_from_order(g: AbstractGraph, order: Sequence[int]) -> TreeDecomposition:
    """Decomposition induced by eliminating vertices in ``order``."""
    pos = {v: i for i, v in enumerate(order)}
    nbrs = [set(a) for a in g.adj]
    bags = []
    later = []
    for v in order:
        ns = nbrs[v]
        bags.append(frozenset(ns | {v}))
        later.append(min(ns, key=pos.__getitem__) if ns else None)
        for a in ns:
            nbrs[a].discard(v)
            nbrs[a] |= ns - {a}
    edges = []
    for i, v in enumerate(order):
        if later[i] is not None:
            edges.append((i, pos[later[i]]))
        elif i + 1 < len(order):
            edges.append((i, i + 1))
    return TreeDecomposition(tuple(bags), tuple(edges))


def heuristic_td(g: AbstractGraph, strategy: str = "min_fill") -> TreeDecomposition:
    """Greedy elimination decomposition; ties go to the smallest vertex id."""
    return td_from_order(g, elimination_order(g, strategy))


# face augmentation -----------------------------------------------------------

def four_faces(g0: PlaneGraph) -> list:
    """Faces bounded by a 4-cycle, each listed once per face walk."""
    return [f.vertices for f in g0.faces() if f.length == 4 and f.is_cycle()]


def addcross(g0: PlaneGraph) -> AbstractGraph:
    """Underlying graph plus both diagonals of every 4-face."""
    require_triangle_free(g0)
    edges = set(g0.edges())
    for u, v, w, x in four_faces(g0):
        edges.add((min(u, w), max(u, w)))
        edges.add((min(v, x), max(v, x)))
    return AbstractGraph(g0.n, frozenset(edges))


def addcross_td(g0: PlaneGraph, strategy: str = "min_fill") -> TreeDecomposition:
    """Decompose via one apex vertex per 4-face, then swap each apex for its face."""
    require_triangle_free(g0)
    faces4 = four_faces(g0)
    edges = list(g0.edges())
    for k, f in enumerate(faces4):
        edges.extend((g0.n + k, v) for v in f)
    g1 = AbstractGraph.from_edges(g0.n + len(faces4), edges)
    td1 = heuristic_td(g1, strategy)
    bags = []
    for bag in td1.bags:
        out = set()
        for v in bag:
            if v < g0.n:
                out.add(v)
            else:
                out.update(faces4[v - g0.n])
        bags.append(frozenset(out))
    return TreeDecomposition(tuple(bags), td1.tree_edges)


# clique-sums -----------------------------------------------------------------

def cliquesum_graph(parts, n: int | None = None) -> AbstractGraph:
    """Union of the relabelled part graphs."""
    edges = set()
    top = -1
    for graph, _td, labels in parts:
        top = max([top, *labels])
        for u, v in graph.edges:
            a, b = labels[u], labels[v]
            edges.add((min(a, b), max(a, b)))
    return AbstractGraph(top + 1 if n is None else n, frozenset(edges))


def cliquesum_td(parts, joins, n: int | None = None) -> TreeDecomposition:
    """Glue part decompositions along shared cliques.

    ``parts`` holds ``(graph, td, labels)`` triples in local ids with
    ``labels[i]`` the global id of local vertex ``i``. ``joins`` holds
    ``(i, j, clique)`` with ``clique`` in global ids. Parts not connected by
    joins are glued along the empty clique.
    """
    offsets = []
    bags = []
    edges = []
    for graph, td, labels in parts:
        offsets.append(len(bags))
        bags.extend(frozenset(labels[v] for v in bag) for bag in td.bags)
        off = offsets[-1]
        edges.extend((a + off, b + off) for a, b in td.tree_edges)

    uf = list(range(len(parts)))

    def find(x):
        while uf[x] != x:
            uf[x] = uf[uf[x]]
            x = uf[x]
        return x

    for i, j, clique in joins:
        clique = frozenset(clique)
        picked = []
        for p in (i, j):
            graph, td, labels = parts[p]
            local = {g: l for l, g in enumerate(labels)}
            if not clique <= local.keys():
                raise JoinNotClique(f"part {p} lacks vertices of {sorted(clique)}")
            cl = [local[v] for v in clique]
            for a in range(len(cl)):
                for b in range(a + 1, len(cl)):
                    if not graph.has_edge(cl[a], cl[b]):
                        raise JoinNotClique(f"{sorted(clique)} is not a clique in part {p}")
            hit = next((k for k in range(len(td.bags)) if clique <= bags[offsets[p] + k]), None)
            if hit is None:
                raise JoinNotInBag(f"no bag of part {p} holds {sorted(clique)}")
            picked.append(offsets[p] + hit)
        ri, rj = find(i), find(j)
        if ri == rj:
            raise ValueError(f"join ({i}, {j}) closes a cycle among parts")
        uf[ri] = rj
        edges.append(tuple(picked))
    roots = []
    for p in range(len(parts)):
        if find(p) == p and parts[p][1].bags:
            roots.append(offsets[p])
    for a, b in zip(roots, roots[1:]):
        edges.append((a, b))
    return TreeDecomposition(tuple(bags), tuple(edges))


# maximum independent set ------------------------------------------------------

def _chain(cur: list, target: frozenset, g: AbstractGraph, table):
    """Turn a table over sorted ``cur`` into one over sorted ``target``.

    Returns ``(table, ops)`` with ops ``('f', pos, table_before)`` or ``('i', pos)``.
    """
    ops = []
    cur = list(cur)
    for u in [x for x in cur if x not in target][::-1]:
        p = cur.index(u)
        ops.append(("f", p, table))
        table = kernels.forget(table, np.int64(p))
        cur.pop(p)
    for v in sorted(target - set(cur)):
        p = bisect.bisect_left(cur, v)
        cur.insert(p, v)
        nbr = 0
        for k, w in enumerate(cur):
            if w in g.adj[v]:
                nbr |= 1 << k
        ops.append(("i", p))
        table = kernels.introduce(table, np.int64(p), np.int64(nbr))
    return table, ops


def _undo_chain(ops, mask: int) -> int:
    for op in reversed(ops):
        p = op[1]
        low = mask & ((1 << p) - 1)
        high = mask >> p
        if op[0] == "i":
            mask = low | ((high >> 1) << p)
        else:
            before = op[2]
            m0 = low | (high << (p + 1))
            m1 = m0 | (1 << p)
            mask = m1 if before[m1] > before[m0] else m0
    return mask


def mis_dp(g: AbstractGraph, td: TreeDecomposition, w_max: int = DEFAULT_W_MAX):
    """Maximum independent set by dynamic programming over ``td``.

    Returns ``(size, witness)``. Raises WidthBudgetExceeded when the
    decomposition is wider than ``w_max`` and ValueError when it is invalid.
    """
    if td.width > w_max:
        raise WidthBudgetExceeded(f"width {td.width} exceeds budget {w_max}")
    bad = validate_td(g, td)
    if bad is not None:
        raise ValueError(f"invalid tree decomposition: {bad}")
    if g.n == 0:
        return 0, frozenset()
    nb = len(td.bags)
    tadj = [[] for _ in range(nb)]
    for a, b in td.tree_edges:
        tadj[a].append(b)
        tadj[b].append(a)
    parent = [-1] * nb
    order = [0]
    parent[0] = 0
    for x in order:
        for y in tadj[x]:
            if parent[y] == -1:
                parent[y] = x
                order.append(y)
    children = [[] for _ in range(nb)]
    for x in order[1:]:
        children[parent[x]].append(x)

    sorted_bag = [sorted(b) for b in td.bags]
    tables = [None] * nb
    chains = [None] * nb  # chain from a child's table into its parent's bag
    empty = np.zeros(1, dtype=np.int32)
    for x in reversed(order):
        bag = td.bags[x]
        acc = None
        if not children[x]:
            acc, _ = _chain([], bag, g, empty)
        for c in children[x]:
            t, chains[c] = _chain(sorted_bag[c], bag, g, tables[c])
            acc = t if acc is None else kernels.join(acc, t)
            tables[c] = None  # forget ops keep what reconstruction needs
        tables[x] = acc
    root_table, root_ops = _chain(sorted_bag[0], frozenset(), g, tables[0])
    size = int(root_table[0])

    chosen = set()
    masks = [0] * nb
    masks[0] = _undo_chain(root_ops, 0)
    for x in order:
        m = masks[x]
        chosen.update(v for k, v in enumerate(sorted_bag[x]) if (m >> k) & 1)
        for c in children[x]:
            masks[c] = _undo_chain(chains[c], m)
    return size, frozenset(chosen)


# PACE formats ----------------------------------------------------------------

def _ints(parts, lineno):
    try:
        return [int(x) for x in parts]
    except ValueError:
        raise TdFormatError(f"line {lineno}: non-integer token") from None


def parse_gr(text: str) -> AbstractGraph:
    n = m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 4 or parts[:2] != ["p", "tw"]:
                raise TdFormatError(f"line {lineno}: expected 'p tw <n> <m>'")
            n, m = _ints(parts[2:], lineno)
            continue
        if len(parts) != 2:
            raise TdFormatError(f"line {lineno}: expected '<u> <v>'")
        u, v = (x - 1 for x in _ints(parts, lineno))
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise TdFormatError(f"line {lineno}: bad edge {parts[0]} {parts[1]}")
        edges.append((u, v))
    if n is None:
        raise TdFormatError("missing 'p tw' header")
    if len(edges) != m:
        raise TdFormatError(f"header announces {m} edges, found {len(edges)}")
    return AbstractGraph.from_edges(n, edges)


def format_gr(g: AbstractGraph) -> str:
    lines = [f"p tw {g.n} {g.m}"]
    lines += [f"{u + 1} {v + 1}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def format_td(td: TreeDecomposition, n: int) -> str:
    lines = [f"s td {len(td.bags)} {td.width + 1} {n}"]
    for i, bag in enumerate(td.bags, 1):
        lines.append(" ".join(["b", str(i), *(str(v + 1) for v in sorted(bag))]))
    lines += [f"{a + 1} {b + 1}" for a, b in td.tree_edges]
    return "\n".join(lines) + "\n"


def parse_td(text: str) -> tuple[TreeDecomposition, int]:
    """Returns the decomposition and the vertex count from the header."""
    header = None
    bags = {}
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 5 or parts[:2] != ["s", "td"]:
                raise TdFormatError(f"line {lineno}: expected 's td <bags> <width+1> <n>'")
            header = tuple(_ints(parts[2:], lineno))
            continue
        if parts[0] == "b":
            nums = _ints(parts[1:], lineno)
            bags[nums[0] - 1] = frozenset(x - 1 for x in nums[1:])
        elif len(parts) == 2:
            a, b = _ints(parts, lineno)
            edges.append((a - 1, b - 1))
        else:
            raise TdFormatError(f"line {lineno}: unrecognised line")
    if header is None:
        raise TdFormatError("missing 's td' header")
    nb, _, n = header
    if sorted(bags) != list(range(nb)):
        raise TdFormatError("bag numbering does not match header")
    return TreeDecomposition(tuple(bags[i] for i in range(nb)), tuple(edges)), n


def read_gr(path) -> AbstractGraph:
    return parse_gr(Path(path).read_text())


def write_td(td: TreeDecomposition, n: int, path) -> None:
    Path(path).write_text(format_td(td, n))
