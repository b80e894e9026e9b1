"""Plane graphs stored as rotation systems.

A vertex's rotation lists its neighbours in clockwise order. Faces are traced
with the rule: after the directed edge ``(u, v)`` comes ``(v, w)`` where ``w``
follows ``u`` in the rotation of ``v``. No face is marked as the outer one.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, NamedTuple, Sequence

from .errors import NotTriangleFree, TfpmisError
from .graph import AbstractGraph, bfs_distances, components


class EmbeddingError(TfpmisError, ValueError):
    pass


class AsymmetricAdjacency(EmbeddingError):
    pass


class LoopOrParallelEdge(EmbeddingError):
    pass


class EulerViolation(EmbeddingError):
    """Rotation system does not describe a plane embedding."""


class PgFormatError(TfpmisError, ValueError):
    pass


class FaceWalk(NamedTuple):
    vertices: tuple

    @property
    def length(self) -> int:
        return len(self.vertices)

    def directed_edges(self) -> list:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def is_cycle(self) -> bool:
        return len(set(self.vertices)) == len(self.vertices) >= 3


class DegreeProfile(NamedTuple):
    histogram: dict
    low_degree_count: int  # vertices of degree <= 4


@dataclass(frozen=True)
class PlaneGraph:
    n: int
    rotations: tuple

    def __post_init__(self):
        rot = tuple(tuple(int(w) for w in r) for r in self.rotations)
        object.__setattr__(self, "rotations", rot)
        if len(rot) != self.n:
            raise EmbeddingError(f"expected {self.n} rotations, got {len(rot)}")
        for v, r in enumerate(rot):
            if len(set(r)) != len(r):
                raise LoopOrParallelEdge(f"vertex {v} lists a neighbour twice")
            for w in r:
                if w == v:
                    raise LoopOrParallelEdge(f"loop at vertex {v}")
                if not 0 <= w < self.n:
                    raise EmbeddingError(f"neighbour {w} of {v} out of range")
        for v, r in enumerate(rot):
            for w in r:
                if v not in self._pos[w]:
                    raise AsymmetricAdjacency(f"{v} lists {w} but not vice versa")
        self._check_euler()

    @cached_property
    def _pos(self) -> tuple:
        return tuple({w: i for i, w in enumerate(r)} for r in self.rotations)

    @cached_property
    def adj(self) -> tuple:
        return tuple(frozenset(r) for r in self.rotations)

    @property
    def edge_count(self) -> int:
        return sum(len(r) for r in self.rotations) // 2

    m = edge_count

    def degree(self, v: int) -> int:
        return len(self.rotations[v])

    def neighbors(self, v: int) -> tuple:
        return self.rotations[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._pos[u]

    def successor(self, v: int, u: int) -> int:
        """Neighbour of ``v`` that follows ``u`` in the rotation of ``v``."""
        r = self.rotations[v]
        return r[(self._pos[v][u] + 1) % len(r)]

    def edges(self) -> list:
        return [(u, w) for u in range(self.n) for w in self.rotations[u] if u < w]

    @cached_property
    def _faces(self) -> tuple:
        seen = {}
        walks = []
        for u in range(self.n):
            for w in self.rotations[u]:
                if (u, w) in seen:
                    continue
                idx = len(walks)
                walk = []
                a, b = u, w
                while (a, b) not in seen:
                    seen[(a, b)] = idx
                    walk.append(a)
                    a, b = b, self.successor(b, a)
                walks.append(FaceWalk(tuple(walk)))
        return tuple(walks), seen

    def faces(self) -> list:
        return list(self._faces[0])

    def face_index(self, u: int, v: int) -> int:
        """Index into ``faces()`` of the face walk using directed edge ``u -> v``."""
        return self._faces[1][(u, v)]

    def _check_euler(self):
        walks, face_of = self._faces
        for comp in components(self.n, self.adj):
            if len(comp) == 1:
                continue
            m_c = sum(len(self.rotations[v]) for v in comp) // 2
            f_c = len({face_of[(v, w)] for v in comp for w in self.rotations[v]})
            if len(comp) - m_c + f_c != 2:
                raise EulerViolation(
                    f"component at {comp[0]}: n-m+f = {len(comp) - m_c + f_c}, expected 2"
                )

    def to_abstract(self) -> AbstractGraph:
        return AbstractGraph.from_edges(self.n, self.edges())

    def distances(self, source: int, limit: int | None = None) -> dict:
        return bfs_distances(self.adj, source, limit)


def build_plane_graph(n: int, rotations: Sequence[Sequence[int]]) -> PlaneGraph:
    """Validate a rotation system and wrap it.

    Raises AsymmetricAdjacency, LoopOrParallelEdge or EulerViolation.
    """
    return PlaneGraph(n, tuple(tuple(r) for r in rotations))


def faces(g: PlaneGraph) -> list:
    return g.faces()


def check_triangle_free(g: PlaneGraph) -> bool:
    adj = g.adj
    return all(not (adj[u] & adj[w]) for u, w in g.edges())


def require_triangle_free(g: PlaneGraph) -> None:
    if not check_triangle_free(g):
        raise NotTriangleFree("graph contains a triangle")


def degree_profile(g: PlaneGraph) -> DegreeProfile:
    degs = [g.degree(v) for v in range(g.n)]
    return DegreeProfile(dict(sorted(Counter(degs).items())), sum(d <= 4 for d in degs))


def subgraph(g: PlaneGraph, vertices: Iterable[int], edges: Iterable | None = None):
    """Restrict ``g`` to ``vertices`` (and optionally a subset of edges).

    Returns ``(h, labels)`` where ``labels[i]`` is the id in ``g`` of vertex
    ``i`` of ``h``. Restricting a rotation system keeps it planar.
    """
    labels = tuple(sorted(set(vertices)))
    local = {v: i for i, v in enumerate(labels)}
    keep = None
    if edges is not None:
        keep = {(min(a, b), max(a, b)) for a, b in edges}
    rot = []
    for v in labels:
        r = []
        for w in g.rotations[v]:
            if w in local and (keep is None or (min(v, w), max(v, w)) in keep):
                r.append(local[w])
        rot.append(tuple(r))
    return PlaneGraph(len(labels), tuple(rot)), labels


# ---------------------------------------------------------------------------
# .pg text format
# ---------------------------------------------------------------------------

def format_pg(g: PlaneGraph) -> str:
    lines = [f"pg {g.n}"]
    for v, r in enumerate(g.rotations):
        lines.append(f"{v}:" + "".join(f" {w}" for w in r))
    return "\n".join(lines) + "\n"


def parse_pg(text: str) -> PlaneGraph:
    n = None
    rot = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "pg":
                raise PgFormatError(f"line {lineno}: expected 'pg <n>'")
            try:
                n = int(parts[1])
            except ValueError:
                raise PgFormatError(f"line {lineno}: bad vertex count") from None
            if n < 0:
                raise PgFormatError(f"line {lineno}: negative vertex count")
            continue
        head, sep, tail = line.partition(":")
        if not sep:
            raise PgFormatError(f"line {lineno}: expected '<v>: <neighbours>'")
        try:
            v = int(head)
            nbrs = tuple(int(x) for x in tail.split())
        except ValueError:
            raise PgFormatError(f"line {lineno}: non-integer token") from None
        if not 0 <= v < n:
            raise PgFormatError(f"line {lineno}: vertex {v} out of range")
        if v in rot:
            raise PgFormatError(f"line {lineno}: vertex {v} listed twice")
        rot[v] = nbrs
    if n is None:
        raise PgFormatError("missing 'pg <n>' header")
    missing = [v for v in range(n) if v not in rot]
    if missing:
        raise PgFormatError(f"no rotation given for vertex {missing[0]}")
    return build_plane_graph(n, [rot[v] for v in range(n)])


def read_pg(path) -> PlaneGraph:
    return parse_pg(Path(path).read_text())


def write_pg(g: PlaneGraph, path) -> None:
    Path(path).write_text(format_pg(g))
