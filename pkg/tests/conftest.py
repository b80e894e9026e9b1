import pytest

from tfpmis import generators
from tfpmis.graph import AbstractGraph

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)


def cube_with_inner_vertex():
    """Cube with an extra vertex 8 drawn inside face 4-5-6-7, joined to 4 and 6."""
    g = generators.cube()
    pos = [(-2, -2), (2, -2), (2, 2), (-2, 2), (-1, -1), (1, -1), (1, 1), (-1, 1), (0, 0)]
    edges = [tuple(e) for e in g.edges()] + [(8, 4), (8, 6)]
    return generators.from_drawing(9, edges, pos)


def nested_squares(depth=4):
    """``depth`` concentric squares joined corner to corner, with a centre vertex
    adjacent to two opposite corners of the innermost square."""
    pos, edges = [], []
    for k in range(depth):
        s = depth - k
        pos += [(-s, -s), (s, -s), (s, s), (-s, s)]
        base = 4 * k
        edges += [(base + i, base + (i + 1) % 4) for i in range(4)]
        if k:
            edges += [(base - 4 + i, base + i) for i in range(4)]
    c = 4 * depth
    pos.append((0, 0))
    edges += [(c, c - 4), (c, c - 2)]
    return generators.from_drawing(c + 1, edges, pos)


def hub_graph():
    """C6 on 0..5 plus vertex 6 adjacent to 0, 2 and 4."""
    return AbstractGraph.from_edges(7, [(i, (i + 1) % 6) for i in range(6)] + [(6, 0), (6, 2), (6, 4)])


@pytest.fixture
def cube_w():
    return cube_with_inner_vertex()


@pytest.fixture
def nested():
    return nested_squares()
