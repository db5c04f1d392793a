import math

import pytest

from ifpart.plane_graph import build, cycle_graph, from_coordinates


def polygon(k, radius=5.0):
    return [(radius * math.cos(math.pi / 2 + 2 * math.pi * i / k), radius * math.sin(math.pi / 2 + 2 * math.pi * i / k)) for i in range(k)]


def cycle_with(k, chords=(), claws=(), extra_edges=()):
    """A convex k-gon with straight chords and interior vertices.

    ``claws`` lists anchor tuples; each becomes a new vertex placed near the
    anchors' centroid (or the centre when there is only one claw).
    """
    pts = polygon(k)
    edges = [(i, (i + 1) % k) for i in range(k)] + list(chords)
    for anchors in claws:
        idx = len(pts)
        if len(claws) == 1:
            pts.append((0.0, 0.0))
        else:
            x = sum(pts[a][0] for a in anchors) / len(anchors)
            y = sum(pts[a][1] for a in anchors) / len(anchors)
            pts.append((0.5 * x, 0.5 * y))
        edges.extend((a, idx) for a in anchors)
    edges.extend(extra_edges)
    return from_coordinates(pts, edges, outer=(1, 0))


@pytest.fixture
def k3():
    return build(3, [[1, 2], [2, 0], [0, 1]])


@pytest.fixture
def c9():
    return cycle_graph(9)


@pytest.fixture
def c9_claw():
    # interior vertex 9 on v0, v3, v6: three 5-faces
    return cycle_with(9, claws=[(0, 3, 6)])


# one line per acceptance criterion, echoed at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
