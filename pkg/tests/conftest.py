import sys
from pathlib import Path

import pytest

from formality import data_path, octahedron_graph, read_arrangement, read_graph

sys.path.insert(0, str(Path(__file__).parent))

# The ten defining forms of the rank-4 example, coefficients of x1..x4.
BT_FORMS = [
    (0, 0, 1, 0),
    (0, 0, 1, -1),
    (0, 1, 0, 0),
    (0, 1, 1, -2),
    (1, 0, 0, 0),
    (1, 0, 1, -2),
    (0, 1, 2, -2),
    (1, 0, 2, -2),
    (1, 1, 1, -2),
    (0, 0, 0, 1),
]

# Printed matrix of d_2 for that example: one row per length-3 relation.
BT_D2_ROWS = [
    [1, -1, 0, 0, 0, 0, 0, 0, 0, -1],
    [1, 0, 0, 1, 0, 0, -1, 0, 0, 0],
    [1, 0, 0, 0, 0, 1, 0, -1, 0, 0],
    [0, 2, 1, 0, 0, 0, -1, 0, 0, 0],
    [0, 2, 0, 0, 1, 0, 0, -1, 0, 0],
    [0, 0, 1, 0, 0, 1, 0, 0, -1, 0],
    [0, 0, 0, 1, 1, 0, 0, 0, -1, 0],
]

# Rank-3 flats with at least four hyperplanes, 1-based as printed.
BT_RANK3_LISTED = [
    {1, 2, 9, 10}, {3, 6, 9, 10}, {4, 5, 9, 10}, {1, 3, 6, 8, 9},
    {1, 4, 5, 7, 9}, {1, 4, 6, 7, 8}, {2, 3, 5, 7, 8}, {2, 3, 6, 7, 9},
    {2, 4, 5, 8, 9}, {3, 4, 5, 6, 9}, {1, 2, 3, 4, 7, 10}, {1, 2, 5, 6, 8, 10},
]

# Octahedron boundary matrices as printed (lexicographic bases).
OCTA_F1 = [
    [1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [-1, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, -1, 0, 0, 1, 1, 1, 0, 0],
    [0, -1, 0, 0, 0, 0, 0, -1, 0, 0, 1, 1],
    [0, 0, -1, 0, 0, -1, 0, 0, -1, 0, -1, 0],
    [0, 0, 0, -1, 0, 0, -1, 0, 0, -1, 0, -1],
]

OCTA_F2 = [
    [1, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 1, 0, 0, 0, 0],
    [-1, 0, -1, 0, 0, 0, 0, 0],
    [0, -1, 0, -1, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 1, 0, 0],
    [1, 0, 0, 0, -1, 0, 0, 0],
    [0, 1, 0, 0, 0, -1, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 1],
    [0, 0, 0, 0, 1, 0, -1, 0],
    [0, 0, 0, 0, 0, 1, 0, -1],
    [0, 0, 1, 0, 0, 0, 1, 0],
    [0, 0, 0, 1, 0, 0, 0, 1],
]


@pytest.fixture(scope="session")
def bt_arrangement():
    return read_arrangement(data_path("bt-example.arr"))


@pytest.fixture(scope="session")
def octahedron():
    return read_graph(data_path("octahedron.graph"))


@pytest.fixture(scope="session")
def octahedron_builtin():
    return octahedron_graph()


def octahedron_matches(g):
    """Vertex relabelings of `g` whose boundary matrices reproduce the printed ones.

    f_2 must agree entry for entry.  The printed f_1 carries +1 on the
    smaller vertex of each edge, which is the normal matrix of A_G and the
    negative of f_1 as given by the boundary formula; both are checked.
    """
    from itertools import permutations

    from formality import Matrix, boundary_matrices, flag_complex, graphic_arrangement

    f1 = Matrix.from_rows(OCTA_F1)
    f2 = Matrix.from_rows(OCTA_F2)
    found = []
    for perm in permutations(range(1, 7)):
        h = g.relabel(perm)
        cc = boundary_matrices(flag_complex(h))
        if cc[2] == f2 and -cc[1] == f1 and graphic_arrangement(h).normal_matrix() == f1:
            found.append(perm)
    return found


# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
