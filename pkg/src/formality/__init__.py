"""Decide k-formality of central hyperplane arrangements.

The complex D_* of higher relation spaces is built from the lattice of
flats; an arrangement is k-formal exactly when H_1, ..., H_{k-1} of that
complex vanish.  For graphic arrangements the same numbers come out of the
flag complex of the graph, and :func:`cross_check` compares the two.
"""

from importlib.resources import files

from .arrangement import (
    Arrangement,
    ArrangementError,
    ArrangementParseError,
    Flat,
    Hyperplane,
    Lattice,
    build_lattice,
    closure,
    localization,
    parse_arrangement,
    read_arrangement,
)
from .complex import (
    ComplexError,
    FormalityComplex,
    FormalityReport,
    RelationBlock,
    assemble_complex,
    compute_relation_blocks,
    f2_span,
    formality_report,
    relation_space_F,
)
from .graphic import (
    ChainComplex,
    CrossCheckReport,
    FlagComplex,
    Graph,
    GraphError,
    GraphParseError,
    boundary_matrices,
    complete_graph,
    cross_check,
    cycle_graph,
    flag_complex,
    graphic_arrangement,
    octahedron_graph,
    parse_graph,
    random_graph,
    read_graph,
    simplicial_homology,
    special_basis_complex,
)
from .linalg import Matrix, kernel_basis, rank, rref

__version__ = "0.1.0"


def data_path(name: str):
    """Path of a bundled example file, e.g. ``data_path("octahedron.graph")``."""
    return files(__package__) / "data" / name
