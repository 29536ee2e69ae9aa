"""The octahedron: a graphic arrangement whose flag complex is a 2-sphere.

For a graph G the arrangement A_G has one hyperplane x_i = x_j per edge,
and the relation complex of A_G can be read off the cliques of G.  The
octahedron's flag complex has a 2-dimensional hole, which shows up as the
failure of 3-formality.  This script computes it both ways.

    python demos/octahedron_crosscheck.py
"""

from formality import (
    boundary_matrices,
    cross_check,
    flag_complex,
    octahedron_graph,
    simplicial_homology,
)
from formality.linalg import rank

g = octahedron_graph()
print("edges:", " ".join(f"{i}{j}" for i, j in g.sorted_edges))

fc = flag_complex(g)
cc = boundary_matrices(fc)
print("faces per dimension:", fc.face_counts)
print("rank f_1 =", rank(cc[1]), " rank f_2 =", rank(cc[2]))
print("flag homology H_0, H_1, H_2 =", simplicial_homology(cc, fc.face_counts))

rep = cross_check(g)
print()
print("relation complex dims   ", rep.generic_dims)
print("relation complex H_1..  ", rep.generic_homology)
print("levels agreeing         ", rep.per_level_agreement)
print("formality level         ", rep.formality_level)
print("all three pipelines agree" if rep.agreement else f"disagreement: {rep.problems}")
