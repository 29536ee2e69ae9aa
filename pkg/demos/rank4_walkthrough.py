"""Walk through the rank-4 example: a formal arrangement that is not 3-formal.

Ten planes in Q^4.  Every linear dependency among their forms is generated
by relations of length three, so the arrangement is formal, yet the second
homology of the relation complex is one-dimensional.

    python demos/rank4_walkthrough.py
"""

from formality import (
    assemble_complex,
    build_lattice,
    compute_relation_blocks,
    data_path,
    formality_report,
    read_arrangement,
)


def term(c, i):
    sign = "-" if c < 0 else "+"
    return f"{sign}{abs(c)}*a{i}" if abs(c) != 1 else f"{sign}a{i}"


def show(label, value):
    print(f"{label:<34}{value}")


a = read_arrangement(data_path("bt-example.arr"))
show("hyperplanes / rank", f"{len(a)} / {a.rank}")

lat = build_lattice(a)
show("flats by rank", [len(lat[k]) for k in range(1, lat.max_rank + 1)])

# the length-3 relations: one per rank-2 flat holding three planes
print("\nrank-2 flats with a relation (1-based) and the relation itself:")
for block in compute_relation_blocks(lat, a, 2):
    members = [i + 1 for i in block.flat.closure]
    coeffs = {i + 1: c for i, c in enumerate(block.basis.column(0)) if c}
    print(f"  {members}: " + " ".join(term(c, i) for i, c in coeffs.items()))

c = assemble_complex(a)
rep = formality_report(c)
print()
show("dim D_0 .. D_r", rep.d_dims)
show("rank d_1 .. d_r", rep.d_ranks)
show("H_1 .. H_{r-1}", rep.homology)
show("verdict", rep.verdict)
