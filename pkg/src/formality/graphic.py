"""Graphs, flag complexes and graphic arrangements.

Two independent routes to the complex D_* of a graphic arrangement A_G
live here side by side:

* the generic route, ``assemble_complex(graphic_arrangement(g))``, which
  goes through the lattice of flats and kernels of relation blocks;
* the clique route, :func:`special_basis_complex`, which writes down one
  basis vector per clique as an alternating sum over its facets.

:func:`cross_check` runs both plus plain simplicial homology of the flag
complex and compares them level by level.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .arrangement import Arrangement, Flat, Hyperplane
from .complex import (
    FormalityComplex,
    RelationBlock,
    assemble_complex,
    complex_from_blocks,
    formality_level,
    formality_report,
)
from .linalg import Matrix, rank

__all__ = [
    "GraphError",
    "GraphParseError",
    "Graph",
    "FlagComplex",
    "ChainComplex",
    "CrossCheckReport",
    "parse_graph",
    "read_graph",
    "flag_complex",
    "boundary_matrices",
    "simplicial_homology",
    "graphic_arrangement",
    "special_basis_complex",
    "cross_check",
    "compare_bases",
    "complete_graph",
    "cycle_graph",
    "octahedron_graph",
    "random_graph",
    "RANDOM_GENERATOR",
]


class GraphError(ValueError):
    pass


class GraphParseError(GraphError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.reason = message


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices 1..n; edges are stored as sorted pairs."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        norm = set()
        for e in self.edges:
            i, j = e
            if i == j:
                raise GraphError(f"loop at vertex {i}")
            i, j = min(i, j), max(i, j)
            if not (1 <= i and j <= self.n):
                raise GraphError(f"edge {{{i},{j}}} has a vertex outside 1..{self.n}")
            norm.add((i, j))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges) -> Graph:
        return cls(n, frozenset(tuple(e) for e in edges))

    @property
    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def neighbours(self) -> dict[int, set[int]]:
        adj = {v: set() for v in range(1, self.n + 1)}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def components(self) -> int:
        adj = self.neighbours()
        seen = set()
        count = 0
        for v in adj:
            if v in seen:
                continue
            count += 1
            stack = [v]
            seen.add(v)
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
        return count

    def is_connected(self) -> bool:
        return self.n >= 1 and self.components() == 1

    def relabel(self, perm) -> Graph:
        """Image under the vertex map v -> perm[v - 1]."""
        return Graph.from_edges(self.n, [(perm[i - 1], perm[j - 1]) for i, j in self.edges])

    def to_text(self) -> str:
        lines = [str(self.n)] + [f"{i} {j}" for i, j in self.sorted_edges]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class FlagComplex:
    faces_by_dim: dict[int, tuple[tuple[int, ...], ...]]

    @property
    def top_dim(self) -> int:
        return max((d for d, f in self.faces_by_dim.items() if f), default=-1)

    @property
    def face_counts(self) -> list[int]:
        return [len(self.faces_by_dim[d]) for d in range(self.top_dim + 1)]

    def faces(self, i: int) -> tuple[tuple[int, ...], ...]:
        return self.faces_by_dim.get(i, ())


@dataclass(frozen=True)
class ChainComplex:
    """Boundary matrices f_i : C_i -> C_{i-1}, for i >= 1."""

    boundary: dict[int, Matrix]

    def __getitem__(self, i: int) -> Matrix:
        return self.boundary[i]


@dataclass
class CrossCheckReport:
    graph: Graph
    rank: int
    clique_counts: list[int]
    generic_dims: list[int]
    special_dims: list[int]
    generic_homology: list[int]
    special_homology: list[int]
    flag_homology: list[int]
    d_ranks: list[int]
    formality_level: int
    per_level_agreement: list[bool] = field(default_factory=list)
    problems: list[str] = field(default_factory=list)
    generic: FormalityComplex | None = field(default=None, repr=False)
    special: FormalityComplex | None = field(default=None, repr=False)

    @property
    def agreement(self) -> bool:
        return all(self.per_level_agreement) and not self.problems


# -- parsing ----------------------------------------------------------------

def parse_graph(text: str) -> Graph:
    """Parse the graph format: vertex count, then one "i j" line per edge (i < j)."""
    lines = [
        (no, raw.strip())
        for no, raw in enumerate(text.splitlines(), start=1)
        if raw.strip() and not raw.strip().startswith("#")
    ]
    if not lines:
        raise GraphParseError(1, "empty input: missing vertex count")
    no, first = lines[0]
    try:
        n = int(first)
    except ValueError:
        raise GraphParseError(no, f"vertex count must be an integer, got {first!r}") from None
    if n < 1:
        raise GraphParseError(no, "vertex count must be positive")
    edges: dict[tuple[int, int], int] = {}
    for no, s in lines[1:]:
        toks = s.split()
        if len(toks) != 2:
            raise GraphParseError(no, f"expected two vertices, got {len(toks)} fields")
        try:
            i, j = int(toks[0]), int(toks[1])
        except ValueError:
            raise GraphParseError(no, f"malformed edge {s!r}") from None
        if i == j:
            raise GraphParseError(no, f"loop at vertex {i}")
        if not (1 <= i <= n and 1 <= j <= n):
            raise GraphParseError(no, f"vertex out of range 1..{n}")
        if i > j:
            raise GraphParseError(no, f"edge must be written with i < j, got {i} {j}")
        if (i, j) in edges:
            raise GraphParseError(no, f"duplicate edge (same as line {edges[(i, j)]})")
        edges[(i, j)] = no
    return Graph(n, frozenset(edges))


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


# -- flag complex and simplicial homology ------------------------------------

def flag_complex(g: Graph, max_dim: int | None = None) -> FlagComplex:
    """All cliques with at most max_dim + 1 vertices, grouped by dimension.

    Cliques grow by appending a larger vertex adjacent to every member, so
    each clique is produced once, already sorted.
    """
    if max_dim is None:
        max_dim = g.n
    adj = g.neighbours()
    faces: dict[int, list[tuple[int, ...]]] = {}
    if max_dim < 0 or g.n == 0:
        return FlagComplex({})
    level = [((v,), {w for w in adj[v] if w > v}) for v in range(1, g.n + 1)]
    d = 0
    while level and d <= max_dim:
        faces[d] = sorted(c for c, _ in level)
        nxt = []
        for clique, cands in level:
            for w in sorted(cands):
                nxt.append((clique + (w,), {u for u in cands if u > w and u in adj[w]}))
        level = nxt
        d += 1
    return FlagComplex({k: tuple(v) for k, v in faces.items()})


def boundary_matrices(fc: FlagComplex) -> ChainComplex:
    """f_i in lexicographic face bases: deleting the j-th vertex carries (-1)^(j-1)."""
    out = {}
    for i in range(1, fc.top_dim + 1):
        rows = {f: r for r, f in enumerate(fc.faces(i - 1))}
        cols = []
        for face in fc.faces(i):
            col = [0] * len(rows)
            for j in range(len(face)):
                col[rows[face[:j] + face[j + 1:]]] = (-1) ** j
            cols.append(col)
        out[i] = Matrix.from_columns(cols, len(rows))
    return ChainComplex(out)


def simplicial_homology(cc: ChainComplex, counts) -> list[int]:
    """Betti numbers over Q: dim H_i = a_i - rank f_i - rank f_{i+1}."""
    counts = list(counts)
    ranks = {i: rank(m) for i, m in cc.boundary.items()}
    return [
        counts[i] - ranks.get(i, 0) - ranks.get(i + 1, 0)
        for i in range(len(counts))
    ]


# -- graphic arrangements ---------------------------------------------------

def graphic_arrangement(g: Graph) -> Arrangement:
    """Hyperplanes x_i - x_j = 0, one per edge, in lexicographic edge order."""
    if not g.edges:
        raise GraphError("graphic arrangement of an edgeless graph is empty")
    hs = []
    for i, j in g.sorted_edges:
        v = [0] * g.n
        v[i - 1], v[j - 1] = 1, -1
        hs.append(Hyperplane(tuple(v)))
    return Arrangement(g.n, tuple(hs))


def _edge_closure(g: Graph, clique) -> tuple[int, ...]:
    index = {e: t for t, e in enumerate(g.sorted_edges)}
    return tuple(sorted(index[e] for e in combinations(clique, 2)))


def special_basis_complex(g: Graph) -> FormalityComplex:
    """D_* of A_G written in the special clique bases, with no lattice at all.

    The basis vector of a (k+1)-clique [i_1 < ... < i_{k+1}] is
    r_{i_2..i_{k+1}} - r_{i_1 i_3..i_{k+1}} + ... + (-1)^k r_{i_1..i_k},
    expressed in the basis of k-cliques one level down (edges at level 2).
    """
    arr = graphic_arrangement(g)
    fc = flag_complex(g)
    r = g.n - g.components()
    blocks_by_level = {}
    for k in range(2, r + 1):
        lower = {c: t for t, c in enumerate(fc.faces(k - 1))}
        blocks = []
        for clique in fc.faces(k):
            v = [0] * len(lower)
            for j in range(k + 1):
                facet = clique[:j] + clique[j + 1:]
                v[lower[facet]] += (-1) ** j
            flat = Flat(_edge_closure(g, clique), k)
            blocks.append(RelationBlock(flat, Matrix.from_columns([v], len(lower)), k))
        blocks_by_level[k] = tuple(blocks)
    return complex_from_blocks(g.n, arr.normal_matrix(), r, blocks_by_level)


def _scalar_multiple(u, v) -> Fraction | None:
    """c with u == c * v and c != 0, else None."""
    if len(u) != len(v):
        return None
    c = None
    for x, y in zip(u, v):
        if y == 0:
            if x != 0:
                return None
            continue
        q = Fraction(x) / y
        if q == 0 or (c is not None and q != c):
            return None
        c = q
    return c


def cross_check(g: Graph) -> CrossCheckReport:
    """Compare the lattice pipeline, the clique pipeline and flag homology."""
    if not g.is_connected():
        raise GraphError(
            "cross_check needs a connected graph: the identification of A_G "
            "formality with flag complex homology is stated for connected G"
        )
    arr = graphic_arrangement(g)
    generic = assemble_complex(arr)
    special = special_basis_complex(g)
    fc = flag_complex(g)
    cc = boundary_matrices(fc)
    counts = fc.face_counts
    flag_h = simplicial_homology(cc, counts)
    r = arr.rank
    gen_rep = formality_report(generic)
    spec_rep = formality_report(special)

    problems: list[str] = []
    if r != g.n - 1:
        problems.append(f"rank {r} != n - 1 = {g.n - 1}")

    per_level, problems_by_level = compare_bases(g, generic, special, fc, cc)
    problems.extend(problems_by_level)

    for i in range(1, r):
        h_gen = gen_rep.homology[i - 1]
        h_spec = spec_rep.homology[i - 1]
        h_flag = flag_h[i] if i < len(flag_h) else 0
        if not h_gen == h_spec == h_flag:
            per_level[i - 1] = False
            problems.append(f"H_{i}: generic {h_gen}, special {h_spec}, flag {h_flag}")

    return CrossCheckReport(
        graph=g,
        rank=r,
        clique_counts=counts,
        generic_dims=generic.dims,
        special_dims=special.dims,
        generic_homology=gen_rep.homology,
        special_homology=spec_rep.homology,
        flag_homology=flag_h,
        d_ranks=gen_rep.d_ranks,
        formality_level=gen_rep.formality_level,
        per_level_agreement=per_level,
        problems=problems,
        generic=generic,
        special=special,
    )


def compare_bases(g: Graph, generic: FormalityComplex, special: FormalityComplex,
                  fc: FlagComplex, cc: ChainComplex) -> tuple[list[bool], list[str]]:
    """Per-level agreement of the lattice bases with the clique bases.

    Generic block vectors are compared with the special ones through the
    identification built level by level: if the generic vector of a
    k-clique is c times the special one, its generic coordinate counts c
    times in the level above.
    """
    r = generic.rank
    counts = fc.face_counts + [0] * (r + 1)
    problems: list[str] = []
    per_level = []
    # level 1: both complexes use the normal matrix; the boundary f_1 agrees up to rank
    per_level.append(
        generic.differential(1) == special.differential(1)
        and generic.dim(1) == special.dim(1) == counts[1]
        and rank(generic.differential(1)) == rank(cc[1])
    )
    # scale[c]: generic vector of clique c equals scale[c] times its special vector
    scale: dict[tuple[int, ...], Fraction] = {e: Fraction(1) for e in fc.faces(1)}
    for k in range(2, r + 1):
        cliques = fc.faces(k)
        ok = generic.dim(k) == special.dim(k) == len(cliques)
        by_closure = {_edge_closure(g, c): c for c in cliques}
        lower_order = _generic_order(generic, g, k - 1, fc)
        lower_index = {c: t for t, c in enumerate(fc.faces(k - 1))}
        new_scale = {}
        for block in generic.blocks_by_level.get(k, ()):
            clique = by_closure.get(block.flat.closure)
            if clique is None or block.dim != 1:
                ok = False
                problems.append(f"level {k}: block {block.flat.closure} is not a 1-dim clique block")
                continue
            col = block.basis.column(0)
            translated = [Fraction(0)] * len(lower_index)
            for pos, lc in enumerate(lower_order):
                if col[pos]:
                    if lc not in scale:
                        break
                    translated[lower_index[lc]] = col[pos] * scale[lc]
            else:
                c = _scalar_multiple(translated, special.differential(k).column(cliques.index(clique)))
                if c is not None:
                    new_scale[clique] = c
                    continue
            ok = False
            problems.append(f"level {k}: clique {clique} column is not a multiple of its boundary")
        scale = new_scale
        expected = cc.boundary.get(k, Matrix.zeros(len(fc.faces(k - 1)), 0))
        if special.differential(k) != expected:
            ok = False
            problems.append(f"level {k}: special differential differs from f_{k}")
        per_level.append(ok)

    return per_level, problems


def _generic_order(generic: FormalityComplex, g: Graph, k: int, fc: FlagComplex):
    """Cliques in the order of the generic D_k coordinates."""
    if k == 1:
        return list(fc.faces(1))
    by_closure = {_edge_closure(g, c): c for c in fc.faces(k)}
    out = []
    for block in generic.blocks_by_level.get(k, ()):
        out.extend([by_closure.get(block.flat.closure)] * block.dim)
    return out


def flag_formality_level(g: Graph) -> tuple[int, list[int]]:
    """Formality level of A_G read off flag homology alone, with H_1..H_{r-1}."""
    fc = flag_complex(g)
    h = simplicial_homology(boundary_matrices(fc), fc.face_counts)
    r = g.n - g.components()
    reduced = [h[i] if i < len(h) else 0 for i in range(1, r)]
    return formality_level(reduced, r), reduced


# -- graph families ---------------------------------------------------------

def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(1, n + 1), 2))


def cycle_graph(m: int) -> Graph:
    if m < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(m, [(i, i + 1) for i in range(1, m)] + [(1, m)])


def octahedron_graph(matching=((1, 2), (3, 4), (5, 6))) -> Graph:
    """K_6 minus a perfect matching: the 1-skeleton of the octahedron."""
    missing = {tuple(sorted(e)) for e in matching}
    return Graph.from_edges(6, [e for e in combinations(range(1, 7), 2) if e not in missing])


RANDOM_GENERATOR = "mt19937 (Python random.Random); edge {i,j} kept iff randrange(den) < num, pairs in lexicographic order"


def random_graph(n: int, p: Fraction, rng: random.Random) -> Graph:
    """Erdos-Renyi G(n, p) with exact rational p, drawn from `rng`."""
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise GraphError("edge probability must lie in [0, 1]")
    edges = [e for e in combinations(range(1, n + 1), 2) if rng.randrange(p.denominator) < p.numerator]
    return Graph.from_edges(n, edges)
