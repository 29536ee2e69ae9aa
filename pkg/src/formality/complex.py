"""Higher relation spaces, the complex D_* and its homology.

Every basis vector of R_k(A_X) is stored in the global coordinates of
D_{k-1}(A): the coordinates of D_1 are hyperplane indices, and the
coordinates of D_j (j >= 2) are the concatenated basis columns of all
level-j blocks.  With that choice each inclusion R_{k-1}(A_Y) -> R_{k-1}(A_X)
is the identity on vectors, and the map pi_k is plain column
concatenation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .arrangement import Arrangement, Flat, Lattice, build_lattice
from .linalg import Matrix, kernel_basis, rank, rref

__all__ = [
    "ComplexError",
    "RelationBlock",
    "FormalityComplex",
    "FormalityReport",
    "relation_space_F",
    "f2_span",
    "compute_relation_blocks",
    "assemble_complex",
    "formality_report",
    "formality_level",
    "verdict",
]


class ComplexError(RuntimeError):
    """A composite d_{k-1} d_k came out nonzero.  Always an internal bug."""


@dataclass(frozen=True)
class RelationBlock:
    """Basis of R_k(A_X) for one rank-k flat X, in D_{k-1} coordinates."""

    flat: Flat
    basis: Matrix
    k: int

    @property
    def dim(self) -> int:
        return self.basis.cols


@dataclass(frozen=True)
class FormalityComplex:
    d0_dim: int
    d1_dim: int
    rank: int
    blocks_by_level: dict[int, tuple[RelationBlock, ...]]
    differentials: dict[int, Matrix]
    block_offsets: dict[int, tuple[int, ...]]

    def dim(self, k: int) -> int:
        if k == 0:
            return self.d0_dim
        if k == 1:
            return self.d1_dim
        return sum(b.dim for b in self.blocks_by_level.get(k, ()))

    @property
    def dims(self) -> list[int]:
        return [self.dim(k) for k in range(self.rank + 1)]

    def differential(self, k: int) -> Matrix:
        """Matrix of d_k : D_k -> D_{k-1}; zero-sized above the top level."""
        if k in self.differentials:
            return self.differentials[k]
        return Matrix.zeros(self.dim(k - 1), self.dim(k))

    def check(self) -> None:
        """Raise ComplexError unless every d_{k-1} d_k vanishes."""
        for k in sorted(self.differentials):
            if k < 2:
                continue
            prod = self.differential(k - 1) @ self.differential(k)
            if not prod.is_zero():
                raise ComplexError(f"d_{k - 1} . d_{k} is not zero")


@dataclass(frozen=True)
class FormalityReport:
    rank: int
    d_dims: list[int]
    d_ranks: list[int]
    homology: list[int]
    formality_level: int
    verdict: str = field(default="")


def relation_space_F(a: Arrangement, indices) -> Matrix:
    """Relations among the chosen defining forms, zero-padded to all n coordinates."""
    idx = sorted(set(indices))
    n = len(a)
    if any(not 0 <= i < n for i in idx):
        raise IndexError("hyperplane index out of range")
    if not idx:
        return Matrix.zeros(n, 0)
    ker = kernel_basis(a.normal_matrix(idx))
    cols = []
    for c in ker.columns():
        v = [0] * n
        for i, x in zip(idx, c):
            v[i] = x
        cols.append(v)
    return Matrix.from_columns(cols, n)


def f2_span(a: Arrangement) -> Matrix:
    """Basis of F_2(A): the span of all relations among exactly three forms.

    Brute force over 3-subsets.  Kept independent of the lattice code on
    purpose; it is the oracle for the image of d_2.
    """
    n = len(a)
    vectors = []
    for triple in combinations(range(n), 3):
        rel = relation_space_F(a, triple)
        for c in rel.columns():
            # a dependency among exactly three forms uses all three
            if all(c[i] for i in triple):
                vectors.append(c)
    if not vectors:
        return Matrix.zeros(n, 0)
    # reduce the spanning set to a basis: pivot columns of the stacked matrix
    m = Matrix.from_columns(vectors, n)
    _, pivots = rref(m)
    return Matrix.from_columns([vectors[j] for j in pivots], n)


def compute_relation_blocks(
    lat: Lattice,
    a: Arrangement,
    k: int,
    lower: tuple[RelationBlock, ...] = (),
) -> list[RelationBlock]:
    """Blocks R_k(A_X) for the rank-k flats of `lat`; empty blocks are dropped.

    For k >= 3 `lower` must hold the level k-1 blocks, in the order that
    defines the D_{k-1} coordinates.
    """
    if k < 2:
        raise ValueError("relation blocks start at level 2")
    blocks = []
    if k == 2:
        for x in lat[2]:
            basis = relation_space_F(a, x.closure)
            if basis.cols:
                blocks.append(RelationBlock(x, basis, 2))
        return blocks

    offsets = _offsets(lower)
    dim_lower = sum(b.dim for b in lower)
    ambient = lower[0].basis.rows if lower else 0
    for x in lat[k]:
        inside = x.members
        chosen = [(b, off) for b, off in zip(lower, offsets) if inside.issuperset(b.flat.closure)]
        if len(chosen) < 2:
            # a single inclusion is injective
            continue
        m = Matrix.hstack([b.basis for b, _ in chosen], ambient)
        ker = kernel_basis(m)
        if not ker.cols:
            continue
        cols = []
        for c in ker.columns():
            v = [0] * dim_lower
            pos = 0
            for b, off in chosen:
                for t in range(b.dim):
                    v[off + t] = c[pos + t]
                pos += b.dim
            cols.append(v)
        blocks.append(RelationBlock(x, Matrix.from_columns(cols, dim_lower), k))
    return blocks


def _offsets(blocks) -> tuple[int, ...]:
    out, pos = [], 0
    for b in blocks:
        out.append(pos)
        pos += b.dim
    return tuple(out)


def complex_from_blocks(
    d0_dim: int,
    d1: Matrix,
    rank_: int,
    blocks_by_level: dict[int, tuple[RelationBlock, ...]],
) -> FormalityComplex:
    """Assemble D_* from level blocks and check that it is a complex."""
    differentials = {1: d1}
    offsets = {}
    rows = d1.cols
    for k in sorted(blocks_by_level):
        blocks = blocks_by_level[k]
        differentials[k] = Matrix.hstack([b.basis for b in blocks], rows)
        offsets[k] = _offsets(blocks)
        rows = differentials[k].cols
    c = FormalityComplex(
        d0_dim=d0_dim,
        d1_dim=d1.cols,
        rank=rank_,
        blocks_by_level=blocks_by_level,
        differentials=differentials,
        block_offsets=offsets,
    )
    c.check()
    return c


def assemble_complex(a: Arrangement, max_k: int | None = None) -> FormalityComplex:
    """Build D_* for `a` through level min(max_k, rank(A))."""
    if len(a) == 0:
        raise ValueError("empty arrangement")
    r = a.rank
    top = r if max_k is None else min(max_k, r)
    lat = build_lattice(a, top)
    blocks_by_level: dict[int, tuple[RelationBlock, ...]] = {}
    lower: tuple[RelationBlock, ...] = ()
    for k in range(2, top + 1):
        lower = tuple(compute_relation_blocks(lat, a, k, lower))
        blocks_by_level[k] = lower
    return complex_from_blocks(a.ambient_dim, a.normal_matrix(), top, blocks_by_level)


def formality_level(homology, rank_: int) -> int:
    """Largest k in [2, rank] with H_1 = ... = H_{k-1} = 0; 1 if there is none."""
    level = 1
    for k in range(2, rank_ + 1):
        if any(homology[: k - 1]):
            break
        level = k
    return level


def verdict(level: int, rank_: int) -> str:
    if level >= rank_:
        return "formal" if rank_ <= 2 else f"k-formal for every k <= {rank_}"
    if level == 1:
        return "not formal"
    if level == 2:
        return "formal, not 3-formal"
    return f"{level}-formal, not {level + 1}-formal"


def formality_report(c: FormalityComplex) -> FormalityReport:
    r = c.rank
    dims = c.dims
    ranks = [rank(c.differential(k)) for k in range(1, r + 1)]
    ranks_ext = [0] + ranks + [0]  # rank d_0 = rank d_{r+1} = 0
    homology = []
    for i in range(1, r):
        h = dims[i] - ranks_ext[i] - ranks_ext[i + 1]
        if h < 0:
            raise ComplexError(f"negative homology dimension at H_{i}")
        homology.append(h)
    level = formality_level(homology, r)
    return FormalityReport(
        rank=r,
        d_dims=dims,
        d_ranks=ranks,
        homology=homology,
        formality_level=level,
        verdict=verdict(level, r),
    )
