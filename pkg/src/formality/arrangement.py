"""Central hyperplane arrangements and their lattice of flats.

A flat is identified with its closure: the set of indices of every
hyperplane containing the intersection subspace.  That index set is also
the localization A_X, so sub-arrangements never need to be built
explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .linalg import Matrix, rank

__all__ = [
    "MAX_HYPERPLANES",
    "ArrangementError",
    "ArrangementParseError",
    "Hyperplane",
    "Arrangement",
    "Flat",
    "Lattice",
    "parse_arrangement",
    "read_arrangement",
    "closure",
    "build_lattice",
    "localization",
]

# Every simple graph on at most 8 vertices (at most 28 edges) must fit.
MAX_HYPERPLANES = 28


class ArrangementError(ValueError):
    pass


class ArrangementParseError(ArrangementError):
    """Malformed arrangement text; `line` is 1-based."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.reason = message


def _normalize(normal: Sequence) -> tuple[Fraction, ...]:
    v = tuple(Fraction(x) for x in normal)
    lead = next((x for x in v if x), None)
    if lead is None:
        raise ArrangementError("zero normal vector does not define a hyperplane")
    return tuple(x / lead for x in v)


@dataclass(frozen=True)
class Hyperplane:
    """Hyperplane through the origin, stored as its normalized defining form."""

    normal: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "normal", _normalize(self.normal))

    @property
    def dim(self) -> int:
        return len(self.normal)


@dataclass(frozen=True)
class Arrangement:
    ambient_dim: int
    hyperplanes: tuple[Hyperplane, ...]

    def __post_init__(self):
        hs = tuple(h if isinstance(h, Hyperplane) else Hyperplane(h) for h in self.hyperplanes)
        object.__setattr__(self, "hyperplanes", hs)
        seen = {}
        for i, h in enumerate(hs):
            if h.dim != self.ambient_dim:
                raise ArrangementError(
                    f"hyperplane {i + 1} has {h.dim} coordinates, expected {self.ambient_dim}"
                )
            if h.normal in seen:
                raise ArrangementError(
                    f"hyperplanes {seen[h.normal] + 1} and {i + 1} coincide"
                )
            seen[h.normal] = i

    @classmethod
    def from_normals(cls, normals: Sequence[Sequence], ambient_dim: int | None = None):
        normals = list(normals)
        if ambient_dim is None:
            ambient_dim = len(normals[0])
        return cls(ambient_dim, tuple(Hyperplane(tuple(v)) for v in normals))

    def __len__(self) -> int:
        return len(self.hyperplanes)

    def normal_matrix(self, indices: Iterable[int] | None = None) -> Matrix:
        """The ambient_dim x |indices| matrix whose columns are the normals."""
        if indices is None:
            indices = range(len(self))
        cols = [self.hyperplanes[i].normal for i in indices]
        return Matrix.from_columns(cols, self.ambient_dim)

    @property
    def rank(self) -> int:
        return rank(self.normal_matrix())


@dataclass(frozen=True)
class Flat:
    """A flat X, given by the sorted indices of A_X and its codimension."""

    closure: tuple[int, ...]
    rank: int = field(compare=False)

    def __post_init__(self):
        object.__setattr__(self, "closure", tuple(sorted(self.closure)))

    @property
    def members(self) -> frozenset[int]:
        return frozenset(self.closure)

    def issubset(self, other: Flat) -> bool:
        return set(self.closure) <= set(other.closure)

    def __len__(self) -> int:
        return len(self.closure)


@dataclass(frozen=True)
class Lattice:
    """Flats of an arrangement grouped by rank, each rank in lexicographic order."""

    arrangement: Arrangement
    flats_by_rank: dict[int, tuple[Flat, ...]]

    @property
    def max_rank(self) -> int:
        return max(self.flats_by_rank, default=0)

    def __getitem__(self, k: int) -> tuple[Flat, ...]:
        return self.flats_by_rank.get(k, ())

    def __iter__(self):
        for k in sorted(self.flats_by_rank):
            yield from self.flats_by_rank[k]

    def __contains__(self, x: Flat) -> bool:
        return x in self.flats_by_rank.get(x.rank, ())

    def __len__(self) -> int:
        return sum(len(v) for v in self.flats_by_rank.values())


# -- parsing ----------------------------------------------------------------

def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        yield lineno, s


def _parse_rational(tok: str, lineno: int) -> Fraction:
    num, sep, den = tok.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ArrangementParseError(lineno, f"malformed rational {tok!r}") from None
    if sep and (den.startswith(("+", "-")) or q <= 0):
        raise ArrangementParseError(lineno, f"malformed rational {tok!r}: denominator must be positive")
    return Fraction(p, q)


def parse_arrangement(text: str) -> Arrangement:
    """Parse the plain-text arrangement format.

    '#' lines are comments.  The first remaining line is the ambient
    dimension; every later line is one defining form, given as that many
    rationals ("3", "-1", "2/5").
    """
    lines = _content_lines(text)
    try:
        lineno, first = next(lines)
    except StopIteration:
        raise ArrangementParseError(1, "empty input: missing ambient dimension") from None
    try:
        dim = int(first)
    except ValueError:
        raise ArrangementParseError(lineno, f"ambient dimension must be an integer, got {first!r}") from None
    if dim < 1:
        raise ArrangementParseError(lineno, "ambient dimension must be positive")

    hyperplanes = []
    seen: dict[tuple, int] = {}
    for lineno, s in lines:
        toks = s.split()
        if len(toks) != dim:
            raise ArrangementParseError(lineno, f"expected {dim} coordinates, got {len(toks)}")
        coords = [_parse_rational(t, lineno) for t in toks]
        if not any(coords):
            raise ArrangementParseError(lineno, "zero normal vector")
        h = Hyperplane(tuple(coords))
        if h.normal in seen:
            raise ArrangementParseError(
                lineno, f"duplicate hyperplane (same as line {seen[h.normal]})"
            )
        seen[h.normal] = lineno
        hyperplanes.append(h)
    if not hyperplanes:
        raise ArrangementParseError(lineno, "arrangement has no hyperplanes")
    if len(hyperplanes) > MAX_HYPERPLANES:
        raise ArrangementParseError(
            lineno, f"{len(hyperplanes)} hyperplanes exceeds the supported maximum of {MAX_HYPERPLANES}"
        )
    return Arrangement(dim, tuple(hyperplanes))


def read_arrangement(path) -> Arrangement:
    with open(path, encoding="utf-8") as fh:
        return parse_arrangement(fh.read())


# -- span bookkeeping -------------------------------------------------------

class _RowSpace:
    """Reduced echelon basis of a span of normals, kept pivot-normalized."""

    __slots__ = ("rows",)

    def __init__(self, rows=None):
        self.rows: dict[int, list[Fraction]] = rows or {}

    def residual(self, v) -> list[Fraction]:
        v = list(v)
        for p, r in self.rows.items():
            f = v[p]
            if f:
                for j, x in enumerate(r):
                    if x:
                        v[j] -= f * x
        return v

    def extended(self, v) -> _RowSpace | None:
        """Span with `v` added, or None if `v` already lies in it."""
        w = self.residual(v)
        p = next((j for j, x in enumerate(w) if x), None)
        if p is None:
            return None
        inv = 1 / w[p]
        w = [x * inv for x in w]
        rows = {}
        for q, r in self.rows.items():
            f = r[p]
            rows[q] = [a - f * b for a, b in zip(r, w)] if f else r
        rows[p] = w
        return _RowSpace(rows)

    @property
    def dim(self) -> int:
        return len(self.rows)


def _span(a: Arrangement, indices) -> _RowSpace:
    s = _RowSpace()
    for i in indices:
        t = s.extended(a.hyperplanes[i].normal)
        if t is not None:
            s = t
    return s


def closure(a: Arrangement, indices: Iterable[int]) -> Flat:
    """Smallest flat containing the given hyperplanes."""
    indices = set(indices)
    span = _span(a, sorted(indices))
    members = [
        i for i, h in enumerate(a.hyperplanes)
        if i in indices or not any(span.residual(h.normal))
    ]
    return Flat(tuple(members), span.dim)


def _projective_key(v) -> tuple[int, ...]:
    """Primitive integer vector with positive leading entry, spanning the same line."""
    den = lcm(*(x.denominator for x in v))
    ints = [x.numerator * (den // x.denominator) for x in v]
    g = gcd(*ints)
    if next(x for x in ints if x) < 0:
        g = -g
    return tuple(x // g for x in ints)


def build_lattice(a: Arrangement, max_rank: int | None = None) -> Lattice:
    """All flats of rank 1..max_rank, built one rank at a time.

    The flats covering X are found by reducing every hyperplane outside X
    modulo the span of X: two outside hyperplanes land in the same cover
    exactly when their residuals are proportional.
    """
    r = a.rank
    if max_rank is None:
        max_rank = r
    if max_rank > r:
        raise ArrangementError(f"max_rank {max_rank} exceeds the arrangement rank {r}")
    if len(a) > MAX_HYPERPLANES:
        raise ArrangementError(
            f"{len(a)} hyperplanes exceeds the supported maximum of {MAX_HYPERPLANES}"
        )

    n = len(a)
    normals = [h.normal for h in a.hyperplanes]
    flats_by_rank: dict[int, tuple[Flat, ...]] = {}
    if max_rank < 1:
        return Lattice(a, flats_by_rank)

    # rank 1: hyperplanes are pairwise distinct, so each is its own closure
    level = {(i,): _RowSpace().extended(normals[i]) for i in range(n)}
    flats_by_rank[1] = tuple(Flat((i,), 1) for i in range(n))

    for k in range(1, max_rank):
        nxt: dict[tuple[int, ...], _RowSpace] = {}
        for members, span in level.items():
            inside = set(members)
            groups: dict[tuple, list[int]] = {}
            for h in range(n):
                if h in inside:
                    continue
                res = span.residual(normals[h])
                groups.setdefault(_projective_key(res), []).append(h)
            for hs in groups.values():
                cover = tuple(sorted(inside.union(hs)))
                if cover not in nxt:
                    nxt[cover] = span.extended(normals[hs[0]])
        level = dict(sorted(nxt.items()))
        flats_by_rank[k + 1] = tuple(Flat(c, k + 1) for c in level)
    return Lattice(a, flats_by_rank)


def localization(lat: Lattice, x: Flat) -> list[Flat]:
    """The flats of A_X, i.e. every flat of `lat` whose closure lies inside X."""
    if x not in lat:
        raise ArrangementError(f"{x} is not a flat of this lattice")
    inside = x.members
    return [y for y in lat if y.rank <= x.rank and inside.issuperset(y.closure)]
