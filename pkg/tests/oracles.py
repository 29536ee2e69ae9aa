"""Brute-force reference computations.

Nothing in here imports the package: these are the independent routes the
tests compare against.
"""

from fractions import Fraction
from itertools import combinations, permutations


def det(rows):
    """Leibniz expansion; fine up to 7x7."""
    n = len(rows)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inversions = sum(1 for a, b in combinations(range(n), 2) if perm[a] > perm[b])
        term = Fraction(-1 if inversions % 2 else 1)
        for i, j in enumerate(perm):
            term *= rows[i][j]
            if not term:
                break
        total += term
    return total


def minor_rank(rows):
    """Largest k with a nonzero k x k minor."""
    m = len(rows)
    n = len(rows[0]) if rows else 0
    for k in range(min(m, n), 0, -1):
        for rs in combinations(range(m), k):
            for cs in combinations(range(n), k):
                if det([[rows[i][j] for j in cs] for i in rs]):
                    return k
    return 0


def set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def cliques_brute_force(n, edges):
    """All vertex subsets that are pairwise adjacent, grouped by size - 1."""
    edges = {tuple(sorted(e)) for e in edges}
    out = {}
    for size in range(1, n + 1):
        found = [
            s for s in combinations(range(1, n + 1), size)
            if all(p in edges for p in combinations(s, 2))
        ]
        if found:
            out[size - 1] = found
    return out


def cycle_boundary(m):
    """f_1 of the m-cycle in lexicographic bases, straight from the formula."""
    edges = sorted([(i, i + 1) for i in range(1, m)] + [(1, m)])
    rows = [[0] * len(edges) for _ in range(m)]
    for c, (i, j) in enumerate(edges):
        rows[j - 1][c] += 1
        rows[i - 1][c] -= 1
    return rows


def in_span(vectors, v):
    """Is v a rational combination of `vectors`? Decided by ranks via minors."""
    if not vectors:
        return not any(v)
    cols = list(vectors)
    rows_a = [list(r) for r in zip(*cols)]
    rows_b = [list(r) for r in zip(*(cols + [v]))]
    return minor_rank(rows_a) == minor_rank(rows_b)
