"""Combinatorial models for the positive parts of cluster complexes.

Type A rank n lives on the diagonals of a convex (n+3)-gon with vertices
numbered 0 .. n+2. The snake triangulation fixes the negative copy of the
index set: snake diagonal s_i joins ceil(i/2) and n+2 - floor(i/2), a
zig-zag starting next to vertex 0. The remaining ("positive") diagonals
are the model's vertices, faces are pairwise noncrossing sets, and the
carrier of a diagonal is the set of snake diagonals it crosses.

The dihedral model of parameter m is a path on m vertices whose endpoints
carry one index label each and whose interior vertices carry both.
"""

from __future__ import annotations

from math import comb

from .complexes import Complex
from .subdivisions import Subdivision


def crosses(d1, d2) -> bool:
    """Strict interleaving of chords (a,b), (c,d) of a convex polygon;
    chords sharing an endpoint never cross."""
    a, b = sorted(d1)
    c, d = sorted(d2)
    return a < c < b < d or c < a < d < b


def snake_diagonals(n: int) -> list[tuple[int, int]]:
    """The n snake diagonals of the (n+3)-gon, s_1 .. s_n."""
    return [(-(-i // 2), n + 2 - i // 2) for i in range(1, n + 1)]


def polygon_diagonals(size: int) -> list[tuple[int, int]]:
    out = []
    for a in range(size):
        for b in range(a + 2, size):
            if (a, b) != (0, size - 1):
                out.append((a, b))
    return out


def polygon_triangulations(size: int) -> list[frozenset[tuple[int, int]]]:
    """All triangulations of the convex polygon 0 .. size-1, each as a
    frozenset of size-3 pairwise noncrossing diagonals."""

    def rec(i, j):
        if j - i < 2:
            yield frozenset()
            return
        for k in range(i + 1, j):
            for left in rec(i, k):
                for right in rec(k, j):
                    diags = set(left) | set(right)
                    if k - i >= 2:
                        diags.add((i, k))
                    if j - k >= 2:
                        diags.add((k, j))
                    yield frozenset(diags)

    return list(rec(0, size - 1))


def _diag_label(d) -> str:
    a, b = sorted(d)
    return f"{a}-{b}"


def type_a_subdivision(n: int) -> Subdivision:
    """Positive part of the type A rank n cluster complex with its carrier
    map; facets are the triangulations avoiding every snake diagonal."""
    if n < 1:
        raise ValueError(f"rank must be >= 1, got {n}")
    size = n + 3
    snake = snake_diagonals(n)
    snake_set = set(snake)
    positive = [d for d in polygon_diagonals(size) if d not in snake_set]

    facets = [frozenset(_diag_label(d) for d in tri)
              for tri in polygon_triangulations(size)
              if not (tri & snake_set)]
    labels = [_diag_label(d) for d in positive]
    sigma = {}
    for d in positive:
        carrier = frozenset(f"s{i}" for i, s in enumerate(snake, start=1)
                            if crosses(d, s))
        if not carrier:
            raise AssertionError(f"positive diagonal {d} crosses no snake diagonal")
        sigma[_diag_label(d)] = carrier
    index_set = [f"s{i}" for i in range(1, n + 1)]
    return Subdivision.make(Complex.make(labels, facets), index_set, sigma)


def dihedral_subdivision(m: int) -> Subdivision:
    """Path on m vertices p1 .. pm; endpoint carriers are {s1} and {s2},
    interior carriers are {s1, s2}. Its sphere is the (m+2)-gon boundary."""
    if m < 2:
        raise ValueError(f"dihedral parameter must be >= 2, got {m}")
    labels = [f"p{i}" for i in range(1, m + 1)]
    facets = [frozenset((labels[i], labels[i + 1])) for i in range(m - 1)]
    sigma = {v: frozenset(("s1", "s2")) for v in labels}
    sigma[labels[0]] = frozenset(("s1",))
    sigma[labels[-1]] = frozenset(("s2",))
    return Subdivision.make(Complex.make(labels, facets), ["s1", "s2"], sigma)


def count_roots_by_support(n: int) -> dict[int, int]:
    """Non-simple positive roots of type A rank n, counted by support size.
    Roots are the intervals [a, b] inside {1 .. n}; non-simple means b > a."""
    if n < 1:
        raise ValueError(f"rank must be >= 1, got {n}")
    out: dict[int, int] = {}
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            s = b - a + 1
            out[s] = out.get(s, 0) + 1
    return out


def catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1)
