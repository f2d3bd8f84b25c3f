"""Edge colorings of complete graphs.

Vertices are ``0..n-1`` and colors ``1..r``. Color ``0`` is reserved as a
blank symbol and never appears on an edge. Storage is the condensed upper
triangle: one uint8 per unordered pair, pairs in row-major order
``(0,1), (0,2), ..., (0,n-1), (1,2), ...``.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field

import numpy as np

from ._kernels import pack_adjacency
from .errors import (
    BoundsInvalid,
    ColorOutOfRange,
    DistanceClassesNotAPartition,
    DuplicateEdge,
    EmptySubset,
    LengthMismatch,
    MissingEdge,
    NotAPermutation,
    VertexOutOfRange,
)

MAX_COLORS = 255


def num_pairs(n: int) -> int:
    return n * (n - 1) // 2


def pair_index(n: int, u: int, v: int) -> int:
    """Position of the unordered pair ``{u, v}`` in condensed storage."""
    if u > v:
        u, v = v, u
    return u * (2 * n - u - 1) // 2 + (v - u - 1)


def condense(mat: np.ndarray) -> np.ndarray:
    """Upper triangle of a square matrix as a condensed uint8 array."""
    n = mat.shape[0]
    out = np.empty(num_pairs(n), dtype=np.uint8)
    pos = 0
    for u in range(n - 1):
        out[pos : pos + n - u - 1] = mat[u, u + 1 :]
        pos += n - u - 1
    return out


def expand(n: int, colors: np.ndarray) -> np.ndarray:
    """Inverse of :func:`condense`: symmetric matrix with a zero diagonal."""
    mat = np.zeros((n, n), dtype=np.uint8)
    pos = 0
    for u in range(n - 1):
        mat[u, u + 1 :] = colors[pos : pos + n - u - 1]
        pos += n - u - 1
    return mat | mat.T


def check_bounds(k: Iterable[int], r: int | None = None) -> tuple[int, ...]:
    """Validate a clique-bound vector ``(k_1, ..., k_r)`` and return it as a tuple.

    ``k_i = 2`` is legal and means color ``i`` must be absent.
    """
    k = tuple(int(x) for x in k)
    if not k:
        raise BoundsInvalid("bound vector must be nonempty")
    bad = [x for x in k if x < 2]
    if bad:
        raise BoundsInvalid(f"bound vector entries must be >= 2, got {bad[0]}")
    if r is not None and len(k) != r:
        raise LengthMismatch(f"bound vector has length {len(k)} but the coloring has {r} colors")
    return k


@dataclass(frozen=True, eq=False)
class EdgeColoring:
    """An assignment of a color in ``1..r`` to every edge of ``K_n``.

    Build instances with :func:`new_coloring`, :func:`cyclic_coloring` or
    :meth:`from_matrix`; the constructor itself trusts its ``colors`` array.
    ``distance_classes`` is set only for circulant colorings and lets the
    serializer emit the cyclic shorthand; it plays no part in equality.
    """

    n: int
    r: int
    colors: np.ndarray = field(repr=False)
    distance_classes: tuple[tuple[int, tuple[int, ...]], ...] | None = field(
        default=None, repr=False
    )

    def __post_init__(self):
        self.colors.setflags(write=False)

    def __eq__(self, other):
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return self.n == other.n and self.r == other.r and np.array_equal(self.colors, other.colors)

    __hash__ = None

    @classmethod
    def from_condensed(cls, n: int, r: int, colors, distance_classes=None) -> EdgeColoring:
        n, r = int(n), int(r)
        if n < 1:
            raise VertexOutOfRange(f"vertex count must be >= 1, got {n}")
        if not 1 <= r <= MAX_COLORS:
            raise ColorOutOfRange(f"color count must be in 1..{MAX_COLORS}, got {r}")
        arr = np.asarray(colors)
        if arr.shape != (num_pairs(n),):
            raise MissingEdge(f"expected {num_pairs(n)} edge colors for n={n}, got shape {arr.shape}")
        if arr.size and (arr.min() < 1 or arr.max() > r):
            pos = int(np.flatnonzero((arr < 1) | (arr > r))[0])
            u, v = _pair_at(n, pos)
            raise ColorOutOfRange(f"edge {{{u},{v}}} has color {int(arr[pos])}, outside 1..{r}")
        return cls(n, r, np.array(arr, dtype=np.uint8), distance_classes)

    @classmethod
    def from_matrix(cls, matrix, r: int | None = None) -> EdgeColoring:
        """Read the upper triangle of a square color matrix (diagonal ignored)."""
        mat = np.asarray(matrix)
        n = mat.shape[0]
        cond = condense(mat)
        if r is None:
            r = int(cond.max()) if cond.size else 1
        return cls.from_condensed(n, r, cond)

    def color(self, u: int, v: int) -> int:
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            raise VertexOutOfRange(f"no edge {{{u},{v}}} in K_{self.n}")
        return int(self.colors[pair_index(self.n, u, v)])

    def matrix(self) -> np.ndarray:
        """Full symmetric ``(n, n)`` uint8 matrix with 0 on the diagonal."""
        return expand(self.n, self.colors)

    def mask(self, color: int) -> np.ndarray:
        """Boolean adjacency matrix of the edges with the given color."""
        _check_color(self, color)
        return self.matrix() == color

    def edges(self):
        """Yield ``(u, v, color)`` for every edge, ``u < v``, in storage order."""
        pos = 0
        for u in range(self.n):
            for v in range(u + 1, self.n):
                yield u, v, int(self.colors[pos])
                pos += 1

    def edge_counts(self) -> np.ndarray:
        """Number of edges of each color; entry 0 is for color 1."""
        return np.bincount(self.colors, minlength=self.r + 1)[1 : self.r + 1]


def _pair_at(n: int, pos: int) -> tuple[int, int]:
    u = 0
    while pos >= n - u - 1:
        pos -= n - u - 1
        u += 1
    return u, u + 1 + pos


def _check_color(c: EdgeColoring, color: int):
    if not 1 <= color <= c.r:
        raise ColorOutOfRange(f"color {color} outside 1..{c.r}")


def new_coloring(n: int, r: int, edge_colors) -> EdgeColoring:
    """Build a validated coloring from explicit edges.

    ``edge_colors`` is either a mapping ``{(u, v): color}`` or an iterable of
    ``(u, v, color)`` triples. Every unordered pair must appear exactly once.
    """
    n, r = int(n), int(r)
    if n < 1:
        raise VertexOutOfRange(f"vertex count must be >= 1, got {n}")
    if not 1 <= r <= MAX_COLORS:
        raise ColorOutOfRange(f"color count must be in 1..{MAX_COLORS}, got {r}")
    items = edge_colors.items() if isinstance(edge_colors, Mapping) else edge_colors
    colors = np.zeros(num_pairs(n), dtype=np.uint8)
    for item in items:
        if isinstance(edge_colors, Mapping):
            (u, v), col = item
        else:
            u, v, col = item
        u, v, col = int(u), int(v), int(col)
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"pair {{{u},{v}}} is not an edge of K_{n}")
        if not 1 <= col <= r:
            raise ColorOutOfRange(f"edge {{{u},{v}}} has color {col}, outside 1..{r}")
        pos = pair_index(n, u, v)
        if colors[pos]:
            raise DuplicateEdge(f"edge {{{min(u, v)},{max(u, v)}}} given more than once")
        colors[pos] = col
    missing = np.flatnonzero(colors == 0)
    if missing.size:
        u, v = _pair_at(n, int(missing[0]))
        raise MissingEdge(f"edge {{{u},{v}}} has no color")
    return EdgeColoring(n, r, colors)


def _permutation_table(pi, r: int) -> np.ndarray:
    if isinstance(pi, Mapping):
        images = [pi.get(x) for x in range(1, r + 1)]
    else:
        images = list(pi)
    if len(images) != r or None in images or sorted(images) != list(range(1, r + 1)):
        raise NotAPermutation(f"{pi!r} is not a permutation of 1..{r}")
    table = np.zeros(r + 1, dtype=np.uint8)
    table[1:] = images
    return table


def relabel_colors(c: EdgeColoring, pi) -> EdgeColoring:
    """Apply a color permutation.

    ``pi`` maps old color to new color, given as a dict or as a sequence
    whose ``i``-th entry is the image of color ``i + 1``.
    """
    table = _permutation_table(pi, c.r)
    classes = None
    if c.distance_classes is not None:
        classes = tuple(sorted((int(table[col]), ds) for col, ds in c.distance_classes))
    return EdgeColoring(c.n, c.r, table[c.colors], classes)


def restrict(c: EdgeColoring, vertices: Iterable[int]) -> EdgeColoring:
    """Induced coloring on ``vertices``, renumbered ``0..m-1`` in increasing order."""
    subset = sorted({int(v) for v in vertices})
    if not subset:
        raise EmptySubset("cannot restrict to an empty vertex set")
    if subset[0] < 0 or subset[-1] >= c.n:
        bad = subset[0] if subset[0] < 0 else subset[-1]
        raise VertexOutOfRange(f"vertex {bad} outside 0..{c.n - 1}")
    idx = np.asarray(subset)
    return EdgeColoring(len(subset), c.r, condense(c.matrix()[np.ix_(idx, idx)]))


def cyclic_coloring(
    n: int, distance_classes: Mapping[int, Iterable[int]], r: int | None = None
) -> EdgeColoring:
    """Circulant coloring: edge ``{u, v}`` gets the color whose class holds
    ``min(|u - v|, n - |u - v|)``.

    The classes must partition ``{1, ..., n // 2}``. ``r`` defaults to the
    largest color named in ``distance_classes``.
    """
    n = int(n)
    if n < 1:
        raise VertexOutOfRange(f"vertex count must be >= 1, got {n}")
    classes = {int(col): sorted({int(d) for d in ds}) for col, ds in distance_classes.items()}
    if r is None:
        r = max(classes, default=1)
    for col in classes:
        if not 1 <= col <= r:
            raise ColorOutOfRange(f"distance class color {col} outside 1..{r}")
    if not 1 <= r <= MAX_COLORS:
        raise ColorOutOfRange(f"color count must be in 1..{MAX_COLORS}, got {r}")
    half = n // 2
    by_distance = np.zeros(half + 1, dtype=np.uint8)
    for col, ds in sorted(classes.items()):
        for d in ds:
            if not 1 <= d <= half:
                raise DistanceClassesNotAPartition(f"distance {d} outside 1..{half} for n={n}")
            if by_distance[d]:
                raise DistanceClassesNotAPartition(
                    f"distance {d} is in both color {by_distance[d]} and color {col}"
                )
            by_distance[d] = col
    missing = [d for d in range(1, half + 1) if not by_distance[d]]
    if missing:
        raise DistanceClassesNotAPartition(f"distance {missing[0]} has no color")
    offsets = np.arange(1, n)
    by_offset = by_distance[np.minimum(offsets, n - offsets)]
    colors = np.empty(num_pairs(n), dtype=np.uint8)
    pos = 0
    for u in range(n - 1):
        colors[pos : pos + n - u - 1] = by_offset[: n - u - 1]
        pos += n - u - 1
    frozen = tuple((col, tuple(ds)) for col, ds in sorted(classes.items()))
    return EdgeColoring(n, int(r), colors, frozen)


@dataclass(frozen=True, eq=False)
class ColorGraphView:
    """The simple graph formed by the edges of one color.

    ``bits`` holds one uint64 bitset row per vertex, so neighborhood
    intersection is a word-wise AND.
    """

    n: int
    color: int
    bits: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.bits.setflags(write=False)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((int(self.bits[u, v >> 6]) >> (v & 63)) & 1)

    def neighbors(self, v: int) -> frozenset[int]:
        row = np.unpackbits(self.bits[v].view(np.uint8), bitorder="little")[: self.n]
        return frozenset(int(x) for x in np.flatnonzero(row))

    def common_neighbors(self, vertices: Sequence[int]) -> frozenset[int]:
        acc = np.full(self.bits.shape[1], np.uint64(0xFFFFFFFFFFFFFFFF), dtype=np.uint64)
        for v in vertices:
            acc &= self.bits[v]
        row = np.unpackbits(acc.view(np.uint8), bitorder="little")[: self.n]
        return frozenset(int(x) for x in np.flatnonzero(row))

    def degrees(self) -> np.ndarray:
        return np.unpackbits(self.bits.view(np.uint8), axis=1, bitorder="little").sum(axis=1)

    def edge_count(self) -> int:
        return int(self.degrees().sum()) // 2

    def edges(self):
        for u in range(self.n):
            for v in sorted(self.neighbors(u)):
                if v > u:
                    yield u, v


def color_view(c: EdgeColoring, color: int) -> ColorGraphView:
    _check_color(c, color)
    return ColorGraphView(c.n, int(color), pack_adjacency(c.matrix() == color))
