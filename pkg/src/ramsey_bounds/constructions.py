"""The copy-blowup and block-matrix lower-bound constructions.

Both take a base coloring plus the clique-bound vector it is claimed to
satisfy and return a larger coloring with the bound vector the construction
promises. Claims are recorded, not trusted: certify them with
:func:`ramsey_bounds.verifier.verify`.

Output vertex ``copy * base.n + v`` is vertex ``v`` of copy ``copy``.
"""

from __future__ import annotations

import enum
from collections.abc import Mapping
from dataclasses import dataclass, field

import numpy as np

from .coloring import MAX_COLORS, EdgeColoring, check_bounds, num_pairs
from .errors import (
    BoundsInvalid,
    ColorOutOfRange,
    EmptyBase,
    K1TooSmall,
    LengthMismatch,
    StretchedColorInvalid,
    TooFewBaseColors,
    TTooSmall,
    VertexOutOfRange,
)

BLANK = 0


@dataclass(frozen=True)
class ConstructionResult:
    coloring: EdgeColoring
    claimed_bounds: tuple[int, ...]
    provenance: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.coloring.r != len(self.claimed_bounds):
            raise LengthMismatch(
                f"{self.coloring.r} colors but {len(self.claimed_bounds)} claimed bounds"
            )


@dataclass(frozen=True)
class IncidenceReinterpretation:
    """A base coloring re-read as a symmetric matrix with new symbols.

    Off-diagonal cell ``(u, v)`` reads ``substitution[base color of {u, v}]``
    and every diagonal cell reads ``diagonal_color``. Symbol 0 is the blank.
    """

    base: EdgeColoring
    substitution: Mapping[int, int]
    diagonal_color: int
    r: int

    def __post_init__(self):
        for col in range(1, self.base.r + 1):
            if col not in self.substitution:
                raise ColorOutOfRange(f"substitution does not cover base color {col}")
        for sym in [self.diagonal_color, *self.substitution.values()]:
            if not 0 <= sym <= self.r:
                raise ColorOutOfRange(f"symbol {sym} outside 0..{self.r}")

    def lookup(self) -> np.ndarray:
        table = np.zeros(self.base.r + 1, dtype=np.uint8)
        for col, sym in self.substitution.items():
            table[col] = sym
        return table

    def matrix(self) -> np.ndarray:
        """The full ``(n, n)`` symbol matrix."""
        mat = self.lookup()[self.base.matrix()]
        np.fill_diagonal(mat, self.diagonal_color)
        return mat


def apply_reinterpretation(rein: IncidenceReinterpretation, u: int, v: int) -> int:
    n = rein.base.n
    if not (0 <= u < n and 0 <= v < n):
        raise VertexOutOfRange(f"cell ({u},{v}) outside 0..{n - 1}")
    if u == v:
        return rein.diagonal_color
    return int(rein.substitution[rein.base.color(u, v)])


class Role(enum.Enum):
    A = "A"
    B = "B"
    C = "C"


@dataclass(frozen=True)
class BlockRecipe:
    """Layout of the ``(t+1) x (t+1)`` block matrix, blocks numbered from 1.

    Row 2 is ``B A``; rows 3 and beyond start ``C C`` and continue with
    ``B`` up to the diagonal ``A``.
    """

    t: int

    @property
    def size(self) -> int:
        return self.t + 1

    def role(self, i: int, j: int) -> Role:
        if not (1 <= i <= self.size and 1 <= j <= self.size):
            raise VertexOutOfRange(f"block ({i},{j}) outside 1..{self.size}")
        if i < j:
            i, j = j, i
        if i == j:
            return Role.A
        if j <= 2:
            return Role.B if i == 2 else Role.C
        return Role.B

    def lower_triangle(self) -> dict[tuple[int, int], Role]:
        return {(i, j): self.role(i, j) for i in range(2, self.size + 1) for j in range(1, i)}


def _assemble(n: int, copies: int, diagonal: np.ndarray, off) -> np.ndarray:
    """Condensed colors of a block matrix built from ``copies`` copies.

    ``diagonal`` is the ``(n, n)`` block shared by all copies; ``off(p, q)``
    for ``p > q`` (0-based) returns the block whose rows are copy ``p``.
    """
    total = n * copies
    out = np.empty(num_pairs(total), dtype=np.uint8)
    cache = {}
    transposed = {}
    for p in range(copies):
        for q in range(p):
            block = off(p, q)
            if id(block) not in cache:
                cache[id(block)] = (block, np.ascontiguousarray(block.T))
            transposed[(p, q)] = cache[id(block)][1]
    pos = 0
    for q in range(copies):
        tails = [transposed[(p, q)] for p in range(q + 1, copies)]
        for a in range(n):
            m = n - a - 1
            out[pos : pos + m] = diagonal[a, a + 1 :]
            pos += m
            for tail in tails:
                out[pos : pos + n] = tail[a]
                pos += n
    return out


def theorem1_construct(base: EdgeColoring, base_bounds, k1: int) -> ConstructionResult:
    """Blow up ``base`` into ``k1 - 1`` copies joined by a fresh color.

    Base color ``j`` becomes output color ``j + 1``; every edge between
    different copies gets color 1. Claimed bounds are ``(k1, *base_bounds)``.
    """
    k1 = int(k1)
    if k1 < 3:
        raise K1TooSmall(f"theorem 1 requires k1 >= 3, got k1={k1}")
    if base is None or base.n < 1:
        raise EmptyBase("theorem 1 needs a nonempty base coloring")
    base_bounds = check_bounds(base_bounds, base.r)
    if min(base_bounds) < 3:
        raise BoundsInvalid(f"theorem 1 requires every base bound >= 3, got {base_bounds}")
    if base.r + 1 > MAX_COLORS:
        raise ColorOutOfRange(f"output would need {base.r + 1} colors")
    copies = k1 - 1
    diagonal = base.matrix() + np.uint8(1)
    cross = np.ones((base.n, base.n), dtype=np.uint8)
    colors = _assemble(base.n, copies, diagonal, lambda p, q: cross)
    coloring = EdgeColoring(base.n * copies, base.r + 1, colors)
    return ConstructionResult(
        coloring,
        (k1, *base_bounds),
        {
            "theorem": 1,
            "k1": k1,
            "base_n": base.n,
            "base_bounds": base_bounds,
            "color_map": {j: j + 1 for j in range(1, base.r + 1)},
        },
    )


def theorem2_color_map(base_r: int, stretched: int) -> dict[int, int]:
    """Output color of each base color: stretched goes to 3, the rest fill 2, 4, 5, ..."""
    slots = iter([2, *range(4, base_r + 2)])
    return {col: 3 if col == stretched else next(slots) for col in range(1, base_r + 1)}


def reinterpretations(base: EdgeColoring, stretched: int) -> dict[Role, IncidenceReinterpretation]:
    """The A, B and C readings of ``base`` used by :func:`theorem2_construct`."""
    r = base.r + 1
    cmap = theorem2_color_map(base.r, stretched)
    b_sub = dict(cmap)
    b_sub[stretched] = 1
    return {
        Role.A: IncidenceReinterpretation(base, cmap, BLANK, r),
        Role.B: IncidenceReinterpretation(base, b_sub, 3, r),
        Role.C: IncidenceReinterpretation(base, cmap, 1, r),
    }


def theorem2_construct(base: EdgeColoring, base_bounds, t: int, stretched_color: int) -> ConstructionResult:
    """Arrange ``t + 1`` reinterpreted copies of ``base`` in the block pattern.

    Output colors: 1 is new (bound ``t``), 3 is the stretched base color (bound
    grows from ``m`` to ``m + t - 1``), and the other base colors keep their
    bounds on colors 2, 4, 5, ... in base order.
    """
    t = int(t)
    if t < 3:
        raise TTooSmall(f"theorem 2 requires t >= 3, got t={t}")
    if base.r < 2:
        raise TooFewBaseColors(f"theorem 2 needs a base with at least 2 colors, got {base.r}")
    if base.r + 1 > MAX_COLORS:
        raise ColorOutOfRange(f"output would need {base.r + 1} colors")
    base_bounds = check_bounds(base_bounds, base.r)
    s = int(stretched_color)
    if not 1 <= s <= base.r:
        raise StretchedColorInvalid(f"stretched color {s} outside 1..{base.r}")
    others = [k for col, k in enumerate(base_bounds, 1) if col != s]
    if min(others) < 3:
        raise BoundsInvalid(f"theorem 2 requires every non-stretched base bound >= 3, got {base_bounds}")

    recipe = BlockRecipe(t)
    blocks = {role: rein.matrix() for role, rein in reinterpretations(base, s).items()}
    colors = _assemble(
        base.n, recipe.size, blocks[Role.A], lambda p, q: blocks[recipe.role(p + 1, q + 1)]
    )
    cmap = theorem2_color_map(base.r, s)
    claimed = [0] * (base.r + 1)
    claimed[0] = t
    for col, k in enumerate(base_bounds, 1):
        claimed[cmap[col] - 1] = k + t - 1 if col == s else k
    coloring = EdgeColoring(base.n * recipe.size, base.r + 1, colors)
    return ConstructionResult(
        coloring,
        tuple(claimed),
        {
            "theorem": 2,
            "t": t,
            "stretched": s,
            "base_n": base.n,
            "base_bounds": base_bounds,
            "color_map": cmap,
        },
    )
