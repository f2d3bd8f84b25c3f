"""Exact monochromatic clique search and Ramsey-coloring certification."""

from __future__ import annotations

import enum
import itertools
import math
import time
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .coloring import EdgeColoring, _check_color, _pair_at, check_bounds
from .errors import BudgetExceeded, InstanceTooLargeForOracle, LengthMismatch

ORACLE_CAP = 2_000_000


class Status(enum.Enum):
    CERTIFIED = "certified"
    COUNTEREXAMPLE = "counterexample"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class ColorResult:
    color: int
    k: int
    status: Status
    witness: tuple[int, ...] | None = None
    nodes: int = 0
    elapsed: float = 0.0


@dataclass(frozen=True)
class VerificationReport:
    bounds: tuple[int, ...]
    per_color: tuple[ColorResult, ...] = field(default_factory=tuple)

    @property
    def certified(self) -> bool:
        """True iff no color contains its forbidden clique."""
        return all(res.status is Status.CERTIFIED for res in self.per_color)

    @property
    def counterexamples(self) -> list[ColorResult]:
        return [res for res in self.per_color if res.status is Status.COUNTEREXAMPLE]


def _ordered_adjacency(c: EdgeColoring, color: int):
    mask = c.mask(color)
    degree = mask.sum(axis=1)
    # descending color-degree, ties by vertex index
    perm = np.argsort(-degree, kind="stable")
    return _kernels.pack_adjacency(mask[np.ix_(perm, perm)]), perm, mask


def _search(c, color, k_stop, best_init, budget):
    adj, perm, _ = _ordered_adjacency(c, color)
    best, witness, nodes, complete = _kernels.bb_clique_search(
        adj, int(k_stop), int(best_init), -1 if budget is None else int(budget)
    )
    found = None
    if best > best_init:
        found = sorted(int(perm[v]) for v in witness[:best])
    return int(best), found, int(nodes), bool(complete)


def _trivial_clique(c: EdgeColoring, color: int, k: int):
    """Handle k <= 2 and k > n without search; return (handled, answer)."""
    if k <= 0:
        return True, []
    if k > c.n:
        return True, None
    if k == 1:
        return True, [0]
    if k == 2:
        hit = np.flatnonzero(c.colors == color)
        if not hit.size:
            return True, None
        return True, list(_pair_at(c.n, int(hit[0])))
    return False, None


def find_mono_clique(c: EdgeColoring, color: int, k: int, budget: int | None = None):
    """Return the vertices of some ``k``-clique in ``color``, or None if none exists.

    Exact. ``k = 0`` yields ``[]``, ``k = 1`` any vertex, ``k = 2`` any edge of
    the color. With a node ``budget`` the search raises BudgetExceeded rather
    than guess.
    """
    _check_color(c, color)
    handled, answer = _trivial_clique(c, color, k)
    if handled:
        return answer
    _, found, nodes, complete = _search(c, color, k, k - 1, budget)
    if not complete:
        raise BudgetExceeded(f"color {color}, K{k}: node budget {budget} exhausted after {nodes} nodes")
    return found


def _verify_color(c, color, k, budget):
    start = time.perf_counter()
    handled, answer = _trivial_clique(c, color, k)
    nodes = 0
    complete = True
    if not handled:
        _, answer, nodes, complete = _search(c, color, k, k - 1, budget)
    elapsed = time.perf_counter() - start
    if answer is not None:
        return ColorResult(color, k, Status.COUNTEREXAMPLE, tuple(answer), nodes, elapsed)
    if not complete:
        return ColorResult(color, k, Status.INCONCLUSIVE, None, nodes, elapsed)
    return ColorResult(color, k, Status.CERTIFIED, None, nodes, elapsed)


def verify(c: EdgeColoring, bounds, budget: int | None = None) -> VerificationReport:
    """Check every color ``i`` for a monochromatic ``K_{bounds[i-1]}``.

    ``budget`` caps search nodes per color; running out gives INCONCLUSIVE,
    never CERTIFIED.
    """
    bounds = tuple(int(x) for x in bounds)
    if len(bounds) != c.r:
        raise LengthMismatch(f"bound vector has length {len(bounds)} but the coloring has {c.r} colors")
    check_bounds(bounds)
    results = tuple(_verify_color(c, i + 1, k, budget) for i, k in enumerate(bounds))
    return VerificationReport(bounds, results)


def max_mono_clique(c: EdgeColoring, color: int) -> tuple[int, list[int]]:
    """Exact maximum clique in one color class.

    By convention a color with no edges reports size 0 and an empty witness.
    """
    _check_color(c, color)
    if not np.any(c.colors == color):
        return 0, []
    best, found, _, _ = _search(c, color, c.n + 1, 0, None)
    return best, found


def naive_mono_clique(c: EdgeColoring, color: int, k: int, cap: int = ORACLE_CAP):
    """Brute-force oracle: scan all ``k``-subsets in lexicographic order."""
    _check_color(c, color)
    if k <= 0:
        return []
    if k > c.n:
        return None
    total = math.comb(c.n, k)
    if total > cap:
        raise InstanceTooLargeForOracle(f"C({c.n},{k}) = {total} subsets exceeds the cap of {cap}")
    mat = c.matrix()
    for subset in itertools.combinations(range(c.n), k):
        if all(mat[u, v] == color for u, v in itertools.combinations(subset, 2)):
            return list(subset)
    return None


def is_mono_clique(c: EdgeColoring, color: int, vertices) -> bool:
    """Re-check a witness directly against the coloring."""
    vertices = list(vertices)
    if len(set(vertices)) != len(vertices):
        return False
    if any(not 0 <= v < c.n for v in vertices):
        return False
    return all(c.color(u, v) == color for u, v in itertools.combinations(vertices, 2))
