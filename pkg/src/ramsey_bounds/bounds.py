"""Lower-bound derivation over a table of known Ramsey bounds.

A fact ``R(k_1, ..., k_r) >= L`` is stored with its vector sorted ascending,
since Ramsey numbers are symmetric in their arguments. :func:`derive` closes
a table under the two product formulas

    R(k1, rest)          >= (k1 - 1) * (R(rest) - 1) + 1
    R(k1, k2, rest)      >= (k1 + 1) * (R(k2 - k1 + 1, rest) - 1) + 1    (k1 < k2)

plus the reductions ``R(2, rest) = R(rest)`` and ``R(k) = k``, and returns
the best bound with a full derivation tree. All arithmetic is integer.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from pathlib import Path

from .coloring import EdgeColoring, cyclic_coloring, relabel_colors, restrict
from .constructions import ConstructionResult, theorem1_construct, theorem2_construct
from .errors import InvalidBound, MissingWitness, NoBoundDerivable, ParseError, TargetInvalid

SINGLE_COLOR = "single-color"
DROP_TWO = "drop-2"


@dataclass(frozen=True)
class TableEntry:
    source: str


@dataclass(frozen=True)
class VerifiedConstruction:
    reference: str


@dataclass(frozen=True)
class TrivialReduction:
    rule: str
    sub: BoundFact | None = None


@dataclass(frozen=True)
class Theorem1Step:
    k1: int
    sub: BoundFact


@dataclass(frozen=True)
class Theorem2Step:
    k1: int
    k2: int
    sub: BoundFact


_RANK = {TableEntry: 0, VerifiedConstruction: 1, TrivialReduction: 2, Theorem1Step: 3, Theorem2Step: 4}


@dataclass(frozen=True)
class BoundFact:
    """The claim ``R(vector) >= lower_bound``, i.e. a good coloring on
    ``lower_bound - 1`` vertices exists."""

    vector: tuple[int, ...]
    lower_bound: int
    provenance: object = field(compare=False)

    @property
    def sub(self) -> BoundFact | None:
        return getattr(self.provenance, "sub", None)

    @property
    def depth(self) -> int:
        return 0 if self.sub is None else 1 + self.sub.depth

    def provenance_key(self) -> tuple:
        p = self.provenance
        if isinstance(p, TableEntry):
            params = (p.source,)
        elif isinstance(p, VerifiedConstruction):
            params = (p.reference,)
        elif isinstance(p, TrivialReduction):
            params = (p.rule,)
        elif isinstance(p, Theorem1Step):
            params = (p.k1,)
        else:
            params = (p.k1, p.k2)
        return (_RANK[type(p)], params)

    def recompute(self) -> int:
        """Recompute the bound from the child fact; leaves return their own value."""
        p = self.provenance
        if isinstance(p, Theorem1Step):
            return (p.k1 - 1) * (p.sub.lower_bound - 1) + 1
        if isinstance(p, Theorem2Step):
            return (p.k1 + 1) * (p.sub.lower_bound - 1) + 1
        if isinstance(p, TrivialReduction):
            if p.rule == SINGLE_COLOR:
                return self.vector[0]
            return p.sub.lower_bound
        return self.lower_bound


@dataclass(frozen=True)
class DerivationTree:
    root: BoundFact

    @property
    def vector(self) -> tuple[int, ...]:
        return self.root.vector

    @property
    def lower_bound(self) -> int:
        return self.root.lower_bound

    def nodes(self):
        fact = self.root
        while fact is not None:
            yield fact
            fact = fact.sub

    def check(self) -> None:
        """Raise InvalidBound unless every node's bound and vector follow from its child."""
        for fact in self.nodes():
            if fact.recompute() != fact.lower_bound:
                raise InvalidBound(f"R{_fmt(fact.vector)} >= {fact.lower_bound} does not recompute")
            p = fact.provenance
            if isinstance(p, Theorem1Step):
                expected = _remove(fact.vector, p.k1)
            elif isinstance(p, Theorem2Step):
                expected = tuple(sorted(_remove(_remove(fact.vector, p.k1), p.k2) + (p.k2 - p.k1 + 1,)))
            elif isinstance(p, TrivialReduction) and p.rule == DROP_TWO:
                expected = _remove(fact.vector, 2)
            else:
                continue
            if fact.sub.vector != expected:
                raise InvalidBound(f"child of R{_fmt(fact.vector)} has vector {fact.sub.vector}")


def _fmt(vector) -> str:
    return "(" + ",".join(str(k) for k in vector) + ")"


def _remove(vector: tuple[int, ...], value: int) -> tuple[int, ...]:
    i = vector.index(value)
    return vector[:i] + vector[i + 1 :]


def parse_table(text: str, source: str = "table") -> list[BoundFact]:
    """Parse ``k1,k2,...,kr;L`` lines. ``#`` starts a comment; a trailing
    comment becomes the fact's source tag."""
    facts = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body, _, comment = raw.partition("#")
        body = body.strip()
        if not body:
            continue
        vec_part, sep, bound_part = body.partition(";")
        if not sep:
            raise ParseError(f"expected 'k1,...,kr;L', got {body!r}", line=lineno)
        try:
            vector = tuple(int(x) for x in vec_part.split(","))
            bound = int(bound_part)
        except ValueError:
            raise ParseError(f"expected integers in {body!r}", line=lineno) from None
        if any(k < 2 for k in vector):
            raise InvalidBound(f"vector entries must be >= 2 in {body!r}", line=lineno)
        if bound < 2:
            raise InvalidBound(f"lower bound must be >= 2 in {body!r}", line=lineno)
        tag = comment.strip() or f"{source}:{lineno}"
        facts.append(BoundFact(tuple(sorted(vector)), bound, TableEntry(tag)))
    return facts


def load_table(path) -> list[BoundFact]:
    """Read a table from a filesystem path or an importlib resource."""
    if isinstance(path, str):
        path = Path(path)
    return parse_table(path.read_text(encoding="utf-8"), source=path.name)


def facts_from_witnesses(store: Mapping[tuple[int, ...], EdgeColoring]) -> list[BoundFact]:
    """One VerifiedConstruction fact per stored witness (``n`` vertices gives ``n + 1``).

    Callers are responsible for having verified the witnesses.
    """
    return [
        BoundFact(tuple(sorted(vec)), c.n + 1, VerifiedConstruction(f"witness{_fmt(sorted(vec))}"))
        for vec, c in store.items()
    ]


@dataclass(frozen=True)
class DeriveOptions:
    theorem1: bool = True
    theorem2: bool = True
    memoize: bool = True


def _choose(candidates: list[BoundFact]) -> BoundFact | None:
    if not candidates:
        return None
    return min(candidates, key=lambda f: (-f.lower_bound, f.depth, f.provenance_key()))


def derive(target: Iterable[int], table: Iterable[BoundFact], options: DeriveOptions | None = None) -> DerivationTree:
    """Best lower bound for ``target`` reachable from ``table``.

    Ties go to the shallower tree, then the smaller provenance. Raises
    NoBoundDerivable when no leaf is reachable.
    """
    options = options or DeriveOptions()
    target = tuple(int(k) for k in target)
    if not target or any(k < 2 for k in target):
        raise TargetInvalid(f"target entries must be >= 2, got {target}")
    vector = tuple(sorted(target))

    known: dict[tuple[int, ...], BoundFact] = {}
    for fact in table:
        vec = tuple(sorted(fact.vector))
        if vec != fact.vector:
            fact = BoundFact(vec, fact.lower_bound, fact.provenance)
        prev = known.get(vec)
        known[vec] = fact if prev is None else _choose([prev, fact])

    memo: dict[tuple[int, ...], BoundFact | None] = {}

    def best(vec):
        if options.memoize and vec in memo:
            return memo[vec]
        cands = []
        if vec in known:
            cands.append(known[vec])
        if len(vec) == 1:
            cands.append(BoundFact(vec, vec[0], TrivialReduction(SINGLE_COLOR)))
        if len(vec) >= 2 and vec[0] == 2:
            sub = best(vec[1:])
            if sub is not None:
                cands.append(BoundFact(vec, sub.lower_bound, TrivialReduction(DROP_TWO, sub)))
        if len(vec) >= 3 and vec[0] >= 3:
            values = sorted(set(vec))
            if options.theorem1:
                for k1 in values:
                    sub = best(_remove(vec, k1))
                    if sub is not None:
                        bound = (k1 - 1) * (sub.lower_bound - 1) + 1
                        cands.append(BoundFact(vec, bound, Theorem1Step(k1, sub)))
            if options.theorem2:
                for k1 in values:
                    for k2 in values:
                        if k2 <= k1:
                            continue
                        rest = _remove(_remove(vec, k1), k2)
                        sub = best(tuple(sorted(rest + (k2 - k1 + 1,))))
                        if sub is not None:
                            bound = (k1 + 1) * (sub.lower_bound - 1) + 1
                            cands.append(BoundFact(vec, bound, Theorem2Step(k1, k2, sub)))
        result = _choose(cands)
        if options.memoize:
            memo[vec] = result
        return result

    root = best(vector)
    if root is None:
        raise NoBoundDerivable(f"no derivation of a bound for R{_fmt(vector)} from the table")
    return DerivationTree(root)


def _describe(fact: BoundFact) -> str:
    p = fact.provenance
    if isinstance(p, TableEntry):
        return f"table: {p.source}"
    if isinstance(p, VerifiedConstruction):
        return f"verified construction: {p.reference}"
    if isinstance(p, TrivialReduction):
        if p.rule == SINGLE_COLOR:
            return f"one color: R({fact.vector[0]}) = {fact.vector[0]}"
        return f"drop a 2: R{_fmt(fact.vector)} = R{_fmt(p.sub.vector)}"
    if isinstance(p, Theorem1Step):
        return f"theorem 1, k1={p.k1}: ({p.k1}-1)*({p.sub.lower_bound}-1)+1 = {fact.lower_bound}"
    return (
        f"theorem 2, k1={p.k1}, k2={p.k2}: "
        f"({p.k1}+1)*({p.sub.lower_bound}-1)+1 = {fact.lower_bound}"
    )


def explain(tree: DerivationTree) -> str:
    """One line per derivation step, children indented two spaces deeper."""
    lines = []
    for depth, fact in enumerate(tree.nodes()):
        lines.append(f"{'  ' * depth}R{_fmt(fact.vector)} >= {fact.lower_bound}  [{_describe(fact)}]")
    return "\n".join(lines)


_LINE = re.compile(r"^(?P<indent> *)R\((?P<vec>[\d,]+)\) >= (?P<bound>\d+)  \[(?P<why>.*)\]$")
_ARITH = re.compile(r"\((\d+)([-+])1\)\*\((\d+)-1\)\+1 = (\d+)$")


def recheck_explanation(text: str) -> bool:
    """Re-parse :func:`explain` output and redo each step's arithmetic."""
    rows = [_LINE.match(line) for line in text.splitlines()]
    if not rows or any(m is None for m in rows):
        return False
    for i, m in enumerate(rows):
        arith = _ARITH.search(m["why"])
        if arith is None:
            continue
        k, sign, sub, total = int(arith[1]), arith[2], int(arith[3]), int(arith[4])
        factor = k - 1 if sign == "-" else k + 1
        if factor * (sub - 1) + 1 != total or total != int(m["bound"]):
            return False
        if i + 1 >= len(rows) or int(rows[i + 1]["bound"]) != sub:
            return False
    return True


def sort_colors(result: ConstructionResult) -> ConstructionResult:
    """Relabel colors so the claimed bounds are ascending (stable)."""
    claimed = result.claimed_bounds
    order = sorted(range(len(claimed)), key=lambda i: (claimed[i], i))
    pi = [order.index(i) + 1 for i in range(len(claimed))]
    return ConstructionResult(
        relabel_colors(result.coloring, pi), tuple(sorted(claimed)), result.provenance
    )


def _single_color_witness(k: int) -> EdgeColoring:
    # K_{k-1} in one color; K_1 for k = 2
    return cyclic_coloring(k - 1, {1: range(1, (k - 1) // 2 + 1)}, r=1)


def _add_absent_color(c: EdgeColoring) -> EdgeColoring:
    return EdgeColoring(c.n, c.r + 1, c.colors + 1)


def materialize(tree: DerivationTree, witness_store: Mapping[tuple[int, ...], EdgeColoring]) -> ConstructionResult:
    """Build the explicit coloring on ``L - 1`` vertices that ``tree`` describes.

    Leaf facts from a table need a coloring in ``witness_store`` keyed by the
    sorted vector, with colors in that sorted order. A witness larger than
    needed is cut down to its first ``L - 1`` vertices.
    """
    store = {tuple(sorted(k)): v for k, v in witness_store.items()}

    def build(fact: BoundFact) -> ConstructionResult:
        p = fact.provenance
        need = fact.lower_bound - 1
        if isinstance(p, (TableEntry, VerifiedConstruction)):
            c = store.get(fact.vector)
            if c is None:
                raise MissingWitness(f"no stored coloring for leaf R{_fmt(fact.vector)} >= {fact.lower_bound}")
            if c.r != len(fact.vector) or c.n < need:
                raise MissingWitness(
                    f"stored coloring for R{_fmt(fact.vector)} has n={c.n}, r={c.r}; "
                    f"need n >= {need}, r = {len(fact.vector)}"
                )
            if c.n > need:
                c = restrict(c, range(need))
            return ConstructionResult(c, fact.vector, {"leaf": p})
        if isinstance(p, TrivialReduction):
            if p.rule == SINGLE_COLOR:
                return ConstructionResult(_single_color_witness(fact.vector[0]), fact.vector, {"leaf": p})
            sub = build(p.sub)
            return ConstructionResult(_add_absent_color(sub.coloring), (2, *sub.claimed_bounds), {"step": p.rule})
        sub = build(p.sub)
        if isinstance(p, Theorem1Step):
            res = theorem1_construct(sub.coloring, sub.claimed_bounds, p.k1)
        else:
            stretched = sub.claimed_bounds.index(p.k2 - p.k1 + 1) + 1
            res = theorem2_construct(sub.coloring, sub.claimed_bounds, p.k1, stretched)
        return sort_colors(res)

    result = build(tree.root)
    return ConstructionResult(result.coloring, result.claimed_bounds, {"derivation": explain(tree)})
