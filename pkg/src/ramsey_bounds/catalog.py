"""Plain-text coloring files and the built-in seed catalog.

Format, version 1::

    ramsey-coloring 1
    n=5 r=2
    bounds=3,3                  (optional claimed bound vector)
    source=free text            (optional)
    cyclic 5; 1:1; 2:2          (either one cyclic line ...)
    edge 0 1 1                  (... or one line per edge, "edge u v color")

Blank lines and lines starting with ``#`` are ignored. Metadata must come
before the body.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

import numpy as np

from .coloring import EdgeColoring, _pair_at, cyclic_coloring, num_pairs, pair_index
from .errors import (
    BadHeader,
    BadVersion,
    ColorOutOfRange,
    DuplicateEdge,
    LengthMismatch,
    MissingEdge,
    ParseError,
    RamseyError,
    UnknownSeed,
    VertexOutOfRange,
)

FORMAT_NAME = "ramsey-coloring"
FORMAT_VERSION = 1
MAX_VERTICES = 20_000


@dataclass(frozen=True)
class Metadata:
    bounds: tuple[int, ...] | None = None
    source: str | None = None


def serialize(c: EdgeColoring, metadata: Metadata | None = None) -> str:
    metadata = metadata or Metadata()
    lines = [f"{FORMAT_NAME} {FORMAT_VERSION}", f"n={c.n} r={c.r}"]
    if metadata.bounds is not None:
        lines.append("bounds=" + ",".join(str(k) for k in metadata.bounds))
    if metadata.source is not None:
        lines.append("source=" + " ".join(metadata.source.split()))
    if c.distance_classes is not None:
        classes = "; ".join(f"{col}:{','.join(str(d) for d in ds)}" for col, ds in c.distance_classes)
        lines.append(f"cyclic {c.n}; {classes}" if classes else f"cyclic {c.n}")
    else:
        lines.extend(f"edge {u} {v} {col}" for u, v, col in c.edges())
    return "\n".join(lines) + "\n"


def _int(token: str, what: str, lineno: int) -> int:
    token = token.strip()
    if not token.isascii() or not (token.isdigit() or (token[:1] == "-" and token[1:].isdigit())):
        raise ParseError(f"{what}: expected an integer, got {token!r}", line=lineno)
    return int(token)


def _parse_cyclic(body: str, n: int, r: int, lineno: int) -> EdgeColoring:
    parts = [p.strip() for p in body.split(";")]
    head = parts[0].split()
    if len(head) != 2 or head[0] != "cyclic":
        raise ParseError(f"expected 'cyclic <n>; color:d1,d2; ...', got {body!r}", line=lineno)
    if _int(head[1], "cyclic vertex count", lineno) != n:
        raise ParseError(f"cyclic vertex count {head[1]} does not match n={n}", line=lineno)
    classes = {}
    for part in parts[1:]:
        if not part:
            continue
        col_text, sep, dist_text = part.partition(":")
        if not sep:
            raise ParseError(f"expected 'color:d1,d2,...', got {part!r}", line=lineno)
        col = _int(col_text, "color", lineno)
        if col in classes:
            raise ParseError(f"color {col} listed twice", line=lineno)
        dists = [_int(d, "distance", lineno) for d in dist_text.split(",") if d.strip()]
        classes[col] = dists
    try:
        return cyclic_coloring(n, classes, r=r)
    except RamseyError as err:
        raise type(err)(str(err), line=lineno) from None


def parse(text) -> tuple[EdgeColoring, Metadata]:
    """Parse a coloring file; every failure is a RamseyError carrying a line number."""
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("utf-8")
        except UnicodeDecodeError as err:
            raise ParseError(f"file is not UTF-8 ({err.reason})") from None
    numbered = [
        (i, line.strip())
        for i, line in enumerate(text.splitlines(), 1)
        if line.strip() and not line.strip().startswith("#")
    ]
    if not numbered:
        raise BadHeader("empty file", line=1)
    lineno, header = numbered[0]
    tokens = header.split()
    if not tokens or tokens[0] != FORMAT_NAME:
        raise BadHeader(f"expected '{FORMAT_NAME} {FORMAT_VERSION}', got {header!r}", line=lineno)
    if len(tokens) != 2 or tokens[1] != str(FORMAT_VERSION):
        raise BadVersion(f"unsupported version in {header!r}", line=lineno)
    if len(numbered) < 2:
        raise ParseError("missing 'n=<int> r=<int>' line", line=lineno + 1)
    lineno, size_line = numbered[1]
    fields = dict(tok.partition("=")[::2] for tok in size_line.split())
    if set(fields) != {"n", "r"} or len(size_line.split()) != 2:
        raise ParseError(f"expected 'n=<int> r=<int>', got {size_line!r}", line=lineno)
    n = _int(fields["n"], "n", lineno)
    r = _int(fields["r"], "r", lineno)
    if not 1 <= n <= MAX_VERTICES:
        raise VertexOutOfRange(f"n={n} outside 1..{MAX_VERTICES}", line=lineno)
    if not 1 <= r <= 255:
        raise ColorOutOfRange(f"r={r} outside 1..255", line=lineno)

    bounds = source = None
    rest = numbered[2:]
    while rest and rest[0][1].split("=", 1)[0] in ("bounds", "source"):
        lineno, line = rest.pop(0)
        key, _, value = line.partition("=")
        if key == "source":
            source = value.strip()
            continue
        bounds = tuple(_int(x, "bound", lineno) for x in value.split(","))
        if len(bounds) != r:
            raise LengthMismatch(f"{len(bounds)} bounds for r={r} colors", line=lineno)

    if len(rest) == 1 and rest[0][1].startswith("cyclic"):
        lineno, line = rest[0]
        return _parse_cyclic(line, n, r, lineno), Metadata(bounds, source)

    colors = np.zeros(num_pairs(n), dtype=np.uint8)
    for lineno, line in rest:
        tokens = line.split()
        if tokens[0] == "cyclic":
            raise ParseError("a cyclic line cannot be combined with other body lines", line=lineno)
        if tokens[0] != "edge" or len(tokens) != 4:
            raise ParseError(f"expected 'edge u v color', got {line!r}", line=lineno)
        u, v, col = (_int(tok, "edge field", lineno) for tok in tokens[1:])
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"pair {{{u},{v}}} is not an edge of K_{n}", line=lineno)
        if not 1 <= col <= r:
            raise ColorOutOfRange(f"edge {{{u},{v}}} has color {col}, outside 1..{r}", line=lineno)
        pos = pair_index(n, u, v)
        if colors[pos]:
            raise DuplicateEdge(f"edge {{{min(u, v)},{max(u, v)}}} given more than once", line=lineno)
        colors[pos] = col
    missing = np.flatnonzero(colors == 0)
    if missing.size:
        u, v = _pair_at(n, int(missing[0]))
        last = rest[-1][0] if rest else numbered[-1][0]
        raise MissingEdge(f"edge {{{u},{v}}} has no color", line=last)
    return EdgeColoring(n, r, colors), Metadata(bounds, source)


def read_coloring(path) -> tuple[EdgeColoring, Metadata]:
    with open(path, "rb") as fh:
        return parse(fh.read())


def write_coloring(path, c: EdgeColoring, metadata: Metadata | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(c, metadata))


SEEDS = ("c5", "wagner8", "qr13", "cr13", "qr17")


def seed_text(name: str) -> str:
    if name not in SEEDS:
        raise UnknownSeed(f"no seed named {name!r}; known seeds: {', '.join(SEEDS)}")
    return resources.files("ramsey_bounds").joinpath("data", "seeds", f"{name}.txt").read_text("utf-8")


def seed(name: str) -> tuple[EdgeColoring, tuple[int, ...]]:
    """A shipped coloring and the bound vector it is declared to satisfy."""
    c, meta = parse(seed_text(name))
    return c, meta.bounds


def seed_metadata(name: str) -> Metadata:
    return parse(seed_text(name))[1]
