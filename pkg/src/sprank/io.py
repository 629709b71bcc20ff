"""Text/JSON pattern formats and DOT export.

The text format (``.spm``) is a header line "n m" followed by n rows of m
tokens, ``*`` for a star and ``0`` (or ``.``) for a zero.  Lines starting
with ``#`` are comments.  All serialized indices are 1-based to match the
row/column labels used in documentation.
"""

from __future__ import annotations

import json

from .errors import NotSubsetError, ParseError
from .pattern import BipartiteGraph, Matching, SparsityPattern, pattern_from_stars

_PALETTE = ["red", "green", "blue", "orange", "purple", "brown", "cyan", "magenta"]


def parse_text(src: str) -> SparsityPattern:
    """Parse the .spm text format."""
    rows: list[tuple[int, str]] = []
    for lineno, raw in enumerate(src.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        rows.append((lineno, stripped))
    if not rows:
        raise ParseError("empty document")
    header_line, header = rows[0]
    parts = header.split()
    if len(parts) != 2:
        raise ParseError("header must be 'n m'", line=header_line)
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError("header must contain two integers", line=header_line)
    if len(rows) - 1 < n:
        raise ParseError(f"missing row: expected {n} rows, found {len(rows) - 1}")
    if len(rows) - 1 > n:
        raise ParseError(f"too many rows: expected {n}, found {len(rows) - 1}")
    stars = []
    for r, (lineno, line) in enumerate(rows[1:], start=1):
        tokens = line.split()
        if len(tokens) != m:
            raise ParseError(
                f"expected {m} entries, found {len(tokens)}", line=lineno
            )
        for c, tok in enumerate(tokens, start=1):
            if tok == "*":
                stars.append((r, c))
            elif tok in ("0", "."):
                continue
            else:
                raise ParseError(f"unexpected token {tok!r}", line=lineno, column=c)
    return pattern_from_stars(n, m, stars)


def serialize_text(p: SparsityPattern) -> str:
    lines = [f"{p.n} {p.m}"]
    stars = p.stars
    for i in range(p.n):
        lines.append(" ".join("*" if (i, j) in stars else "0" for j in range(p.m)))
    return "\n".join(lines) + "\n"


def parse_json(src: str) -> SparsityPattern:
    """Parse {"n": ..., "m": ..., "stars": [[row, col], ...]} (1-based)."""
    try:
        doc = json.loads(src)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno, column=exc.colno)
    if not isinstance(doc, dict):
        raise ParseError("top-level value must be an object")
    for key in ("n", "m", "stars"):
        if key not in doc:
            raise ParseError(f"missing field {key!r}")
    n, m, stars = doc["n"], doc["m"], doc["stars"]
    if not isinstance(n, int) or not isinstance(m, int):
        raise ParseError("'n' and 'm' must be integers")
    if not isinstance(stars, list):
        raise ParseError("'stars' must be an array of [row, col] pairs")
    coords = []
    for entry in stars:
        if (
            not isinstance(entry, list)
            or len(entry) != 2
            or not all(isinstance(x, int) for x in entry)
        ):
            raise ParseError(f"bad star entry {entry!r}")
        coords.append((entry[0], entry[1]))
    return pattern_from_stars(n, m, coords)


def serialize_json(p: SparsityPattern) -> str:
    doc = {
        "n": p.n,
        "m": p.m,
        "stars": [[i + 1, j + 1] for (i, j) in p.sorted_stars],
    }
    return json.dumps(doc, separators=(", ", ": ")) + "\n"


def export_dot(g: BipartiteGraph, matchings: list[Matching] | None = None) -> str:
    """Undirected DOT text with deterministic ordering.

    Left nodes are a1..an, right nodes b1..bm.  If matchings are given,
    each one's edges are colored from a fixed palette cycle; edges of g
    outside every matching stay black.
    """
    color_of: dict[tuple[int, int], str] = {}
    if matchings:
        for idx, matching in enumerate(matchings):
            extra = matching.edges - g.edges
            if extra:
                raise NotSubsetError(
                    f"matching edges {sorted(extra)} are not edges of the graph"
                )
            for e in matching.sorted_edges:
                color_of[e] = _PALETTE[idx % len(_PALETTE)]
    lines = ["graph pattern {"]
    for i in range(g.n_left):
        lines.append(f'  a{i + 1} [shape=circle];')
    for j in range(g.n_right):
        lines.append(f'  b{j + 1} [shape=square];')
    for (i, j) in g.sorted_edges:
        attrs = f' [color={color_of[(i, j)]}]' if (i, j) in color_of else ""
        lines.append(f"  a{i + 1} -- b{j + 1}{attrs};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_pattern(path: str) -> SparsityPattern:
    """Load a pattern file, dispatching on a .json suffix."""
    with open(path, "r", encoding="utf-8") as fh:
        src = fh.read()
    if path.endswith(".json"):
        return parse_json(src)
    return parse_text(src)
