"""Hypergraph file formats, orientation parsing, and Hasse diagram export.

Text format::

    # comment
    n 4              # or: ground 1 4
    12               # compact digits, only when every vertex is <= 9
    1 2 4            # or whitespace / comma separated
    3,4

A ``;`` splits one physical line into several logical ones.  JSON input is
``{"ground": [x, y], "edges": [[...], ...]}``.
"""

from __future__ import annotations

import json
import re
from pathlib import Path

from .errors import EdgeShapeError, InputError, InvalidSource
from .hypergraph import (
    CyclicIntervalHypergraph,
    GroundInterval,
    Hyperedge,
    Hypergraph,
    format_vertices,
)
from .orientation import Orientation

SCHEMA = 1

_HEADER = re.compile(r"^(n|ground)\b\s*=?\s*(.*)$", re.IGNORECASE)


def _ints(text: str, line: int) -> list[int]:
    try:
        return [int(tok) for tok in re.split(r"[\s,]+", text.strip()) if tok]
    except ValueError:
        raise InputError(f"expected integers, got {text.strip()!r}", line) from None


def _edge_tokens(text: str, ground: GroundInterval, line: int) -> list[int]:
    text = text.strip()
    if re.fullmatch(r"\d{2,}", text) and ground.hi <= 9:
        return [int(c) for c in text]
    return _ints(text, line)


def _build(ground, rows, generic):
    """``rows`` is a list of ``(line, vertices)``."""
    seen = set()
    edges = []
    for line, vs in rows:
        vs = frozenset(vs)
        bad = sorted(v for v in vs if v not in ground)
        if bad:
            raise InputError(f"vertices {bad} lie outside {ground}", line)
        if len(vs) < 2 or vs in seen:
            continue
        seen.add(vs)
        if generic:
            edges.append(vs)
            continue
        try:
            edges.append(Hyperedge.make(vs, ground))
        except EdgeShapeError as exc:
            raise EdgeShapeError(str(exc), line) from None
    if generic:
        return Hypergraph(ground, tuple(edges))
    return CyclicIntervalHypergraph(ground, tuple(edges))


def loads_text(text: str, generic: bool = False):
    ground = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        for part in raw.split("#", 1)[0].split(";"):
            part = part.strip()
            if not part:
                continue
            if ground is None:
                m = _HEADER.match(part)
                if not m:
                    raise InputError("the first line must be 'n <N>' or 'ground <x> <y>'", lineno)
                values = _ints(m.group(2), lineno)
                try:
                    if m.group(1).lower() == "n" and len(values) == 1:
                        ground = GroundInterval(1, values[0])
                    elif m.group(1).lower() == "ground" and len(values) == 2:
                        ground = GroundInterval(*values)
                    else:
                        raise InputError(f"malformed header {part!r}", lineno)
                except InputError as exc:
                    if exc.line is None:
                        raise type(exc)(str(exc), lineno) from None
                    raise
                continue
            rows.append((lineno, _edge_tokens(part, ground, lineno)))
    if ground is None:
        raise InputError("no 'n <N>' or 'ground <x> <y>' header found")
    return _build(ground, rows, generic)


def loads_json(text: str, generic: bool = False):
    try:
        data = json.loads(text)
        lo, hi = data["ground"]
        edges = data["edges"]
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"malformed JSON hypergraph: {exc}") from None
    ground = GroundInterval(int(lo), int(hi))
    return _build(ground, [(None, [int(v) for v in e]) for e in edges], generic)


def loads(text: str, generic: bool = False):
    if text.lstrip().startswith("{"):
        return loads_json(text, generic)
    return loads_text(text, generic)


def load(path, generic: bool = False):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text, generic)


def dumps_text(H) -> str:
    g = H.ground
    head = f"n {g.hi}" if g.lo == 1 else f"ground {g.lo} {g.hi}"
    return "\n".join([head] + [format_vertices(vs) for vs in H.vertex_sets]) + "\n"


def to_json(H) -> dict:
    return {"ground": [H.ground.lo, H.ground.hi],
            "edges": [sorted(vs) for vs in H.vertex_sets]}


def parse_orientation(text: str, H) -> Orientation:
    text = text.strip()
    if re.fullmatch(r"\d+", text) and len(text) == H.n_edges and H.ground.hi <= 9 and len(text) > 1:
        values = [int(c) for c in text]
    else:
        try:
            values = [int(tok) for tok in re.split(r"[\s,]+", text) if tok]
        except ValueError:
            raise InvalidSource(f"cannot read orientation {text!r}") from None
    if len(values) != H.n_edges:
        raise InvalidSource(
            f"orientation {text!r} has {len(values)} sources, the hypergraph has {H.n_edges} edges"
        )
    return Orientation(values)


def _lex_order(P):
    """Element indices sorted by source sequence, and the inverse map."""
    order = sorted(range(len(P)), key=lambda i: P.elements[i].sources)
    rank = {old: new for new, old in enumerate(order)}
    return order, rank


def hasse_json(P, covers) -> dict:
    order, rank = _lex_order(P)
    return {
        "schema": SCHEMA,
        "edges": [sorted(vs) for vs in P.hypergraph.vertex_sets],
        "elements": [list(P.elements[i].sources) for i in order],
        "covers": sorted([rank[i], rank[j]] for i, j in covers),
    }


def hasse_dot(P, covers) -> str:
    order, rank = _lex_order(P)
    lines = ["digraph hasse {", "  rankdir=BT;", "  node [shape=box];"]
    for new, old in enumerate(order):
        label = ",".join(map(str, P.elements[old].sources))
        lines.append(f'  n{new} [label="{label}"];')
    for i, j in sorted((rank[i], rank[j]) for i, j in covers):
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
