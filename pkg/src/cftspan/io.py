"""Line-oriented text format for colored graphs.

::

    graph <n>
    setting <eft|vft|mft|ecft|vcft|mcft|lists>
    palette <color> ...                # optional
    v <id> [<color> ...]
    e <id> <u> <v> <weight> [<color> ...]

``#`` starts a comment.  Color lists may be written with or without the
surrounding brackets (``[3 4]`` and ``3 4`` are the same list).  In the
uncolored settings colors are assigned automatically and none may be given.
"""
from __future__ import annotations

import math
from pathlib import Path

from .graph import ColoredGraph, Setting


class ParseError(ValueError):
    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


def _color_tokens(tokens, lineno):
    joined = " ".join(tokens)
    if "[" in joined or "]" in joined:
        if not (joined.startswith("[") and joined.endswith("]")) or joined.count("[") != 1 or joined.count("]") != 1:
            raise ParseError(f"malformed color list {joined!r}", lineno)
        joined = joined[1:-1]
    return joined.split()


def _int(tok, what, lineno):
    try:
        val = int(tok)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {tok!r}", lineno) from None
    if val < 0:
        raise ParseError(f"{what} must be non-negative, got {val}", lineno)
    return val


def parse(text: str) -> ColoredGraph:
    n = None
    setting = Setting.LISTS
    palette = None
    palette_line = None
    vertices = {}
    edges = {}
    edge_order = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        if n is None and head != "graph":
            raise ParseError("expected 'graph <n>' header first", lineno)
        if head == "graph":
            if n is not None:
                raise ParseError("duplicate graph header", lineno)
            if len(rest) != 1:
                raise ParseError("expected 'graph <n>'", lineno)
            n = _int(rest[0], "vertex count", lineno)
        elif head == "setting":
            if len(rest) != 1:
                raise ParseError("expected 'setting <name>'", lineno)
            try:
                setting = Setting.parse(rest[0])
            except ValueError as exc:
                raise ParseError(str(exc), lineno) from None
        elif head == "palette":
            palette = _color_tokens(rest, lineno)
            palette_line = lineno
        elif head == "v":
            if not rest:
                raise ParseError("expected 'v <id> [<color> ...]'", lineno)
            x = _int(rest[0], "vertex id", lineno)
            if x >= n:
                raise ParseError(f"vertex {x} outside 0..{n - 1}", lineno)
            if x in vertices:
                raise ParseError(f"duplicate vertex line for {x}", lineno)
            vertices[x] = (_color_tokens(rest[1:], lineno), lineno)
        elif head == "e":
            if len(rest) < 4:
                raise ParseError("expected 'e <id> <u> <v> <weight> [<color> ...]'", lineno)
            eid = _int(rest[0], "edge id", lineno)
            u = _int(rest[1], "endpoint", lineno)
            v = _int(rest[2], "endpoint", lineno)
            try:
                w = float(rest[3])
            except ValueError:
                raise ParseError(f"weight must be a number, got {rest[3]!r}", lineno) from None
            if eid in edges:
                raise ParseError(f"duplicate edge id {eid}", lineno)
            if u >= n or v >= n:
                raise ParseError(f"edge {eid} endpoint outside 0..{n - 1}", lineno)
            if u == v:
                raise ParseError(f"edge {eid} is a self-loop", lineno)
            if not (w > 0 and math.isfinite(w)):
                raise ParseError(f"edge {eid} weight must be positive and finite", lineno)
            edges[eid] = ((eid, u, v, w, _color_tokens(rest[4:], lineno)), lineno)
            edge_order.append(eid)
        else:
            raise ParseError(f"unknown record type {head!r}", lineno)
    if n is None:
        raise ParseError("missing 'graph <n>' header")

    # per-setting list sizes, reported with line numbers
    if setting != Setting.LISTS:
        want_e = (1 if setting.edge_faults else 0) if setting.colored else 0
        want_v = (1 if setting.vertex_faults else 0) if setting.colored else 0
        for (eid, *_, cs), lineno in edges.values():
            if len(cs) != want_e:
                raise ParseError(f"{setting.value} edges take exactly {want_e} color(s)", lineno)
        for x, (cs, lineno) in vertices.items():
            if len(cs) != want_v:
                raise ParseError(f"{setting.value} vertices take exactly {want_v} color(s)", lineno)
        if want_v and len(vertices) != n:
            missing = min(set(range(n)) - vertices.keys())
            raise ParseError(f"{setting.value} requires a color for every vertex; vertex {missing} has none")

    if palette is not None:
        used = {c for (*_, cs), _ in edges.values() for c in cs}
        used |= {c for cs, _ in vertices.values() for c in cs}
        unused = [c for c in palette if c not in used]
        if unused:
            raise ParseError(f"palette color {unused[0]!r} referenced nowhere", palette_line)
        undeclared = sorted(used - set(palette))
        if undeclared:
            raise ParseError(f"color {undeclared[0]!r} missing from palette", palette_line)

    try:
        return ColoredGraph.build(
            n,
            [edges[eid][0] for eid in edge_order],
            {x: cs for x, (cs, _) in vertices.items()},
            setting,
        )
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def serialize(g: ColoredGraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"graph {g.n}")
    lines.append(f"setting {g.setting.value}")
    colored = g.setting.colored
    if colored:
        for x, cs in enumerate(g.vertex_colors):
            if cs:
                lines.append(f"v {x} [{' '.join(g.labels(cs))}]")
    for e in g.edges:
        w = repr(e.weight) if not e.weight.is_integer() else str(int(e.weight))
        line = f"e {e.id} {e.u} {e.v} {w}"
        if colored:
            line += f" [{' '.join(g.labels(e.colors))}]"
        lines.append(line)
    return "\n".join(lines) + "\n"


def read_graph(path) -> ColoredGraph:
    return parse(Path(path).read_text())


def write_graph(g: ColoredGraph, path, comment: str | None = None) -> None:
    Path(path).write_text(serialize(g, comment))
