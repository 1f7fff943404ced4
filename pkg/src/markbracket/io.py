"""Text formats for marked graphs, labeled graphs and Gauss codes.

Marked graphs::

    graph <name>
    freeloops <k>
    vertex <id> [loop] [mark c|cr|u|ur|r] [alpha <poly>] [beta <poly>]
    edge <id> <id>

Labeled graphs use ``lvertex <id> <0|1> <+|->`` in place of ``vertex``.
Gauss codes take one line each, e.g. ``1 2 / 1 2 / O signs 1+ 2-``.
``#`` starts a comment everywhere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .diagram import GaussCode, format_gauss, parse_gauss
from .errors import ParseError, PreconditionError
from .graph import DEFAULT_WEIGHTS, Mark, MarkedGraph
from .moves import LabeledGraph
from .polynomials import parse_poly

Item = Union[MarkedGraph, LabeledGraph, GaussCode]


@dataclass(frozen=True)
class Named:
    name: str
    item: Item


def _lines(text: str):
    """Yield (line number, stripped content, column offset of the content)."""
    for i, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        stripped = body.strip()
        if stripped:
            yield i, stripped, len(body) - len(body.lstrip())


def _words(s: str, offset: int):
    return [(m.group(), offset + m.start() + 1) for m in re.finditer(r"\S+", s)]


def _int(tok: str, line: int, col: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer vertex id, got {tok!r}", line, col) from None


class _GraphBuilder:
    def __init__(self, name: str, line: int):
        self.name = name
        self.line = line
        self.vertices: list[int] = []
        self.edges: list[tuple[int, int]] = []
        self.loops: list[int] = []
        self.marks: dict[int, Mark] = {}
        self.weights: dict = {}
        self.labels: dict[int, tuple[int, int]] = {}
        self.free_loops = 0
        self.kind: str | None = None

    def set_kind(self, kind: str, line: int, col: int):
        if self.kind not in (None, kind):
            raise ParseError("marked and labeled vertex lines cannot be mixed", line, col)
        self.kind = kind

    def add_vertex(self, v: int, line: int, col: int):
        if v in self.vertices:
            raise ParseError(f"vertex {v} declared twice", line, col)
        self.vertices.append(v)

    def build(self) -> Item:
        try:
            if self.kind == "labeled":
                if self.free_loops:
                    raise PreconditionError("labeled graphs have no free loops")
                return LabeledGraph(self.labels, self.edges)
            return MarkedGraph(self.vertices, self.edges, self.loops, self.marks, self.free_loops, self.weights)
        except (PreconditionError, KeyError) as exc:
            raise ParseError(f"graph {self.name}: {exc}", self.line, 1) from None


def _parse_vertex(b: _GraphBuilder, words, line: int):
    (_, c0) = words[0]
    if len(words) < 2:
        raise ParseError("vertex line needs an id", line, c0)
    v = _int(words[1][0], line, words[1][1])
    b.add_vertex(v, line, words[1][1])
    i = 2
    alpha = beta = None
    while i < len(words):
        tok, col = words[i]
        if tok == "loop":
            b.loops.append(v)
            i += 1
        elif tok == "mark":
            if i + 1 >= len(words):
                raise ParseError("mark needs a value", line, col)
            try:
                b.marks[v] = Mark.parse(words[i + 1][0])
            except ValueError:
                raise ParseError(f"unknown mark {words[i + 1][0]!r}", line, words[i + 1][1]) from None
            i += 2
        elif tok in ("alpha", "beta"):
            j = i + 1
            while j < len(words) and words[j][0] not in ("alpha", "beta", "loop", "mark"):
                j += 1
            if j == i + 1:
                raise ParseError(f"{tok} needs a polynomial", line, col)
            start = words[i + 1][1]
            text = " ".join(w for w, _ in words[i + 1:j])
            try:
                p = parse_poly(text, line)
            except ParseError as exc:
                raise ParseError(exc.message, line, start + (exc.column or 1) - 1) from None
            if tok == "alpha":
                alpha = p
            else:
                beta = p
            i = j
        else:
            raise ParseError(f"unexpected token {tok!r} in vertex line", line, col)
    if alpha is not None or beta is not None:
        b.weights[v] = (alpha if alpha is not None else DEFAULT_WEIGHTS[0],
                        beta if beta is not None else DEFAULT_WEIGHTS[1])


def _parse_lvertex(b: _GraphBuilder, words, line: int):
    if len(words) != 4:
        raise ParseError("lvertex line is 'lvertex <id> <0|1> <+|->'", line, words[0][1])
    v = _int(words[1][0], line, words[1][1])
    b.add_vertex(v, line, words[1][1])
    if words[2][0] not in ("0", "1"):
        raise ParseError("first label coordinate must be 0 or 1", line, words[2][1])
    if words[3][0] not in ("+", "-"):
        raise ParseError("second label coordinate must be + or -", line, words[3][1])
    b.labels[v] = (int(words[2][0]), 1 if words[3][0] == "+" else -1)


def parse_graphs(text: str) -> list[Named]:
    """Parse one or more marked or labeled graphs."""
    out: list[Named] = []
    cur: _GraphBuilder | None = None

    def finish():
        if cur is not None:
            out.append(Named(cur.name, cur.build()))

    for line, s, off in _lines(text):
        words = _words(s, off)
        key, col = words[0]
        if key == "graph":
            finish()
            name = " ".join(w for w, _ in words[1:]) or f"G{len(out) + 1}"
            cur = _GraphBuilder(name, line)
            continue
        if cur is None:
            cur = _GraphBuilder("G", line)
        if key == "freeloops":
            if len(words) != 2:
                raise ParseError("freeloops takes one count", line, col)
            k = _int(words[1][0], line, words[1][1])
            if k < 0:
                raise ParseError("free loop count must be nonnegative", line, words[1][1])
            cur.free_loops = k
        elif key == "vertex":
            cur.set_kind("marked", line, col)
            _parse_vertex(cur, words, line)
        elif key == "lvertex":
            cur.set_kind("labeled", line, col)
            _parse_lvertex(cur, words, line)
        elif key == "edge":
            if len(words) != 3:
                raise ParseError("edge takes two vertex ids", line, col)
            x = _int(words[1][0], line, words[1][1])
            y = _int(words[2][0], line, words[2][1])
            for z, (_, zc) in ((x, words[1]), (y, words[2])):
                if z not in cur.vertices:
                    raise ParseError(f"edge mentions undeclared vertex {z}", line, zc)
            if x == y:
                raise ParseError("use 'loop' on the vertex line for loops", line, col)
            cur.edges.append((x, y))
        else:
            raise ParseError(f"unknown keyword {key!r}", line, col)
    if cur is None:
        cur = _GraphBuilder("G", 1)
    finish()
    return out


def parse_marked_graph(text: str) -> MarkedGraph:
    items = parse_graphs(text)
    if len(items) != 1 or not isinstance(items[0].item, MarkedGraph):
        raise ParseError("expected exactly one marked graph", 1, 1)
    return items[0].item


def parse_labeled_graph(text: str) -> LabeledGraph:
    items = parse_graphs(text)
    if len(items) != 1 or not isinstance(items[0].item, LabeledGraph):
        raise ParseError("expected exactly one labeled graph", 1, 1)
    return items[0].item


def parse_gauss_codes(text: str) -> list[Named]:
    return [Named(f"D{k}", parse_gauss(s, line=line))
            for k, (line, s, _) in enumerate(_lines(text), start=1)]


_GRAPH_KEYWORDS = ("graph", "vertex", "lvertex", "edge", "freeloops")


def detect_format(text: str) -> str:
    """'gauss', 'labeled' or 'marked' (the empty file is an empty marked graph)."""
    keys = [s.split()[0] for _, s, _ in _lines(text)]
    if keys and keys[0] not in _GRAPH_KEYWORDS:
        return "gauss"
    return "labeled" if "lvertex" in keys else "marked"


def parse_any(text: str) -> list[Named]:
    if detect_format(text) == "gauss":
        return parse_gauss_codes(text)
    return parse_graphs(text)


def format_marked_graph(g: MarkedGraph, name: str | None = "G") -> str:
    lines = []
    if name is not None:
        lines.append(f"graph {name}")
    if g.free_loops:
        lines.append(f"freeloops {g.free_loops}")
    for v in g.vertices:
        parts = ["vertex", str(v)]
        if g.is_looped(v):
            parts.append("loop")
        if g.mark(v) is not Mark.NONE:
            parts += ["mark", g.mark(v).value]
        alpha, beta = g.weight(v)
        if alpha != DEFAULT_WEIGHTS[0]:
            parts += ["alpha", str(alpha)]
        if beta != DEFAULT_WEIGHTS[1]:
            parts += ["beta", str(beta)]
        lines.append(" ".join(parts))
    lines += [f"edge {x} {y}" for x, y in g.edges]
    return "\n".join(lines) + "\n"


def format_labeled_graph(g: LabeledGraph, name: str | None = "G") -> str:
    lines = [f"graph {name}"] if name is not None else []
    for v in g.vertices:
        a, s = g.label(v)
        lines.append(f"lvertex {v} {a} {'+' if s > 0 else '-'}")
    lines += [f"edge {x} {y}" for x, y in g.edges]
    return "\n".join(lines) + "\n"


def format_item(item: Item, name: str | None = "G") -> str:
    if isinstance(item, MarkedGraph):
        return format_marked_graph(item, name)
    if isinstance(item, LabeledGraph):
        return format_labeled_graph(item, name)
    return format_gauss(item) + "\n"


__all__ = [
    "Named", "parse_graphs", "parse_marked_graph", "parse_labeled_graph", "parse_gauss_codes",
    "detect_format", "parse_any", "format_marked_graph", "format_labeled_graph", "format_item",
]
