"""Reidemeister-type moves on marked graphs, graph-link moves and a bounded search."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field, replace
from enum import Enum
from itertools import combinations
from typing import Iterable, Mapping

from .bracket import jones
from .errors import CapacityError, MoveNotApplicable, PreconditionError, UnknownVertexError
from .graph import (
    ISO_LIMIT,
    Mark,
    MarkedGraph,
    invariant_hash,
    is_isomorphic,
    marked_local_complement,
    marked_pivot,
)


class MoveKind(str, Enum):
    OMEGA1 = "omega1"
    OMEGA1_ADD = "omega1-add"
    OMEGA2A = "omega2a"
    OMEGA2A_ADD = "omega2a-add"
    OMEGA2B = "omega2b"
    OMEGA2C = "omega2c"
    OMEGA2D = "omega2d"
    OMEGA2D_ADD = "omega2d-add"
    OMEGA3 = "omega3"
    OMEGA3_ADD = "omega3-add"

    def __str__(self):
        return self.value


_ARITY = {
    MoveKind.OMEGA1: 1, MoveKind.OMEGA1_ADD: 1,
    MoveKind.OMEGA2A: 2, MoveKind.OMEGA2A_ADD: 2, MoveKind.OMEGA2B: 2, MoveKind.OMEGA2C: 2,
    MoveKind.OMEGA2D: 2, MoveKind.OMEGA2D_ADD: 2,
    MoveKind.OMEGA3: 3, MoveKind.OMEGA3_ADD: 3,
}


@dataclass(frozen=True)
class MoveSpec:
    """A move instance.

    ``targets`` are the named vertices (v first and looped for the Omega-2
    kinds, u first and looped for Omega-3).  Adjunction kinds create the
    target handles; ``neighbors``, ``looped``, ``mark`` and ``vw_edge``
    describe what is adjoined.  ``pre`` and ``post`` list marked local
    complementations applied before and after the move.
    """

    kind: MoveKind
    targets: tuple[int, ...]
    witness: int | None = None
    neighbors: tuple[int, ...] = ()
    looped: bool = False
    mark: Mark = Mark.NONE
    vw_edge: bool = False
    pre: tuple[int, ...] = ()
    post: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "kind", MoveKind(self.kind))
        object.__setattr__(self, "targets", tuple(self.targets))
        object.__setattr__(self, "neighbors", tuple(sorted(self.neighbors)))
        object.__setattr__(self, "pre", tuple(self.pre))
        object.__setattr__(self, "post", tuple(self.post))
        if len(self.targets) != _ARITY[self.kind]:
            raise PreconditionError(f"{self.kind} takes {_ARITY[self.kind]} target vertices")
        if len(set(self.targets)) != len(self.targets):
            raise PreconditionError("target vertices must be distinct")
        if self.kind in (MoveKind.OMEGA2B, MoveKind.OMEGA2C) and self.witness is None:
            raise PreconditionError(f"{self.kind} needs a witness vertex z")

    @property
    def is_conjugated(self) -> bool:
        return bool(self.pre or self.post)

    @property
    def inner(self) -> MoveSpec:
        return replace(self, pre=(), post=())

    def __str__(self):
        parts = [str(self.kind), ",".join(map(str, self.targets))]
        if self.witness is not None:
            parts.append(f"z={self.witness}")
        if self.kind is MoveKind.OMEGA2A_ADD:
            parts.append("nbrs=" + ",".join(map(str, self.neighbors)))
        if self.kind is MoveKind.OMEGA1_ADD:
            parts.append(("loop " if self.looped else "") + f"mark={self.mark.value or 'none'}")
        if self.vw_edge:
            parts.append("vw-edge")
        if self.pre:
            parts.append("pre=" + ",".join(map(str, self.pre)))
        if self.post:
            parts.append("post=" + ",".join(map(str, self.post)))
        return " ".join(parts)


def _fail(kind, why):
    raise MoveNotApplicable(f"{kind}: {why}")


def _outside(g: MarkedGraph, v: int, skip: Iterable[int]) -> frozenset[int]:
    return g.neighbors(v) - set(skip)


def _check_targets(g: MarkedGraph, m: MoveSpec):
    for t in m.targets if not m.kind.value.endswith("-add") else ():
        if t not in g:
            raise UnknownVertexError(t)


def check_move(g: MarkedGraph, m: MoveSpec) -> None:
    """Raise MoveNotApplicable unless the unconjugated move ``m`` applies to g."""
    k = m.kind
    _check_targets(g, m)
    if k is MoveKind.OMEGA1:
        (v,) = m.targets
        if not g.is_isolated(v):
            _fail(k, f"vertex {v} is not isolated")
        if g.mark(v) not in (Mark.NONE, Mark.U):
            _fail(k, f"mark of {v} involves c or r")
        if not g.has_default_weights([v]):
            _fail(k, f"vertex {v} carries weights")
    elif k is MoveKind.OMEGA1_ADD:
        (v,) = m.targets
        if v in g:
            _fail(k, f"vertex {v} already exists")
        if m.mark not in (Mark.NONE, Mark.U):
            _fail(k, "adjoined mark must not involve c or r")
    elif k in (MoveKind.OMEGA2A, MoveKind.OMEGA2B, MoveKind.OMEGA2C, MoveKind.OMEGA2D):
        v, w = m.targets
        if not g.is_looped(v) or g.is_looped(w):
            _fail(k, f"needs {v} looped and {w} unlooped")
        if not g.has_default_weights([v, w]):
            _fail(k, "target vertices carry weights")
        if g.mark(w) is not Mark.NONE:
            _fail(k, f"vertex {w} must be unmarked")
        want_v = Mark.NONE if k is MoveKind.OMEGA2A else Mark.C
        if g.mark(v) is not want_v:
            _fail(k, f"vertex {v} must be marked {want_v.value or 'none'}")
        nv, nw = _outside(g, v, (v, w)), _outside(g, w, (v, w))
        if k is MoveKind.OMEGA2A:
            if nv != nw:
                _fail(k, f"{v} and {w} have different outside neighbours")
        elif k in (MoveKind.OMEGA2B, MoveKind.OMEGA2D):
            if g.neighbors(w) != {v}:
                _fail(k, f"{v} must be the only neighbour of {w}")
            if k is MoveKind.OMEGA2D and g.neighbors(v) != {w}:
                _fail(k, f"{w} must be the only neighbour of {v}")
            if k is MoveKind.OMEGA2B:
                z = m.witness
                if z in (v, w) or z not in g or z not in nv:
                    _fail(k, f"witness {z} must be a neighbour of {v} outside the pair")
        else:
            if not g.adjacent(v, w):
                _fail(k, f"{v} and {w} must be adjacent")
            if nv != nw:
                _fail(k, f"{v} and {w} have different outside neighbours")
            z = m.witness
            if z in (v, w) or z not in g or z not in nv:
                _fail(k, f"witness {z} must be a common neighbour of {v} and {w}")
    elif k is MoveKind.OMEGA2A_ADD:
        v, w = m.targets
        if v in g or w in g:
            _fail(k, "adjoined handles already exist")
        for x in m.neighbors:
            if x not in g:
                _fail(k, f"neighbour {x} does not exist")
    elif k is MoveKind.OMEGA2D_ADD:
        v, w = m.targets
        if v in g or w in g:
            _fail(k, "adjoined handles already exist")
        if g.free_loops < 1:
            _fail(k, "needs a free loop to absorb")
    elif k in (MoveKind.OMEGA3, MoveKind.OMEGA3_ADD):
        u, v, w = m.targets
        trio = (u, v, w)
        if any(g.mark(x) is not Mark.NONE for x in trio):
            _fail(k, "the three vertices must be unmarked")
        if not g.has_default_weights(trio):
            _fail(k, "target vertices carry weights")
        if not g.is_looped(u) or g.is_looped(v) or g.is_looped(w):
            _fail(k, f"needs {u} looped and {v}, {w} unlooped")
        want = k is MoveKind.OMEGA3
        for a, b in combinations(trio, 2):
            if g.adjacent(a, b) != want:
                _fail(k, "the three vertices must be pairwise " + ("adjacent" if want else "non-adjacent"))
        for x in g.vertices:
            if x not in trio and sum(g.adjacent(x, t) for t in trio) not in (0, 2):
                _fail(k, f"vertex {x} is adjacent to exactly one or all three targets")
    else:  # pragma: no cover
        raise PreconditionError(f"unknown move kind {k}")


def _apply_inner(g: MarkedGraph, m: MoveSpec) -> MarkedGraph:
    check_move(g, m)
    k = m.kind
    if k is MoveKind.OMEGA1:
        return g.remove(*m.targets)
    if k is MoveKind.OMEGA1_ADD:
        return g.add_vertex(m.targets[0], looped=m.looped, mark=m.mark)
    if k is MoveKind.OMEGA2A:
        return g.remove(*m.targets)
    if k in (MoveKind.OMEGA2B, MoveKind.OMEGA2C):
        v, w = m.targets
        return marked_pivot(g, v, m.witness).remove(v, w)
    if k is MoveKind.OMEGA2D:
        return g.remove(*m.targets).with_free_loops(g.free_loops + 1)
    if k is MoveKind.OMEGA2A_ADD:
        v, w = m.targets
        h = g.add_vertex(v, m.neighbors, looped=True).add_vertex(w, m.neighbors)
        return h.toggle_edges([(v, w)]) if m.vw_edge else h
    if k is MoveKind.OMEGA2D_ADD:
        v, w = m.targets
        h = g.with_free_loops(g.free_loops - 1).add_vertex(v, looped=True, mark=Mark.C)
        return h.add_vertex(w, [v])
    if k is MoveKind.OMEGA3:
        u, v, w = m.targets
        return g.toggle_edges([(u, v), (u, w), (v, w)])
    if k is MoveKind.OMEGA3_ADD:
        u, v, w = m.targets
        return g.toggle_edges([(u, v), (u, w), (v, w)])
    raise PreconditionError(f"unknown move kind {k}")  # pragma: no cover


def _mlc_all(g: MarkedGraph, vs: Iterable[int]) -> MarkedGraph:
    for v in vs:
        g = marked_local_complement(g, v)
    return g


def apply_move(g: MarkedGraph, m: MoveSpec) -> MarkedGraph:
    return _mlc_all(_apply_inner(_mlc_all(g, m.pre), m.inner), m.post)


def inverse_move(g: MarkedGraph, m: MoveSpec) -> MoveSpec | None:
    """A move taking ``apply_move(g, m)`` back to g, or None if none is coded.

    Omega-2(b) and (c) change the graph by a pivot before deleting, so their
    inverses are not modelled.
    """
    if m.is_conjugated:
        inner = inverse_move(_mlc_all(g, m.pre), m.inner)
        if inner is None:
            return None
        return replace(inner, pre=tuple(reversed(m.post)), post=tuple(reversed(m.pre)))
    check_move(g, m)
    k = m.kind
    if k is MoveKind.OMEGA1:
        (v,) = m.targets
        return MoveSpec(MoveKind.OMEGA1_ADD, (v,), looped=g.is_looped(v), mark=g.mark(v))
    if k is MoveKind.OMEGA1_ADD:
        return MoveSpec(MoveKind.OMEGA1, m.targets)
    if k is MoveKind.OMEGA2A:
        v, w = m.targets
        return MoveSpec(MoveKind.OMEGA2A_ADD, (v, w), neighbors=tuple(_outside(g, v, (v, w))),
                        vw_edge=g.adjacent(v, w))
    if k is MoveKind.OMEGA2A_ADD:
        return MoveSpec(MoveKind.OMEGA2A, m.targets)
    if k is MoveKind.OMEGA2D:
        return MoveSpec(MoveKind.OMEGA2D_ADD, m.targets)
    if k is MoveKind.OMEGA2D_ADD:
        return MoveSpec(MoveKind.OMEGA2D, m.targets)
    if k is MoveKind.OMEGA3:
        return MoveSpec(MoveKind.OMEGA3_ADD, m.targets)
    if k is MoveKind.OMEGA3_ADD:
        return MoveSpec(MoveKind.OMEGA3, m.targets)
    return None


def _applies(g, m) -> bool:
    try:
        check_move(g, m)
    except MoveNotApplicable:
        return False
    return True


def fresh_handle(g: MarkedGraph, k: int = 0) -> int:
    return (max(g.vertices) + 1 if g.n else 1) + k


def detect_moves(g: MarkedGraph) -> list[MoveSpec]:
    """Every unconjugated move instance on g, in a fixed order.

    Adjunctions are limited to Omega-1 (four flavours on a fresh handle) and
    the inverse of Omega-2(d) when a free loop is present; Omega-2(a)
    adjunctions (one per outside neighbour set) are not enumerated.
    """
    vs = g.vertices
    out: list[MoveSpec] = []
    for v in vs:
        m = MoveSpec(MoveKind.OMEGA1, (v,))
        if _applies(g, m):
            out.append(m)
    for v in vs:
        for w in vs:
            if v == w:
                continue
            cands = [MoveSpec(MoveKind.OMEGA2A, (v, w)), MoveSpec(MoveKind.OMEGA2D, (v, w))]
            for z in sorted(g.neighbors(v) - {w}):
                cands.append(MoveSpec(MoveKind.OMEGA2B, (v, w), witness=z))
                cands.append(MoveSpec(MoveKind.OMEGA2C, (v, w), witness=z))
            out.extend(m for m in cands if _applies(g, m))
    for u in vs:
        for v, w in combinations(vs, 2):
            if u in (v, w):
                continue
            for kind in (MoveKind.OMEGA3, MoveKind.OMEGA3_ADD):
                m = MoveSpec(kind, (u, v, w))
                if _applies(g, m):
                    out.append(m)
    h = fresh_handle(g)
    for looped in (False, True):
        for mark in (Mark.NONE, Mark.U):
            out.append(MoveSpec(MoveKind.OMEGA1_ADD, (h,), looped=looped, mark=mark))
    if g.free_loops:
        out.append(MoveSpec(MoveKind.OMEGA2D_ADD, (h, h + 1)))
    return out


# -- graph-links -------------------------------------------------------------------

Label = tuple[int, int]  # (a, alpha) with a in {0, 1}, alpha in {+1, -1}


class LabeledGraph:
    """Simple graph with a label (a, alpha) in {0,1} x {+1,-1} on every vertex."""

    __slots__ = ("_adj", "_labels")

    def __init__(self, labels: Mapping[int, Label], edges: Iterable[tuple[int, int]] = ()):
        adj: dict[int, set[int]] = {}
        lab = {}
        for v, (a, s) in labels.items():
            if a not in (0, 1) or s not in (1, -1):
                raise PreconditionError(f"bad label {(a, s)} on vertex {v}")
            adj[int(v)] = set()
            lab[int(v)] = (a, s)
        for x, y in edges:
            if x == y:
                raise PreconditionError("labeled graphs have no loops")
            if x not in adj or y not in adj:
                raise UnknownVertexError(x if x not in adj else y)
            adj[x].add(y)
            adj[y].add(x)
        self._adj = {v: frozenset(n) for v, n in adj.items()}
        self._labels = lab

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self._adj))

    @property
    def n(self) -> int:
        return len(self._adj)

    def __contains__(self, v):
        return v in self._adj

    def label(self, v: int) -> Label:
        if v not in self._labels:
            raise UnknownVertexError(v)
        return self._labels[v]

    @property
    def labels(self) -> dict[int, Label]:
        return dict(self._labels)

    def neighbors(self, v: int) -> frozenset[int]:
        if v not in self._adj:
            raise UnknownVertexError(v)
        return self._adj[v]

    def adjacent(self, v: int, w: int) -> bool:
        return w in self.neighbors(v)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted((v, w) for v, ns in self._adj.items() for w in ns if v < w))

    def _with(self, labels=None, edges=None) -> LabeledGraph:
        return LabeledGraph(self._labels if labels is None else labels,
                            self.edges if edges is None else edges)

    def remove(self, *vs: int) -> LabeledGraph:
        for v in vs:
            self.label(v)
        drop = set(vs)
        return LabeledGraph({v: l for v, l in self._labels.items() if v not in drop},
                            [(x, y) for x, y in self.edges if x not in drop and y not in drop])

    def add_vertex(self, v: int, label: Label, neighbors: Iterable[int] = ()) -> LabeledGraph:
        if v in self._adj:
            raise PreconditionError(f"vertex {v} already present")
        labels = dict(self._labels)
        labels[v] = label
        return LabeledGraph(labels, list(self.edges) + [(v, x) for x in neighbors])

    def with_labels(self, changes: Mapping[int, Label]) -> LabeledGraph:
        labels = dict(self._labels)
        for v, l in changes.items():
            self.label(v)
            labels[v] = l
        return self._with(labels=labels)

    def toggle_edges(self, pairs: Iterable[tuple[int, int]]) -> LabeledGraph:
        es = set(self.edges)
        for x, y in pairs:
            es ^= {(min(x, y), max(x, y))}
        return self._with(edges=es)

    def key(self):
        return (tuple(sorted(self._labels.items())), self.edges)

    def __eq__(self, other):
        return isinstance(other, LabeledGraph) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"LabeledGraph(labels={self._labels!r}, edges={list(self.edges)!r})"


def simple_local_complement(g: LabeledGraph, v: int) -> LabeledGraph:
    ns = sorted(g.neighbors(v))
    return g.toggle_edges(combinations(ns, 2))


def to_marked(g: LabeledGraph) -> MarkedGraph:
    marks, loops = {}, []
    for v, (a, s) in g.labels.items():
        marks[v] = Mark.U if a == 0 else Mark.C
        if (a == 0) == (s > 0):
            loops.append(v)
    return MarkedGraph(g.vertices, g.edges, loops, marks)


class GraphLinkMove(str, Enum):
    G1 = "g1"
    G1_ADD = "g1-add"
    G2 = "g2"
    G2_ADD = "g2-add"
    G3 = "g3"
    G3_INV = "g3-inv"
    G4 = "g4"
    G4P = "g4p"

    def __str__(self):
        return self.value


def _gfail(kind, why):
    raise MoveNotApplicable(f"{kind}: {why}")


def apply_graphlink_move(g: LabeledGraph, kind: GraphLinkMove | str, targets: tuple[int, ...],
                         label: Label | None = None, neighbors: Iterable[int] = ()) -> LabeledGraph:
    """Apply one graph-link move.

    Adjunction kinds take the new handles in ``targets``; ``label`` is the
    label of the first adjoined vertex and ``neighbors`` its outside
    neighbours.  For G2_ADD the second vertex gets the opposite sign, and
    the pair is adjacent exactly when the first coordinate is 1.

    G4 toggles the edges between the three neighbourhood classes of v and w
    and keeps each vertex on its own side, so v and w keep their old
    neighbourhoods (the triple local complement, followed by swapping the
    two names).
    """
    kind = GraphLinkMove(kind)
    targets = tuple(targets)
    if kind is GraphLinkMove.G1:
        (v,) = targets
        if g.neighbors(v) or g.label(v)[0] != 0:
            _gfail(kind, f"vertex {v} must be isolated with label (0, +/-)")
        return g.remove(v)
    if kind is GraphLinkMove.G1_ADD:
        (v,) = targets
        if label is None or label[0] != 0:
            _gfail(kind, "adjoined label must be (0, +/-)")
        return g.add_vertex(v, label)
    if kind is GraphLinkMove.G2:
        v, w = targets
        (a, s), (b, t) = g.label(v), g.label(w)
        if a != b or s != -t:
            _gfail(kind, "labels must be (a, alpha) and (a, -alpha)")
        if g.adjacent(v, w) != (a == 1):
            _gfail(kind, "pair must be adjacent exactly when labelled (1, *)")
        if g.neighbors(v) - {w} != g.neighbors(w) - {v}:
            _gfail(kind, "pair must have the same outside neighbours")
        return g.remove(v, w)
    if kind is GraphLinkMove.G2_ADD:
        v, w = targets
        if label is None:
            _gfail(kind, "needs a label")
        if v in g or w in g:
            _gfail(kind, "adjoined handles already exist")
        nb = list(neighbors)
        h = g.add_vertex(v, label, nb).add_vertex(w, (label[0], -label[1]), nb)
        return h.toggle_edges([(v, w)]) if label[0] == 1 else h
    if kind in (GraphLinkMove.G3, GraphLinkMove.G3_INV):
        v, w, x = targets
        want, new = ((0, -1), (0, 1)) if kind is GraphLinkMove.G3 else ((0, 1), (0, -1))
        for y in (v, w, x):
            if g.label(y) != (want if y != x else (0, -1)):
                _gfail(kind, "labels do not match the configuration")
        if g.adjacent(v, w):
            _gfail(kind, f"{v} and {w} must not be adjacent")
        nv, nw = g.neighbors(v) - {x}, g.neighbors(w) - {x}
        if kind is GraphLinkMove.G3:
            if g.neighbors(x) != {v, w}:
                _gfail(kind, f"the only neighbours of {x} must be {v} and {w}")
            new_x = nv ^ nw
        else:
            if x in g.neighbors(v) or x in g.neighbors(w):
                _gfail(kind, f"{x} must not be adjacent to {v} or {w}")
            if g.neighbors(x) != nv ^ nw:
                _gfail(kind, f"{x} must be adjacent to exactly the vertices adjacent to one of {v}, {w}")
            new_x = frozenset({v, w})
        pairs = [(x, y) for y in g.neighbors(x) ^ new_x]
        return g.toggle_edges(pairs).with_labels({v: new, w: new})
    if kind is GraphLinkMove.G4:
        v, w = targets
        (a, s), (b, t) = g.label(v), g.label(w)
        if a != 0 or b != 0 or not g.adjacent(v, w):
            _gfail(kind, "needs adjacent vertices labelled (0, *)")
        nv, nw = g.neighbors(v) - {w}, g.neighbors(w) - {v}
        cells = (nv - nw, nw - nv, nv & nw)
        pairs = [(x, y) for i, j in ((0, 1), (0, 2), (1, 2)) for x in cells[i] for y in cells[j]]
        return g.toggle_edges(pairs).with_labels({v: (0, -t), w: (0, -s)})
    if kind is GraphLinkMove.G4P:
        (v,) = targets
        a, s = g.label(v)
        if a != 1:
            _gfail(kind, f"vertex {v} must be labelled (1, *)")
        h = simple_local_complement(g, v)
        changes = {x: (1 - g.label(x)[0], g.label(x)[1]) for x in g.neighbors(v)}
        changes[v] = (1, -s)
        return h.with_labels(changes)
    raise PreconditionError(f"unknown graph-link move {kind}")  # pragma: no cover


# -- bounded equivalence search ------------------------------------------------------


class Verdict(str, Enum):
    EQUIVALENT = "equivalent"
    DISTINCT = "distinct-by-invariant"
    INCONCLUSIVE = "inconclusive"

    def __str__(self):
        return self.value


@dataclass
class SearchResult:
    verdict: Verdict
    explored: int
    depth: int | None = None
    path: list[str] = field(default_factory=list)


def _neighbours(g: MarkedGraph, max_n: int):
    for v in g.vertices:
        yield f"mlc {v}", marked_local_complement(g, v)
    for m in detect_moves(g):
        h = apply_move(g, m)
        if h.n <= max_n:
            yield str(m), h


def equivalent_bounded(g: MarkedGraph, h: MarkedGraph, budget: int = 2000,
                       extra_vertices: int = 2) -> SearchResult:
    """Breadth-first search from g for a graph isomorphic to h.

    Graphs on more than ``max(g.n, h.n) + extra_vertices`` vertices are not
    explored; ``budget`` bounds the number of distinct graphs visited.
    """
    plain = g.has_default_weights() and h.has_default_weights()
    if plain and jones(g) != jones(h):
        return SearchResult(Verdict.DISTINCT, 0)
    max_n = min(max(g.n, h.n) + extra_vertices, ISO_LIMIT)
    if max(g.n, h.n) > ISO_LIMIT:
        raise CapacityError(f"bounded search limited to {ISO_LIMIT} vertices")
    target_hash = invariant_hash(h)
    buckets: dict[str, list[MarkedGraph]] = {}

    def seen(x):
        return any(x == y or is_isomorphic(x, y) for y in buckets.get(invariant_hash(x), ()))

    buckets[invariant_hash(g)] = [g]
    queue = deque([(g, 0, [])])
    explored = 1
    while queue:
        x, depth, path = queue.popleft()
        if invariant_hash(x) == target_hash and (x == h or is_isomorphic(x, h)):
            return SearchResult(Verdict.EQUIVALENT, explored, depth, path)
        for label, y in _neighbours(x, max_n):
            if seen(y):
                continue
            if explored >= budget:
                return SearchResult(Verdict.INCONCLUSIVE, explored)
            buckets.setdefault(invariant_hash(y), []).append(y)
            explored += 1
            queue.append((y, depth + 1, path + [label]))
    return SearchResult(Verdict.INCONCLUSIVE, explored)


__all__ = [
    "MoveKind", "MoveSpec", "check_move", "apply_move", "inverse_move", "detect_moves", "fresh_handle",
    "LabeledGraph", "Label", "simple_local_complement", "to_marked", "GraphLinkMove",
    "apply_graphlink_move", "Verdict", "SearchResult", "equivalent_bounded",
]
