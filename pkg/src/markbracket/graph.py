"""Multiply marked graphs and the structural operations on them.

A marked graph has integer vertex handles, a symmetric loopless adjacency
relation, a loop flag and one of six marks per vertex, a count of free
loops, and optional vertex weights (alpha, beta) that default to (A, B).
Graphs are immutable; every operation returns a new graph.
"""

from __future__ import annotations

from enum import Enum
from itertools import combinations
from typing import Iterable, Mapping

import networkx as nx
from networkx.algorithms import isomorphism

from .errors import CapacityError, PreconditionError, UnknownVertexError
from .polynomials import A, B, BracketPoly


class Mark(Enum):
    NONE = ""
    R = "r"
    C = "c"
    CR = "cr"
    U = "u"
    UR = "ur"

    @property
    def has_r(self) -> bool:
        return self in (Mark.R, Mark.CR, Mark.UR)

    @property
    def letter(self) -> str:
        """``""``, ``"c"`` or ``"u"``."""
        return self.value.rstrip("r")

    def toggle_r(self) -> Mark:
        return _TOGGLE_R[self]

    @classmethod
    def parse(cls, text: str) -> Mark:
        if text in ("", "none", "-"):
            return cls.NONE
        return cls(text)

    def __str__(self):
        return self.value or "unmarked"


_TOGGLE_R = {
    Mark.NONE: Mark.R, Mark.R: Mark.NONE,
    Mark.C: Mark.CR, Mark.CR: Mark.C,
    Mark.U: Mark.UR, Mark.UR: Mark.U,
}

# marked local complement at v: the mark of v itself
MLC_SELF = {
    Mark.NONE: Mark.U, Mark.U: Mark.NONE,
    Mark.R: Mark.UR, Mark.UR: Mark.R,
    Mark.C: Mark.CR, Mark.CR: Mark.C,
}
# marked local complement at v: marks of the neighbors of v
MLC_NEIGHBOR = {
    Mark.NONE: Mark.R, Mark.R: Mark.NONE,
    Mark.C: Mark.UR, Mark.UR: Mark.C,
    Mark.U: Mark.CR, Mark.CR: Mark.U,
}
# marked pivot: marks of the two pivot vertices
PIVOT_MARK = {
    Mark.C: Mark.NONE, Mark.NONE: Mark.C,
    Mark.R: Mark.CR, Mark.CR: Mark.R,
    Mark.U: Mark.UR, Mark.UR: Mark.U,
}

DEFAULT_WEIGHTS = (A, B)


class MarkedGraph:
    """Immutable multiply marked graph.

    Parameters mirror the text format: ``vertices`` lists handles, ``edges``
    lists unordered pairs of distinct handles, ``loops`` the looped handles,
    ``marks`` and ``weights`` map handles to non-default values.
    """

    __slots__ = ("_adj", "_loops", "_marks", "_weights", "_free_loops", "_key")

    def __init__(
        self,
        vertices: Iterable[int] = (),
        edges: Iterable[tuple[int, int]] = (),
        loops: Iterable[int] = (),
        marks: Mapping[int, Mark | str] | None = None,
        free_loops: int = 0,
        weights: Mapping[int, tuple[BracketPoly, BracketPoly]] | None = None,
    ):
        adj: dict[int, set[int]] = {int(v): set() for v in vertices}
        for x, y in edges:
            if x == y:
                raise PreconditionError(f"edge {x}-{y} is a loop; use the loops argument")
            for z in (x, y):
                if z not in adj:
                    raise UnknownVertexError(z)
            adj[x].add(y)
            adj[y].add(x)
        loop_set = frozenset(loops)
        for v in loop_set:
            if v not in adj:
                raise UnknownVertexError(v)
        mark_map = {}
        for v, m in (marks or {}).items():
            if v not in adj:
                raise UnknownVertexError(v)
            m = m if isinstance(m, Mark) else Mark.parse(m)
            if m is not Mark.NONE:
                mark_map[v] = m
        weight_map = {}
        for v, (alpha, beta) in (weights or {}).items():
            if v not in adj:
                raise UnknownVertexError(v)
            pair = (BracketPoly.coerce(alpha), BracketPoly.coerce(beta))
            if pair != DEFAULT_WEIGHTS:
                weight_map[v] = pair
        if free_loops < 0:
            raise PreconditionError("free loop count must be nonnegative")
        self._set({v: frozenset(ns) for v, ns in adj.items()}, loop_set, mark_map, weight_map, int(free_loops))

    def _set(self, adj, loops, marks, weights, free_loops):
        self._adj = adj
        self._loops = loops
        self._marks = marks
        self._weights = weights
        self._free_loops = free_loops
        self._key = None

    @classmethod
    def _raw(cls, adj, loops, marks, weights, free_loops) -> MarkedGraph:
        g = cls.__new__(cls)
        g._set(adj, frozenset(loops), marks, weights, free_loops)
        return g

    def _replace(self, adj=None, loops=None, marks=None, weights=None, free_loops=None) -> MarkedGraph:
        return MarkedGraph._raw(
            self._adj if adj is None else adj,
            self._loops if loops is None else loops,
            self._marks if marks is None else marks,
            self._weights if weights is None else weights,
            self._free_loops if free_loops is None else free_loops,
        )

    # -- inspection -----------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self._adj))

    @property
    def n(self) -> int:
        return len(self._adj)

    def __len__(self):
        return len(self._adj)

    def __contains__(self, v):
        return v in self._adj

    @property
    def free_loops(self) -> int:
        return self._free_loops

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted((x, y) for x in self._adj for y in self._adj[x] if x < y))

    @property
    def loops(self) -> frozenset[int]:
        return self._loops

    @property
    def loop_count(self) -> int:
        return len(self._loops)

    def _check(self, v):
        if v not in self._adj:
            raise UnknownVertexError(v)

    def neighbors(self, v: int) -> frozenset[int]:
        self._check(v)
        return self._adj[v]

    def adjacent(self, v: int, w: int) -> bool:
        self._check(v)
        self._check(w)
        return w in self._adj[v]

    def is_looped(self, v: int) -> bool:
        self._check(v)
        return v in self._loops

    def mark(self, v: int) -> Mark:
        self._check(v)
        return self._marks.get(v, Mark.NONE)

    def weight(self, v: int) -> tuple[BracketPoly, BracketPoly]:
        self._check(v)
        return self._weights.get(v, DEFAULT_WEIGHTS)

    def has_default_weights(self, vertices: Iterable[int] | None = None) -> bool:
        if vertices is None:
            return not self._weights
        return not any(v in self._weights for v in vertices)

    def is_isolated(self, v: int) -> bool:
        return not self.neighbors(v)

    # -- derived graphs -------------------------------------------------

    def remove(self, *vs: int) -> MarkedGraph:
        """Delete vertices (and incident edges)."""
        drop = set(vs)
        for v in drop:
            self._check(v)
        adj = {v: ns - drop for v, ns in self._adj.items() if v not in drop}
        return self._replace(
            adj=adj,
            loops=self._loops - drop,
            marks={v: m for v, m in self._marks.items() if v not in drop},
            weights={v: w for v, w in self._weights.items() if v not in drop},
        )

    def with_mark(self, v: int, mark: Mark) -> MarkedGraph:
        self._check(v)
        marks = dict(self._marks)
        if mark is Mark.NONE:
            marks.pop(v, None)
        else:
            marks[v] = mark
        return self._replace(marks=marks)

    def with_loop(self, v: int, looped: bool = True) -> MarkedGraph:
        self._check(v)
        loops = self._loops | {v} if looped else self._loops - {v}
        return self._replace(loops=loops)

    def toggle_loop(self, v: int) -> MarkedGraph:
        return self.with_loop(v, v not in self._loops)

    def with_weights(self, v: int, alpha, beta) -> MarkedGraph:
        self._check(v)
        weights = dict(self._weights)
        pair = (BracketPoly.coerce(alpha), BracketPoly.coerce(beta))
        if pair == DEFAULT_WEIGHTS:
            weights.pop(v, None)
        else:
            weights[v] = pair
        return self._replace(weights=weights)

    def with_free_loops(self, k: int) -> MarkedGraph:
        if k < 0:
            raise PreconditionError("free loop count must be nonnegative")
        return self._replace(free_loops=k)

    def add_vertex(self, v: int, neighbors: Iterable[int] = (), looped: bool = False,
                   mark: Mark = Mark.NONE, weights=None) -> MarkedGraph:
        if v in self._adj:
            raise PreconditionError(f"vertex {v} already present")
        nbrs = frozenset(neighbors)
        for w in nbrs:
            self._check(w)
        adj = dict(self._adj)
        adj[v] = nbrs
        for w in nbrs:
            adj[w] = adj[w] | {v}
        g = self._replace(adj=adj, loops=self._loops | {v} if looped else self._loops)
        if mark is not Mark.NONE:
            g = g.with_mark(v, mark)
        if weights is not None:
            g = g.with_weights(v, *weights)
        return g

    def toggle_edges(self, pairs: Iterable[tuple[int, int]]) -> MarkedGraph:
        adj = {v: set(ns) for v, ns in self._adj.items()}
        for x, y in pairs:
            if x == y:
                raise PreconditionError("cannot toggle a loop as an edge")
            self._check(x)
            self._check(y)
            adj[x] ^= {y}
            adj[y] ^= {x}
        return self._replace(adj={v: frozenset(ns) for v, ns in adj.items()})

    def relabel(self, mapping: Mapping[int, int]) -> MarkedGraph:
        f = lambda v: mapping.get(v, v)  # noqa: E731
        new = [f(v) for v in self._adj]
        if len(set(new)) != len(new):
            raise PreconditionError("relabelling is not injective")
        return MarkedGraph._raw(
            {f(v): frozenset(f(w) for w in ns) for v, ns in self._adj.items()},
            {f(v) for v in self._loops},
            {f(v): m for v, m in self._marks.items()},
            {f(v): w for v, w in self._weights.items()},
            self._free_loops,
        )

    def disjoint_union(self, other: MarkedGraph) -> MarkedGraph:
        if set(self._adj) & set(other._adj):
            raise PreconditionError("vertex handles overlap")
        return MarkedGraph._raw(
            {**self._adj, **other._adj},
            self._loops | other._loops,
            {**self._marks, **other._marks},
            {**self._weights, **other._weights},
            self._free_loops + other._free_loops,
        )

    # -- identity -------------------------------------------------------

    def key(self) -> tuple:
        """Exact structural key (handles included)."""
        if self._key is None:
            vs = self.vertices
            self._key = (
                tuple((v, tuple(sorted(self._adj[v])), v in self._loops,
                       self._marks.get(v, Mark.NONE).value,
                       tuple(str(p) for p in self._weights[v]) if v in self._weights else None)
                      for v in vs),
                self._free_loops,
            )
        return self._key

    def __eq__(self, other):
        if not isinstance(other, MarkedGraph):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        parts = []
        for v in self.vertices:
            s = str(v)
            if v in self._loops:
                s += "L"
            m = self._marks.get(v)
            if m:
                s += ":" + m.value
            parts.append(s)
        return f"MarkedGraph(V=[{', '.join(parts)}], E={list(self.edges)}, free_loops={self._free_loops})"


# -- operations -----------------------------------------------------------


def marked_local_complement(g: MarkedGraph, v: int) -> MarkedGraph:
    """G^v_cru: toggle edges among neighbours of v and permute marks; no loop changes."""
    nbrs = g.neighbors(v)
    marks = dict(g._marks)

    def put(x, m):
        if m is Mark.NONE:
            marks.pop(x, None)
        else:
            marks[x] = m

    put(v, MLC_SELF[g.mark(v)])
    for w in nbrs:
        put(w, MLC_NEIGHBOR[g.mark(w)])
    return g._replace(adj=_toggle_clique(g._adj, nbrs), marks=marks)


def _toggle_clique(adj, nbrs):
    if len(nbrs) < 2:
        return adj
    out = dict(adj)
    for x in nbrs:
        out[x] = adj[x] ^ (nbrs - {x})
    return out


def plain_local_complement(g: MarkedGraph, v: int) -> MarkedGraph:
    """Unmarked local complement: also toggles the loops of the neighbours of v."""
    nbrs = g.neighbors(v)
    return g._replace(adj=_toggle_clique(g._adj, nbrs), loops=g._loops ^ nbrs)


def marked_pivot(g: MarkedGraph, v: int, w: int) -> MarkedGraph:
    """The marked pivot G^{vw}_cru, built directly from the neighbourhood description.

    Equal to ``mlc(mlc(mlc(g, v), w), v)``.
    """
    if v == w or w not in g.neighbors(v):
        raise PreconditionError(f"pivot needs adjacent distinct vertices, got {v}, {w}")
    nv = g.neighbors(v) - g.neighbors(w) - {w}
    nw = g.neighbors(w) - g.neighbors(v) - {v}
    nvw = g.neighbors(v) & g.neighbors(w)
    adj = {x: set(ns) for x, ns in g._adj.items()}
    cells = (nv, nw, nvw)
    for i, j in ((0, 1), (0, 2), (1, 2)):
        for x in cells[i]:
            for y in cells[j]:
                adj[x] ^= {y}
                adj[y] ^= {x}
    # exchange the neighbourhoods of v and w
    for x in nv:
        adj[x] ^= {v, w}
    for x in nw:
        adj[x] ^= {v, w}
    adj[v] = set(nw) | {w} | set(nvw)
    adj[w] = set(nv) | {v} | set(nvw)
    marks = dict(g._marks)
    for x in (v, w):
        m = PIVOT_MARK[g.mark(x)]
        if m is Mark.NONE:
            marks.pop(x, None)
        else:
            marks[x] = m
    return g._replace(adj={x: frozenset(ns) for x, ns in adj.items()}, marks=marks)


def toggle_loop_and_r(g: MarkedGraph, v: int) -> MarkedGraph:
    """Toggle both the loop and the r-letter at one vertex (bracket-preserving)."""
    return g.toggle_loop(v).with_mark(v, g.mark(v).toggle_r())


def r_simplify(g: MarkedGraph) -> MarkedGraph:
    """Drop every r-letter, toggling the loop of each vertex that had one."""
    out = g
    for v in g.vertices:
        if g.mark(v).has_r:
            out = toggle_loop_and_r(out, v)
    return out


def writhe(g: MarkedGraph) -> int:
    return g.n - 2 * g.loop_count


# -- isomorphism ----------------------------------------------------------

ISO_LIMIT = 12


def _vertex_colour(g: MarkedGraph, v: int) -> str:
    alpha, beta = g.weight(v)
    return f"{int(v in g._loops)}|{g.mark(v).value}|{alpha}|{beta}"


def to_networkx(g: MarkedGraph) -> nx.Graph:
    """Plain networkx graph with a ``colour`` attribute encoding loop, mark and weights."""
    out = nx.Graph()
    out.add_nodes_from((v, {"colour": _vertex_colour(g, v)}) for v in g.vertices)
    out.add_edges_from(g.edges)
    return out


def invariant_hash(g: MarkedGraph) -> str:
    """Isomorphism-invariant hash (equal for isomorphic graphs)."""
    wl = nx.weisfeiler_lehman_graph_hash(to_networkx(g), node_attr="colour", iterations=3)
    return f"{g.free_loops}:{g.n}:{wl}"


def find_isomorphism(g: MarkedGraph, h: MarkedGraph, limit: int = ISO_LIMIT) -> dict[int, int] | None:
    """A vertex bijection g -> h preserving edges, loops, marks and weights, or None."""
    if g.n > limit or h.n > limit:
        raise CapacityError(f"isomorphism test limited to {limit} vertices")
    if g.n != h.n or g.free_loops != h.free_loops or len(g.edges) != len(h.edges):
        return None
    matcher = isomorphism.GraphMatcher(to_networkx(g), to_networkx(h),
                                       node_match=isomorphism.categorical_node_match("colour", None))
    return dict(matcher.mapping) if matcher.is_isomorphic() else None


def is_isomorphic(g: MarkedGraph, h: MarkedGraph, limit: int = ISO_LIMIT) -> bool:
    return find_isomorphism(g, h, limit) is not None


def induced_pairs(vs: Iterable[int]):
    return combinations(sorted(vs), 2)
