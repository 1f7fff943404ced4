"""Slow, independent reference implementations used as test oracles.

Nothing here imports the engine's linear algebra, bracket or complement
code; graphs are read only through their public accessors.
"""

from __future__ import annotations

from itertools import combinations

from markbracket.graph import Mark, MarkedGraph
from markbracket.polynomials import BracketPoly


def naive_rank(entries: list[list[int]]) -> int:
    """Gaussian elimination over GF(2), one entry at a time."""
    m = [[x & 1 for x in row] for row in entries]
    if not m:
        return 0
    rows, cols = len(m), len(m[0])
    rank = 0
    for c in range(cols):
        pivot = None
        for r in range(rank, rows):
            if m[r][c] == 1:
                pivot = r
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for r in range(rows):
            if r != rank and m[r][c] == 1:
                for k in range(cols):
                    m[r][k] ^= m[rank][k]
        rank += 1
    return rank


def naive_nullity(entries: list[list[int]]) -> int:
    n = len(entries)
    return n - naive_rank(entries)


# marks written as plain strings so the tables below stay independent
_NAME = {Mark.NONE: "", Mark.R: "r", Mark.C: "c", Mark.CR: "cr", Mark.U: "u", Mark.UR: "ur"}
_BACK = {v: k for k, v in _NAME.items()}

SELF_SWAP = {"": "u", "u": "", "r": "ur", "ur": "r", "c": "cr", "cr": "c"}
NEIGHBOUR_SWAP = {"": "r", "r": "", "c": "ur", "ur": "c", "u": "cr", "cr": "u"}


def naive_mlc(g: MarkedGraph, v: int) -> MarkedGraph:
    ns = set(g.neighbors(v))
    edges = {frozenset(e) for e in g.edges}
    for x, y in combinations(sorted(ns), 2):
        edges ^= {frozenset((x, y))}
    marks = {}
    for x in g.vertices:
        m = _NAME[g.mark(x)]
        if x == v:
            m = SELF_SWAP[m]
        elif x in ns:
            m = NEIGHBOUR_SWAP[m]
        marks[x] = _BACK[m]
    weights = {x: g.weight(x) for x in g.vertices}
    return MarkedGraph(g.vertices, [tuple(sorted(e)) for e in edges], g.loops, marks, g.free_loops, weights)


def naive_state_matrix(g: MarkedGraph, t: set[int]) -> list[list[int]]:
    vs = list(g.vertices)
    diag = {}
    for v in vs:
        m = _NAME[g.mark(v)]
        diag[v] = int(g.is_looped(v)) ^ int(v in t) ^ int("r" in m)
    keep = []
    for v in vs:
        m = _NAME[g.mark(v)]
        if m in ("c", "cr") and diag[v] == 0:
            continue
        if m in ("u", "ur") and diag[v] == 1:
            continue
        keep.append(v)
    return [[diag[x] if x == y else int(g.adjacent(x, y)) for y in keep] for x in keep]


def naive_bracket(g: MarkedGraph) -> BracketPoly:
    """Sum over every subset T of d^phi * prod alpha * prod beta * d^nullity."""
    vs = list(g.vertices)
    d = BracketPoly.monomial(d=1)
    total = BracketPoly()
    for mask in range(1 << len(vs)):
        t = {v for i, v in enumerate(vs) if mask >> i & 1}
        term = d ** (g.free_loops + naive_nullity(naive_state_matrix(g, t)))
        for v in vs:
            alpha, beta = g.weight(v)
            term = term * (beta if v in t else alpha)
        total = total + term
    return total


def naive_kauffman_two_crossing_hopf(positive: bool) -> BracketPoly:
    """Hand-enumerated states of the standard two-crossing Hopf diagram."""
    A, B, d = BracketPoly.monomial(a=1), BracketPoly.monomial(b=1), BracketPoly.monomial(d=1)
    # both oriented smoothings: 2 curves; mixed: 1 curve; both disoriented: 2 curves
    if positive:
        return A * A * d + 2 * A * B + B * B * d
    return B * B * d + 2 * A * B + A * A * d
