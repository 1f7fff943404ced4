"""Bracket polynomial of marked graphs.

The state sum over subsets T is the reference implementation.  The
recursive evaluator, the older switching/double-smoothing identities, twin
reductions and the tangle-composition split are all checked against it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import DivisibilityError, PreconditionError
from .gf2 import Gf2Matrix, rank_of_rows
from .graph import (
    Mark,
    MarkedGraph,
    marked_local_complement,
    marked_pivot,
    writhe,
)
from .polynomials import (
    ONE,
    ZERO,
    BracketPoly,
    LaurentA,
    d,
    exact_divide,
    reduce_to_laurent,
)

_C_LETTER = (Mark.C, Mark.CR)
_U_LETTER = (Mark.U, Mark.UR)


# -- state matrices -------------------------------------------------------


@dataclass(frozen=True)
class StateMatrix:
    matrix: Gf2Matrix
    kept: tuple[int, ...]
    removed: tuple[int, ...]


def adjacency_matrix(g: MarkedGraph) -> Gf2Matrix:
    """Boolean adjacency matrix with loops on the diagonal, vertices in handle order."""
    vs = g.vertices
    index = {v: i for i, v in enumerate(vs)}
    rows = []
    for v in vs:
        row = 0
        for w in g.neighbors(v):
            row |= 1 << index[w]
        if g.is_looped(v):
            row |= 1 << index[v]
        rows.append(row)
    return Gf2Matrix(len(vs), len(vs), tuple(rows))


def state_matrix(g: MarkedGraph, t_set: Iterable[int]) -> StateMatrix:
    t_set = set(t_set)
    for v in t_set:
        g.neighbors(v)
    vs = g.vertices
    kept, removed = [], []
    diag = {}
    for v in vs:
        bit = int(g.is_looped(v)) ^ int(v in t_set) ^ int(g.mark(v).has_r)
        diag[v] = bit
        m = g.mark(v)
        if (m in _C_LETTER and bit == 0) or (m in _U_LETTER and bit == 1):
            removed.append(v)
        else:
            kept.append(v)
    index = {v: i for i, v in enumerate(kept)}
    rows = []
    for v in kept:
        row = diag[v] << index[v]
        for w in g.neighbors(v):
            if w in index:
                row |= 1 << index[w]
        rows.append(row)
    return StateMatrix(Gf2Matrix(len(kept), len(kept), tuple(rows)), tuple(kept), tuple(removed))


class _Compiled:
    """Bit-level view of a graph for fast subset enumeration."""

    __slots__ = ("n", "vs", "adj_rows", "base_diag", "c_mask", "u_mask")

    def __init__(self, g: MarkedGraph):
        self.vs = g.vertices
        self.n = len(self.vs)
        index = {v: i for i, v in enumerate(self.vs)}
        self.adj_rows = []
        base = c_mask = u_mask = 0
        for i, v in enumerate(self.vs):
            row = 0
            for w in g.neighbors(v):
                row |= 1 << index[w]
            self.adj_rows.append(row)
            m = g.mark(v)
            if g.is_looped(v) ^ m.has_r:
                base |= 1 << i
            if m in _C_LETTER:
                c_mask |= 1 << i
            elif m in _U_LETTER:
                u_mask |= 1 << i
        self.base_diag = base
        self.c_mask = c_mask
        self.u_mask = u_mask

    def nullity(self, t_mask: int) -> int:
        diag = self.base_diag ^ t_mask
        full = (1 << self.n) - 1
        removed = (self.c_mask & ~diag) | (self.u_mask & diag)
        keep = full & ~removed
        rows = []
        k = keep
        while k:
            low = k & -k
            i = low.bit_length() - 1
            rows.append((self.adj_rows[i] & keep) | (diag & low))
            k ^= low
        return len(rows) - rank_of_rows(rows)


def state_nullity(g: MarkedGraph, t_set: Iterable[int]) -> int:
    """Nullity of the state matrix for the subset ``t_set``."""
    comp = _Compiled(g)
    index = {v: i for i, v in enumerate(comp.vs)}
    mask = 0
    for v in t_set:
        mask |= 1 << index[v]
    return comp.nullity(mask)


# -- the state sum ---------------------------------------------------------


def bracket(g: MarkedGraph) -> BracketPoly:
    """State-sum bracket d^phi * sum_T (prod alpha)(prod beta) d^nullity."""
    comp = _Compiled(g)
    n = comp.n
    if g.has_default_weights():
        counts: dict[tuple[int, int], int] = {}
        for t in range(1 << n):
            key = (t.bit_count(), comp.nullity(t))
            counts[key] = counts.get(key, 0) + 1
        terms = {(n - k, k, nu + g.free_loops): c for (k, nu), c in counts.items()}
        return BracketPoly(terms)
    alphas = [g.weight(v)[0] for v in comp.vs]
    betas = [g.weight(v)[1] for v in comp.vs]
    # accumulate weight products per nullity
    by_nullity: dict[int, BracketPoly] = {}
    for t in range(1 << n):
        w = ONE
        for i in range(n):
            w = w * (betas[i] if (t >> i) & 1 else alphas[i])
            if w.is_zero():
                break
        if w.is_zero():
            continue
        nu = comp.nullity(t)
        by_nullity[nu] = by_nullity.get(nu, ZERO) + w
    total = ZERO
    for nu, w in by_nullity.items():
        total = total + w * d ** nu
    return total * d ** g.free_loops


# -- recursion --------------------------------------------------------------


def single_vertex_bracket(g: MarkedGraph, v: int) -> BracketPoly:
    """Bracket of the one-vertex graph formed by v alone (loop, mark, weights kept)."""
    alpha, beta = g.weight(v)
    m = g.mark(v)
    if m.letter == "c":
        return alpha + beta
    if g.is_looped(v) ^ m.has_r:
        return alpha + beta * d
    return alpha * d + beta


MEMO_LIMIT = 16


def _memo_key(g: MarkedGraph):
    vs = g.vertices
    index = {v: i for i, v in enumerate(vs)}
    return (
        tuple(
            (tuple(sorted(index[w] for w in g.neighbors(v))), g.is_looped(v), g.mark(v).value,
             None if g.has_default_weights((v,)) else tuple(map(str, g.weight(v))))
            for v in vs
        ),
        g.free_loops,
    )


def bracket_recursive(g: MarkedGraph, memo: dict | None = None) -> BracketPoly:
    """Bracket by the local-complementation recursion.

    Deterministic choices: the lowest handle is used at every step.
    """
    if memo is None:
        memo = {}
    return _recurse(g, memo)


def _recurse(g: MarkedGraph, memo: dict) -> BracketPoly:
    factor = d ** g.free_loops if g.free_loops else ONE
    g = g.with_free_loops(0) if g.free_loops else g
    for v in g.vertices:
        if g.is_isolated(v):
            factor = factor * single_vertex_bracket(g, v)
            g = g.remove(v)
    if g.n == 0:
        return factor
    key = _memo_key(g) if g.n <= MEMO_LIMIT else None
    if key is not None and key in memo:
        return factor * memo[key]
    result = _recurse_connected(g, memo)
    if key is not None:
        memo[key] = result
    return factor * result


def _recurse_connected(g: MarkedGraph, memo: dict) -> BracketPoly:
    vs = g.vertices
    for v in vs:
        m = g.mark(v)
        if m.letter == "c":
            alpha, beta = g.weight(v)
            if g.is_looped(v) ^ (m is Mark.CR):
                alpha, beta = beta, alpha
            return (alpha * _recurse(g.remove(v), memo)
                    + beta * _recurse(marked_local_complement(g, v).remove(v), memo))
    for v in vs:
        if any(g.mark(w) in _U_LETTER for w in g.neighbors(v)):
            return _recurse(marked_local_complement(g, v), memo)
    for w in vs:
        if g.mark(w) in (Mark.NONE, Mark.R) and g.neighbors(w):
            return _recurse(marked_local_complement(g, w), memo)
    raise AssertionError("recursion found no applicable step")  # unreachable for valid graphs


# -- older recursive identities ---------------------------------------------


def switch_step(g: MarkedGraph, v: int) -> BracketPoly:
    """Right-hand side of the switching formula at a looped unmarked vertex.

    alpha*[G] = beta*[G - loop] + (alpha^2 - beta^2)*[G^v - v], divided by alpha
    exactly.  With default weights alpha = A, beta = B.
    """
    if not (g.is_looped(v) and g.mark(v) is Mark.NONE):
        raise PreconditionError(f"switch_step needs a looped unmarked vertex, {v} is not")
    alpha, beta = g.weight(v)
    cleared = (beta * bracket(g.with_loop(v, False))
               + (alpha * alpha - beta * beta) * bracket(marked_local_complement(g, v).remove(v)))
    return exact_divide(cleared, alpha)


def switch_identity_sides(g: MarkedGraph, v: int) -> tuple[BracketPoly, BracketPoly]:
    """Both sides of the A-cleared switching identity: (A*[G], B*[G-loop] + (A^2-B^2)*[G^v-v])."""
    if not (g.is_looped(v) and g.mark(v) is Mark.NONE):
        raise PreconditionError(f"switch identity needs a looped unmarked vertex, {v} is not")
    alpha, beta = g.weight(v)
    lhs = alpha * bracket(g)
    rhs = (beta * bracket(g.with_loop(v, False))
           + (alpha * alpha - beta * beta) * bracket(marked_local_complement(g, v).remove(v)))
    return lhs, rhs


def double_smoothing_step(g: MarkedGraph, v: int, w: int) -> BracketPoly:
    """A^2[G^{vw} - v - w] + AB[(G^w)^v - v - w] + B[G^v - v] for adjacent plain v, w."""
    for x in (v, w):
        if g.is_looped(x) or g.mark(x) is not Mark.NONE:
            raise PreconditionError(f"vertex {x} must be unlooped and unmarked")
    if v == w or not g.adjacent(v, w):
        raise PreconditionError(f"{v} and {w} must be adjacent")
    av, bv = g.weight(v)
    aw, bw = g.weight(w)
    pivot = marked_pivot(g, v, w).remove(v, w)
    twice = marked_local_complement(marked_local_complement(g, w), v).remove(v, w)
    once = marked_local_complement(g, v).remove(v)
    return av * aw * bracket(pivot) + av * bw * bracket(twice) + bv * bracket(once)


# -- twin reductions ----------------------------------------------------------


@dataclass(frozen=True)
class TwinReduction:
    graph: MarkedGraph
    remainder: tuple[BracketPoly, MarkedGraph] | None = None

    def bracket(self) -> BracketPoly:
        total = bracket(self.graph)
        if self.remainder is not None:
            coeff, rest = self.remainder
            total = total + coeff * bracket(rest)
        return total


_TWIN_CASES = {
    "a": (Mark.U, Mark.U),
    "b": (Mark.NONE, Mark.U),
    "c": (Mark.NONE, Mark.NONE),
    "d": (Mark.C, Mark.U),
}


def twin_reduce(g: MarkedGraph, v: int, w: int, case: str) -> TwinReduction:
    """Replace nonadjacent unlooped twins v, w by a reweighted v."""
    if case not in _TWIN_CASES:
        raise PreconditionError(f"unknown twin case {case!r}")
    if v == w:
        raise PreconditionError("twins must be distinct")
    if g.adjacent(v, w):
        raise PreconditionError(f"twins {v}, {w} must be nonadjacent")
    if g.is_looped(v) or g.is_looped(w):
        raise PreconditionError("twins must be unlooped")
    if g.neighbors(v) - {w} != g.neighbors(w) - {v}:
        raise PreconditionError(f"{v} and {w} do not have the same neighbours")
    want = _TWIN_CASES[case]
    if (g.mark(v), g.mark(w)) != want:
        raise PreconditionError(
            f"case ({case}) needs marks {want[0]}/{want[1]}, got {g.mark(v)}/{g.mark(w)}")
    av, bv = g.weight(v)
    aw, bw = g.weight(w)
    reduced = g.remove(w)
    if case == "d":
        alpha = av * aw + bv * aw
        reduced = reduced.with_mark(v, Mark.NONE).with_weights(v, alpha, bv * bw)
        return TwinReduction(reduced, (av * bw, g.remove(v, w)))
    alpha = av * aw * d + av * bw + bv * aw
    reduced = reduced.with_weights(v, alpha, bv * bw)
    if case == "c":
        reduced = reduced.with_mark(v, Mark.U)
    return TwinReduction(reduced)


# -- reduced bracket and Jones ------------------------------------------------


def reduced_bracket(g: MarkedGraph) -> LaurentA:
    if not g.has_default_weights():
        raise PreconditionError("reduced bracket is only defined for default weights")
    return reduce_to_laurent(bracket_recursive(g))


def jones(g: MarkedGraph) -> LaurentA:
    """(-1)^n A^(6l - 3n) <G>, i.e. the Jones polynomial with A = t^(-1/4)."""
    n = g.n
    ell = g.loop_count
    return reduced_bracket(g) * LaurentA({6 * ell - 3 * n: (-1) ** n})


# -- composition -----------------------------------------------------------------


def _check_join_vertex(g: MarkedGraph, a: int, name: str):
    if a not in g:
        raise PreconditionError(f"{name} does not contain the join vertex {a}")
    if g.is_looped(a) or g.mark(a) is not Mark.NONE or not g.has_default_weights((a,)):
        raise PreconditionError(f"join vertex {a} must be unlooped, unmarked, with weights (A, B) in {name}")


def compose(f: MarkedGraph, h: MarkedGraph, a: int) -> MarkedGraph:
    """F * H: glue along a, joining every F-neighbour of a to every H-neighbour of a."""
    _check_join_vertex(f, a, "F")
    _check_join_vertex(h, a, "H")
    fa, ha = f.remove(a), h.remove(a)
    if set(fa.vertices) & set(ha.vertices):
        raise PreconditionError("F and H share vertices other than the join vertex")
    g = fa.disjoint_union(ha)
    cross = [(x, y) for x in f.neighbors(a) for y in h.neighbors(a)]
    return g.toggle_edges(cross)


@dataclass(frozen=True)
class CompositionSplit:
    alpha_prime: BracketPoly
    beta_prime: BracketPoly
    gamma: BracketPoly

    def predict(self, h: MarkedGraph, a: int) -> BracketPoly:
        """[H'] + gamma*[H - a] for a composition partner H."""
        _check_join_vertex(h, a, "H")
        h_prime = h.with_weights(a, self.alpha_prime, self.beta_prime)
        return bracket(h_prime) + self.gamma * bracket(h.remove(a))


def composition_split(f: MarkedGraph, a: int) -> CompositionSplit:
    """Universal (alpha', beta', gamma) for F at the join vertex a, from three probes."""
    _check_join_vertex(f, a, "F")
    e1 = bracket(f.remove(a))
    e2 = bracket(f.with_weights(a, 1, 0))
    e4 = bracket(f.with_weights(a, 0, 1))
    try:
        u = exact_divide(e1 + e2 + e4, d + 2)
        alpha = exact_divide(e1 - u, d - 1)
        beta = exact_divide(e4 - u, d - 1)
        gamma = exact_divide(e2 - u, d - 1)
    except DivisibilityError as exc:
        raise DivisibilityError(f"composition probes are inconsistent: {exc}") from exc
    return CompositionSplit(alpha, beta, gamma)


__all__ = [
    "StateMatrix", "adjacency_matrix", "state_matrix", "state_nullity", "bracket",
    "single_vertex_bracket", "bracket_recursive", "switch_step", "switch_identity_sides",
    "double_smoothing_step", "TwinReduction", "twin_reduce", "reduced_bracket", "jones",
    "compose", "CompositionSplit", "composition_split", "writhe",
]
