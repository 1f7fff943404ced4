import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import marked_graphs
from oracles import naive_bracket, naive_nullity, naive_state_matrix
from markbracket.bracket import (
    bracket,
    bracket_recursive,
    compose,
    composition_split,
    double_smoothing_step,
    jones,
    reduced_bracket,
    state_matrix,
    state_nullity,
    switch_identity_sides,
    switch_step,
    twin_reduce,
)
from markbracket.errors import PreconditionError
from markbracket.graph import Mark, MarkedGraph, marked_local_complement, r_simplify, toggle_loop_and_r
from markbracket.polynomials import A_ as A, B_ as B, D_ as d, ONE, LaurentA

ONE_VERTEX = [
    # (mark, looped, value) from the closed-form one-vertex table
    ("", False, A * d + B), ("r", True, A * d + B), ("u", False, A * d + B), ("ur", True, A * d + B),
    ("", True, A + B * d), ("r", False, A + B * d), ("u", True, A + B * d), ("ur", False, A + B * d),
    ("c", False, A + B), ("cr", True, A + B), ("c", True, A + B), ("cr", False, A + B),
]


@pytest.mark.parametrize("mark,looped,value", ONE_VERTEX)
def test_one_vertex_table(mark, looped, value):
    g = MarkedGraph([1], loops=[1] if looped else [], marks={1: mark})
    assert bracket(g) == value
    assert bracket_recursive(g) == value


def test_empty_and_free_loops():
    assert bracket(MarkedGraph()) == ONE
    assert bracket(MarkedGraph(free_loops=2)) == d * d
    assert bracket_recursive(MarkedGraph(free_loops=1)) == d


def test_state_matrix_removes_rows():
    g = MarkedGraph([1, 2], [(1, 2)], marks={1: "c"})
    sm = state_matrix(g, set())
    assert sm.removed == (1,)
    assert sm.kept == (2,)
    assert state_nullity(g, set()) == 1
    assert state_nullity(g, {1}) == 0


def test_edge_bracket():
    g = MarkedGraph([1, 2], [(1, 2)])
    assert bracket(g) == A * A + 2 * A * B + B * B * d
    assert double_smoothing_step(g, 1, 2) == bracket(g)


def test_single_vertex_jones_is_one():
    for looped in (False, True):
        for mark in ("", "u"):
            assert jones(MarkedGraph([1], loops=[1] if looped else [], marks={1: mark})) == LaurentA({0: 1})


def test_reduced_bracket_rejects_weights():
    with pytest.raises(PreconditionError):
        reduced_bracket(MarkedGraph([1], weights={1: (1, 2)}))


def test_composition_base_case():
    split = composition_split(MarkedGraph([0]), 0)
    assert (split.alpha_prime, split.beta_prime, split.gamma) == (0 * A, 0 * A, ONE)


def test_twin_case_mismatch():
    g = MarkedGraph([1, 2], marks={1: "u", 2: "u"})
    with pytest.raises(PreconditionError):
        twin_reduce(g, 1, 2, "c")
    assert twin_reduce(g, 1, 2, "a").bracket() == bracket(g)


@given(marked_graphs(max_vertices=6), st.data())
def test_state_matrix_matches_oracle(g, data):
    t = set(data.draw(st.lists(st.sampled_from(g.vertices), unique=True))) if g.n else set()
    assert state_nullity(g, t) == naive_nullity(naive_state_matrix(g, t))


@given(marked_graphs(max_vertices=6, weighted=True))
def test_state_sum_matches_oracle(g):
    assert bracket(g) == naive_bracket(g)


@given(marked_graphs(max_vertices=8))
def test_recursion_matches_state_sum(g):
    assert bracket_recursive(g) == bracket(g)


@given(marked_graphs(max_vertices=7, weighted=True))
def test_weighted_recursion_matches_state_sum(g):
    assert bracket_recursive(g) == bracket(g)


@given(marked_graphs(max_vertices=7, weighted=True), st.data())
def test_mlc_invariance(g, data):
    if not g.n:
        return
    v = data.draw(st.sampled_from(g.vertices))
    assert bracket(marked_local_complement(g, v)) == bracket(g)


@given(marked_graphs(max_vertices=6), st.data())
def test_mlc_preserves_every_state_nullity(g, data):
    if not g.n:
        return
    v = data.draw(st.sampled_from(g.vertices))
    h = marked_local_complement(g, v)
    for mask in range(1 << g.n):
        t = {x for i, x in enumerate(g.vertices) if mask >> i & 1}
        assert state_nullity(g, t) == state_nullity(h, t)


@given(marked_graphs(max_vertices=7), st.data())
def test_loop_and_r_toggle(g, data):
    if not g.n:
        return
    v = data.draw(st.sampled_from(g.vertices))
    assert bracket(toggle_loop_and_r(g, v)) == bracket(g)
    assert bracket(r_simplify(g)) == bracket(g)


@given(marked_graphs(max_vertices=7, weighted=True), st.data())
def test_switch_identity(g, data):
    v = max(g.vertices, default=0) + 1
    nbrs = data.draw(st.lists(st.sampled_from(g.vertices), unique=True)) if g.n else []
    g = g.add_vertex(v, nbrs, looped=True)
    lhs, rhs = switch_identity_sides(g, v)
    assert lhs == rhs
    assert switch_step(g, v) == bracket(g)


@given(marked_graphs(max_vertices=6, weighted=True), st.data())
def test_double_smoothing(g, data):
    v, w = 100, 101
    nv = data.draw(st.lists(st.sampled_from(g.vertices), unique=True)) if g.n else []
    nw = data.draw(st.lists(st.sampled_from(g.vertices), unique=True)) if g.n else []
    g = g.add_vertex(v, nv).add_vertex(w, nw + [v])
    assert double_smoothing_step(g, v, w) == bracket(g)


@given(marked_graphs(max_vertices=5, weighted=True), st.sampled_from("abcd"), st.data())
def test_twin_reductions(g, case, data):
    marks = {"a": ("u", "u"), "b": ("", "u"), "c": ("", ""), "d": ("c", "u")}[case]
    s = data.draw(st.lists(st.sampled_from(g.vertices), unique=True)) if g.n else []
    v, w = 50, 51
    g = g.add_vertex(v, s, mark=Mark.parse(marks[0])).add_vertex(w, s, mark=Mark.parse(marks[1]))
    g = g.with_weights(v, A + 2 * B, B * d - A).with_weights(w, 3 * A, B + d)
    assert twin_reduce(g, v, w, case).bracket() == bracket(g)


@given(marked_graphs(max_vertices=5), marked_graphs(max_vertices=4), st.data())
def test_composition_split(f, h, data):
    f = f.add_vertex(0, data.draw(st.lists(st.sampled_from(f.vertices), unique=True)) if f.n else [])
    h = h.relabel({v: v + 100 for v in h.vertices})
    h = h.add_vertex(0, data.draw(st.lists(st.sampled_from(h.vertices), unique=True)) if h.n else [])
    split = composition_split(f, 0)
    assert split.predict(h, 0) == bracket(compose(f, h, 0))
