import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import gf2_square
from oracles import naive_nullity, naive_rank
from markbracket.errors import DimensionError
from markbracket.gf2 import Gf2Matrix, block_diag, delete_row_col, nullity


def test_empty_matrix_has_nullity_zero():
    m = Gf2Matrix.from_lists([])
    assert (m.n_rows, m.n_cols) == (0, 0)
    assert m.rank() == 0
    assert nullity(m) == 0


def test_small_examples():
    assert nullity(Gf2Matrix.from_lists([[0]])) == 1
    assert nullity(Gf2Matrix.from_lists([[1, 1], [1, 1]])) == 1
    assert nullity(Gf2Matrix.identity(5)) == 0
    assert nullity(Gf2Matrix.zeros(4)) == 4


def test_non_square_is_rejected():
    with pytest.raises(DimensionError):
        nullity(Gf2Matrix.from_lists([[1, 0, 1]]))


def test_out_of_range_entry():
    m = Gf2Matrix.identity(2)
    assert m[1, 1] == 1
    with pytest.raises(DimensionError):
        m[2, 0]


def test_ragged_rows_rejected():
    with pytest.raises(DimensionError):
        Gf2Matrix.from_lists([[1, 0], [1]])


def test_delete_row_col_examples():
    eye = Gf2Matrix.from_lists([[1, 0], [0, 1]])
    assert delete_row_col(eye, {0}).to_lists() == [[1]]
    assert delete_row_col(eye, set()) == eye
    gone = delete_row_col(Gf2Matrix.from_lists([[1, 1], [0, 1]]), {0, 1})
    assert (gone.n_rows, gone.n_cols) == (0, 0)
    with pytest.raises(DimensionError):
        delete_row_col(eye, {2})


def test_delete_keeps_order():
    m = Gf2Matrix.from_lists([[1, 0, 1], [0, 0, 1], [1, 1, 0]])
    assert delete_row_col(m, {1}).to_lists() == [[1, 1], [1, 0]]


@given(gf2_square())
def test_rank_matches_naive_eliminator(entries):
    m = Gf2Matrix.from_lists(entries)
    assert m.rank() == naive_rank(entries)
    assert nullity(m) == naive_nullity(entries)


@given(gf2_square())
def test_rank_plus_nullity(entries):
    m = Gf2Matrix.from_lists(entries)
    assert m.rank() + nullity(m) == m.n_cols


@given(gf2_square(), st.randoms(use_true_random=False))
def test_nullity_invariant_under_simultaneous_permutation(entries, rnd):
    m = Gf2Matrix.from_lists(entries)
    perm = list(range(m.n_rows))
    rnd.shuffle(perm)
    assert nullity(m.permuted(perm)) == nullity(m)


@given(gf2_square(max_n=5), gf2_square(max_n=5))
def test_block_diagonal_nullity_adds(a, b):
    m1, m2 = Gf2Matrix.from_lists(a), Gf2Matrix.from_lists(b)
    assert nullity(block_diag(m1, m2)) == nullity(m1) + nullity(m2)


def test_round_trip_lists():
    rng = random.Random(0)
    for _ in range(50):
        n, k = rng.randint(0, 6), rng.randint(0, 6)
        rows = [[rng.randint(0, 1) for _ in range(k)] for _ in range(n)]
        assert Gf2Matrix.from_lists(rows, n_cols=k).to_lists() == rows
