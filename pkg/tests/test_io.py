import random

import pytest
from hypothesis import given

from conftest import labeled_graphs, marked_graphs
from markbracket.diagram import format_gauss, parse_gauss, random_gauss_code
from markbracket.errors import ParseError
from markbracket.graph import Mark, MarkedGraph
from markbracket.io import (
    detect_format,
    format_labeled_graph,
    format_marked_graph,
    parse_any,
    parse_gauss_codes,
    parse_graphs,
    parse_labeled_graph,
    parse_marked_graph,
)
from markbracket.moves import LabeledGraph
from markbracket.polynomials import A_ as A, B_ as B


def test_parse_marked_example():
    text = """
    # a looped c-vertex joined to a plain one
    graph demo
    freeloops 1
    vertex 1 loop mark cr
    vertex 2 alpha 2*A beta B + 1
    edge 1 2
    """
    g = parse_marked_graph(text)
    assert g.vertices == (1, 2)
    assert g.is_looped(1) and g.mark(1) is Mark.CR
    assert g.weight(2) == (2 * A, B + 1)
    assert g.free_loops == 1
    assert g.adjacent(1, 2)


def test_empty_file_is_empty_graph():
    assert parse_marked_graph("") == MarkedGraph()
    assert detect_format("# nothing\n") == "marked"


def test_several_graphs():
    items = parse_graphs("graph a\nvertex 1\ngraph b\nlvertex 1 0 +\n")
    assert [n.name for n in items] == ["a", "b"]
    assert isinstance(items[0].item, MarkedGraph)
    assert isinstance(items[1].item, LabeledGraph)


def test_detect_format():
    assert detect_format("1 2 / 1 2 signs 1+ 2+\n") == "gauss"
    assert detect_format("lvertex 1 1 -\n") == "labeled"
    assert detect_format("vertex 1\n") == "marked"
    codes = parse_any("1 1 signs 1+\n\nO signs\n")
    assert [n.name for n in codes] == ["D1", "D2"]


@pytest.mark.parametrize("text,line,column", [
    ("vertex 1\nedge 1 2\n", 2, 8),
    ("vertex 1\nvertex x\n", 2, 8),
    ("vertex 1 mark q\n", 1, 15),
    ("vertex 1\nbanana 3\n", 2, 1),
    ("vertex 1\nedge 1 1\n", 2, 1),
    ("freeloops -1\n", 1, 11),
])
def test_parse_errors_carry_position(text, line, column):
    with pytest.raises(ParseError) as info:
        parse_marked_graph(text)
    assert (info.value.line, info.value.column) == (line, column)


def test_labeled_parse_errors():
    with pytest.raises(ParseError) as info:
        parse_labeled_graph("lvertex 1 2 +\n")
    assert info.value.line == 1 and info.value.column == 11
    with pytest.raises(ParseError):
        parse_graphs("vertex 1\nlvertex 2 0 +\n")


def test_gauss_parse_error_line():
    with pytest.raises(ParseError) as info:
        parse_gauss_codes("1 1 signs 1+\n1 2 signs 1+ 2+\n")
    assert info.value.line == 2


@given(marked_graphs(max_vertices=6, weighted=True, max_free_loops=2))
def test_marked_round_trip(g):
    assert parse_marked_graph(format_marked_graph(g)) == g


@given(labeled_graphs(max_vertices=6))
def test_labeled_round_trip(g):
    assert parse_labeled_graph(format_labeled_graph(g)) == g


def test_gauss_round_trip():
    rng = random.Random(1)
    for _ in range(200):
        code = random_gauss_code(rng, max_crossings=6)
        assert parse_gauss(format_gauss(code)) == code
