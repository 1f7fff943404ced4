import io
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from markbracket.cli import run
from markbracket.diagram import format_gauss, random_gauss_code


def call(tmp_path, *args, text=None, files=None):
    paths = []
    for k, body in enumerate(files or [text]):
        p = tmp_path / f"in{k}.txt"
        p.write_text(body)
        paths.append(str(p))
    out, err = io.StringIO(), io.StringIO()
    status = run([args[0], *paths, *args[1:]], out, err)
    return status, out.getvalue(), err.getvalue()


def test_bracket_single_vertex(tmp_path):
    assert call(tmp_path, "bracket", text="vertex 1\n") == (0, "A*d + B\n", "")


def test_jones_empty_graph(tmp_path):
    status, out, _ = call(tmp_path, "jones", text="")
    assert status == 0
    assert out == "1\n1\n"


def test_jones_hopf_both_notations(tmp_path):
    status, out, _ = call(tmp_path, "jones", text="1 2 / 1 2 signs 1+ 2+\n")
    assert status == 0
    assert out == "-A^-10 - A^-2\n-t^{1/2} - t^{5/2}\n"


def test_oracle_hopf(tmp_path):
    assert call(tmp_path, "oracle", text="1 2 / 1 2 signs 1+ 2+\n") == (0, "A^2*d + 2*A*B + B^2*d\n", "")


def test_tsv_output(tmp_path):
    status, out, _ = call(tmp_path, "bracket", "--format", "tsv", text="graph x\nvertex 1 mark c\n")
    assert (status, out) == (0, "x\tA + B\n")


def test_interlace_kink(tmp_path):
    status, out, _ = call(tmp_path, "interlace", text="1 1 signs 1-\n")
    assert status == 0
    assert out.startswith("graph D1\nvertex 1 loop")


def test_complement_and_pivot(tmp_path):
    g = "vertex 1\nvertex 2\nvertex 3\nedge 1 2\nedge 2 3\n"
    status, out, _ = call(tmp_path, "complement", "-v", "2", text=g)
    assert status == 0
    assert "edge 1 3" in out and "vertex 2 mark u" in out
    status, out, _ = call(tmp_path, "pivot", "-v", "2", "-v", "3", text=g)
    assert status == 0
    assert "edge 1 3" in out and "edge 1 2" not in out


def test_move_listing_and_application(tmp_path):
    status, out, _ = call(tmp_path, "move", text="vertex 1\n")
    assert status == 0 and "omega1 1" in out.splitlines()
    status, out, _ = call(tmp_path, "move", "--move", "omega1", "-v", "1", text="vertex 1\n")
    assert (status, out) == (0, "graph G\n")


def test_move_not_applicable_exits_1(tmp_path):
    status, _, err = call(tmp_path, "move", "--move", "omega1", "-v", "1", text="vertex 1 mark c\n")
    assert status == 1
    assert "not applicable" in err and "mark of 1" in err


def test_labeled_move(tmp_path):
    status, out, _ = call(tmp_path, "move", "--move", "g4p", "-v", "1",
                          text="lvertex 1 1 +\nlvertex 2 0 -\nedge 1 2\n")
    assert status == 0
    assert "lvertex 1 1 -" in out and "lvertex 2 1 -" in out


def test_equiv(tmp_path):
    status, out, _ = call(tmp_path, "equiv", files=["vertex 1\n", ""])
    assert status == 0
    assert out.splitlines()[0].startswith("equivalent")
    status, out, _ = call(tmp_path, "equiv", files=["1 2 / 1 2 signs 1+ 2+\n", "O signs\n"])
    assert out.startswith("distinct-by-invariant")


def test_verify_passes(tmp_path):
    status, out, _ = call(tmp_path, "verify", text="1 2 1 3 2 3 signs 1+ 2- 3+\n")
    assert status == 0
    lines = out.splitlines()
    assert lines and all(line.startswith("PASS") for line in lines)


def test_verify_failure_exits_2(tmp_path, monkeypatch):
    import markbracket.cli as cli
    monkeypatch.setattr(cli, "bracket_recursive", lambda g: None)
    status, out, _ = call(tmp_path, "verify", text="vertex 1\n")
    assert status == 2 and "FAIL" in out


def test_parse_error_exits_1_with_position(tmp_path):
    status, out, err = call(tmp_path, "bracket", text="vertex 1\nedge 1 9\n")
    assert status == 1 and out == ""
    assert "line 2, column 8" in err


@pytest.mark.parametrize("argv", [
    ["bracket"],
    ["nonsense", "x"],
    ["bracket", "f", "--budget", "3"],
    ["pivot", "f", "-v", "1"],
    ["equiv", "f", "--budget", "0"],
])
def test_usage_errors_exit_1(tmp_path, argv):
    (tmp_path / "f").write_text("vertex 1\nvertex 2\nedge 1 2\n")
    argv = [str(tmp_path / a) if a == "f" else a for a in argv]
    assert run(argv, io.StringIO(), io.StringIO()) == 1


def test_missing_file_exits_1(tmp_path):
    assert run(["bracket", str(tmp_path / "nope")], io.StringIO(), io.StringIO()) == 1


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 20))
def test_interlace_then_bracket_equals_oracle(tmp_path_factory, seed, euler_seed):
    tmp = tmp_path_factory.mktemp("cli")
    code = random_gauss_code(random.Random(seed), max_crossings=5)
    src = tmp / "d.txt"
    src.write_text(format_gauss(code) + "\n")
    out = io.StringIO()
    assert run(["interlace", str(src), "--euler-seed", str(euler_seed)], out, io.StringIO()) == 0
    graph = tmp / "g.txt"
    graph.write_text(out.getvalue())
    b, o = io.StringIO(), io.StringIO()
    assert run(["bracket", str(graph)], b, io.StringIO()) == 0
    assert run(["oracle", str(src)], o, io.StringIO()) == 0
    assert b.getvalue() == o.getvalue()
