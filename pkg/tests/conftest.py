import os
import sys

import pytest

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from markbracket.graph import Mark, MarkedGraph  # noqa: E402
from markbracket.moves import LabeledGraph  # noqa: E402
from markbracket.polynomials import BracketPoly, LaurentA  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=400, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def marked_graphs(draw, max_vertices=6, min_vertices=0, weighted=False, max_free_loops=2):
    n = draw(st.integers(min_vertices, max_vertices))
    vs = list(range(1, n + 1))
    pairs = [(a, b) for a in vs for b in vs if a < b]
    edges = [p for p in pairs if draw(st.booleans())]
    loops = [v for v in vs if draw(st.booleans())]
    marks = {v: draw(st.sampled_from(list(Mark))) for v in vs}
    weights = None
    if weighted:
        weights = {v: (draw(bracket_polys(max_terms=2)), draw(bracket_polys(max_terms=2)))
                   for v in vs if draw(st.booleans())}
    return MarkedGraph(vs, edges, loops, marks, draw(st.integers(0, max_free_loops)), weights)


@st.composite
def bracket_polys(draw, max_terms=4, max_exp=3):
    terms = draw(st.dictionaries(
        st.tuples(st.integers(0, max_exp), st.integers(0, max_exp), st.integers(0, max_exp)),
        st.integers(-5, 5), max_size=max_terms))
    return BracketPoly(terms)


@st.composite
def laurent_polys(draw, max_terms=4):
    return LaurentA(draw(st.dictionaries(st.integers(-8, 8), st.integers(-5, 5), max_size=max_terms)))


@st.composite
def gf2_square(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    return [[draw(st.integers(0, 1)) for _ in range(n)] for _ in range(n)]


@st.composite
def labeled_graphs(draw, max_vertices=7, min_vertices=1):
    n = draw(st.integers(min_vertices, max_vertices))
    vs = list(range(1, n + 1))
    labels = {v: (draw(st.integers(0, 1)), draw(st.sampled_from((1, -1)))) for v in vs}
    edges = [(a, b) for a in vs for b in vs if a < b and draw(st.booleans())]
    return LabeledGraph(labels, edges)


# -- acceptance summary ----------------------------------------------------------

_CRITERIA: dict[int, list[str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or (rep.when != "call" and not rep.failed):
        return
    n = mark.args[0]
    ok = rep.passed and not hasattr(rep, "wasxfail")
    _CRITERIA.setdefault(n, []).append("" if ok else item.name)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        bad = [x for x in _CRITERIA[n] if x]
        line = f"criterion {n:2d}: {'FAIL' if bad else 'PASS'}"
        if bad:
            line += "  (" + ", ".join(bad) + ")"
        terminalreporter.write_line(line)
