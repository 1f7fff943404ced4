"""Bracket and Jones polynomials of multiply marked graphs."""

from .bracket import (
    bracket,
    bracket_recursive,
    compose,
    composition_split,
    jones,
    reduced_bracket,
    twin_reduce,
)
from .diagram import (
    GaussCode,
    build_universe,
    euler_system,
    interlacement_graph,
    kappa_transform,
    kauffman_oracle,
    parse_gauss,
)
from .errors import (
    CapacityError,
    DimensionError,
    DivisibilityError,
    MarkBracketError,
    MoveNotApplicable,
    ParseError,
    PreconditionError,
    UnknownVertexError,
)
from .gf2 import Gf2Matrix, nullity
from .graph import (
    Mark,
    MarkedGraph,
    is_isomorphic,
    marked_local_complement,
    marked_pivot,
    r_simplify,
    writhe,
)
from .moves import LabeledGraph, MoveKind, MoveSpec, apply_move, detect_moves, equivalent_bounded, to_marked
from .polynomials import BracketPoly, LaurentA, parse_poly, render_t

__version__ = "0.1.0"

__all__ = [
    "bracket", "bracket_recursive", "compose", "composition_split", "jones", "reduced_bracket",
    "twin_reduce", "GaussCode", "build_universe", "euler_system", "interlacement_graph",
    "kappa_transform", "kauffman_oracle", "parse_gauss", "CapacityError", "DimensionError",
    "DivisibilityError", "MarkBracketError", "MoveNotApplicable", "ParseError", "PreconditionError",
    "UnknownVertexError", "Mark", "MarkedGraph", "is_isomorphic", "marked_local_complement",
    "marked_pivot", "r_simplify", "writhe", "Gf2Matrix", "nullity", "LabeledGraph", "MoveKind",
    "MoveSpec", "apply_move", "detect_moves", "equivalent_bounded", "to_marked", "BracketPoly",
    "LaurentA", "parse_poly", "render_t",
]
