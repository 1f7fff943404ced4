"""Positive and negative Hopf diagrams: same r-simplified interlacement graph, different Jones."""

from markbracket.bracket import jones
from markbracket.diagram import (
    build_universe,
    euler_system,
    interlacement_graph,
    parse_gauss,
    reverse_component,
    transport_euler_system,
)
from markbracket.graph import is_isomorphic, r_simplify
from markbracket.io import format_marked_graph
from markbracket.polynomials import render_t


def main():
    pos = parse_gauss("1 2 / 1 2 signs 1+ 2+")
    neg, hmap = reverse_component(pos, 1)
    u_pos, u_neg = build_universe(pos), build_universe(neg)
    c = euler_system(u_pos)
    graphs = {
        "positive": interlacement_graph(u_pos, c),
        "negative": interlacement_graph(u_neg, transport_euler_system(c, hmap, u_neg)),
    }
    for name, g in graphs.items():
        j = jones(g)
        print(f"# {name} Hopf: {j}   ({render_t(j)})")
        print(format_marked_graph(g, name))
        print(format_marked_graph(r_simplify(g), name + "-r"))
    same = is_isomorphic(*(r_simplify(g) for g in graphs.values()))
    print("r-simplifications isomorphic:", same)


if __name__ == "__main__":
    main()
