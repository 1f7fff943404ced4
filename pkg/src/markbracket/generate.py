"""Random instances for tests and experiment scripts."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .diagram import EulerSystem, GaussCode, build_universe, euler_system, kappa_walk, random_gauss_code
from .graph import Mark, MarkedGraph, marked_local_complement
from .moves import LabeledGraph, MoveKind, MoveSpec
from .polynomials import BracketPoly

MARKS = tuple(Mark)


@dataclass(frozen=True)
class GraphConfig:
    min_vertices: int = 0
    max_vertices: int = 8
    edge_prob: float = 0.4
    loop_prob: float = 0.5
    mark_prob: float = 0.75
    max_free_loops: int = 2
    weighted: bool = False


@dataclass(frozen=True)
class DiagramConfig:
    max_crossings: int = 6
    max_components: int = 3
    min_crossings: int = 0
    euler_systems: int = 5
    walk_length: int = 6


@dataclass(frozen=True)
class LabeledConfig:
    min_vertices: int = 1
    max_vertices: int = 8
    edge_prob: float = 0.4


def random_weight(rng: random.Random) -> BracketPoly:
    p = BracketPoly()
    for _ in range(rng.randint(1, 2)):
        p = p + BracketPoly.monomial(rng.randint(0, 2), rng.randint(0, 1), rng.randint(0, 1),
                                     rng.choice((-2, -1, 1, 2, 3)))
    return p


def random_marked_graph(rng: random.Random, cfg: GraphConfig = GraphConfig(), first: int = 1) -> MarkedGraph:
    n = rng.randint(cfg.min_vertices, cfg.max_vertices)
    vs = list(range(first, first + n))
    edges = [(a, b) for i, a in enumerate(vs) for b in vs[i + 1:] if rng.random() < cfg.edge_prob]
    loops = [v for v in vs if rng.random() < cfg.loop_prob]
    marks = {v: rng.choice(MARKS[1:]) for v in vs if rng.random() < cfg.mark_prob}
    weights = None
    if cfg.weighted:
        weights = {v: (random_weight(rng), random_weight(rng)) for v in vs if rng.random() < 0.5}
    return MarkedGraph(vs, edges, loops, marks, rng.randint(0, cfg.max_free_loops), weights)


def random_subset(rng: random.Random, items, prob: float = 0.5) -> list:
    return [x for x in items if rng.random() < prob]


def random_labeled_graph(rng: random.Random, cfg: LabeledConfig = LabeledConfig()) -> LabeledGraph:
    n = rng.randint(cfg.min_vertices, cfg.max_vertices)
    vs = range(1, n + 1)
    labels = {v: (rng.randint(0, 1), rng.choice((1, -1))) for v in vs}
    return LabeledGraph(labels, [(a, b) for a in vs for b in vs if a < b and rng.random() < cfg.edge_prob])


def random_gauss(rng: random.Random, cfg: DiagramConfig = DiagramConfig()) -> GaussCode:
    return random_gauss_code(rng, cfg.max_crossings, cfg.max_components, cfg.min_crossings)


def random_euler_systems(code: GaussCode, rng: random.Random, cfg: DiagramConfig = DiagramConfig()) -> list[EulerSystem]:
    """The deterministic system followed by random kappa-walks from it."""
    start = euler_system(build_universe(code))
    out = [start]
    while len(out) < cfg.euler_systems:
        out.append(kappa_walk(start, rng, rng.randint(1, cfg.walk_length)))
    return out


def seeded_euler_system(code: GaussCode, seed: int) -> EulerSystem:
    """``seed`` random kappa-transforms (drawn from Random(seed)) applied to the default system."""
    start = euler_system(build_universe(code))
    return kappa_walk(start, random.Random(seed), seed)


# -- move configurations ----------------------------------------------------------


def move_instance(rng: random.Random, kind: MoveKind, cfg: GraphConfig = GraphConfig(max_vertices=5),
                  conjugate: bool = False) -> tuple[MarkedGraph, MoveSpec]:
    """A random graph containing a configuration for ``kind`` and the move naming it.

    With ``conjugate`` the configuration is hidden behind random marked local
    complementations, which the returned move undoes first.
    """
    base = random_marked_graph(rng, cfg)
    fresh = max(base.vertices) + 1 if base.n else 1
    v, w, x = fresh, fresh + 1, fresh + 2
    outside = base.vertices
    if kind is MoveKind.OMEGA1:
        g = base.add_vertex(v, looped=rng.random() < 0.5, mark=rng.choice((Mark.NONE, Mark.U)))
        m = MoveSpec(kind, (v,))
    elif kind is MoveKind.OMEGA2A:
        s = random_subset(rng, outside)
        g = base.add_vertex(v, s, looped=True).add_vertex(w, s)
        if rng.random() < 0.5:
            g = g.toggle_edges([(v, w)])
        m = MoveSpec(kind, (v, w))
    elif kind in (MoveKind.OMEGA2B, MoveKind.OMEGA2C):
        if not outside:
            base = base.add_vertex(x)
            outside = base.vertices
        s = random_subset(rng, outside)
        z = rng.choice(outside)
        if z not in s:
            s.append(z)
        g = base.add_vertex(v, s, looped=True, mark=Mark.C)
        g = g.add_vertex(w, [v] if kind is MoveKind.OMEGA2B else s + [v])
        m = MoveSpec(kind, (v, w), witness=z)
    elif kind is MoveKind.OMEGA2D:
        g = base.add_vertex(v, looped=True, mark=Mark.C).add_vertex(w, [v])
        m = MoveSpec(kind, (v, w))
    elif kind is MoveKind.OMEGA3:
        nbrs: dict[int, list[int]] = {v: [], w: [], x: []}
        for y in outside:
            for t in rng.choice(((), (v, w), (v, x), (w, x))):
                nbrs[t].append(y)
        g = base.add_vertex(v, nbrs[v], looped=True).add_vertex(w, nbrs[w] + [v])
        g = g.add_vertex(x, nbrs[x] + [v, w])
        m = MoveSpec(kind, (v, w, x))
    else:
        raise ValueError(f"no generator for {kind}")
    if conjugate and g.n:
        pre = [rng.choice(g.vertices) for _ in range(rng.randint(1, 3))]
        hidden = g
        for y in pre:
            hidden = marked_local_complement(hidden, y)
        post_pool = [y for y in g.vertices if y not in m.targets]
        post = [rng.choice(post_pool) for _ in range(rng.randint(0, 2))] if post_pool else []
        return hidden, MoveSpec(m.kind, m.targets, m.witness, pre=tuple(reversed(pre)), post=tuple(post))
    return g, m


def twin_instance(rng: random.Random, case: str, cfg: GraphConfig = GraphConfig(max_vertices=5, weighted=True)
                  ) -> tuple[MarkedGraph, int, int]:
    """A graph with nonadjacent unlooped twins v, w carrying the marks of ``case``."""
    marks = {"a": (Mark.U, Mark.U), "b": (Mark.NONE, Mark.U), "c": (Mark.NONE, Mark.NONE), "d": (Mark.C, Mark.U)}[case]
    base = random_marked_graph(rng, cfg)
    v = max(base.vertices) + 1 if base.n else 1
    w = v + 1
    s = random_subset(rng, base.vertices)
    g = base.add_vertex(v, s, mark=marks[0]).add_vertex(w, s, mark=marks[1])
    if cfg.weighted:
        g = g.with_weights(v, random_weight(rng), random_weight(rng))
        g = g.with_weights(w, random_weight(rng), random_weight(rng))
    return g, v, w


def composition_pair(rng: random.Random, max_f: int = 6, max_h: int = 5) -> tuple[MarkedGraph, MarkedGraph, int]:
    """Random F and H sharing only the plain join vertex 0."""
    a = 0
    f = random_marked_graph(rng, GraphConfig(max_vertices=max_f - 1), first=1)
    f = f.add_vertex(a, random_subset(rng, f.vertices))
    h = random_marked_graph(rng, GraphConfig(max_vertices=max_h - 1), first=100)
    h = h.add_vertex(a, random_subset(rng, h.vertices))
    return f, h, a


__all__ = [
    "GraphConfig", "DiagramConfig", "LabeledConfig", "random_weight", "random_marked_graph",
    "random_subset", "random_labeled_graph", "random_gauss", "random_euler_systems",
    "seeded_euler_system", "move_instance", "twin_instance", "composition_pair",
]
