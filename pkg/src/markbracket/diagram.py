"""Oriented link diagrams given as signed Gauss codes.

A crossing ``x`` is met twice while walking the components; the k-th visit
(k = 0, 1, in reading order) owns the half-edges ``(x, k, IN)`` and
``(x, k, OUT)``.  Arcs join the OUT half-edge of one visit to the IN
half-edge of the next.  Virtual crossings and over/under data are not
represented: signs and orientations are all the bracket needs.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Mapping

import networkx as nx

from .errors import CapacityError, ParseError, PreconditionError, UnknownVertexError
from .gf2 import Gf2Matrix, nullity
from .graph import Mark, MarkedGraph
from .polynomials import BracketPoly

IN, OUT = 0, 1

HalfEdge = tuple[int, int, int]  # (crossing, visit, IN/OUT)
Transition = frozenset  # frozenset of two frozensets of half-edges


def _pairing(p: Iterable[HalfEdge], q: Iterable[HalfEdge]) -> Transition:
    return frozenset((frozenset(p), frozenset(q)))


@dataclass(frozen=True)
class GaussCode:
    """Signed Gauss code of an oriented (virtual) link diagram.

    ``components`` holds the crossing sequences of the components that have
    crossings; ``free_components`` counts the crossing-free ones.  ``signs``
    maps each crossing label to +1 or -1.
    """

    components: tuple[tuple[int, ...], ...]
    signs: Mapping[int, int] = field(hash=False)
    free_components: int = 0

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(tuple(c) for c in self.components))
        object.__setattr__(self, "signs", dict(self.signs))
        counts: dict[int, int] = {}
        for comp in self.components:
            if not comp:
                raise PreconditionError("empty component; count it in free_components instead")
            for x in comp:
                counts[x] = counts.get(x, 0) + 1
        for x, k in counts.items():
            if k != 2:
                raise PreconditionError(f"crossing {x} occurs {k} times, expected 2")
        if set(self.signs) != set(counts):
            missing = set(counts) - set(self.signs)
            extra = set(self.signs) - set(counts)
            raise PreconditionError(f"signs do not match crossings (missing {sorted(missing)}, extra {sorted(extra)})")
        for x, s in self.signs.items():
            if s not in (1, -1):
                raise PreconditionError(f"sign of crossing {x} must be +1 or -1")
        if self.free_components < 0:
            raise PreconditionError("free component count must be nonnegative")

    @property
    def crossings(self) -> tuple[int, ...]:
        return tuple(sorted(self.signs))

    @property
    def n_components(self) -> int:
        return len(self.components) + self.free_components

    @classmethod
    def parse(cls, text: str, line: int | None = None) -> GaussCode:
        return parse_gauss(text, line=line)

    def __str__(self):
        return format_gauss(self)


_GAUSS_SIGN = re.compile(r"^(-?\d+)([+-])$")


def parse_gauss(text: str, line: int | None = None) -> GaussCode:
    """Parse ``1 2 / 1 2 / O signs 1+ 2-``."""
    body, sep, sign_part = text.partition("signs")
    components: list[tuple[int, ...]] = []
    free = 0
    offset = 0
    for chunk in body.split("/"):
        toks = chunk.split()
        col = offset + (len(chunk) - len(chunk.lstrip())) + 1
        offset += len(chunk) + 1
        if not toks:
            if body.strip():
                raise ParseError("empty component between '/' separators", line, col)
            continue
        if toks == ["O"]:
            free += 1
            continue
        comp = []
        for tok in toks:
            try:
                comp.append(int(tok))
            except ValueError:
                raise ParseError(f"crossing label {tok!r} is not an integer", line,
                                 text.find(tok) + 1) from None
        components.append(tuple(comp))
    signs = {}
    base = len(body) + len(sep)
    for m in re.finditer(r"\S+", sign_part):
        sm = _GAUSS_SIGN.match(m.group())
        if not sm:
            raise ParseError(f"bad sign token {m.group()!r}, expected e.g. 3+ or 3-", line, base + m.start() + 1)
        signs[int(sm.group(1))] = 1 if sm.group(2) == "+" else -1
    try:
        return GaussCode(tuple(components), signs, free)
    except PreconditionError as exc:
        raise ParseError(str(exc), line, 1) from None


def format_gauss(code: GaussCode) -> str:
    parts = [" ".join(map(str, c)) for c in code.components] + ["O"] * code.free_components
    signs = " ".join(f"{x}{'+' if code.signs[x] > 0 else '-'}" for x in code.crossings)
    return " / ".join(parts) + (" signs " + signs if signs else " signs")


# -- universe graph -----------------------------------------------------------


@dataclass(frozen=True)
class UniverseGraph:
    vertices: tuple[int, ...]
    mate: Mapping[HalfEdge, HalfEdge] = field(hash=False)
    signs: Mapping[int, int] = field(hash=False)
    free_loops: int = 0

    def half_edges(self, v: int) -> tuple[HalfEdge, ...]:
        if v not in self.signs:
            raise UnknownVertexError(v)
        return ((v, 0, IN), (v, 0, OUT), (v, 1, IN), (v, 1, OUT))

    def link_transition(self, v: int) -> Transition:
        """The pairing that follows the link strands straight through v."""
        self.half_edges(v)
        return _pairing([(v, 0, IN), (v, 0, OUT)], [(v, 1, IN), (v, 1, OUT)])

    def oriented_transition(self, v: int) -> Transition:
        """The smoothing consistent with the link orientation."""
        self.half_edges(v)
        return _pairing([(v, 0, IN), (v, 1, OUT)], [(v, 1, IN), (v, 0, OUT)])

    def disoriented_transition(self, v: int) -> Transition:
        self.half_edges(v)
        return _pairing([(v, 0, IN), (v, 1, IN)], [(v, 0, OUT), (v, 1, OUT)])

    def transitions(self, v: int) -> tuple[Transition, Transition, Transition]:
        return (self.link_transition(v), self.oriented_transition(v), self.disoriented_transition(v))

    def smoothing(self, v: int, letter: str) -> Transition:
        """Transition of the A or B smoothing at v (A is oriented at positive crossings)."""
        positive = self.signs[v] > 0
        if letter not in ("A", "B"):
            raise ValueError(letter)
        oriented = (letter == "A") == positive
        return self.oriented_transition(v) if oriented else self.disoriented_transition(v)

    def edges(self) -> list[tuple[HalfEdge, HalfEdge]]:
        return sorted((h, k) for h, k in self.mate.items() if h < k)

    def components(self) -> list[tuple[int, ...]]:
        """Vertex sets of the nonempty connected components."""
        parent = {v: v for v in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for h, k in self.mate.items():
            a, b = find(h[0]), find(k[0])
            if a != b:
                parent[a] = b
        groups: dict[int, list[int]] = {}
        for v in self.vertices:
            groups.setdefault(find(v), []).append(v)
        return sorted(tuple(sorted(g)) for g in groups.values())

    @property
    def component_count(self) -> int:
        """c(U): nonempty components plus free loops."""
        return len(self.components()) + self.free_loops


def build_universe(code: GaussCode) -> UniverseGraph:
    seen: dict[int, int] = {}
    mate: dict[HalfEdge, HalfEdge] = {}
    for comp in code.components:
        visits = []
        for x in comp:
            k = seen.get(x, 0)
            seen[x] = k + 1
            visits.append((x, k))
        for i, (x, k) in enumerate(visits):
            y, j = visits[(i + 1) % len(visits)]
            out_h, in_h = (x, k, OUT), (y, j, IN)
            mate[out_h] = in_h
            mate[in_h] = out_h
    return UniverseGraph(code.crossings, mate, dict(code.signs), code.free_components)


def count_circuits(u: UniverseGraph, transitions: Mapping[int, Transition]) -> int:
    """Number of closed circuits (free loops included) for a transition at each vertex."""
    joined = nx.Graph()
    joined.add_edges_from(u.mate.items())
    for v in u.vertices:
        t = transitions[v]
        if t not in u.transitions(v):
            raise PreconditionError(f"invalid transition at vertex {v}")
        joined.add_edges_from(tuple(pair) for pair in t)
    return nx.number_connected_components(joined) + u.free_loops


def _visits(components) -> list[list[tuple[int, int]]]:
    seen: dict[int, int] = {}
    out = []
    for comp in components:
        row = []
        for x in comp:
            row.append((x, seen.get(x, 0)))
            seen[x] = seen.get(x, 0) + 1
        out.append(row)
    return out


def reverse_component(code: GaussCode, i: int) -> tuple[GaussCode, dict[HalfEdge, HalfEdge]]:
    """Reverse the orientation of component i.

    Crossings between component i and another component change sign.  The
    returned map sends each half-edge of the old universe to the half-edge
    of the new one lying on the same piece of the diagram, so transition
    systems can be carried across.
    """
    if not 0 <= i < len(code.components):
        raise PreconditionError(f"no component {i} with crossings")
    comps = list(code.components)
    comps[i] = tuple(reversed(comps[i]))
    owner: dict[int, set[int]] = {}
    for j, comp in enumerate(code.components):
        for x in comp:
            owner.setdefault(x, set()).add(j)
    signs = {x: -s if i in owner[x] and len(owner[x]) == 2 else s for x, s in code.signs.items()}
    old, new = _visits(code.components), _visits(comps)
    new[i].reverse()
    hmap = {}
    for j, (row_old, row_new) in enumerate(zip(old, new)):
        for (x, k), (_, k2) in zip(row_old, row_new):
            for d in (IN, OUT):
                hmap[(x, k, d)] = (x, k2, 1 - d if j == i else d)
    return GaussCode(tuple(comps), signs, code.free_components), hmap


def transport_euler_system(c: EulerSystem, hmap: Mapping[HalfEdge, HalfEdge], u: UniverseGraph) -> EulerSystem:
    """The Euler system of u using the same transitions as c, read through ``hmap``."""
    ts = {}
    for v, t in c.transition_system().items():
        ts[v] = frozenset(frozenset(hmap[h] for h in pair) for pair in t)
    return euler_system_from_transitions(u, ts)


def circuit_partition_size(u: UniverseGraph, transitions: Mapping[int, Transition]) -> int:
    missing = set(u.vertices) - set(transitions)
    if missing:
        raise PreconditionError(f"no transition chosen at vertices {sorted(missing)}")
    return count_circuits(u, transitions)


# -- Euler systems -------------------------------------------------------------


@dataclass(frozen=True)
class Passage:
    vertex: int
    entry: HalfEdge
    exit: HalfEdge


@dataclass(frozen=True)
class EulerSystem:
    """One closed walk per nonempty component, as a cyclic list of passages."""

    circuits: tuple[tuple[Passage, ...], ...]

    def words(self) -> list[tuple[int, ...]]:
        return [tuple(p.vertex for p in c) for c in self.circuits]

    def passages(self, v: int) -> tuple[Passage, Passage]:
        found = [p for c in self.circuits for p in c if p.vertex == v]
        if len(found) != 2:
            raise UnknownVertexError(v)
        return found[0], found[1]

    def transition(self, v: int) -> Transition:
        p, q = self.passages(v)
        return _pairing([p.entry, p.exit], [q.entry, q.exit])

    def transition_system(self) -> dict[int, Transition]:
        out = {}
        for c in self.circuits:
            for p in c:
                out.setdefault(p.vertex, None)
        return {v: self.transition(v) for v in out}

    def key(self) -> frozenset:
        """Identity of the system ignoring circuit start points and directions."""
        return frozenset(self.transition_system().items())

    def validate(self, u: UniverseGraph) -> None:
        used = set()
        visits: dict[int, int] = {}
        for circuit in self.circuits:
            if not circuit:
                raise PreconditionError("empty circuit")
            for i, p in enumerate(circuit):
                if p.entry[0] != p.vertex or p.exit[0] != p.vertex or p.entry == p.exit:
                    raise PreconditionError(f"passage {p} does not pass through its vertex")
                nxt = circuit[(i + 1) % len(circuit)]
                if u.mate.get(p.exit) != nxt.entry:
                    raise PreconditionError(f"passage {p} is not followed by an arc to {nxt}")
                edge = frozenset((p.exit, nxt.entry))
                if edge in used:
                    raise PreconditionError("an edge is traversed twice")
                used.add(edge)
                visits[p.vertex] = visits.get(p.vertex, 0) + 1
            verts = {p.vertex for p in circuit}
            comp = next((c for c in u.components() if set(c) & verts), None)
            if comp is None or set(comp) != verts:
                raise PreconditionError("circuit does not cover exactly one component")
        if len(used) != len(u.mate) // 2:
            raise PreconditionError("not every edge is traversed")
        if any(k != 2 for k in visits.values()) or set(visits) != set(u.vertices):
            raise PreconditionError("every vertex must be visited exactly twice")


def euler_system(u: UniverseGraph) -> EulerSystem:
    """Hierholzer's algorithm per component, lowest handles first."""
    used: set[frozenset] = set()
    circuits = []
    for comp in u.components():
        start = comp[0]
        # stack entries: (departure half-edge, arrival half-edge)
        stack: list[tuple[HalfEdge | None, HalfEdge | None, int]] = [(None, None, start)]
        trail = []
        while stack:
            v = stack[-1][2]
            nxt = None
            for h in u.half_edges(v):
                e = frozenset((h, u.mate[h]))
                if e not in used:
                    nxt = h
                    break
            if nxt is None:
                trail.append(stack.pop())
            else:
                used.add(frozenset((nxt, u.mate[nxt])))
                arr = u.mate[nxt]
                stack.append((nxt, arr, arr[0]))
        trail.reverse()
        steps = trail[1:]  # drop the sentinel
        passages = []
        for i, (_, arr, v) in enumerate(steps):
            dep = steps[(i + 1) % len(steps)][0]
            passages.append(Passage(v, arr, dep))
        # rotate so the walk starts at a passage through the start vertex
        circuits.append(tuple(passages))
    es = EulerSystem(tuple(circuits))
    es.validate(u)
    return es


def euler_system_from_transitions(u: UniverseGraph, transitions: Mapping[int, Transition]) -> EulerSystem:
    """Trace the circuits of a transition system; it must give one circuit per component."""
    partner = {}
    for v in u.vertices:
        for pair in transitions[v]:
            a, b = sorted(pair)
            partner[a] = b
            partner[b] = a
    seen = set()
    circuits = []
    for comp in u.components():
        h0 = u.half_edges(comp[0])[0]
        passages = []
        h = h0
        while True:
            out = partner[h]
            passages.append(Passage(h[0], h, out))
            seen.add(h)
            seen.add(out)
            h = u.mate[out]
            if h == h0:
                break
        circuits.append(tuple(passages))
    es = EulerSystem(tuple(circuits))
    es.validate(u)
    return es


def all_euler_systems(u: UniverseGraph, limit: int = 9) -> set[frozenset]:
    """Keys of every Euler system of u, by brute force over 3^n transition systems."""
    if len(u.vertices) > limit:
        raise CapacityError(f"exhaustive Euler-system enumeration limited to {limit} vertices")
    target = len(u.components())
    found = set()
    choices = [u.transitions(v) for v in u.vertices]
    for combo in product(*choices):
        ts = dict(zip(u.vertices, combo))
        if count_circuits(u, ts) - u.free_loops == target:
            found.add(frozenset(ts.items()))
    return found


def kappa_transform(c: EulerSystem, v: int) -> EulerSystem:
    """Reverse the walk between the two visits to v."""
    for ci, circuit in enumerate(c.circuits):
        idx = [i for i, p in enumerate(circuit) if p.vertex == v]
        if not idx:
            continue
        i, j = idx
        first, second = circuit[i], circuit[j]
        middle = [Passage(p.vertex, p.exit, p.entry) for p in reversed(circuit[i + 1:j])]
        new = (list(circuit[:i])
               + [Passage(v, first.entry, second.entry)]
               + middle
               + [Passage(v, first.exit, second.exit)]
               + list(circuit[j + 1:]))
        circuits = list(c.circuits)
        circuits[ci] = tuple(new)
        return EulerSystem(tuple(circuits))
    raise UnknownVertexError(v)


def kappa_walk(c: EulerSystem, rng: random.Random, steps: int) -> EulerSystem:
    vertices = sorted({p.vertex for circuit in c.circuits for p in circuit})
    for _ in range(steps if vertices else 0):
        c = kappa_transform(c, rng.choice(vertices))
    return c


# -- interlacement -------------------------------------------------------------


def interlaced_pairs(c: EulerSystem) -> set[tuple[int, int]]:
    pairs = set()
    for word in c.words():
        first: dict[int, int] = {}
        second: dict[int, int] = {}
        for i, x in enumerate(word):
            if x in first:
                second[x] = i
            else:
                first[x] = i
        xs = sorted(first)
        for a in xs:
            for b in xs:
                if a < b:
                    fa, sa, fb, sb = first[a], second[a], first[b], second[b]
                    if (fa < fb < sa < sb) or (fb < fa < sb < sa):
                        pairs.add((a, b))
    return pairs


def circuit_transitions(c: EulerSystem, v: int) -> dict[str, Transition]:
    """The three transitions at v named relative to an orientation of C.

    ``follow`` is C's own pairing, ``consistent`` pairs each entry with the
    other exit, ``inconsistent`` pairs the two entries and the two exits.
    The names do not depend on which orientation of the circuit is used.
    """
    p, q = c.passages(v)
    return {
        "follow": _pairing([p.entry, p.exit], [q.entry, q.exit]),
        "consistent": _pairing([p.entry, q.exit], [q.entry, p.exit]),
        "inconsistent": _pairing([p.entry, q.entry], [p.exit, q.exit]),
    }


_MARK_RULE = {
    # (transition equal to the link's, transition equal to the oriented smoothing)
    ("follow", "consistent"): Mark.NONE,
    ("follow", "inconsistent"): Mark.R,
    ("consistent", "follow"): Mark.C,
    ("consistent", "inconsistent"): Mark.CR,
    ("inconsistent", "consistent"): Mark.U,
    ("inconsistent", "follow"): Mark.UR,
}


def crossing_mark(u: UniverseGraph, c: EulerSystem, v: int) -> Mark:
    kinds = circuit_transitions(c, v)
    by_transition = {t: name for name, t in kinds.items()}
    return _MARK_RULE[(by_transition[u.link_transition(v)], by_transition[u.oriented_transition(v)])]


def interlacement_graph(u: UniverseGraph, c: EulerSystem) -> MarkedGraph:
    """Marked interlacement graph L(D, C)."""
    c.validate(u)
    vs = u.vertices
    marks = {v: crossing_mark(u, c, v) for v in vs}
    loops = [v for v in vs if u.signs[v] < 0]
    return MarkedGraph(vs, sorted(interlaced_pairs(c)), loops, marks, u.component_count - 1)


def circuit_nullity_matrix(u: UniverseGraph, c: EulerSystem, kinds: Mapping[int, str]) -> Gf2Matrix:
    """Simple interlacement matrix of C with each vertex deleted / kept / looped.

    ``kinds[v]`` is ``follow`` (delete), ``consistent`` (keep) or
    ``inconsistent`` (attach a loop).
    """
    pairs = interlaced_pairs(c)
    kept = [v for v in u.vertices if kinds[v] != "follow"]
    index = {v: i for i, v in enumerate(kept)}
    rows = []
    for v in kept:
        if kinds[v] not in ("consistent", "inconsistent"):
            raise PreconditionError(f"unknown transition kind {kinds[v]!r}")
        row = (1 << index[v]) if kinds[v] == "inconsistent" else 0
        for w in kept:
            if (min(v, w), max(v, w)) in pairs:
                row |= 1 << index[w]
        rows.append(row)
    return Gf2Matrix(len(kept), len(kept), tuple(rows))


def circuit_nullity_sides(u: UniverseGraph, c: EulerSystem, kinds: Mapping[int, str]) -> tuple[int, int]:
    """(|P|, c(U) + nullity) for the circuit partition named by ``kinds``."""
    named = {v: circuit_transitions(c, v)[kinds[v]] for v in u.vertices}
    return (circuit_partition_size(u, named),
            u.component_count + nullity(circuit_nullity_matrix(u, c, kinds)))


# -- Kauffman bracket oracle -----------------------------------------------------

ORACLE_LIMIT = 16


def kauffman_oracle(code: GaussCode, limit: int = ORACLE_LIMIT) -> BracketPoly:
    """Sum over all 2^n smoothing states of A^a B^b d^(curves - 1)."""
    u = build_universe(code)
    n = len(u.vertices)
    if n > limit:
        raise CapacityError(f"Kauffman state sum limited to {limit} crossings")
    if code.n_components == 0:
        raise PreconditionError("a diagram needs at least one component")
    smoothings = {v: (u.smoothing(v, "A"), u.smoothing(v, "B")) for v in u.vertices}
    terms: dict[tuple[int, int, int], int] = {}
    for state in product((0, 1), repeat=n):
        ts = {v: smoothings[v][s] for v, s in zip(u.vertices, state)}
        curves = count_circuits(u, ts)
        b = sum(state)
        key = (n - b, b, curves - 1)
        terms[key] = terms.get(key, 0) + 1
    return BracketPoly(terms)


def diagram_bracket(code: GaussCode, c: EulerSystem | None = None) -> BracketPoly:
    """Bracket of the marked interlacement graph of ``code`` w.r.t. ``c``."""
    from .bracket import bracket

    u = build_universe(code)
    return bracket(interlacement_graph(u, c if c is not None else euler_system(u)))


def random_gauss_code(rng: random.Random, max_crossings: int = 6, max_components: int = 3,
                      min_crossings: int = 0, free_prob: float = 0.15) -> GaussCode:
    """Random signed Gauss code; every such code is realised by a virtual diagram."""
    n = rng.randint(min_crossings, max_crossings)
    occ = [x for x in range(1, n + 1) for _ in range(2)]
    rng.shuffle(occ)
    k = rng.randint(1, max_components)
    with_crossings = min(k, len(occ)) if occ else 0
    free = k - with_crossings
    # extra crossing-free components now and then
    if with_crossings and free == 0 and k < max_components and rng.random() < free_prob:
        free = 1
    components = []
    if with_crossings:
        cuts = sorted(rng.sample(range(1, len(occ)), with_crossings - 1))
        bounds = [0] + cuts + [len(occ)]
        components = [tuple(occ[a:b]) for a, b in zip(bounds, bounds[1:])]
    if not components and free == 0:
        free = 1
    signs = {x: rng.choice((1, -1)) for x in range(1, n + 1)}
    return GaussCode(tuple(components), signs, free)


__all__ = [
    "IN", "OUT", "GaussCode", "parse_gauss", "format_gauss", "UniverseGraph", "build_universe",
    "count_circuits", "circuit_partition_size", "Passage", "EulerSystem", "euler_system",
    "euler_system_from_transitions", "all_euler_systems", "kappa_transform", "kappa_walk",
    "interlaced_pairs", "circuit_transitions", "crossing_mark", "interlacement_graph",
    "circuit_nullity_matrix", "circuit_nullity_sides", "kauffman_oracle", "diagram_bracket",
    "random_gauss_code", "reverse_component", "transport_euler_system",
]
