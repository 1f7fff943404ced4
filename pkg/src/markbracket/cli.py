"""``markbracket`` command-line front end.

Exit status: 0 on success, 1 on usage or parse errors (and inapplicable
moves), 2 when ``verify`` finds a failing check.
"""

from __future__ import annotations

import argparse
import random
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

from . import moves as mv
from .bracket import bracket, bracket_recursive, jones, reduced_bracket
from .diagram import (
    GaussCode,
    build_universe,
    euler_system,
    interlacement_graph,
    kappa_transform,
    kappa_walk,
    kauffman_oracle,
)
from .errors import MarkBracketError, MoveNotApplicable, ParseError
from .generate import seeded_euler_system
from .graph import MarkedGraph, marked_local_complement, marked_pivot, r_simplify, toggle_loop_and_r
from .io import Named, format_item, parse_any
from .polynomials import render_t

COMMANDS = ("bracket", "reduced", "jones", "interlace", "oracle", "complement", "pivot",
            "rsimplify", "move", "equiv", "verify")

# which options make sense for which commands
_ALLOWED = {
    "euler_seed": {"bracket", "reduced", "jones", "interlace", "verify", "complement", "pivot", "rsimplify", "move", "equiv"},
    "budget": {"equiv"},
    "vertex": {"complement", "pivot", "move"},
    "move": {"move"},
    "witness": {"move"},
}


class UsageError(MarkBracketError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="markbracket", description="Bracket and Jones polynomials of marked graphs.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("files", nargs="+", type=Path)
    p.add_argument("--euler-seed", type=int, default=None,
                   help="apply this many seeded random kappa-transforms to the Euler system of a Gauss code")
    p.add_argument("--budget", type=int, default=None, help="node budget for equiv")
    p.add_argument("--format", choices=("text", "tsv"), default="text")
    p.add_argument("-v", "--vertex", type=int, action="append", default=None,
                   help="target vertex (repeat for several)")
    p.add_argument("--move", default=None, help="move kind, e.g. omega2a or g4p; omit to list moves")
    p.add_argument("--witness", type=int, default=None, help="witness vertex z for omega2b/omega2c")
    return p


@dataclass
class Output:
    lines: list[str]
    status: int = 0


def _as_marked(n: Named, seed: int | None) -> MarkedGraph:
    item = n.item
    if isinstance(item, MarkedGraph):
        return item
    if isinstance(item, GaussCode):
        u = build_universe(item)
        c = seeded_euler_system(item, seed) if seed else euler_system(u)
        return interlacement_graph(u, c)
    return mv.to_marked(item)


def _load(paths: Sequence[Path]) -> list[Named]:
    out = []
    for path in paths:
        try:
            text = path.read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
        try:
            items = parse_any(text)
        except ParseError as exc:
            raise ParseError(f"{path}: {exc}") from None
        out.extend(items)
    return out


def _emit(items: list[Named], values: list[str], fmt: str) -> list[str]:
    if fmt == "tsv":
        return [f"{n.name}\t{v}" for n, v in zip(items, values)]
    if len(items) == 1:
        return list(values)
    return [f"{n.name}: {v}" for n, v in zip(items, values)]


def _emit_graphs(items: list[Named], graphs: list, fmt: str) -> list[str]:
    text = "".join(format_item(g, n.name) for n, g in zip(items, graphs))
    return text.rstrip("\n").split("\n")


def _targets(args, k: int | None = None) -> list[int]:
    vs = args.vertex or []
    if k is not None and len(vs) != k:
        raise UsageError(f"{args.command} needs exactly {k} --vertex option(s)")
    return vs


def cmd_bracket(args, items):
    return Output(_emit(items, [str(bracket_recursive(_as_marked(n, args.euler_seed))) for n in items], args.format))


def cmd_reduced(args, items):
    return Output(_emit(items, [str(reduced_bracket(_as_marked(n, args.euler_seed))) for n in items], args.format))


def cmd_jones(args, items):
    vals = [jones(_as_marked(n, args.euler_seed)) for n in items]
    if args.format == "tsv":
        return Output([f"{n.name}\t{v}\t{render_t(v)}" for n, v in zip(items, vals)])
    lines = []
    for n, v in zip(items, vals):
        prefix = f"{n.name}: " if len(items) > 1 else ""
        lines.append(f"{prefix}{v}")
        lines.append(f"{prefix}{render_t(v)}")
    return Output(lines)


def _codes(items) -> list[GaussCode]:
    for n in items:
        if not isinstance(n.item, GaussCode):
            raise UsageError(f"{n.name} is not a Gauss code")
    return [n.item for n in items]


def cmd_interlace(args, items):
    _codes(items)
    graphs = [_as_marked(n, args.euler_seed) for n in items]
    return Output(_emit_graphs(items, graphs, args.format))


def cmd_oracle(args, items):
    return Output(_emit(items, [str(kauffman_oracle(c)) for c in _codes(items)], args.format))


def cmd_complement(args, items):
    vs = _targets(args)
    if not vs:
        raise UsageError("complement needs at least one --vertex")
    out = []
    for n in items:
        g = _as_marked(n, args.euler_seed)
        for v in vs:
            g = marked_local_complement(g, v)
        out.append(g)
    return Output(_emit_graphs(items, out, args.format))


def cmd_pivot(args, items):
    v, w = _targets(args, 2)
    return Output(_emit_graphs(items, [marked_pivot(_as_marked(n, args.euler_seed), v, w) for n in items],
                               args.format))


def cmd_rsimplify(args, items):
    return Output(_emit_graphs(items, [r_simplify(_as_marked(n, args.euler_seed)) for n in items], args.format))


def cmd_move(args, items):
    if len(items) != 1:
        raise UsageError("move takes exactly one graph")
    (n,) = items
    if isinstance(n.item, mv.LabeledGraph):
        if args.move is None:
            raise UsageError("labeled graphs need --move g1|g2|g3|g3-inv|g4|g4p")
        try:
            kind = mv.GraphLinkMove(args.move)
        except ValueError:
            raise UsageError(f"unknown graph-link move {args.move!r}") from None
        h = mv.apply_graphlink_move(n.item, kind, tuple(_targets(args)))
        return Output(_emit_graphs([n], [h], args.format))
    g = _as_marked(n, args.euler_seed)
    if args.move is None:
        return Output([str(m) for m in mv.detect_moves(g)])
    try:
        kind = mv.MoveKind(args.move)
    except ValueError:
        raise UsageError(f"unknown move {args.move!r}") from None
    m = mv.MoveSpec(kind, tuple(_targets(args)), witness=args.witness)
    return Output(_emit_graphs([n], [mv.apply_move(g, m)], args.format))


def cmd_equiv(args, items):
    if len(items) != 2:
        raise UsageError("equiv compares exactly two graphs")
    g, h = (_as_marked(n, args.euler_seed) for n in items)
    res = mv.equivalent_bounded(g, h, budget=args.budget or 2000)
    if args.format == "tsv":
        return Output([f"{res.verdict}\t{res.explored}\t{'' if res.depth is None else res.depth}"])
    lines = [f"{res.verdict} (explored {res.explored} graphs)"]
    if res.path:
        lines.append("path: " + "; ".join(res.path))
    return Output(lines)


# -- verify -------------------------------------------------------------------------


def _graph_checks(g: MarkedGraph) -> list[tuple[str, Callable[[], bool]]]:
    checks = [
        ("recursion matches state sum", lambda: bracket_recursive(g) == bracket(g)),
        ("bracket invariant under every marked local complement",
         lambda: all(bracket(marked_local_complement(g, v)) == bracket(g) for v in g.vertices)),
        ("bracket invariant under loop/r toggles",
         lambda: all(bracket(toggle_loop_and_r(g, v)) == bracket(g) for v in g.vertices)),
        ("pivot equals triple local complement",
         lambda: all(marked_pivot(g, v, w) == marked_local_complement(marked_local_complement(
             marked_local_complement(g, v), w), v) for v, w in g.edges)),
    ]
    return checks


def _code_checks(code: GaussCode, seed: int | None) -> list[tuple[str, Callable[[], bool]]]:
    u = build_universe(code)
    rng = random.Random(seed or 0)
    systems = [euler_system(u)] + [kappa_walk(euler_system(u), rng, rng.randint(1, 6)) for _ in range(4)]
    oracle = kauffman_oracle(code)

    def commutes():
        for c in systems:
            g = interlacement_graph(u, c)
            for v in u.vertices:
                if interlacement_graph(u, kappa_transform(c, v)) != marked_local_complement(g, v):
                    return False
        return True

    return [
        ("interlacement bracket equals diagram bracket",
         lambda: all(bracket(interlacement_graph(u, c)) == oracle for c in systems)),
        ("kappa-transform matches marked local complement", commutes),
    ]


def cmd_verify(args, items):
    lines, failed = [], False
    for n in items:
        checks = []
        if isinstance(n.item, GaussCode):
            checks += _code_checks(n.item, args.euler_seed)
        checks += _graph_checks(_as_marked(n, args.euler_seed))
        for label, fn in checks:
            ok = fn()
            failed |= not ok
            if args.format == "tsv":
                lines.append(f"{n.name}\t{label}\t{'PASS' if ok else 'FAIL'}")
            else:
                lines.append(f"{'PASS' if ok else 'FAIL'}  {n.name}: {label}")
    return Output(lines, 2 if failed else 0)


HANDLERS = {
    "bracket": cmd_bracket, "reduced": cmd_reduced, "jones": cmd_jones, "interlace": cmd_interlace,
    "oracle": cmd_oracle, "complement": cmd_complement, "pivot": cmd_pivot, "rsimplify": cmd_rsimplify,
    "move": cmd_move, "equiv": cmd_equiv, "verify": cmd_verify,
}


def _validate_options(args):
    for opt, cmds in _ALLOWED.items():
        if getattr(args, opt) is not None and args.command not in cmds:
            raise UsageError(f"--{opt.replace('_', '-')} does not apply to {args.command}")
    if args.euler_seed is not None and args.euler_seed < 0:
        raise UsageError("--euler-seed must be nonnegative")
    if args.budget is not None and args.budget < 1:
        raise UsageError("--budget must be positive")


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        _validate_options(args)
        items = _load(args.files)
        result = HANDLERS[args.command](args, items)
    except (UsageError, ParseError) as exc:
        print(f"markbracket: error: {exc}", file=err)
        return 1
    except MoveNotApplicable as exc:
        print(f"markbracket: move not applicable: {exc}", file=err)
        return 1
    except MarkBracketError as exc:
        print(f"markbracket: error: {exc}", file=err)
        return 1
    for line in result.lines:
        print(line, file=out)
    return result.status


def main(argv: Sequence[str] | None = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
