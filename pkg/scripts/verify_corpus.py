"""Compare interlacement-graph brackets with the diagram state sum on random Gauss codes."""

import argparse
import random
import time
from dataclasses import dataclass

from markbracket.bracket import bracket
from markbracket.diagram import build_universe, interlacement_graph, kauffman_oracle, kappa_transform
from markbracket.generate import DiagramConfig, random_euler_systems, random_gauss
from markbracket.graph import marked_local_complement


@dataclass
class Tally:
    codes: int = 0
    systems: int = 0
    bracket_mismatches: int = 0
    kappa_mismatches: int = 0


def run(n_codes: int, seed: int, cfg: DiagramConfig) -> Tally:
    rng = random.Random(seed)
    t = Tally()
    for _ in range(n_codes):
        code = random_gauss(rng, cfg)
        u = build_universe(code)
        oracle = kauffman_oracle(code)
        t.codes += 1
        for c in random_euler_systems(code, rng, cfg):
            t.systems += 1
            g = interlacement_graph(u, c)
            if bracket(g) != oracle:
                t.bracket_mismatches += 1
                print("bracket mismatch:", code)
            for v in u.vertices:
                if interlacement_graph(u, kappa_transform(c, v)) != marked_local_complement(g, v):
                    t.kappa_mismatches += 1
                    print(f"kappa mismatch at {v}:", code)
    return t


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--codes", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-crossings", type=int, default=6)
    p.add_argument("--max-components", type=int, default=3)
    p.add_argument("--systems", type=int, default=5)
    a = p.parse_args()
    cfg = DiagramConfig(max_crossings=a.max_crossings, max_components=a.max_components, euler_systems=a.systems)
    start = time.perf_counter()
    t = run(a.codes, a.seed, cfg)
    print(f"{t.codes} codes, {t.systems} Euler systems, "
          f"{t.bracket_mismatches} bracket mismatches, {t.kappa_mismatches} kappa mismatches "
          f"in {time.perf_counter() - start:.1f}s")
    raise SystemExit(1 if t.bracket_mismatches or t.kappa_mismatches else 0)


if __name__ == "__main__":
    main()
