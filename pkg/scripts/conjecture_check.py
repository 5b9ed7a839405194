"""Compare "every odd vertex set induces an odd number of arcs" with the corollary form.

Exhaustive over all digraphs up to --exhaustive-n vertices, then random
sampling from three families (uniform, corollary-form, perturbed corollary-form).
Any separating graph is printed in the graph file format.
"""

import argparse
import random
from collections import Counter
from dataclasses import dataclass

from lamplight.graph import (Graph, all_digraphs, corollary_form, format_graph,
                             odd_sets_induce_odd_arc_count, random_corollary_graph, random_digraph)


@dataclass
class ConjectureConfig:
    exhaustive_n: int = 4
    samples: int = 10_000
    max_n: int = 7
    seed: int = 0


def perturb(g: Graph, rng: random.Random) -> Graph:
    out, loops = list(g.out), g.loops
    if g.n > 1 and rng.random() < 0.5:
        u, v = rng.sample(range(g.n), 2)
        out[u] ^= 1 << v
    else:
        loops ^= 1 << rng.randrange(g.n)
    return Graph(g.n, loops, tuple(out))


def run(cfg: ConjectureConfig) -> list[Graph]:
    rng = random.Random(cfg.seed)
    tally: Counter = Counter()
    found = []

    def check(g, family):
        lhs, rhs = odd_sets_induce_odd_arc_count(g), corollary_form(g)
        tally[family, lhs, rhs] += 1
        if lhs != rhs:
            found.append(g)

    for n in range(1, cfg.exhaustive_n + 1):
        for g in all_digraphs(n):
            check(g, f"all n={n}")
    for _ in range(cfg.samples):
        n = rng.randint(1, cfg.max_n)
        family = rng.choice(["uniform", "corollary", "perturbed"])
        if family == "uniform":
            g = random_digraph(n, rng, p=rng.random(), loop_p=rng.choice([1.0, rng.random()]))
        else:
            g = random_corollary_graph(n, rng, p=rng.random())
            if family == "perturbed":
                g = perturb(g, rng)
        check(g, family)
    for (family, lhs, rhs), c in sorted(tally.items()):
        print(f"{family:<12} odd-sets={lhs!s:<5} corollary={rhs!s:<5} {c}")
    return found


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(ConjectureConfig()).items():
        ap.add_argument("--" + name.replace("_", "-"), type=int, default=default)
    cfg = ConjectureConfig(**vars(ap.parse_args()))
    found = run(cfg)
    print(f"separating graphs: {len(found)}")
    for g in found[:5]:
        print(format_graph(g))
