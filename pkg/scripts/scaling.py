"""Time single minsep queries on random dags of growing size.

    python scripts/scaling.py --sizes 500 1000 2000 4000 --arcs-per-node 3
"""

import argparse
import itertools
import statistics
import time
from dataclasses import dataclass

from dsepmin import ancestors, minimum_d_separator, moral_ancestral_graph, random_dag
from dsepmin.netio import RandomDagSpec


@dataclass
class ScalingConfig:
    sizes: tuple = (250, 500, 1000, 2000, 4000)
    arcs_per_node: float = 3.0
    queries: int = 5
    seed: int = 0
    weighted: bool = False


def late_pairs(g, k):
    tail = g.nodes[-40:]
    pairs = [(x, y) for x, y in itertools.combinations(tail, 2) if not g.adjacent(x, y)]
    pairs.sort(key=lambda p: -len(ancestors(g, p)))
    return pairs[:k]


def run(cfg: ScalingConfig):
    print(f"{'n':>6} {'m':>7} {'|An|':>6} {'moral m':>8} {'size':>5} {'median s':>9} {'max s':>8}")
    for n in cfg.sizes:
        p = min(1.0, cfg.arcs_per_node * n / (n * (n - 1) / 2))
        g = random_dag(RandomDagSpec(n, p, cfg.seed, card_range=(2, 8) if cfg.weighted else None))
        times, sizes, an_sizes, moral_edges = [], [], [], []
        for x, y in late_pairs(g, cfg.queries):
            t0 = time.perf_counter()
            res = minimum_d_separator(g, x, y, weighted=cfg.weighted)
            times.append(time.perf_counter() - t0)
            sizes.append(res.size)
            h = moral_ancestral_graph(g, (x, y))
            an_sizes.append(len(h))
            moral_edges.append(h.num_edges())
        print(
            f"{n:>6} {len(g.arcs):>7} {max(an_sizes):>6} {max(moral_edges):>8} {max(sizes):>5} "
            f"{statistics.median(times):>9.4f} {max(times):>8.4f}"
        )


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=list(ScalingConfig.sizes))
    parser.add_argument("--arcs-per-node", type=float, default=ScalingConfig.arcs_per_node)
    parser.add_argument("--queries", type=int, default=ScalingConfig.queries)
    parser.add_argument("--seed", type=int, default=ScalingConfig.seed)
    parser.add_argument("--weighted", action="store_true")
    args = parser.parse_args()
    run(ScalingConfig(tuple(args.sizes), args.arcs_per_node, args.queries, args.seed, args.weighted))


if __name__ == "__main__":
    main()
