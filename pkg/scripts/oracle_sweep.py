"""Compare flow separators against exhaustive search on many small random dags.

Reports how often the flow result is one of several tied minimum separators,
and how often it coincides with the parent set of the source-role node.

    python scripts/oracle_sweep.py --graphs 300 --max-nodes 10 --weighted
"""

import argparse
import itertools
import random
from collections import Counter
from dataclasses import dataclass

from dsepmin import SeparatorRequest, brute_force_minimum, minimum_d_separator, random_dag
from dsepmin.minsep import orient
from dsepmin.netio import RandomDagSpec


@dataclass
class SweepConfig:
    graphs: int = 200
    min_nodes: int = 5
    max_nodes: int = 10
    edge_probs: tuple = (0.2, 0.35)
    weighted: bool = False
    seed: int = 1


def run(cfg: SweepConfig) -> Counter:
    rng = random.Random(cfg.seed)
    stats = Counter()
    for i in range(cfg.graphs):
        n = rng.randint(cfg.min_nodes, cfg.max_nodes)
        spec = RandomDagSpec(n, rng.choice(cfg.edge_probs), cfg.seed * 100_000 + i, (2, 8) if cfg.weighted else None)
        g = random_dag(spec)
        for x, y in itertools.combinations(g.nodes, 2):
            if g.adjacent(x, y):
                continue
            res = minimum_d_separator(g, x, y, weighted=cfg.weighted)
            rep = brute_force_minimum(g, SeparatorRequest({x}, {y}, weighted=cfg.weighted))
            stats["queries"] += 1
            best = rep.minimum_weight if cfg.weighted else rep.minimum_size
            got = res.weight if cfg.weighted else res.size
            stats["optimal"] += abs(got - best) <= 1e-9
            stats["member"] += res.separator in rep.all_minimum_sets
            stats["ties"] += len(rep.all_minimum_sets) > 1
            source, _ = orient(g, x, y)
            stats["parent_set"] += res.separator == frozenset(g.parents(source))
            stats[f"size={res.size}"] += 1
    return stats


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--graphs", type=int, default=SweepConfig.graphs)
    parser.add_argument("--min-nodes", type=int, default=SweepConfig.min_nodes)
    parser.add_argument("--max-nodes", type=int, default=SweepConfig.max_nodes)
    parser.add_argument("--weighted", action="store_true")
    parser.add_argument("--seed", type=int, default=SweepConfig.seed)
    args = parser.parse_args()
    cfg = SweepConfig(args.graphs, args.min_nodes, args.max_nodes, weighted=args.weighted, seed=args.seed)
    stats = run(cfg)
    q = stats["queries"]
    print(f"queries            {q}")
    for key in ("optimal", "member", "ties", "parent_set"):
        print(f"{key:<18} {stats[key]:>6}  ({stats[key] / q:.1%})")
    for key in sorted(k for k in stats if k.startswith("size=")):
        print(f"{key:<18} {stats[key]:>6}")


if __name__ == "__main__":
    main()
