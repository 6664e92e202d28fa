"""Command line interface.

Exit codes: 0 success, 1 bad input, 2 not separable, 3 internal invariant breach.
"""

from __future__ import annotations

import argparse
import json
import sys

from .dsep import d_separated_direct, d_separated_moral
from .graph import GraphError
from .minsep import InvariantError, NotSeparable, SeparatorRequest, solve
from .netio import RandomDagSpec, random_dag, read_network, serialize_network
from .oracle import DEFAULT_BUDGET, BudgetExceeded, brute_force_minimum

EXIT_OK, EXIT_INPUT, EXIT_NOT_SEPARABLE, EXIT_INVARIANT = 0, 1, 2, 3


def _node_list(text: str) -> list[str]:
    return [v for v in text.split(",") if v]


def _card_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected MIN,MAX") from None
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dsepmin", description="Minimum d-separating sets in dags.")
    parser.add_argument("--pretty", action="store_true", help="indent JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    def query_args(p, z_flag):
        p.add_argument("-g", "--graph", required=True, help="dsep-net/1 network file")
        p.add_argument("-x", type=_node_list, required=True, help="comma-separated nodes")
        p.add_argument("-y", type=_node_list, required=True, help="comma-separated nodes")
        p.add_argument(z_flag, dest="z", type=_node_list, default=[], help="comma-separated nodes")

    p = sub.add_parser("test", help="decide d-separation")
    query_args(p, "-z")
    p.add_argument("--method", choices=("direct", "moral", "both"), default="both")

    for name, help_ in (("minsep", "minimum d-separating set"), ("oracle", "brute-force minimum separators")):
        p = sub.add_parser(name, help=help_)
        query_args(p, "--fixed")
        p.add_argument("--weighted", action="store_true", help="minimise total log2 state space")
        if name == "oracle":
            p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    p = sub.add_parser("random", help="emit a random network")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-p", type=float, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cards", type=_card_range, default=None, metavar="MIN,MAX")
    return parser


def _cmd_test(args, g):
    kw = dict(x=args.x, y=args.y, z=args.z)
    results = {}
    if args.method in ("direct", "both"):
        results["direct"] = d_separated_direct(g, **kw)
    if args.method in ("moral", "both"):
        results["moral"] = d_separated_moral(g, **kw)
    if len(set(results.values())) > 1:
        raise InvariantError(f"d-separation procedures disagree: {results}")
    return {"d_separated": next(iter(results.values()))}, EXIT_OK


def _cmd_minsep(args, g):
    req = SeparatorRequest(args.x, args.y, args.z, weighted=args.weighted)
    try:
        res = solve(g, req)
    except NotSeparable:
        return {"not_separable": True}, EXIT_NOT_SEPARABLE
    out = {
        "separator": g.order(res.separator),
        "size": res.size,
        "weight": res.weight,
        "flow": res.certificate_flow,
    }
    return out, EXIT_OK


def _cmd_oracle(args, g):
    req = SeparatorRequest(args.x, args.y, args.z, weighted=args.weighted)
    try:
        rep = brute_force_minimum(g, req, node_budget=args.budget)
    except NotSeparable:
        return {"not_separable": True}, EXIT_NOT_SEPARABLE
    return rep.to_json(order=g.order), EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    indent = 2 if args.pretty else None
    try:
        if args.command == "random":
            g = random_dag(RandomDagSpec(args.n, args.p, args.seed, args.cards))
            print(serialize_network(g, indent=indent))
            return EXIT_OK
        g = read_network(args.graph)
        handler = {"test": _cmd_test, "minsep": _cmd_minsep, "oracle": _cmd_oracle}[args.command]
        out, code = handler(args, g)
    except InvariantError as exc:
        print(f"dsepmin: internal invariant breached: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (GraphError, BudgetExceeded, ValueError, OSError) as exc:
        print(f"dsepmin: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(json.dumps(out, indent=indent))
    return code


if __name__ == "__main__":
    sys.exit(main())
