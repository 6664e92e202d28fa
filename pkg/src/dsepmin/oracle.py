"""Exhaustive search for minimum d-separating sets on small instances.

Only a correctness instrument: it tries candidate sets one by one with the
direct d-separation test and refuses instances above a node budget.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .dsep import d_separated_direct
from .graph import Dag, NodeSet, ancestors
from .minsep import InvariantError, NotSeparable, SeparatorRequest, node_weights
from .vertex_cut import EPS

DEFAULT_BUDGET = 16
FULL_CHECK_MAX_NODES = 10


class BudgetExceeded(Exception):
    pass


@dataclass(frozen=True)
class OracleReport:
    minimum_size: int
    minimum_weight: float | None
    all_minimum_sets: list[NodeSet]
    candidates_examined: int
    weighted: bool = False

    def to_json(self, order=sorted) -> dict:
        return {
            "minimum_size": self.minimum_size,
            "minimum_weight": self.minimum_weight,
            "all_minimum_sets": [list(order(s)) for s in self.all_minimum_sets],
            "candidates_examined": self.candidates_examined,
            "weighted": self.weighted,
        }


def _separates(g, req, s) -> bool:
    return d_separated_direct(g, x=req.x_set, y=req.y_set, z=req.fixed_z | NodeSet(s))


def _by_size(g, req, pool):
    """All separators of minimum cardinality drawn from ``pool``, plus a count."""
    examined = 0
    for k in range(len(pool) + 1):
        found = []
        for combo in itertools.combinations(pool, k):
            examined += 1
            if _separates(g, req, combo):
                found.append(NodeSet(combo))
        if found:
            return k, found, examined
    return None, [], examined


def _weighted_subsets(pool, w):
    subsets = []
    for k in range(len(pool) + 1):
        for combo in itertools.combinations(pool, k):
            subsets.append((sum(w[v] for v in combo), combo))
    # stable sort keeps size-then-lexicographic order within equal weights
    subsets.sort(key=lambda item: item[0])
    return subsets


def _by_weight(g, req, pool, w):
    examined = 0
    best = None
    found = []
    for weight, combo in _weighted_subsets(pool, w):
        if best is not None and weight > best + EPS:
            break
        examined += 1
        if _separates(g, req, combo):
            if best is None:
                best = weight
            found.append(NodeSet(combo))
    # minimum weight does not imply inclusion-minimal when some weights are 0
    minimal = [s for s in found if not any(_separates(g, req, s - {v}) for v in s)]
    return best, minimal, examined


def brute_force_minimum(
    g: Dag,
    req: SeparatorRequest,
    node_budget: int = DEFAULT_BUDGET,
    full_check: bool = True,
) -> OracleReport:
    """Every minimum separator ``S`` with ``fixed_z | S`` d-separating the query.

    Candidates are subsets of ``An(X u Y u Z)`` minus the query nodes. With
    ``full_check`` on graphs of at most 10 nodes, the whole node set is also
    searched for anything strictly better, which would contradict the
    restriction to ancestors.
    """
    req.check_against(g)
    an = ancestors(g, req.x_set | req.y_set | req.fixed_z)
    if len(an) > node_budget:
        raise BudgetExceeded(f"ancestral set has {len(an)} nodes, budget is {node_budget}")
    used = req.x_set | req.y_set | req.fixed_z
    pool = [v for v in g.order(an) if v not in used]

    if req.weighted:
        w = node_weights(g)
        best, sets, examined = _by_weight(g, req, pool, w)
        if best is None:
            raise NotSeparable("no subset of the ancestral set d-separates the query")
        size = min(len(s) for s in sets)
    else:
        size, sets, examined = _by_size(g, req, pool)
        if size is None:
            raise NotSeparable("no subset of the ancestral set d-separates the query")
        best = None

    if full_check and len(g) <= FULL_CHECK_MAX_NODES:
        everything = [v for v in g.nodes if v not in used]
        if req.weighted:
            for weight, combo in _weighted_subsets(everything, w):
                if weight >= best - EPS:
                    break
                examined += 1
                if _separates(g, req, combo):
                    raise InvariantError(f"separator {set(combo)} outside the ancestral set beats the minimum")
        else:
            for k in range(size):
                for combo in itertools.combinations(everything, k):
                    examined += 1
                    if _separates(g, req, combo):
                        raise InvariantError(f"separator {set(combo)} outside the ancestral set beats the minimum")

    return OracleReport(
        minimum_size=size,
        minimum_weight=best,
        all_minimum_sets=sets,
        candidates_examined=examined,
        weighted=req.weighted,
    )
