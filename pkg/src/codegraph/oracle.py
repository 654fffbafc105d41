"""Exhaustive ground truth for small graphs.

Everything here is exponential and guarded by an :class:`OracleBudget`.
The searches are deterministic: bases are lexicographically least among the
minimum ones and labelings come from a fixed vertex order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import kernels
from .errors import BudgetExceeded, DisconnectedGraph, NoThresholdSupergraph
from .graph import Graph, distance_matrix, twin_classes
from .labeling import Labeling

__all__ = [
    "OracleBudget",
    "DEFAULT_BUDGET",
    "exact_metric_dimension",
    "exact_lambda",
    "exact_tau",
    "exact_tau_r",
    "twin_reduced_metric_dimension",
]


@dataclass(frozen=True)
class OracleBudget:
    max_n_beta: int = 15
    max_n_lambda: int = 12
    max_nonedges_tau: int = 14

    def __post_init__(self) -> None:
        for name in ("max_n_beta", "max_n_lambda", "max_nonedges_tau"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")


DEFAULT_BUDGET = OracleBudget()


def exact_metric_dimension(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> tuple[int, tuple[int, ...]]:
    """Least resolving set by size, then lexicographically."""
    if g.n > budget.max_n_beta:
        raise BudgetExceeded(f"n={g.n} exceeds max_n_beta={budget.max_n_beta}")
    if g.n <= 1:
        return 0, ()
    dist = distance_matrix(g)
    for k in range(1, g.n):
        basis = kernels.first_resolving_set(dist, k)
        if basis.size:
            return k, tuple(int(v) for v in basis)
    raise AssertionError("n-1 vertices always resolve a connected graph")


def _lambda_lower_bound(g: Graph, dist: np.ndarray) -> int:
    if g.n <= 1:
        return 0
    delta = int(g.degrees().max())
    lb = delta + 1 if delta else 0
    if (dist >= 0).all() and dist.max() <= 2:
        lb = max(lb, g.n - 1)  # every pair within distance two needs distinct colors
    return lb


def exact_lambda(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> tuple[int, Labeling]:
    """Least span of an L(2,1) labeling, scanning spans upward from a lower bound.

    Vertices are visited by decreasing degree. Swapping twins is an
    automorphism, so twins with a neighbor (hence within distance two) are
    forced to take increasing colors.
    """
    if g.n > budget.max_n_lambda:
        raise BudgetExceeded(f"n={g.n} exceeds max_n_lambda={budget.max_n_lambda}")
    if g.n == 0:
        return 0, Labeling.from_colors(())
    dist = kernels.bfs_distances(g.u8())
    deg = g.degrees()
    order = sorted(range(g.n), key=lambda v: (-int(deg[v]), v))
    pos = {v: i for i, v in enumerate(order)}
    twin_prev = np.full(g.n, -1, np.int64)
    for cls in twin_classes(g):
        if not deg[cls[0]]:
            continue  # isolated twins are unconstrained and may share a color
        ranked = sorted(cls, key=pos.__getitem__)
        for a, b in zip(ranked, ranked[1:]):
            twin_prev[pos[b]] = pos[a]
    order_arr = np.asarray(order, dtype=np.int64)
    span = _lambda_lower_bound(g, dist)
    while True:
        cols = kernels.l21_search(dist, span, order_arr, twin_prev)
        if cols.size:
            return span, Labeling.from_colors(cols.tolist())
        span += 1


def _superset_search(g: Graph, budget: OracleBudget, threshold_only: bool) -> int:
    if g.n > budget.max_n_beta:
        raise BudgetExceeded(f"n={g.n} exceeds max_n_beta={budget.max_n_beta}")
    distance_matrix(g)  # connectivity check
    free = np.argwhere(np.triu(~g.adjacency, 1))
    if len(free) > budget.max_nonedges_tau:
        raise BudgetExceeded(f"{len(free)} non-edges exceed max_nonedges_tau={budget.max_nonedges_tau}")
    if g.n <= 1:
        return 0
    eu = np.ascontiguousarray(free[:, 0], dtype=np.int64)
    ev = np.ascontiguousarray(free[:, 1], dtype=np.int64)
    best = kernels.min_beta_supersets(g.u8(), eu, ev, threshold_only, g.n)
    if best < 0:
        raise NoThresholdSupergraph("no edge-superset is a threshold graph")
    return int(best)


def exact_tau(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Least metric dimension over all edge-supersets on the same vertices."""
    return _superset_search(g, budget, False)


def exact_tau_r(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """As :func:`exact_tau`, restricted to supersets that are threshold graphs.

    Vertex labels are fixed; supersets are not taken up to isomorphism.
    """
    return _superset_search(g, budget, True)


def twin_reduced_metric_dimension(g: Graph, max_classes: int = 24) -> tuple[int, tuple[int, ...]]:
    """Exact metric dimension for graphs with few twin classes.

    A resolving set misses at most one vertex of each twin class, and which
    one is irrelevant up to automorphism. So all but the last member of each
    class are forced and only subsets of the class representatives are tried.
    """
    if g.n <= 1:
        return 0, ()
    classes = twin_classes(g)
    if len(classes) > max_classes:
        raise BudgetExceeded(f"{len(classes)} twin classes exceed {max_classes}")
    dist = distance_matrix(g)
    forced = [v for cls in classes for v in cls[:-1]]
    reps = [cls[-1] for cls in classes]
    for r in range(len(reps) + 1):
        for extra in combinations(reps, r):
            members = np.asarray(sorted(forced + list(extra)), dtype=np.int64)
            if members.size and kernels.resolves(dist, members):
                return len(members), tuple(int(v) for v in members)
    raise AssertionError("the full vertex set always resolves")
