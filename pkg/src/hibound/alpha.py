"""Exact independence number by branch and bound over bit masks."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidParams
from .hypergraph import Hypergraph, is_independent

__all__ = ["SolverConfig", "AlphaResult", "alpha_exact", "alpha_naive", "is_independent"]


@dataclass(frozen=True)
class SolverConfig:
    node_budget: int = 10**8
    use_ell_pruning: bool = False

    def __post_init__(self):
        if self.node_budget <= 0:
            raise InvalidParams("node_budget must be positive")


@dataclass(frozen=True)
class AlphaResult:
    alpha: int
    witness: frozenset[int]
    nodes_explored: int
    exhausted: bool


class _BudgetExceeded(Exception):
    pass


class _Search:
    def __init__(self, incident: list[tuple[int, ...]], budget: int, best: int):
        self.incident = incident
        self.budget = budget
        self.nodes = 0
        self.best = best
        self.best_set: int | None = None

    def run(self, cand: int) -> None:
        self._rec(0, 0, cand)

    def _rec(self, chosen: int, size: int, cand: int) -> None:
        # invariant: every vertex in cand can join chosen without completing an edge
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetExceeded
        if size > self.best:
            self.best = size
            self.best_set = chosen
        while cand:
            if size + cand.bit_count() <= self.best:
                return
            low = cand & -cand
            cand ^= low
            with_v = chosen | low
            nxt = cand
            for e in self.incident[low.bit_length() - 1]:
                rest = e & ~with_v
                if rest & (rest - 1) == 0:
                    nxt &= ~rest
            self._rec(with_v, size + 1, nxt)
            # loop continues as the "exclude low" branch
            self.nodes += 1
            if self.nodes > self.budget:
                raise _BudgetExceeded


def alpha_exact(h: Hypergraph, cfg: SolverConfig | None = None) -> AlphaResult:
    """Maximum independent set of ``h``.

    Vertices are branched on in order of descending degree (include first,
    then exclude).  A branch is cut when the chosen set plus every surviving
    candidate cannot beat the incumbent.  Adding a vertex only inspects the
    edges through it: an edge with a single vertex left outside the chosen set
    removes that vertex from the candidates.

    If the node budget runs out the best set found so far is returned with
    ``exhausted=False``.
    """
    cfg = cfg or SolverConfig()
    n = h.n
    deg = h.degrees()
    order = sorted(range(n), key=lambda v: (-deg[v], v))
    pos = {v: i for i, v in enumerate(order)}

    def relabel(e):
        return sum(1 << pos[v] for v in e)

    incident: list[list[int]] = [[] for _ in range(n)]
    for e in h.edges:
        mask = relabel(e)
        for v in e:
            incident[pos[v]].append(mask)
    incident_t = [tuple(x) for x in incident]
    full = (1 << n) - 1

    start_best = -1
    if cfg.use_ell_pruning:
        from .bounds import ell_bound

        start_best = ell_bound(h.n, h.m, h.k) - 1

    search = _Search(incident_t, cfg.node_budget, start_best)
    exhausted = True
    try:
        search.run(full)
    except _BudgetExceeded:
        exhausted = False

    if search.best_set is None and cfg.use_ell_pruning:
        # nothing reached the seeded incumbent; redo the search unseeded
        spent = search.nodes
        search = _Search(incident_t, max(cfg.node_budget - spent, 1), -1)
        exhausted = True
        try:
            search.run(full)
        except _BudgetExceeded:
            exhausted = False
        search.nodes += spent

    chosen = search.best_set or 0
    witness = frozenset(order[i] for i in range(n) if chosen >> i & 1)
    return AlphaResult(len(witness), witness, search.nodes, exhausted)


def alpha_naive(h: Hypergraph) -> int:
    """Largest independent set by trying subset sizes from n downward."""
    for size in range(h.n, -1, -1):
        for s in combinations(range(h.n), size):
            if is_independent(h, s):
                return size
    return 0
