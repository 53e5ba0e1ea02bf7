"""Exact backtracking search for interval t-colorings of small graphs.

Edges are colored one at a time in a fixed order. Every vertex keeps the
lowest and highest color placed on it so far, and a color is only offered to
an edge if both endpoints could still end up with a block of ``degree``
consecutive colors. Whatever the pruning rules, a finished assignment is only
accepted when every vertex spans exactly ``degree`` colors and all of
``1..t`` appear, so the rules change the node count but never the answer.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Dict, Iterable, List, Optional, Tuple

from .. import node_tracker
from ..errors import DomainError, IntervalColoringError
from ..tools import config
from .bounds import upper_bound
from .budget import Budget, BudgetExceeded
from .coloring import EdgeColoring
from .graph import Graph, is_connected
from .verifier import verify_interval

logger = logging.getLogger(__name__)

FOUND = "found"
EXHAUSTED = "exhausted"
BUDGET_EXCEEDED = "budget_exceeded"

EXISTS = "exists"
NOT = "not"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class SearchConfig:
    max_t: Optional[int] = None
    edge_order: str = config.DEFAULT_EDGE_ORDER
    node_budget: int = config.DEFAULT_NODE_BUDGET
    time_budget: float = config.DEFAULT_TIME_BUDGET
    prune_window: bool = True
    prune_surjectivity: bool = True
    prune_symmetry: bool = True

    def __post_init__(self):
        if self.node_budget < 1:
            raise DomainError("node_budget", f"must be positive, got {self.node_budget}")
        if self.time_budget <= 0:
            raise DomainError("time_budget", f"must be positive, got {self.time_budget}")
        if self.max_t is not None and self.max_t < 1:
            raise DomainError("max_t", f"must be positive, got {self.max_t}")
        if self.edge_order not in config.EDGE_ORDERS:
            raise DomainError("edge_order", f"expected one of {', '.join(config.EDGE_ORDERS)}, got {self.edge_order!r}")

    @classmethod
    def from_config(cls, **overrides) -> "SearchConfig":
        """Settings from config.json and the environment; ``None`` overrides are ignored."""
        rules = config.get_prune_rules()
        values = {
            "edge_order": config.get_edge_order(),
            "node_budget": config.get_node_budget(),
            "time_budget": config.get_time_budget(),
            "prune_window": rules["window"],
            "prune_surjectivity": rules["surjectivity"],
            "prune_symmetry": rules["symmetry"],
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


@dataclass(frozen=True)
class SearchOutcome:
    status: str
    t: int
    nodes_explored: int
    seconds: float = 0.0
    coloring: Optional[EdgeColoring] = None
    reason: Optional[str] = None

    def __post_init__(self):
        if (self.status == FOUND) != (self.coloring is not None):
            raise IntervalColoringError(f"a '{self.status}' outcome must carry a coloring iff it is found")

    @property
    def found(self) -> bool:
        return self.status == FOUND

    @property
    def conclusive(self) -> bool:
        return self.status != BUDGET_EXCEEDED

    @property
    def verdict(self) -> str:
        return {FOUND: EXISTS, EXHAUSTED: NOT}.get(self.status, INCONCLUSIVE)

    def to_record(self):
        return {
            "status": self.status,
            "t": self.t,
            "nodes": self.nodes_explored,
            "seconds": round(self.seconds, 3),
        }


@dataclass(frozen=True)
class ScanResult:
    """Result of scanning t for the least (``w``) or greatest (``W``) feasible value."""

    stat: str
    value: Optional[int]
    conclusive: bool
    outcomes: Tuple[SearchOutcome, ...] = field(default_factory=tuple)

    @property
    def nodes_explored(self) -> int:
        return sum(o.nodes_explored for o in self.outcomes)

    @property
    def witness(self) -> Optional[EdgeColoring]:
        for outcome in self.outcomes:
            if outcome.found and outcome.t == self.value:
                return outcome.coloring
        return None


def edge_order(g: Graph, strategy: str = config.DEFAULT_EDGE_ORDER) -> List[int]:
    """Edge indices in the order the search colors them.

    ``bfs-max-degree`` walks breadth-first from a vertex of maximum degree,
    so every edge after the first shares a vertex with an earlier one.
    """
    if strategy == "input":
        return list(range(g.edge_count))
    order: List[int] = []
    taken = set()
    visited = [False] * g.vertex_count
    for root in sorted(range(g.vertex_count), key=lambda x: (-g.degree(x), x)):
        if visited[root]:
            continue
        visited[root] = True
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for index in g.incident_edges[x]:
                if index in taken:
                    continue
                taken.add(index)
                order.append(index)
                a, b = g.edges[index]
                other = b if a == x else a
                if not visited[other]:
                    visited[other] = True
                    queue.append(other)
    return order


class _IntervalSearch:
    def __init__(self, g: Graph, t: int, cfg: SearchConfig, budget: Budget):
        self.g = g
        self.t = t
        self.cfg = cfg
        self.budget = budget
        self.order = edge_order(g, cfg.edge_order)
        self.degree = [g.degree(v) for v in range(g.vertex_count)]
        self.colors = [0] * g.edge_count
        self.mask = [0] * g.vertex_count
        self.lo = [0] * g.vertex_count
        self.hi = [0] * g.vertex_count
        self.count = [0] * g.vertex_count
        self.usage = [0] * (t + 1)
        self.distinct = 0

    def run(self) -> bool:
        return self._extend(0)

    def _candidates(self, depth: int, u: int, v: int) -> List[int]:
        low, high = 1, self.t
        if self.cfg.prune_window:
            for x in (u, v):
                if self.count[x]:
                    low = max(low, self.hi[x] - self.degree[x] + 1)
                    high = min(high, self.lo[x] + self.degree[x] - 1)
        if depth == 0 and self.cfg.prune_symmetry:
            # c -> t + 1 - c maps interval t-colorings onto each other
            high = min(high, (self.t + 1) // 2)
        taken = self.mask[u] | self.mask[v]
        return [c for c in range(low, high + 1) if not taken >> c & 1]

    def _place(self, x: int, c: int) -> None:
        self.mask[x] |= 1 << c
        if self.count[x] == 0:
            self.lo[x] = self.hi[x] = c
        else:
            self.lo[x] = min(self.lo[x], c)
            self.hi[x] = max(self.hi[x], c)
        self.count[x] += 1

    def _complete_vertex_ok(self, x: int) -> bool:
        return self.count[x] < self.degree[x] or self.hi[x] - self.lo[x] + 1 == self.degree[x]

    def _extend(self, depth: int) -> bool:
        if depth == len(self.order):
            return self.distinct == self.t
        index = self.order[depth]
        u, v = self.g.edges[index]
        remaining = len(self.order) - depth - 1
        for c in self._candidates(depth, u, v):
            self.budget.charge()
            saved = (self.lo[u], self.hi[u], self.lo[v], self.hi[v])
            self._place(u, c)
            self._place(v, c)
            self.colors[index] = c
            self.usage[c] += 1
            if self.usage[c] == 1:
                self.distinct += 1

            ok = self._complete_vertex_ok(u) and self._complete_vertex_ok(v)
            if ok and self.cfg.prune_surjectivity and self.t - self.distinct > remaining:
                ok = False
            if ok and self._extend(depth + 1):
                return True

            self.usage[c] -= 1
            if self.usage[c] == 0:
                self.distinct -= 1
            self.colors[index] = 0
            for x in (u, v):
                self.mask[x] &= ~(1 << c)
                self.count[x] -= 1
            self.lo[u], self.hi[u], self.lo[v], self.hi[v] = saved
        return False


def _decide(g: Graph, t: int, cfg: SearchConfig) -> SearchOutcome:
    if g.edge_count == 0:
        raise DomainError("g", "the search needs a graph with at least one edge")
    if t < 1:
        raise DomainError("t", f"must be positive, got {t}")
    if t < g.max_degree:
        return SearchOutcome(EXHAUSTED, t, 0, reason=f"t={t} is below the maximum degree {g.max_degree}")

    budget = Budget(cfg.node_budget, cfg.time_budget)
    search = _IntervalSearch(g, t, cfg, budget)
    try:
        found = search.run()
    except BudgetExceeded as e:
        logger.info("t=%d inconclusive after %d nodes: %s", t, budget.nodes, e.reason)
        return SearchOutcome(BUDGET_EXCEEDED, t, budget.nodes, budget.elapsed, reason=e.reason)

    if not found:
        logger.debug("t=%d exhausted after %d nodes", t, budget.nodes)
        return SearchOutcome(EXHAUSTED, t, budget.nodes, budget.elapsed)

    coloring = EdgeColoring(g, tuple(search.colors))
    report = verify_interval(coloring, t)
    if not report.valid:
        raise IntervalColoringError(f"search returned a coloring the verifier rejects: {report.reason}")
    logger.debug("t=%d found after %d nodes", t, budget.nodes)
    return SearchOutcome(FOUND, t, budget.nodes, budget.elapsed, coloring)


def exists_interval_t(g: Graph, t: int, cfg: Optional[SearchConfig] = None) -> SearchOutcome:
    """Decide whether ``g`` has an interval ``t``-coloring.

    ``exhausted`` is a proof of nonexistence; ``budget_exceeded`` proves
    nothing.
    """
    outcome = _decide(g, t, cfg or SearchConfig())
    node_tracker.track_search(outcome.nodes_explored, outcome.seconds)
    return outcome


def resolve_max_t(g: Graph, cfg: SearchConfig) -> int:
    """Largest t worth trying: the configured value or the diameter bound."""
    if cfg.max_t is not None:
        if cfg.max_t < g.max_degree:
            raise DomainError("max_t", f"{cfg.max_t} is below the maximum degree {g.max_degree}")
        return cfg.max_t
    if is_connected(g):
        value, _ = upper_bound(g)
        return min(value, g.edge_count)
    return g.edge_count


def compute_w(g: Graph, cfg: Optional[SearchConfig] = None) -> ScanResult:
    """Least t with an interval t-coloring, scanning upward from the maximum degree."""
    cfg = cfg or SearchConfig()
    outcomes = []
    conclusive = True
    for t in range(g.max_degree, resolve_max_t(g, cfg) + 1):
        outcome = exists_interval_t(g, t, cfg)
        outcomes.append(outcome)
        if outcome.found:
            return ScanResult("w", t, conclusive, tuple(outcomes))
        conclusive = conclusive and outcome.conclusive
    return ScanResult("w", None, conclusive, tuple(outcomes))


def compute_W(g: Graph, cfg: Optional[SearchConfig] = None) -> ScanResult:
    """Greatest t with an interval t-coloring, scanning downward from ``max_t``."""
    cfg = cfg or SearchConfig()
    outcomes = []
    conclusive = True
    for t in range(resolve_max_t(g, cfg), g.max_degree - 1, -1):
        outcome = exists_interval_t(g, t, cfg)
        outcomes.append(outcome)
        if outcome.found:
            return ScanResult("W", t, conclusive, tuple(outcomes))
        conclusive = conclusive and outcome.conclusive
    return ScanResult("W", None, conclusive, tuple(outcomes))


def decide_all(
    g: Graph, t_values: Iterable[int], cfg: Optional[SearchConfig] = None, workers: int = 1
) -> Dict[int, SearchOutcome]:
    """Run one search per t, fanning out over a process pool when ``workers > 1``."""
    cfg = cfg or SearchConfig()
    ts = list(t_values)
    if workers > 1 and len(ts) > 1:
        with Pool(processes=min(workers, len(ts))) as pool:
            outcomes = pool.starmap(_decide, [(g, t, cfg) for t in ts])
    else:
        outcomes = [_decide(g, t, cfg) for t in ts]
    for outcome in outcomes:
        node_tracker.track_search(outcome.nodes_explored, outcome.seconds)
    return dict(zip(ts, outcomes))


def spectrum_profile(
    g: Graph, t_range: Iterable[int], cfg: Optional[SearchConfig] = None, workers: int = 1
) -> Dict[int, str]:
    """Map each t to ``exists``, ``not`` or ``inconclusive``."""
    return {t: outcome.verdict for t, outcome in decide_all(g, t_range, cfg, workers).items()}
