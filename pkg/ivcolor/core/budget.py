"""Node and wall-clock limits for one search run."""

import time


class BudgetExceeded(Exception):
    """Raised inside the search when a limit is hit; never leaves the search module."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


# how many nodes pass between two clock reads
_CLOCK_STRIDE = 1024


class Budget:
    def __init__(self, node_budget: int, time_budget: float, clock=time.monotonic):
        self.node_budget = node_budget
        self.time_budget = time_budget
        self._clock = clock
        self._started = clock()
        self.nodes = 0

    @property
    def elapsed(self) -> float:
        return self._clock() - self._started

    def charge(self) -> None:
        """Count one search node and stop the run once a limit is crossed."""
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise BudgetExceeded(f"node budget of {self.node_budget} exhausted")
        if self.nodes % _CLOCK_STRIDE == 0 and self.elapsed > self.time_budget:
            raise BudgetExceeded(f"time budget of {self.time_budget:g}s exhausted")
