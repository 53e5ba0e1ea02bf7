"""Edge-by-edge assembly of formula colorings.

Constructions are written as lists of rules, and some rules name the same edge
twice. ``ColoringBuilder`` accepts a repeat only when it agrees with the first
assignment.
"""

import logging
from dataclasses import dataclass
from typing import Dict

from ..core.coloring import EdgeColoring
from ..core.families import FamilySpec
from ..core.graph import Graph
from ..errors import ClauseConflictError, IntervalColoringError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Construction:
    """A formula coloring together with the number of colors it claims."""

    spec: FamilySpec
    coloring: EdgeColoring
    t: int
    mode: str
    duplicates: int = 0

    @property
    def graph(self) -> Graph:
        return self.coloring.graph


class ColoringBuilder:
    def __init__(self, graph: Graph):
        self.graph = graph
        self._colors: Dict[int, int] = {}
        self._rules: Dict[int, str] = {}
        self.duplicates = 0

    def assign(self, u: int, v: int, color: int, rule: str) -> None:
        index = self.graph.index_of(u, v)
        prior = self._colors.get(index)
        if prior is not None:
            if prior != color:
                raise ClauseConflictError(self.graph.edges[index], prior, color, rule)
            self.duplicates += 1
            logger.debug("edge %s assigned %d again by '%s'", self.graph.edges[index], color, rule)
            return
        self._colors[index] = color
        self._rules[index] = rule

    def rule_of(self, u: int, v: int) -> str:
        return self._rules[self.graph.index_of(u, v)]

    def build(self) -> EdgeColoring:
        if len(self._colors) != self.graph.edge_count:
            missing = [e for i, e in enumerate(self.graph.edges) if i not in self._colors]
            raise IntervalColoringError(f"{len(missing)} edge(s) left uncolored, first {missing[0]}")
        return EdgeColoring(self.graph, tuple(self._colors[i] for i in range(self.graph.edge_count)))


def grid_vertex(columns: int):
    """``v(i, j)`` for 1-based row ``i`` and column ``j`` in a row-major layout."""

    def v(i: int, j: int) -> int:
        return (i - 1) * columns + (j - 1)

    return v
