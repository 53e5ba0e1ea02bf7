"""Edge colorings: a positive integer per edge, aligned with ``graph.edges``."""

from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Tuple

from ..errors import DomainError
from .graph import Edge, Graph


@dataclass(frozen=True)
class EdgeColoring:
    graph: Graph
    colors: Tuple[int, ...]

    def __post_init__(self):
        if len(self.colors) != self.graph.edge_count:
            raise DomainError(
                "colors",
                f"{len(self.colors)} colors for {self.graph.edge_count} edges",
            )
        for index, c in enumerate(self.colors):
            if not isinstance(c, int) or c < 1:
                raise DomainError("colors", f"edge {self.graph.edges[index]} has color {c!r}; colors start at 1")

    @classmethod
    def from_mapping(cls, graph: Graph, mapping: Mapping[Edge, int]) -> "EdgeColoring":
        """Build from ``{(u, v): color}``; every edge of ``graph`` must appear."""
        colors = [0] * graph.edge_count
        for (u, v), c in mapping.items():
            colors[graph.index_of(u, v)] = c
        missing = [graph.edges[i] for i, c in enumerate(colors) if c == 0]
        if missing:
            raise DomainError("colors", f"{len(missing)} edge(s) left uncolored, first {missing[0]}")
        return cls(graph, tuple(colors))

    def color_of(self, u: int, v: int) -> int:
        return self.colors[self.graph.index_of(u, v)]

    def as_mapping(self) -> Dict[Edge, int]:
        return dict(zip(self.graph.edges, self.colors))

    @property
    def min_color(self) -> int:
        return min(self.colors, default=0)

    @property
    def max_color(self) -> int:
        return max(self.colors, default=0)

    def shifted(self, offset: int) -> "EdgeColoring":
        return EdgeColoring(self.graph, tuple(c + offset for c in self.colors))

    def incident_colors(self, v: int) -> Iterable[int]:
        return (self.colors[i] for i in self.graph.incident_edges[v])


def spectrum(c: EdgeColoring, v: int) -> frozenset:
    """Set of colors on the edges at ``v``.

    A spectrum smaller than ``degree(v)`` means two edges at ``v`` share a color.
    """
    c.graph.check_vertex(v)
    return frozenset(c.incident_colors(v))
