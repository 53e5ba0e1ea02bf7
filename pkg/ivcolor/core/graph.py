"""Simple undirected graphs in canonical form, plus metric queries.

A ``Graph`` stores its vertices as ``0..vertex_count-1`` and its edges as a
sorted tuple of ``(u, v)`` pairs with ``u < v``. Two equal graphs therefore
serialize identically, which is what certificates rely on.

Metric queries (distances, diameter, bipartiteness) go through networkx.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Tuple

import networkx as nx

from ..errors import DomainError, InfiniteDiameterError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: Tuple[Edge, ...]

    def __post_init__(self):
        if self.vertex_count < 1:
            raise DomainError("vertex_count", f"must be positive, got {self.vertex_count}")
        previous = None
        for u, v in self.edges:
            if u == v:
                raise DomainError("edges", f"loop at vertex {u}")
            if not u < v:
                raise DomainError("edges", f"edge ({u}, {v}) is not written as (min, max)")
            if u < 0 or v >= self.vertex_count:
                raise DomainError("edges", f"edge ({u}, {v}) leaves [0, {self.vertex_count})")
            if previous is not None and (u, v) <= previous:
                if (u, v) == previous:
                    raise DomainError("edges", f"duplicate edge ({u}, {v})")
                raise DomainError("edges", "edge list is not in canonical order")
            previous = (u, v)

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Edge]) -> "Graph":
        """Build a graph from unordered pairs in any order.

        Pairs are normalized to ``(min, max)`` and sorted. Loops and repeated
        pairs are rejected rather than silently dropped.
        """
        normalized = []
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise DomainError("edges", f"loop at vertex {u}")
            normalized.append((min(u, v), max(u, v)))
        normalized.sort()
        for a, b in zip(normalized, normalized[1:]):
            if a == b:
                raise DomainError("edges", f"duplicate edge {a}")
        return cls(vertex_count, tuple(normalized))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        neighbors: List[List[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            neighbors[u].append(v)
            neighbors[v].append(u)
        return tuple(tuple(sorted(ns)) for ns in neighbors)

    @cached_property
    def incident_edges(self) -> Tuple[Tuple[int, ...], ...]:
        """Edge indices touching each vertex, in edge order."""
        incident: List[List[int]] = [[] for _ in range(self.vertex_count)]
        for index, (u, v) in enumerate(self.edges):
            incident[u].append(index)
            incident[v].append(index)
        return tuple(tuple(items) for items in incident)

    @cached_property
    def edge_index(self) -> Dict[Edge, int]:
        return {edge: index for index, edge in enumerate(self.edges)}

    def index_of(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        try:
            return self.edge_index[key]
        except KeyError:
            raise DomainError("edge", f"({u}, {v}) is not an edge") from None

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @cached_property
    def max_degree(self) -> int:
        return max((len(ns) for ns in self.adjacency), default=0)

    @cached_property
    def regular_degree(self) -> Optional[int]:
        """Common degree if the graph is regular, else ``None``."""
        degrees = {len(ns) for ns in self.adjacency}
        return degrees.pop() if len(degrees) == 1 else None

    @cached_property
    def nx_graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        g.add_edges_from(self.edges)
        return g

    @cached_property
    def distances(self) -> Dict[int, Dict[int, int]]:
        return dict(nx.all_pairs_shortest_path_length(self.nx_graph))

    def check_vertex(self, v: int, name: str = "vertex") -> None:
        if not 0 <= v < self.vertex_count:
            raise DomainError(name, f"{v} is not in [0, {self.vertex_count})")


def is_connected(g: Graph) -> bool:
    return nx.is_connected(g.nx_graph)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product with vertex ``(u, v)`` stored as ``u * |V(h)| + v``."""
    width = h.vertex_count
    edges = []
    for u in range(g.vertex_count):
        for a, b in h.edges:
            edges.append((u * width + a, u * width + b))
    for a, b in g.edges:
        for v in range(width):
            edges.append((a * width + v, b * width + v))
    return Graph(g.vertex_count * width, tuple(sorted(edges)))


def distance(g: Graph, u: int, v: int) -> int:
    g.check_vertex(u, "u")
    g.check_vertex(v, "v")
    try:
        return g.distances[u][v]
    except KeyError:
        raise InfiniteDiameterError(f"vertex {v} is unreachable from {u}") from None


def diameter(g: Graph) -> int:
    if not is_connected(g):
        raise InfiniteDiameterError()
    return max(max(row.values()) for row in g.distances.values())


def edge_distance(g: Graph, e: Edge, f: Edge) -> int:
    """Smallest vertex distance between an endpoint of ``e`` and one of ``f``."""
    g.index_of(*e)
    g.index_of(*f)
    return min(distance(g, x, y) for x in e for y in f)


def is_bipartite(g: Graph) -> Tuple[bool, Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]]]:
    """Breadth-first 2-coloring; returns the two parts when it succeeds."""
    if not nx.is_bipartite(g.nx_graph):
        return False, None
    side = nx.bipartite.color(g.nx_graph)
    left = tuple(v for v in range(g.vertex_count) if side[v] == 0)
    right = tuple(v for v in range(g.vertex_count) if side[v] == 1)
    return True, (left, right)
