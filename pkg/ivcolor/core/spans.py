"""Color spans of hypercube colorings grouped by edge distance.

For a coloring of Q_n, ``sp[k]`` is the largest color difference between two
edges at edge distance ``k``. Vertices of Q_n are bit vectors, so vertex
distance is the popcount of the XOR.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import List, Tuple

from ..errors import DomainError
from .coloring import EdgeColoring
from .families import Hypercube


def _popcount(x: int) -> int:
    return bin(x).count("1")


def hypercube_dimension(c: EdgeColoring) -> int:
    """Dimension ``n`` if the coloring lives on the canonical Q_n, else DomainError."""
    count = c.graph.vertex_count
    n = count.bit_length() - 1
    if n < 1 or count != 1 << n or c.graph != Hypercube(n).realize():
        raise DomainError("graph", "span tables are defined on hypercubes only")
    return n


def cube_edge_distance(e: Tuple[int, int], f: Tuple[int, int]) -> int:
    return min(_popcount(x ^ y) for x in e for y in f)


@dataclass(frozen=True)
class SpanTable:
    n: int
    sp: Tuple[int, ...]

    def __post_init__(self):
        if len(self.sp) != self.n:
            raise DomainError("sp", f"expected {self.n} entries, got {len(self.sp)}")


def span_table(c: EdgeColoring) -> SpanTable:
    n = hypercube_dimension(c)
    sp = [0] * n
    edges = c.graph.edges
    for (i, e), (j, f) in combinations(enumerate(edges), 2):
        k = cube_edge_distance(e, f)
        diff = abs(c.colors[i] - c.colors[j])
        if diff > sp[k]:
            sp[k] = diff
    return SpanTable(n, tuple(sp))


def check_span_recurrence(tbl: SpanTable) -> bool:
    """True iff ``sp[k] <= sp[k-1] + n - k`` for every ``1 <= k <= n-1``."""
    n = tbl.n
    return all(tbl.sp[k] <= tbl.sp[k - 1] + n - k for k in range(1, n))


def hypercube_neighbor_witnesses(n: int, u: int, v: int) -> List[int]:
    """Neighbors of ``v`` one step closer to ``u``: flip each bit where they differ."""
    if n < 1:
        raise DomainError("n", f"must be >= 1, got {n}")
    for name, x in (("u", u), ("v", v)):
        if not 0 <= x < 1 << n:
            raise DomainError(name, f"{x} is not a vertex of Q_{n}")
    diff = u ^ v
    return sorted(v ^ (1 << b) for b in range(n) if diff >> b & 1)


def span_ceiling(n: int) -> int:
    """Largest possible ``sp[n-1]`` for an interval coloring of Q_n."""
    return n * (n + 1) // 2 - 1
