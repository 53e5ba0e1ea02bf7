"""Widest colorings of paths, even cycles and complete bipartite graphs, and
the direction coloring of hypercubes."""

from ..core.coloring import EdgeColoring
from ..core.families import Complete, CompleteBipartite, Cycle, Hypercube, Path
from ..errors import DomainError
from .builder import Construction


def widest_path_coloring(m: int) -> Construction:
    """Edge ``i`` along P_m gets color ``i``: an interval (m-1)-coloring."""
    if m < 2:
        raise DomainError("m", f"P_{m} has no edges; need m >= 2")
    spec = Path(m)
    g = spec.realize()
    return Construction(spec, EdgeColoring(g, tuple(range(1, m))), m - 1, "widest")


def widest_even_cycle_coloring(n: int) -> Construction:
    """Colors 1, 2, ..., n+1, n, ..., 2 around C_2n."""
    if n < 2:
        raise DomainError("n", f"need n >= 2 for C_2n, got {n}")
    spec = Cycle(2 * n)
    g = spec.realize()
    around = list(range(1, n + 2)) + list(range(n, 1, -1))
    mapping = {}
    for k, color in enumerate(around):
        mapping[(k, (k + 1) % (2 * n))] = color
    return Construction(spec, EdgeColoring.from_mapping(g, mapping), n + 1, "widest")


def complete_bipartite_coloring(r: int, s: int) -> Construction:
    """Edge ``x_i y_j`` gets ``i + j - 1``: an interval (r+s-1)-coloring."""
    spec = CompleteBipartite(r, s)
    spec.validate()
    g = spec.realize()
    mapping = {(i, r + j): i + j + 1 for i in range(r) for j in range(s)}
    return Construction(spec, EdgeColoring.from_mapping(g, mapping), r + s - 1, "widest")


def hypercube_minimal(n: int) -> Construction:
    """Color each edge of Q_n by the bit it flips; every vertex sees 1..n."""
    spec = Hypercube(n)
    spec.validate()
    g = spec.realize()
    colors = tuple((u ^ v).bit_length() for u, v in g.edges)
    return Construction(spec, EdgeColoring(g, colors), n, "minimal")


def complete_minimal(n: int) -> Construction:
    """Round-robin 1-factorization of K_n (n even): an interval (n-1)-coloring.

    Vertex ``n - 1`` sits at the hub; in round ``k`` it meets ``k`` and the
    pairs ``k + i``, ``k - i`` (mod n-1) meet each other.
    """
    if n < 2 or n % 2:
        raise DomainError("n", f"need an even n >= 2, got {n}")
    spec = Complete(n)
    g = spec.realize()
    ring = n - 1
    mapping = {}
    for k in range(ring):
        mapping[(k, ring)] = k + 1
        for i in range(1, n // 2):
            mapping[((k + i) % ring, (k - i) % ring)] = k + 1
    return Construction(spec, EdgeColoring.from_mapping(g, mapping), n - 1, "minimal")
