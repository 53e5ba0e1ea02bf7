"""Layered colorings of G □ P_m, G □ C_2n and G □ Q_n for regular G.

Each layer is a copy of G colored by ``alpha`` plus a layer shift; the edges
between layers are placed right above the top of a vertex's spectrum so every
vertex keeps an interval. Vertex ``(u, i)`` of a product is ``u * k + i`` where
``k`` is the order of the second factor and ``i`` is the 0-based layer.
"""

import logging
from typing import List, Optional

from ..core.coloring import EdgeColoring
from ..core.families import Cycle, FamilySpec, Hypercube, Path, Product
from ..core.graph import Graph, cartesian_product, is_connected
from ..core.verifier import verify_interval
from ..errors import DomainError, PreconditionError
from .basic import hypercube_minimal, widest_path_coloring
from .builder import ColoringBuilder, Construction

logger = logging.getLogger(__name__)


def _check_factor(g: Graph, alpha: EdgeColoring, r: int) -> int:
    """Validate the regular factor and return ``t`` of ``alpha``."""
    if alpha.graph != g:
        raise PreconditionError("alpha colors a different graph")
    if g.regular_degree != r or r < 1:
        raise DomainError("g", f"factor must be {r}-regular with r >= 1")
    if not is_connected(g):
        raise PreconditionError("factor must be connected")
    t_alpha = alpha.max_color
    report = verify_interval(alpha, t_alpha)
    if not report.valid:
        raise PreconditionError(f"alpha is not an interval coloring: {report.reason}")
    return t_alpha


def _top(alpha: EdgeColoring, u: int) -> int:
    return max(alpha.incident_colors(u))


def _spec_or_none(spec: Optional[FamilySpec], right: FamilySpec) -> Optional[FamilySpec]:
    return Product(spec, right) if spec is not None else None


def product_with_path(
    g: Graph, alpha: EdgeColoring, r: int, m: int, spec: Optional[FamilySpec] = None
) -> Construction:
    """Interval coloring of G □ P_m with ``t_alpha + (m - 1)(r + 1)`` colors.

    Layer ``i`` (0-based) is ``alpha`` shifted by ``i (r + 1)``; the edge from
    ``(u, i)`` to ``(u, i + 1)`` gets the top color at ``(u, i)`` plus one.
    """
    t_alpha = _check_factor(g, alpha, r)
    if m < 1:
        raise DomainError("m", f"must be >= 1, got {m}")
    if m == 1:
        return Construction(_spec_or_none(spec, Path(1)), alpha, t_alpha, "widest")

    product = cartesian_product(g, Path(m).realize())
    builder = ColoringBuilder(product)
    step = r + 1
    for layer in range(m):
        for (a, b), color in zip(g.edges, alpha.colors):
            builder.assign(a * m + layer, b * m + layer, color + layer * step, "layer")
    for u in range(g.vertex_count):
        top = _top(alpha, u)
        for layer in range(m - 1):
            builder.assign(u * m + layer, u * m + layer + 1, top + layer * step + 1, "rung")
    t = t_alpha + (m - 1) * step
    logger.debug("path product: t_alpha=%d r=%d m=%d -> t=%d", t_alpha, r, m, t)
    return Construction(_spec_or_none(spec, Path(m)), builder.build(), t, "widest")


def even_cycle_layer_shift(i: int, n: int, r: int) -> int:
    """Shift of layer ``i`` (1-based) around C_2n."""
    if i == 1:
        return 0
    if i <= n + 1:
        return (i - 1) * (r + 1) + 1
    return (2 * n + 1 - i) * (r + 1)


def product_with_even_cycle(
    g: Graph, alpha: EdgeColoring, r: int, n: int, spec: Optional[FamilySpec] = None
) -> Construction:
    """Interval coloring of G □ C_2n with ``t_alpha + n(r + 1) + 1`` colors.

    Layers climb from layer 1 to layer n+1 and descend back toward layer 2n;
    the two edges leaving layer 1 sit one and two above its top color.
    """
    t_alpha = _check_factor(g, alpha, r)
    if n < 2:
        raise DomainError("n", f"need n >= 2 for C_2n, got {n}")

    k = 2 * n
    product = cartesian_product(g, Cycle(k).realize())
    builder = ColoringBuilder(product)

    def vid(u: int, i: int) -> int:
        return u * k + (i - 1)

    for i in range(1, k + 1):
        shift = even_cycle_layer_shift(i, n, r)
        for (a, b), color in zip(g.edges, alpha.colors):
            builder.assign(vid(a, i), vid(b, i), color + shift, "layer")

    for u in range(g.vertex_count):
        top = _top(alpha, u)
        builder.assign(vid(u, 1), vid(u, k), top + 1, "closing rung")
        builder.assign(vid(u, 1), vid(u, 2), top + 2, "first rung")
        for i in range(2, n + 1):
            builder.assign(vid(u, i), vid(u, i + 1), top + even_cycle_layer_shift(i, n, r) + 1, "ascending rung")
        for i in range(n + 2, k + 1):
            builder.assign(vid(u, i - 1), vid(u, i), top + even_cycle_layer_shift(i, n, r) + 1, "descending rung")

    t = t_alpha + n * (r + 1) + 1
    logger.debug("even cycle product: t_alpha=%d r=%d n=%d -> t=%d", t_alpha, r, n, t)
    return Construction(_spec_or_none(spec, Cycle(k)), builder.build(), t, "widest")


def product_with_cube(
    g: Graph, alpha: EdgeColoring, r: int, n: int, spec: Optional[FamilySpec] = None
) -> Construction:
    """G □ Q_n as n rounds of the path product with m = 2.

    The degree grows by one each round, so the colors add up to
    ``t_alpha + n(n + 2r + 1) / 2``.
    """
    if n < 0:
        raise DomainError("n", f"must be >= 0, got {n}")
    graph, coloring, degree = g, alpha, r
    t = _check_factor(g, alpha, r)
    for _ in range(n):
        step = product_with_path(graph, coloring, degree, 2)
        graph, coloring, t = step.graph, step.coloring, step.t
        degree += 1
    if n == 0:
        result_spec = spec
    else:
        result_spec = _spec_or_none(spec, Hypercube(n))
    return Construction(result_spec, coloring, t, "widest")


def hypercube_widest(n: int) -> Construction:
    """Interval n(n+1)/2-coloring of Q_n grown from K_2 by the cube product."""
    if n < 1:
        raise DomainError("n", f"must be >= 1, got {n}")
    base = widest_path_coloring(2)
    built = product_with_cube(base.graph, base.coloring, 1, n - 1)
    return Construction(Hypercube(n), built.coloring, built.t, "widest")


def layer_restriction(result: EdgeColoring, g: Graph, layers: int, layer: int) -> List[int]:
    """Colors of the copy of ``g`` in ``layer`` (0-based), in ``g``'s edge order."""
    return [result.color_of(a * layers + layer, b * layers + layer) for a, b in g.edges]


__all__ = [
    "product_with_path",
    "product_with_even_cycle",
    "product_with_cube",
    "hypercube_widest",
    "hypercube_minimal",
    "even_cycle_layer_shift",
    "layer_restriction",
]
