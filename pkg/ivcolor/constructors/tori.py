"""Widest known colorings of tori T(p, q) = C_p x C_q."""

import logging

from ..core.coloring import EdgeColoring
from ..core.families import Torus
from ..errors import DomainError
from .basic import widest_even_cycle_coloring
from .builder import ColoringBuilder, Construction, grid_vertex
from .products import product_with_even_cycle

logger = logging.getLogger(__name__)


def transpose(result: Construction) -> Construction:
    """Move a coloring of T(p, q) onto T(q, p) by swapping coordinates."""
    p, q = result.spec.params()
    target = Torus(q, p)
    mapping = {}
    for (a, b), color in result.coloring.as_mapping().items():
        (ia, ja), (ib, jb) = divmod(a, q), divmod(b, q)
        mapping[(ja * p + ia, jb * p + ib)] = color
    coloring = EdgeColoring.from_mapping(target.realize(), mapping)
    return Construction(target, coloring, result.t, result.mode, result.duplicates)


def _odd_torus(m: int, n: int) -> Construction:
    """T(2m, 2n+1): rows are grouped into levels that share one ring coloring."""
    rows, columns = 2 * m, 2 * n + 1
    spec = Torus(rows, columns)
    builder = ColoringBuilder(spec.realize())
    v = grid_vertex(columns)

    def color_ring(row: int, base: int) -> None:
        for j in range(1, n + 2):
            builder.assign(v(row, j), v(row, j + 1), base + 2 * j, "ring, rising")
        for j in range(n + 2, columns):
            builder.assign(v(row, j), v(row, j + 1), base + 2 * (columns - j) + 3, "ring, falling")
        builder.assign(v(row, 1), v(row, columns), base + 3, "ring closing edge")

    color_ring(1, 0)
    color_ring(rows, 0)
    for i in range(1, m // 2 + 1):
        for row in (2 * i, 2 * i + 1, rows - 2 * i, rows - 2 * i + 1):
            color_ring(row, 4 * i)

    for j in range(1, columns + 1):
        color = 2 * j - 1 if j <= n + 2 else 2 * (2 * n + 3 - j)
        builder.assign(v(1, j), v(rows, j), color, "wrap-around column edge")

    for i in range(1, (m + 1) // 2 + 1):
        for j in range(1, columns + 1):
            if j == 1:
                color = 4 * i
            elif j <= n + 1:
                color = 4 * i + 2 * j - 3
            else:
                color = 4 * (n + 1 + i) - 2 * j
            builder.assign(v(2 * i - 1, j), v(2 * i, j), color, "column edge leaving an odd row")
            builder.assign(v(rows - 2 * i + 1, j), v(rows - 2 * i + 2, j), color, "column edge leaving an odd row")

    for i in range(1, m // 2 + 1):
        for j in range(1, columns + 1):
            color = 4 * i + 2 * j - 1 if j <= n + 2 else 4 * i + 2 * (2 * n + 3 - j)
            builder.assign(v(2 * i, j), v(2 * i + 1, j), color, "column edge leaving an even row")
            builder.assign(v(rows - 2 * i, j), v(rows - 2 * i + 1, j), color, "column edge leaving an even row")

    t = 2 * m + 2 * n + (2 if m % 2 else 3)
    return Construction(spec, builder.build(), t, "widest", builder.duplicates)


def _even_torus(a: int, b: int) -> Construction:
    """T(2a, 2b) as C_2a around a C_2b ring; the longer cycle goes around."""
    if a > b:
        return transpose(_even_torus(b, a))
    ring = widest_even_cycle_coloring(a)
    built = product_with_even_cycle(ring.graph, ring.coloring, 2, b)
    return Construction(Torus(2 * a, 2 * b), built.coloring, built.t, "widest")


def torus_widest(p: int, q: int) -> Construction:
    """Widest known coloring of T(p, q).

    ``p`` must be even. An odd ``q`` uses the level construction; an even one
    goes through the even cycle product.
    """
    for name, value in (("p", p), ("q", q)):
        if not isinstance(value, int) or value < 3:
            raise DomainError(name, f"must be an integer >= 3, got {value!r}")
    if p % 2 and q % 2:
        raise DomainError("params", f"T({p},{q}) has no interval coloring: both cycles are odd")
    if p % 2:
        return transpose(torus_widest(q, p))

    m = p // 2
    if q % 2:
        if m < 2:
            raise DomainError("p", f"odd-circumference tori need p >= 4, got {p}")
        result = _odd_torus(m, (q - 1) // 2)
    else:
        if m < 2 or q < 4:
            raise DomainError("params", f"even tori need both sides >= 4, got T({p},{q})")
        result = _even_torus(m, q // 2)
    if result.duplicates:
        logger.debug("T(%d,%d): %d column edges were named twice with the same color", p, q, result.duplicates)
    logger.debug("torus T(%d,%d) widest coloring, t=%d", p, q, result.t)
    return result
