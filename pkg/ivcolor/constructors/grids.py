"""Widest known coloring of the two-dimensional grid G(m, n)."""

import logging

from ..core.families import Grid
from ..errors import DomainError
from .builder import ColoringBuilder, Construction, grid_vertex

logger = logging.getLogger(__name__)


def grid_widest(m: int, n: int) -> Construction:
    """Interval 2(m+n-3)-coloring of the m x n grid.

    Rows are indexed by ``i`` and columns by ``j``, both from 1. Colors grow
    by two with every step right or down, and the last column is folded back
    so it closes the interval of its row.
    """
    for name, value in (("m", m), ("n", n)):
        if not isinstance(value, int) or value < 2:
            raise DomainError(name, f"grid sides must be >= 2, got {value!r}")

    spec = Grid([m, n])
    builder = ColoringBuilder(spec.realize())
    v = grid_vertex(n)

    for i in range(1, m):
        for j in range(1, n):
            builder.assign(v(i, j), v(i + 1, j), 2 * (i + j) - 3, "vertical")
        builder.assign(v(i, n), v(i + 1, n), 2 * (n + i) - 5, "last column")

    for j in range(1, n):
        builder.assign(v(1, j), v(1, j + 1), 2 * j, "first row")
    for i in range(2, m + 1):
        for j in range(1, n):
            builder.assign(v(i, j), v(i, j + 1), 2 * (i + j) - 4, "horizontal")

    t = 2 * (m + n - 3)
    logger.debug("grid %dx%d colored with t=%d", m, n, t)
    return Construction(spec, builder.build(), t, "widest")
