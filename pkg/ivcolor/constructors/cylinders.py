"""Colorings of cylinders C(m, n) = P_m x C_n.

Rows ``1..m`` are the rings, columns ``1..n`` run around each ring, and
``v(i, j)`` is the vertex in row ``i`` and column ``j``.
"""

import logging

from ..core.families import Cylinder
from ..errors import DomainError
from .builder import ColoringBuilder, Construction, grid_vertex

logger = logging.getLogger(__name__)

RUNG_BETWEEN_BLOCKS = 4


def _require_int(name: str, value: int, minimum: int) -> None:
    if not isinstance(value, int) or value < minimum:
        raise DomainError(name, f"must be an integer >= {minimum}, got {value!r}")


def _color_prism(builder: ColoringBuilder, v, top_row: int, columns: int) -> None:
    """Interval 3-coloring of the two rings ``top_row`` and ``top_row + 1``.

    Ring edges alternate 1 and 3, the closing edge takes 2, and rungs take 2
    except at the first and last columns where they fill in the missing color.
    """
    for row in (top_row, top_row + 1):
        for j in range(1, columns):
            builder.assign(v(row, j), v(row, j + 1), 1 if j % 2 else 3, "prism ring")
        builder.assign(v(row, 1), v(row, columns), 2, "prism closing edge")
    for j in range(1, columns + 1):
        if j == 1:
            color = 3
        elif j == columns:
            color = 1
        else:
            color = 2
        builder.assign(v(top_row, j), v(top_row + 1, j), color, "prism rung")


def prism_three_coloring(circumference: int) -> Construction:
    """Interval 3-coloring of C(2, n) for odd ``n``."""
    _require_int("circumference", circumference, 3)
    if circumference % 2 == 0:
        raise DomainError("circumference", f"must be odd, got {circumference}")
    spec = Cylinder(2, circumference)
    builder = ColoringBuilder(spec.realize())
    _color_prism(builder, grid_vertex(circumference), 1, circumference)
    return Construction(spec, builder.build(), 3, "minimal")


def _color_three_rows(builder: ColoringBuilder, v, n: int) -> None:
    """Rows 1 to 3 of C(m, 2n+1) for odd m; row 3 sees exactly [1, 3]."""
    columns = 2 * n + 1
    half = (n + 1) // 2

    for j in range(1, columns + 1):
        if j == 1:
            upper, lower = 6, 3
        elif j <= 2 * half:
            upper, lower = 4, 2
        elif j == 2 * half + 1:
            upper, lower = 2, 1
        else:
            upper, lower = 3, 1
        builder.assign(v(1, j), v(2, j), upper, "upper rung")
        builder.assign(v(2, j), v(3, j), lower, "lower rung")

    for row in (1, 2):
        for j in range(1, half + 1):
            builder.assign(v(row, 2 * j - 1), v(row, 2 * j), 5, "ring, first half")
            builder.assign(v(row, 2 * j), v(row, 2 * j + 1), 3, "ring, first half")
        for j in range(half + 1, n + 1):
            builder.assign(v(row, 2 * j - 1), v(row, 2 * j), 4, "ring, second half")
            builder.assign(v(row, 2 * j), v(row, 2 * j + 1), 2, "ring, second half")
        builder.assign(v(row, 1), v(row, columns), 4, "ring closing edge")

    for j in range(1, half + 1):
        builder.assign(v(3, 2 * j - 1), v(3, 2 * j), 1, "third ring, first half")
        builder.assign(v(3, 2 * j), v(3, 2 * j + 1), 3, "third ring, first half")
    for j in range(half + 1, n + 1):
        builder.assign(v(3, 2 * j - 1), v(3, 2 * j), 2, "third ring, second half")
        builder.assign(v(3, 2 * j), v(3, 2 * j + 1), 3, "third ring, second half")
    builder.assign(v(3, 1), v(3, columns), 2, "third ring closing edge")


def cylinder_minimal(m: int, odd_circumference: int) -> Construction:
    """Interval coloring of C(m, 2n+1) with 4 colors for even m, 6 for odd m.

    Pairs of rings get the prism 3-coloring and consecutive pairs are joined
    by rungs of color 4. For odd ``m`` the first three rings form a separate
    block whose last ring sees [1, 3], so the pairs below attach the same way.
    """
    _require_int("m", m, 3)
    _require_int("odd_circumference", odd_circumference, 3)
    if odd_circumference % 2 == 0:
        raise DomainError("odd_circumference", f"must be odd, got {odd_circumference}")

    n = (odd_circumference - 1) // 2
    spec = Cylinder(m, odd_circumference)
    builder = ColoringBuilder(spec.realize())
    v = grid_vertex(odd_circumference)

    joins = []
    if m % 2:
        _color_three_rows(builder, v, n)
        first_pair, t = 4, 6
        if m > 3:
            joins.append((3, 4))
    else:
        first_pair, t = 1, 4

    for top in range(first_pair, m, 2):
        _color_prism(builder, v, top, odd_circumference)
        if top + 2 <= m:
            joins.append((top + 1, top + 2))

    for upper, lower in joins:
        for j in range(1, odd_circumference + 1):
            builder.assign(v(upper, j), v(lower, j), RUNG_BETWEEN_BLOCKS, "block rung")

    logger.debug("cylinder C(%d,%d) minimal coloring, t=%d", m, odd_circumference, t)
    return Construction(spec, builder.build(), t, "minimal", builder.duplicates)


def _widest_even(m: int, n: int) -> Construction:
    """C(2m, 2n) with 4m + 2n - 2 colors."""
    columns = 2 * n
    spec = Cylinder(2 * m, columns)
    builder = ColoringBuilder(spec.realize())
    v = grid_vertex(columns)

    for i in range(1, m + 1):
        b = 4 * i
        for row in (2 * i - 1, 2 * i):
            for j in range(1, n + 1):
                builder.assign(v(row, j), v(row, j + 1), b + 2 * j - 4, "ring, rising")
            for j in range(n + 1, columns):
                builder.assign(v(row, j), v(row, j + 1), b - 2 * j + 4 * n - 1, "ring, falling")
            builder.assign(v(row, 1), v(row, columns), b - 1, "ring closing edge")
        for j in range(1, n + 1):
            builder.assign(v(2 * i - 1, j), v(2 * i, j), b + 2 * j - 5, "rung within pair")
        for j in range(n + 1, columns + 1):
            builder.assign(v(2 * i - 1, j), v(2 * i, j), b - 2 * j + 4 * n, "rung within pair")
        if i < m:
            builder.assign(v(2 * i, 1), v(2 * i + 1, 1), b, "rung between pairs")
            for j in range(2, n + 2):
                builder.assign(v(2 * i, j), v(2 * i + 1, j), b + 2 * j - 3, "rung between pairs")
            for j in range(n + 2, columns + 1):
                builder.assign(v(2 * i, j), v(2 * i + 1, j), b - 2 * j + 4 * n + 2, "rung between pairs")

    return Construction(spec, builder.build(), 4 * m + 2 * n - 2, "widest")


def _widest_odd(m: int, n: int) -> Construction:
    """C(2m, 2n+1) with 4m + 2n - 1 colors."""
    columns = 2 * n + 1
    spec = Cylinder(2 * m, columns)
    builder = ColoringBuilder(spec.realize())
    v = grid_vertex(columns)

    for i in range(1, m + 1):
        b = 4 * i
        for row in (2 * i - 1, 2 * i):
            for j in range(1, n + 2):
                builder.assign(v(row, j), v(row, j + 1), b + 2 * j - 4, "ring, rising")
            for j in range(n + 2, columns):
                builder.assign(v(row, j), v(row, j + 1), b - 2 * j + 4 * n + 1, "ring, falling")
            builder.assign(v(row, 1), v(row, columns), b - 1, "ring closing edge")
        for j in range(1, n + 3):
            builder.assign(v(2 * i - 1, j), v(2 * i, j), b + 2 * j - 5, "rung within pair")
        for j in range(n + 3, columns + 1):
            builder.assign(v(2 * i - 1, j), v(2 * i, j), b - 2 * j + 4 * n + 2, "rung within pair")
        if i < m:
            builder.assign(v(2 * i, 1), v(2 * i + 1, 1), b, "rung between pairs")
            for j in range(2, n + 2):
                builder.assign(v(2 * i, j), v(2 * i + 1, j), b + 2 * j - 3, "rung between pairs")
            for j in range(n + 2, columns + 1):
                builder.assign(v(2 * i, j), v(2 * i + 1, j), b - 2 * j + 4 * n + 4, "rung between pairs")

    return Construction(spec, builder.build(), 4 * m + 2 * n - 1, "widest")


def cylinder_widest(rows: int, circumference: int) -> Construction:
    """Widest known coloring of C(rows, circumference); ``rows`` must be even.

    Rings are colored in pairs; pair ``i`` starts four colors above pair
    ``i - 1``, so every added pair of rings widens the palette by four.
    """
    _require_int("rows", rows, 2)
    _require_int("circumference", circumference, 3)
    if rows % 2:
        raise DomainError("rows", f"the widest cylinder coloring needs an even number of rings, got {rows}")
    m = rows // 2
    if circumference % 2 == 0:
        result = _widest_even(m, circumference // 2)
    else:
        result = _widest_odd(m, (circumference - 1) // 2)
    logger.debug("cylinder C(%d,%d) widest coloring, t=%d", rows, circumference, result.t)
    return result
