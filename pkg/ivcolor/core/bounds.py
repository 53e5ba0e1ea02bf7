"""Closed-form values and bounds for w(G) and W(G) over the family catalog.

Everything here is integer arithmetic on a ``FamilySpec`` except
:func:`upper_bound`, which needs the diameter of a concrete graph. When
several lower bounds apply to one family they are all listed, each tagged
with a short id naming the argument it comes from.
"""

import logging
from dataclasses import dataclass, field, replace
from math import gcd
from typing import List, Optional, Tuple

from ..errors import InfiniteDiameterError
from .families import (
    Complete,
    CompleteBipartite,
    Cycle,
    Cylinder,
    FamilySpec,
    Grid,
    Hypercube,
    Path,
    Product,
    Torus,
)
from .graph import Graph, diameter, is_bipartite, is_connected

logger = logging.getLogger(__name__)

# (source, value) entries of a report
Bound = Tuple[str, int]
# (value, source) as returned by the ceiling functions
Ceiling = Tuple[int, str]

GENERAL_CEILING = "diameter-ceiling"
BIPARTITE_CEILING = "bipartite-diameter-ceiling"

GRID = "grid"
CYLINDER = "cylinder"
NOT_PLANAR = "not-planar"
HYPOTHESIS_NOT_MET = "hypothesis-not-met"

PLANAR_W_CEILING = 6


def _ceiling(diam: int, max_degree: int, bipartite: bool) -> Ceiling:
    if bipartite:
        return diam * (max_degree - 1) + 1, BIPARTITE_CEILING
    return (diam + 1) * (max_degree - 1) + 1, GENERAL_CEILING


def upper_bound(g: Graph) -> Ceiling:
    """Diameter ceiling on W for a connected graph, sharper when bipartite."""
    if not is_connected(g):
        raise InfiniteDiameterError()
    bipartite, _ = is_bipartite(g)
    return _ceiling(diameter(g), g.max_degree, bipartite)


def symbolic_upper_bound(spec: FamilySpec) -> Ceiling:
    """The same ceiling evaluated from the family's symbolic metrics."""
    return _ceiling(spec.diameter, spec.max_degree, spec.bipartite)


def odd_part_and_valuation(n: int) -> Tuple[int, int]:
    """``(p, q)`` with ``n = p * 2**q`` and ``p`` odd."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    q = (n & -n).bit_length() - 1
    return n >> q, q


def complete_graph_lower(n: int) -> int:
    """Lower bound on W(K_2n)."""
    p, q = odd_part_and_valuation(n)
    return 4 * n - 2 - p - q


def complete_times_cycle_lower(n: int) -> int:
    """Lower bound on W(K_2n x C_2n)."""
    p, q = odd_part_and_valuation(n)
    return 2 * n * n + 4 * n - 1 - p - q


def grid_dimensions_lower(dims) -> Tuple[int, Optional[str]]:
    """Lower bound on W of a grid with every side >= 2, and a note for odd counts.

    Sides are paired largest first; an odd one out adds its own path.
    """
    sides = sorted(dims, reverse=True)
    k = len(sides) // 2
    paired = 2 * sum(sides[: 2 * k]) - 6 * k
    if len(sides) % 2 == 0:
        return paired, None
    last = sides[2 * k]
    value = paired + last - 1
    note = (
        f"odd dimension count: {value} exceeds the bound {paired} of the first {2 * k} sides "
        f"by {value - paired}"
    )
    return value, note


@dataclass(frozen=True)
class BoundReport:
    family: FamilySpec
    lower_bounds: List[Bound] = field(default_factory=list)
    upper_bounds: List[Bound] = field(default_factory=list)
    w_exact: Optional[int] = None
    W_exact: Optional[int] = None
    w_ceiling: Optional[int] = None
    interval_colorable: Optional[bool] = None
    guaranteed_range: Optional[Tuple[int, int]] = None
    notes: List[str] = field(default_factory=list)
    constructed_t: Optional[int] = None
    oracle_w: Optional[int] = None
    oracle_W: Optional[int] = None

    @property
    def best_lower(self) -> Optional[int]:
        return max((v for _, v in self.lower_bounds), default=None)

    @property
    def best_upper(self) -> Optional[int]:
        return min((v for _, v in self.upper_bounds), default=None)

    def with_observations(self, constructed_t=None, oracle_w=None, oracle_W=None) -> "BoundReport":
        return replace(self, constructed_t=constructed_t, oracle_w=oracle_w, oracle_W=oracle_W)

    def violations(self) -> List[str]:
        """Every pair of numbers in the report that contradicts another."""
        problems = []
        upper = self.best_upper
        if upper is not None:
            for source, value in self.lower_bounds:
                if value > upper:
                    problems.append(f"lower bound {source}={value} exceeds upper bound {upper}")
            if self.constructed_t is not None and self.constructed_t > upper:
                problems.append(f"constructed t={self.constructed_t} exceeds upper bound {upper}")
            if self.oracle_W is not None and self.oracle_W > upper:
                problems.append(f"oracle W={self.oracle_W} exceeds upper bound {upper}")
        if self.oracle_W is not None:
            for source, value in self.lower_bounds:
                if value > self.oracle_W:
                    problems.append(f"lower bound {source}={value} exceeds oracle W={self.oracle_W}")
            if self.constructed_t is not None and self.constructed_t > self.oracle_W:
                problems.append(f"constructed t={self.constructed_t} exceeds oracle W={self.oracle_W}")
            if self.W_exact is not None and self.W_exact != self.oracle_W:
                problems.append(f"oracle W={self.oracle_W} differs from the known value {self.W_exact}")
        if self.oracle_w is not None:
            if self.w_exact is not None and self.w_exact != self.oracle_w:
                problems.append(f"oracle w={self.oracle_w} differs from the known value {self.w_exact}")
            if self.w_ceiling is not None and self.oracle_w > self.w_ceiling:
                problems.append(f"oracle w={self.oracle_w} exceeds the ceiling {self.w_ceiling}")
        return problems

    def to_dict(self):
        return {
            "family": self.family.label,
            "lower_bounds": [{"source": s, "value": v} for s, v in self.lower_bounds],
            "upper_bounds": [{"source": s, "value": v} for s, v in self.upper_bounds],
            "w": self.w_exact,
            "W": self.W_exact,
            "w_ceiling": self.w_ceiling,
            "interval_colorable": self.interval_colorable,
            "guaranteed_range": list(self.guaranteed_range) if self.guaranteed_range else None,
            "constructed_t": self.constructed_t,
            "oracle_w": self.oracle_w,
            "oracle_W": self.oracle_W,
            "notes": list(self.notes),
        }


def _finish(spec: FamilySpec, lower=(), upper=(), **facts) -> BoundReport:
    """Attach the diameter ceiling and, for regular families, the realizable range."""
    upper = list(upper)
    if facts.get("interval_colorable") is not False and spec.edge_count > 0:
        value, source = symbolic_upper_bound(spec)
        upper.insert(0, (source, value))
    report = BoundReport(spec, list(lower), upper, **facts)
    if report.guaranteed_range is None and report.w_exact is not None and report.interval_colorable:
        if spec.regular_degree is not None and report.best_lower is not None:
            report = replace(report, guaranteed_range=(report.w_exact, report.best_lower))
    return report


def _not_colorable(spec: FamilySpec, why: str) -> BoundReport:
    return _finish(spec, interval_colorable=False, notes=[why])


def _path(spec: Path) -> BoundReport:
    if spec.n == 1:
        return _finish(spec, notes=["no edges"])
    w = 1 if spec.n == 2 else 2
    return _finish(spec, [("path-exact", spec.n - 1)], w_exact=w, W_exact=spec.n - 1, interval_colorable=True)


def _cycle(spec: Cycle) -> BoundReport:
    if spec.n % 2:
        return _not_colorable(spec, "odd cycles need three colors at a degree-2 vertex")
    half = spec.n // 2
    return _finish(spec, [("even-cycle-exact", half + 1)], w_exact=2, W_exact=half + 1, interval_colorable=True)


def _complete(spec: Complete) -> BoundReport:
    if spec.n == 1:
        return _finish(spec, notes=["no edges"])
    if spec.n % 2:
        return _not_colorable(spec, "odd complete graphs are regular with chromatic index above the degree")
    half = spec.n // 2
    lower = complete_graph_lower(half)
    exact = lower if spec.n == 2 else None
    return _finish(
        spec,
        [("complete-graph-construction", lower)],
        w_exact=spec.n - 1,
        W_exact=exact,
        interval_colorable=True,
    )


def _complete_bipartite(spec: CompleteBipartite) -> BoundReport:
    r, s = spec.r, spec.s
    w, widest = r + s - gcd(r, s), r + s - 1
    return _finish(
        spec,
        [("complete-bipartite-exact", widest)],
        w_exact=w,
        W_exact=widest,
        interval_colorable=True,
        guaranteed_range=(w, widest),
    )


def _hypercube(spec: Hypercube) -> BoundReport:
    n = spec.n
    widest = n * (n + 1) // 2
    return _finish(
        spec,
        [("hypercube-widest-construction", widest)],
        [("hypercube-span-ceiling", widest)],
        w_exact=n,
        W_exact=widest,
        interval_colorable=True,
    )


def _grid(spec: Grid) -> BoundReport:
    sides = [d for d in spec.dims if d > 1]
    if not sides:
        return _finish(spec, notes=["no edges"])
    if len(sides) == 1:
        path = _path(Path(sides[0]))
        return replace(path, family=spec)
    lower, notes = [], []
    w_ceiling = None
    if len(sides) == 2:
        m, n = sides
        if min(m, n) == 2:
            lower.append(("two-row-grid-exact", 2 * max(m, n) - 1))
        lower.append(("grid-construction", 2 * (m + n - 3)))
        if min(m, n) >= 3:
            w_ceiling = PLANAR_W_CEILING
    else:
        value, note = grid_dimensions_lower(sides)
        lower.append(("grid-pairing", value))
        if note:
            notes.append(note)
    exact = 2 * max(sides) - 1 if len(sides) == 2 and min(sides) == 2 else None
    return _finish(
        spec,
        lower,
        w_exact=spec.max_degree,
        W_exact=exact,
        w_ceiling=w_ceiling,
        interval_colorable=True,
        notes=notes,
    )


def _cylinder(spec: Cylinder) -> BoundReport:
    m, circumference = spec.m, spec.n
    if m == 1:
        return replace(_cycle(Cycle(circumference)), family=spec)
    if m == 2:
        widest = circumference + 2
        return _finish(
            spec,
            [("two-ring-cylinder-exact", widest)],
            w_exact=3,
            W_exact=widest,
            interval_colorable=True,
            guaranteed_range=(3, widest),
        )
    lower = []
    if circumference % 2 == 0:
        n = circumference // 2
        w = spec.max_degree
        lower.append(("even-cylinder-construction", 3 * m + n - 2))
        if m % 2 == 0:
            lower.append(("paired-ring-construction", 2 * m + 2 * n - 2))
    else:
        n = (circumference - 1) // 2
        w = 4 if m % 2 == 0 else 6
        if m % 2 == 0:
            lower.append(("paired-ring-construction", 2 * m + 2 * n - 1))
    return _finish(
        spec,
        lower,
        w_exact=w,
        w_ceiling=PLANAR_W_CEILING,
        interval_colorable=True,
    )


def _torus(spec: Torus) -> BoundReport:
    p, q = spec.m, spec.n
    if p % 2 and q % 2:
        return _not_colorable(spec, "a torus with both cycles odd has no interval coloring")
    lower = []
    if p % 2 == 0 and q % 2 == 0:
        a, b = p // 2, q // 2
        lower.append(("even-torus-construction", max(3 * a + b, 3 * b + a)))
        lower.append(("cycle-product-construction", max(3 * a + b + 2, 3 * b + a + 2)))
    else:
        even, odd = (p, q) if p % 2 == 0 else (q, p)
        m, n = even // 2, (odd - 1) // 2
        lower.append(("level-construction", 2 * m + 2 * n + (2 if m % 2 else 3)))
    return _finish(spec, lower, w_exact=4, interval_colorable=True)


def _product(spec: Product) -> BoundReport:
    left, right = family_values(spec.left), family_values(spec.right)
    notes = []
    if left.interval_colorable is False or right.interval_colorable is False:
        notes.append("a factor is not interval colorable; only the diameter ceiling applies")
        return _finish(spec, notes=notes)
    if left.interval_colorable is None or right.interval_colorable is None:
        return _finish(spec, notes=["a factor has no edges"])

    lower = []
    base = left.best_lower
    if base is not None and right.best_lower is not None:
        lower.append(("product-sum", base + right.best_lower))
    r = spec.left.regular_degree
    if base is not None and r:
        if isinstance(spec.right, Path) and spec.right.n >= 2:
            m = spec.right.n
            lower.append(("regular-times-path", base + (m - 1) * (r + 1)))
        if isinstance(spec.right, Cycle) and spec.right.n % 2 == 0:
            n = spec.right.n // 2
            lower.append(("regular-times-even-cycle", base + n * (r + 1) + 1))
        if isinstance(spec.right, Hypercube):
            n = spec.right.n
            lower.append(("regular-times-cube", base + n * (n + 2 * r + 1) // 2))
    if (
        isinstance(spec.left, Complete)
        and isinstance(spec.right, Cycle)
        and spec.left.n % 2 == 0
        and spec.left.n == spec.right.n
    ):
        lower.append(("complete-times-even-cycle", complete_times_cycle_lower(spec.left.n // 2)))

    w_ceiling = None
    if left.w_exact is not None and right.w_exact is not None:
        w_ceiling = left.w_exact + right.w_exact
    planar = planar_product_class(spec.left, spec.right)
    if planar.w_ceiling is not None:
        w_ceiling = min(w_ceiling or planar.w_ceiling, planar.w_ceiling)
        notes.append(f"planar: the product is a {planar.kind}")
    return _finish(spec, lower, w_ceiling=w_ceiling, interval_colorable=True, notes=notes)


_EVALUATORS = {
    Path: _path,
    Cycle: _cycle,
    Complete: _complete,
    CompleteBipartite: _complete_bipartite,
    Hypercube: _hypercube,
    Grid: _grid,
    Cylinder: _cylinder,
    Torus: _torus,
    Product: _product,
}


def family_values(spec: FamilySpec) -> BoundReport:
    """All known values and bounds for ``spec``."""
    spec.validate()
    evaluator = _EVALUATORS.get(type(spec))
    if evaluator is None:
        logger.info("no closed forms for %s; reporting the ceiling only", spec.label)
        return _finish(spec, notes=["family outside the catalog"])
    return evaluator(spec)


@dataclass(frozen=True)
class PlanarClass:
    kind: str
    w_ceiling: Optional[int] = None
    interval_colorable: Optional[bool] = None
    reason: Optional[str] = None

    @property
    def planar(self) -> bool:
        return self.kind in (GRID, CYLINDER)


def _as_path_or_cycle(spec: FamilySpec) -> Optional[FamilySpec]:
    """The path or cycle ``spec`` is isomorphic to, if any."""
    if isinstance(spec, (Path, Cycle)):
        return spec
    if isinstance(spec, Complete) and spec.n == 3:
        return Cycle(3)
    if isinstance(spec, CompleteBipartite):
        if sorted((spec.r, spec.s)) == [1, 2]:
            return Path(3)
        if spec.r == spec.s == 2:
            return Cycle(4)
    if isinstance(spec, Hypercube) and spec.n == 2:
        return Cycle(4)
    if isinstance(spec, Grid):
        sides = [d for d in spec.dims if d > 1]
        if len(sides) <= 1:
            return Path(sides[0] if sides else 1)
        if sorted(sides) == [2, 2]:
            return Cycle(4)
    if isinstance(spec, Cylinder) and spec.m == 1:
        return Cycle(spec.n)
    return None


def planar_product_class(a: FamilySpec, b: FamilySpec) -> PlanarClass:
    """Planarity of ``a x b`` when both factors have at least three vertices.

    Such a product is planar exactly when it is a two-dimensional grid or a
    cylinder, and every planar one is interval colorable with w <= 6.
    """
    for name, spec in (("a", a), ("b", b)):
        spec.validate()
        if spec.vertex_count < 3:
            return PlanarClass(HYPOTHESIS_NOT_MET, reason=f"factor {name} has {spec.vertex_count} vertices")
    x, y = _as_path_or_cycle(a), _as_path_or_cycle(b)
    if x is None or y is None:
        return PlanarClass(NOT_PLANAR, reason="a factor is neither a path nor a cycle")
    if isinstance(x, Path) and isinstance(y, Path):
        return PlanarClass(GRID, PLANAR_W_CEILING, True)
    if isinstance(x, Cycle) and isinstance(y, Cycle):
        return PlanarClass(NOT_PLANAR, reason="both factors are cycles")
    return PlanarClass(CYLINDER, PLANAR_W_CEILING, True)
