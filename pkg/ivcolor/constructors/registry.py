"""Lookup from (family, mode) to the construction that colors it."""

import logging
from typing import Callable, Dict, Tuple

from ..core.families import FamilySpec
from ..core.verifier import verify_interval
from ..errors import DomainError, UnsupportedConstructionError
from .basic import (
    complete_bipartite_coloring,
    complete_minimal,
    hypercube_minimal,
    widest_even_cycle_coloring,
    widest_path_coloring,
)
from .builder import Construction
from .cylinders import cylinder_minimal, cylinder_widest, prism_three_coloring
from .grids import grid_widest
from .products import hypercube_widest
from .tori import torus_widest

logger = logging.getLogger(__name__)

MODES = ("minimal", "widest")


def _path(spec) -> Construction:
    return widest_path_coloring(spec.n)


def _even_cycle(spec) -> Construction:
    if spec.n % 2:
        raise DomainError("n", f"odd cycles have no interval coloring, got C_{spec.n}")
    return widest_even_cycle_coloring(spec.n // 2)


def _grid(spec) -> Construction:
    if len(spec.dims) != 2:
        raise DomainError("dims", f"grid construction covers two dimensions, got {len(spec.dims)}")
    return grid_widest(*spec.dims)


def _cylinder_minimal(spec) -> Construction:
    if spec.m == 2:
        return prism_three_coloring(spec.n)
    return cylinder_minimal(spec.m, spec.n)


CONSTRUCTIONS: Dict[Tuple[str, str], Callable[[FamilySpec], Construction]] = {
    ("path", "widest"): _path,
    ("cycle", "widest"): _even_cycle,
    ("complete", "minimal"): lambda spec: complete_minimal(spec.n),
    ("complete-bipartite", "widest"): lambda spec: complete_bipartite_coloring(spec.r, spec.s),
    ("grid", "widest"): _grid,
    ("cylinder", "minimal"): _cylinder_minimal,
    ("cylinder", "widest"): lambda spec: cylinder_widest(spec.m, spec.n),
    ("torus", "widest"): lambda spec: torus_widest(spec.m, spec.n),
    ("hypercube", "minimal"): lambda spec: hypercube_minimal(spec.n),
    ("hypercube", "widest"): lambda spec: hypercube_widest(spec.n),
}


def supported_modes() -> Dict[str, Tuple[str, ...]]:
    modes: Dict[str, list] = {}
    for family, mode in CONSTRUCTIONS:
        modes.setdefault(family, []).append(mode)
    return {family: tuple(sorted(items)) for family, items in sorted(modes.items())}


def construct(spec: FamilySpec, mode: str) -> Construction:
    """Build the coloring for ``spec`` and check it before handing it out."""
    builder = CONSTRUCTIONS.get((spec.name, mode))
    if builder is None:
        raise UnsupportedConstructionError(spec.name, mode, supported_modes())
    result = builder(spec)
    report = verify_interval(result.coloring, result.t)
    if not report.valid:
        logger.error("construction for %s (%s) failed verification: %s", spec.label, mode, report.reason)
    else:
        logger.info("constructed %s (%s) with t=%d", spec.label, mode, result.t)
    return result
