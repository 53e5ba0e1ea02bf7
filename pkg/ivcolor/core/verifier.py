"""Decide whether an edge coloring is an interval t-coloring.

An interval t-coloring uses exactly the colors ``1..t``, gives distinct colors
to edges sharing a vertex, and the colors at each vertex form a block of
consecutive integers.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from ..errors import PreconditionError
from .coloring import EdgeColoring, spectrum
from .graph import is_connected

logger = logging.getLogger(__name__)

VALID = "valid"
INVALID = "invalid"

# reason kinds, most local first
IMPROPER = "improper"
GAP = "gap"
OUT_OF_RANGE = "color-out-of-range"
UNUSED = "unused-color"


@dataclass(frozen=True)
class Witness:
    vertex: Optional[int] = None
    edge: Optional[Tuple[int, int]] = None
    color: Optional[int] = None

    def to_dict(self):
        return {"vertex": self.vertex, "edge": list(self.edge) if self.edge else None, "color": self.color}


@dataclass(frozen=True)
class VerifyReport:
    proper: bool
    all_vertex_spectra_intervals: bool
    colors_used: frozenset
    t_claimed: int
    verdict: str
    reason: Optional[str] = None
    kind: Optional[str] = None
    witness: Witness = field(default_factory=Witness)

    @property
    def valid(self) -> bool:
        return self.verdict == VALID

    def to_dict(self):
        return {
            "verdict": self.verdict,
            "t": self.t_claimed,
            "proper": self.proper,
            "intervals": self.all_vertex_spectra_intervals,
            "colors_used": sorted(self.colors_used),
            "kind": self.kind,
            "reason": self.reason,
            "witness": self.witness.to_dict() if self.kind else None,
        }


@dataclass(frozen=True)
class _VertexWindow:
    lo: int
    hi: int
    count: int
    clash: Optional[Tuple[int, int]]  # (edge index, color) of the first repeat


def _window(c: EdgeColoring, v: int) -> _VertexWindow:
    seen = 0
    lo, hi, count = 0, 0, 0
    clash = None
    for index in c.graph.incident_edges[v]:
        color = c.colors[index]
        bit = 1 << color
        if seen & bit:
            if clash is None:
                clash = (index, color)
            continue
        seen |= bit
        lo = color if count == 0 else min(lo, color)
        hi = color if count == 0 else max(hi, color)
        count += 1
    return _VertexWindow(lo, hi, count, clash)


def _first_gap(c: EdgeColoring, v: int, lo: int, hi: int) -> int:
    present = spectrum(c, v)
    return next(x for x in range(lo, hi + 1) if x not in present)


def verify_interval(c: EdgeColoring, t: int) -> VerifyReport:
    """Full check of properness, per-vertex intervals and use of every color."""
    g = c.graph
    proper = True
    intervals = True
    first_issue = None  # (kind, reason, witness)

    for v in range(g.vertex_count):
        w = _window(c, v)
        if w.clash is not None:
            proper = False
            intervals = False
            if first_issue is None:
                index, color = w.clash
                first_issue = (
                    IMPROPER,
                    f"two edges at vertex {v} share color {color}",
                    Witness(vertex=v, edge=g.edges[index], color=color),
                )
            continue
        if w.count and w.hi - w.lo + 1 != w.count:
            intervals = False
            if first_issue is None:
                missing = _first_gap(c, v, w.lo, w.hi)
                first_issue = (
                    GAP,
                    f"spectrum of vertex {v} is not an interval: color {missing} missing "
                    f"between {w.lo} and {w.hi}",
                    Witness(vertex=v, color=missing),
                )

    used = frozenset(c.colors)
    if first_issue is None:
        outside = sorted(x for x in used if x > t)
        if outside:
            index = c.colors.index(outside[0])
            first_issue = (
                OUT_OF_RANGE,
                f"color {outside[0]} exceeds t={t}",
                Witness(edge=g.edges[index], color=outside[0]),
            )
        else:
            unused = [x for x in range(1, t + 1) if x not in used]
            if unused:
                first_issue = (
                    UNUSED,
                    f"color {unused[0]} of 1..{t} is never used",
                    Witness(color=unused[0]),
                )

    if first_issue is None:
        return VerifyReport(proper, intervals, used, t, VALID)
    kind, reason, witness = first_issue
    logger.debug("coloring rejected at t=%d: %s", t, reason)
    return VerifyReport(proper, intervals, used, t, INVALID, reason, kind, witness)


def verify_lemma1(c: EdgeColoring) -> Optional[int]:
    """Local check that certifies an interval coloring of a connected graph.

    Only properness, consecutive colors at every vertex and a minimum color of
    1 are checked; on a connected graph the colors between 1 and the maximum
    are then all used, so the maximum is returned as ``t``. Returns ``None``
    when a local condition fails.
    """
    g = c.graph
    if not is_connected(g):
        raise PreconditionError("the shortcut check needs a connected graph")
    if g.edge_count == 0:
        return None
    for v in range(g.vertex_count):
        w = _window(c, v)
        if w.clash is not None or (w.count and w.hi - w.lo + 1 != w.count):
            logger.debug("shortcut check failed at vertex %d", v)
            return None
    if c.min_color != 1:
        return None
    return c.max_color


def vertex_spectra(c: EdgeColoring) -> List[frozenset]:
    return [spectrum(c, v) for v in range(c.graph.vertex_count)]
