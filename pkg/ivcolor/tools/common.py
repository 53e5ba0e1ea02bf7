"""Helpers shared by the command modules."""

import logging
import os
from typing import Optional, Sequence, Tuple, Union

from ..coders.edgelist import read_edge_list
from ..core.families import FamilySpec, family_from_name, parse_params
from ..core.graph import Graph
from ..errors import DomainError
from . import config

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 64

Params = Union[str, Sequence[int], None]


def load_spec(family: Optional[str], params: Params) -> FamilySpec:
    if not family:
        raise DomainError("family", "a family name is required")
    if params is None:
        params = ()
    values = parse_params(params) if isinstance(params, str) else tuple(params)
    return family_from_name(family, values)


def load_graph(family: Optional[str], params: Params, graph_file: Optional[str]) -> Tuple[Graph, str]:
    """Graph from either a family description or an edge-list file, plus a source label."""
    if graph_file and family:
        raise DomainError("graph", "give either a family or a graph file, not both")
    if graph_file:
        logger.debug("reading edge list %s", graph_file)
        return read_edge_list(graph_file), str(graph_file)
    spec = load_spec(family, params)
    return spec.realize(), spec.label


def output_path(out: Optional[str], *name_parts: str, suffix: str = ".json") -> str:
    """``out`` when given, else a file under the configured output directory."""
    if out:
        return str(out)
    return os.path.join(config.get_output_dir(), "-".join(name_parts) + suffix)


def params_text(params: Params) -> str:
    if params is None:
        return ""
    if isinstance(params, str):
        return params
    return ",".join(str(p) for p in params)
