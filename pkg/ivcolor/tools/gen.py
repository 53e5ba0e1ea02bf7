from typing import Optional

from ..coders.edgelist import format_edge_list, write_edge_list
from .common import EXIT_OK, Params, load_spec, params_text
from .manifest import RunManifest


def gen(family: str, params: Params = None, out: Optional[str] = None) -> dict:
    """
    Realize a graph family and emit it as an edge list.

    Args:
        family (str): Family name, e.g. ``grid`` or ``torus``.
        params (str | list[int]): Family parameters, e.g. ``"3,4"``.
        out (str, optional): File to write the edge list to.

    Returns:
        dict: ``text`` holds the edge list; ``vertices``, ``edges`` and
        ``max_degree`` describe the graph.
    """
    spec = load_spec(family, params)
    g = spec.realize()
    outputs = []
    if out:
        write_edge_list(out, g)
        outputs.append(str(out))

    manifest = RunManifest("gen", spec.label, {"family": family, "params": params_text(params)}, outputs)
    return {
        "family": spec.label,
        "vertices": g.vertex_count,
        "edges": g.edge_count,
        "max_degree": g.max_degree,
        "text": format_edge_list(g),
        "manifest": manifest.to_dict(),
        "exit_code": EXIT_OK,
    }
