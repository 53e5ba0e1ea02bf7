"""Graphviz DOT export of a colored graph; each edge is labeled with its color."""

from pathlib import Path
from typing import Optional, Union

import graphviz

from ..core.coloring import EdgeColoring
from .atomic import write_atomic


def to_dot(coloring: EdgeColoring, name: Optional[str] = None, t: Optional[int] = None) -> str:
    comment = name or "interval edge coloring"
    if t is not None:
        comment = f"{comment} (t={t})"
    dot = graphviz.Graph(name=name or "G", comment=comment)
    dot.attr("node", shape="circle")
    for v in range(coloring.graph.vertex_count):
        dot.node(str(v))
    for (u, v), color in zip(coloring.graph.edges, coloring.colors):
        dot.edge(str(u), str(v), label=str(color))
    return dot.source


def write_dot(path: Union[str, Path], coloring: EdgeColoring, name: Optional[str] = None, t: Optional[int] = None) -> Path:
    return write_atomic(path, to_dot(coloring, name, t))
