"""Plain-text edge lists: a header line ``n m`` followed by ``m`` lines ``u v``."""

from pathlib import Path
from typing import Union

from ..core.graph import Graph
from ..errors import CertificateParseError, DomainError
from .atomic import write_atomic


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def _ints(line: str, lineno: int, expected: int):
    parts = line.split()
    if len(parts) != expected:
        raise CertificateParseError(f"expected {expected} integers, got {line.strip()!r}", line=lineno)
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise CertificateParseError(f"not an integer in {line.strip()!r}", line=lineno) from None


def parse_edge_list(text: str) -> Graph:
    """Read the text format; blank lines and ``#`` comments are skipped."""
    rows = [
        (lineno, line)
        for lineno, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not rows:
        raise CertificateParseError("empty edge list", line=1)
    header_line, header = rows[0]
    n, m = _ints(header, header_line, 2)
    body = rows[1:]
    if len(body) != m:
        last = body[-1][0] if body else header_line
        raise CertificateParseError(f"header announces {m} edges but {len(body)} follow", line=last)
    edges = []
    for lineno, line in body:
        u, v = _ints(line, lineno, 2)
        if not (0 <= u < n and 0 <= v < n):
            raise CertificateParseError(f"edge ({u}, {v}) leaves [0, {n})", line=lineno)
        edges.append((u, v))
    try:
        return Graph.from_edges(n, edges)
    except DomainError as e:
        raise CertificateParseError(str(e)) from None


def read_edge_list(path: Union[str, Path]) -> Graph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise CertificateParseError(f"cannot read {path}: {e.strerror}") from None
    return parse_edge_list(text)


def write_edge_list(path: Union[str, Path], g: Graph) -> None:
    write_atomic(path, format_edge_list(g))
