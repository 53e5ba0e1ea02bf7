from pathlib import Path
from typing import Optional

from ..coders.certificate import read_certificate
from ..coders.dot import to_dot, write_dot
from .common import EXIT_OK
from .manifest import RunManifest


def export_dot(certificate: str, out: Optional[str] = None) -> dict:
    """
    Render a certificate as a Graphviz DOT graph, one labeled edge per colored edge.

    Args:
        certificate (str): Certificate file to read.
        out (str, optional): Where to write the DOT text.

    Returns:
        dict: ``text`` holds the DOT source; ``edges`` is the number of
        labeled edges.
    """
    cert = read_certificate(certificate)
    name = Path(certificate).stem.replace("-", "_")
    outputs = []
    if out:
        write_dot(out, cert.coloring, name=name, t=cert.t)
        outputs.append(str(out))
    return {
        "certificate": str(certificate),
        "edges": cert.graph.edge_count,
        "t": cert.t,
        "text": to_dot(cert.coloring, name=name, t=cert.t),
        "manifest": RunManifest("export-dot", str(certificate), {}, outputs).to_dict(),
        "exit_code": EXIT_OK,
    }
