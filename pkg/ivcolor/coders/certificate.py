"""Certificate documents shared by the constructors, the search and ``verify``.

A certificate is one JSON object with the keys ``n``, ``edges``, ``t``,
``colors``, ``verdict`` and ``reason`` in that order. The verdict is always
recomputed from the coloring when a certificate is built, so a file written by
this module never claims more than the verifier accepts.
"""

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Tuple, Union

from ..core.coloring import EdgeColoring
from ..core.graph import Graph
from ..core.verifier import INVALID, VALID, VerifyReport, verify_interval
from ..errors import CertificateParseError, DomainError
from .atomic import write_atomic

FIELDS = ("n", "edges", "t", "colors", "verdict", "reason")


@dataclass(frozen=True)
class Certificate:
    graph: Graph
    t: int
    colors: Tuple[int, ...]
    verdict: str
    reason: Optional[str] = None

    @property
    def coloring(self) -> EdgeColoring:
        return EdgeColoring(self.graph, self.colors)

    def to_dict(self):
        return {
            "n": self.graph.vertex_count,
            "edges": [[u, v] for u, v in self.graph.edges],
            "t": self.t,
            "colors": list(self.colors),
            "verdict": self.verdict,
            "reason": self.reason,
        }


def certify(coloring: EdgeColoring, t: int) -> Tuple[Certificate, VerifyReport]:
    """Verify ``coloring`` at ``t`` and wrap the outcome as a certificate."""
    report = verify_interval(coloring, t)
    cert = Certificate(coloring.graph, t, coloring.colors, report.verdict, report.reason)
    return cert, report


def dumps(cert: Certificate) -> str:
    return json.dumps(cert.to_dict(), separators=(", ", ": ")) + "\n"


def _field(doc, name, kind):
    if name not in doc:
        raise CertificateParseError("missing", field=name)
    value = doc[name]
    if not isinstance(value, kind) or isinstance(value, bool) and kind is not bool:
        raise CertificateParseError(f"expected {kind.__name__}, got {type(value).__name__}", field=name)
    return value


def loads(text: str) -> Certificate:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise CertificateParseError(e.msg, line=e.lineno) from None
    if not isinstance(doc, dict):
        raise CertificateParseError("certificate must be a JSON object", line=1)
    unknown = sorted(set(doc) - set(FIELDS))
    if unknown:
        raise CertificateParseError("unexpected key", field=unknown[0])

    n = _field(doc, "n", int)
    edges = _field(doc, "edges", list)
    t = _field(doc, "t", int)
    colors = _field(doc, "colors", list)
    verdict = _field(doc, "verdict", str)
    reason = doc.get("reason")
    if "reason" not in doc:
        raise CertificateParseError("missing", field="reason")
    if reason is not None and not isinstance(reason, str):
        raise CertificateParseError("expected a string or null", field="reason")
    if verdict not in (VALID, INVALID):
        raise CertificateParseError(f"expected '{VALID}' or '{INVALID}', got {verdict!r}", field="verdict")

    pairs = []
    for index, edge in enumerate(edges):
        if not (isinstance(edge, list) and len(edge) == 2 and all(isinstance(x, int) for x in edge)):
            raise CertificateParseError(f"entry {index} is not a pair of integers", field="edges")
        pairs.append(tuple(edge))
    if len(colors) != len(pairs) or not all(isinstance(c, int) and not isinstance(c, bool) for c in colors):
        raise CertificateParseError(f"need {len(pairs)} integer colors, got {len(colors)} entries", field="colors")

    try:
        graph = Graph(n, tuple(pairs))
        coloring = EdgeColoring(graph, tuple(colors))
    except DomainError as e:
        field = "n" if e.parameter == "vertex_count" else e.parameter
        raise CertificateParseError(str(e), field=field) from None
    return Certificate(coloring.graph, t, coloring.colors, verdict, reason)


def write_certificate(path: Union[str, Path], cert: Certificate) -> Path:
    return write_atomic(path, dumps(cert))


def read_certificate(path: Union[str, Path]) -> Certificate:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise CertificateParseError(f"cannot read {path}: {e.strerror}") from None
    return loads(text)
