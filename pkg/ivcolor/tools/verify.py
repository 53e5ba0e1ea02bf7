from ..coders.certificate import read_certificate
from ..core.graph import is_connected
from ..core.verifier import verify_interval, verify_lemma1
from .common import EXIT_FAIL, EXIT_OK
from .manifest import RunManifest


def verify(path: str, shortcut: bool = False) -> dict:
    """
    Re-verify a certificate file from scratch.

    The verdict stored in the file is ignored; only the graph, ``t`` and the
    colors are read.

    Args:
        path (str): Certificate to check.
        shortcut (bool): Also apply the connected-graph test, which only
            needs per-vertex spectra and the extreme colors.

    Returns:
        dict: The verification report, the verdict the file claimed and
        ``exit_code`` (0 iff valid).
    """
    cert = read_certificate(path)
    report = verify_interval(cert.coloring, cert.t)
    record = {
        "path": str(path),
        **report.to_dict(),
        "claimed_verdict": cert.verdict,
    }
    if shortcut:
        if is_connected(cert.graph):
            record["shortcut_t"] = verify_lemma1(cert.coloring)
        else:
            record["shortcut_t"] = None
    record["manifest"] = RunManifest("verify", str(path), {"shortcut": shortcut}).to_dict()
    record["exit_code"] = EXIT_OK if report.valid else EXIT_FAIL
    return record
