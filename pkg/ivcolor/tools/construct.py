import logging
from typing import Optional

from ..coders.certificate import certify, write_certificate
from ..coders.dot import write_dot
from ..constructors import registry
from .common import EXIT_FAIL, EXIT_OK, Params, load_spec, output_path, params_text
from .manifest import RunManifest

logger = logging.getLogger(__name__)


def construct(
    family: str,
    params: Params = None,
    mode: str = "widest",
    out: Optional[str] = None,
    dot: Optional[str] = None,
) -> dict:
    """
    Build the formula coloring of a family instance and write its certificate.

    Args:
        family (str): Family name.
        params (str | list[int]): Family parameters.
        mode (str): ``minimal`` or ``widest``.
        out (str, optional): Certificate path. Defaults to
            ``<output_dir>/<family label>-<mode>.json``.
        dot (str, optional): Also write a DOT rendering to this path.

    Returns:
        dict: The verification report fields plus ``certificate`` (the path
        written) and ``exit_code`` (0 when the coloring verifies, 1 otherwise).
    """
    spec = load_spec(family, params)
    result = registry.construct(spec, mode)
    cert, report = certify(result.coloring, result.t)

    path = output_path(out, spec.label, mode)
    write_certificate(path, cert)
    outputs = [path]
    if dot:
        write_dot(dot, result.coloring, name=spec.label.replace("-", "_"), t=result.t)
        outputs.append(str(dot))
    logger.info("wrote %s (%s)", path, report.verdict)

    manifest = RunManifest(
        "construct", spec.label, {"family": family, "params": params_text(params), "mode": mode}, outputs
    )
    return {
        "family": spec.label,
        "mode": mode,
        **report.to_dict(),
        "duplicates": result.duplicates,
        "certificate": path,
        "dot": str(dot) if dot else None,
        "manifest": manifest.to_dict(),
        "exit_code": EXIT_OK if report.valid else EXIT_FAIL,
    }
