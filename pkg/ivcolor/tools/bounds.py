import logging
from typing import Optional

from ..constructors import registry
from ..core import search as engine
from ..core.bounds import family_values, planar_product_class
from ..core.families import Product
from ..errors import IntervalColoringError
from . import config
from .common import EXIT_FAIL, EXIT_OK, Params, load_spec, params_text
from .manifest import RunManifest

logger = logging.getLogger(__name__)


def bounds(
    family: str,
    params: Params = None,
    times: Optional[str] = None,
    times_params: Params = None,
    mode: Optional[str] = None,
    oracle: bool = False,
) -> dict:
    """
    Evaluate every known bound and exact value for a family instance.

    Args:
        family (str): Family name.
        params (str | list[int]): Family parameters.
        times (str, optional): Second factor family; the instance becomes the
            Cartesian product of the two.
        times_params (str | list[int], optional): Second factor parameters.
        mode (str, optional): Also build the ``minimal`` or ``widest``
            construction and report its t.
        oracle (bool): Also run the exact search for w and W when the graph
            has at most ``oracle.max_edges`` edges.

    Returns:
        dict: The bound report, the planarity class for two-factor products,
        any ``violations`` between the numbers, and ``exit_code`` (1 if any
        violation was found).
    """
    spec = load_spec(family, params)
    planar = None
    if times:
        right = load_spec(times, times_params)
        planar = planar_product_class(spec, right)
        spec = Product(spec, right)

    report = family_values(spec)

    constructed_t = None
    if mode:
        try:
            constructed_t = registry.construct(spec, mode).t
        except IntervalColoringError as e:
            logger.warning("⚠️  no %s construction for %s: %s", mode, spec.label, e)

    oracle_w = oracle_W = None
    if oracle:
        limit = config.get_oracle_max_edges()
        if spec.edge_count > limit:
            logger.warning("⚠️  skipping the oracle: %d edges exceed the limit of %d", spec.edge_count, limit)
        elif report.interval_colorable is not False and spec.edge_count > 0:
            g = spec.realize()
            cfg = engine.SearchConfig.from_config()
            low, high = engine.compute_w(g, cfg), engine.compute_W(g, cfg)
            oracle_w = low.value if low.conclusive else None
            oracle_W = high.value if high.conclusive else None

    report = report.with_observations(constructed_t=constructed_t, oracle_w=oracle_w, oracle_W=oracle_W)
    violations = report.violations()
    for problem in violations:
        logger.error("❌ %s: %s", spec.label, problem)

    parameters = {
        "family": family,
        "params": params_text(params),
        "times": times,
        "times_params": params_text(times_params),
        "mode": mode,
        "oracle": oracle,
    }
    return {
        **report.to_dict(),
        "best_lower": report.best_lower,
        "best_upper": report.best_upper,
        "planar": None if planar is None else {
            "kind": planar.kind,
            "w_ceiling": planar.w_ceiling,
            "interval_colorable": planar.interval_colorable,
            "reason": planar.reason,
        },
        "violations": violations,
        "manifest": RunManifest("bounds", spec.label, parameters).to_dict(),
        "exit_code": EXIT_FAIL if violations else EXIT_OK,
    }
