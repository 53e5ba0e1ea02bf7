"""Batch runner: construct, verify and bound-check every instance of a suite."""

import json
import logging
import os
from multiprocessing import Pool
from typing import Iterator, List, Optional, Tuple

from ..coders.atomic import write_atomic
from ..coders.certificate import certify, write_certificate
from ..constructors import registry
from ..constructors.basic import complete_minimal, widest_even_cycle_coloring, widest_path_coloring
from ..constructors.builder import Construction
from ..constructors.products import (
    even_cycle_layer_shift,
    layer_restriction,
    product_with_even_cycle,
    product_with_path,
)
from ..core.bounds import family_values
from ..core.families import Cylinder, Grid, Torus
from ..errors import DomainError, IntervalColoringError
from . import config
from .common import EXIT_FAIL, EXIT_OK
from .manifest import RunManifest

logger = logging.getLogger(__name__)

SUITES = ("grid", "cylinder-widest", "cylinder-minimal", "torus-odd", "torus-even", "products")

# regular factors fed to the layered product constructions
PRODUCT_BASES = {
    "K2": lambda: (widest_path_coloring(2), 1),
    "C4": lambda: (widest_even_cycle_coloring(2), 2),
    "C6": lambda: (widest_even_cycle_coloring(3), 2),
    "K4": lambda: (complete_minimal(4), 3),
}

# (suite, kind, parameters)
Instance = Tuple[str, str, Tuple]


def _ranges(suite: str) -> Iterator[Tuple[int, int]]:
    ranges = config.get_matrix_ranges(suite)
    (m_lo, m_hi), (n_lo, n_hi) = ranges["m"], ranges["n"]
    for m in range(m_lo, m_hi + 1):
        for n in range(n_lo, n_hi + 1):
            yield m, n


def instances(suite: str) -> List[Instance]:
    """Every instance of ``suite`` in a fixed order."""
    if suite not in SUITES:
        raise DomainError("suite", f"unknown suite {suite!r}; expected one of {', '.join(SUITES)} or all")
    found: List[Instance] = []
    if suite == "products":
        ranges = config.get_matrix_ranges(suite)
        for base in PRODUCT_BASES:
            for m in range(ranges["m"][0], ranges["m"][1] + 1):
                found.append((suite, "path", (base, m)))
            for n in range(ranges["n"][0], ranges["n"][1] + 1):
                found.append((suite, "even-cycle", (base, n)))
        return found
    for m, n in _ranges(suite):
        if suite == "grid":
            found.append((suite, "grid", (m, n)))
        elif suite == "cylinder-widest":
            if n >= 2:
                found.append((suite, "cylinder", (2 * m, 2 * n)))
            found.append((suite, "cylinder", (2 * m, 2 * n + 1)))
        elif suite == "cylinder-minimal":
            found.append((suite, "cylinder", (m, 2 * n + 1)))
        elif suite == "torus-odd":
            found.append((suite, "torus", (2 * m, 2 * n + 1)))
        elif suite == "torus-even":
            found.append((suite, "torus", (2 * m, 2 * n)))
    return found


def expected_t(suite: str, params: Tuple, r: int = 0, t_alpha: int = 0) -> int:
    """Number of colors the closed form promises for one instance."""
    if suite == "grid":
        m, n = params
        return 2 * (m + n - 3)
    if suite == "cylinder-widest":
        rows, circumference = params
        m, n = rows // 2, circumference // 2
        return 4 * m + 2 * n - 2 if circumference % 2 == 0 else 4 * m + 2 * n - 1
    if suite == "cylinder-minimal":
        return 4 if params[0] % 2 == 0 else 6
    if suite == "torus-odd":
        m, n = params[0] // 2, (params[1] - 1) // 2
        return 2 * m + 2 * n + (2 if m % 2 else 3)
    if suite == "torus-even":
        m, n = params[0] // 2, params[1] // 2
        return max(3 * m + n + 2, 3 * n + m + 2)
    raise DomainError("suite", f"no closed form for {suite!r}")


def _build(instance: Instance) -> Tuple[Construction, int, Optional[str]]:
    suite, kind, params = instance
    if suite != "products":
        spec = {"grid": lambda: Grid(list(params)), "cylinder": lambda: Cylinder(*params), "torus": lambda: Torus(*params)}[kind]()
        mode = "minimal" if suite == "cylinder-minimal" else "widest"
        return registry.construct(spec, mode), expected_t(suite, params), None

    base_name, k = params
    base, r = PRODUCT_BASES[base_name]()
    g, alpha = base.graph, base.coloring
    if kind == "path":
        result = product_with_path(g, alpha, r, k, spec=base.spec)
        expected, layers = base.t + (k - 1) * (r + 1), k
        shifts = [layer * (r + 1) for layer in range(layers)]
    else:
        result = product_with_even_cycle(g, alpha, r, k, spec=base.spec)
        expected, layers = base.t + k * (r + 1) + 1, 2 * k
        shifts = [even_cycle_layer_shift(layer + 1, k, r) for layer in range(layers)]
    problem = None
    for layer, shift in enumerate(shifts):
        if layer_restriction(result.coloring, g, layers, layer) != [c + shift for c in alpha.colors]:
            problem = f"layer {layer} is not the factor coloring shifted by {shift}"
            break
    return result, expected, problem


def run_instance(instance: Instance, out_dir: Optional[str] = None) -> dict:
    """Construct, verify and bound-check one instance; never raises for a bad instance."""
    suite, kind, params = instance
    row = {"suite": suite, "kind": kind, "params": list(params)}
    try:
        result, expected, problem = _build(instance)
    except IntervalColoringError as e:
        logger.error("❌ %s %s%s: %s", suite, kind, params, e)
        row.update({"instance": f"{kind}-{params}", "ok": False, "error": str(e)})
        return row

    cert, report = certify(result.coloring, result.t)
    label = result.spec.label if result.spec is not None else f"{kind}-{params}"
    bound_report = family_values(result.spec).with_observations(constructed_t=result.t) if result.spec else None
    violations = bound_report.violations() if bound_report else []
    problems = list(violations)
    if result.t != expected:
        problems.append(f"claimed t={result.t}, expected {expected}")
    if problem:
        problems.append(problem)

    row.update({
        "instance": label,
        "mode": result.mode,
        "t": result.t,
        "expected": expected,
        "verdict": report.verdict,
        "reason": report.reason,
        "best_lower": bound_report.best_lower if bound_report else None,
        "best_upper": bound_report.best_upper if bound_report else None,
        "problems": problems,
        "ok": report.valid and not problems,
    })
    if out_dir:
        path = os.path.join(out_dir, suite, f"{label}-{result.mode}.json")
        write_certificate(path, cert)
        row["certificate"] = path
    return row


def matrix(suite: str = "all", out_dir: Optional[str] = None, workers: int = 1) -> dict:
    """
    Run a batch suite and collect one row per instance.

    Args:
        suite (str): One of the names in ``SUITES``, or ``all``.
        out_dir (str, optional): Write each certificate and a ``summary.json``
            holding the rows and the run manifest under this directory.
        workers (int): Number of processes; instances are independent.

    Returns:
        dict: ``rows``, pass/fail counts and ``exit_code`` (1 if any row
        failed).
    """
    if workers < 1:
        raise DomainError("workers", f"must be positive, got {workers}")
    suites = SUITES if suite == "all" else (suite,)
    todo = [item for name in suites for item in instances(name)]
    logger.info("running %d instance(s) from %s", len(todo), ", ".join(suites))

    if workers > 1 and len(todo) > 1:
        with Pool(processes=min(workers, len(todo))) as pool:
            rows = pool.starmap(run_instance, [(item, out_dir) for item in todo])
    else:
        rows = [run_instance(item, out_dir) for item in todo]

    failed = [row for row in rows if not row["ok"]]
    outputs = [row["certificate"] for row in rows if "certificate" in row]
    summary_path = os.path.join(out_dir, "summary.json") if out_dir else None
    if summary_path:
        outputs.append(summary_path)
    manifest = RunManifest("matrix", suite, {"suite": suite, "ranges": _ranges_used(suites)}, outputs)

    record = {
        "suite": suite,
        "rows": rows,
        "passed": len(rows) - len(failed),
        "failed": len(failed),
        "manifest": manifest.to_dict(),
        "exit_code": EXIT_FAIL if failed else EXIT_OK,
    }
    if summary_path:
        summary = {key: value for key, value in record.items() if key != "exit_code"}
        write_atomic(summary_path, json.dumps(summary, indent=2) + "\n")
    return record


def _ranges_used(suites) -> dict:
    return {name: {k: list(v) for k, v in config.get_matrix_ranges(name).items()} for name in suites}
