import logging
import os
from pathlib import Path
from typing import Optional

from ..coders.certificate import certify, write_certificate
from ..core import search as engine
from ..errors import DomainError
from . import config
from .common import EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_OK, Params, load_graph, output_path, params_text
from .manifest import RunManifest

logger = logging.getLogger(__name__)

STATS = ("w", "W")

_STATUS_EXIT = {
    engine.FOUND: EXIT_OK,
    engine.EXHAUSTED: EXIT_FAIL,
    engine.BUDGET_EXCEEDED: EXIT_INCONCLUSIVE,
}


def _save(coloring, t, path):
    cert, _ = certify(coloring, t)
    write_certificate(path, cert)
    logger.info("wrote certificate %s", path)
    return str(path)


def search(
    family: Optional[str] = None,
    params: Params = None,
    graph_file: Optional[str] = None,
    t: Optional[int] = None,
    stat: Optional[str] = None,
    profile: bool = False,
    t_min: Optional[int] = None,
    t_max: Optional[int] = None,
    workers: int = 1,
    node_budget: Optional[int] = None,
    time_budget: Optional[float] = None,
    out: Optional[str] = None,
) -> dict:
    """
    Run the exact search on a family instance or an edge-list file.

    Exactly one of ``t``, ``stat`` and ``profile`` selects the question:
    does an interval t-coloring exist, what is w or W, or which t in a range
    are feasible.

    Args:
        family (str, optional): Family name.
        params (str | list[int], optional): Family parameters.
        graph_file (str, optional): Edge-list file used instead of a family.
        t (int, optional): Decide a single t.
        stat (str, optional): ``w`` or ``W``.
        profile (bool): Decide every t in ``[t_min, t_max]``.
        t_min (int, optional): Profile start, default the maximum degree.
        t_max (int, optional): Profile end or scan ceiling, default the
            diameter bound.
        workers (int): Processes used by ``profile``.
        node_budget (int, optional): Overrides the configured node budget.
        time_budget (float, optional): Overrides the configured time budget.
        out (str, optional): Certificate path for ``t`` and ``stat``; a
            directory for ``profile``. Defaults to the configured output
            directory.

    Returns:
        dict: An outcome record. ``exit_code`` is 0 when a coloring was
        found, 1 when the search space was exhausted and 2 when a budget ran
        out first.
    """
    chosen = [name for name, on in (("t", t is not None), ("stat", stat is not None), ("profile", profile)) if on]
    if len(chosen) != 1:
        raise DomainError("mode", "choose exactly one of --t, --stat and --profile")
    if stat is not None and stat not in STATS:
        raise DomainError("stat", f"expected w or W, got {stat!r}")
    if workers < 1:
        raise DomainError("workers", f"must be positive, got {workers}")

    g, source = load_graph(family, params, graph_file)
    name = Path(source).stem if graph_file else source
    cfg = engine.SearchConfig.from_config(node_budget=node_budget, time_budget=time_budget, max_t=t_max)
    logger.info("searching %s (%d edges, max degree %d)", source, g.edge_count, g.max_degree)

    parameters = {
        "family": family,
        "params": params_text(params),
        "graph_file": graph_file,
        "t": t,
        "stat": stat,
        "profile": profile,
        "t_min": t_min,
        "t_max": t_max,
        "node_budget": cfg.node_budget,
        "time_budget": cfg.time_budget,
    }
    outputs = []
    record = {"source": source, "mode": chosen[0]}

    if t is not None:
        outcome = engine.exists_interval_t(g, t, cfg)
        record.update(outcome.to_record())
        record["verdict"] = outcome.verdict
        record["reason"] = outcome.reason
        if outcome.found:
            outputs.append(_save(outcome.coloring, t, output_path(out, name, f"t{t}")))
        record["exit_code"] = _STATUS_EXIT[outcome.status]

    elif stat is not None:
        scan = engine.compute_w(g, cfg) if stat == "w" else engine.compute_W(g, cfg)
        record.update({
            "stat": stat,
            "value": scan.value,
            "conclusive": scan.conclusive,
            "nodes": scan.nodes_explored,
            "outcomes": [o.to_record() for o in scan.outcomes],
        })
        if scan.value is not None:
            outputs.append(_save(scan.witness, scan.value, output_path(out, name, stat)))
        if not scan.conclusive:
            record["exit_code"] = EXIT_INCONCLUSIVE
        else:
            record["exit_code"] = EXIT_OK if scan.value is not None else EXIT_FAIL

    else:
        low = t_min if t_min is not None else g.max_degree
        high = engine.resolve_max_t(g, cfg)
        if low < 1 or low > high:
            raise DomainError("t_min", f"empty range [{low}, {high}]")
        outcomes = engine.decide_all(g, range(low, high + 1), cfg, workers)
        directory = out or config.get_output_dir()
        for value, outcome in outcomes.items():
            if outcome.found:
                outputs.append(_save(outcome.coloring, value, os.path.join(directory, f"{name}-t{value}.json")))
        record.update({
            "range": [low, high],
            "profile": {str(value): outcome.verdict for value, outcome in outcomes.items()},
            "nodes": sum(o.nodes_explored for o in outcomes.values()),
            "outcomes": [o.to_record() for o in outcomes.values()],
        })
        inconclusive = any(not o.conclusive for o in outcomes.values())
        record["exit_code"] = EXIT_INCONCLUSIVE if inconclusive else EXIT_OK

    record["manifest"] = RunManifest("search", source, parameters, outputs).to_dict()
    return record
