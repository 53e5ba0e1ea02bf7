import json
import logging
import os
from typing import Dict, Tuple

logger = logging.getLogger(__name__)

# config.json lives next to the package sources
_TOOL_DIR = os.path.dirname(os.path.abspath(__file__))
_PACKAGE_DIR = os.path.dirname(_TOOL_DIR)
CONFIG_FILE = os.path.join(_PACKAGE_DIR, 'config.json')

NODE_BUDGET_ENV = 'INTERVAL_BUDGET_NODES'
TIME_BUDGET_ENV = 'INTERVAL_BUDGET_SECONDS'

DEFAULT_NODE_BUDGET = 10_000_000
DEFAULT_TIME_BUDGET = 300.0
DEFAULT_EDGE_ORDER = 'bfs-max-degree'
DEFAULT_PRUNE_RULES = {'window': True, 'surjectivity': True, 'symmetry': True}
DEFAULT_ORACLE_MAX_EDGES = 16
DEFAULT_OUTPUT_DIR = 'certificates'

# Inclusive (low, high) ranges of the two parameters of each batch suite
DEFAULT_MATRIX_RANGES = {
    'grid': {'m': (2, 12), 'n': (2, 12)},
    'cylinder-widest': {'m': (1, 8), 'n': (1, 8)},
    'cylinder-minimal': {'m': (3, 9), 'n': (1, 5)},
    'torus-odd': {'m': (2, 6), 'n': (1, 6)},
    'torus-even': {'m': (2, 5), 'n': (2, 5)},
    'products': {'m': (1, 5), 'n': (2, 4)},
}

EDGE_ORDERS = ('bfs-max-degree', 'input')


def _load_config():
    try:
        if os.path.exists(CONFIG_FILE):
            with open(CONFIG_FILE, 'r', encoding='utf-8') as f:
                return json.load(f)
    except Exception as e:
        logger.warning("could not read %s: %s", CONFIG_FILE, e)
    return {}


def _section(name):
    section = _load_config().get(name, {})
    return section if isinstance(section, dict) else {}


def _env_number(var, cast):
    raw = os.environ.get(var)
    if raw is None or not raw.strip():
        return None
    try:
        value = cast(raw)
    except ValueError:
        logger.warning("ignoring %s=%r: not a number", var, raw)
        return None
    if value <= 0:
        logger.warning("ignoring %s=%r: must be positive", var, raw)
        return None
    return value


def get_node_budget() -> int:
    override = _env_number(NODE_BUDGET_ENV, int)
    if override is not None:
        return override
    return int(_section('search').get('node_budget', DEFAULT_NODE_BUDGET))


def get_time_budget() -> float:
    override = _env_number(TIME_BUDGET_ENV, float)
    if override is not None:
        return override
    return float(_section('search').get('time_budget', DEFAULT_TIME_BUDGET))


def get_edge_order() -> str:
    order = _section('search').get('edge_order', DEFAULT_EDGE_ORDER)
    if order not in EDGE_ORDERS:
        logger.warning("unknown edge order %r in config, using %s", order, DEFAULT_EDGE_ORDER)
        return DEFAULT_EDGE_ORDER
    return order


def get_prune_rules() -> Dict[str, bool]:
    rules = dict(DEFAULT_PRUNE_RULES)
    rules.update({k: bool(v) for k, v in _section('search').get('prune', {}).items() if k in rules})
    return rules


def get_oracle_max_edges() -> int:
    return int(_section('oracle').get('max_edges', DEFAULT_ORACLE_MAX_EDGES))


def get_matrix_ranges(suite) -> Dict[str, Tuple[int, int]]:
    if suite not in DEFAULT_MATRIX_RANGES:
        raise KeyError(f"unknown matrix suite {suite!r}")
    ranges = dict(DEFAULT_MATRIX_RANGES[suite])
    for key, bounds in _section('matrix').get(suite, {}).items():
        ranges[key] = (int(bounds[0]), int(bounds[1]))
    return ranges


def get_output_dir() -> str:
    return _load_config().get('output_dir', DEFAULT_OUTPUT_DIR)
