from itertools import product
from math import gcd

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ivcolor import node_tracker
from ivcolor.core.coloring import EdgeColoring
from ivcolor.core.families import CompleteBipartite, Cycle, Cylinder, Hypercube, Path, Torus
from ivcolor.core.graph import Graph
from ivcolor.core.search import (
    BUDGET_EXCEEDED,
    EXHAUSTED,
    FOUND,
    INCONCLUSIVE,
    SearchConfig,
    compute_W,
    compute_w,
    decide_all,
    edge_order,
    exists_interval_t,
    resolve_max_t,
    spectrum_profile,
)
from ivcolor.core.spans import check_span_recurrence, span_ceiling, span_table
from ivcolor.core.verifier import verify_interval
from ivcolor.errors import DomainError


def naive_is_interval(g, colors, t):
    if set(colors) != set(range(1, t + 1)):
        return False
    for v in range(g.vertex_count):
        seen = [colors[i] for i in g.incident_edges[v]]
        if len(set(seen)) != len(seen):
            return False
        if seen and max(seen) - min(seen) + 1 != len(seen):
            return False
    return True


def naive_w_and_W(g):
    """Try every assignment of colors 1..t to the edges, for every t."""
    feasible = [
        t
        for t in range(1, g.edge_count + 1)
        if any(naive_is_interval(g, colors, t) for colors in product(range(1, t + 1), repeat=g.edge_count))
    ]
    if not feasible:
        return None, None
    return min(feasible), max(feasible)


def dfs_interval_colorings(g, t):
    """Every interval t-coloring, depth-first over proper colorings in networkx edge-BFS order.

    Partial colorings are cut only when a color repeats at a vertex, when a
    vertex's colors already spread wider than its degree, or when too few
    edges remain to use every color. Intervals and surjectivity are checked
    on complete colorings only.
    """
    position = {frozenset(e): i for i, e in enumerate(g.edges)}
    order = [position[frozenset((u, v))] for u, v in nx.edge_bfs(g.nx_graph)]
    colors = [0] * g.edge_count
    placed = [[] for _ in range(g.vertex_count)]
    uses = [0] * (t + 1)

    def fits(v, c):
        seen = placed[v]
        if c in seen:
            return False
        return max(seen + [c]) - min(seen + [c]) < g.degree(v)

    def extend(step, distinct):
        if t - distinct > len(order) - step:
            return
        if step == len(order):
            if naive_is_interval(g, colors, t):
                yield tuple(colors)
            return
        index = order[step]
        u, v = g.edges[index]
        for c in range(1, t + 1):
            if not (fits(u, c) and fits(v, c)):
                continue
            colors[index] = c
            placed[u].append(c)
            placed[v].append(c)
            uses[c] += 1
            yield from extend(step + 1, distinct + (uses[c] == 1))
            uses[c] -= 1
            placed[u].pop()
            placed[v].pop()

    return extend(0, 0)


def dfs_interval_exists(g, t):
    return next(dfs_interval_colorings(g, t), None) is not None


def dfs_w_and_W(g):
    candidates = range(g.max_degree, g.edge_count + 1)
    w = next((t for t in candidates if dfs_interval_exists(g, t)), None)
    if w is None:
        return None, None
    W = next(t for t in reversed(candidates) if dfs_interval_exists(g, t))
    return w, W


@st.composite
def connected_graphs(draw, max_edges=6):
    n = draw(st.integers(min_value=2, max_value=max_edges + 1))
    edges = set()
    for v in range(1, n):
        edges.add((draw(st.integers(min_value=0, max_value=v - 1)), v))
    spare = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    room = max_edges - len(edges)
    if spare and room > 0:
        extra = draw(st.lists(st.sampled_from(spare), max_size=room, unique=True))
        edges.update(extra)
    return Graph.from_edges(n, edges)


def test_triangle_is_never_interval_colorable():
    g = Cycle(3).realize()
    for t in (1, 2, 3):
        assert exists_interval_t(g, t).status == EXHAUSTED


def test_below_max_degree_is_exhausted_without_search():
    outcome = exists_interval_t(Hypercube(3).realize(), 2)
    assert outcome.status == EXHAUSTED
    assert outcome.nodes_explored == 0


def test_four_cycle_two_colors():
    outcome = exists_interval_t(Cycle(4).realize(), 2)
    assert outcome.status == FOUND
    assert outcome.found and outcome.conclusive
    assert verify_interval(outcome.coloring, 2).valid
    assert outcome.coloring.min_color == 1


def test_four_cycle_profile():
    profile = spectrum_profile(Cycle(4).realize(), range(2, 5))
    assert profile == {2: "exists", 3: "exists", 4: "not"}


def test_budget_exhaustion_is_inconclusive():
    outcome = exists_interval_t(Hypercube(3).realize(), 6, SearchConfig(node_budget=1))
    assert outcome.status == BUDGET_EXCEEDED
    assert outcome.verdict == INCONCLUSIVE
    assert not outcome.conclusive
    assert outcome.coloring is None
    assert outcome.to_record()["status"] == BUDGET_EXCEEDED


def test_scan_under_budget_is_flagged():
    scan = compute_W(Hypercube(3).realize(), SearchConfig(node_budget=1))
    assert not scan.conclusive


def test_search_rejects_bad_input():
    with pytest.raises(DomainError):
        exists_interval_t(Graph(2, ()), 1)
    with pytest.raises(DomainError):
        exists_interval_t(Path(3).realize(), 0)
    with pytest.raises(DomainError):
        SearchConfig(node_budget=0)
    with pytest.raises(DomainError):
        SearchConfig(edge_order="random")


def test_resolve_max_t():
    g = Cycle(4).realize()
    assert resolve_max_t(g, SearchConfig()) == 3
    assert resolve_max_t(g, SearchConfig(max_t=4)) == 4
    with pytest.raises(DomainError):
        resolve_max_t(g, SearchConfig(max_t=1))


def test_edge_order_grows_from_a_max_degree_vertex():
    g = CompleteBipartite(1, 3).realize()
    order = edge_order(g)
    assert sorted(order) == list(range(g.edge_count))
    assert edge_order(g, "input") == [0, 1, 2]
    grid = Cylinder(2, 5).realize()
    order = edge_order(grid)
    touched = set(grid.edges[order[0]])
    for index in order[1:]:
        u, v = grid.edges[index]
        assert u in touched or v in touched
        touched.update((u, v))


def test_workers_give_the_same_profile():
    g = Cycle(6).realize()
    serial = {t: o.status for t, o in decide_all(g, range(2, 6)).items()}
    pooled = {t: o.status for t, o in decide_all(g, range(2, 6), workers=2).items()}
    assert serial == pooled == {2: FOUND, 3: FOUND, 4: FOUND, 5: EXHAUSTED}


def test_node_totals_are_tracked():
    node_tracker.reset()
    exists_interval_t(Cycle(4).realize(), 3)
    searches, nodes, _ = node_tracker.get_totals()
    assert searches == 1
    assert nodes > 0
    node_tracker.reset()


def test_small_exact_values():
    assert compute_w(Cycle(4).realize()).value == 2
    assert compute_W(Cycle(4).realize()).value == 3
    assert compute_w(Cycle(3).realize()).value is None
    assert compute_W(Path(5).realize()).value == 4


@settings(max_examples=25, deadline=None)
@given(connected_graphs())
def test_search_matches_naive_enumeration(g):
    w, W = naive_w_and_W(g)
    assert dfs_w_and_W(g) == (w, W)
    cfg = SearchConfig(max_t=g.edge_count)
    assert compute_w(g, cfg).value == w
    assert compute_W(g, cfg).value == W


@settings(max_examples=25, deadline=None)
@given(connected_graphs(), st.integers(min_value=1, max_value=6))
def test_pruning_never_changes_the_answer(g, t):
    plain = SearchConfig(prune_window=False, prune_surjectivity=False, prune_symmetry=False)
    assert exists_interval_t(g, t, plain).status == exists_interval_t(g, t).status


@pytest.mark.slow
@settings(max_examples=25, deadline=None)
@given(connected_graphs(max_edges=13))
def test_search_matches_depth_first_oracle(g):
    w, W = dfs_w_and_W(g)
    cfg = SearchConfig(max_t=g.edge_count)
    assert compute_w(g, cfg).value == w
    assert compute_W(g, cfg).value == W


@pytest.mark.slow
@pytest.mark.parametrize(
    "spec, expected",
    [
        (Hypercube(2), (2, 3)),
        (Hypercube(3), (3, 6)),
        (Cylinder(2, 3), (3, 5)),
        (Cylinder(2, 4), (3, 6)),
        (Cylinder(2, 5), (3, 7)),
    ],
    ids=lambda x: getattr(x, "label", str(x)),
)
def test_exact_values(spec, expected):
    g = spec.realize()
    low, high = compute_w(g), compute_W(g)
    assert low.conclusive and high.conclusive
    assert (low.value, high.value) == expected


@pytest.mark.slow
@pytest.mark.parametrize("r, s", [(r, s) for r in range(1, 5) for s in range(1, 5) if r * s <= 12])
def test_complete_bipartite_exact_values(r, s):
    g = CompleteBipartite(r, s).realize()
    assert compute_w(g).value == r + s - gcd(r, s)
    assert compute_W(g).value == r + s - 1


@pytest.mark.slow
@pytest.mark.parametrize("t", [4, 5])
def test_odd_cylinder_needs_six_colors(t):
    assert exists_interval_t(Cylinder(3, 3).realize(), t).status == EXHAUSTED


@pytest.mark.slow
def test_widest_cube_coloring_spans():
    g = Hypercube(3).realize()
    scan = compute_W(g)
    assert scan.value == 6
    assert exists_interval_t(g, 7).status == EXHAUSTED
    tbl = span_table(scan.witness)
    assert tbl.sp[0] == 2
    assert check_span_recurrence(tbl)
    assert tbl.sp[2] <= 5


@pytest.mark.slow
@pytest.mark.parametrize("t", [3, 4, 5, 6])
def test_every_cube_coloring_satisfies_the_span_recurrence(t):
    g = Hypercube(3).realize()
    witness = exists_interval_t(g, t).coloring
    tables = [span_table(witness)]
    tables += [span_table(EdgeColoring(g, colors)) for colors in dfs_interval_colorings(g, t)]
    assert len(tables) > 1
    for tbl in tables:
        assert tbl.sp[0] == 2
        assert check_span_recurrence(tbl)
        assert tbl.sp[2] <= span_ceiling(3)


@pytest.mark.slow
@pytest.mark.parametrize("t", [4, 5, 6, 7])
def test_sampled_four_cube_colorings_satisfy_the_span_recurrence(t):
    outcome = exists_interval_t(Hypercube(4).realize(), t, SearchConfig(node_budget=2_000_000))
    if not outcome.conclusive:
        pytest.skip(f"t={t} not decided within the node budget")
    assert outcome.status == FOUND
    tbl = span_table(outcome.coloring)
    assert tbl.sp[0] == 3
    assert check_span_recurrence(tbl)
    assert tbl.sp[3] <= span_ceiling(4)


@pytest.mark.slow
def test_small_torus_profile_is_contiguous():
    g = Torus(4, 3).realize()
    profile = spectrum_profile(g, range(4, 10), SearchConfig(node_budget=2_000_000))
    assert profile[4] == "exists"
    top = max(t for t, verdict in profile.items() if verdict == "exists")
    assert [t for t, verdict in profile.items() if verdict == "not" and t < top] == []
