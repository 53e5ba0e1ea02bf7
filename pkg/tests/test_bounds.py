from math import gcd

import pytest

from ivcolor.constructors import construct, grid_widest
from ivcolor.core.bounds import (
    BIPARTITE_CEILING,
    CYLINDER,
    GENERAL_CEILING,
    GRID,
    HYPOTHESIS_NOT_MET,
    NOT_PLANAR,
    PLANAR_W_CEILING,
    complete_graph_lower,
    complete_times_cycle_lower,
    family_values,
    grid_dimensions_lower,
    odd_part_and_valuation,
    planar_product_class,
    symbolic_upper_bound,
    upper_bound,
)
from ivcolor.core.families import (
    Complete,
    CompleteBipartite,
    Cycle,
    Cylinder,
    Grid,
    Hypercube,
    Path,
    Product,
    Torus,
)
from ivcolor.core.graph import Graph
from ivcolor.core.search import compute_W, compute_w
from ivcolor.errors import InfiniteDiameterError


def lower(report, source):
    return dict(report.lower_bounds)[source]


def test_upper_bound_examples():
    assert upper_bound(Grid([3, 4]).realize()) == (16, BIPARTITE_CEILING)
    assert upper_bound(Torus(4, 4).realize()) == (13, BIPARTITE_CEILING)
    assert upper_bound(Product(Complete(4), Cycle(4)).realize()) == (17, GENERAL_CEILING)
    assert family_values(Grid([3, 4])).upper_bounds[0] == (BIPARTITE_CEILING, 16)


def test_upper_bound_needs_connectivity():
    with pytest.raises(InfiniteDiameterError):
        upper_bound(Graph(4, ((0, 1), (2, 3))))


@pytest.mark.parametrize(
    "spec",
    [Grid([3, 4]), Torus(4, 6), Cylinder(3, 5), Hypercube(3), Product(Complete(4), Cycle(4)), Complete(5)],
    ids=lambda s: s.label,
)
def test_symbolic_ceiling_matches_graph(spec):
    assert symbolic_upper_bound(spec) == upper_bound(spec.realize())


@pytest.mark.parametrize("n", range(1, 65))
def test_odd_part_and_valuation(n):
    p, q = odd_part_and_valuation(n)
    assert p % 2 == 1
    assert p * 2 ** q == n


@pytest.mark.parametrize("n", range(1, 65))
def test_complete_times_cycle_is_complete_plus_cycle_product(n):
    p, q = odd_part_and_valuation(n)
    assert complete_times_cycle_lower(n) == complete_graph_lower(n) + (n + 1) + n * (2 * n - 1)
    assert complete_times_cycle_lower(n) == 2 * n * n + 4 * n - 1 - p - q


def test_complete_graph_examples():
    assert complete_graph_lower(4) == 11
    report = family_values(Complete(8))
    assert lower(report, "complete-graph-construction") == 11
    assert report.w_exact == 7
    assert family_values(Complete(5)).interval_colorable is False


def test_hypercube_values():
    report = family_values(Hypercube(5))
    assert (report.w_exact, report.W_exact) == (5, 15)
    assert report.guaranteed_range == (5, 15)


def test_complete_bipartite_values():
    report = family_values(CompleteBipartite(4, 6))
    assert (report.w_exact, report.W_exact) == (10 - gcd(4, 6), 9)


def test_cylinder_lower_bounds_agree_when_square():
    report = family_values(Cylinder(4, 8))
    assert lower(report, "even-cylinder-construction") == 14
    assert lower(report, "paired-ring-construction") == 14
    assert report.w_ceiling == PLANAR_W_CEILING


def test_two_ring_cylinder_is_exact():
    report = family_values(Cylinder(2, 5))
    assert (report.w_exact, report.W_exact) == (3, 7)
    assert report.guaranteed_range == (3, 7)


def test_torus_values():
    assert lower(family_values(Torus(4, 6)), "cycle-product-construction") == 13
    assert lower(family_values(Torus(6, 3)), "level-construction") == 10
    assert lower(family_values(Torus(3, 4)), "level-construction") == 9
    odd = family_values(Torus(5, 7))
    assert odd.interval_colorable is False
    assert odd.lower_bounds == []


def test_grid_values():
    report = family_values(Grid([2, 5]))
    assert report.W_exact == 9
    assert lower(report, "grid-construction") == 8
    assert report.best_lower == 9


def test_grid_dimension_pairing():
    assert grid_dimensions_lower([3, 4]) == (2 * 7 - 6, None)
    value, note = grid_dimensions_lower([4, 3, 5])
    assert value == 2 * (5 + 4) - 6 + 3 - 1
    assert "exceeds" in note


def test_product_lower_bounds():
    report = family_values(Product(Cycle(4), Path(3)))
    assert lower(report, "regular-times-path") == 3 + 2 * 3
    report = family_values(Product(Cycle(4), Cycle(4)))
    assert lower(report, "regular-times-even-cycle") == 10
    report = family_values(Product(Complete(4), Cycle(4)))
    assert lower(report, "complete-times-even-cycle") == complete_times_cycle_lower(2)


def test_every_report_is_consistent():
    for spec in [Grid([3, 4]), Cylinder(4, 8), Torus(4, 6), Hypercube(4), Product(Complete(4), Cycle(4))]:
        assert family_values(spec).violations() == []


def test_violations_are_reported():
    report = family_values(Cycle(6)).with_observations(constructed_t=99, oracle_w=3, oracle_W=4)
    problems = report.violations()
    assert any("constructed t=99" in p for p in problems)
    assert any("differs from the known value" in p for p in problems)


@pytest.mark.parametrize(
    "spec, mode",
    [
        (Grid([6, 9]), "widest"),
        (Cylinder(6, 7), "widest"),
        (Cylinder(5, 7), "minimal"),
        (Torus(8, 5), "widest"),
        (Torus(6, 10), "widest"),
        (Hypercube(4), "widest"),
    ],
    ids=lambda x: getattr(x, "label", x),
)
def test_constructions_respect_bounds(spec, mode):
    result = construct(spec, mode)
    report = family_values(spec).with_observations(constructed_t=result.t)
    assert report.violations() == []
    assert result.t <= upper_bound(result.graph)[0]


def test_grid_construction_meets_its_lower_bound():
    for m, n in [(3, 3), (4, 7), (12, 12)]:
        assert grid_widest(m, n).t == lower(family_values(Grid([m, n])), "grid-construction")


@pytest.mark.parametrize(
    "a, b, kind",
    [
        (Path(3), Path(5), GRID),
        (Path(3), Cycle(5), CYLINDER),
        (Cycle(5), Path(3), CYLINDER),
        (Cycle(4), Cycle(4), NOT_PLANAR),
        (Complete(4), Path(3), NOT_PLANAR),
        (Path(2), Cycle(5), HYPOTHESIS_NOT_MET),
    ],
)
def test_planar_product_class(a, b, kind):
    result = planar_product_class(a, b)
    assert result.kind == kind
    if kind in (GRID, CYLINDER):
        assert result.planar
        assert result.w_ceiling == PLANAR_W_CEILING
        assert result.interval_colorable
    else:
        assert not result.planar


@pytest.mark.slow
@pytest.mark.parametrize(
    "spec, mode",
    [
        (Grid([2, 3]), "widest"),
        (Grid([2, 4]), "widest"),
        (Grid([3, 3]), "widest"),
        (Cylinder(2, 3), "minimal"),
        (Cylinder(2, 4), "widest"),
        (Cylinder(2, 5), "minimal"),
        (CompleteBipartite(2, 3), "widest"),
        (Hypercube(3), "minimal"),
        (Hypercube(3), "widest"),
    ],
    ids=lambda x: getattr(x, "label", x),
)
def test_constructions_sit_inside_the_searched_range(spec, mode):
    g = spec.realize()
    result = construct(spec, mode)
    low, high = compute_w(g), compute_W(g)
    assert low.conclusive and high.conclusive
    assert low.value <= result.t <= high.value
    assert high.value <= upper_bound(g)[0]
    report = family_values(spec).with_observations(
        constructed_t=result.t, oracle_w=low.value, oracle_W=high.value
    )
    assert report.violations() == []
