import pytest

from ivcolor.constructors import (
    ColoringBuilder,
    complete_bipartite_coloring,
    complete_minimal,
    construct,
    cylinder_minimal,
    cylinder_widest,
    grid_widest,
    hypercube_minimal,
    hypercube_widest,
    prism_three_coloring,
    product_with_cube,
    product_with_even_cycle,
    product_with_path,
    supported_modes,
    torus_widest,
    widest_even_cycle_coloring,
    widest_path_coloring,
)
from ivcolor.constructors.builder import grid_vertex
from ivcolor.constructors.products import even_cycle_layer_shift, layer_restriction
from ivcolor.constructors.tori import transpose
from ivcolor.core.bounds import upper_bound
from ivcolor.core.coloring import EdgeColoring, spectrum
from ivcolor.core.families import Cycle, Cylinder, Grid, Path, Torus
from ivcolor.core.verifier import verify_interval
from ivcolor.errors import (
    ClauseConflictError,
    DomainError,
    PreconditionError,
    UnsupportedConstructionError,
)


def assert_interval(result):
    report = verify_interval(result.coloring, result.t)
    assert report.valid, report.reason
    assert result.coloring.max_color == result.t
    assert result.t <= upper_bound(result.graph)[0]
    return report


def test_path_and_even_cycle():
    assert widest_path_coloring(2).coloring.colors == (1,)
    assert widest_path_coloring(4).coloring.colors == (1, 2, 3)
    assert_interval(widest_path_coloring(10))
    c6 = widest_even_cycle_coloring(3)
    assert c6.t == 4
    assert_interval(c6)
    with pytest.raises(DomainError):
        widest_path_coloring(1)
    with pytest.raises(DomainError):
        widest_even_cycle_coloring(1)


def test_complete_bipartite():
    assert complete_bipartite_coloring(1, 1).coloring.colors == (1,)
    k23 = complete_bipartite_coloring(2, 3)
    assert k23.t == 4
    assert_interval(k23)


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_complete_minimal(n):
    result = complete_minimal(n)
    assert result.t == n - 1
    assert_interval(result)


def test_complete_minimal_needs_even_order():
    with pytest.raises(DomainError):
        complete_minimal(5)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_hypercube_colorings(n):
    assert_interval(hypercube_minimal(n))
    widest = hypercube_widest(n)
    assert widest.t == n * (n + 1) // 2
    assert_interval(widest)


@pytest.mark.parametrize("m", range(2, 13))
@pytest.mark.parametrize("n", range(2, 13))
def test_grid_widest_matrix(m, n):
    result = grid_widest(m, n)
    assert result.t == 2 * (m + n - 3)
    assert_interval(result)


def test_grid_two_by_two():
    result = grid_widest(2, 2)
    v = grid_vertex(2)
    assert result.coloring.color_of(v(1, 1), v(2, 1)) == 1
    assert result.coloring.color_of(v(1, 1), v(1, 2)) == 2


def test_grid_rejects_short_sides():
    with pytest.raises(DomainError):
        grid_widest(1, 4)


@pytest.mark.parametrize("m", range(1, 9))
@pytest.mark.parametrize("n", range(1, 9))
def test_cylinder_widest_matrix(m, n):
    odd = cylinder_widest(2 * m, 2 * n + 1)
    assert odd.t == 4 * m + 2 * n - 1
    assert_interval(odd)
    if n >= 2:
        even = cylinder_widest(2 * m, 2 * n)
        assert even.t == 4 * m + 2 * n - 2
        assert_interval(even)


def test_cylinder_widest_examples():
    assert cylinder_widest(2, 4).t == 6
    assert cylinder_widest(2, 3).t == 5
    assert cylinder_widest(4, 5).t == 11
    with pytest.raises(DomainError):
        cylinder_widest(3, 4)


@pytest.mark.parametrize("m", range(3, 10))
@pytest.mark.parametrize("n", range(1, 6))
def test_cylinder_minimal_matrix(m, n):
    result = cylinder_minimal(m, 2 * n + 1)
    assert result.t == (4 if m % 2 == 0 else 6)
    assert_interval(result)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_third_ring_sees_one_to_three(n):
    circumference = 2 * n + 1
    result = cylinder_minimal(3, circumference)
    v = grid_vertex(circumference)
    for j in range(1, circumference + 1):
        assert spectrum(result.coloring, v(3, j)) == {1, 2, 3}


@pytest.mark.parametrize("circumference", [3, 5, 7, 9])
def test_prism_three_coloring(circumference):
    result = prism_three_coloring(circumference)
    assert result.spec == Cylinder(2, circumference)
    assert_interval(result)


def test_prism_rungs_fill_the_missing_color():
    circumference = 5
    result = prism_three_coloring(circumference)
    v = grid_vertex(circumference)
    rungs = [result.coloring.color_of(v(1, j), v(2, j)) for j in range(1, circumference + 1)]
    assert rungs == [3, 2, 2, 2, 1]
    assert result.coloring.color_of(v(1, 1), v(1, circumference)) == 2


def test_minimal_cylinder_preconditions():
    with pytest.raises(DomainError):
        cylinder_minimal(2, 5)
    with pytest.raises(DomainError):
        cylinder_minimal(4, 6)
    with pytest.raises(DomainError):
        prism_three_coloring(4)


@pytest.mark.parametrize("m", range(2, 7))
@pytest.mark.parametrize("n", range(1, 7))
def test_odd_torus_matrix(m, n):
    result = torus_widest(2 * m, 2 * n + 1)
    assert result.t == 2 * m + 2 * n + (2 if m % 2 else 3)
    assert_interval(result)


@pytest.mark.parametrize("m", range(2, 6))
@pytest.mark.parametrize("n", range(2, 6))
def test_even_torus_matrix(m, n):
    result = torus_widest(2 * m, 2 * n)
    assert result.t == max(3 * m + n + 2, 3 * n + m + 2)
    assert result.spec == Torus(2 * m, 2 * n)
    assert_interval(result)


def test_torus_examples():
    assert torus_widest(4, 3).t == 9
    assert torus_widest(4, 5).t == 11
    assert torus_widest(6, 3).t == 10
    assert torus_widest(4, 6).t == 13
    assert torus_widest(4, 4).t == 10


def test_odd_side_first_is_transposed():
    result = torus_widest(5, 4)
    assert result.spec == Torus(5, 4)
    assert result.t == 11
    assert_interval(result)


def test_odd_by_odd_torus_is_rejected():
    with pytest.raises(DomainError):
        torus_widest(5, 3)


def test_transpose_round_trip():
    result = torus_widest(4, 6)
    back = transpose(transpose(result))
    assert back.coloring == result.coloring


BASES = {
    "K2": (lambda: widest_path_coloring(2), 1),
    "C4": (lambda: widest_even_cycle_coloring(2), 2),
    "C6": (lambda: widest_even_cycle_coloring(3), 2),
    "K4": (lambda: complete_minimal(4), 3),
}


@pytest.mark.parametrize("base", sorted(BASES))
@pytest.mark.parametrize("m", range(1, 6))
def test_path_product(base, m):
    make, r = BASES[base]
    alpha = make()
    result = product_with_path(alpha.graph, alpha.coloring, r, m)
    assert result.t == alpha.t + (m - 1) * (r + 1)
    assert_interval(result)
    for layer in range(m):
        shift = layer * (r + 1)
        colors = layer_restriction(result.coloring, alpha.graph, m, layer)
        assert [c - shift for c in colors] == list(alpha.coloring.colors)


@pytest.mark.parametrize("base", sorted(BASES))
@pytest.mark.parametrize("n", range(2, 5))
def test_even_cycle_product(base, n):
    make, r = BASES[base]
    alpha = make()
    result = product_with_even_cycle(alpha.graph, alpha.coloring, r, n)
    assert result.t == alpha.t + n * (r + 1) + 1
    assert_interval(result)
    for layer in range(2 * n):
        shift = even_cycle_layer_shift(layer + 1, n, r)
        colors = layer_restriction(result.coloring, alpha.graph, 2 * n, layer)
        assert [c - shift for c in colors] == list(alpha.coloring.colors)


def test_path_product_layer_spectra():
    alpha = widest_even_cycle_coloring(2)
    m, r = 4, 2
    result = product_with_path(alpha.graph, alpha.coloring, r, m)
    for u in range(alpha.graph.vertex_count):
        own = spectrum(alpha.coloring, u)
        for i in range(2, m):
            shift = (i - 1) * (r + 1)
            got = spectrum(result.coloring, u * m + (i - 1))
            assert got == set(range(min(own) + shift - 1, max(own) + shift + 2))


def test_product_examples():
    c4 = widest_even_cycle_coloring(2)
    assert product_with_path(c4.graph, c4.coloring, 2, 2).t == 6
    assert product_with_path(c4.graph, c4.coloring, 2, 1).coloring == c4.coloring
    k2 = widest_path_coloring(2)
    assert product_with_path(k2.graph, k2.coloring, 1, 3).t == 5
    assert product_with_even_cycle(k2.graph, k2.coloring, 1, 2).t == 6
    assert product_with_even_cycle(c4.graph, c4.coloring, 2, 2).t == 10


def test_products_accept_any_interval_coloring():
    c4 = Cycle(4).realize()
    alternating = EdgeColoring.from_mapping(c4, {(0, 1): 1, (1, 2): 2, (2, 3): 1, (3, 0): 2})
    assert verify_interval(alternating, 2).valid
    result = product_with_path(c4, alternating, 2, 3)
    assert result.t == 2 + 2 * 3
    assert_interval(result)


def test_product_preconditions():
    p3 = widest_path_coloring(3)
    with pytest.raises(DomainError):
        product_with_path(p3.graph, p3.coloring, 2, 2)
    c4 = widest_even_cycle_coloring(2)
    broken = EdgeColoring(c4.graph, (1, 1, 2, 2))
    with pytest.raises(PreconditionError):
        product_with_path(c4.graph, broken, 2, 2)


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_cube_product(n):
    k2 = widest_path_coloring(2)
    result = product_with_cube(k2.graph, k2.coloring, 1, n)
    assert result.t == 1 + n * (n + 3) // 2
    assert_interval(result)


def test_builder_conflicts():
    g = Path(3).realize()
    builder = ColoringBuilder(g)
    builder.assign(0, 1, 1, "first")
    builder.assign(1, 0, 1, "again")
    assert builder.duplicates == 1
    assert builder.rule_of(0, 1) == "first"
    with pytest.raises(ClauseConflictError):
        builder.assign(0, 1, 2, "clash")


def test_registry():
    modes = supported_modes()
    assert modes["cylinder"] == ("minimal", "widest")
    assert modes["torus"] == ("widest",)
    assert construct(Grid([3, 4]), "widest").t == 8
    assert construct(Cylinder(3, 3), "minimal").t == 6
    assert construct(Cylinder(2, 5), "minimal").t == 3
    assert construct(Torus(6, 3), "widest").t == 10
    with pytest.raises(UnsupportedConstructionError) as excinfo:
        construct(Torus(4, 4), "minimal")
    assert "cylinder: minimal, widest" in str(excinfo.value)
    with pytest.raises(DomainError):
        construct(Cycle(5), "widest")
    with pytest.raises(DomainError):
        construct(Grid([2, 3, 4]), "widest")
