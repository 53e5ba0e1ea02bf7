import pytest

from ivcolor.constructors import hypercube_minimal, hypercube_widest, widest_path_coloring
from ivcolor.core.spans import (
    SpanTable,
    check_span_recurrence,
    cube_edge_distance,
    hypercube_neighbor_witnesses,
    span_ceiling,
    span_table,
)
from ivcolor.errors import DomainError


def test_single_edge_table():
    assert span_table(widest_path_coloring(2).coloring).sp == (0,)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_direction_coloring_spans(n):
    tbl = span_table(hypercube_minimal(n).coloring)
    assert tbl.sp[0] == n - 1
    assert check_span_recurrence(tbl)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_widest_cube_coloring_spans(n):
    tbl = span_table(hypercube_widest(n).coloring)
    assert tbl.sp[0] == n - 1
    assert check_span_recurrence(tbl)
    assert tbl.sp[-1] <= span_ceiling(n)


def test_recurrence_arithmetic():
    assert check_span_recurrence(SpanTable(3, (2, 4, 5)))
    assert not check_span_recurrence(SpanTable(3, (2, 5, 5)))


def test_table_length_must_match_dimension():
    with pytest.raises(DomainError):
        SpanTable(3, (2, 4))


def test_non_cube_is_rejected():
    with pytest.raises(DomainError):
        span_table(widest_path_coloring(4).coloring)


def test_cube_edge_distance():
    assert cube_edge_distance((0, 1), (0, 2)) == 0
    assert cube_edge_distance((0, 1), (6, 7)) == 2


def test_neighbor_witnesses():
    assert hypercube_neighbor_witnesses(3, 0b000, 0b011) == [0b001, 0b010]
    assert len(hypercube_neighbor_witnesses(3, 0b000, 0b111)) == 3
    assert hypercube_neighbor_witnesses(3, 5, 5) == []
    with pytest.raises(DomainError):
        hypercube_neighbor_witnesses(3, 0, 8)


def test_span_ceiling():
    assert span_ceiling(3) == 5
