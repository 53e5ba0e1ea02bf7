import pytest

from ivcolor import node_tracker


@pytest.fixture(autouse=True)
def fresh_node_totals():
    node_tracker.reset()
    yield
    node_tracker.reset()
