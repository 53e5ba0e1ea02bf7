"""node_tracker.py – session totals of search work, printed by the CLI at exit."""

searches = 0
nodes = 0
seconds = 0.0


def track_search(explored, elapsed=0.0):
    """Add one finished search run to the session totals."""
    global searches, nodes, seconds
    searches += 1
    nodes += int(explored)
    seconds += float(elapsed)


def get_totals():
    """Return (searches, nodes, seconds)."""
    return searches, nodes, seconds


def reset():
    """Reset the counters to zero."""
    global searches, nodes, seconds
    searches = 0
    nodes = 0
    seconds = 0.0
