"""Shared hypothesis strategies for simple graphs."""

from __future__ import annotations

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from graph_core import Graph

PROPERTY_SETTINGS = settings(
    max_examples=150,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)


@st.composite
def simple_graphs(draw: st.DrawFn, min_order: int = 0, max_order: int = 8) -> Graph:
    order = draw(st.integers(min_value=min_order, max_value=max_order))
    pairs = [(u, v) for u in range(order) for v in range(u + 1, order)]
    if not pairs:
        return Graph(order, ())
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    return Graph.from_edges(order, chosen)
