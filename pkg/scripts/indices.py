#!/usr/bin/env python3
"""
Degree-based topological indices, computed exactly from a Graph.

All values are Python ints, so nothing wraps however large the product graph
gets. M1 and F are computed in both their vertex-sum and edge-sum forms and
the two are required to agree.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable

from graph_core import Graph, GraphError

logger = logging.getLogger(__name__)

IndexValue = int


class IndexConsistencyError(GraphError):
    """Vertex-sum and edge-sum forms of an index disagree"""


class IndexKind(Enum):
    M1 = "M1"
    M2 = "M2"
    F = "F"
    HM1 = "HM1"
    RM2 = "RM2"

    @classmethod
    def parse(cls, text: str) -> IndexKind:
        try:
            return cls(text.strip().upper())
        except ValueError:
            choices = ", ".join(kind.value for kind in cls)
            raise GraphError(f"unknown index {text!r} (choose from {choices})") from None


@dataclass(frozen=True)
class GraphParams:
    """Summary (n, m, M1, M2, F, HM1, RM2) of a factor graph"""

    order: int
    size: int
    zagreb1: IndexValue
    zagreb2: IndexValue
    forgotten: IndexValue
    hyper_zagreb: IndexValue
    reduced_zagreb2: IndexValue


def m1_vertex_form(g: Graph) -> IndexValue:
    return sum(d * d for d in g.degree_sequence)


def m1_edge_form(g: Graph) -> IndexValue:
    d = g.degree_sequence
    return sum(d[u] + d[v] for u, v in g.edges)


def m1(g: Graph) -> IndexValue:
    """First Zagreb index"""
    vertex_sum, edge_sum = m1_vertex_form(g), m1_edge_form(g)
    if vertex_sum != edge_sum:
        raise IndexConsistencyError(f"M1 vertex form {vertex_sum} != edge form {edge_sum}")
    return vertex_sum


def m2(g: Graph) -> IndexValue:
    """Second Zagreb index"""
    d = g.degree_sequence
    return sum(d[u] * d[v] for u, v in g.edges)


def forgotten_vertex_form(g: Graph) -> IndexValue:
    return sum(d ** 3 for d in g.degree_sequence)


def forgotten_edge_form(g: Graph) -> IndexValue:
    d = g.degree_sequence
    return sum(d[u] ** 2 + d[v] ** 2 for u, v in g.edges)


def forgotten(g: Graph) -> IndexValue:
    """Forgotten index F"""
    vertex_sum, edge_sum = forgotten_vertex_form(g), forgotten_edge_form(g)
    if vertex_sum != edge_sum:
        raise IndexConsistencyError(f"F vertex form {vertex_sum} != edge form {edge_sum}")
    return vertex_sum


def hyper_zagreb(g: Graph) -> IndexValue:
    """First hyper Zagreb index HM1"""
    d = g.degree_sequence
    return sum((d[u] + d[v]) ** 2 for u, v in g.edges)


def reduced_m2(g: Graph) -> IndexValue:
    """Reduced second Zagreb index RM2; pendant edges contribute zero"""
    d = g.degree_sequence
    return sum((d[u] - 1) * (d[v] - 1) for u, v in g.edges)


INDEX_FUNCTIONS: dict[IndexKind, Callable[[Graph], IndexValue]] = {
    IndexKind.M1: m1,
    IndexKind.M2: m2,
    IndexKind.F: forgotten,
    IndexKind.HM1: hyper_zagreb,
    IndexKind.RM2: reduced_m2,
}


def compute_index(g: Graph, kind: IndexKind) -> IndexValue:
    return INDEX_FUNCTIONS[kind](g)


def compute_indices(g: Graph, kinds: Iterable[IndexKind] = tuple(IndexKind)) -> dict[IndexKind, IndexValue]:
    return {kind: compute_index(g, kind) for kind in kinds}


def graph_params(g: Graph) -> GraphParams:
    return GraphParams(
        order=g.order,
        size=g.size,
        zagreb1=m1(g),
        zagreb2=m2(g),
        forgotten=forgotten(g),
        hyper_zagreb=hyper_zagreb(g),
        reduced_zagreb2=reduced_m2(g),
    )
