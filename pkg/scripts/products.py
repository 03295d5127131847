#!/usr/bin/env python3
"""
Graph products with vertex provenance.

Builds the join, corona, subdivision, corona join and subdivision-vertex join
of simple graphs. Every product records where each of its vertices came from,
so the degree lemmas can be checked vertex by vertex.

Vertex layouts are fixed:
  join                      G1 ids, then G2 ids
  corona / corona join      G1 ids, then copy i of G2 for i = 0..n1-1
  subdivision               original ids, then one vertex per edge in edge order
  subdivision-vertex join   G1 ids, subdivision vertices, then G2 ids

The corona join joins every vertex of every copy of G2 to all of G1, not copy i
to vertex v_i only as the classical corona does. A G1 vertex therefore gains
n1*n2 neighbours.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Union

from graph_core import Graph, GraphError

logger = logging.getLogger(__name__)


class ProvenanceError(GraphError):
    """A provenance tag that has no meaning for the requested product"""


@dataclass(frozen=True)
class Factor1:
    vertex: int


@dataclass(frozen=True)
class Factor2Copy:
    copy: int
    vertex: int


@dataclass(frozen=True)
class Subdivision:
    edge: int


ProvenanceTag = Union[Factor1, Factor2Copy, Subdivision]
VertexProvenance = tuple[ProvenanceTag, ...]


class ProductKind(Enum):
    JOIN = "join"
    CORONA = "corona"
    SUBDIVISION = "subdivision"
    CORONA_JOIN = "corona-join"
    SUBDIVISION_VERTEX_JOIN = "sdvj"

    @classmethod
    def parse(cls, text: str) -> ProductKind:
        key = text.strip().lower().replace("_", "-")
        aliases = {"coronajoin": cls.CORONA_JOIN, "subdivision-vertex-join": cls.SUBDIVISION_VERTEX_JOIN}
        if key in aliases:
            return aliases[key]
        try:
            return cls(key)
        except ValueError:
            choices = ", ".join(kind.value for kind in cls)
            raise GraphError(f"unknown product kind {text!r} (choose from {choices})") from None


@dataclass(frozen=True)
class ProductGraph:
    graph: Graph
    provenance: VertexProvenance
    kind: ProductKind

    def check_provenance(self, g1: Graph, g2: Graph | None = None) -> None:
        """Raise ProvenanceError unless the tags form the documented bijections"""
        if len(self.provenance) != self.graph.order:
            raise ProvenanceError(
                f"{len(self.provenance)} tags for a product of order {self.graph.order}"
            )
        factor1 = sorted(tag.vertex for tag in self.provenance if isinstance(tag, Factor1))
        copies = sorted((tag.copy, tag.vertex) for tag in self.provenance if isinstance(tag, Factor2Copy))
        subdivided = sorted(tag.edge for tag in self.provenance if isinstance(tag, Subdivision))

        copy_count = {
            ProductKind.JOIN: 1,
            ProductKind.CORONA: g1.order,
            ProductKind.CORONA_JOIN: g1.order,
            ProductKind.SUBDIVISION_VERTEX_JOIN: 1,
            ProductKind.SUBDIVISION: 0,
        }[self.kind]
        expected_copies = [] if g2 is None else [
            (i, v) for i in range(copy_count) for v in range(g2.order)
        ]
        has_subdivision = self.kind in (ProductKind.SUBDIVISION, ProductKind.SUBDIVISION_VERTEX_JOIN)
        expected_subdivided = list(range(g1.size)) if has_subdivision else []

        if factor1 != list(range(g1.order)):
            raise ProvenanceError("Factor1 tags are not a bijection with V(G1)")
        if copies != expected_copies:
            raise ProvenanceError("Factor2Copy tags are not a bijection with copies x V(G2)")
        if subdivided != expected_subdivided:
            raise ProvenanceError("Subdivision tags are not a bijection with E(G1)")


def _factor1_tags(g1: Graph) -> list[ProvenanceTag]:
    return [Factor1(v) for v in range(g1.order)]


def join(g1: Graph, g2: Graph) -> ProductGraph:
    """G1 + G2: disjoint union plus every edge between V1 and V2"""
    n1 = g1.order
    edges = list(g1.edges)
    edges.extend((u + n1, v + n1) for u, v in g2.edges)
    edges.extend((u, n1 + v) for u in range(n1) for v in range(g2.order))
    provenance = _factor1_tags(g1) + [Factor2Copy(0, v) for v in range(g2.order)]
    graph = Graph.from_edges(n1 + g2.order, edges)
    return ProductGraph(graph, tuple(provenance), ProductKind.JOIN)


def _copies_of(g1: Graph, g2: Graph) -> tuple[list[tuple[int, int]], list[ProvenanceTag]]:
    """Edges and tags of the n1 copies of G2 placed after the G1 block"""
    n1, n2 = g1.order, g2.order
    edges = []
    tags: list[ProvenanceTag] = []
    for i in range(n1):
        offset = n1 + i * n2
        edges.extend((offset + u, offset + v) for u, v in g2.edges)
        tags.extend(Factor2Copy(i, v) for v in range(n2))
    return edges, tags


def corona(g1: Graph, g2: Graph) -> ProductGraph:
    """Classical corona G1 o G2: copy i of G2 joined to vertex v_i only"""
    if g1.order < 1:
        raise GraphError("corona needs a nonempty first factor")
    n1, n2 = g1.order, g2.order
    copy_edges, copy_tags = _copies_of(g1, g2)
    edges = list(g1.edges) + copy_edges
    edges.extend((i, n1 + i * n2 + v) for i in range(n1) for v in range(n2))
    graph = Graph.from_edges(n1 * (1 + n2), edges)
    return ProductGraph(graph, tuple(_factor1_tags(g1) + copy_tags), ProductKind.CORONA)


def subdivision(g: Graph) -> ProductGraph:
    """S(G): a new degree-2 vertex on every edge, in canonical edge order"""
    n = g.order
    edges = []
    for index, (u, v) in enumerate(g.edges):
        middle = n + index
        edges.append((u, middle))
        edges.append((v, middle))
    provenance = _factor1_tags(g) + [Subdivision(index) for index in range(g.size)]
    graph = Graph.from_edges(n + g.size, edges)
    return ProductGraph(graph, tuple(provenance), ProductKind.SUBDIVISION)


def corona_join(g1: Graph, g2: Graph) -> ProductGraph:
    """G1 (+) G2: n1 copies of G2, every copy vertex joined to all of G1"""
    if g1.order < 1:
        raise GraphError("corona join needs a nonempty first factor")
    n1 = g1.order
    copy_edges, copy_tags = _copies_of(g1, g2)
    edges = list(g1.edges) + copy_edges
    copy_ids = range(n1, n1 + n1 * g2.order)
    edges.extend((u, w) for w in copy_ids for u in range(n1))
    graph = Graph.from_edges(n1 + n1 * g2.order, edges)
    return ProductGraph(graph, tuple(_factor1_tags(g1) + copy_tags), ProductKind.CORONA_JOIN)


def subdivision_vertex_join(g1: Graph, g2: Graph) -> ProductGraph:
    """S(G1) with one copy of G2, every subdivision vertex joined to all of G2"""
    base = subdivision(g1)
    offset = base.graph.order
    edges = list(base.graph.edges)
    edges.extend((offset + u, offset + v) for u, v in g2.edges)
    subdivision_ids = range(g1.order, offset)
    edges.extend((s, offset + v) for s in subdivision_ids for v in range(g2.order))
    provenance = base.provenance + tuple(Factor2Copy(0, v) for v in range(g2.order))
    graph = Graph.from_edges(offset + g2.order, edges)
    return ProductGraph(graph, provenance, ProductKind.SUBDIVISION_VERTEX_JOIN)


def build_product(kind: ProductKind, g1: Graph, g2: Graph | None = None) -> ProductGraph:
    if kind is ProductKind.SUBDIVISION:
        return subdivision(g1)
    if g2 is None:
        raise GraphError(f"{kind.value} needs two factors")
    builders = {
        ProductKind.JOIN: join,
        ProductKind.CORONA: corona,
        ProductKind.CORONA_JOIN: corona_join,
        ProductKind.SUBDIVISION_VERTEX_JOIN: subdivision_vertex_join,
    }
    return builders[kind](g1, g2)


def _check_vertex(vertex: int, g: Graph, name: str) -> None:
    if not 0 <= vertex < g.order:
        raise ProvenanceError(f"vertex {vertex} outside 0..{g.order - 1} of {name}")


def predicted_degree_corona_join(tag: ProvenanceTag, g1: Graph, g2: Graph) -> int:
    """Degree of a corona-join vertex from its factor degree alone"""
    if isinstance(tag, Factor1):
        _check_vertex(tag.vertex, g1, "G1")
        return g1.degree_sequence[tag.vertex] + g1.order * g2.order
    if isinstance(tag, Factor2Copy):
        if not 0 <= tag.copy < g1.order:
            raise ProvenanceError(f"copy index {tag.copy} outside 0..{g1.order - 1}")
        _check_vertex(tag.vertex, g2, "G2")
        return g2.degree_sequence[tag.vertex] + g1.order
    raise ProvenanceError("the corona join has no subdivision vertices")


def predicted_degree_sdvj(tag: ProvenanceTag, g1: Graph, g2: Graph) -> int:
    """Degree of a subdivision-vertex-join vertex from its factor degree alone"""
    if isinstance(tag, Factor1):
        _check_vertex(tag.vertex, g1, "G1")
        return g1.degree_sequence[tag.vertex]
    if isinstance(tag, Subdivision):
        if not 0 <= tag.edge < g1.size:
            raise ProvenanceError(f"edge index {tag.edge} outside 0..{g1.size - 1}")
        return 2 + g2.order
    if tag.copy != 0:
        raise ProvenanceError(f"the subdivision-vertex join has one copy of G2, got copy {tag.copy}")
    _check_vertex(tag.vertex, g2, "G2")
    return g2.degree_sequence[tag.vertex] + g1.size


def degree_mismatches(product: ProductGraph, g1: Graph, g2: Graph) -> list[tuple[int, int, int]]:
    """(vertex, actual, predicted) for every vertex that breaks its degree lemma"""
    predictors = {
        ProductKind.CORONA_JOIN: predicted_degree_corona_join,
        ProductKind.SUBDIVISION_VERTEX_JOIN: predicted_degree_sdvj,
    }
    if product.kind not in predictors:
        raise ProvenanceError(f"no degree lemma for {product.kind.value}")
    predict = predictors[product.kind]
    actual = product.graph.degree_sequence
    mismatches = []
    for vertex, tag in enumerate(product.provenance):
        predicted = predict(tag, g1, g2)
        if actual[vertex] != predicted:
            mismatches.append((vertex, actual[vertex], predicted))
    return mismatches


def subdivision_degree_power_sum(g: Graph, power: int) -> int:
    """
    Sum over the edges of S(G) of d_G(u)**power, u the original endpoint.

    Computed on the constructed subdivision: every edge of S(G) joins exactly
    one Factor1 vertex to one Subdivision vertex.
    """
    product = subdivision(g)
    total = 0
    for u, v in product.graph.edges:
        original = u if isinstance(product.provenance[u], Factor1) else v
        total += g.degree_sequence[product.provenance[original].vertex] ** power
    return total
