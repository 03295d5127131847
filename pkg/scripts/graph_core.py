#!/usr/bin/env python3
"""
Graph core - simple undirected graphs on dense integer vertex ids.

Provides the immutable Graph value used by every other module, the standard
family generators (paths, cycles, complete graphs, stars, seeded random
graphs), degree queries and the edge-list text format.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

import networkx as nx

logger = logging.getLogger(__name__)

DegreeSequence = tuple[int, ...]

MASK64 = (1 << 64) - 1

DECIMAL = re.compile(r"-?[0-9]+")


class GraphError(ValueError):
    """Base class for every domain error raised by the toolkit"""


class EdgeListError(GraphError):
    """Edge-list text that cannot be turned into a simple graph"""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class HeaderError(EdgeListError):
    pass


class MalformedLineError(EdgeListError):
    pass


class EndpointError(EdgeListError):
    pass


class SelfLoopError(EdgeListError):
    pass


class DuplicateEdgeError(EdgeListError):
    pass


class EdgeCountError(EdgeListError):
    pass


class EncodingError(EdgeListError):
    pass


class GeneratorSpecError(GraphError):
    """A "name:param" generator spec that does not name a known family"""


@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph with vertices 0..order-1.

    edges is the canonical edge tuple: every pair is (u, v) with u < v and the
    tuple is sorted lexicographically, so two graphs are equal exactly when
    they have the same order and edge set. The constructor rejects anything
    else; from_edges canonicalizes arbitrary input first.
    """

    order: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.order < 0:
            raise GraphError(f"order must be nonnegative, got {self.order}")
        previous = None
        for u, v in self.edges:
            if not 0 <= u < v < self.order:
                raise GraphError(f"edge ({u}, {v}) is not canonical for order {self.order}")
            if previous is not None and (u, v) <= previous:
                raise GraphError(f"edges not strictly sorted at ({u}, {v})")
            previous = (u, v)

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Validate and canonicalize an edge collection"""
        if order < 0:
            raise GraphError(f"order must be nonnegative, got {order}")
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{order - 1}")
            edge = (u, v) if u < v else (v, u)
            if edge in seen:
                raise GraphError(f"duplicate edge {edge}")
            seen.add(edge)
        return cls(order, tuple(sorted(seen)))

    @property
    def size(self) -> int:
        return len(self.edges)

    @cached_property
    def degree_sequence(self) -> DegreeSequence:
        counts = [0] * self.order
        for u, v in self.edges:
            counts[u] += 1
            counts[v] += 1
        return tuple(counts)

    @cached_property
    def _adjacency(self) -> tuple[frozenset[int], ...]:
        adjacency: list[set[int]] = [set() for _ in range(self.order)]
        for u, v in self.edges:
            adjacency[u].add(v)
            adjacency[v].add(u)
        return tuple(frozenset(neighbors) for neighbors in adjacency)

    @cached_property
    def _edge_positions(self) -> dict[tuple[int, int], int]:
        return {edge: index for index, edge in enumerate(self.edges)}

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._edge_positions

    def edge_index(self, u: int, v: int) -> int:
        """Position of edge {u, v} in the canonical edge order"""
        return self._edge_positions[(min(u, v), max(u, v))]

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.order))


class SplitMix64:
    """
    SplitMix64 generator, the canonical RNG for reproducible graphs.

    Each step adds the golden-gamma constant 0x9E3779B97F4A7C15 to the state
    and mixes it with the two multiply/xor-shift rounds below, all modulo
    2^64. next_float() keeps the top 53 bits, giving a double in [0, 1).
    """

    GAMMA = 0x9E3779B97F4A7C15

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + self.GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def next_float(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def next_below(self, bound: int) -> int:
        """Integer in [0, bound), by multiply-shift on a 64-bit draw"""
        if bound <= 0:
            raise ValueError("bound must be positive")
        return (self.next_u64() * bound) >> 64


def build_empty(n: int) -> Graph:
    """n isolated vertices"""
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    return Graph(n, ())


def build_path(l: int) -> Graph:
    """Path P_l on l vertices"""
    if l < 1:
        raise ValueError(f"path needs at least 1 vertex, got {l}")
    return Graph.from_edges(l, ((i, i + 1) for i in range(l - 1)))


def build_cycle(m: int) -> Graph:
    """Cycle C_m; C_1 and C_2 are not simple"""
    if m < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {m}")
    return Graph.from_edges(m, ((i, (i + 1) % m) for i in range(m)))


def build_complete(n: int) -> Graph:
    """Complete graph K_n"""
    if n < 1:
        raise ValueError(f"complete graph needs at least 1 vertex, got {n}")
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def build_star(k: int) -> Graph:
    """Star K_{1,k}: vertex 0 is the center, 1..k are leaves"""
    if k < 1:
        raise ValueError(f"star needs at least 1 leaf, got {k}")
    return Graph.from_edges(k + 1, ((0, leaf) for leaf in range(1, k + 1)))


def random_graph(n: int, p: float, seed: int) -> Graph:
    """
    Erdos-Renyi G(n, p), a pure function of (n, p, seed).

    Pairs (i, j) with i < j are visited in lexicographic order and each one
    consumes exactly one SplitMix64 draw, kept when the draw is below p.
    """
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    rng = SplitMix64(seed)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.next_float() < p:
                edges.append((i, j))
    return Graph(n, tuple(edges))


def degrees(g: Graph) -> DegreeSequence:
    return g.degree_sequence


def is_connected(g: Graph) -> bool:
    """Connectivity query; never a precondition anywhere in the toolkit"""
    if g.order == 0:
        return True
    return nx.is_connected(to_networkx(g))


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges)
    return h


def from_networkx(h: nx.Graph) -> Graph:
    """Convert a networkx graph, relabelling nodes to 0..n-1 in sorted order"""
    if h.is_directed() or h.is_multigraph():
        raise GraphError("only simple undirected graphs are supported")
    ids = {node: index for index, node in enumerate(sorted(h.nodes))}
    return Graph.from_edges(len(ids), ((ids[u], ids[v]) for u, v in h.edges))


def relabel(g: Graph, permutation: list[int]) -> Graph:
    """Image of g under the vertex map v -> permutation[v]"""
    if sorted(permutation) != list(range(g.order)):
        raise GraphError("relabel needs a permutation of 0..order-1")
    return Graph.from_edges(g.order, ((permutation[u], permutation[v]) for u, v in g.edges))


def _decimal(token: str) -> int:
    """ASCII decimal only; int() would also take other Unicode digits"""
    if not DECIMAL.fullmatch(token):
        raise ValueError(f"not a decimal integer: {token!r}")
    return int(token)


def read_edge_list(text: str) -> Graph:
    """
    Parse the edge-list format.

    First non-comment line is "n m", then m lines "u v". Lines starting with
    '#' are comments and blank lines are skipped. Errors report the 1-based
    physical line number.
    """
    order: int | None = None
    declared = 0
    header_line = 0
    seen: set[tuple[int, int]] = set()

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()

        if order is None:
            header_line = line_no
            try:
                order, declared = (_decimal(part) for part in parts)
            except ValueError:
                raise HeaderError(line_no, f"expected header 'n m', got {line!r}") from None
            if order < 0 or declared < 0:
                raise HeaderError(line_no, f"header values must be nonnegative, got {line!r}")
            continue

        try:
            u, v = (_decimal(part) for part in parts)
        except ValueError:
            raise MalformedLineError(line_no, f"expected edge 'u v', got {line!r}") from None
        if u == v:
            raise SelfLoopError(line_no, f"self-loop at vertex {u}")
        if not (0 <= u < order and 0 <= v < order):
            raise EndpointError(line_no, f"edge ({u}, {v}) has an endpoint >= n = {order} or negative")
        edge = (u, v) if u < v else (v, u)
        if edge in seen:
            raise DuplicateEdgeError(line_no, f"duplicate edge {u} {v}")
        seen.add(edge)

    if order is None:
        raise HeaderError(1, "missing header 'n m'")
    if len(seen) != declared:
        raise EdgeCountError(header_line, f"header declares {declared} edges, found {len(seen)}")
    return Graph(order, tuple(sorted(seen)))


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.order} {g.size}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def load_edge_list(path: str) -> Graph:
    with open(path, "rb") as handle:
        data = handle.read()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        line = data.count(b"\n", 0, e.start) + 1
        raise EncodingError(line, f"{path} is not valid UTF-8 (byte 0x{data[e.start]:02x})") from None
    graph = read_edge_list(text)
    logger.debug("Loaded %s: order %d, size %d", path, graph.order, graph.size)
    return graph


def save_edge_list(g: Graph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(write_edge_list(g))


def _spec_int(spec: str, value: str) -> int:
    try:
        return _decimal(value)
    except ValueError:
        raise GeneratorSpecError(f"{spec!r}: {value!r} is not an integer") from None


def parse_generator_spec(spec: str) -> Graph:
    """
    Build a graph from the "name:param" mini-language.

    path:l, cycle:m, complete:n (alias k:n), star:k, empty:n and
    random:n:p:seed.
    """
    name, _, rest = spec.strip().partition(":")
    params = rest.split(":") if rest else []
    builders = {
        "path": build_path,
        "cycle": build_cycle,
        "complete": build_complete,
        "k": build_complete,
        "star": build_star,
        "empty": build_empty,
    }
    try:
        if name in builders:
            if len(params) != 1:
                raise GeneratorSpecError(f"{spec!r}: {name} takes exactly one parameter")
            return builders[name](_spec_int(spec, params[0]))
        if name == "random":
            if len(params) != 3:
                raise GeneratorSpecError(f"{spec!r}: random takes n:p:seed")
            try:
                p = float(params[1])
            except ValueError:
                raise GeneratorSpecError(f"{spec!r}: {params[1]!r} is not a probability") from None
            return random_graph(_spec_int(spec, params[0]), p, _spec_int(spec, params[2]))
    except GeneratorSpecError:
        raise
    except ValueError as e:
        raise GeneratorSpecError(f"{spec!r}: {e}") from None
    raise GeneratorSpecError(f"{spec!r}: unknown generator {name!r}")


def is_generator_spec(source: str) -> bool:
    name, sep, _ = source.partition(":")
    return bool(sep) and name in {"path", "cycle", "complete", "k", "star", "empty", "random"}
