#!/usr/bin/env python3
"""
Closed-form index formulas for the corona join and the subdivision-vertex join.

Every evaluator works from the two factors' GraphParams alone and never builds
the product. In the formulas n1, m1 (n2, m2) are the order and size of G1 (G2).

The usual HM1 and RM2 statements for the subdivision-vertex join keep a sum over
the edges of S(G1) of d_G1(u)**2 and d_G1(u), u the original endpoint. Every
vertex u lies on exactly d_G1(u) edges of S(G1), so those sums are F(G1) and
M1(G1); both are closed that way here.

The formulas only use vertex degrees, so they also hold for disconnected
factors even though they are usually stated for connected graphs.
"""

from __future__ import annotations

from typing import Callable

from graph_core import GraphError
from indices import GraphParams, IndexKind, IndexValue
from products import ProductKind

Evaluator = Callable[[GraphParams, GraphParams], IndexValue]


class ExampleDomainError(GraphError):
    """Path/cycle parameters outside the range the worked examples encode"""


def subdivision_params(p: GraphParams) -> tuple[int, int]:
    """(n', m') of S(G): one new vertex and one extra edge per edge"""
    return p.order + p.size, 2 * p.size


def _require_first_factor(p1: GraphParams) -> None:
    if p1.order < 1:
        raise GraphError("the corona join needs a nonempty first factor")


def m1_corona_join(p1: GraphParams, p2: GraphParams) -> IndexValue:
    _require_first_factor(p1)
    n1, m1, n2, m2 = p1.order, p1.size, p2.order, p2.size
    return (
        p1.zagreb1
        + n1 * p2.zagreb1
        + 4 * n1 * (m1 * n2 + m2 * n1)
        + n1 ** 3 * n2 * (n2 + 1)
    )


def m2_corona_join(p1: GraphParams, p2: GraphParams) -> IndexValue:
    _require_first_factor(p1)
    n1, m1, n2, m2 = p1.order, p1.size, p2.order, p2.size
    g1_edges = p1.zagreb2 + n1 * n2 * p1.zagreb1 + n1 ** 2 * n2 ** 2 * m1
    copy_edges = n1 * (p2.zagreb2 + n1 * p2.zagreb1 + n1 ** 2 * m2)
    cross_edges = n1 * (4 * m1 * m2 + 2 * m1 * n1 * n2 + 2 * m2 * n1 ** 2 * n2 + n1 ** 3 * n2 ** 2)
    return g1_edges + copy_edges + cross_edges


def f_corona_join(p1: GraphParams, p2: GraphParams) -> IndexValue:
    _require_first_factor(p1)
    n1, m1, n2, m2 = p1.order, p1.size, p2.order, p2.size
    return (
        p1.forgotten
        + n1 * p2.forgotten
        + 3 * n1 * n2 * p1.zagreb1
        + 3 * n1 ** 2 * p2.zagreb1
        + 6 * m1 * n1 ** 2 * n2 ** 2
        + 6 * m2 * n1 ** 3
        + n1 ** 4 * n2 * (n2 ** 2 + 1)
    )


def hm1_corona_join(p1: GraphParams, p2: GraphParams) -> IndexValue:
    _require_first_factor(p1)
    n1, m1, n2, m2 = p1.order, p1.size, p2.order, p2.size
    return (
        p1.hyper_zagreb
        + n1 * p2.hyper_zagreb
        + 5 * n1 * (n2 * p1.zagreb1 + n1 * p2.zagreb1)
        + 4 * n1 * (m1 * n1 * n2 ** 2 + m2 * n1 ** 2 + 2 * m1 * m2)
        + n1 ** 2 * (n2 + 1) * (4 * m1 * n2 + 4 * m2 * n1 + n1 ** 2 * n2 * (n2 + 1))
    )


def rm2_corona_join(p1: GraphParams, p2: GraphParams) -> IndexValue:
    _require_first_factor(p1)
    n1, m1, n2, m2 = p1.order, p1.size, p2.order, p2.size
    return (
        p1.reduced_zagreb2
        + n1 * p2.reduced_zagreb2
        + n1 * (n2 * p1.zagreb1 + n1 * p2.zagreb1)
        + m1 * n1 * n2 * (n1 * n2 - 2)
        + m2 * n1 ** 2 * (n1 - 2)
        + 2 * n1 * (2 * m1 * m2 + m1 * n2 * (n1 - 1) + m2 * n1 * (n1 * n2 - 1))
        + n1 ** 2 * n2 * (n1 ** 2 * n2 - n1 * n2 - n1 + 1)
    )


def m1_sdvj(p1: GraphParams, p2: GraphParams) -> IndexValue:
    m1, n2, m2 = p1.size, p2.order, p2.size
    return p1.zagreb1 + p2.zagreb1 + m1 * (n2 + 2) ** 2 + 4 * m1 * m2 + n2 * m1 ** 2


def m2_sdvj(p1: GraphParams, p2: GraphParams) -> IndexValue:
    m1, n2, m2 = p1.size, p2.order, p2.size
    return (
        (n2 + 2) * p1.zagreb1
        + p2.zagreb2
        + m1 * p2.zagreb1
        + m1 ** 2 * m2
        + m1 * (n2 + 2) * (2 * m2 + n2 * m1)
    )


def f_sdvj(p1: GraphParams, p2: GraphParams) -> IndexValue:
    m1, n2, m2 = p1.size, p2.order, p2.size
    return (
        p1.forgotten
        + p2.forgotten
        + 3 * m1 * p2.zagreb1
        + m1 * (2 + n2) ** 3
        + 6 * m2 * m1 ** 2
        + m1 ** 3 * n2
    )


def hm1_sdvj(p1: GraphParams, p2: GraphParams) -> IndexValue:
    m1, n2, m2 = p1.size, p2.order, p2.size
    _, m1_sub = subdivision_params(p1)
    hub = m1 + n2 + 2
    residual = p1.forgotten + (4 + 2 * n2) * p1.zagreb1
    return (
        m1 * (5 * p2.zagreb1 + 4 * m1 * m2)
        + p2.hyper_zagreb
        + m1_sub * (2 + n2) ** 2
        + m1 * hub * (n2 * hub + 4 * m2)
        + residual
    )


def rm2_sdvj(p1: GraphParams, p2: GraphParams) -> IndexValue:
    m1, n2, m2 = p1.size, p2.order, p2.size
    _, m1_sub = subdivision_params(p1)
    residual = p1.zagreb1
    return (
        p2.reduced_zagreb2
        + m1 * (p2.zagreb1 + m1 * m2 - 2 * m2)
        - m1_sub * (n2 + 1)
        + m1 * (n2 + 1) * (2 * m2 + m1 * n2 - n2)
        + (n2 + 1) * residual
    )


THEOREMS: dict[tuple[ProductKind, IndexKind], Evaluator] = {
    (ProductKind.CORONA_JOIN, IndexKind.M1): m1_corona_join,
    (ProductKind.CORONA_JOIN, IndexKind.M2): m2_corona_join,
    (ProductKind.CORONA_JOIN, IndexKind.F): f_corona_join,
    (ProductKind.CORONA_JOIN, IndexKind.HM1): hm1_corona_join,
    (ProductKind.CORONA_JOIN, IndexKind.RM2): rm2_corona_join,
    (ProductKind.SUBDIVISION_VERTEX_JOIN, IndexKind.M1): m1_sdvj,
    (ProductKind.SUBDIVISION_VERTEX_JOIN, IndexKind.M2): m2_sdvj,
    (ProductKind.SUBDIVISION_VERTEX_JOIN, IndexKind.F): f_sdvj,
    (ProductKind.SUBDIVISION_VERTEX_JOIN, IndexKind.HM1): hm1_sdvj,
    (ProductKind.SUBDIVISION_VERTEX_JOIN, IndexKind.RM2): rm2_sdvj,
}


def evaluate(product: ProductKind, kind: IndexKind, p1: GraphParams, p2: GraphParams) -> IndexValue:
    try:
        evaluator = THEOREMS[(product, kind)]
    except KeyError:
        raise GraphError(f"no closed form for {kind.value} of {product.value}") from None
    return evaluator(p1, p2)


EXAMPLE_INDICES = (IndexKind.F, IndexKind.HM1, IndexKind.RM2)
EXAMPLE_PRODUCTS = (ProductKind.CORONA_JOIN, ProductKind.SUBDIVISION_VERTEX_JOIN)


def _f_path_corona_join_cycle(l: int, m: int) -> int:
    return (
        8 * l - 14 + 8 * l * m + 3 * l * m * (4 * l - 6) + 12 * m * l ** 2
        + 6 * l ** 2 * m ** 2 * (l - 1) + 6 * m * l ** 3 + l ** 4 * m * (m ** 2 + 1)
    )


def _f_path_sdvj_cycle(l: int, m: int) -> int:
    return (
        8 * l - 14 + 8 * m + 12 * m * (l - 1) + (l - 1) * (2 + m) ** 3
        + 6 * m * (l - 1) ** 2 + m * (l - 1) ** 3
    )


def _hm1_path_corona_join_cycle(l: int, m: int) -> int:
    return (
        16 * l - 30 + 16 * l * m + 5 * l * (m * (4 * l - 6) + 4 * l * m)
        + 4 * l * (l * m ** 2 * (l - 1) + m * l ** 2 + 2 * m * (l - 1))
        + l ** 2 * (m + 1) * (4 * m * (l - 1) + 4 * m * l + l ** 2 * m * (m + 1))
    )


def _hm1_path_sdvj_cycle(l: int, m: int) -> int:
    # sum over E(S(P_l)) of d(u)^2 + (4 + 2m) d(u) is F(P_l) + (4 + 2m) M1(P_l)
    residual = (8 * l - 14) + (4 + 2 * m) * (4 * l - 6)
    return (
        (l - 1) * (20 * m + 4 * m * (l - 1)) + 16 * m + 2 * (l - 1) * (2 + m) ** 2
        + (l - 1) * ((l - 1) + m + 2) * (m * ((l - 1) + m + 2) + 4 * m)
        + residual
    )


def _rm2_path_corona_join_cycle(l: int, m: int) -> int:
    return (
        (l - 3) + l * m + l * (m * (4 * l - 6) + 4 * l * m) + l * m * (l - 1) * (l * m - 2)
        + m * l ** 2 * (l - 2)
        + 2 * l * (2 * m * (l - 1) + m * (l - 1) ** 2 + m * l * (l * m - 1))
        + l ** 2 * m * (l ** 2 * m - l * m - l + 1)
    )


def _rm2_path_sdvj_cycle(l: int, m: int) -> int:
    # sum over E(S(P_l)) of d(u) is M1(P_l)
    residual = 4 * l - 6
    return (
        m + (l - 1) * (4 * m + m * (l - 1) - 2 * m) - 2 * (l - 1) * (m + 1)
        + (l - 1) * (m + 1) * (2 * m + m * (l - 1) - m)
        + (m + 1) * residual
    )


_EXAMPLES: dict[tuple[IndexKind, ProductKind], Callable[[int, int], int]] = {
    (IndexKind.F, ProductKind.CORONA_JOIN): _f_path_corona_join_cycle,
    (IndexKind.F, ProductKind.SUBDIVISION_VERTEX_JOIN): _f_path_sdvj_cycle,
    (IndexKind.HM1, ProductKind.CORONA_JOIN): _hm1_path_corona_join_cycle,
    (IndexKind.HM1, ProductKind.SUBDIVISION_VERTEX_JOIN): _hm1_path_sdvj_cycle,
    (IndexKind.RM2, ProductKind.CORONA_JOIN): _rm2_path_corona_join_cycle,
    (IndexKind.RM2, ProductKind.SUBDIVISION_VERTEX_JOIN): _rm2_path_sdvj_cycle,
}


def check_example_domain(l: int, m: int) -> None:
    # 8l-14, 16l-30 and l-3 are F, HM1 and RM2 of P_l only from l = 3 on
    if l < 3 or m < 3:
        raise ExampleDomainError(f"worked examples need l >= 3 and m >= 3, got l={l}, m={m}")


def worked_example(index: IndexKind, product: ProductKind, l: int, m: int) -> IndexValue:
    """Worked P_l / C_m expression for F, HM1 or RM2 of either product"""
    try:
        expression = _EXAMPLES[(index, product)]
    except KeyError:
        raise ExampleDomainError(
            f"no worked example for {index.value} of {product.value}"
        ) from None
    check_example_domain(l, m)
    return expression(l, m)
