"""Tests for the closed-form evaluators and the worked P_l / C_m expressions."""

from __future__ import annotations

import dataclasses

import pytest
import sympy
from hypothesis import given

from closed_forms import (
    EXAMPLE_INDICES,
    EXAMPLE_PRODUCTS,
    THEOREMS,
    ExampleDomainError,
    evaluate,
    f_corona_join,
    f_sdvj,
    hm1_corona_join,
    hm1_sdvj,
    m1_corona_join,
    m1_sdvj,
    m2_corona_join,
    m2_sdvj,
    rm2_corona_join,
    rm2_sdvj,
    subdivision_params,
    worked_example,
)
from graph_core import build_complete, build_cycle, build_path, random_graph
from indices import GraphParams, IndexKind, compute_index, forgotten, graph_params, hyper_zagreb, m1, m2, reduced_m2
from products import ProductKind, build_product, corona_join, subdivision_vertex_join
from strategies import PROPERTY_SETTINGS, simple_graphs

K1 = graph_params(build_complete(1))
K2 = graph_params(build_complete(2))
P2 = graph_params(build_path(2))
P3 = graph_params(build_path(3))
P4 = graph_params(build_path(4))
C3 = graph_params(build_cycle(3))
C4 = graph_params(build_cycle(4))


class TestZagreb:
    def test_corona_join(self):
        assert m1_corona_join(P2, K1) == 26
        assert m2_corona_join(P2, K1) == 33
        product = corona_join(build_path(3), build_cycle(4)).graph
        assert m1_corona_join(P3, C4) == m1(product)
        assert m2_corona_join(P3, C4) == m2(product)

    def test_sdvj(self):
        assert m1_sdvj(K2, K1) == 12
        assert m2_sdvj(K2, K1) == 9
        product = subdivision_vertex_join(build_cycle(4), build_path(3)).graph
        assert m1_sdvj(C4, P3) == m1(product)
        assert m2_sdvj(C4, P3) == m2(product)


class TestForgotten:
    def test_corona_join(self):
        assert f_corona_join(K1, K1) == 2
        assert f_corona_join(P2, K1) == 70
        assert f_corona_join(P3, C3) == 4456

    def test_sdvj(self):
        assert f_sdvj(K2, K1) == 30
        assert f_sdvj(P2, C3) == 208
        assert f_sdvj(K1, K1) == 0


class TestHyperZagreb:
    def test_corona_join(self):
        assert hm1_corona_join(K1, K1) == 4
        assert hm1_corona_join(P2, K1) == 136
        assert hm1_corona_join(P3, C3) == hyper_zagreb(corona_join(build_path(3), build_cycle(3)).graph)

    def test_sdvj(self):
        assert hm1_sdvj(K2, K1) == 48
        assert hm1_sdvj(K1, C3) == 48
        assert hm1_sdvj(P3, C3) == hyper_zagreb(subdivision_vertex_join(build_path(3), build_cycle(3)).graph)


class TestReducedSecondZagreb:
    def test_corona_join(self):
        assert rm2_corona_join(K1, K1) == 0
        assert rm2_corona_join(P2, K1) == 12
        assert rm2_corona_join(C3, C3) == reduced_m2(corona_join(build_cycle(3), build_cycle(3)).graph)

    def test_sdvj(self):
        assert rm2_sdvj(K2, K1) == 0
        assert rm2_sdvj(K1, C3) == 3
        assert rm2_sdvj(P4, C4) == reduced_m2(subdivision_vertex_join(build_path(4), build_cycle(4)).graph)


class TestRegistry:
    def test_every_pair_registered(self):
        products = (ProductKind.CORONA_JOIN, ProductKind.SUBDIVISION_VERTEX_JOIN)
        assert set(THEOREMS) == {(product, kind) for product in products for kind in IndexKind}

    def test_no_formula_for_classical_corona(self):
        with pytest.raises(ValueError):
            evaluate(ProductKind.CORONA, IndexKind.F, K2, K2)

    def test_corona_join_rejects_empty_first_factor(self):
        empty = GraphParams(0, 0, 0, 0, 0, 0, 0)
        with pytest.raises(ValueError):
            f_corona_join(empty, K1)

    def test_subdivision_params(self):
        assert subdivision_params(C4) == (8, 8)

    @PROPERTY_SETTINGS
    @given(g1=simple_graphs(min_order=1, max_order=6), g2=simple_graphs(max_order=6))
    def test_matches_direct_computation(self, g1, g2):
        p1, p2 = graph_params(g1), graph_params(g2)
        for (product_kind, index_kind), evaluator in THEOREMS.items():
            product = build_product(product_kind, g1, g2)
            assert evaluator(p1, p2) == compute_index(product.graph, index_kind)


class TestPolynomialStructure:
    def test_doubling_second_order_in_f_corona_join(self):
        n1, n2, m1, m2, f1, f2, z1, z2 = sympy.symbols("n1 n2 m1 m2 f1 f2 z1 z2", integer=True)
        formula = (
            f1 + n1 * f2 + 3 * n1 * n2 * z1 + 3 * n1 ** 2 * z2 + 6 * m1 * n1 ** 2 * n2 ** 2
            + 6 * m2 * n1 ** 3 + n1 ** 4 * n2 * (n2 ** 2 + 1)
        )
        delta = sympy.expand(formula.subs(n2, 2 * n2) - formula)

        p1 = graph_params(random_graph(9, 0.5, 3))
        p2 = graph_params(random_graph(7, 0.4, 4))
        doubled = dataclasses.replace(p2, order=2 * p2.order)
        values = {
            n1: p1.order, n2: p2.order, m1: p1.size, m2: p2.size,
            f1: p1.forgotten, f2: p2.forgotten, z1: p1.zagreb1, z2: p2.zagreb1,
        }
        assert f_corona_join(p1, doubled) - f_corona_join(p1, p2) == int(delta.subs(values))

    def test_values_beyond_64_bits_are_exact(self):
        big = GraphParams(10 ** 4, 2 * 10 ** 4, 16 * 10 ** 4, 16 * 10 ** 4, 64 * 10 ** 4, 256 * 10 ** 4, 9 * 10 ** 4)
        n1 = n2 = 10 ** 4
        leading = n1 ** 4 * n2 * (n2 ** 2 + 1)
        value = f_corona_join(big, big)
        assert value > 2 ** 64
        assert value > leading
        assert isinstance(value, int)


class TestOverflowSafety:
    def test_fifty_by_fifty_corona_join(self):
        g1 = random_graph(50, 0.2, 1)
        g2 = build_cycle(50)
        product = corona_join(g1, g2)
        assert product.graph.order == 2550
        direct = forgotten(product.graph)
        assert f_corona_join(graph_params(g1), graph_params(g2)) == direct
        assert direct > 50 ** 4 * 50 ** 3


class TestWorkedExamples:
    @pytest.mark.parametrize("index", EXAMPLE_INDICES)
    @pytest.mark.parametrize("product", EXAMPLE_PRODUCTS)
    def test_agree_with_theorems_and_direct(self, index, product):
        for l in range(3, 9):
            for m in range(3, 9):
                path, cycle = build_path(l), build_cycle(m)
                example = worked_example(index, product, l, m)
                assert example == evaluate(product, index, graph_params(path), graph_params(cycle))
                assert example == compute_index(build_product(product, path, cycle).graph, index)

    def test_known_cells(self):
        assert worked_example(IndexKind.F, ProductKind.CORONA_JOIN, 3, 3) == 4456
        assert worked_example(IndexKind.F, ProductKind.SUBDIVISION_VERTEX_JOIN, 3, 3) == f_sdvj(P3, C3)

    @pytest.mark.parametrize("l, m", [(2, 3), (3, 2), (1, 5)])
    def test_rejects_outside_domain(self, l, m):
        with pytest.raises(ExampleDomainError):
            worked_example(IndexKind.RM2, ProductKind.CORONA_JOIN, l, m)

    def test_rejects_indices_without_examples(self):
        with pytest.raises(ExampleDomainError):
            worked_example(IndexKind.M1, ProductKind.CORONA_JOIN, 4, 4)
