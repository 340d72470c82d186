from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from malliavin.divergence import (
    Method,
    commutator_check,
    delta_alt,
    delta_binomial,
    delta_iterative,
    delta_moment,
    divergence,
    duality_check,
    expand_rule,
    gauss_hermite_nodes,
    gaussian_expectation,
    moment_expansion_delta,
    quadrature_expectation,
)
from malliavin.hermite import hermite_recurrence
from malliavin.poly import Polynomial, derivative

from _oracles import gaussian_integral_sympy

X = Polynomial.x()
TABLE = hermite_recurrence(24)
H = TABLE.polys
small_polys = st.lists(st.fractions(max_denominator=12).filter(lambda q: abs(q) <= 20), max_size=6).map(Polynomial)


def P(*c):
    return Polynomial(c)


class TestBinomial:
    @pytest.mark.parametrize("n", range(10))
    def test_delta_of_one_is_hermite(self, n):
        assert delta_binomial(Polynomial.one(), n, TABLE) == H[n]

    def test_first_order_on_x(self):
        assert delta_binomial(X, 1, TABLE) == P(-1, 0, 1)

    def test_second_order_on_x_squared(self):
        # H_2 x^2 - 2 H_1 (2x) + 2
        assert delta_binomial(X * X, 2, TABLE) == P(2, 0, -5, 0, 1)

    def test_order_zero_is_identity(self):
        p = P(1, 2, 3)
        assert delta_binomial(p, 0, TABLE) is p

    def test_zero_maps_to_zero(self):
        for n in range(6):
            assert delta_binomial(Polynomial.zero(), n, TABLE).is_zero()

    def test_small_table_rejected(self):
        with pytest.raises(ValueError, match="H_5"):
            delta_binomial(X, 5, hermite_recurrence(3))

    def test_negative_order_rejected(self):
        with pytest.raises(ValueError):
            delta_binomial(X, -1, TABLE)

    def test_default_table(self):
        assert delta_binomial(X, 3) == H[4]

    def test_degree_bound(self):
        g = P(1, -1, 2, 0, 3)
        for n in range(8):
            assert delta_binomial(g, n, TABLE).degree <= g.degree + n


class TestIterative:
    def test_examples(self):
        assert delta_iterative(X, 2) == P(0, -3, 0, 1)
        p = P(4, 5)
        assert delta_iterative(p, 0) == p
        assert delta_iterative(Polynomial.one(), 2) == P(-1, 0, 1)


class TestAlt:
    def test_examples(self):
        assert delta_alt(X, 1, TABLE) == P(-1, 0, 1)
        assert delta_alt(Polynomial.one(), 1, TABLE) == X
        assert delta_alt(X * X, 3, TABLE) == delta_binomial(X * X, 3, TABLE)

    def test_needs_table_to_order(self):
        with pytest.raises(ValueError):
            delta_alt(X, 4, hermite_recurrence(3))


class TestMoment:
    @pytest.mark.parametrize("n", range(8))
    def test_one_gives_hermite(self, n):
        assert delta_moment(Polynomial.one(), n) == H[n]

    @given(small_polys)
    def test_first_order(self, g):
        assert delta_moment(g, 1) == X * g - derivative(g)

    def test_cubic_second_order(self):
        g = X**3
        assert delta_moment(g, 2) == delta_binomial(g, 2, TABLE)

    @given(small_polys, st.integers(0, 8))
    def test_imaginary_zero(self, g, n):
        assert moment_expansion_delta(g, n)[1].is_zero()


def test_expand_rule_keeps_g_as_zeroth_power():
    # factors all 1, n = 1: 1*g - 1*g' (g^0 = g, not 1)
    g = P(3, 1)
    assert expand_rule([Polynomial.one()] * 2, g, 1) == g - derivative(g)


@settings(max_examples=60, deadline=None)
@given(small_polys, st.integers(0, 9))
def test_four_way_agreement(g, n):
    b = delta_binomial(g, n, TABLE)
    assert b == delta_iterative(g, n) == delta_alt(g, n, TABLE) == delta_moment(g, n)


@settings(max_examples=40, deadline=None)
@given(small_polys, st.integers(0, 5), st.integers(0, 5))
def test_composition(g, n, m):
    assert delta_binomial(delta_binomial(g, n, TABLE), m, TABLE) == delta_binomial(g, n + m, TABLE)


@given(small_polys, st.integers(0, 6), st.integers(-5, 5))
def test_linear(g, n, c):
    q = P(1, 2, 3)
    assert delta_binomial(g.scale(c) + q, n, TABLE) == delta_binomial(g, n, TABLE).scale(c) + delta_binomial(q, n, TABLE)


class TestDispatch:
    @pytest.mark.parametrize("method", list(Method))
    def test_result_record(self, method):
        res = divergence(X, 3, method)
        assert res.method is method
        assert res.output == H[4]
        assert res.input == X and res.n == 3

    def test_method_strings(self):
        assert divergence(X, 1, "alt").output == P(-1, 0, 1)
        with pytest.raises(ValueError):
            divergence(X, 1, "nope")


class TestCommutator:
    def test_examples(self):
        assert commutator_check(Polynomial.one(), 1)
        assert commutator_check(P(0, -1, 1), 5)

    @given(small_polys)
    def test_first_order_product_rule(self, g):
        # D delta g = g + delta g'
        assert commutator_check(g, 1)
        assert derivative(delta_binomial(g, 1)) == g + delta_binomial(derivative(g), 1)

    def test_requires_positive_order(self):
        with pytest.raises(ValueError):
            commutator_check(X, 0)


class TestExpectation:
    def test_examples(self):
        assert gaussian_expectation(X * X) == 1
        assert gaussian_expectation(P(-1, 0, 1) ** 2) == 2
        assert gaussian_expectation(X**3) == 0

    @pytest.mark.parametrize("coeffs", [[1, 2, 3], [0, 0, 0, 0, Fraction(1, 2), 0, -1], [Fraction(-3, 7)] * 5])
    def test_symbolic_integral_oracle(self, coeffs):
        p = Polynomial(coeffs)
        assert gaussian_expectation(p) == gaussian_integral_sympy(list(p.coeffs))


class TestDuality:
    def test_examples(self):
        rep = duality_check(X * X, X, 1)
        assert (rep.lhs, rep.rhs, rep.passed) == (2, 2, True)
        rep = duality_check(X**3, X * X, 2)
        assert rep.passed

    @given(small_polys, st.integers(1, 6))
    def test_constant_test_function(self, g, n):
        rep = duality_check(Polynomial.one(), g, n)
        assert rep.lhs == 0 and rep.rhs == 0 and rep.passed

    @settings(deadline=None)
    @given(small_polys, small_polys, st.integers(0, 6))
    def test_random_pairs(self, f, g, n):
        assert duality_check(f, g, n).passed

    def test_report_json(self):
        assert duality_check(X * X, X, 1).to_dict() == {
            "f": ["0", "0", "1"],
            "g": ["0", "1"],
            "n": 1,
            "lhs": "2/1",
            "rhs": "2/1",
            "pass": True,
        }

    def test_detects_wrong_divergence(self):
        # x g alone (dropping -g') is not an adjoint
        f, g = X * X, X
        assert gaussian_expectation(derivative(f) * g) != gaussian_expectation(f * (X * g))


class TestQuadrature:
    def test_one_point(self):
        nodes, weights = gauss_hermite_nodes(1)
        assert nodes.tolist() == [0.0] and weights.tolist() == [1.0]

    def test_two_point(self):
        nodes, weights = gauss_hermite_nodes(2)
        np.testing.assert_allclose(nodes, [-1.0, 1.0], rtol=0, atol=1e-15)
        np.testing.assert_allclose(weights, [0.5, 0.5], rtol=0, atol=1e-15)

    def test_six_point_fourth_moment(self):
        assert abs(quadrature_expectation(X**4, 6) - 3.0) <= 1e-12

    @pytest.mark.parametrize("m", [1, 2, 3, 5, 8, 12, 16])
    def test_weights_sum_to_one(self, m):
        _, weights = gauss_hermite_nodes(m)
        assert abs(weights.sum() - 1.0) <= 1e-13
        assert (weights > 0).all()

    @pytest.mark.parametrize("m", [3, 7, 10])
    def test_nodes_are_hermite_roots(self, m):
        nodes, _ = gauss_hermite_nodes(m)
        assert np.all(np.diff(nodes) > 0)
        np.testing.assert_allclose(np.polynomial.hermite_e.hermeroots([0] * m + [1]), nodes, atol=1e-10)

    def test_rejects_empty_rule(self):
        with pytest.raises(ValueError):
            gauss_hermite_nodes(0)
