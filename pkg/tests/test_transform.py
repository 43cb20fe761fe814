"""Tensor operation, specialness validation, degree estimates, division."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from invsp.construct import basic_poly_closed, coefficient_c
from invsp.gapsearch import combine_witness
from invsp.groups import GroupSpec, enumerate_invariant_monomials
from invsp.polycore import DimensionMismatchError, Polynomial, is_one_on_hyperplane
from invsp.rat import rat
from invsp.transform import (
    degree_bound,
    quotient_H,
    tensor_step,
    validate_special,
)

from conftest import polynomials, rationals

G7 = GroupSpec.gamma7()
F7 = basic_poly_closed(G7)


def invariant_polys(g, max_degree=6, max_terms=4, nonneg=False):
    monos = enumerate_invariant_monomials(g, max_degree)
    return st.dictionaries(
        st.sampled_from(monos),
        rationals(nonneg=nonneg),
        min_size=0,
        max_size=max_terms,
    ).map(lambda d: Polynomial(g.nvars, d))


class TestTensorStep:
    def test_gamma7_29(self):
        G = tensor_step(F7, Polynomial(3, {(1, 1, 1): 14}))
        assert G.term_count() == 29

    def test_mixed_sign_quadratic(self):
        F = basic_poly_closed(GroupSpec.scalar(2, 2))
        H = Polynomial(2, {(2, 0): 1, (1, 1): -1, (0, 2): 1})
        G = tensor_step(F, H)
        assert G == Polynomial(
            2, {(4, 0): 1, (1, 1): 3, (3, 1): 1, (1, 3): 1, (0, 4): 1}
        )
        assert validate_special(GroupSpec.scalar(2, 2), G).is_special
        assert G.term_count() == 5

    @pytest.mark.parametrize("k", [3, 4])
    @pytest.mark.parametrize(
        "g", [GroupSpec.scalar(3, 2), GroupSpec.weighted(7, 2), G7]
    )
    def test_telescoping_powers(self, k, g):
        F = basic_poly_closed(g)
        H = sum((F**i for i in range(1, k)), Polynomial.zero(g.nvars))
        assert tensor_step(F, H) == F**k

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            tensor_step(F7, Polynomial.one(2))


class TestValidateSpecial:
    def test_basic_polynomial_is_special(self):
        report = validate_special(G7, F7)
        assert report.is_special
        assert report.n_terms == 17 and report.degree == 7

    def test_constant_one_is_not_special(self):
        report = validate_special(G7, Polynomial.one(3))
        assert report.constant_on_hyperplane
        assert not report.zero_at_origin
        assert not report.is_special

    def test_zero_is_not_special(self):
        report = validate_special(G7, Polynomial.zero(3))
        assert not report.is_special and report.n_terms == 0

    def test_negative_coefficient_flag(self):
        bad = F7 - Polynomial(3, {(1, 1, 1): 28})
        report = validate_special(G7, bad)
        assert not report.nonneg and not report.is_special

    def test_json_shape(self):
        data = validate_special(G7, F7).to_json_dict()
        assert data["is_special"] is True and data["n_terms"] == 17


class TestDegreeBound:
    def test_examples(self):
        r = 5
        assert degree_bound(2, 2 * r + 2) == 4 * r + 1
        assert degree_bound(3, 29) == 14
        assert degree_bound(3, 36) == 17

    def test_dimension_one_rejected(self):
        with pytest.raises(ValueError):
            degree_bound(1, 5)
        with pytest.raises(ValueError):
            degree_bound(2, 0)


class TestQuotient:
    def test_zero_h(self):
        assert quotient_H(G7, F7) == Polynomial.zero(3)

    def test_recovers_basic_example(self):
        H = Polynomial(3, {(1, 1, 1): 14})
        assert quotient_H(G7, tensor_step(F7, H)) == H

    def test_power_telescopes(self):
        expected = F7 + F7 * F7
        assert quotient_H(G7, F7**3) == expected

    def test_nonmember_raises(self):
        with pytest.raises(ValueError):
            quotient_H(G7, F7 + Polynomial.variable(3, 0))

    @settings(max_examples=200, deadline=None)
    @given(st.data())
    def test_round_trip_random(self, data):
        g = data.draw(st.sampled_from([G7, GroupSpec.weighted(7, 2), GroupSpec.scalar(3, 2)]))
        H = data.draw(invariant_polys(g))
        F = basic_poly_closed(g)
        assert quotient_H(g, tensor_step(F, H)) == H


class TestPreservation:
    @settings(max_examples=300, deadline=None)
    @given(st.data())
    def test_hyperplane_constancy_preserved(self, data):
        """F = 1 on the hyperplane forces G = F + H*(F - 1) = 1 there too."""
        g = data.draw(st.sampled_from([GroupSpec.scalar(2, 2), GroupSpec.weighted(5, 2)]))
        F = basic_poly_closed(g)
        seed = data.draw(invariant_polys(g, max_degree=4, max_terms=3))
        F2 = tensor_step(F, seed)  # another polynomial equal to 1 on the line
        H = data.draw(polynomials(2, max_terms=4, max_exp=3))
        assert is_one_on_hyperplane(tensor_step(F2, H))

    @settings(max_examples=300, deadline=None)
    @given(st.data())
    def test_invariance_preserved(self, data):
        from invsp.groups import is_invariant

        g = data.draw(st.sampled_from([G7, GroupSpec.weighted(7, 2)]))
        F = basic_poly_closed(g)
        H = data.draw(invariant_polys(g))
        assert is_invariant(g, tensor_step(F, H))


class TestProductTermBounds:
    @settings(max_examples=300, deadline=None)
    @given(st.integers(1, 8), st.data())
    def test_lower_bound_on_products(self, m, data):
        """(1+t)^m times 1 + sum c_j t^j has at least m + 1 + #positive terms."""
        F = (Polynomial.one(1) + Polynomial.variable(1, 0)) ** m
        exponents = data.draw(
            st.lists(st.integers(1, 9), min_size=0, max_size=4, unique=True)
        )
        coeffs = data.draw(
            st.lists(rationals(nonneg=True), min_size=len(exponents), max_size=len(exponents))
        )
        p = Polynomial(1, {(0,): 1, **{(e,): c for e, c in zip(exponents, coeffs)}})
        k = sum(1 for c in p.terms.values() if c > 0) - 1
        assert (F * p).term_count() >= m + 1 + k

    @pytest.mark.parametrize("m", [2, 3, 5])
    def test_extreme_example(self, m):
        F = (Polynomial.one(1) + Polynomial.variable(1, 0)) ** m
        p = Polynomial(1, {(0,): 1, (1,): 1, (m + 1,): 1})
        assert (F * p).term_count() == 2 * m + 2

    @settings(max_examples=300, deadline=None)
    @given(st.integers(1, 6), st.data())
    def test_middle_term_scaling_equality(self, r, data):
        """Interior scalings of the middle terms add exactly N(F*H) terms."""
        g = GroupSpec.weighted(2 * r + 1, 2)
        F = basic_poly_closed(g)
        lams = {}
        for j in range(1, r + 1):
            c = coefficient_c(r, j)
            pick = data.draw(st.integers(0, 2 * c - 1))
            if pick:
                lams[(2 * r + 1 - 2 * j, j)] = rat(pick, 2)  # 0 <= lam < c
        H = Polynomial(2, lams)
        G = tensor_step(F, H)
        assert G.term_count() == F.term_count() + (F * H).term_count()


class TestIteratedConstructions:
    @pytest.mark.parametrize("a", [2, 3, 4])
    def test_multiplicative_counts(self, a):
        f = basic_poly_closed(GroupSpec.weighted(5, 2))
        n = f.term_count()
        g = f
        for _ in range(a - 1):
            g = combine_witness(g, f, full=False)
        assert g.term_count() == a * n
        h = f
        for _ in range(a - 1):
            h = combine_witness(h, f, full=True)
        assert h.term_count() == a * n - (a - 1)
