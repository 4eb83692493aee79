"""Tests for the n and p polynomial families."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arcalg.combinatorics import Weight, descents, enumerate_weights, full_weight, leq
from arcalg.exceptions import ValidationError
from arcalg.faithcheck import box_weight
from arcalg.klpoly import (
    ONE,
    ZERO,
    Poly,
    arrow_chain_violations,
    cartan_matrix,
    ell_drop_violations,
    inverse_kl_matrix,
    kl_matrix,
    matrix_to_rows,
    max_arrow_chain,
    n_poly,
    p_coefficient,
    p_poly,
    p_poly_coefficients,
    shortest_arrow_chain,
    verify_inverse,
)

coefficients = st.lists(st.integers(min_value=-5, max_value=5), max_size=6)


class TestPoly:
    """Tests for the integer polynomial type."""

    def test_trailing_zeros_stripped(self):
        """Poly normalises its coefficient list."""
        assert Poly((1, 0, 0)) == ONE
        assert Poly((0, 0)) == ZERO
        assert ZERO.is_zero

    def test_str(self):
        """Polynomials print highest power first."""
        assert str(Poly((1, 0, -2))) == "-2q^2 + 1"
        assert str(Poly.monomial(1)) == "q"
        assert str(ZERO) == "0"

    def test_at_minus_q(self):
        """Odd coefficients change sign."""
        assert Poly((1, 2, 3)).at_minus_q() == Poly((1, -2, 3))

    def test_evaluate(self):
        """evaluate substitutes an integer for q."""
        assert Poly((1, 2, 3)).evaluate(1) == 6

    def test_json(self):
        """to_json is the coefficient list."""
        assert Poly((0, 1)).to_json() == [0, 1]
        assert Poly.from_json([0, 1]) == Poly.monomial(1)

    @given(coefficients, coefficients)
    def test_arithmetic_matches_sympy(self, a, b):
        """Sums and products agree with the sympy polynomials."""
        x, y = Poly(tuple(a)), Poly(tuple(b))

        assert (x + y).to_sympy() == x.to_sympy() + y.to_sympy()
        assert (x * y).to_sympy() == x.to_sympy() * y.to_sympy()
        assert x - x == ZERO


class TestNPoly:
    """Tests for n_{λμ}."""

    def test_smallest_box(self):
        """In Λ_{1,1} the only off-diagonal entry is n_{^v, v^} = q."""
        assert n_poly(Weight("^v"), Weight("v^")) == Poly.monomial(1)
        assert n_poly(Weight("v^"), Weight("^v")) == ZERO

    def test_diagonal_is_one(self):
        """n_{λλ} = 1."""
        for w in enumerate_weights(2, 2):
            assert n_poly(w, w) == ONE

    def test_nonzero_only_above(self):
        """n_{λμ} ≠ 0 forces μ ≤ λ."""
        ws = enumerate_weights(2, 3)
        for lam in ws:
            for mu in ws:
                if not n_poly(lam, mu).is_zero:
                    assert leq(mu, lam)

    def test_different_boxes(self):
        """Weights of different boxes are rejected."""
        with pytest.raises(ValidationError, match="different boxes"):
            n_poly(Weight("v^"), Weight("v^v"))

    def test_kl_matrix_smallest_box(self):
        """The matrix is indexed in enumeration order."""
        assert kl_matrix(1, 1) == [[ONE, ZERO], [Poly.monomial(1), ONE]]


class TestPPoly:
    """Tests for p_{λμ} and the inverse identity."""

    def test_smallest_box(self):
        """p_{v^, ^v} = q."""
        assert p_poly(Weight("v^"), Weight("^v")) == Poly.monomial(1)
        assert inverse_kl_matrix(1, 1) == [[ONE, Poly.monomial(1)], [ZERO, ONE]]

    def test_corner(self):
        """p_{(m^n), (m^m)} = q^{m(n−m)}."""
        assert p_poly(full_weight(1, 2), box_weight([1], 1, 2)) == Poly.monomial(1)
        assert p_poly(full_weight(2, 3), box_weight([2, 2], 2, 3)) == Poly.monomial(2)

    def test_zero_unless_below(self):
        """p_{λμ} vanishes unless λ ≤ μ."""
        ws = enumerate_weights(2, 2)
        for lam in ws:
            for mu in ws:
                if not leq(lam, mu):
                    assert p_poly(lam, mu).is_zero

    @pytest.mark.parametrize("box", [(1, 1), (1, 2), (2, 2), (2, 3), (3, 3)])
    def test_inverse_identity(self, box):
        """Σ_ν p_{λν}(−q) n_{μν}(q) = δ_{λμ}."""
        assert verify_inverse(*box)

    def test_independent_of_descent(self):
        """Every descent gives the same polynomial."""
        ws = enumerate_weights(2, 3)
        for lam in ws:
            for i in descents(lam):
                for mu in ws:
                    assert p_poly(lam, mu, descent=i) == p_poly(lam, mu)

    def test_descent_must_be_descent(self):
        """A position that is not a descent is rejected."""
        lam, mu = Weight("v^v^"), Weight("^^vv")

        with pytest.raises(ValidationError, match="not a 'v\\^' descent"):
            p_poly(lam, mu, descent=2)

    def test_coefficients_non_negative(self):
        """Every coefficient of every p_{λμ} is non-negative."""
        for row in inverse_kl_matrix(3, 3):
            for p in row:
                assert all(c >= 0 for c in p.coeffs)

    def test_coefficient_accessors(self):
        """p_coefficient and p_poly_coefficients read the same data."""
        lam, mu = Weight("v^"), Weight("^v")

        assert p_coefficient(lam, mu, 1) == 1
        assert p_coefficient(lam, mu, 0) == 0
        assert p_poly_coefficients(lam, mu) == [0, 1]


class TestArrowChains:
    """Tests for the arrow chain bounds on p."""

    @pytest.mark.parametrize("box", [(1, 2), (2, 2), (2, 3), (3, 3)])
    def test_no_violations(self, box):
        """Each nonzero p^{(k)} is reached by an arrow chain of length k."""
        assert arrow_chain_violations(*box) == []

    def test_chain_lengths(self):
        """Shortest and longest chains from the minimum of Λ_{1,1}."""
        assert shortest_arrow_chain(Weight("v^"), Weight("^v")) == 1
        assert max_arrow_chain(Weight("v^"), Weight("^v")) == 1
        assert shortest_arrow_chain(Weight("^v"), Weight("v^")) is None

    @pytest.mark.parametrize("box", [(1, 3), (2, 3), (2, 4), (3, 3)])
    def test_ell_drop(self, box):
        """min ℓ_h drops by at most one along an arrow."""
        assert ell_drop_violations(*box) == []

    def test_ell_drop_needs_m_le_n(self):
        """The inequality is only stated for m ≤ n."""
        with pytest.raises(ValidationError, match="m ≤ n"):
            ell_drop_violations(3, 2)


class TestCartan:
    """Tests for the Cartan matrix."""

    def test_smallest_box(self):
        """K^1_1 has Cartan matrix [[2,1],[1,1]]."""
        assert cartan_matrix(1, 1) == [[2, 1], [1, 1]]

    def test_symmetric(self):
        """dim e_λKe_μ = dim e_μKe_λ."""
        c = cartan_matrix(2, 3)

        assert c == [list(row) for row in zip(*c, strict=True)]

    def test_rows_for_csv(self):
        """matrix_to_rows labels rows and columns with weights."""
        rows = matrix_to_rows(1, 1, kl_matrix(1, 1))

        assert rows[0] == ["", "v^", "^v"]
        assert rows[2] == ["^v", "0 1", "1"]
