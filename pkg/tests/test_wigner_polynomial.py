"""Tests for Wigner D-matrices and the sparse polynomial type."""

import numpy as np
import pytest

from conformal_states.errors import InvalidSpin
from conformal_states.polynomial import (
    Polynomial,
    det_polynomial,
    entries_to_z,
    monomials_of_degree,
    z_to_entries,
    z_values,
)
from conformal_states.wigner import check_two_j, q_position, q_values, wigner_character, wigner_d


@pytest.fixture
def matrices():
    """Two generic complex 2x2 matrices."""
    rng = np.random.default_rng(3)
    X = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    Y = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    return X, Y


class TestWignerD:
    """Tests for D^j of arbitrary complex matrices."""

    def test_spin_zero_is_one(self, matrices):
        """D^0(X) = [[1]]."""
        X, _ = matrices
        assert np.allclose(wigner_d(0, X), [[1.0]])

    def test_spin_half_is_identity_map(self, matrices):
        """D^{1/2}(X) = X with rows and columns ordered q = 1/2, -1/2."""
        X, _ = matrices
        assert np.allclose(wigner_d(1, X), X)

    @pytest.mark.parametrize("two_j", [2, 3, 4])
    def test_homomorphism(self, matrices, two_j):
        """D^j(XY) = D^j(X) D^j(Y)."""
        X, Y = matrices
        assert np.allclose(wigner_d(two_j, X @ Y), wigner_d(two_j, X) @ wigner_d(two_j, Y))

    def test_unitary_on_unitary(self):
        """D^j(U) is unitary when U is."""
        theta = 0.7
        U = np.array([[np.cos(theta), 1j * np.sin(theta)], [1j * np.sin(theta), np.cos(theta)]])
        D = wigner_d(3, U)
        assert np.allclose(D.conj().T @ D, np.eye(4))

    def test_character_of_identity(self):
        """tr D^j(1) = 2j + 1."""
        assert wigner_character(4, np.eye(2)) == pytest.approx(5.0)

    def test_batched_shape(self, matrices):
        """Leading batch axes are kept."""
        X, Y = matrices
        assert wigner_d(2, np.stack([X, Y, X])).shape == (3, 3, 3)

    def test_negative_spin_raises(self):
        """two_j must be non-negative."""
        with pytest.raises(InvalidSpin):
            check_two_j(-1)

    def test_magnetic_labels(self):
        """Labels run from j down to -j."""
        assert q_values(2) == [2, 0, -2]
        assert q_position(2, -2) == 2


class TestPolynomial:
    """Tests for Polynomial arithmetic and coordinate changes."""

    def test_small_coefficients_are_pruned(self):
        """Coefficients below the threshold vanish."""
        poly = Polynomial({(1, 0, 0, 0): 1e-20, (0, 1, 0, 0): 2.0})
        assert list(poly.terms) == [(0, 1, 0, 0)]

    def test_bad_exponent_raises(self):
        """Exponent length must match the variable count."""
        with pytest.raises(ValueError):
            Polynomial({(1, 0): 1.0})

    def test_negative_power_raises(self):
        """Only non-negative powers are polynomial."""
        with pytest.raises(ValueError):
            Polynomial.variable(0) ** -1

    def test_derivative_and_euler(self):
        """d/dz0 z0^2 z1 = 2 z0 z1 and the Euler operator scales by degree."""
        poly = Polynomial.monomial((2, 1, 0, 0), 3.0)
        assert poly.derivative(0).coefficient((1, 1, 0, 0)) == pytest.approx(6.0)
        assert poly.euler().coefficient((2, 1, 0, 0)) == pytest.approx(9.0)

    def test_determinant_in_entries(self):
        """z0^2 - z1^2 - z2^2 - z3^2 = z11 z22 - z12 z21."""
        entry_det = Polynomial({(1, 0, 0, 1): 1.0, (0, 1, 1, 0): -1.0})
        assert z_to_entries(det_polynomial()).max_abs_diff(entry_det) < 1e-14

    def test_coordinate_changes_are_inverse(self):
        """entries_to_z undoes z_to_entries."""
        poly = Polynomial({(2, 0, 1, 0): 1.5 - 0.5j, (0, 1, 0, 3): 2.0, (0, 0, 0, 0): -1.0})
        assert entries_to_z(z_to_entries(poly)).max_abs_diff(poly) < 1e-12

    def test_evaluate_determinant(self, matrices):
        """det_polynomial evaluated at z_mu(X) is det X."""
        X, _ = matrices
        assert det_polynomial().evaluate(z_values(X)) == pytest.approx(np.linalg.det(X))

    def test_json_round_trip(self):
        """JSON export keeps every coefficient."""
        poly = Polynomial({(1, 2, 0, 0): 1 + 2j, (0, 0, 0, 1): -3.0})
        assert Polynomial.from_json(poly.to_json()).max_abs_diff(poly) == 0.0

    def test_monomial_count(self):
        """There are C(d + 3, 3) monomials of degree d in four variables."""
        assert len(monomials_of_degree(2)) == 10
        assert len(monomials_of_degree(3)) == 20
