"""Tests for matrix conventions, group elements and the Cartan domain."""

import json

import numpy as np
import pytest

from conformal_states.algebra import (
    ETA,
    I2,
    I4,
    CartanPoint,
    GroupElement,
    block_relation_residuals,
    cayley,
    cayley_inverse,
    check_unit_determinant,
    coordinates_to_matrix,
    gamma_matrices,
    generator_matrix,
    hopf_compose,
    hopf_decompose,
    hopf_measure_density,
    in_cartan_domain,
    iwasawa,
    make_group_element,
    matrix_to_coordinates,
    measure_density_invariant,
    measure_density_lambda,
    normalization_constant,
    pseudo_unitarity_residual,
    random_domain_point,
    random_group_element,
    random_unitary,
    spectral_norm,
    structure_constants,
    upsilon_conjugate,
    upsilon_inverse,
)
from conformal_states.errors import DomainViolation, InvalidScaleDimension


@pytest.fixture
def rng():
    """Seeded generator shared by the geometry tests."""
    return np.random.default_rng(11)


class TestGammaMatrices:
    """Tests for the Weyl-basis gamma matrices and generator matrices."""

    def test_clifford_relation(self):
        """gamma^mu gamma^nu + gamma^nu gamma^mu = 2 eta^{mu nu}."""
        gamma = gamma_matrices().gamma
        for mu in range(4):
            for nu in range(4):
                anti = gamma[mu] @ gamma[nu] + gamma[nu] @ gamma[mu]
                assert np.allclose(anti, 2 * ETA[mu, nu] * I4)

    def test_gamma5_is_block_diagonal(self):
        """gamma5 = diag(-1, -1, 1, 1) in the Weyl basis."""
        assert np.allclose(gamma_matrices().gamma5, np.diag([-1, -1, 1, 1]))

    def test_k0_p0_commutator_is_twice_dilation(self):
        """[K^0, P^0] = 2D."""
        K0, P0, D = generator_matrix("K0"), generator_matrix("P0"), generator_matrix("D")
        assert np.allclose(K0 @ P0 - P0 @ K0, 2 * D)

    def test_unknown_generator_raises(self):
        """Unknown names are rejected."""
        with pytest.raises(KeyError):
            generator_matrix("Q7")


class TestStructureConstants:
    """Tests for the u(2,2) structure constants."""

    def test_closure_residual_is_tiny(self):
        """The sixteen matrices close under commutation."""
        assert structure_constants().residual < 1e-12

    def test_constants_are_real(self):
        """Structure constants are real numbers."""
        assert np.isrealobj(structure_constants().f)

    def test_dilation_scales_translations(self):
        """[D, P0] = -P0 and [D, K0] = K0."""
        constants = structure_constants()
        names = constants.names
        d, p0, k0 = names.index("D"), names.index("P0"), names.index("K0")
        assert constants.f[d, p0, p0] == pytest.approx(-1.0)
        assert constants.f[d, k0, k0] == pytest.approx(1.0)


class TestCoordinates:
    """Tests for Z = z_mu sigma^mu."""

    def test_coordinates_round_trip(self, rng):
        """matrix_to_coordinates inverts coordinates_to_matrix."""
        z = rng.normal(size=4) + 1j * rng.normal(size=4)
        assert np.allclose(matrix_to_coordinates(coordinates_to_matrix(z)), z)

    def test_determinant_is_minkowski_square(self, rng):
        """det Z = z0^2 - z1^2 - z2^2 - z3^2."""
        z = rng.normal(size=4) + 1j * rng.normal(size=4)
        expected = z[0] ** 2 - z[1] ** 2 - z[2] ** 2 - z[3] ** 2
        assert np.linalg.det(coordinates_to_matrix(z)) == pytest.approx(expected)


class TestCartanDomain:
    """Tests for domain membership and CartanPoint validation."""

    def test_membership(self):
        """Interior, boundary and exterior points."""
        assert in_cartan_domain(0.5 * I2)
        assert not in_cartan_domain(I2)
        assert not in_cartan_domain(1.5 * I2)

    def test_cartan_point_rejects_exterior(self):
        """CartanPoint raises DomainViolation outside the domain."""
        with pytest.raises(DomainViolation):
            CartanPoint(2 * I2)

    def test_domain_violation_is_value_error(self):
        """Library errors keep their builtin base."""
        with pytest.raises(ValueError):
            CartanPoint(np.zeros((3, 3)))

    def test_cartan_point_json(self, rng):
        """JSON keeps the matrix."""
        point = random_domain_point(rng, 0.4)
        restored = CartanPoint.from_json(point.to_json())
        assert np.allclose(restored.Z, point.Z)
        assert "Z" in json.loads(point.to_json())

    def test_random_point_has_requested_norm(self, rng):
        """random_domain_point rescales to the requested spectral norm."""
        point = random_domain_point(rng, 0.3)
        assert spectral_norm(point) == pytest.approx(0.3)
        assert point.delta() > 0


class TestGroupElements:
    """Tests for pseudo-unitary group elements."""

    def test_coset_representative(self, rng):
        """make_group_element satisfies every block relation and has unit determinant."""
        g = make_group_element(random_domain_point(rng, 0.6))
        assert pseudo_unitarity_residual(g.g) < 1e-12
        assert max(block_relation_residuals(g.g).values()) < 1e-12
        assert check_unit_determinant(g)

    def test_iwasawa_recovers_point(self, rng):
        """iwasawa(make_group_element(Z)) returns Z and trivial rotations."""
        point = random_domain_point(rng, 0.5)
        recovered, U1, U2 = iwasawa(make_group_element(point))
        assert np.allclose(recovered.Z, point.Z)
        assert np.allclose(U1, I2)
        assert np.allclose(U2, I2)

    def test_inverse(self, rng):
        """g^{-1} g = 1."""
        g = random_group_element(rng, 0.5)
        assert np.allclose((g.inverse() @ g).g, I4)

    def test_rejects_non_pseudo_unitary(self):
        """A generic matrix is not a group element."""
        with pytest.raises(DomainViolation):
            GroupElement(2 * I4)

    def test_rotation_is_group_element(self, rng):
        """U(2) x U(2) embeds block-diagonally."""
        g = GroupElement.rotation(random_unitary(rng), random_unitary(rng))
        assert pseudo_unitarity_residual(g.g) < 1e-12

    def test_upsilon_round_trip(self, rng):
        """Conjugation by Upsilon is undone by upsilon_inverse."""
        g = random_group_element(rng, 0.4)
        assert np.allclose(upsilon_inverse(upsilon_conjugate(g)).g, g.g)

    def test_upsilon_image_preserves_gamma0(self, rng):
        """f^dag gamma0 f = gamma0 for f = Upsilon g Upsilon^-1."""
        gamma0 = gamma_matrices().gamma[0]
        f = upsilon_conjugate(random_group_element(rng, 0.4))
        assert np.allclose(f.conj().T @ gamma0 @ f, gamma0)


class TestCayleyAndHopf:
    """Tests for the tube realization and the U(2) Hopf patch."""

    def test_cayley_round_trip(self, rng):
        """cayley_inverse undoes cayley."""
        point = random_domain_point(rng, 0.5)
        assert np.allclose(cayley_inverse(cayley(point)).Z, point.Z)

    def test_cayley_image_has_positive_imaginary_part(self, rng):
        """The image lies in the forward tube."""
        W = cayley(random_domain_point(rng, 0.7))
        assert np.min(np.linalg.eigvalsh(W.Y)) > 0

    def test_hopf_round_trip(self, rng):
        """hopf_compose inverts hopf_decompose on a random unitary."""
        U = random_unitary(rng)
        z, _, u1, u2 = hopf_decompose(U)
        assert np.allclose(hopf_compose(z, u1, u2), U)


class TestMeasures:
    """Tests for the invariant and lambda measures."""

    def test_normalization_constant(self):
        """c_4 = 12 / pi^4."""
        assert normalization_constant(4) == pytest.approx(12 / np.pi**4)

    def test_density_needs_lambda_above_three(self):
        """The normalized density is undefined for lambda <= 3."""
        with pytest.raises(InvalidScaleDimension):
            measure_density_lambda(0.1 * I2, 3)

    def test_density_at_origin(self):
        """At Z = 0 the density is c_lambda."""
        assert measure_density_lambda(np.zeros((2, 2)), 5) == pytest.approx(normalization_constant(5))

    def test_invariant_density(self):
        """det(1 - Z^dag Z)^-4 is 1 at the origin and 0.75^-8 at Z = 0.5."""
        assert measure_density_invariant(np.zeros((2, 2))) == pytest.approx(1.0)
        assert measure_density_invariant(0.5 * I2) == pytest.approx(0.75**-8)

    def test_invariant_density_outside_domain(self):
        """Points outside the domain are rejected."""
        with pytest.raises(DomainViolation):
            measure_density_invariant(2 * I2)

    def test_hopf_density(self):
        """(1 + |z|^2)^-2 on the Hopf patch."""
        assert hopf_measure_density(0) == 1.0
        assert hopf_measure_density(1j) == pytest.approx(0.25)
