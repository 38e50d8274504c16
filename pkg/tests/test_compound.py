"""Tests for the eight-mode compound realization and its excitons."""

import math

import numpy as np
import pytest

from conformal_states.algebra import random_domain_point
from conformal_states.basis import BasisIndex, cs_overlap, indices_up_to
from conformal_states.errors import InvalidIndex, InvalidScaleDimension
from conformal_states.fock.compound import (
    compound_basis,
    compound_ops_8mode,
    constituent_helicity_residual,
    constituent_mass_residual,
    constraint_operators,
    constraint_residual,
    exchange,
    exchange_parity,
    exciton_commutator_expectation,
    exciton_cs,
    exciton_order_expansion,
    exciton_order_term,
    exciton_series_state,
    fock_generator_row,
    isomorphism_residual,
    lowest_weight,
    mass_spectrum_action,
    occupancy_constraints,
    total_pauli_lubanski_norm,
)
from conformal_states.fock.vector import FockVector

BASE = ("D", "P0", "P1", "P2", "P3", "K0", "K1", "K2", "K3", "M01", "M02", "M03", "M12", "M13", "M23")


class TestLowestWeight:
    """Tests for the lowest-weight compound state."""

    @pytest.mark.parametrize("lam", [2, 3, 4, 5])
    def test_amplitudes(self, lam):
        """|phi0> has amplitude (-1)^k / sqrt(lam - 1) on b-occupations (lam-2-k, k, k, lam-2-k)."""
        state = lowest_weight(lam)
        expected = FockVector(
            8,
            {
                (0, 0, 0, 0, lam - 2 - k, k, k, lam - 2 - k): (-1) ** k / math.sqrt(lam - 1)
                for k in range(lam - 1)
            },
        )
        assert state.max_abs_diff(expected) < 1e-12

    def test_dilation_weight(self):
        """D |phi0> = lambda |phi0>."""
        state = lowest_weight(4)
        assert compound_ops_8mode().total["D"](state).max_abs_diff(state * 4) < 1e-12

    def test_rejects_small_lambda(self):
        """The lowest weight needs lambda >= 2."""
        with pytest.raises(InvalidScaleDimension):
            lowest_weight(1)


class TestCompoundBasis:
    """Tests for the compound basis states."""

    @pytest.mark.parametrize("lam", [3, 4])
    def test_orthonormality(self, lam):
        """The compound states of degree <= 2 are orthonormal."""
        states = [compound_basis(idx) for idx in indices_up_to(2, lam)]
        gram = np.array([[a.inner(b) for b in states] for a in states])
        assert np.max(np.abs(gram - np.eye(len(states)))) < 1e-12

    @pytest.mark.parametrize("lam", [2, 3, 4])
    def test_exchange_parity(self, lam):
        """Swapping the constituents multiplies every state by (-1)^lambda."""
        for idx in indices_up_to(2, lam):
            assert exchange_parity(idx) == pytest.approx((-1) ** lam)
            state = compound_basis(idx)
            assert exchange(state).max_abs_diff(state * (-1) ** lam) < 1e-12

    def test_constraints_annihilate(self):
        """Every entry of Z^dag Gamma Z - (lambda - 4) vanishes on the physical states."""
        assert len(constraint_operators(5)) == 4
        for idx in indices_up_to(2, 5):
            assert constraint_residual(idx) < 1e-12

    def test_occupancy(self):
        """Charges, imbalances and dilation are read off the occupation numbers."""
        idx = BasisIndex(4, 1, 1, 1, -1)
        report = occupancy_constraints(compound_basis(idx), 4, idx)
        assert report.passed
        assert report.records
        assert all(r.charges == (2, 2) and r.dilation == 7 for r in report.records)

    def test_occupancy_flags_wrong_charge(self):
        """A tuple with unbalanced charges fails."""
        report = occupancy_constraints(FockVector.basis((1, 0, 0, 0, 0, 0, 0, 0)), 4)
        assert not report.passed
        assert report.failures[0].charges == (-1, 0)

    def test_occupancy_needs_eight_modes(self):
        """Only eight-mode vectors are accepted."""
        with pytest.raises(InvalidIndex):
            occupancy_constraints(FockVector.vacuum(4), 4)


class TestCrossModel:
    """Tests comparing the compound realization with the analytic model."""

    def test_acceleration_on_lowest_weight(self):
        """K^0 |phi0> = -sqrt(lambda)(|1/2,0,1/2,1/2> + |1/2,0,-1/2,-1/2>)."""
        row, remainder = fock_generator_row("K0", BasisIndex(5, 0, 0, 0, 0))
        assert remainder < 1e-12
        assert row[BasisIndex(5, 1, 0, 1, 1)] == pytest.approx(-math.sqrt(5))
        assert row[BasisIndex(5, 1, 0, -1, -1)] == pytest.approx(-math.sqrt(5))
        assert len(row) == 2

    @pytest.mark.parametrize("name", BASE)
    def test_isomorphism(self, name):
        """Fock rows equal the closed-form matrix elements."""
        for idx in indices_up_to(2, 3):
            assert isomorphism_residual(name, idx) < 1e-10

    def test_mass_spectrum(self):
        """P.P lowers m with coefficient 4 sqrt(24) at (j=0, m=1, lambda=4)."""
        result = mass_spectrum_action(BasisIndex(4, 0, 1, 0, 0))
        assert result.target == BasisIndex(4, 0, 0, 0, 0)
        assert result.fock_coefficient == pytest.approx(4 * math.sqrt(24))
        assert result.residual < 1e-10

    def test_mass_spectrum_at_lowest_mass(self):
        """States with m = 0 are massless."""
        result = mass_spectrum_action(BasisIndex(4, 1, 0, 1, 1))
        assert result.target is None
        assert result.residual < 1e-12

    @pytest.mark.parametrize("lam", [2, 3, 4])
    def test_constituents(self, lam):
        """Each constituent is massless with helicity (lambda - 2)/2; the compound has no spin."""
        for idx in indices_up_to(1, lam):
            assert constituent_helicity_residual(idx) < 1e-10
            assert constituent_mass_residual(idx) < 1e-10
            assert total_pauli_lubanski_norm(idx) < 1e-10

    def test_constituent_label(self):
        """Constituents are numbered 1 and 2."""
        with pytest.raises(InvalidIndex):
            compound_ops_8mode().helicity(3)


class TestExcitons:
    """Tests for exciton coherent states."""

    def test_orders_match_basis_expansion(self):
        """(-A)^n / n! |phi0> = sum phi_idx(Z) |idx> over degree n."""
        Z = random_domain_point(np.random.default_rng(21), 0.3)
        for n in range(4):
            gap = exciton_order_term(Z, 3, n).max_abs_diff(exciton_order_expansion(Z, 3, n))
            assert gap < 1e-12

    def test_exponential_matches_basis_series(self):
        """The exciton state equals its basis expansion at equal cutoff."""
        Z = random_domain_point(np.random.default_rng(23), 0.25)
        assert exciton_cs(Z, 3, 3).max_abs_diff(exciton_series_state(Z, 3, 3)) < 1e-12

    def test_overlap(self):
        """<ex(Z)|ex(Z')> reproduces the coherent-state overlap up to truncation."""
        rng = np.random.default_rng(22)
        Z, Zp = random_domain_point(rng, 0.15), random_domain_point(rng, 0.15)
        fock = exciton_cs(Z, 4, 6).inner(exciton_cs(Zp, 4, 6))
        assert abs(fock - cs_overlap(Zp, Z, 4)) < 1e-6

    def test_commutator_expectation(self):
        """<[K^mu, P^mu]> / (2(lambda - 2)) = 2 eta_mumu (lambda + n) / (2(lambda - 2))."""
        idx = BasisIndex(6, 0, 0, 0, 0)
        fock, closed = exciton_commutator_expectation(idx, 1)
        assert closed == pytest.approx(-1.5)
        assert fock == pytest.approx(closed)
        fock, closed = exciton_commutator_expectation(idx, 0)
        assert fock == pytest.approx(1.5)

    def test_commutator_needs_lambda_above_two(self):
        """Exciton operators are undefined at lambda = 2."""
        with pytest.raises(InvalidScaleDimension):
            exciton_commutator_expectation(BasisIndex(2, 0, 0, 0, 0), 0)
