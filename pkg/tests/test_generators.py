"""Tests for the generator action on the analytic model and the coherent-state symbols."""

import math

import numpy as np
import pytest

from conformal_states.algebra import random_domain_point
from conformal_states.basis import BasisIndex, basis_poly, expand_in_basis, indices_up_to
from conformal_states.errors import DomainViolation, InvalidSpin
from conformal_states.generators import (
    QUADRATIC_NAMES,
    apply_generator_diff,
    casimir2,
    coeff_C,
    commutator_residual,
    composed_quadratic,
    generator_matrix_elements,
    quadratic_action,
    series_expectation,
    symbol,
    symbol_pairing_residual,
)
from conformal_states.polynomial import Polynomial

BASE = ("D", "P0", "P1", "P2", "P3", "K0", "K1", "K2", "K3", "M01", "M02", "M03", "M12", "M13", "M23")


def _gap(left, right):
    keys = set(left) | set(right)
    return max((abs(left.get(k, 0) - right.get(k, 0)) for k in keys), default=0.0)


class TestDifferentialAction:
    """Tests for the generators as differential operators."""

    def test_dilation_on_constant(self):
        """D 1 = lambda."""
        image = apply_generator_diff("D", Polynomial.constant(1.0), 5)
        assert image.max_abs_diff(Polynomial.constant(5.0)) < 1e-14

    def test_acceleration_on_constant(self):
        """K^0 1 = -2 lambda z0."""
        image = apply_generator_diff("K0", Polynomial.constant(1.0), 3)
        assert image.max_abs_diff(Polynomial.variable(0) * -6.0) < 1e-14

    def test_unknown_name(self):
        """Unknown generator names raise KeyError."""
        with pytest.raises(KeyError):
            apply_generator_diff("X9", Polynomial.constant(1.0), 4)

    @pytest.mark.parametrize("pair", [("D", "P0"), ("D", "K2"), ("K0", "P0"), ("K1", "P2"), ("M01", "P1")])
    def test_commutators_follow_structure_constants(self, pair):
        """[G1, G2] phi matches the u(2,2) structure constants."""
        for idx in indices_up_to(2, 4):
            assert commutator_residual(*pair, basis_poly(idx), 4) < 1e-10


class TestMatrixElements:
    """Tests for the closed-form matrix elements."""

    def test_dilation_eigenvalue(self):
        """D phi = (2j + 2m + lambda) phi."""
        idx = BasisIndex(5, 2, 1, 0, -2)
        assert generator_matrix_elements("D", idx).as_dict() == {idx: 9}

    def test_acceleration_on_lowest_weight(self):
        """K^0 phi_0 = -sqrt(lambda) (phi_(1/2,0,1/2,1/2) + phi_(1/2,0,-1/2,-1/2))."""
        row = generator_matrix_elements("K0", BasisIndex(4, 0, 0, 0, 0)).as_dict()
        expected = {BasisIndex(4, 1, 0, 1, 1): -2.0, BasisIndex(4, 1, 0, -1, -1): -2.0}
        assert _gap(row, expected) < 1e-12

    @pytest.mark.parametrize("name", BASE)
    def test_rows_match_differential_action(self, name):
        """Closed-form rows agree with the expanded differential action."""
        for idx in indices_up_to(2, 3):
            oracle = expand_in_basis(apply_generator_diff(name, basis_poly(idx), 3), 3)
            assert _gap(oracle, generator_matrix_elements(name, idx).as_dict()) < 1e-10

    def test_translation_square_row(self):
        """P.P lowers m with coefficient 4 sqrt(m (2j+m+1)(lambda+m-2)(lambda+2j+m-1))."""
        row = quadratic_action("PP", BasisIndex(4, 0, 1, 0, 0)).as_dict()
        target = BasisIndex(4, 0, 0, 0, 0)
        assert list(row) == [target]
        assert row[target] == pytest.approx(4 * math.sqrt(24))

    @pytest.mark.parametrize("name", ["PP", "KK", "KP", "PK", "MM", "DD"])
    def test_quadratics_compose_from_linear_rows(self, name):
        """Every contracted quadratic equals the composition of its linear rows."""
        for idx in indices_up_to(2, 5):
            assert _gap(composed_quadratic(name, idx), quadratic_action(name, idx).as_dict()) < 1e-10

    @pytest.mark.parametrize("lam", [2, 3, 4, 7])
    def test_casimir_eigenvalue(self, lam):
        """The quadratic Casimir is lambda(lambda - 4) on every basis vector."""
        for idx in indices_up_to(4, lam):
            assert casimir2(idx) == pytest.approx(lam * (lam - 4), abs=1e-10)

    def test_coeff_c_singular_at_spin_zero(self):
        """coeff_C has no value at j = 0."""
        with pytest.raises(InvalidSpin):
            coeff_C(0, 1, 0, 0, 4)


class TestSymbols:
    """Tests for the closed-form coherent-state symbols."""

    def test_dilation_symbol_at_origin(self):
        """<0|D|0> = lambda."""
        assert symbol("D", np.zeros((2, 2)), 6) == pytest.approx(6.0)

    @pytest.mark.parametrize("name", ("D", "P0", "K3", "M12") + QUADRATIC_NAMES)
    def test_closed_form_matches_series(self, name):
        """Closed forms agree with the truncated basis expansion."""
        Z = random_domain_point(np.random.default_rng(8), 0.2)
        closed = symbol(name, Z, 4)
        series = series_expectation(name, Z, 4, 16)
        assert abs(closed - series) < 1e-6

    def test_quadratic_names_are_not_read_as_components(self):
        """PP, KK, PK and KP dispatch to their contracted forms; KP - PK = 8 D and KK = conj(PP)."""
        Z = random_domain_point(np.random.default_rng(5), 0.3)
        values = {name: symbol(name, Z, 5) for name in QUADRATIC_NAMES}
        assert values["KP"] - values["PK"] == pytest.approx(8 * symbol("D", Z, 5))
        assert values["KK"] == pytest.approx(np.conj(values["PP"]))

    def test_translation_pairing(self):
        """<K^mu> = -eta_mumu conj(<P^mu>)."""
        Z = random_domain_point(np.random.default_rng(4), 0.5)
        for mu in range(4):
            assert symbol_pairing_residual(mu, Z, 5) < 1e-10

    def test_symbol_outside_domain(self):
        """Symbols live on the interior of the domain."""
        with pytest.raises(DomainViolation):
            symbol("D", 2 * np.eye(2), 4)
