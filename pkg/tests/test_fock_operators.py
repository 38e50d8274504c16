"""Tests for Fock vectors, boson bilinears and the small oscillator realizations."""

import logging

import numpy as np
import pytest

from conformal_states.errors import DomainViolation, InvalidIndex, ModeMismatch
from conformal_states.fock.ladder import (
    conformal_ops_4mode,
    helicity_operator_4mode,
    helicity_residual,
    ladder_basis,
    ladder_cs,
    mass_squared_4mode,
    series_vs_exponential,
)
from conformal_states.fock.operators import (
    Ladder,
    QuadraticOperator,
    apply,
    commutator_apply,
    levi_civita,
    quanta_excess,
)
from conformal_states.fock.su11 import (
    lowest_weight_check,
    su11_basis,
    su11_cs,
    su11_cs_exponential,
    su11_generators,
    su11_jordan_schwinger,
    su11_overlap_tail,
)
from conformal_states.fock.vector import FockVector


class TestFockVector:
    """Tests for sparse Fock vectors."""

    def test_inner_is_antilinear_in_left_argument(self):
        """<c v|w> = conj(c) <v|w>."""
        v = FockVector.basis((1, 0)) + FockVector.basis((0, 2), 2j)
        assert (v * 1j).inner(v) == pytest.approx(-1j * v.inner(v))
        assert v.norm() == pytest.approx(np.sqrt(5))

    def test_mode_mismatch(self):
        """Vectors on different mode counts do not combine."""
        with pytest.raises(ModeMismatch):
            FockVector.vacuum(2) + FockVector.vacuum(3)

    def test_permute_modes(self):
        """Quanta of mode i move to mode permutation[i]."""
        v = FockVector.basis((3, 0, 1))
        assert v.permute_modes((2, 0, 1)).support() == [(0, 1, 3)]

    def test_json_round_trip(self):
        """JSON keeps amplitudes and mode count."""
        v = FockVector.basis((1, 2), 0.5 - 0.25j)
        assert FockVector.from_json(v.to_json()).max_abs_diff(v) == 0.0

    def test_json_load_is_logged(self, caplog):
        """Loading a vector logs its size under the module logger."""
        text = FockVector.basis((1, 2)).to_json()
        with caplog.at_level(logging.DEBUG, logger="conformal_states.fock.vector"):
            FockVector.from_json(text)
        assert any(r.name == "conformal_states.fock.vector" for r in caplog.records)


class TestQuadraticOperator:
    """Tests for normal-ordered bilinears."""

    def test_pair_commutator(self):
        """[a a, a^dag a^dag] = 4N + 2."""
        lower = QuadraticOperator.product(Ladder(0, False), Ladder(0, False), 1)
        raise_ = QuadraticOperator.product(Ladder(0, True), Ladder(0, True), 1)
        state = FockVector.basis((3,))
        gap = commutator_apply(lower, raise_, state)
        assert gap.max_abs_diff(state * 14) < 1e-12

    def test_anti_normal_product(self):
        """a a^dag = N + 1."""
        op = QuadraticOperator.product(Ladder(0, False), Ladder(0, True), 1)
        state = FockVector.basis((2,))
        assert op(state).max_abs_diff(state * 3) < 1e-12

    def test_adjoint_swaps_pair_creation(self):
        """(a^dag b^dag)^dag = a b."""
        gens = su11_generators()
        assert gens.q_plus.adjoint().terms == gens.q_minus.terms

    def test_apply_checks_modes(self):
        """Operators and vectors must share their mode count."""
        with pytest.raises(ModeMismatch):
            apply(QuadraticOperator.number(0, 2), FockVector.vacuum(3))

    def test_levi_civita(self):
        """eps_0123 = 1, odd permutations flip the sign, repeats vanish."""
        assert levi_civita((0, 1, 2, 3)) == 1
        assert levi_civita((1, 0, 2, 3)) == -1
        assert levi_civita((0, 0, 2, 3)) == 0

    def test_quanta_excess(self):
        """2 kappa - 1 must be a non-negative integer."""
        assert quanta_excess(0.5) == 0
        assert quanta_excess(2.5) == 4
        with pytest.raises(InvalidIndex):
            quanta_excess(0.25)


class TestSu11:
    """Tests for the two-mode su(1,1) realization."""

    @pytest.mark.parametrize("kappa", [0.5, 1.0, 2.5])
    def test_weights(self, kappa):
        """Q3 |kappa, n> = (kappa + n)|kappa, n> and Q0 = kappa - 1."""
        gens = su11_generators()
        for n in range(4):
            state = su11_basis(kappa, n)
            assert gens.q3(state).max_abs_diff(state * (kappa + n)) < 1e-12
            assert gens.q0(state).max_abs_diff(state * (kappa - 1)) < 1e-12

    def test_jordan_schwinger_q0(self):
        """(1/2) Z^dag sigma_0 Gamma Z reproduces Q0."""
        state = su11_basis(1.5, 2)
        assert su11_jordan_schwinger(0)(state).max_abs_diff(su11_generators().q0(state)) < 1e-12

    def test_lowest_weight(self):
        """Q- annihilates |kappa, 0>."""
        assert lowest_weight_check(2.0) == 0.0

    def test_series_matches_exponential(self):
        """Both coherent-state constructions agree term by term."""
        z = 0.3 - 0.2j
        assert su11_cs(1.5, z, 12).max_abs_diff(su11_cs_exponential(1.5, z, 12)) < 1e-12

    def test_truncated_norm(self):
        """The squared norm of the truncated state is one minus the tail."""
        z = 0.3
        state = su11_cs(1.0, z, 40)
        assert state.norm() ** 2 == pytest.approx(1 - su11_overlap_tail(1.0, z, 40))
        assert su11_overlap_tail(1.0, z, 40) < 1e-12

    def test_coherent_state_logs_cutoff(self, caplog):
        """Truncation orders are logged at DEBUG under the module logger."""
        with caplog.at_level(logging.DEBUG, logger="conformal_states.fock.su11"):
            su11_cs(1.0, 0.2, 5)
        assert any(r.name == "conformal_states.fock.su11" and "level 5" in r.getMessage() for r in caplog.records)

    def test_negative_orbit_swaps_modes(self):
        """The negative orbit puts the excess quanta in mode a."""
        assert su11_basis(1.5, 1, negative=True).support() == [(3, 1)]

    def test_half_integer_excess_rejected(self):
        """2 kappa - 1 must be an integer."""
        with pytest.raises(InvalidIndex):
            su11_basis(0.75, 0)

    def test_point_outside_disk(self):
        """Coherent states need |z| < 1."""
        with pytest.raises(DomainViolation):
            su11_cs(1.0, 1.0, 3)


class TestLadder:
    """Tests for the four-mode ladder representation."""

    @pytest.mark.parametrize("kappa", [0.5, 1.0, 1.5])
    @pytest.mark.parametrize("levels", [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
    def test_helicity(self, kappa, levels):
        """W^mu = S P^mu on every ladder state."""
        assert helicity_residual(kappa, levels) < 1e-10

    def test_helicity_eigenvalue(self):
        """S |kappa; n1, n2, n3> = (kappa - 1/2 + n3)|...>."""
        state = ladder_basis(1.5, (1, 0, 2))
        assert helicity_operator_4mode()(state).max_abs_diff(state * 3.0) < 1e-12

    def test_linear_casimir(self):
        """X00 = 2 kappa - 3 + 2 n3."""
        state = ladder_basis(1.0, (0, 2, 1))
        assert conformal_ops_4mode()["I"](state).max_abs_diff(state * 1.0) < 1e-12

    def test_massless(self):
        """P.P annihilates the ladder states."""
        for levels in ((0, 0, 0), (1, 0, 1), (0, 2, 0)):
            assert mass_squared_4mode(ladder_basis(1.0, levels)).norm() < 1e-10

    def test_coherent_state_constructions_agree(self):
        """Series and exponential forms coincide at equal cutoff."""
        assert series_vs_exponential(1.0, (0.2, -0.1j, 0.15), 6) < 1e-12

    def test_negative_orbit(self):
        """The negative orbit maps a1, a2, b1, b2 onto b2, b1, a2, a1."""
        assert ladder_basis(1.0, (0, 0, 0), negative=True).support() == [(1, 0, 0, 0)]

    def test_point_outside_ball(self):
        """|z|^2 must stay below one."""
        with pytest.raises(DomainViolation):
            ladder_cs(1.0, (0.8, 0.8, 0.0), 2)
