"""Eight-mode compound realization: two constrained massless constituents and their excitons.

Modes are ordered (a0, a1, a2, a3, b0, b1, b2, b3). The creation operators sit in the
matrices a^dag = [[a0, a2], [a1, a3]] and b^dag = [[b0, b2], [b1, b3]], so the columns of
Z = [[a^dag], [b]] are the constituents Z1 = (a0^dag, a1^dag, b0, b2) and
Z2 = (a2^dag, a3^dag, b1, b3).
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Iterable, Optional

import numpy as np

from ..algebra import LINEAR_GENERATORS, _as_matrix, generator_matrix, in_cartan_domain
from ..basis import (
    BasisIndex,
    basis_value,
    delta,
    det_power,
    indices_of_degree,
    wigner_entry_polynomial,
)
from ..errors import DomainViolation, InvalidIndex, InvalidScaleDimension
from ..generators import generator_matrix_elements, quadratic_action
from ..polynomial import Polynomial
from ..wigner import q_values
from .ladder import lorentz_ops, translation_ops
from .operators import Ladder, QuadraticOperator, jordan_schwinger, pauli_lubanski_apply
from .vector import FockVector, Occupation, vector_sum

logger = logging.getLogger(__name__)

N_MODES = 8

#: Matrix entries (11, 12, 21, 22) of a^dag and b^dag as mode numbers.
A_ENTRY_MODES = (0, 2, 1, 3)
B_ENTRY_MODES = (4, 6, 5, 7)

CONSTITUENTS = (
    (Ladder(0, True), Ladder(1, True), Ladder(4, False), Ladder(6, False)),
    (Ladder(2, True), Ladder(3, True), Ladder(5, False), Ladder(7, False)),
)
COMPOUND_METRIC = (-1.0, -1.0, 1.0, 1.0)

#: Swap of the two constituents: a-rows (0,1) <-> (2,3), b-columns 4 <-> 5 and 6 <-> 7.
EXCHANGE = (2, 3, 0, 1, 5, 4, 7, 6)

_ETA = (1.0, -1.0, -1.0, -1.0)

#: Translations lower the polynomial degree by one, accelerations raise it.
DEGREE_SHIFT = {"P": -1, "K": 1}


# ---------------------------------------------------------------------------
# Operators


@dataclass(frozen=True)
class CompoundOperators:
    """Total generators tr(Z^dag X Gamma Z) and the per-constituent ones.

    `constituents[0]` and `constituents[1]` act on Z1 and Z2; every dict is keyed by
    generator name plus "I" for X00.
    """

    total: dict[str, QuadraticOperator]
    constituents: tuple[dict[str, QuadraticOperator], dict[str, QuadraticOperator]]

    def _ops(self, constituent: Optional[int]) -> dict[str, QuadraticOperator]:
        if constituent is None:
            return self.total
        if constituent not in (1, 2):
            raise InvalidIndex(f"Constituent must be 1 or 2, got {constituent}")
        return self.constituents[constituent - 1]

    def helicity(self, constituent: int) -> QuadraticOperator:
        """S_p = X00^(p)/2 + 1."""
        return self._ops(constituent)["I"] * 0.5 + QuadraticOperator.identity(N_MODES)

    def pauli_lubanski(self, mu: int, vector: FockVector, constituent: Optional[int] = None) -> FockVector:
        ops = self._ops(constituent)
        return pauli_lubanski_apply(lorentz_ops(ops), translation_ops(ops), mu, vector)

    def mass_squared(self, vector: FockVector, constituent: Optional[int] = None) -> FockVector:
        """P^mu P_mu of the compound or of one constituent."""
        ops = self._ops(constituent)
        out = FockVector.zero(N_MODES)
        for mu, eta in enumerate(_ETA):
            out = out + ops[f"P{mu}"](ops[f"P{mu}"](vector)) * eta
        return out


@lru_cache(maxsize=1)
def compound_ops_8mode() -> CompoundOperators:
    names = LINEAR_GENERATORS + ("I",)
    constituents = tuple(
        {name: jordan_schwinger(generator_matrix(name), column, COMPOUND_METRIC, N_MODES) for name in names}
        for column in CONSTITUENTS
    )
    total = {name: constituents[0][name] + constituents[1][name] for name in names}
    logger.debug(f"Built {len(total)} eight-mode generators")
    return CompoundOperators(total=total, constituents=constituents)


def constraint_operators(lam: int) -> dict[tuple[int, int], QuadraticOperator]:
    """Entries (c, d) of Z^dag Gamma Z - (lam - 4) 1; they annihilate the physical states."""
    out = {}
    for c in range(2):
        for d in range(2):
            op = QuadraticOperator(N_MODES)
            for r, weight in enumerate(COMPOUND_METRIC):
                op = op + QuadraticOperator.product(
                    CONSTITUENTS[c][r].adjoint, CONSTITUENTS[d][r], N_MODES, weight
                )
            if c == d:
                op = op - QuadraticOperator.identity(N_MODES, lam - 4)
            out[(c, d)] = op
    return out


# ---------------------------------------------------------------------------
# Basis states


@lru_cache(maxsize=None)
def _phi_normalization(two_j: int, m: int) -> float:
    return math.sqrt(Fraction(two_j + 1, math.factorial(m) * math.factorial(m + two_j + 1)))


def _operator_polynomial(two_j: int, m: int, two_q: int, two_qp: int) -> Polynomial:
    """Phi^{j,m}_{q q'} in the matrix entries."""
    return det_power(m) * wigner_entry_polynomial(two_j, two_q, two_qp) * _phi_normalization(two_j, m)


def _on_vacuum(a_poly: Polynomial, b_poly: Polynomial) -> dict[Occupation, complex]:
    """a_poly(a^dag) b_poly(b^dag)|0>; the creators commute so every monomial is unambiguous."""
    out: dict[Occupation, complex] = {}
    for a_exp, a_coeff in a_poly.terms.items():
        for b_exp, b_coeff in b_poly.terms.items():
            occ = [0] * N_MODES
            for mode, n in zip(A_ENTRY_MODES, a_exp):
                occ[mode] += n
            for mode, n in zip(B_ENTRY_MODES, b_exp):
                occ[mode] += n
            weight = math.sqrt(math.prod(math.factorial(n) for n in occ))
            key = tuple(occ)
            out[key] = out.get(key, 0) + a_coeff * b_coeff * weight
    return out


@lru_cache(maxsize=None)
def compound_basis(idx: BasisIndex) -> FockVector:
    """(2j+1)^{-1/2} sum_q Phi^{j,m}_{qa,q}(a^dag) Phi^{j,lam+m-2}_{q,qb}(b^dag)|0>."""
    b_power = idx.lam + idx.m - 2
    amplitudes: dict[Occupation, complex] = {}
    for two_q in q_values(idx.two_j):
        a_poly = _operator_polynomial(idx.two_j, idx.m, idx.two_qa, two_q)
        b_poly = _operator_polynomial(idx.two_j, b_power, two_q, idx.two_qb)
        for occ, amp in _on_vacuum(a_poly, b_poly).items():
            amplitudes[occ] = amplitudes.get(occ, 0) + amp
    return FockVector(N_MODES, amplitudes) / math.sqrt(idx.two_j + 1)


def lowest_weight(lam: int) -> FockVector:
    """|phi0> = det(b^dag)^{lam-2}|0> / ((lam-2)! sqrt(lam-1))."""
    if lam < 2:
        raise InvalidScaleDimension(f"Lowest weight needs lambda >= 2, got {lam}")
    return compound_basis(BasisIndex(lam, 0, 0, 0, 0))


def exchange(vector: FockVector) -> FockVector:
    """Swap the two constituents."""
    return vector.permute_modes(EXCHANGE)


def exchange_parity(idx: BasisIndex) -> float:
    """<idx|exchange|idx>; (-1)^lam on every basis state."""
    state = compound_basis(idx)
    return exchange(state).inner(state).real


def expand_in_compound_basis(
    vector: FockVector, lam: int, degrees: Iterable[int], tol: float = 1e-14
) -> tuple[dict[BasisIndex, complex], float]:
    """Projections onto the compound basis states of the given degrees, and the norm of what is left."""
    coeffs: dict[BasisIndex, complex] = {}
    remainder = vector
    candidates = [idx for d in sorted(set(degrees)) if d >= 0 for idx in indices_of_degree(d, lam)]
    for idx in candidates:
        state = compound_basis(idx)
        c = state.inner(vector)
        if abs(c) > tol:
            coeffs[idx] = c
            remainder = remainder - state * c
    return coeffs, remainder.norm()


# ---------------------------------------------------------------------------
# Occupation-number constraints


@dataclass(frozen=True)
class OccupancyRecord:
    occupation: Occupation
    charges: tuple[int, int]
    imbalances: tuple[int, int]
    dilation: float
    passed: bool

    def to_dict(self) -> dict[str, Any]:
        return {
            "occ": list(self.occupation),
            "charges": list(self.charges),
            "imbalances": list(self.imbalances),
            "dilation": self.dilation,
            "passed": self.passed,
        }


@dataclass(frozen=True)
class ConstraintReport:
    """Per-tuple check of the constituent charges and, when an index is given, its labels."""

    lam: int
    index: Optional[BasisIndex]
    records: list[OccupancyRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    @property
    def failures(self) -> list[OccupancyRecord]:
        return [r for r in self.records if not r.passed]

    def to_dict(self) -> dict[str, Any]:
        return {
            "lambda": self.lam,
            "index": self.index.to_dict() if self.index else None,
            "passed": self.passed,
            "tuples": [r.to_dict() for r in self.records],
        }


def occupancy_constraints(vector: FockVector, lam: int, idx: Optional[BasisIndex] = None) -> ConstraintReport:
    """Check every supported tuple.

    Always: (n_b0 + n_b2) - (n_a0 + n_a1) = lam - 2 = (n_b1 + n_b3) - (n_a2 + n_a3).
    With an index: 2qa and 2qb as row/column imbalances and 2 + sum(n)/2 = 2j + 2m + lam.
    """
    if vector.n_modes != N_MODES:
        raise InvalidIndex(f"Occupancy constraints need {N_MODES} modes, got {vector.n_modes}")
    records = []
    for occ in vector.support():
        a0, a1, a2, a3, b0, b1, b2, b3 = occ
        charges = (b0 + b2 - a0 - a1, b1 + b3 - a2 - a3)
        imbalances = (a0 + a2 - a1 - a3, b0 + b1 - b2 - b3)
        dilation = 2 + sum(occ) / 2
        passed = charges == (lam - 2, lam - 2)
        if idx is not None:
            passed = (
                passed
                and imbalances == (idx.two_qa, idx.two_qb)
                and dilation == idx.degree + idx.lam
            )
        records.append(OccupancyRecord(occ, charges, imbalances, dilation, passed))
    return ConstraintReport(lam=lam, index=idx, records=records)


def constraint_residual(idx: BasisIndex) -> float:
    """Largest norm of a constraint operator applied to compound_basis(idx)."""
    state = compound_basis(idx)
    return max(op(state).norm() for op in constraint_operators(idx.lam).values())


# ---------------------------------------------------------------------------
# Cross-model checks


def fock_generator_row(name: str, idx: BasisIndex) -> tuple[dict[BasisIndex, complex], float]:
    """Fock image of compound_basis(idx) under a linear generator, expanded in the basis."""
    image = compound_ops_8mode().total[name](compound_basis(idx))
    shift = DEGREE_SHIFT.get(name[0], 0)
    return expand_in_compound_basis(image, idx.lam, [idx.degree + shift])


def isomorphism_residual(name: str, idx: BasisIndex) -> float:
    """Gap between the Fock row and the closed-form matrix elements of one generator."""
    fock, remainder = fock_generator_row(name, idx)
    analytic = generator_matrix_elements(name, idx).as_dict()
    keys = set(fock) | set(analytic)
    gap = max((abs(fock.get(k, 0) - analytic.get(k, 0)) for k in keys), default=0.0)
    return max(gap, remainder)


@dataclass(frozen=True)
class MassSpectrumResult:
    source: BasisIndex
    target: Optional[BasisIndex]
    fock_coefficient: complex
    analytic_coefficient: complex
    residual: float

    def to_dict(self) -> dict[str, Any]:
        return {
            "source": self.source.to_dict(),
            "target": self.target.to_dict() if self.target else None,
            "fock": [self.fock_coefficient.real, self.fock_coefficient.imag],
            "analytic": [self.analytic_coefficient.real, self.analytic_coefficient.imag],
            "residual": self.residual,
        }


def mass_spectrum_action(idx: BasisIndex) -> MassSpectrumResult:
    """P^mu P_mu on compound_basis(idx), compared with the analytic P^2 row."""
    image = compound_ops_8mode().mass_squared(compound_basis(idx))
    target = idx.shifted(dm=-1)
    analytic = dict(quadratic_action("PP", idx).targets)
    if target is None:
        return MassSpectrumResult(idx, None, 0j, 0j, image.norm())
    fock = compound_basis(target).inner(image)
    expected = analytic.get(target, 0j)
    leftover = (image - compound_basis(target) * fock).norm()
    return MassSpectrumResult(idx, target, fock, expected, max(abs(fock - expected), leftover))


def constituent_helicity_residual(idx: BasisIndex) -> float:
    """max |W_p^mu v - ((lam - 2)/2) P_p^mu v| over both constituents and all mu."""
    ops = compound_ops_8mode()
    state = compound_basis(idx)
    helicity = (idx.lam - 2) / 2
    residual = 0.0
    for p in (1, 2):
        for mu in range(4):
            lhs = ops.pauli_lubanski(mu, state, p)
            rhs = ops.constituents[p - 1][f"P{mu}"](state) * helicity
            residual = max(residual, lhs.max_abs_diff(rhs))
    return residual


def constituent_mass_residual(idx: BasisIndex) -> float:
    ops = compound_ops_8mode()
    state = compound_basis(idx)
    return max(ops.mass_squared(state, p).norm() for p in (1, 2))


def total_pauli_lubanski_norm(idx: BasisIndex) -> float:
    """The compound carries no spin: W^mu vanishes on every basis state."""
    ops = compound_ops_8mode()
    state = compound_basis(idx)
    return max(ops.pauli_lubanski(mu, state).norm() for mu in range(4))


# ---------------------------------------------------------------------------
# Excitons


def exciton_creation(Z: Any) -> QuadraticOperator:
    """-A = sum_uv Z_uv (a^dag b^dag)_uv, the pair-creation operator weighted by Z."""
    Z = _as_matrix(Z)
    op = QuadraticOperator(N_MODES)
    for u in range(2):
        for v in range(2):
            if Z[u, v] == 0:
                continue
            for w in range(2):
                op = op + QuadraticOperator.product(
                    Ladder(A_ENTRY_MODES[2 * u + w], True),
                    Ladder(B_ENTRY_MODES[2 * w + v], True),
                    N_MODES,
                    Z[u, v],
                )
    return op


def _interior(Z: Any) -> np.ndarray:
    Z = _as_matrix(Z)
    if not in_cartan_domain(Z):
        raise DomainViolation("Exciton coherent states need an interior point")
    return Z


def exciton_order_term(Z: Any, lam: int, n: int) -> FockVector:
    """(-A)^n / n! |phi0>."""
    creation = exciton_creation(Z)
    term = lowest_weight(lam)
    for k in range(1, n + 1):
        term = creation(term) / k
    return term


def exciton_order_expansion(Z: Any, lam: int, n: int) -> FockVector:
    """sum over indices of degree n of phi_idx(Z) compound_basis(idx)."""
    Z = _as_matrix(Z)
    return vector_sum(
        (compound_basis(idx) * complex(basis_value(idx, Z)) for idx in indices_of_degree(n, lam)),
        N_MODES,
    )


def exciton_cs(Z: Any, lam: int, cutoff: int) -> FockVector:
    """det(1 - Z^dag Z)^{lam/2} sum_{n <= cutoff} (-A)^n / n! |phi0>."""
    Z = _interior(Z)
    creation = exciton_creation(Z)
    term = lowest_weight(lam)
    total = term
    for n in range(1, cutoff + 1):
        term = creation(term) / n
        total = total + term
    logger.debug(f"Exciton state at order {cutoff}: {len(total.amplitudes)} occupation tuples")
    return total * delta(Z) ** (lam / 2)


def exciton_series_state(Z: Any, lam: int, cutoff: int) -> FockVector:
    """The same state assembled from the basis expansion with holomorphic coefficients."""
    Z = _interior(Z)
    total = vector_sum((exciton_order_expansion(Z, lam, n) for n in range(cutoff + 1)), N_MODES)
    return total * delta(Z) ** (lam / 2)


def exciton_commutator_expectation(idx: BasisIndex, mu: int) -> tuple[float, float]:
    """<[E_mu^dag, E_mu]> with E^dag = K_mu / sqrt(2(lam-2)): Fock value and 2 eta (lam + n_e)/(2(lam-2))."""
    if idx.lam <= 2:
        raise InvalidScaleDimension(f"Exciton operators need lambda > 2, got {idx.lam}")
    ops = compound_ops_8mode().total
    state = compound_basis(idx)
    K, P = ops[f"K{mu}"], ops[f"P{mu}"]
    scale = 2 * (idx.lam - 2)
    fock = state.inner(K(P(state)) - P(K(state))).real / scale
    closed = 2 * _ETA[mu] * (idx.lam + idx.degree) / scale
    return fock, closed
