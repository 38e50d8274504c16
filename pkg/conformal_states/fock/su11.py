"""Two-mode realization of su(1,1) and its coherent states."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from scipy.special import binom

from ..algebra import SIGMA_LOWER
from ..errors import DomainViolation, InvalidIndex
from .operators import Ladder, QuadraticOperator, jordan_schwinger, quanta_excess
from .vector import FockVector, vector_sum

logger = logging.getLogger(__name__)

A, B = 0, 1

#: Z = (a^dag, b) with Gamma = diag(-1, 1).
SU11_SPINOR = (Ladder(A, True), Ladder(B, False))
SU11_METRIC = (-1.0, 1.0)


@dataclass(frozen=True)
class Su11Generators:
    q3: QuadraticOperator
    q_plus: QuadraticOperator
    q_minus: QuadraticOperator
    q0: QuadraticOperator


def su11_generators() -> Su11Generators:
    """Q3 = (a^dag a + b^dag b + 1)/2, Q+ = a^dag b^dag, Q- = ab, Q0 = (b^dag b - a a^dag)/2."""
    q3 = (QuadraticOperator.number(A, 2) + QuadraticOperator.number(B, 2) + QuadraticOperator.identity(2)) * 0.5
    q_plus = QuadraticOperator.product(Ladder(A, True), Ladder(B, True), 2)
    q_minus = QuadraticOperator.product(Ladder(A, False), Ladder(B, False), 2)
    q0 = (
        QuadraticOperator.number(B, 2) - QuadraticOperator.product(Ladder(A, False), Ladder(A, True), 2)
    ) * 0.5
    return Su11Generators(q3=q3, q_plus=q_plus, q_minus=q_minus, q0=q0)


def su11_jordan_schwinger(mu: int) -> QuadraticOperator:
    """Q_mu = (1/2) Z^dag sigma_mu Gamma Z."""
    return jordan_schwinger(SIGMA_LOWER[mu] * 0.5, SU11_SPINOR, SU11_METRIC, 2)


def _level_weight(kappa: float, n: int) -> float:
    return float(np.sqrt(binom(2 * kappa + n - 1, n)))


def su11_basis(kappa: float, n: int, negative: bool = False) -> FockVector:
    """|kappa, n> = |n>_a |n + 2 kappa - 1>_b; `negative` swaps the roles of a and b."""
    if n < 0:
        raise InvalidIndex(f"Level must be non-negative, got {n}")
    occ = (n, n + quanta_excess(kappa))
    return FockVector.basis(occ[::-1] if negative else occ)


def su11_cs(kappa: float, z: complex, cutoff: int, negative: bool = False) -> FockVector:
    """(1 - |z|^2)^kappa sum_{n <= cutoff} sqrt(C(2 kappa + n - 1, n)) z^n |kappa, n>."""
    if not abs(z) < 1:
        raise DomainViolation(f"su(1,1) coherent states need |z| < 1, got {z}")
    quanta_excess(kappa)
    prefactor = (1 - abs(z) ** 2) ** kappa
    logger.debug(f"su(1,1) coherent state kappa={kappa} truncated at level {cutoff}")
    return vector_sum(
        (su11_basis(kappa, n, negative) * (prefactor * _level_weight(kappa, n) * z**n) for n in range(cutoff + 1)),
        2,
    )


def su11_cs_exponential(kappa: float, z: complex, cutoff: int) -> FockVector:
    """(1 - |z|^2)^kappa exp(z Q+)|kappa, 0> with the exponential truncated at order cutoff."""
    if not abs(z) < 1:
        raise DomainViolation(f"su(1,1) coherent states need |z| < 1, got {z}")
    q_plus = su11_generators().q_plus
    term = su11_basis(kappa, 0)
    total = term
    for n in range(1, cutoff + 1):
        term = q_plus(term) * (z / n)
        total = total + term
    return total * (1 - abs(z) ** 2) ** kappa


def su11_overlap_tail(kappa: float, z: complex, cutoff: int) -> float:
    """Norm lost by truncating |z> at cutoff."""
    levels = np.arange(cutoff + 1)
    kept = sum(_level_weight(kappa, int(n)) ** 2 * abs(z) ** (2 * n) for n in levels)
    return float(1 - (1 - abs(z) ** 2) ** (2 * kappa) * kept)


def lowest_weight_check(kappa: float) -> float:
    """|Q- |kappa, 0>|, zero for the lowest-weight state."""
    return su11_generators().q_minus(su11_basis(kappa, 0)).norm()

