"""Four-mode ladder representation of u(2,2) and its coherent states."""

from __future__ import annotations

import logging
import math
from functools import lru_cache
from typing import Sequence

from scipy.special import binom

from ..algebra import LINEAR_GENERATORS, LORENTZ_PAIRS, generator_matrix
from ..errors import DomainViolation, InvalidIndex
from .operators import Ladder, QuadraticOperator, jordan_schwinger, pauli_lubanski_apply, quanta_excess
from .vector import FockVector, vector_sum

logger = logging.getLogger(__name__)

A1, A2, B1, B2 = range(4)

#: Z = (a1^dag, a2^dag, b1, b2).
LADDER_SPINOR = (Ladder(A1, True), Ladder(A2, True), Ladder(B1, False), Ladder(B2, False))
LADDER_METRIC = (-1.0, -1.0, 1.0, 1.0)

#: Negative-helicity orbit: quanta of a1, a2, b1, b2 move to b2, b1, a2, a1.
NEGATIVE_SWAP = (B2, B1, A2, A1)


@lru_cache(maxsize=1)
def conformal_ops_4mode() -> dict[str, QuadraticOperator]:
    """All generators Z^dag X Gamma Z, keyed by generator name plus "I" for X00."""
    ops = {
        name: jordan_schwinger(generator_matrix(name), LADDER_SPINOR, LADDER_METRIC, 4)
        for name in LINEAR_GENERATORS + ("I",)
    }
    logger.debug(f"Built {len(ops)} four-mode generators")
    return ops


def helicity_operator_4mode() -> QuadraticOperator:
    """S = X00/2 + 1."""
    return conformal_ops_4mode()["I"] * 0.5 + QuadraticOperator.identity(4)


def ladder_basis(kappa: float, levels: Sequence[int], negative: bool = False) -> FockVector:
    """Normalized a1^dag^n1 a2^dag^n2 b1^dag^n3 b2^dag^(2 kappa - 1 + n)|0>."""
    n1, n2, n3 = (int(x) for x in levels)
    if min(n1, n2, n3) < 0:
        raise InvalidIndex(f"Levels must be non-negative, got {tuple(levels)}")
    occ = (n1, n2, n3, quanta_excess(kappa) + n1 + n2 + n3)
    state = FockVector.basis(occ)
    return state.permute_modes(NEGATIVE_SWAP) if negative else state


def _check_point(z: Sequence[complex]) -> float:
    radius2 = sum(abs(x) ** 2 for x in z)
    if not radius2 < 1:
        raise DomainViolation(f"Ladder coherent states need |z|^2 < 1, got {radius2}")
    return radius2


def ladder_cs(kappa: float, z: Sequence[complex], cutoff: int, negative: bool = False) -> FockVector:
    """Series form: (1-|z|^2)^kappa sum sqrt(C(2k+n-1,n) C(n,m) C(m,l)) i^(n-m) z1^(n-m) z2^(m-l) z3^l."""
    z1, z2, z3 = (complex(x) for x in z)
    radius2 = _check_point((z1, z2, z3))
    quanta_excess(kappa)
    terms = []
    for n in range(cutoff + 1):
        for m in range(n + 1):
            for l in range(m + 1):
                weight = math.sqrt(binom(2 * kappa + n - 1, n) * math.comb(n, m) * math.comb(m, l))
                coeff = weight * 1j ** (n - m) * z1 ** (n - m) * z2 ** (m - l) * z3**l
                terms.append(ladder_basis(kappa, (n - m, m - l, l), negative) * coeff)
    return vector_sum(terms, 4) * (1 - radius2) ** kappa


def ladder_cs_exponential(kappa: float, z: Sequence[complex], cutoff: int) -> FockVector:
    """(1-|z|^2)^kappa exp(i z1 a1^dag b2^dag + z2 a2^dag b2^dag + z3 b1^dag b2^dag)|kappa, 0>."""
    z1, z2, z3 = (complex(x) for x in z)
    radius2 = _check_point((z1, z2, z3))
    pair = (
        QuadraticOperator.product(Ladder(A1, True), Ladder(B2, True), 4, 1j * z1)
        + QuadraticOperator.product(Ladder(A2, True), Ladder(B2, True), 4, z2)
        + QuadraticOperator.product(Ladder(B1, True), Ladder(B2, True), 4, z3)
    )
    term = ladder_basis(kappa, (0, 0, 0))
    total = term
    for n in range(1, cutoff + 1):
        term = pair(term) / n
        total = total + term
    return total * (1 - radius2) ** kappa


def lorentz_ops(ops: dict[str, QuadraticOperator]) -> dict[tuple[int, int], QuadraticOperator]:
    return {(mu, nu): ops[f"M{mu}{nu}"] for mu, nu in LORENTZ_PAIRS}


def translation_ops(ops: dict[str, QuadraticOperator]) -> list[QuadraticOperator]:
    return [ops[f"P{mu}"] for mu in range(4)]


def pauli_lubanski_4mode(mu: int, vector: FockVector) -> FockVector:
    ops = conformal_ops_4mode()
    return pauli_lubanski_apply(lorentz_ops(ops), translation_ops(ops), mu, vector)


def mass_squared_4mode(vector: FockVector) -> FockVector:
    """P^mu P_mu applied to a vector."""
    ops = conformal_ops_4mode()
    out = FockVector.zero(4)
    for mu, eta in enumerate((1.0, -1.0, -1.0, -1.0)):
        out = out + ops[f"P{mu}"](ops[f"P{mu}"](vector)) * eta
    return out


def helicity_residual(kappa: float, levels: Sequence[int]) -> float:
    """max_mu |W^mu v - S P^mu v| on a ladder basis state."""
    state = ladder_basis(kappa, levels)
    ops = conformal_ops_4mode()
    helicity = helicity_operator_4mode()
    residual = 0.0
    for mu in range(4):
        lhs = pauli_lubanski_4mode(mu, state)
        rhs = helicity(ops[f"P{mu}"](state))
        residual = max(residual, lhs.max_abs_diff(rhs))
    return residual


def series_vs_exponential(kappa: float, z: Sequence[complex], cutoff: int) -> float:
    """Coefficientwise gap between the two coherent-state constructions."""
    return ladder_cs(kappa, z, cutoff).max_abs_diff(ladder_cs_exponential(kappa, z, cutoff))
