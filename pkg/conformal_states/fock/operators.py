"""Normal-ordered boson bilinears and the Jordan-Schwinger construction."""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Mapping, NamedTuple, Sequence

import numpy as np

from ..errors import InvalidIndex, ModeMismatch
from .vector import FockVector, Occupation

logger = logging.getLogger(__name__)

#: (creation modes, annihilation modes), each sorted.
TermKey = tuple[tuple[int, ...], tuple[int, ...]]
CONSTANT: TermKey = ((), ())


def quanta_excess(kappa: float) -> int:
    """Surplus 2 kappa - 1 of b over a quanta in the helicity-kappa states."""
    excess = 2 * kappa - 1
    if excess < 0 or abs(excess - round(excess)) > 1e-12:
        raise InvalidIndex(f"2 kappa - 1 must be a non-negative integer, got kappa={kappa}")
    return int(round(excess))


class Ladder(NamedTuple):
    """A single ladder operator: creation when `creation` is true."""

    mode: int
    creation: bool

    @property
    def adjoint(self) -> "Ladder":
        return Ladder(self.mode, not self.creation)


def _normal_product(left: Ladder, right: Ladder) -> dict[TermKey, complex]:
    """Normal-ordered form of left * right."""
    if left.creation and right.creation:
        return {(tuple(sorted((left.mode, right.mode))), ()): 1.0}
    if not left.creation and not right.creation:
        return {((), tuple(sorted((left.mode, right.mode)))): 1.0}
    if left.creation:
        return {((left.mode,), (right.mode,)): 1.0}
    # a_i a_j^dag = a_j^dag a_i + delta_ij
    out: dict[TermKey, complex] = {((right.mode,), (left.mode,)): 1.0}
    if left.mode == right.mode:
        out[CONSTANT] = 1.0
    return out


@dataclass(frozen=True)
class QuadraticOperator:
    """Normal-ordered operator of degree at most two in creators and in annihilators."""

    n_modes: int
    terms: dict[TermKey, complex] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for creators, annihilators in self.terms:
            if len(creators) > 2 or len(annihilators) > 2:
                raise ValueError("Only bilinear operators are supported")
            if any(m >= self.n_modes or m < 0 for m in creators + annihilators):
                raise ModeMismatch(f"Mode index out of range for {self.n_modes} modes")
        object.__setattr__(
            self, "terms", {k: complex(v) for k, v in self.terms.items() if abs(v) > 1e-15}
        )

    @classmethod
    def identity(cls, n_modes: int, value: complex = 1.0) -> "QuadraticOperator":
        return cls(n_modes, {CONSTANT: value})

    @classmethod
    def number(cls, mode: int, n_modes: int) -> "QuadraticOperator":
        return cls(n_modes, {((mode,), (mode,)): 1.0})

    @classmethod
    def product(cls, left: Ladder, right: Ladder, n_modes: int, coeff: complex = 1.0) -> "QuadraticOperator":
        return cls(n_modes, {k: v * coeff for k, v in _normal_product(left, right).items()})

    def __add__(self, other: "QuadraticOperator") -> "QuadraticOperator":
        if other.n_modes != self.n_modes:
            raise ModeMismatch("Operators act on different mode counts")
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return QuadraticOperator(self.n_modes, out)

    def __mul__(self, scalar: complex) -> "QuadraticOperator":
        return QuadraticOperator(self.n_modes, {k: v * scalar for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __sub__(self, other: "QuadraticOperator") -> "QuadraticOperator":
        return self + other * -1

    @property
    def constant(self) -> complex:
        return self.terms.get(CONSTANT, 0j)

    def adjoint(self) -> "QuadraticOperator":
        return QuadraticOperator(
            self.n_modes,
            {(ann, cre): v.conjugate() for (cre, ann), v in self.terms.items()},
        )

    def permute_modes(self, permutation: Sequence[int]) -> "QuadraticOperator":
        out: dict[TermKey, complex] = {}
        for (cre, ann), v in self.terms.items():
            key = (
                tuple(sorted(permutation[m] for m in cre)),
                tuple(sorted(permutation[m] for m in ann)),
            )
            out[key] = out.get(key, 0) + v
        return QuadraticOperator(self.n_modes, out)

    def __call__(self, vector: FockVector) -> FockVector:
        return apply(self, vector)


def _lower(occ: list[int], modes: Sequence[int]) -> float:
    factor = 1.0
    for m in modes:
        if occ[m] == 0:
            return 0.0
        factor *= math.sqrt(occ[m])
        occ[m] -= 1
    return factor


def _raise(occ: list[int], modes: Sequence[int]) -> float:
    factor = 1.0
    for m in modes:
        occ[m] += 1
        factor *= math.sqrt(occ[m])
    return factor


def apply(op: QuadraticOperator, vector: FockVector) -> FockVector:
    """Exact sparse action with a|n> = sqrt(n)|n-1> and a^dag|n> = sqrt(n+1)|n+1>."""
    if op.n_modes != vector.n_modes:
        raise ModeMismatch(f"Operator on {op.n_modes} modes applied to a {vector.n_modes}-mode vector")
    out: dict[Occupation, complex] = {}
    for occ, amp in vector.amplitudes.items():
        for (creators, annihilators), coeff in op.terms.items():
            state = list(occ)
            factor = _lower(state, annihilators)
            if factor == 0.0:
                continue
            factor *= _raise(state, creators)
            key = tuple(state)
            out[key] = out.get(key, 0) + coeff * factor * amp
    return FockVector(vector.n_modes, out)


def commutator_apply(
    first: Callable[[FockVector], FockVector],
    second: Callable[[FockVector], FockVector],
    vector: FockVector,
) -> FockVector:
    """[first, second] applied to a vector."""
    return first(second(vector)) - second(first(vector))


# ---------------------------------------------------------------------------
# Jordan-Schwinger construction


def jordan_schwinger(
    matrix: np.ndarray,
    spinor: Sequence[Ladder],
    metric: Sequence[float],
    n_modes: int,
) -> QuadraticOperator:
    """Z^dag (X Gamma) Z for one column spinor Z of ladder operators."""
    weighted = np.asarray(matrix, dtype=complex) * np.asarray(metric)[None, :]
    op = QuadraticOperator(n_modes)
    for r, s in itertools.product(range(len(spinor)), repeat=2):
        coeff = weighted[r, s]
        if coeff == 0:
            continue
        op = op + QuadraticOperator.product(spinor[r].adjoint, spinor[s], n_modes, coeff)
    return op


def levi_civita(indices: Sequence[int]) -> int:
    """Sign of the permutation, 0 for repeated indices; eps_0123 = +1."""
    if len(set(indices)) != len(indices):
        return 0
    sign = 1
    items = list(indices)
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if items[i] > items[j]:
                sign = -sign
    return sign


METRIC = (1.0, -1.0, -1.0, -1.0)


def pauli_lubanski_apply(
    lorentz: Mapping[tuple[int, int], QuadraticOperator],
    translations: Sequence[QuadraticOperator],
    mu: int,
    vector: FockVector,
) -> FockVector:
    """W^mu |v> with W_a = (i/2) eps_{a m n b} M^{mn} P^b and W^mu = eta^{mu mu} W_mu.

    `lorentz` holds M^{mn} for m < n; the other orderings follow from antisymmetry.
    """
    out = FockVector.zero(vector.n_modes)
    for beta in range(4):
        if beta == mu:
            continue
        pushed = apply(translations[beta], vector)
        if pushed.is_zero():
            continue
        for (m, n), op in lorentz.items():
            # both orderings (m, n) and (n, m) contribute equally
            sign = levi_civita((mu, m, n, beta))
            if sign:
                out = out + apply(op, pushed) * (1j * sign)
    return out * METRIC[mu]
