"""Sparse multivariate polynomials with complex coefficients."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Iterable, Mapping, Sequence, Union

import numpy as np

logger = logging.getLogger(__name__)

#: Coefficients below this magnitude are dropped.
PRUNE_THRESHOLD = 1e-14

#: Canonical variables z_mu of Z = z_mu sigma^mu.
Z_VARS = ("z0", "z1", "z2", "z3")

#: Matrix-entry variables, row major.
ENTRY_VARS = ("z11", "z12", "z21", "z22")

Exponent = tuple[int, ...]
Scalar = Union[int, float, complex]


def _prune(terms: Mapping[Exponent, complex]) -> dict[Exponent, complex]:
    return {e: complex(c) for e, c in terms.items() if abs(c) >= PRUNE_THRESHOLD}


@dataclass(frozen=True)
class Polynomial:
    """Finitely supported map from exponent tuples to complex coefficients."""

    terms: dict[Exponent, complex] = field(default_factory=dict)
    n_vars: int = 4

    def __post_init__(self) -> None:
        for exponent in self.terms:
            if len(exponent) != self.n_vars or min(exponent, default=0) < 0:
                raise ValueError(f"Bad exponent {exponent} for {self.n_vars} variables")
        object.__setattr__(self, "terms", _prune(self.terms))

    # -- constructors -------------------------------------------------------

    @classmethod
    def constant(cls, value: Scalar, n_vars: int = 4) -> "Polynomial":
        return cls({(0,) * n_vars: complex(value)}, n_vars)

    @classmethod
    def variable(cls, index: int, n_vars: int = 4) -> "Polynomial":
        exponent = tuple(1 if i == index else 0 for i in range(n_vars))
        return cls({exponent: 1.0}, n_vars)

    @classmethod
    def zero(cls, n_vars: int = 4) -> "Polynomial":
        return cls({}, n_vars)

    @classmethod
    def monomial(cls, exponent: Sequence[int], coeff: Scalar = 1.0) -> "Polynomial":
        return cls({tuple(int(e) for e in exponent): complex(coeff)}, len(exponent))

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other: Any) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.n_vars != self.n_vars:
                raise ValueError("Polynomials over different variable counts")
            return other
        return Polynomial.constant(other, self.n_vars)

    def __add__(self, other: Any) -> "Polynomial":
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial(out, self.n_vars)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial({e: -c for e, c in self.terms.items()}, self.n_vars)

    def __sub__(self, other: Any) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other: Any) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return Polynomial({e: c * other for e, c in self.terms.items()}, self.n_vars)
        other = self._coerce(other)
        out: dict[Exponent, complex] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial(out, self.n_vars)

    __rmul__ = __mul__

    def __truediv__(self, scalar: Scalar) -> "Polynomial":
        return self * (1.0 / scalar)

    def __pow__(self, power: int) -> "Polynomial":
        if power < 0:
            raise ValueError("Negative powers are not polynomial")
        result = Polynomial.constant(1.0, self.n_vars)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    # -- structure -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def homogeneous_part(self, degree: int) -> "Polynomial":
        return Polynomial({e: c for e, c in self.terms.items() if sum(e) == degree}, self.n_vars)

    def degrees(self) -> list[int]:
        return sorted({sum(e) for e in self.terms})

    def conjugate_coefficients(self) -> "Polynomial":
        return Polynomial({e: c.conjugate() for e, c in self.terms.items()}, self.n_vars)

    def max_abs_diff(self, other: "Polynomial") -> float:
        diff = self - other
        return max((abs(c) for c in diff.terms.values()), default=0.0)

    def coefficient(self, exponent: Sequence[int]) -> complex:
        return self.terms.get(tuple(exponent), 0j)

    # -- calculus and evaluation --------------------------------------------

    def derivative(self, index: int) -> "Polynomial":
        out: dict[Exponent, complex] = {}
        for e, c in self.terms.items():
            if e[index] == 0:
                continue
            lowered = e[:index] + (e[index] - 1,) + e[index + 1 :]
            out[lowered] = out.get(lowered, 0) + c * e[index]
        return Polynomial(out, self.n_vars)

    def euler(self) -> "Polynomial":
        """sum_i x_i d/dx_i, i.e. each term scaled by its degree."""
        return Polynomial({e: c * sum(e) for e, c in self.terms.items()}, self.n_vars)

    def evaluate(self, values: Any) -> Any:
        """Evaluate at values of shape (..., n_vars)."""
        values = np.asarray(values, dtype=complex)
        if values.shape[-1] != self.n_vars:
            raise ValueError(f"Expected {self.n_vars} variables, got shape {values.shape}")
        if not self.terms:
            return np.zeros(values.shape[:-1], dtype=complex)[()]
        exponents = np.array(list(self.terms), dtype=int)
        coeffs = np.array(list(self.terms.values()), dtype=complex)
        monomials = np.prod(values[..., None, :] ** exponents, axis=-1)
        return (monomials @ coeffs)[()]

    __call__ = evaluate

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Replace variable i by images[i]; images share their own variable count."""
        if len(images) != self.n_vars:
            raise ValueError("One image polynomial per variable is required")
        n_out = images[0].n_vars
        powers: list[dict[int, Polynomial]] = [{0: Polynomial.constant(1.0, n_out)} for _ in images]

        def power_of(i: int, k: int) -> Polynomial:
            cache = powers[i]
            if k not in cache:
                cache[k] = power_of(i, k - 1) * images[i]
            return cache[k]

        result = Polynomial.zero(n_out)
        for e, c in self.terms.items():
            term = Polynomial.constant(c, n_out)
            for i, k in enumerate(e):
                if k:
                    term = term * power_of(i, k)
            result = result + term
        return result

    # -- serialization -------------------------------------------------------

    def to_dict(self) -> list[dict[str, list]]:
        return [
            {"exponents": list(e), "coeff": [c.real, c.imag]}
            for e, c in sorted(self.terms.items())
        ]

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "Polynomial":
        data = json.loads(text)
        if not data:
            return cls.zero()
        terms = {tuple(item["exponents"]): complex(*item["coeff"]) for item in data}
        return cls(terms, len(next(iter(terms))))


def polynomial_sum(polys: Iterable[Polynomial], n_vars: int = 4) -> Polynomial:
    out: dict[Exponent, complex] = {}
    for poly in polys:
        for e, c in poly.terms.items():
            out[e] = out.get(e, 0) + c
    return Polynomial(out, n_vars)


# ---------------------------------------------------------------------------
# Coordinate changes between z_mu and the matrix entries


@lru_cache(maxsize=1)
def _entry_images() -> tuple[Polynomial, ...]:
    z0, z1, z2, z3 = (Polynomial.variable(i) for i in range(4))
    # z11 = z0 + z3, z12 = z1 - i z2, z21 = z1 + i z2, z22 = z0 - z3
    return (z0 + z3, z1 - 1j * z2, z1 + 1j * z2, z0 - z3)


@lru_cache(maxsize=1)
def _coordinate_images() -> tuple[Polynomial, ...]:
    e11, e12, e21, e22 = (Polynomial.variable(i) for i in range(4))
    return ((e11 + e22) * 0.5, (e12 + e21) * 0.5, (e12 - e21) * 0.5j, (e11 - e22) * 0.5)


def entries_to_z(poly: Polynomial) -> Polynomial:
    """Rewrite a polynomial in matrix entries as one in z_mu."""
    return poly.substitute(_entry_images())


def z_to_entries(poly: Polynomial) -> Polynomial:
    """Rewrite a polynomial in z_mu as one in the matrix entries."""
    return poly.substitute(_coordinate_images())


def entry_values(Z: Any) -> np.ndarray:
    """(..., 2, 2) matrices to (..., 4) entry vectors."""
    Z = np.asarray(Z, dtype=complex)
    return Z.reshape(Z.shape[:-2] + (4,))


def z_values(Z: Any) -> np.ndarray:
    """(..., 2, 2) matrices to (..., 4) coordinate vectors z_mu."""
    e = entry_values(Z)
    e11, e12, e21, e22 = e[..., 0], e[..., 1], e[..., 2], e[..., 3]
    return np.stack([(e11 + e22) / 2, (e12 + e21) / 2, 0.5j * (e12 - e21), (e11 - e22) / 2], axis=-1)


def det_polynomial() -> Polynomial:
    """det Z = z0^2 - z1^2 - z2^2 - z3^2."""
    return Polynomial(
        {(2, 0, 0, 0): 1.0, (0, 2, 0, 0): -1.0, (0, 0, 2, 0): -1.0, (0, 0, 0, 2): -1.0}
    )


def monomials_of_degree(degree: int, n_vars: int = 4) -> list[Exponent]:
    """All exponent tuples of the given total degree, lexicographically descending."""
    if n_vars == 1:
        return [(degree,)]
    out = []
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(degree - first, n_vars - 1):
            out.append((first,) + rest)
    return out
