"""Wigner D-matrices of arbitrary complex 2x2 matrices."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any

import numpy as np

from .errors import InvalidSpin

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WignerTerms:
    """Monomial expansion of every entry of D^j.

    Entry (row, col) receives coeff * x11^e11 x12^e12 x21^e21 x22^e22. Rows and
    columns run over q = j, j-1, ..., -j.
    """

    two_j: int
    rows: np.ndarray
    cols: np.ndarray
    coeffs: np.ndarray
    exponents: np.ndarray  # (n_terms, 4) in entry order (11, 12, 21, 22)

    @property
    def dim(self) -> int:
        return self.two_j + 1

    @property
    def starts(self) -> np.ndarray:
        flat = self.rows * self.dim + self.cols
        return np.flatnonzero(np.r_[True, flat[1:] != flat[:-1]])


def check_two_j(two_j: int) -> int:
    if not isinstance(two_j, (int, np.integer)) or two_j < 0:
        raise InvalidSpin(f"two_j must be a non-negative integer, got {two_j!r}")
    return int(two_j)


def q_values(two_j: int) -> list[int]:
    """Doubled magnetic labels 2q in descending order."""
    return list(range(two_j, -two_j - 1, -2))


def q_position(two_j: int, two_q: int) -> int:
    """Row/column position of label 2q inside D^j."""
    return (two_j - two_q) // 2


@lru_cache(maxsize=None)
def wigner_terms(two_j: int) -> WignerTerms:
    """Exact expansion of D^j; factorials stay integer until the final square root."""
    two_j = check_two_j(two_j)
    rows, cols, coeffs, exponents = [], [], [], []
    for row, two_qa in enumerate(q_values(two_j)):
        jpa, jma = (two_j + two_qa) // 2, (two_j - two_qa) // 2
        for col, two_qb in enumerate(q_values(two_j)):
            jpb, jmb = (two_j + two_qb) // 2, (two_j - two_qb) // 2
            prefactor = (
                math.factorial(jpa) * math.factorial(jma) * math.factorial(jpb) * math.factorial(jmb)
            )
            shift = (two_qa + two_qb) // 2
            for k in range(max(0, shift), min(jpa, jpb) + 1):
                denominator = (
                    math.factorial(k)
                    * math.factorial(jpa - k)
                    * math.factorial(jpb - k)
                    * math.factorial(k - shift)
                )
                coeff = math.sqrt(Fraction(prefactor, denominator * denominator))
                rows.append(row)
                cols.append(col)
                coeffs.append(coeff)
                exponents.append((k, jpa - k, jpb - k, k - shift))
    logger.debug(f"Built Wigner expansion for 2j={two_j} with {len(coeffs)} terms")
    return WignerTerms(
        two_j=two_j,
        rows=np.array(rows, dtype=int),
        cols=np.array(cols, dtype=int),
        coeffs=np.array(coeffs, dtype=float),
        exponents=np.array(exponents, dtype=int).reshape(-1, 4),
    )


def wigner_d(two_j: int, X: Any) -> np.ndarray:
    """D^j(X) for X of shape (..., 2, 2); returns shape (..., 2j+1, 2j+1)."""
    terms = wigner_terms(two_j)
    X = np.asarray(X, dtype=complex)
    if X.shape[-2:] != (2, 2):
        raise ValueError(f"Expected (..., 2, 2) matrices, got shape {X.shape}")
    batch = X.shape[:-2]
    entries = X.reshape(batch + (4,))
    # (..., n_terms) monomial values
    monomials = np.prod(entries[..., None, :] ** terms.exponents, axis=-1) * terms.coeffs
    # terms are grouped by entry, each entry holding at least one term
    values = np.add.reduceat(monomials, terms.starts, axis=-1)
    return values.reshape(batch + (terms.dim, terms.dim))


def wigner_character(two_j: int, X: Any) -> complex:
    """Trace of D^j(X)."""
    D = wigner_d(two_j, X)
    return np.trace(D, axis1=-2, axis2=-1)
