"""Discrete-series representations of U(2,2): analytic model, generators and oscillator realizations."""

__version__ = "0.1.0"

from .algebra import CartanPoint, GroupElement, gamma_matrices, make_group_element
from .basis import BasisIndex, basis_poly, bergman_kernel, cs_overlap, kernel_partial_sum
from .config import RunConfig, Tolerances
from .errors import (
    ConformalStatesError,
    DomainViolation,
    InvalidIndex,
    InvalidScaleDimension,
    InvalidSpin,
    ModeMismatch,
    SingularMatrix,
)
from .generators import casimir2, generator_matrix_elements, symbol
from .report import CheckResult, CheckStatus, Report

__all__ = [
    "BasisIndex",
    "CartanPoint",
    "CheckResult",
    "CheckStatus",
    "ConformalStatesError",
    "DomainViolation",
    "GroupElement",
    "InvalidIndex",
    "InvalidScaleDimension",
    "InvalidSpin",
    "ModeMismatch",
    "Report",
    "RunConfig",
    "SingularMatrix",
    "Tolerances",
    "basis_poly",
    "bergman_kernel",
    "casimir2",
    "cs_overlap",
    "gamma_matrices",
    "generator_matrix_elements",
    "kernel_partial_sum",
    "make_group_element",
    "symbol",
]
