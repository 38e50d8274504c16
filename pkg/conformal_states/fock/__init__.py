"""Oscillator realizations: two-mode su(1,1), four-mode ladder and eight-mode compound."""

from .compound import (
    CompoundOperators,
    ConstraintReport,
    MassSpectrumResult,
    compound_basis,
    compound_ops_8mode,
    constraint_operators,
    exchange,
    exciton_commutator_expectation,
    exciton_cs,
    lowest_weight,
    mass_spectrum_action,
    occupancy_constraints,
)
from .ladder import conformal_ops_4mode, helicity_operator_4mode, ladder_basis, ladder_cs
from .operators import Ladder, QuadraticOperator, apply
from .su11 import su11_basis, su11_cs, su11_generators
from .vector import FockVector

__all__ = [
    "CompoundOperators",
    "ConstraintReport",
    "FockVector",
    "Ladder",
    "MassSpectrumResult",
    "QuadraticOperator",
    "apply",
    "compound_basis",
    "compound_ops_8mode",
    "conformal_ops_4mode",
    "constraint_operators",
    "exchange",
    "exciton_commutator_expectation",
    "exciton_cs",
    "helicity_operator_4mode",
    "ladder_basis",
    "ladder_cs",
    "lowest_weight",
    "mass_spectrum_action",
    "occupancy_constraints",
    "su11_basis",
    "su11_cs",
    "su11_generators",
]
