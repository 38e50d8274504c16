"""Verification suites behind the CLI subcommands.

Each suite takes a RunConfig, runs one family of identities and returns a Report.
Importing this module registers every suite.
"""

from __future__ import annotations

import logging
from typing import Iterable

import numpy as np

from . import basis, generators
from .algebra import (
    LINEAR_GENERATORS,
    LORENTZ_PAIRS,
    random_domain_point,
    random_group_element,
    structure_constants,
)
from .basis import BasisIndex, indices_up_to
from .config import RunConfig
from .fock import compound, ladder, su11
from .fock.operators import commutator_apply
from .polynomial import Polynomial, monomials_of_degree
from .registry import suite
from .report import CheckResult, CheckStatus, Report

logger = logging.getLogger(__name__)

#: The fifteen conformal generators; the rotation combinations are linear in these.
BASE_GENERATORS = ("D",) + tuple(f"P{mu}" for mu in range(4)) + tuple(f"K{mu}" for mu in range(4)) + tuple(
    f"M{mu}{nu}" for mu, nu in LORENTZ_PAIRS
)

DISK_KAPPAS = (1.0, 1.5, 2.0)
LADDER_KAPPAS = (0.5, 1.0, 1.5)
LADDER_LEVELS = ((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1))


def _largest(values: Iterable[float]) -> float:
    return max(values, default=0.0)


def _row_gap(left: dict[BasisIndex, complex], right: dict[BasisIndex, complex]) -> float:
    keys = set(left) | set(right)
    return _largest(abs(left.get(k, 0) - right.get(k, 0)) for k in keys)


def _new_report(config: RunConfig) -> Report:
    return Report(command=config.command, config=config.as_dict())


# ---------------------------------------------------------------------------
# Analytic model


@suite(
    name="kernel-check",
    description="Truncated kernel expansion against det(1 - Z^dag Z')^-lambda",
    tolerance_family="kernel",
    default_degree=40,
)
def run_kernel_check(config: RunConfig) -> Report:
    report = _new_report(config)
    tol = config.tolerances("kernel").kernel
    lam, cutoff = config.lam, config.degree
    rng = np.random.default_rng(config.seed)

    Z = 0.3 * np.eye(2)
    exact = basis.bergman_kernel(Z, Z, lam)
    report.columns = ["pair", "N", "residual"]
    for n in sorted(set(range(0, cutoff + 1, 5)) | {cutoff}):
        residual = abs(basis.kernel_partial_sum(Z, Z, lam, n) - exact)
        report.add_row("0.3*sigma0", n, residual)
    report.add(CheckResult.compare("diagonal-point", report.rows[-1][2], tol, N=cutoff))

    zero_residual = abs(basis.kernel_partial_sum(Z, np.zeros((2, 2)), lam, 0) - 1.0)
    report.add(CheckResult.compare("zero-point", zero_residual, tol, N=0))

    residuals = []
    for pair in range(20):
        Za = random_domain_point(rng, rng.uniform(0.05, 0.5))
        Zb = random_domain_point(rng, rng.uniform(0.05, 0.5))
        residual = abs(basis.kernel_partial_sum(Za, Zb, lam, cutoff) - basis.bergman_kernel(Za, Zb, lam))
        residuals.append(residual)
        report.add_row(f"random-{pair}", cutoff, residual)
    report.add(CheckResult.compare("random-pairs", _largest(residuals), tol, pairs=len(residuals)))

    trace_gap = abs(
        basis.trace_series(Z, lam, 1.0, cutoff) - np.linalg.det(np.eye(2) - Z) ** (-lam)
    )
    report.add(CheckResult.compare("character-series", trace_gap, tol))
    return report


@suite(
    name="ortho-check",
    description="Monte Carlo Gram matrix of the low-degree basis and disk quadrature",
    tolerance_family="mc_sigmas",
    default_degree=2,
)
def run_ortho_check(config: RunConfig) -> Report:
    report = _new_report(config)
    tols = config.tolerances("mc_sigmas")
    report.columns = ["row", "column", "estimate_re", "estimate_im", "stderr"]

    if config.lam < 4:
        report.add(
            CheckResult(
                "monte-carlo-gram",
                CheckStatus.SKIPPED,
                details={"reason": "the normalized measure needs lambda >= 4"},
            )
        )
    else:
        indices = indices_up_to(config.degree, config.lam)
        gram = basis.mc_gram(indices, config.lam, config.mc_samples, config.seed, threads=config.threads)
        scores = gram.deviation() / np.maximum(gram.stderr, 1e-300)
        for a, row_idx in enumerate(indices):
            for b, col_idx in enumerate(indices):
                est = gram.estimate[a, b]
                report.add_row(str(row_idx), str(col_idx), est.real, est.imag, gram.stderr[a, b])
        report.add(
            CheckResult.compare(
                "monte-carlo-gram",
                float(np.max(scores)),
                tols.mc_sigmas,
                max_deviation=float(np.max(gram.deviation())),
                samples=gram.n,
                accepted=gram.accepted,
            )
        )
        # phi_0 = 1, so the (0, 0) entry is the total mass of the measure
        report.add(
            CheckResult.compare(
                "measure-normalization",
                float(scores[0, 0]),
                tols.mc_sigmas,
                estimate=complex(gram.estimate[0, 0]),
                stderr=float(gram.stderr[0, 0]),
            )
        )

    gram_gaps, overlap_gaps = [], []
    for kappa in DISK_KAPPAS:
        gram_gaps.append(float(np.max(np.abs(basis.disk_gram(kappa, 6) - np.eye(7)))))
        for z, zp in ((0.3, 0.2j), (0.5 - 0.1j, -0.4), (0.0, 0.6)):
            prefactor = (1 - abs(z) ** 2) ** kappa * (1 - abs(zp) ** 2) ** kappa
            series = prefactor * basis.disk_partial_kernel(zp, z, kappa, 200)
            overlap_gaps.append(abs(basis.disk_overlap(z, zp, kappa) - series))
    report.add(CheckResult.compare("disk-gram", _largest(gram_gaps), tols.quadrature, kappas=list(DISK_KAPPAS)))
    report.add(CheckResult.compare("disk-overlap", _largest(overlap_gaps), tols.overlap))
    return report


@suite(
    name="casimir",
    description="Quadratic Casimir on every basis vector up to the degree cutoff",
    default_degree=6,
)
def run_casimir(config: RunConfig) -> Report:
    report = _new_report(config)
    tol = config.tolerances("exact").exact
    expected = config.lam * (config.lam - 4)
    report.columns = ["index", "casimir"]
    residual = 0.0
    for idx in indices_up_to(config.degree, config.lam):
        value = generators.casimir2(idx)
        report.add_row(str(idx), value)
        residual = max(residual, abs(value - expected))
    report.add(CheckResult.compare("casimir", residual, tol, expected=expected, states=len(report.rows)))
    return report


@suite(
    name="generators-dump",
    description="Closed-form matrix elements, checked against the differential action",
)
def run_generators_dump(config: RunConfig) -> Report:
    report = _new_report(config)
    tols = config.tolerances("exact")
    lam = config.lam
    indices = indices_up_to(config.degree, lam)
    report.columns = ["generator", "source", "target", "re", "im"]

    oracle_gap = 0.0
    for name in generators.GENERATOR_NAMES:
        for idx in indices:
            row = generators.generator_matrix_elements(name, idx)
            for target, coeff in row.targets:
                report.add_row(name, str(idx), str(target), coeff.real, coeff.imag)
            image = generators.apply_generator_diff(name, basis.basis_poly(idx), lam)
            oracle_gap = max(oracle_gap, _row_gap(basis.expand_in_basis(image, lam), row.as_dict()))
    report.add(CheckResult.compare("differential-oracle", oracle_gap, tols.exact, states=len(indices)))

    composition_gap = _largest(
        _row_gap(generators.composed_quadratic(name, idx), generators.quadratic_action(name, idx).as_dict())
        for name in generators.QUADRATIC_NAMES
        for idx in indices
    )
    report.add(CheckResult.compare("quadratic-composition", composition_gap, tols.exact))

    closure = structure_constants().residual
    report.add(CheckResult.compare("matrix-closure", closure, tols.commutator))

    monomials = [
        Polynomial.monomial(e) for d in range(min(config.degree, 2) + 1) for e in monomials_of_degree(d)
    ]
    commutator_gap = _largest(
        generators.commutator_residual(a, b, phi, lam)
        for a in BASE_GENERATORS
        for b in BASE_GENERATORS
        if a < b
        for phi in monomials
    )
    report.add(CheckResult.compare("commutators", commutator_gap, tols.commutator, monomials=len(monomials)))
    return report


@suite(
    name="cs-expand",
    description="Coherent-state coefficients, overlaps and the finite group action",
    tolerance_family="kernel",
    default_degree=14,
)
def run_cs_expand(config: RunConfig) -> Report:
    report = _new_report(config)
    tols = config.tolerances("kernel")
    lam, cutoff = config.lam, config.degree
    rng = np.random.default_rng(config.seed)
    Z = random_domain_point(rng, 0.25)
    Zp = random_domain_point(rng, 0.25)

    coeffs = basis.cs_coefficients(Z, lam, cutoff)
    coeffs_p = basis.cs_coefficients(Zp, lam, cutoff)
    report.columns = ["index", "re", "im"]
    for idx, c in coeffs.items():
        report.add_row(str(idx), c.real, c.imag)

    norm = sum(abs(c) ** 2 for c in coeffs.values())
    report.add(CheckResult.compare("normalization", abs(norm - 1), tols.kernel, norm=norm))

    overlap = sum(np.conj(coeffs[idx]) * coeffs_p[idx] for idx in coeffs)
    report.add(CheckResult.compare("overlap", abs(overlap - basis.cs_overlap(Z, Zp, lam)), tols.kernel))

    g = random_group_element(rng, 0.25)
    expansion = basis.evaluate_expansion(basis.rep_action_coeffs(g, lam, cutoff), Zp)
    direct = basis.rep_action_eval(g, Polynomial.constant(1.0), lam, Zp)
    report.add(CheckResult.compare("group-action", abs(expansion - direct), tols.kernel))

    # The exciton state carries phi(Z), the analytic coherent state conj(phi(Z))
    fock_degree = min(cutoff, 3)
    state = compound.exciton_cs(Z, lam, fock_degree)
    fock, remainder = compound.expand_in_compound_basis(state, lam, range(fock_degree + 1))
    bridge = max(
        remainder,
        _largest(abs(fock.get(idx, 0) - np.conj(c)) for idx, c in coeffs.items() if idx.degree <= fock_degree),
    )
    report.add(CheckResult.compare("fock-bridge", bridge, tols.exact, degree=fock_degree))
    return report


@suite(
    name="symbols",
    description="Closed-form coherent-state symbols against truncated expansions",
    tolerance_family="symbols",
    default_degree=16,
)
def run_symbols(config: RunConfig) -> Report:
    report = _new_report(config)
    tol = config.tolerances("symbols").symbols
    lam, cutoff = config.lam, config.degree
    rng = np.random.default_rng(config.seed)
    names = ("D", "P0", "P1", "P2", "P3", "K0", "K1", "K2", "K3", "M01", "M23") + generators.QUADRATIC_NAMES
    report.columns = ["point", "generator", "closed_re", "closed_im", "series_re", "series_im"]

    symbol_gap, pairing_gap, star_gap, relation_gap = 0.0, 0.0, 0.0, 0.0
    for point in range(5):
        Z = random_domain_point(rng, rng.uniform(0.05, 0.25))
        for name in names:
            closed = generators.symbol(name, Z, lam)
            series = generators.series_expectation(name, Z, lam, cutoff)
            symbol_gap = max(symbol_gap, abs(closed - series))
            report.add_row(point, name, closed.real, closed.imag, series.real, series.imag)
        pairing_gap = max(pairing_gap, _largest(generators.symbol_pairing_residual(mu, Z, lam) for mu in range(4)))
        star = generators.star_commutator("P0", "K0", Z, lam, cutoff)
        star_gap = max(star_gap, abs(star + 2 * generators.symbol("D", Z, lam)))
        relation = generators.symbol("KP", Z, lam) - generators.symbol("PK", Z, lam) - 8 * generators.symbol("D", Z, lam)
        relation_gap = max(relation_gap, abs(relation))

    report.add(CheckResult.compare("closed-vs-series", symbol_gap, tol, degree=cutoff))
    report.add(CheckResult.compare("translation-pairing", pairing_gap, tol))
    report.add(CheckResult.compare("star-commutator", star_gap, tol))
    report.add(CheckResult.compare("kp-pk-relation", relation_gap, config.tolerances().exact))
    return report


# ---------------------------------------------------------------------------
# Oscillator realizations


def _su11_checks(report: Report, tol: float) -> None:
    ops = su11.su11_generators()
    gap = 0.0
    for kappa in LADDER_KAPPAS:
        gap = max(gap, su11.lowest_weight_check(kappa))
        for n in range(4):
            state = su11.su11_basis(kappa, n)
            gap = max(
                gap,
                commutator_apply(ops.q3, ops.q_plus, state).max_abs_diff(ops.q_plus(state)),
                commutator_apply(ops.q3, ops.q_minus, state).max_abs_diff(-ops.q_minus(state)),
                commutator_apply(ops.q_plus, ops.q_minus, state).max_abs_diff(ops.q3(state) * -2),
                ops.q0(state).max_abs_diff(state * (kappa - 1)),
            )
    report.add(CheckResult.compare("su11-algebra", gap, tol))


def _ladder_checks(report: Report, tol: float) -> None:
    ops = ladder.conformal_ops_4mode()
    helicity, mass, casimir = 0.0, 0.0, 0.0
    for kappa in LADDER_KAPPAS:
        for levels in LADDER_LEVELS:
            state = ladder.ladder_basis(kappa, levels)
            helicity = max(helicity, ladder.helicity_residual(kappa, levels))
            mass = max(mass, ladder.mass_squared_4mode(state).norm())
            expected = 2 * kappa - 3 + 2 * levels[2]
            casimir = max(casimir, ops["I"](state).max_abs_diff(state * expected))
    report.add(CheckResult.compare("ladder-helicity", helicity, tol))
    report.add(CheckResult.compare("ladder-massless", mass, tol))
    report.add(CheckResult.compare("ladder-linear-casimir", casimir, tol))
    series_gap = ladder.series_vs_exponential(1.0, (0.2, 0.1, 0.1), 4)
    report.add(CheckResult.compare("ladder-coherent-state", series_gap, tol))


@suite(
    name="fock-verify",
    description="Eight-mode compound realization against the analytic model",
    tolerance_family="exact",
)
def run_fock_verify(config: RunConfig) -> Report:
    report = _new_report(config)
    tols = config.tolerances("exact")
    lam = config.lam
    indices = indices_up_to(config.degree, lam)
    ops = compound.compound_ops_8mode()
    parity_expected = (-1) ** lam
    report.columns = ["index", "norm", "exchange_parity", "mass_fock", "mass_analytic", "constraint_residual"]

    gram_gap, parity_gap, mass_gap, constraint_gap = 0.0, 0.0, 0.0, 0.0
    occupancy_ok = True
    states = [compound.compound_basis(idx) for idx in indices]
    for a, (idx, state) in enumerate(zip(indices, states)):
        for b in range(a, len(states)):
            target = 1.0 if a == b else 0.0
            gram_gap = max(gram_gap, abs(state.inner(states[b]) - target))
        parity = compound.exchange_parity(idx)
        parity_gap = max(parity_gap, abs(parity - parity_expected))
        spectrum = compound.mass_spectrum_action(idx)
        mass_gap = max(mass_gap, spectrum.residual)
        constraint = compound.constraint_residual(idx)
        constraint_gap = max(constraint_gap, constraint)
        occupancy_ok = occupancy_ok and compound.occupancy_constraints(state, lam, idx).passed
        report.add_row(
            str(idx),
            state.norm(),
            parity,
            spectrum.fock_coefficient.real,
            spectrum.analytic_coefficient.real,
            constraint,
        )

    report.add(CheckResult.compare("orthonormality", gram_gap, tols.orthonormality, states=len(indices)))
    report.add(CheckResult.compare("constraints", constraint_gap, tols.exact))
    report.add(
        CheckResult(
            "occupancy",
            CheckStatus.PASSED if occupancy_ok else CheckStatus.FAILED,
            details={"states": len(indices)},
        )
    )
    report.add(CheckResult.compare("exchange-parity", parity_gap, tols.exact, exchange_parity=parity_expected))
    report.add(CheckResult.compare("mass-spectrum", mass_gap, tols.exact))

    iso_gap = _largest(compound.isomorphism_residual(name, idx) for name in BASE_GENERATORS for idx in indices)
    report.add(CheckResult.compare("isomorphism", iso_gap, tols.exact, generators=len(BASE_GENERATORS)))

    small = [idx for idx in indices if idx.degree <= 3]
    report.add(
        CheckResult.compare(
            "constituent-helicity",
            _largest(compound.constituent_helicity_residual(idx) for idx in small),
            tols.exact,
            helicity=(lam - 2) / 2,
        )
    )
    report.add(
        CheckResult.compare(
            "constituent-massless", _largest(compound.constituent_mass_residual(idx) for idx in small), tols.exact
        )
    )
    report.add(
        CheckResult.compare(
            "compound-spinless", _largest(compound.total_pauli_lubanski_norm(idx) for idx in small), tols.exact
        )
    )
    vacuum = compound.lowest_weight(lam)
    dilation = ops.total["D"](vacuum).max_abs_diff(vacuum * lam)
    report.add(CheckResult.compare("lowest-weight-dilation", dilation, tols.exact))

    rng = np.random.default_rng(config.seed)
    order_gap = 0.0
    for _ in range(3):
        Z = random_domain_point(rng, 0.3)
        for n in range(min(config.degree, 4) + 1):
            order_gap = max(
                order_gap,
                compound.exciton_order_term(Z, lam, n).max_abs_diff(compound.exciton_order_expansion(Z, lam, n)),
            )
    report.add(CheckResult.compare("exciton-orders", order_gap, tols.exact))

    Z, Zp = random_domain_point(rng, 0.15), random_domain_point(rng, 0.15)
    fock_overlap = compound.exciton_cs(Z, lam, 6).inner(compound.exciton_cs(Zp, lam, 6))
    overlap_gap = abs(fock_overlap - basis.cs_overlap(Zp, Z, lam))
    report.add(CheckResult.compare("exciton-overlap", overlap_gap, tols.truncation, cutoff=6))

    if lam > 2:
        commutator_gap = 0.0
        for idx in (i for i in indices if i.degree <= 2):
            for mu in range(4):
                fock, closed = compound.exciton_commutator_expectation(idx, mu)
                commutator_gap = max(commutator_gap, abs(fock - closed))
        report.add(CheckResult.compare("exciton-commutator", commutator_gap, tols.exact))
    else:
        report.add(
            CheckResult(
                "exciton-commutator",
                CheckStatus.SKIPPED,
                details={"reason": "exciton operators need lambda > 2"},
            )
        )

    _su11_checks(report, tols.exact)
    _ladder_checks(report, tols.exact)
    logger.debug(f"fock-verify ran {len(report.checks)} checks on {len(indices)} states")
    return report
