"""Analytic model: basis polynomials on the Cartan domain, kernels and coherent states."""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Callable, Iterator, Optional, Sequence, Union

import numpy as np
from scipy.special import binom, roots_jacobi

from .algebra import I2, GroupElement, _as_matrix, in_cartan_domain
from .config import MonteCarloSettings, threads_from_env
from .errors import DomainViolation, InvalidIndex, InvalidScaleDimension, SingularMatrix
from .polynomial import (
    Polynomial,
    entries_to_z,
    monomials_of_degree,
    polynomial_sum,
    z_values,
)
from .wigner import q_position, q_values, wigner_d, wigner_terms

logger = logging.getLogger(__name__)

Evaluator = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class BasisIndex:
    """Label (j, m, q_a, q_b) of one basis vector at scale dimension lam.

    Spins are stored doubled so every label is an integer.
    """

    lam: int
    two_j: int
    m: int
    two_qa: int
    two_qb: int

    def __post_init__(self) -> None:
        if self.lam < 2:
            raise InvalidScaleDimension(f"Scale dimension must be at least 2, got {self.lam}")
        if self.two_j < 0 or self.m < 0:
            raise InvalidIndex(f"Negative spin or mass label in {self}")
        for two_q in (self.two_qa, self.two_qb):
            if abs(two_q) > self.two_j or (self.two_j - two_q) % 2:
                raise InvalidIndex(f"Magnetic label 2q={two_q} incompatible with 2j={self.two_j}")

    @property
    def j(self) -> float:
        return self.two_j / 2

    @property
    def qa(self) -> float:
        return self.two_qa / 2

    @property
    def qb(self) -> float:
        return self.two_qb / 2

    @property
    def degree(self) -> int:
        """Homogeneity degree 2j + 2m."""
        return self.two_j + 2 * self.m

    def shifted(
        self, d_two_j: int = 0, dm: int = 0, d_two_qa: int = 0, d_two_qb: int = 0
    ) -> Optional["BasisIndex"]:
        """Neighbouring label, or None when it falls off the index lattice."""
        two_j, m = self.two_j + d_two_j, self.m + dm
        two_qa, two_qb = self.two_qa + d_two_qa, self.two_qb + d_two_qb
        if two_j < 0 or m < 0 or abs(two_qa) > two_j or abs(two_qb) > two_j:
            return None
        return BasisIndex(self.lam, two_j, m, two_qa, two_qb)

    def with_lambda(self, lam: int) -> "BasisIndex":
        return BasisIndex(lam, self.two_j, self.m, self.two_qa, self.two_qb)

    def sort_key(self) -> tuple[int, int, int, int]:
        return (self.degree, self.two_j, -self.two_qa, -self.two_qb)

    def to_dict(self) -> dict[str, Any]:
        return {
            "lambda": self.lam,
            "j": self.j,
            "m": self.m,
            "qa": self.qa,
            "qb": self.qb,
        }

    def __str__(self) -> str:
        return f"(j={self.j:g}, m={self.m}, qa={self.qa:g}, qb={self.qb:g}; lambda={self.lam})"


def indices_of_degree(degree: int, lam: int) -> list[BasisIndex]:
    """All indices with 2j + 2m = degree."""
    out = []
    for two_j in range(degree, -1, -2):
        m = (degree - two_j) // 2
        for two_qa in q_values(two_j):
            for two_qb in q_values(two_j):
                out.append(BasisIndex(lam, two_j, m, two_qa, two_qb))
    return out


def indices_up_to(max_degree: int, lam: int) -> list[BasisIndex]:
    return [idx for d in range(max_degree + 1) for idx in indices_of_degree(d, lam)]


def degree_count(degree: int) -> int:
    """Dimension of homogeneous polynomials of this degree in four variables."""
    return math.comb(degree + 3, 3)


@lru_cache(maxsize=None)
def normalization(two_j: int, m: int, lam: int) -> float:
    """sqrt((2j+1)/(lam-1) C(m+lam-2, lam-2) C(m+2j+lam-1, lam-2)), exact until the root."""
    if lam < 2:
        raise InvalidScaleDimension(f"Scale dimension must be at least 2, got {lam}")
    value = (
        Fraction(two_j + 1, lam - 1)
        * math.comb(m + lam - 2, lam - 2)
        * math.comb(m + two_j + lam - 1, lam - 2)
    )
    return math.sqrt(value)


# ---------------------------------------------------------------------------
# Basis polynomials


def _entry_det() -> Polynomial:
    return Polynomial({(1, 0, 0, 1): 1.0, (0, 1, 1, 0): -1.0})


@lru_cache(maxsize=None)
def wigner_entry_polynomial(two_j: int, two_qa: int, two_qb: int) -> Polynomial:
    """D^j_{qa qb} as a polynomial in the matrix entries (z11, z12, z21, z22)."""
    terms = wigner_terms(two_j)
    row, col = q_position(two_j, two_qa), q_position(two_j, two_qb)
    mask = (terms.rows == row) & (terms.cols == col)
    return Polynomial(
        {tuple(int(e) for e in exp): coeff for exp, coeff in zip(terms.exponents[mask], terms.coeffs[mask])}
    )


@lru_cache(maxsize=None)
def det_power(m: int) -> Polynomial:
    return _entry_det() ** m


@lru_cache(maxsize=None)
def basis_poly_entries(idx: BasisIndex) -> Polynomial:
    """Basis polynomial written in the matrix entries of Z."""
    return (
        det_power(idx.m)
        * wigner_entry_polynomial(idx.two_j, idx.two_qa, idx.two_qb)
        * normalization(idx.two_j, idx.m, idx.lam)
    )


@lru_cache(maxsize=None)
def basis_poly(idx: BasisIndex) -> Polynomial:
    """Normalized basis polynomial N det(Z)^m D^j_{qa qb}(Z) in the coordinates z_mu."""
    return entries_to_z(basis_poly_entries(idx))


def basis_block(two_j: int, m: int, lam: int, Z: Any) -> np.ndarray:
    """All (2j+1)^2 basis values N det(Z)^m D^j(Z) at once; Z has shape (..., 2, 2)."""
    Z = np.asarray(_as_matrix(Z), dtype=complex)
    det = np.linalg.det(Z)
    return normalization(two_j, m, lam) * (det**m)[..., None, None] * wigner_d(two_j, Z)


def basis_value(idx: BasisIndex, Z: Any) -> np.ndarray:
    block = basis_block(idx.two_j, idx.m, idx.lam, Z)
    return block[..., q_position(idx.two_j, idx.two_qa), q_position(idx.two_j, idx.two_qb)]


@lru_cache(maxsize=None)
def _degree_system(degree: int, lam: int) -> tuple[list[BasisIndex], dict, np.ndarray]:
    indices = indices_of_degree(degree, lam)
    monomials = {e: row for row, e in enumerate(monomials_of_degree(degree))}
    matrix = np.zeros((len(monomials), len(indices)), dtype=complex)
    for col, idx in enumerate(indices):
        for e, c in basis_poly(idx).terms.items():
            matrix[monomials[e], col] = c
    logger.debug(f"Basis change matrix at degree {degree}, lambda={lam}: {matrix.shape}")
    return indices, monomials, np.linalg.inv(matrix)


def expand_in_basis(poly: Polynomial, lam: int, tol: float = 1e-14) -> dict[BasisIndex, complex]:
    """Coefficients of a z_mu polynomial in the basis, one exact solve per degree."""
    out: dict[BasisIndex, complex] = {}
    for degree in poly.degrees():
        indices, monomials, inverse = _degree_system(degree, lam)
        vector = np.zeros(len(monomials), dtype=complex)
        for e, c in poly.homogeneous_part(degree).terms.items():
            vector[monomials[e]] = c
        coeffs = inverse @ vector
        for idx, c in zip(indices, coeffs):
            if abs(c) > tol:
                out[idx] = complex(c)
    return out


def combine_basis(coeffs: dict[BasisIndex, complex]) -> Polynomial:
    """Inverse of expand_in_basis."""
    return polynomial_sum(basis_poly(idx) * c for idx, c in coeffs.items())


# ---------------------------------------------------------------------------
# Kernels and coherent states


def _domain_matrix(Z: Any) -> np.ndarray:
    Z = _as_matrix(Z)
    if not in_cartan_domain(Z):
        raise DomainViolation("Point lies outside the Cartan domain")
    return Z


def delta(Z: Any) -> float:
    """det(1 - Z^dag Z)."""
    Z = _as_matrix(Z)
    return float(np.linalg.det(I2 - Z.conj().T @ Z).real)


def bergman_kernel(Z: Any, Zp: Any, lam: int) -> complex:
    """det(1 - Z^dag Z')^{-lam}."""
    Z, Zp = _domain_matrix(Z), _domain_matrix(Zp)
    det = np.linalg.det(I2 - Z.conj().T @ Zp)
    if abs(det) < 1e-300:
        raise SingularMatrix("1 - Z^dag Z' is singular")
    return complex(det ** (-lam))


def kernel_partial_sum(Z: Any, Zp: Any, lam: int, max_degree: int) -> complex:
    """Sum of conj(phi(Z)) phi(Z') over every index with 2j + 2m <= max_degree."""
    if lam < 2:
        raise InvalidScaleDimension(f"Kernel expansion requires lambda >= 2, got {lam}")
    Z, Zp = _as_matrix(Z), _as_matrix(Zp)
    det_bar, det_p = np.conj(np.linalg.det(Z)), np.linalg.det(Zp)
    total = 0j
    for two_j in range(max_degree + 1):
        pairing = np.sum(np.conj(wigner_d(two_j, Z)) * wigner_d(two_j, Zp))
        for m in range((max_degree - two_j) // 2 + 1):
            total += normalization(two_j, m, lam) ** 2 * (det_bar * det_p) ** m * pairing
    return complex(total)


def trace_series(X: Any, lam: int, t: float, max_degree: int) -> complex:
    """Character series whose limit is det(1 - tX)^{-lam}."""
    X = np.asarray(X, dtype=complex)
    det = np.linalg.det(X)
    total = 0j
    for two_j in range(max_degree + 1):
        chi = np.trace(wigner_d(two_j, X))
        for m in range((max_degree - two_j) // 2 + 1):
            total += normalization(two_j, m, lam) ** 2 * t ** (two_j + 2 * m) * det**m * chi
    return complex(total)


def cs_overlap(Z: Any, Zp: Any, lam: int) -> complex:
    """<Z|Z'> = det(1-Z'^dag Z')^{lam/2} det(1-Z^dag Z)^{lam/2} / det(1 - Z'^dag Z)^lam."""
    Z, Zp = _domain_matrix(Z), _domain_matrix(Zp)
    cross = np.linalg.det(I2 - Zp.conj().T @ Z)
    return complex(delta(Zp) ** (lam / 2) * delta(Z) ** (lam / 2) / cross**lam)


def cs_coefficients(Z: Any, lam: int, max_degree: int) -> dict[BasisIndex, complex]:
    """Expansion of |Z> on the basis: det(1-Z^dag Z)^{lam/2} conj(phi(Z))."""
    Z = _domain_matrix(Z)
    prefactor = delta(Z) ** (lam / 2)
    return {
        idx: complex(prefactor * np.conj(basis_value(idx, Z)))
        for idx in indices_up_to(max_degree, lam)
    }


# ---------------------------------------------------------------------------
# Finite group action


def as_evaluator(phi: Union[Polynomial, BasisIndex, Evaluator]) -> Evaluator:
    """Turn a polynomial in z_mu, a basis label, or a callable into a matrix evaluator."""
    if isinstance(phi, BasisIndex):
        return lambda Z: basis_value(phi, Z)
    if isinstance(phi, Polynomial):
        return lambda Z: phi.evaluate(z_values(Z))
    return phi


def rep_action_eval(g: GroupElement, phi: Any, lam: int, Z: Any) -> Any:
    """[U(g) phi](Z) = det(D^dag - B^dag Z)^{-lam} phi((A^dag Z - C^dag)(D^dag - B^dag Z)^{-1})."""
    if not isinstance(g, GroupElement):
        g = GroupElement(g)
    evaluator = as_evaluator(phi)
    Z = np.asarray(_as_matrix(Z), dtype=complex)
    Ah, Bh, Ch, Dh = (block.conj().T for block in (g.A, g.B, g.C, g.D))
    denom = Dh - Bh @ Z
    det = np.linalg.det(denom)
    if np.any(np.abs(det) < 1e-14):
        raise SingularMatrix("D^dag - B^dag Z is singular")
    Zp = (Ah @ Z - Ch) @ np.linalg.inv(denom)
    return det ** (-lam) * evaluator(Zp)


def rep_action_coeffs(g: GroupElement, lam: int, max_degree: int) -> dict[BasisIndex, complex]:
    """Basis coefficients of U(g) applied to the constant function 1."""
    if not isinstance(g, GroupElement):
        g = GroupElement(g)
    det_d = np.linalg.det(g.D)
    if abs(det_d) < 1e-14:
        raise SingularMatrix("D block is not invertible")
    W = g.B @ np.linalg.inv(g.D)
    prefactor = np.conj(det_d) ** (-lam)
    out = {}
    for two_j in range(max_degree + 1):
        for m in range((max_degree - two_j) // 2 + 1):
            block = np.conj(basis_block(two_j, m, lam, W))
            for two_qa in q_values(two_j):
                for two_qb in q_values(two_j):
                    idx = BasisIndex(lam, two_j, m, two_qa, two_qb)
                    value = block[q_position(two_j, two_qa), q_position(two_j, two_qb)]
                    out[idx] = complex(prefactor * value)
    return out


def evaluate_expansion(coeffs: dict[BasisIndex, complex], Z: Any) -> complex:
    """sum c_idx phi_idx(Z)."""
    return complex(sum(c * basis_value(idx, Z) for idx, c in coeffs.items()))


# ---------------------------------------------------------------------------
# Monte Carlo inner products


@dataclass(frozen=True)
class MonteCarloResult:
    estimate: complex
    stderr: float
    n: int
    seed: int
    accepted: int = 0

    def within(self, target: complex, sigmas: float = 3.0, floor: float = 1e-12) -> bool:
        return abs(self.estimate - target) <= sigmas * self.stderr + floor

    def to_dict(self) -> dict[str, Any]:
        return {
            "estimate": [self.estimate.real, self.estimate.imag],
            "stderr": self.stderr,
            "n": self.n,
            "seed": self.seed,
        }


#: Volume of the entrywise unit polydisk in C^4.
POLYDISK_VOLUME = math.pi**4


def sample_polydisk(rng: np.random.Generator, size: int) -> np.ndarray:
    """Uniform samples of 2x2 matrices with every entry in the closed unit disk."""
    radius = np.sqrt(rng.random((size, 4)))
    angle = 2 * np.pi * rng.random((size, 4))
    return (radius * np.exp(1j * angle)).reshape(size, 2, 2)


def _domain_mask(Z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    ZdZ = np.conj(np.swapaxes(Z, -1, -2)) @ Z
    eigvals = np.linalg.eigvalsh(np.eye(2) - ZdZ)
    dets = np.prod(eigvals, axis=-1)
    return eigvals[..., 0] > 0, dets


def _stream_moments(
    features: Callable[[np.ndarray], np.ndarray],
    width: int,
    lam: int,
    n: int,
    seed_seq: np.random.SeedSequence,
    chunk_size: int,
) -> tuple[np.ndarray, np.ndarray, int]:
    """Sums of w conj(F_a) F_b and of their squared moduli over one sub-stream."""
    rng = np.random.default_rng(seed_seq)
    c_lam = (lam - 1) * (lam - 2) ** 2 * (lam - 3) / math.pi**4
    total = np.zeros((width, width), dtype=complex)
    total_sq = np.zeros((width, width))
    accepted, done = 0, 0
    while done < n:
        size = min(chunk_size, n - done)
        Z = sample_polydisk(rng, size)
        mask, dets = _domain_mask(Z)
        if np.any(mask):
            inside = Z[mask]
            weight = POLYDISK_VOLUME * c_lam * dets[mask] ** (lam - 4)
            F = features(inside)
            # |w conj(F_a) F_b|^2 factorizes, so no (size, k, k) array is ever built
            total = total + np.einsum("n,na,nb->ab", weight, np.conj(F), F)
            power = np.abs(F) ** 2
            total_sq = total_sq + np.einsum("n,na,nb->ab", weight**2, power, power)
        accepted += int(mask.sum())
        done += size
    return total, total_sq, accepted


def _split(n: int, parts: int) -> Iterator[int]:
    base, extra = divmod(n, parts)
    for i in range(parts):
        yield base + (1 if i < extra else 0)


def _mc_moments(
    features: Callable[[np.ndarray], np.ndarray],
    width: int,
    lam: int,
    n_samples: int,
    seed: int,
    settings: Optional[MonteCarloSettings],
    threads: Optional[int],
) -> tuple[np.ndarray, np.ndarray, int]:
    """Mean and standard error of w conj(F_a) F_b under uniform polydisk proposals.

    Samples are split over a fixed set of spawned sub-streams, so the result only
    depends on the seed and not on the thread count.
    """
    if lam < 4:
        raise InvalidScaleDimension(f"Monte Carlo inner products require lambda >= 4, got {lam}")
    if n_samples <= 0:
        raise ValueError("n_samples must be positive")
    settings = settings or MonteCarloSettings()
    threads = threads or threads_from_env()
    streams = np.random.SeedSequence(seed).spawn(settings.n_streams)
    counts = list(_split(n_samples, settings.n_streams))
    logger.debug(
        f"Monte Carlo: {n_samples} samples over {settings.n_streams} streams, {threads} threads"
    )

    def run(i: int) -> tuple[np.ndarray, np.ndarray, int]:
        return _stream_moments(features, width, lam, counts[i], streams[i], settings.chunk_size)

    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        results = list(pool.map(run, range(settings.n_streams)))

    total = sum(r[0] for r in results)
    total_sq = sum(r[1] for r in results)
    accepted = sum(r[2] for r in results)
    mean = total / n_samples
    variance = np.maximum(total_sq / n_samples - np.abs(mean) ** 2, 0.0)
    logger.debug(f"Monte Carlo acceptance ratio {accepted / n_samples:.4f}")
    return mean, np.sqrt(variance / n_samples), accepted


def mc_inner_product(
    f: Any,
    h: Any,
    lam: int,
    n_samples: int,
    seed: int,
    settings: Optional[MonteCarloSettings] = None,
    threads: Optional[int] = None,
) -> MonteCarloResult:
    """Estimate the integral of conj(f) h against the normalized lambda-measure."""
    f_eval, h_eval = as_evaluator(f), as_evaluator(h)
    mean, stderr, accepted = _mc_moments(
        lambda Z: np.stack([f_eval(Z) * np.ones(len(Z)), h_eval(Z) * np.ones(len(Z))], axis=-1),
        2,
        lam,
        n_samples,
        seed,
        settings,
        threads,
    )
    return MonteCarloResult(complex(mean[0, 1]), float(stderr[0, 1]), n_samples, seed, accepted)


@dataclass(frozen=True)
class MonteCarloGram:
    """Gram matrix of a list of basis vectors with per-entry standard errors."""

    indices: tuple[BasisIndex, ...]
    estimate: np.ndarray
    stderr: np.ndarray
    n: int
    seed: int
    accepted: int

    def deviation(self) -> np.ndarray:
        """|G - 1| entrywise."""
        return np.abs(self.estimate - np.eye(len(self.indices)))

    def failures(self, sigmas: float = 3.0, floor: float = 1e-12) -> list[tuple[BasisIndex, BasisIndex]]:
        bad = self.deviation() > sigmas * self.stderr + floor
        return [(self.indices[a], self.indices[b]) for a, b in zip(*np.nonzero(bad))]


def mc_gram(
    indices: Sequence[BasisIndex],
    lam: int,
    n_samples: int,
    seed: int,
    settings: Optional[MonteCarloSettings] = None,
    threads: Optional[int] = None,
) -> MonteCarloGram:
    """All inner products <phi_a, phi_b> from a single sample set."""
    indices = tuple(indices)
    if any(idx.lam != lam for idx in indices):
        raise InvalidScaleDimension(f"Every index must carry lambda={lam}")
    mean, stderr, accepted = _mc_moments(
        lambda Z: np.stack([basis_value(idx, Z) for idx in indices], axis=-1),
        len(indices),
        lam,
        n_samples,
        seed,
        settings,
        threads,
    )
    return MonteCarloGram(indices, mean, stderr, n_samples, seed, accepted)


# ---------------------------------------------------------------------------
# The scalar disk analogue


def _check_kappa(kappa: float) -> float:
    if kappa <= 0.5:
        raise InvalidIndex(f"Bargmann index must exceed 1/2, got {kappa}")
    return float(kappa)


def _check_disk_point(z: complex) -> complex:
    if not abs(z) < 1:
        raise DomainViolation(f"Disk point must satisfy |z| < 1, got {z}")
    return complex(z)


def disk_basis(kappa: float, n: int) -> float:
    """Coefficient sqrt(C(2 kappa + n - 1, n)) of phi_n(z) = c z^n."""
    kappa = _check_kappa(kappa)
    if n < 0:
        raise InvalidIndex(f"Disk level must be non-negative, got {n}")
    return float(np.sqrt(binom(2 * kappa + n - 1, n)))


def disk_phi(kappa: float, n: int, z: Any) -> Any:
    return disk_basis(kappa, n) * np.asarray(z, dtype=complex) ** n


def disk_bergman_kernel(z: complex, zp: complex, kappa: float) -> complex:
    """(1 - conj(z) z')^{-2 kappa}."""
    z, zp = _check_disk_point(z), _check_disk_point(zp)
    return complex((1 - np.conj(z) * zp) ** (-2 * _check_kappa(kappa)))


def disk_overlap(z: complex, zp: complex, kappa: float) -> complex:
    """<z|z'> = (1-|z|^2)^kappa (1-|z'|^2)^kappa / (1 - z conj(z'))^{2 kappa}."""
    z, zp = _check_disk_point(z), _check_disk_point(zp)
    kappa = _check_kappa(kappa)
    return complex(
        (1 - abs(z) ** 2) ** kappa * (1 - abs(zp) ** 2) ** kappa / (1 - z * np.conj(zp)) ** (2 * kappa)
    )


def disk_partial_kernel(z: complex, zp: complex, kappa: float, max_level: int) -> complex:
    """sum_{n <= N} conj(phi_n(z)) phi_n(z')."""
    z, zp = _check_disk_point(z), _check_disk_point(zp)
    kappa = _check_kappa(kappa)
    levels = np.arange(max_level + 1)
    weights = binom(2 * kappa + levels - 1, levels)
    return complex(np.sum(weights * (np.conj(z) * zp) ** levels))


def disk_integrate(
    integrand: Callable[[np.ndarray], np.ndarray],
    kappa: float,
    n_radial: int = 32,
    n_angular: int = 64,
) -> complex:
    """(2 kappa - 1)/pi times the integral of integrand(z) (1-|z|^2)^{2 kappa - 2} over the disk.

    Radial Gauss-Jacobi in u = |z|^2 carries the weight; angles use the trapezoid rule.
    """
    kappa = _check_kappa(kappa)
    alpha = 2 * kappa - 2
    x, w = roots_jacobi(n_radial, alpha, 0.0)
    u = (1 + x) / 2
    radial_weights = w * 2.0 ** (-alpha - 1)
    theta = 2 * np.pi * np.arange(n_angular) / n_angular
    z = np.sqrt(u)[:, None] * np.exp(1j * theta)[None, :]
    values = integrand(z)
    # d^2z = (1/2) du dtheta
    integral = 0.5 * (2 * np.pi / n_angular) * np.sum(radial_weights[:, None] * values)
    return complex((2 * kappa - 1) / np.pi * integral)


def disk_resolution(kappa: float, n: int, n_radial: int = 32, n_angular: int = 64) -> float:
    """Norm of phi_n under the disk measure; 1 for every level."""
    return disk_integrate(lambda z: np.abs(disk_phi(kappa, n, z)) ** 2, kappa, n_radial, n_angular).real


def disk_gram(kappa: float, max_level: int) -> np.ndarray:
    """Gram matrix of phi_0..phi_N by quadrature; the identity up to rounding."""
    n_radial = max_level + 4
    n_angular = 2 * max_level + 4
    gram = np.zeros((max_level + 1, max_level + 1), dtype=complex)
    for a in range(max_level + 1):
        for b in range(max_level + 1):
            gram[a, b] = disk_integrate(
                lambda z: np.conj(disk_phi(kappa, a, z)) * disk_phi(kappa, b, z),
                kappa,
                n_radial,
                n_angular,
            )
    return gram
