"""Matrix conventions, group elements and Cartan domain geometry for U(2,2)."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Union

import numpy as np
from scipy.stats import unitary_group

from .errors import DomainViolation, InvalidScaleDimension, SingularMatrix

logger = logging.getLogger(__name__)

I2 = np.eye(2, dtype=complex)
I4 = np.eye(4, dtype=complex)

#: Pauli matrices with the identity in slot 0.
SIGMA = np.array(
    [
        [[1, 0], [0, 1]],
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=complex,
)

#: Minkowski metric diag(1, -1, -1, -1).
ETA = np.diag([1.0, -1.0, -1.0, -1.0])

#: Lowered Pauli matrices sigma_mu = eta_{mu nu} sigma^nu.
SIGMA_LOWER = np.einsum("mn,nij->mij", ETA, SIGMA)

#: Pairs mu < nu labelling the Lorentz generators.
LORENTZ_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))

#: Rotation operators as complex combinations of M^{mu nu} (upper indices).
#: S_ak = (M^{0k} - i M^{lm})/2 and S_bk = (M^{0k} + i M^{lm})/2 with (k, l, m) cyclic;
#: S_a(+/-) = S_a1 -/+ i S_a2 and S_b(+/-) = S_b1 +/- i S_b2.
_CYCLIC = {1: (2, 3), 2: (3, 1), 3: (1, 2)}


def _rotation_terms() -> dict[str, dict[tuple[int, int], complex]]:
    terms: dict[str, dict[tuple[int, int], complex]] = {}
    for side, sign in (("a", -1), ("b", 1)):
        for k, (l, m) in _CYCLIC.items():
            combo = {(0, k): 0.5}
            if l < m:
                combo[(l, m)] = 0.5j * sign
            else:
                combo[(m, l)] = -0.5j * sign
            terms[f"S{side}{k}"] = combo

    def add(*parts: tuple[complex, str]) -> dict[tuple[int, int], complex]:
        out: dict[tuple[int, int], complex] = {}
        for coeff, name in parts:
            for pair, value in terms[name].items():
                out[pair] = out.get(pair, 0) + coeff * value
        return out

    terms["Sa+"] = add((1, "Sa1"), (-1j, "Sa2"))
    terms["Sa-"] = add((1, "Sa1"), (1j, "Sa2"))
    terms["Sb+"] = add((1, "Sb1"), (1j, "Sb2"))
    terms["Sb-"] = add((1, "Sb1"), (-1j, "Sb2"))
    return terms


ROTATION_TERMS: dict[str, dict[tuple[int, int], complex]] = _rotation_terms()

#: Every linear generator name understood by the library.
LINEAR_GENERATORS: tuple[str, ...] = (
    ("D",)
    + tuple(f"P{mu}" for mu in range(4))
    + tuple(f"K{mu}" for mu in range(4))
    + tuple(f"M{mu}{nu}" for mu, nu in LORENTZ_PAIRS)
    + tuple(ROTATION_TERMS)
)

MatrixLike = Union[np.ndarray, "CartanPoint"]


def _as_matrix(Z: Any) -> np.ndarray:
    if isinstance(Z, CartanPoint):
        return Z.Z
    if isinstance(Z, TubePoint):
        return Z.W
    return np.asarray(Z, dtype=complex)


def _matrix_to_json(M: np.ndarray) -> list[list[list[float]]]:
    return [[[float(v.real), float(v.imag)] for v in row] for row in M]


def _matrix_from_json(data: list) -> np.ndarray:
    return np.array([[complex(re, im) for re, im in row] for row in data], dtype=complex)


# ---------------------------------------------------------------------------
# Gamma matrices and the conformal generators


@dataclass(frozen=True)
class ConformalMatrices:
    """Weyl-basis gamma matrices and the fifteen conformal generators plus identity."""

    gamma: np.ndarray  # (4, 4, 4): gamma^mu
    gamma5: np.ndarray
    D: np.ndarray
    P: np.ndarray  # (4, 4, 4): P^mu
    K: np.ndarray  # (4, 4, 4): K^mu
    M: np.ndarray  # (4, 4, 4, 4): M^{mu nu}
    identity: np.ndarray

    def basis(self) -> list[tuple[str, np.ndarray]]:
        """The sixteen u(2,2) matrices in a fixed order."""
        items = [("D", self.D)]
        items += [(f"P{mu}", self.P[mu]) for mu in range(4)]
        items += [(f"K{mu}", self.K[mu]) for mu in range(4)]
        items += [(f"M{mu}{nu}", self.M[mu, nu]) for mu, nu in LORENTZ_PAIRS]
        items.append(("I", self.identity))
        return items


@lru_cache(maxsize=1)
def gamma_matrices() -> ConformalMatrices:
    """Gamma matrices in the Weyl basis and the matrix generators D, M, P, K, I."""
    zero = np.zeros((2, 2), dtype=complex)
    gamma = np.array(
        [np.block([[zero, SIGMA[mu]], [SIGMA_LOWER[mu], zero]]) for mu in range(4)]
    )
    gamma5 = 1j * gamma[0] @ gamma[1] @ gamma[2] @ gamma[3]
    P = np.array([np.block([[zero, SIGMA[mu]], [zero, zero]]) for mu in range(4)])
    K = np.array([np.block([[zero, zero], [SIGMA_LOWER[mu], zero]]) for mu in range(4)])
    M = np.zeros((4, 4, 4, 4), dtype=complex)
    for mu in range(4):
        for nu in range(4):
            M[mu, nu] = (gamma[mu] @ gamma[nu] - gamma[nu] @ gamma[mu]) / 4
    return ConformalMatrices(
        gamma=gamma,
        gamma5=gamma5,
        D=gamma5 / 2,
        P=P,
        K=K,
        M=M,
        identity=I4.copy(),
    )


def generator_matrix(name: str) -> np.ndarray:
    """4x4 matrix of a linear generator (D, P0..P3, K0..K3, Mmn, Sa*, Sb*, I)."""
    mats = gamma_matrices()
    if name == "D":
        return mats.D
    if name == "I":
        return mats.identity
    if name[0] in "PK" and len(name) == 2 and name[1] in "0123":
        return (mats.P if name[0] == "P" else mats.K)[int(name[1])]
    if name[0] == "M" and len(name) == 3:
        return mats.M[int(name[1]), int(name[2])]
    if name in ROTATION_TERMS:
        return sum(coeff * mats.M[mu, nu] for (mu, nu), coeff in ROTATION_TERMS[name].items())
    raise KeyError(f"Unknown generator {name!r}")


@dataclass(frozen=True)
class StructureConstants:
    """Real structure constants [X_a, X_b] = sum_c f[a, b, c] X_c."""

    names: tuple[str, ...]
    f: np.ndarray
    residual: float


@lru_cache(maxsize=1)
def structure_constants() -> StructureConstants:
    """Structure constants of the sixteen u(2,2) matrices, with closure residual."""
    basis = gamma_matrices().basis()
    names = tuple(n for n, _ in basis)
    mats = np.array([m for _, m in basis])
    # Real-linear solve: stack real and imaginary parts of the flattened matrices
    design = np.concatenate([mats.reshape(16, -1).real, mats.reshape(16, -1).imag], axis=1).T
    comms = np.einsum("aij,bjk->abik", mats, mats) - np.einsum("bij,ajk->abik", mats, mats)
    rhs = comms.reshape(256, -1)
    rhs = np.concatenate([rhs.real, rhs.imag], axis=1).T
    coeffs, *_ = np.linalg.lstsq(design, rhs, rcond=None)
    residual = float(np.max(np.abs(design @ coeffs - rhs)))
    logger.debug(f"u(2,2) structure constants closure residual {residual:.3e}")
    return StructureConstants(names=names, f=coeffs.T.reshape(16, 16, 16), residual=residual)


# ---------------------------------------------------------------------------
# Coordinates


def coordinates_to_matrix(z: np.ndarray) -> np.ndarray:
    """Z = z_mu sigma^mu; accepts (..., 4) and returns (..., 2, 2)."""
    z = np.asarray(z, dtype=complex)
    return np.einsum("...m,mij->...ij", z, SIGMA)


def matrix_to_coordinates(Z: Any) -> np.ndarray:
    """Inverse of coordinates_to_matrix: z_mu = tr(Z sigma^mu)/2."""
    Z = _as_matrix(Z)
    return np.einsum("...ij,mji->...m", Z, SIGMA) / 2


def raise_index(z: np.ndarray) -> np.ndarray:
    """z^mu = eta^{mu mu} z_mu."""
    return np.asarray(z) * np.diag(ETA)


# ---------------------------------------------------------------------------
# Domain types


def in_cartan_domain(Z: Any, margin: float = 0.0, tol: float = 1e-12) -> bool:
    """True iff both eigenvalues of 1 - Z^dag Z exceed margin (strictly, up to tol)."""
    Z = _as_matrix(Z)
    if Z.shape != (2, 2) or not np.all(np.isfinite(Z)):
        return False
    eigvals = np.linalg.eigvalsh(I2 - Z.conj().T @ Z)
    return bool(np.min(eigvals) > margin + tol)


@dataclass(frozen=True)
class CartanPoint:
    """A point Z of the Cartan domain, validated on construction."""

    Z: np.ndarray

    def __post_init__(self) -> None:
        Z = np.array(self.Z, dtype=complex)
        if Z.shape != (2, 2):
            raise DomainViolation(f"Cartan point must be 2x2, got shape {Z.shape}")
        if not in_cartan_domain(Z):
            raise DomainViolation("1 - Z^dag Z is not positive definite")
        Z.setflags(write=False)
        object.__setattr__(self, "Z", Z)

    @classmethod
    def from_coordinates(cls, z: Any) -> "CartanPoint":
        return cls(coordinates_to_matrix(z))

    @property
    def coordinates(self) -> np.ndarray:
        return matrix_to_coordinates(self.Z)

    def delta(self) -> float:
        """det(1 - Z^dag Z), strictly positive."""
        return float(np.linalg.det(I2 - self.Z.conj().T @ self.Z).real)

    def to_json(self) -> str:
        return json.dumps({"Z": _matrix_to_json(self.Z)})

    @classmethod
    def from_json(cls, text: str) -> "CartanPoint":
        return cls(_matrix_from_json(json.loads(text)["Z"]))


@dataclass(frozen=True)
class TubePoint:
    """A point W = X + iY of the forward tube (Y positive definite)."""

    W: np.ndarray

    def __post_init__(self) -> None:
        W = np.array(self.W, dtype=complex)
        if W.shape != (2, 2):
            raise DomainViolation(f"Tube point must be 2x2, got shape {W.shape}")
        Y = (W - W.conj().T) / 2j
        if np.min(np.linalg.eigvalsh(Y)) <= 0:
            raise DomainViolation("Imaginary part of W is not positive definite")
        W.setflags(write=False)
        object.__setattr__(self, "W", W)

    @property
    def X(self) -> np.ndarray:
        return (self.W + self.W.conj().T) / 2

    @property
    def Y(self) -> np.ndarray:
        return (self.W - self.W.conj().T) / 2j


def _gamma5() -> np.ndarray:
    return gamma_matrices().gamma5


def pseudo_unitarity_residual(g: np.ndarray) -> float:
    """max |g^dag gamma5 g - gamma5|."""
    g5 = _gamma5()
    return float(np.max(np.abs(g.conj().T @ g5 @ g - g5)))


def block_relation_residuals(g: np.ndarray) -> dict[str, float]:
    """Residuals of D^dag D - B^dag B = 1, A^dag A - C^dag C = 1, A^dag B - C^dag D = 0."""
    A, B, C, D = g[:2, :2], g[:2, 2:], g[2:, :2], g[2:, 2:]
    return {
        "DD-BB": float(np.max(np.abs(D.conj().T @ D - B.conj().T @ B - I2))),
        "AA-CC": float(np.max(np.abs(A.conj().T @ A - C.conj().T @ C - I2))),
        "AB-CD": float(np.max(np.abs(A.conj().T @ B - C.conj().T @ D))),
    }


@dataclass(frozen=True)
class GroupElement:
    """4x4 pseudo-unitary matrix g with g^dag gamma5 g = gamma5."""

    g: np.ndarray

    def __post_init__(self) -> None:
        g = np.array(self.g, dtype=complex)
        if g.shape != (4, 4):
            raise DomainViolation(f"Group element must be 4x4, got shape {g.shape}")
        residual = pseudo_unitarity_residual(g)
        if residual > 1e-9:
            raise DomainViolation(f"g^dag gamma5 g != gamma5 (residual {residual:.3e})")
        g.setflags(write=False)
        object.__setattr__(self, "g", g)

    @classmethod
    def from_blocks(cls, A: Any, B: Any, C: Any, D: Any) -> "GroupElement":
        return cls(np.block([[np.asarray(A), np.asarray(B)], [np.asarray(C), np.asarray(D)]]))

    @classmethod
    def rotation(cls, Va: Any, Vb: Any) -> "GroupElement":
        """Block-diagonal element of U(2) x U(2)."""
        zero = np.zeros((2, 2), dtype=complex)
        return cls.from_blocks(Va, zero, zero, Vb)

    @property
    def A(self) -> np.ndarray:
        return self.g[:2, :2]

    @property
    def B(self) -> np.ndarray:
        return self.g[:2, 2:]

    @property
    def C(self) -> np.ndarray:
        return self.g[2:, :2]

    @property
    def D(self) -> np.ndarray:
        return self.g[2:, 2:]

    def __matmul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(self.g @ other.g)

    def inverse(self) -> "GroupElement":
        g5 = _gamma5()
        return GroupElement(g5 @ self.g.conj().T @ g5)

    def to_json(self) -> str:
        return json.dumps({"g": _matrix_to_json(self.g)})

    @classmethod
    def from_json(cls, text: str) -> "GroupElement":
        return cls(_matrix_from_json(json.loads(text)["g"]))


def check_unit_determinant(g: Any, tol: float = 1e-10) -> bool:
    """Optional SU(2,2) validator: |det g| = 1."""
    g = g.g if isinstance(g, GroupElement) else np.asarray(g)
    return bool(abs(abs(np.linalg.det(g)) - 1.0) <= tol)


def inverse_sqrt_positive(H: np.ndarray, floor: float = 1e-13) -> np.ndarray:
    """H^{-1/2} for hermitian positive-definite H via eigendecomposition."""
    H = (H + H.conj().T) / 2
    eigvals, eigvecs = np.linalg.eigh(H)
    if np.min(eigvals) < floor:
        raise DomainViolation(f"Matrix is not positive definite (min eigenvalue {np.min(eigvals):.3e})")
    return (eigvecs * eigvals ** -0.5) @ eigvecs.conj().T


def make_group_element(Z: MatrixLike) -> GroupElement:
    """Coset representative [[D1, Z D2], [Z^dag D1, D2]] with Di = (1 - ...)^{-1/2}."""
    Z = _as_matrix(Z)
    delta1 = inverse_sqrt_positive(I2 - Z @ Z.conj().T)
    delta2 = inverse_sqrt_positive(I2 - Z.conj().T @ Z)
    return GroupElement.from_blocks(delta1, Z @ delta2, Z.conj().T @ delta1, delta2)


def iwasawa(g: Union[GroupElement, np.ndarray]) -> tuple[CartanPoint, np.ndarray, np.ndarray]:
    """Split g into its domain point Z = B D^{-1} and the U(2) x U(2) factors."""
    if not isinstance(g, GroupElement):
        g = GroupElement(g)
    if abs(np.linalg.det(g.D)) < 1e-14:
        raise SingularMatrix("D block is not invertible")
    Z = g.B @ np.linalg.inv(g.D)
    point = CartanPoint(Z)
    delta1 = inverse_sqrt_positive(I2 - Z @ Z.conj().T)
    delta2 = inverse_sqrt_positive(I2 - Z.conj().T @ Z)
    U1 = np.linalg.inv(delta1) @ g.A
    U2 = np.linalg.inv(delta2) @ g.D
    return point, U1, U2


# ---------------------------------------------------------------------------
# Cayley transform and the tube realization


def cayley(Z: MatrixLike) -> TubePoint:
    """W = i (1 - Z)(1 + Z)^{-1}."""
    Z = _as_matrix(Z)
    if not in_cartan_domain(Z):
        raise DomainViolation("Cayley transform requires a point of the Cartan domain")
    denom = I2 + Z
    if abs(np.linalg.det(denom)) < 1e-14:
        raise SingularMatrix("1 + Z is not invertible")
    return TubePoint(1j * (I2 - Z) @ np.linalg.inv(denom))


def cayley_inverse(W: Union[TubePoint, np.ndarray]) -> CartanPoint:
    """Z = (1 - iW)^{-1}(1 + iW)."""
    W = _as_matrix(W)
    denom = I2 - 1j * W
    if abs(np.linalg.det(denom)) < 1e-14:
        raise SingularMatrix("1 - iW is not invertible")
    return CartanPoint(np.linalg.inv(denom) @ (I2 + 1j * W))


UPSILON = np.block([[I2, -I2], [I2, I2]]) / np.sqrt(2)


def upsilon_conjugate(g: Union[GroupElement, np.ndarray]) -> np.ndarray:
    """Map a gamma5-preserving element to the gamma0 realization: f = U g U^{-1}."""
    g = g.g if isinstance(g, GroupElement) else np.asarray(g, dtype=complex)
    return UPSILON @ g @ UPSILON.T


def upsilon_inverse(f: np.ndarray) -> GroupElement:
    """Back from the gamma0 realization."""
    return GroupElement(UPSILON.T @ np.asarray(f, dtype=complex) @ UPSILON)


# ---------------------------------------------------------------------------
# U(2) Hopf patch


def hopf_decompose(U: np.ndarray) -> tuple[complex, float, complex, complex]:
    """U = [[delta, z delta], [-conj(z) delta, delta]] diag(u1, u2); returns (z, delta, u1, u2)."""
    U = np.asarray(U, dtype=complex)
    a, b, d = U[0, 0], U[0, 1], U[1, 1]
    if abs(d) < 1e-14 or abs(a) < 1e-14:
        raise SingularMatrix("Hopf patch requires non-vanishing diagonal entries")
    z = b / d
    delta = (1 + abs(z) ** 2) ** -0.5
    return complex(z), float(delta), complex(a / abs(a)), complex(d / abs(d))


def hopf_compose(z: complex, u1: complex, u2: complex) -> np.ndarray:
    """Inverse of hopf_decompose."""
    delta = (1 + abs(z) ** 2) ** -0.5
    return np.array([[delta, z * delta], [-np.conj(z) * delta, delta]]) @ np.diag([u1, u2])


def hopf_measure_density(z: complex) -> float:
    """Sphere factor (1 + |z|^2)^{-2} of the U(2) Haar measure."""
    return float((1 + abs(z) ** 2) ** -2)


# ---------------------------------------------------------------------------
# Measures


def normalization_constant(lam: int) -> float:
    """c_lambda = (lambda-1)(lambda-2)^2(lambda-3)/pi^4."""
    return (lam - 1) * (lam - 2) ** 2 * (lam - 3) / np.pi**4


def _delta_det(Z: np.ndarray) -> np.ndarray:
    ZdZ = np.conj(np.swapaxes(Z, -1, -2)) @ Z
    return np.linalg.det(np.eye(2) - ZdZ).real


def measure_density_invariant(Z: MatrixLike) -> float:
    """det(1 - Z^dag Z)^{-4}."""
    Z = _as_matrix(Z)
    if not in_cartan_domain(Z):
        raise DomainViolation("Measure density requires a point of the Cartan domain")
    return float(_delta_det(Z) ** -4)


def measure_density_lambda(Z: MatrixLike, lam: int) -> float:
    """c_lambda det(1 - Z^dag Z)^{lambda - 4}; normalized only for lambda > 3."""
    if lam <= 3:
        raise InvalidScaleDimension(f"Normalized measure requires lambda > 3, got {lam}")
    Z = _as_matrix(Z)
    if not in_cartan_domain(Z):
        raise DomainViolation("Measure density requires a point of the Cartan domain")
    return float(normalization_constant(lam) * _delta_det(Z) ** (lam - 4))


# ---------------------------------------------------------------------------
# Sampling helpers


def random_unitary(rng: np.random.Generator, n: int = 2) -> np.ndarray:
    """Haar-random unitary."""
    return unitary_group.rvs(n, random_state=rng)


def random_domain_point(rng: np.random.Generator, norm: float = 0.5) -> CartanPoint:
    """Random Z with spectral norm exactly `norm` (< 1)."""
    if not 0 <= norm < 1:
        raise DomainViolation(f"Spectral norm must lie in [0, 1), got {norm}")
    raw = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    spectral = np.linalg.norm(raw, 2)
    return CartanPoint(raw * (norm / spectral))


def random_group_element(
    rng: np.random.Generator,
    norm: float = 0.5,
    rotate: bool = True,
) -> GroupElement:
    """make_group_element(Z) times an optional random U(2) x U(2) rotation."""
    g = make_group_element(random_domain_point(rng, norm))
    if not rotate:
        return g
    return g @ GroupElement.rotation(random_unitary(rng), random_unitary(rng))


def spectral_norm(Z: Any) -> float:
    return float(np.linalg.norm(_as_matrix(Z), 2))


