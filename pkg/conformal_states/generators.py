"""The sixteen u(2,2) generators acting on the analytic model."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Iterable, Mapping, Sequence

import numpy as np

from .algebra import (
    ETA,
    LINEAR_GENERATORS,
    LORENTZ_PAIRS,
    ROTATION_TERMS,
    _as_matrix,
    in_cartan_domain,
    structure_constants,
)
from .basis import BasisIndex, basis_block, delta, indices_up_to
from .errors import DomainViolation, InvalidSpin
from .polynomial import Polynomial, det_polynomial, z_values
from .wigner import q_position

logger = logging.getLogger(__name__)

METRIC = tuple(float(x) for x in np.diag(ETA))

#: Linear generators by name: D, P0..P3, K0..K3, Mmn (m < n) and the rotation combinations.
LINEAR_NAMES: tuple[str, ...] = LINEAR_GENERATORS

#: Contracted quadratic operators: M^{mn}M_{mn}, P^mP_m, K^mK_m, K^mP_m, P^mK_m and D^2.
QUADRATIC_NAMES: tuple[str, ...] = ("MM", "PP", "KK", "KP", "PK", "DD")

GENERATOR_NAMES: tuple[str, ...] = LINEAR_NAMES + QUADRATIC_NAMES


def _check_name(name: str) -> str:
    if name not in GENERATOR_NAMES:
        raise KeyError(f"Unknown generator {name!r}; expected one of {', '.join(GENERATOR_NAMES)}")
    return name


def _lorentz_pair(name: str) -> tuple[int, int]:
    return int(name[1]), int(name[2])


# ---------------------------------------------------------------------------
# Differential action


def _z_upper(mu: int) -> Polynomial:
    return Polynomial.variable(mu) * METRIC[mu]


def _apply_linear_diff(name: str, phi: Polynomial, lam: int) -> Polynomial:
    if name == "D":
        return phi.euler() + phi * lam
    if name[0] == "P":
        return phi.derivative(int(name[1]))
    if name[0] == "K":
        mu = int(name[1])
        dilated = _apply_linear_diff("D", phi, lam)
        return det_polynomial() * phi.derivative(mu) - _z_upper(mu) * dilated * 2
    if name[0] == "M":
        mu, nu = _lorentz_pair(name)
        return _z_upper(mu) * phi.derivative(nu) - _z_upper(nu) * phi.derivative(mu)
    out = Polynomial.zero()
    for (mu, nu), coeff in ROTATION_TERMS[name].items():
        out = out + _apply_linear_diff(f"M{mu}{nu}", phi, lam) * coeff
    return out


def _contracted(names: Iterable[tuple[float, str, str]], phi: Polynomial, lam: int) -> Polynomial:
    out = Polynomial.zero()
    for weight, first, second in names:
        inner = _apply_linear_diff(second, phi, lam)
        out = out + _apply_linear_diff(first, inner, lam) * weight
    return out


def _quadratic_terms(name: str) -> list[tuple[float, str, str]]:
    """(weight, outer, inner) triples of a contracted quadratic operator."""
    if name == "DD":
        return [(1.0, "D", "D")]
    if name == "MM":
        # M^{mn}M_{mn} over ordered pairs is twice the sum over m < n
        return [(2 * METRIC[mu] * METRIC[nu], f"M{mu}{nu}", f"M{mu}{nu}") for mu, nu in LORENTZ_PAIRS]
    outer, inner = name[0], name[1]
    return [(METRIC[mu], f"{outer}{mu}", f"{inner}{mu}") for mu in range(4)]


def apply_generator_diff(name: str, phi: Polynomial, lam: int) -> Polynomial:
    """Apply a generator as a differential operator to a polynomial in z_mu.

    D = z_mu d/dz_mu + lam, P^mu = d/dz_mu, M^{mn} = z^m d/dz_n - z^n d/dz_m,
    K^mu = z^2 P^mu - 2 z^mu D. Quadratic names are contracted with the metric.
    """
    _check_name(name)
    if name in QUADRATIC_NAMES:
        return _contracted(_quadratic_terms(name), phi, lam)
    return _apply_linear_diff(name, phi, lam)


def commutator_diff(name1: str, name2: str, phi: Polynomial, lam: int) -> Polynomial:
    """[G1, G2] phi computed with the differential action."""
    return apply_generator_diff(name1, apply_generator_diff(name2, phi, lam), lam) - apply_generator_diff(
        name2, apply_generator_diff(name1, phi, lam), lam
    )


# ---------------------------------------------------------------------------
# Closed-form matrix elements


def coeff_C(two_j: int, m: int, two_qa: int, two_qb: int, lam: int) -> float:
    """sqrt((j+qa)(j+qb) m (lam+m-2)) / sqrt(2j(2j+1)), labels given doubled."""
    if two_j <= 0:
        raise InvalidSpin("coeff_C is singular at j = 0")
    numerator = (two_j + two_qa) * (two_j + two_qb) * m * (lam + m - 2) / 4
    if numerator <= 0:
        if numerator < -1e-12:
            raise ValueError(f"Negative radicand in coeff_C({two_j}, {m}, {two_qa}, {two_qb}, {lam})")
        return 0.0
    return math.sqrt(numerator) / math.sqrt(two_j * (two_j + 1))


@dataclass(frozen=True)
class MatrixElementRow:
    """Image of one basis vector: G phi_source = sum coeff phi_target."""

    source: BasisIndex
    targets: tuple[tuple[BasisIndex, complex], ...]

    def as_dict(self) -> dict[BasisIndex, complex]:
        out: dict[BasisIndex, complex] = {}
        for idx, c in self.targets:
            out[idx] = out.get(idx, 0) + c
        return out

    def to_dict(self) -> dict[str, Any]:
        return {
            "source": self.source.to_dict(),
            "targets": [
                {"index": idx.to_dict(), "coeff": [c.real, c.imag]} for idx, c in self.targets
            ],
        }


#: Doubled half-unit shift.
_H = 1


@dataclass(frozen=True)
class _Term:
    """phase * C(j or j+1/2, mass, x, y) onto the shifted target label."""

    phase: complex
    upper_j: bool  # C evaluated at j + 1/2 instead of j
    mass: str  # "spin_lower" -> m+2j+1, "plain" -> m, "plus_one" -> m+1, "spin_upper" -> m+2j+2
    x: tuple[int, int]  # (sign of qa, doubled shift)
    y: tuple[int, int]
    target: tuple[int, int, int, int]  # (d2j, dm, d2qa, d2qb)


def _translation_terms(mu: int) -> list[_Term]:
    lower_pp = _Term(1, False, "spin_lower", (1, 0), (1, 0), (-1, 0, -1, -1))
    upper_mm = _Term(1, True, "plain", (-1, _H), (-1, _H), (1, -1, -1, -1))
    lower_mm = _Term(1, False, "spin_lower", (-1, 0), (-1, 0), (-1, 0, 1, 1))
    upper_pp = _Term(1, True, "plain", (1, _H), (1, _H), (1, -1, 1, 1))
    lower_mp = _Term(1, False, "spin_lower", (-1, 0), (1, 0), (-1, 0, 1, -1))
    upper_pm = _Term(1, True, "plain", (1, _H), (-1, _H), (1, -1, 1, -1))
    lower_pm = _Term(1, False, "spin_lower", (1, 0), (-1, 0), (-1, 0, -1, 1))
    upper_mp = _Term(1, True, "plain", (-1, _H), (1, _H), (1, -1, -1, 1))
    diagonal = [lower_pp, upper_mm, lower_mm, upper_pp]
    cross = [lower_mp, upper_pm, lower_pm, upper_mp]
    phases = {
        0: (diagonal, (1, 1, 1, 1)),
        3: (diagonal, (1, 1, -1, -1)),
        1: (cross, (1, -1, 1, -1)),
        2: (cross, (1j, -1j, -1j, 1j)),
    }
    terms, signs = phases[mu]
    return [_Term(s, t.upper_j, t.mass, t.x, t.y, t.target) for t, s in zip(terms, signs)]


def _acceleration_terms(mu: int) -> list[_Term]:
    lower_pp = _Term(1, False, "plus_one", (1, 0), (1, 0), (-1, 1, -1, -1))
    lower_mm = _Term(1, False, "plus_one", (-1, 0), (-1, 0), (-1, 1, 1, 1))
    upper_mm = _Term(1, True, "spin_upper", (-1, _H), (-1, _H), (1, 0, -1, -1))
    upper_pp = _Term(1, True, "spin_upper", (1, _H), (1, _H), (1, 0, 1, 1))
    upper_mp = _Term(1, True, "spin_upper", (-1, _H), (1, _H), (1, 0, -1, 1))
    upper_pm = _Term(1, True, "spin_upper", (1, _H), (-1, _H), (1, 0, 1, -1))
    lower_pm = _Term(1, False, "plus_one", (1, 0), (-1, 0), (-1, 1, -1, 1))
    lower_mp = _Term(1, False, "plus_one", (-1, 0), (1, 0), (-1, 1, 1, -1))
    table = {
        0: ([lower_pp, lower_mm, upper_mm, upper_pp], (-1, -1, -1, -1)),
        1: ([upper_mp, upper_pm, lower_pm, lower_mp], (1, 1, -1, -1)),
        2: ([upper_mp, upper_pm, lower_pm, lower_mp], (-1j, 1j, 1j, -1j)),
        3: ([upper_pp, upper_mm, lower_mm, lower_pp], (1, -1, 1, -1)),
    }
    terms, signs = table[mu]
    return [_Term(s, t.upper_j, t.mass, t.x, t.y, t.target) for t, s in zip(terms, signs)]


def _term_value(term: _Term, idx: BasisIndex) -> float:
    two_j = idx.two_j + (1 if term.upper_j else 0)
    mass = {
        "spin_lower": idx.m + idx.two_j + 1,
        "plain": idx.m,
        "plus_one": idx.m + 1,
        "spin_upper": idx.m + idx.two_j + 2,
    }[term.mass]
    two_x = term.x[0] * idx.two_qa + term.x[1]
    two_y = term.y[0] * idx.two_qb + term.y[1]
    return coeff_C(two_j, mass, two_x, two_y, idx.lam)


def _rows_from_terms(terms: Sequence[_Term], idx: BasisIndex) -> dict[BasisIndex, complex]:
    out: dict[BasisIndex, complex] = {}
    for term in terms:
        target = idx.shifted(*term.target)
        lowers_spin = term.target[0] < 0
        if target is None:
            if lowers_spin and idx.two_j == 0:
                continue
            value = _term_value(term, idx)
            if abs(value) > 1e-12:
                raise ValueError(f"Off-lattice term with non-zero coefficient {value} from {idx}")
            continue
        value = term.phase * _term_value(term, idx)
        if value != 0:
            out[target] = out.get(target, 0) + value
    return out


def _ladder_row(side: str, step: int, idx: BasisIndex) -> dict[BasisIndex, complex]:
    two_j = idx.two_j
    two_q = idx.two_qa if side == "a" else idx.two_qb
    # sqrt((j -/+ q)(j +/- q + 1))
    value = math.sqrt(max((two_j - step * two_q) * (two_j + step * two_q + 2), 0) / 4)
    shift = (2 * step, 0) if side == "a" else (0, 2 * step)
    target = idx.shifted(0, 0, *shift)
    if target is None or value == 0:
        return {}
    return {target: complex(value)}


#: Cartesian rotation components in terms of the ladder operators.
_CARTESIAN_ROTATIONS: dict[str, dict[str, complex]] = {
    "Sa1": {"Sa+": 0.5, "Sa-": 0.5},
    "Sa2": {"Sa+": 0.5j, "Sa-": -0.5j},
    "Sb1": {"Sb+": 0.5, "Sb-": 0.5},
    "Sb2": {"Sb+": -0.5j, "Sb-": 0.5j},
}

#: Lorentz generators in terms of the rotation operators.
_LORENTZ_IN_ROTATIONS: dict[str, dict[str, complex]] = {
    "M01": {"Sa1": 1, "Sb1": 1},
    "M02": {"Sa2": 1, "Sb2": 1},
    "M03": {"Sa3": 1, "Sb3": 1},
    "M23": {"Sa1": 1j, "Sb1": -1j},
    "M13": {"Sa2": -1j, "Sb2": 1j},
    "M12": {"Sa3": 1j, "Sb3": -1j},
}


def _merge(out: dict[BasisIndex, complex], row: Mapping[BasisIndex, complex], weight: complex) -> None:
    for target, value in row.items():
        out[target] = out.get(target, 0) + weight * value


def _linear_row(name: str, idx: BasisIndex) -> dict[BasisIndex, complex]:
    if name == "D":
        return {idx: complex(idx.degree + idx.lam)}
    if name[0] == "P":
        return _rows_from_terms(_translation_terms(int(name[1])), idx)
    if name[0] == "K":
        return _rows_from_terms(_acceleration_terms(int(name[1])), idx)
    if name in ("Sa3", "Sb3"):
        value = idx.qa if name == "Sa3" else idx.qb
        return {idx: complex(value)} if value else {}
    if name in ("Sa+", "Sa-", "Sb+", "Sb-"):
        return _ladder_row(name[1], 1 if name[2] == "+" else -1, idx)
    combos = _CARTESIAN_ROTATIONS.get(name) or _LORENTZ_IN_ROTATIONS[name]
    out: dict[BasisIndex, complex] = {}
    for part, weight in combos.items():
        _merge(out, _linear_row(part, idx), weight)
    return out


def quadratic_action(name: str, idx: BasisIndex) -> MatrixElementRow:
    """Closed-form rows of the U(2)^2-invariant quadratic operators."""
    j, m, lam = idx.j, idx.m, idx.lam
    targets: list[tuple[BasisIndex, complex]] = []
    if name == "MM":
        targets.append((idx, complex(-8 * j * (j + 1))))
    elif name == "PP":
        value = 4 * math.sqrt(max(m * (2 * j + m + 1) * (lam + m - 2) * (lam + 2 * j + m - 1), 0))
        target = idx.shifted(dm=-1)
        if target is not None and value:
            targets.append((target, complex(value)))
    elif name == "KK":
        value = 4 * math.sqrt((m + 1) * (2 * j + m + 2) * (lam + m - 1) * (lam + 2 * j + m))
        if value:
            targets.append((idx.shifted(dm=1), complex(value)))
    elif name == "KP":
        targets.append((idx, complex(-4 * (2 * j * j + m * (m + lam - 2) + j * (2 * m + lam - 1)))))
    elif name == "PK":
        targets.append((idx, complex(-4 * (2 * j * j + (m + 2) * (m + lam) + j * (2 * m + lam + 3)))))
    elif name == "DD":
        targets.append((idx, complex((idx.degree + lam) ** 2)))
    else:
        raise KeyError(f"Unknown quadratic operator {name!r}")
    return MatrixElementRow(idx, tuple(targets))


@lru_cache(maxsize=None)
def generator_matrix_elements(name: str, idx: BasisIndex) -> MatrixElementRow:
    """Exact image of phi_idx under a linear or quadratic generator."""
    _check_name(name)
    if name in QUADRATIC_NAMES:
        return quadratic_action(name, idx)
    row = _linear_row(name, idx)
    return MatrixElementRow(idx, tuple((t, c) for t, c in row.items() if abs(c) > 0))


def apply_rows(name: str, vector: Mapping[BasisIndex, complex]) -> dict[BasisIndex, complex]:
    """Apply a generator to a finite basis expansion."""
    out: dict[BasisIndex, complex] = {}
    for idx, coeff in vector.items():
        if coeff:
            _merge(out, generator_matrix_elements(name, idx).as_dict(), coeff)
    return out


def composed_quadratic(name: str, idx: BasisIndex) -> dict[BasisIndex, complex]:
    """A contracted quadratic operator rebuilt from linear rows."""
    out: dict[BasisIndex, complex] = {}
    for weight, outer, inner in _quadratic_terms(name):
        _merge(out, apply_rows(outer, apply_rows(inner, {idx: 1.0})), weight)
    return {k: v for k, v in out.items() if abs(v) > 1e-13}


def casimir2(idx: BasisIndex) -> float:
    """D^2 - M.M/2 + (P.K + K.P)/2 on one basis vector; equals lam(lam - 4)."""
    out: dict[BasisIndex, complex] = {}
    for name, weight in (("DD", 1.0), ("MM", -0.5), ("PK", 0.5), ("KP", 0.5)):
        _merge(out, quadratic_action(name, idx).as_dict(), weight)
    off_diagonal = max((abs(v) for k, v in out.items() if k != idx), default=0.0)
    if off_diagonal > 1e-10:
        raise ValueError(f"Casimir is not diagonal at {idx}")
    return float(out.get(idx, 0).real)


# ---------------------------------------------------------------------------
# Coherent-state symbols


def _domain_point(Z: Any) -> np.ndarray:
    Z = _as_matrix(Z)
    if not in_cartan_domain(Z):
        raise DomainViolation("Symbols are defined on the interior of the Cartan domain")
    return Z


def symbol(name: str, Z: Any, lam: int) -> complex:
    """Coherent-state expectation <Z|G|Z> in closed form."""
    _check_name(name)
    Z = _domain_point(Z)
    Delta = delta(Z)
    det = np.linalg.det(Z)
    d = abs(det) ** 2
    trace = float(np.trace(Z.conj().T @ Z).real)
    z = z_values(Z)
    z_up = z * np.array(METRIC)
    sym_d = lam * (1 - d) / Delta
    sym_p = 2 * lam * (np.conj(z) - np.conj(det) * z_up) / Delta
    sym_k = det * sym_p - 2 * z_up * sym_d
    sym_dd = (lam + 1) / lam * sym_d**2 - lam * (1 + d) / Delta
    sym_pk = 2 * (lam * (lam - 3 + trace + (1 + lam) * d) / Delta - (lam + 1) / lam * sym_d**2)
    sym_kp = sym_pk + 8 * sym_d
    if name in QUADRATIC_NAMES:
        quadratic = {
            "DD": sym_dd,
            "PP": 4 * lam * (lam - 1) * np.conj(det) / Delta,
            "KK": 4 * lam * (lam - 1) * det / Delta,
            "PK": sym_pk,
            "KP": sym_kp,
            # Casimir relation
            "MM": 2 * sym_dd + sym_kp + sym_pk - 2 * lam * (lam - 4),
        }
        return complex(quadratic[name])
    if name == "D":
        return complex(sym_d)
    if name in ROTATION_TERMS:
        return complex(
            sum(c * symbol(f"M{mu}{nu}", Z, lam) for (mu, nu), c in ROTATION_TERMS[name].items())
        )
    if name[0] == "P":
        return complex(sym_p[int(name[1])])
    if name[0] == "K":
        return complex(sym_k[int(name[1])])
    mu, nu = _lorentz_pair(name)
    return complex(z_up[mu] * sym_p[nu] - z_up[nu] * sym_p[mu])


class _CoefficientTable:
    """Lazily filled coherent-state coefficients det(1-Z^dag Z)^{lam/2} conj(phi(Z))."""

    def __init__(self, Z: np.ndarray, lam: int):
        self.Z = Z
        self.lam = lam
        self.prefactor = delta(Z) ** (lam / 2)
        self._blocks: dict[tuple[int, int], np.ndarray] = {}

    def block(self, two_j: int, m: int) -> np.ndarray:
        key = (two_j, m)
        if key not in self._blocks:
            self._blocks[key] = self.prefactor * np.conj(basis_block(two_j, m, self.lam, self.Z))
        return self._blocks[key]

    def __getitem__(self, idx: BasisIndex) -> complex:
        block = self.block(idx.two_j, idx.m)
        return complex(block[q_position(idx.two_j, idx.two_qa), q_position(idx.two_j, idx.two_qb)])

    def vector(self, max_degree: int) -> dict[BasisIndex, complex]:
        return {idx: self[idx] for idx in indices_up_to(max_degree, self.lam)}


def series_expectation(names: Sequence[str] | str, Z: Any, lam: int, max_degree: int) -> complex:
    """<Z|G_1 ... G_k|Z> from the truncated basis expansion of |Z>."""
    if isinstance(names, str):
        names = [names]
    Z = _domain_point(Z)
    table = _CoefficientTable(Z, lam)
    vector = table.vector(max_degree)
    for name in reversed(list(names)):
        vector = apply_rows(_check_name(name), vector)
    return complex(sum(np.conj(table[idx]) * c for idx, c in vector.items()))


def star_commutator(name1: str, name2: str, Z: Any, lam: int, max_degree: int) -> complex:
    """<G1 G2> - <G2 G1>, the star commutator of two symbols via truncated expansions."""
    return series_expectation([name1, name2], Z, lam, max_degree) - series_expectation(
        [name2, name1], Z, lam, max_degree
    )


def symbol_pairing_residual(mu: int, Z: Any, lam: int) -> float:
    """|<K^mu> + eta_mumu conj(<P^mu>)|."""
    return abs(symbol(f"K{mu}", Z, lam) + METRIC[mu] * np.conj(symbol(f"P{mu}", Z, lam)))


def commutator_residual(name1: str, name2: str, phi: Polynomial, lam: int) -> float:
    """Largest coefficient of [G1, G2] phi minus its expansion through the u(2,2) structure constants."""
    constants = structure_constants()
    a, b = constants.names.index(name1), constants.names.index(name2)
    expected = Polynomial.zero()
    for c, name in enumerate(constants.names):
        weight = constants.f[a, b, c]
        if abs(weight) < 1e-12:
            continue
        if name == "I":
            expected = expected + phi * float(weight)
        else:
            expected = expected + apply_generator_diff(name, phi, lam) * float(weight)
    return commutator_diff(name1, name2, phi, lam).max_abs_diff(expected)
