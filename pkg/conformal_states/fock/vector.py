"""Sparse bosonic Fock-space vectors."""

from __future__ import annotations

import json
import logging
import math
from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping, Sequence

from ..errors import ModeMismatch

logger = logging.getLogger(__name__)

#: Amplitudes below this magnitude are dropped.
PRUNE_THRESHOLD = 1e-14

Occupation = tuple[int, ...]


def _prune(amplitudes: Mapping[Occupation, complex]) -> dict[Occupation, complex]:
    return {occ: complex(a) for occ, a in amplitudes.items() if abs(a) >= PRUNE_THRESHOLD}


@dataclass(frozen=True)
class FockVector:
    """Immutable map from occupation tuples to complex amplitudes."""

    n_modes: int
    amplitudes: dict[Occupation, complex] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for occ in self.amplitudes:
            if len(occ) != self.n_modes or min(occ, default=0) < 0:
                raise ModeMismatch(f"Occupation {occ} does not fit {self.n_modes} modes")
        object.__setattr__(self, "amplitudes", _prune(self.amplitudes))

    @classmethod
    def vacuum(cls, n_modes: int) -> "FockVector":
        return cls(n_modes, {(0,) * n_modes: 1.0})

    @classmethod
    def basis(cls, occupation: Sequence[int], amplitude: complex = 1.0) -> "FockVector":
        occ = tuple(int(n) for n in occupation)
        return cls(len(occ), {occ: amplitude})

    @classmethod
    def zero(cls, n_modes: int) -> "FockVector":
        return cls(n_modes, {})

    def _check(self, other: "FockVector") -> None:
        if other.n_modes != self.n_modes:
            raise ModeMismatch(f"Cannot combine {self.n_modes}-mode and {other.n_modes}-mode vectors")

    def __add__(self, other: "FockVector") -> "FockVector":
        self._check(other)
        out = dict(self.amplitudes)
        for occ, a in other.amplitudes.items():
            out[occ] = out.get(occ, 0) + a
        return FockVector(self.n_modes, out)

    def __neg__(self) -> "FockVector":
        return self * -1

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + (-other)

    def __mul__(self, scalar: complex) -> "FockVector":
        return FockVector(self.n_modes, {occ: a * scalar for occ, a in self.amplitudes.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar: complex) -> "FockVector":
        return self * (1 / scalar)

    def inner(self, other: "FockVector") -> complex:
        """<self|other>, antilinear in self."""
        self._check(other)
        theirs = other.amplitudes
        return complex(sum(a.conjugate() * theirs[occ] for occ, a in self.amplitudes.items() if occ in theirs))

    def norm(self) -> float:
        return math.sqrt(sum(abs(a) ** 2 for a in self.amplitudes.values()))

    def normalized(self) -> "FockVector":
        return self / self.norm()

    def is_zero(self, tol: float = PRUNE_THRESHOLD) -> bool:
        return all(abs(a) < tol for a in self.amplitudes.values())

    def max_abs_diff(self, other: "FockVector") -> float:
        return max((abs(a) for a in (self - other).amplitudes.values()), default=0.0)

    def support(self) -> list[Occupation]:
        return sorted(self.amplitudes)

    def permute_modes(self, permutation: Sequence[int]) -> "FockVector":
        """Move the quanta of mode i to mode permutation[i]."""
        if sorted(permutation) != list(range(self.n_modes)):
            raise ModeMismatch(f"{permutation} is not a permutation of {self.n_modes} modes")
        out = {}
        for occ, a in self.amplitudes.items():
            new = [0] * self.n_modes
            for i, n in enumerate(occ):
                new[permutation[i]] = n
            out[tuple(new)] = a
        return FockVector(self.n_modes, out)

    def to_dict(self) -> dict[str, Any]:
        return {
            "modes": self.n_modes,
            "terms": [
                {"occ": list(occ), "amp": [a.real, a.imag]} for occ, a in sorted(self.amplitudes.items())
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "FockVector":
        data = json.loads(text)
        logger.debug(f"Loading {len(data['terms'])} occupation tuples on {data['modes']} modes")
        return cls(
            data["modes"],
            {tuple(t["occ"]): complex(*t["amp"]) for t in data["terms"]},
        )


def vector_sum(vectors: Iterable[FockVector], n_modes: int) -> FockVector:
    out: dict[Occupation, complex] = {}
    for v in vectors:
        if v.n_modes != n_modes:
            raise ModeMismatch(f"Expected {n_modes} modes, got {v.n_modes}")
        for occ, a in v.amplitudes.items():
            out[occ] = out.get(occ, 0) + a
    return FockVector(n_modes, out)
