"""Tolerances and run configuration."""

from __future__ import annotations

import logging
import os
from dataclasses import asdict, dataclass, field, replace
from typing import Any, Optional

logger = logging.getLogger(__name__)

THREADS_ENV_VAR = "CCS_THREADS"


@dataclass(frozen=True)
class Tolerances:
    """
    Thresholds for every numerical check.

    One field per check family so a CLI override touches only the family
    the command exercises.
    """

    # Series and kernel identities
    kernel: float = 1e-8
    symbols: float = 1e-6
    quadrature: float = 1e-8
    overlap: float = 1e-10
    truncation: float = 1e-6  # truncated coherent-state overlaps

    # Exact-arithmetic identities carried out in floating point
    exact: float = 1e-10
    commutator: float = 1e-12
    orthonormality: float = 1e-12

    # Monte Carlo acceptance, in standard errors
    mc_sigmas: float = 3.0

    # Domain geometry
    domain_margin: float = 0.0
    eigenvalue_floor: float = 1e-13


@dataclass(frozen=True)
class MonteCarloSettings:
    """Sampling layout for the Monte Carlo inner product."""

    # Fixed stream count keeps results independent of the thread count
    n_streams: int = 16
    chunk_size: int = 65536


def threads_from_env(default: int = 1) -> int:
    """Read the parallelism cap from the environment."""
    raw = os.environ.get(THREADS_ENV_VAR)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning(f"Ignoring non-integer {THREADS_ENV_VAR}={raw!r}")
        return default
    return max(1, value)


@dataclass
class RunConfig:
    """Options shared by every CLI suite."""

    command: str
    lam: int = 4
    degree: int = 4
    mc_samples: int = 100_000
    seed: int = 7
    out: Optional[str] = None
    fmt: str = "json"
    tolerance: Optional[float] = None
    threads: int = field(default_factory=threads_from_env)
    verbose: bool = False

    def tolerances(self, family: Optional[str] = None) -> Tolerances:
        """Default tolerances, with the override applied to one family."""
        base = Tolerances()
        if self.tolerance is None or family is None:
            return base
        return replace(base, **{family: self.tolerance})

    def as_dict(self) -> dict[str, Any]:
        """Report-friendly view; output location is not part of the result."""
        data = asdict(self)
        data.pop("out")
        data.pop("verbose")
        data.pop("threads")
        return data
