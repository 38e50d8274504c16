"""Verification suite registration and lookup."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Callable

if TYPE_CHECKING:
    from .config import RunConfig
    from .report import Report

SuiteFunction = Callable[["RunConfig"], "Report"]


@dataclass(frozen=True)
class SuiteEntry:
    """A registered suite with its tolerance family and default degree cutoff."""

    name: str
    description: str
    tolerance_family: str
    default_degree: int
    run: SuiteFunction


# Global registry: suite name -> entry
_SUITE_REGISTRY: dict[str, SuiteEntry] = {}


def suite(
    name: str,
    description: str,
    tolerance_family: str = "exact",
    default_degree: int = 4,
) -> Callable[[SuiteFunction], SuiteFunction]:
    """
    Decorator for suite registration.

    Usage:
        @suite(name="casimir", description="Casimir eigenvalue on a basis block")
        def run_casimir(config: RunConfig) -> Report: ...
    """

    def decorator(fn: SuiteFunction) -> SuiteFunction:
        _SUITE_REGISTRY[name] = SuiteEntry(
            name=name,
            description=description,
            tolerance_family=tolerance_family,
            default_degree=default_degree,
            run=fn,
        )
        return fn

    return decorator


def get_suite(name: str) -> SuiteEntry:
    """Look up a registered suite; KeyError if unknown."""
    return _SUITE_REGISTRY[name]


def list_suites() -> list[str]:
    """Registered suite names in registration order."""
    return list(_SUITE_REGISTRY.keys())


def clear_registry() -> None:
    """Clear the suite registry. Useful for testing."""
    _SUITE_REGISTRY.clear()
