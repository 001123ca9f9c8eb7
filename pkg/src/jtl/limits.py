"""Enumeration budgets.

Every exhaustive search in the package checks one of these caps and raises
BudgetExceeded instead of truncating.
"""
from contextlib import contextmanager
from dataclasses import dataclass, fields


@dataclass
class Limits:
    max_ring_size: int = 32
    max_ideals: int = 4096
    max_module_size: int = 64
    max_submodules: int = 4096
    max_hom_candidates: int = 2 ** 16
    max_generators: int = 4


LIMITS = Limits()


@contextmanager
def override_limits(**changes):
    saved = {f.name: getattr(LIMITS, f.name) for f in fields(LIMITS)}
    for key, value in changes.items():
        if key not in saved:
            raise AttributeError(key)
        setattr(LIMITS, key, value)
    try:
        yield LIMITS
    finally:
        for key, value in saved.items():
            setattr(LIMITS, key, value)
