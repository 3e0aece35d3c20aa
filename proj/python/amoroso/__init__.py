"""Amoroso and log-gamma distributions."""

from ._core import (
    Amoroso,
    ConstraintViolation,
    LogGamma,
    UnknownDistribution,
    canonical_name,
    catalog_json,
    classify,
    cli,
    construct,
    run_suite,
)

__all__ = [
    "Amoroso",
    "ConstraintViolation",
    "LogGamma",
    "UnknownDistribution",
    "canonical_name",
    "catalog_json",
    "classify",
    "cli",
    "construct",
    "run_suite",
]
