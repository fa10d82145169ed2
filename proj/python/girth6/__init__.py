"""Plane-graph discharging and list-coloring flexibility toolkit."""

from ._girth6 import (  # noqa: F401
    Girth6Error,
    TheoremViolation,
    discharge_audit,
    epsilon,
    find_coloring,
    find_reducible,
    fixture_names,
    gen_honeycomb,
    gen_subdivided,
    girth,
    is_3_reducible,
    named_fixture,
    peel,
    pipeline,
    validate,
)

__all__ = [
    "Girth6Error",
    "TheoremViolation",
    "discharge_audit",
    "epsilon",
    "find_coloring",
    "find_reducible",
    "fixture_names",
    "gen_honeycomb",
    "gen_subdivided",
    "girth",
    "is_3_reducible",
    "named_fixture",
    "peel",
    "pipeline",
    "validate",
]
