"""Fixture loading and the command-line verification harness."""

from .fixtures import (
    FixtureError,
    FixtureSet,
    FixtureWarning,
    LoadFailure,
    RunReport,
    default_fixture_dir,
    family_sort_key,
    load_fixture,
    parse_sections,
    verify_all,
)

__all__ = [
    "FixtureError",
    "FixtureSet",
    "FixtureWarning",
    "LoadFailure",
    "RunReport",
    "default_fixture_dir",
    "family_sort_key",
    "load_fixture",
    "parse_sections",
    "verify_all",
]
