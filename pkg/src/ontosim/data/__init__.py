"""Bundled example ontologies and published comparison tables."""
from __future__ import annotations

from importlib import resources
from pathlib import Path

FIXTURES = ("fig2.onto", "fig6.onto", "table3.csv", "table4.csv", "table5.csv")


def fixture_path(name: str) -> Path:
    if name not in FIXTURES:
        raise FileNotFoundError(f"no bundled fixture {name!r}; have {', '.join(FIXTURES)}")
    return Path(str(resources.files(__name__).joinpath(name)))
