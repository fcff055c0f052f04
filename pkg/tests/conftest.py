"""Shared fixtures: the randomized cone suite reused across test modules."""

from __future__ import annotations

import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import toricstrata as ts
from oracles import sample_cones

SUITE_SEED = 20260814
SUITE_SIZE = 200

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def suite_cones():
    """Randomized pointed full-dimensional cones: rank <= 4, <= 6 rays,
    coordinates in [-5, 5]."""
    return sample_cones(ts, SUITE_SEED, SUITE_SIZE)


@pytest.fixture(scope="session")
def suite_reports(suite_cones):
    """Full stratification reports for the suite, with total wall time."""
    start = time.perf_counter()
    reports = [ts.stratify(c.ambient_rank, c.rays) for c in suite_cones]
    elapsed = time.perf_counter() - start
    return reports, elapsed


@pytest.fixture()
def fixture_path():
    def locate(name: str) -> str:
        return str(FIXTURES / name)

    return locate
