from pathlib import Path

import pytest

from paragame.controllers import arena_controller, lattice_controller
from paragame.core.intervalset import IntervalSet

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def sample_path() -> Path:
    return FIXTURES / "sample.pga"


@pytest.fixture
def sample_text(sample_path) -> str:
    return sample_path.read_text(encoding="utf-8")


@pytest.fixture
def sample(sample_path):
    return arena_controller.read_arena(sample_path)


@pytest.fixture
def sample_lattice(sample):
    return lattice_controller.build(sample)


@pytest.fixture
def sample_region() -> str:
    return (FIXTURES / "sample_region.txt").read_text(encoding="utf-8")


@pytest.fixture
def S():
    """Shorthand: S("1,3-*") -> IntervalSet."""
    return IntervalSet.parse
