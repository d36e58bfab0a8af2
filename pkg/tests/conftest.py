import sys
from pathlib import Path

import pytest

from multigieseker import DualGraph, Polarization

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture
def curve_e():
    """Genus-1 and genus-0 components meeting in two nodes (g = 2)."""
    return DualGraph((("C1", 1), ("C2", 0)), (("C1", "C2"), ("C1", "C2")))


@pytest.fixture
def pol_e(curve_e):
    return Polarization.from_rows(curve_e, [[1, 1], [1, 5]])


@pytest.fixture
def curve_b():
    """Banana curve: two rational components meeting in two nodes (g = 1)."""
    return DualGraph((("C1", 0), ("C2", 0)), (("C1", "C2"), ("C1", "C2")))


@pytest.fixture
def pol_b(curve_b):
    return Polarization.from_rows(curve_b, [[1, 1], [3, 1]])


@pytest.fixture
def chain3():
    return DualGraph((("C1", 0), ("C2", 0), ("C3", 0)), (("C1", "C2"), ("C2", "C3")))
