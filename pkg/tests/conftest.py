"""
Fixtures compartilhadas pelos testes.
"""

from pathlib import Path

import pytest

from rowmotion_report.poset import Rect
from rowmotion_report.suite import primes_labeling, random_chain_polytope_point, random_labeling

DATA_DIR = Path(__file__).resolve().parent.parent / "dados"


@pytest.fixture
def primes():
    """Rotulagem de primos em [2]×[3]: linhas (2,5,11) e (3,7,13)."""
    return primes_labeling()


@pytest.fixture
def data_dir():
    return DATA_DIR


@pytest.fixture
def labeling_33():
    """Rotulagem aleatória reproduzível em [3]×[3]."""
    return random_labeling(Rect(3, 3), 11)


@pytest.fixture
def labeling_34():
    """Rotulagem aleatória reproduzível em [3]×[4]."""
    return random_labeling(Rect(3, 4), 5)


@pytest.fixture
def chain_point_33():
    """Ponto racional do politopo de cadeias em [3]×[3]."""
    return random_chain_polytope_point(Rect(3, 3), 2)
