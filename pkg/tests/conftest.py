import json
from fractions import Fraction
from pathlib import Path

import pytest

from shufflealg.lincomb import LinComb
from shufflealg.biwords import parse_biword

GOLDEN_DIR = Path(__file__).parent / "golden"


def load_golden(name: str) -> dict:
    with open(GOLDEN_DIR / name) as fh:
        return json.load(fh)


def biword_combination(pairs) -> LinComb:
    """Build a biword combination from [[text, coeff], ...] golden entries."""
    return LinComb((parse_biword(text), Fraction(coeff)) for text, coeff in pairs)


@pytest.fixture
def golden():
    return load_golden
