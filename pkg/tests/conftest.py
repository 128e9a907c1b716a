import pytest

from tracecodes.gf import GF


@pytest.fixture(scope="session")
def two_level_fields():
    """A few fields built as two extension levels, for tower coverage."""
    return [
        GF(4).extend(degree=2),    # order 16
        GF(9).extend(degree=2),    # order 81
        GF(4).extend(degree=3),    # order 64
        GF(25).extend(modulus=(1, 1)),  # order 25, redundant level (root -1)
    ]
