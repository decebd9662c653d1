"""Shared test constants."""

import pytest

# exponent grid used by the sweep-style checks
P_GRID = (1.1, 1.5, 2.0, 2.5, 3.0, 4.7, 5.0)

# machine epsilon for double precision
EPS = 2.220446049250313e-16


@pytest.fixture(scope="session")
def p_grid():
    return P_GRID
