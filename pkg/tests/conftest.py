import pytest

from emzeta.oracle import find_zero_oracle
from emzeta.zero_finder import enumerate_zeros

# first ten ordinates, to about 4 decimals; used only to centre oracle brackets
APPROX_ZEROS = [14.1347, 21.0220, 25.0109, 30.4249, 32.9351,
                37.5862, 40.9187, 43.3271, 48.0052, 49.7738]


@pytest.fixture(scope="session")
def oracle_zeros():
    return [find_zero_oracle(z - 0.05, z + 0.05) for z in APPROX_ZEROS]


@pytest.fixture(scope="session")
def zeros_0_50():
    return enumerate_zeros(0, 50)
