import os

import pytest

from mbfcount.mbf import enumerate_dn
from mbfcount.oracle import oracle_enum_dn


def test_tier() -> int:
    return int(os.environ.get("MBFCOUNT_TEST_TIER", "3"))


tier2 = pytest.mark.skipif(
    test_tier() < 2, reason="tier 2 disabled (set MBFCOUNT_TEST_TIER>=2)"
)
tier3 = pytest.mark.skipif(
    test_tier() < 3, reason="tier 3 disabled (set MBFCOUNT_TEST_TIER=3)"
)


@pytest.fixture(scope="session")
def d3():
    return list(enumerate_dn(3))


@pytest.fixture(scope="session")
def d4():
    return list(enumerate_dn(4))


@pytest.fixture(scope="session")
def oracle_d4():
    return list(oracle_enum_dn(4))
