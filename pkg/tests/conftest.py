import pytest

from jtl.harness.catalog import builtin_ring, catalog_builtin
from jtl.module import module_quotient, regular_module
from jtl.ring import principal_left_ideal


@pytest.fixture(scope="session")
def catalog():
    return catalog_builtin()


@pytest.fixture(scope="session")
def Z4():
    return builtin_ring("Z4")


@pytest.fixture(scope="session")
def Z6():
    return builtin_ring("Z6")


@pytest.fixture(scope="session")
def Z2_over_Z4(Z4):
    return module_quotient(regular_module(Z4), principal_left_ideal(Z4, 2))


@pytest.fixture(scope="session")
def Z3_over_Z6(Z6):
    # Z6/{0,3}, three elements
    return module_quotient(regular_module(Z6), principal_left_ideal(Z6, 3))
