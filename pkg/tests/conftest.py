import pytest

from mhopf import catalog
from mhopf.double import DoubleHandle


@pytest.fixture(scope="session")
def z2_pair():
    return catalog.example("Z2")


@pytest.fixture(scope="session")
def s3_pair():
    return catalog.example("S3")


@pytest.fixture(scope="session")
def int_pair():
    return catalog.lazy_int_group_pair(8)


@pytest.fixture(scope="session")
def h4_pair():
    return catalog.sweedler_pair()


@pytest.fixture(scope="session")
def d_z2(z2_pair):
    return DoubleHandle(z2_pair)


@pytest.fixture(scope="session")
def d_s3(s3_pair):
    return DoubleHandle(s3_pair)
