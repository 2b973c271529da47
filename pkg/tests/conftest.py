import pytest
from hypothesis import settings

from tribkit import SequenceKind, TermCache, binet_constants, compute_roots

settings.register_profile("tribkit", deadline=None)
settings.load_profile("tribkit")


@pytest.fixture(scope="session")
def roots256():
    return compute_roots(256)


@pytest.fixture(scope="session")
def constants256(roots256):
    return binet_constants(256, roots256)


@pytest.fixture()
def t_cache():
    return TermCache(SequenceKind.TRIBONACCI)


@pytest.fixture()
def k_cache():
    return TermCache(SequenceKind.TRIBONACCI_LUCAS)
