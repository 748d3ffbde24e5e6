import pytest

from flagvgit import build_root_datum, diagonal_embedding, principal_embedding


def rd(s, n):
    return build_root_datum([(s, n)])


@pytest.fixture(scope="session")
def A1():
    return rd("A", 1)


@pytest.fixture(scope="session")
def A2():
    return rd("A", 2)


@pytest.fixture(scope="session")
def diag(A1):
    cache = {}

    def make(k):
        if k not in cache:
            cache[k] = diagonal_embedding(A1, k)
        return cache[k]
    return make


@pytest.fixture(scope="session")
def principal_a2(A2):
    return principal_embedding(A2)
