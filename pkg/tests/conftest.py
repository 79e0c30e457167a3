import pytest

from eisenlat import monodromy as mono


@pytest.fixture(scope="session")
def closures():
    """Shared closures of R_1..R_4 (R_4 takes a few seconds to enumerate)."""
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = mono.group_closure(mono.chain_triflections(n))
        return cache[n]

    return get
