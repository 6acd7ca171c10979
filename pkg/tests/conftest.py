import pytest

from kloosum.field import build_field
from kloosum.kloosterman import spectral_table


@pytest.fixture(scope="session")
def fields():
    """Memoized build_field across the whole run."""
    cache = {}

    def get(p):
        if p not in cache:
            cache[p] = build_field(p)
        return cache[p]

    return get


@pytest.fixture(scope="session")
def tables(fields):
    """Memoized spectral tables keyed by (p, r)."""
    cache = {}

    def get(p, r):
        if (p, r) not in cache:
            cache[(p, r)] = spectral_table(fields(p), r)
        return cache[(p, r)]

    return get
