import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from blockcensus.catalog import CATALOG, group
from blockcensus.theorems import GroupContext

_CTX_CACHE: dict = {}


@pytest.fixture(scope="session")
def ctx_for():
    """Session-cached GroupContext factory for catalog groups."""

    def factory(name: str, p: int = 3) -> GroupContext:
        key = (name, p)
        ctx = _CTX_CACHE.get(key)
        if ctx is None:
            flags = CATALOG[name][2]
            ctx = GroupContext(group(name), name, p, flags)
            _CTX_CACHE[key] = ctx
        return ctx

    return factory


@pytest.fixture(scope="session")
def named_group():
    """Session-cached catalog group factory."""
    cache: dict = {}

    def factory(name: str):
        if name not in cache:
            cache[name] = group(name)
        return cache[name]

    return factory
