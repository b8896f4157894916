"""Shared fixtures: classical parameter cards and a session-wide factor cache."""

import pytest

from lucasprod import FactorCache, validate_params


@pytest.fixture(scope="session")
def fib():
    return validate_params(1, 1)


@pytest.fixture(scope="session")
def pell():
    return validate_params(2, 1)


@pytest.fixture(scope="session")
def shared_cache():
    """In-memory cache reused across the whole run.

    Results are identical with or without it; sharing just keeps the repeated
    factorizations of the same Lucas terms from dominating the runtime.
    """
    return FactorCache()
