import pytest

from eventau import compute_tau_table


@pytest.fixture(scope="session")
def table10k():
    return compute_tau_table(10_000)


@pytest.fixture(scope="session")
def table50k():
    return compute_tau_table(50_000)
