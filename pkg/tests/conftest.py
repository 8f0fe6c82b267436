import pytest

from besselprod import ALL_FAMILIES, default_test_params, reconcile


@pytest.fixture(scope="session")
def exact_points():
    return default_test_params(exact=True)


@pytest.fixture(scope="session")
def all_reconciliations():
    """Runtime reconciliation of every family, computed once per session."""
    return {fam: reconcile(fam) for fam in ALL_FAMILIES}
