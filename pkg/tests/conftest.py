import pytest

from digitaudit import bundled_data_dir


@pytest.fixture(scope="session")
def budget_path() -> str:
    return str(bundled_data_dir() / "synthetic_budget.csv")


@pytest.fixture(scope="session")
def regimes_path() -> str:
    return str(bundled_data_dir() / "regimes_three_phase.csv")
