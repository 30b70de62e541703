import pytest

from hurmono import default_rows


@pytest.fixture(scope="session")
def golden_rows():
    return default_rows()


@pytest.fixture(scope="session")
def golden_rows_by_degree(golden_rows):
    by_degree = {}
    for row in golden_rows:
        by_degree.setdefault(row.spec.d, []).append(row)
    return by_degree
