import os

import pytest

import cyclext as cx

WORKERS = int(os.environ.get("CYCLEXT_TEST_WORKERS", min(2, os.cpu_count() or 1)))


@pytest.fixture(scope="session")
def catalog():
    return cx.build_catalog()


@pytest.fixture(scope="session")
def pattern(catalog):
    return {p.name: p for p in catalog}
