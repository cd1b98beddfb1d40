import pytest

from linksym.census import load_census


@pytest.fixture(scope="session")
def census():
    return {r.rolfsen: r for r in load_census()}


@pytest.fixture(scope="session")
def census_links(census):
    return [r for r in census.values() if r.crossings > 0]
