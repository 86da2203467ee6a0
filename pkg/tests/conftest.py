import pytest

from dblcat.constructions import shape
from dblcat.io.corpus import corpus_entries


@pytest.fixture(scope="session")
def small_categories():
    return [e for e in corpus_entries("small") if not e.is_functor]


@pytest.fixture(scope="session")
def small_functors():
    return [e for e in corpus_entries("small") if e.is_functor]


@pytest.fixture
def HxV():
    return shape("HxV")
