import pytest
from hypothesis import settings

from knotbound.knotio import BraidWord, to_pd
from knotbound.poly import LaurentPoly

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")


@pytest.fixture
def right_trefoil():
    return to_pd(BraidWord((1, 1, 1), 2))


@pytest.fixture
def left_trefoil():
    return to_pd(BraidWord((-1, -1, -1), 2))


@pytest.fixture
def trefoil_p0():
    return LaurentPoly({2: 2, 4: -1})


@pytest.fixture
def left_trefoil_p0():
    return LaurentPoly({-2: 2, -4: -1})
