import pytest

from gja import algebra


@pytest.fixture
def A():
    return algebra.A


@pytest.fixture
def H():
    return algebra.H


@pytest.fixture
def t2():
    return algebra.t2_algebra()


@pytest.fixture
def t3():
    return algebra.t3_algebra()
