import pytest

from modp_gl2 import FieldParams


@pytest.fixture
def p3():
    return FieldParams(3, 1)


@pytest.fixture
def p5():
    return FieldParams(5, 1)


@pytest.fixture
def p9():
    return FieldParams(3, 2)


@pytest.fixture
def p8():
    return FieldParams(2, 3)
