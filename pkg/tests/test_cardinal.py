import pytest
from hypothesis import given
from hypothesis import strategies as st

from enchilada import INF, Cardinal, ValidationError, card

cardinals = st.one_of(st.integers(0, 40).map(Cardinal), st.just(INF))


def test_arithmetic_table():
    assert INF + 0 == INF
    assert INF + 5 == INF
    assert INF + INF == INF
    assert INF * 0 == Cardinal(0)
    assert 0 * INF == Cardinal(0)
    assert INF * 3 == INF
    assert 4 * INF == INF
    assert INF * INF == INF
    assert Cardinal(2) + Cardinal(3) == Cardinal(5)
    assert Cardinal(2) * Cardinal(3) == Cardinal(6)


def test_coercion_and_equality():
    assert card(7) == Cardinal(7) == 7
    assert card("inf") is INF
    assert card(INF) is INF
    assert Cardinal(1) != INF
    assert Cardinal(0) != "anything"
    assert not Cardinal(0)
    assert INF
    assert hash(Cardinal(3)) == hash(Cardinal(3))


def test_ordering():
    assert Cardinal(2) < Cardinal(5) < INF
    assert not INF < INF
    assert max(Cardinal(1), INF) is INF


def test_invalid_values():
    with pytest.raises(ValidationError):
        Cardinal(-1)
    with pytest.raises(ValidationError):
        card("Inf")
    with pytest.raises(ValidationError):
        card(2.5)
    with pytest.raises(ValidationError):
        int(INF)


def test_repr():
    assert repr(INF) == "INF"
    assert repr(Cardinal(4)) == "4"


@given(cardinals, cardinals)
def test_commutativity(a, b):
    assert a + b == b + a
    assert a * b == b * a


@given(cardinals, cardinals, cardinals)
def test_associativity_and_distributivity(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(cardinals)
def test_units_and_annihilator(a):
    assert a + Cardinal(0) == a
    assert a * Cardinal(1) == a
    assert a * Cardinal(0) == Cardinal(0)
