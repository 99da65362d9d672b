import pytest

from branchlab.errors import ParseError
from branchlab.scalars import GQ, IMAG, ONE, ZERO, qq


def test_field_arithmetic():
    x = qq(3, 2)
    y = qq(1) / qq(2)
    assert x * y == qq(3, 2) * y
    assert (x + y) - y == x
    assert x * (ONE / x) == ONE
    assert IMAG * IMAG == qq(-1)
    assert (qq(2, 3) / qq(0, 1)) == qq(3, -2)


def test_mixed_int_arithmetic():
    assert qq(5) + 1 == qq(6)
    assert 2 * qq(1, 1) == qq(2, 2)
    assert 1 - qq(0, 1) == qq(1, -1)
    assert (qq(4) / 2) == qq(2)


def test_equality_and_hash():
    assert qq(2) == 2
    assert hash(qq(7)) == hash(qq(7, 0))
    assert qq(1, 1) != qq(1)
    d = {qq(1, 2): "a"}
    assert d[qq(1, 2)] == "a"
    assert bool(ZERO) is False and bool(IMAG) is True


def test_predicates():
    assert qq(4).is_integer()
    assert not (qq(1) / qq(2)).is_integer()
    assert qq(1, 0).is_rational()
    assert not qq(0, 1).is_rational()
    assert qq(3, -2).is_gaussian_integer()
    assert (qq(1) / 3).conjugate() == qq(1) / 3
    assert IMAG.conjugate() == -IMAG


@pytest.mark.parametrize("text", ["3/2", "-7", "i", "-i", "2+3i", "1/2-3/4i",
                                  "0", "-1+1i"])
def test_parse_round_trip(text):
    v = GQ.parse(text)
    assert GQ.parse(str(v)) == v


def test_parse_rejects_garbage():
    for bad in ["", "x", "1+", "--2", "1//2"]:
        with pytest.raises(ParseError):
            GQ.parse(bad)


def test_sort_key_orders_rationals():
    vals = [qq(3), qq(-1), qq(0), qq(1, 1)]
    ordered = sorted(vals, key=lambda v: v.sort_key())
    assert ordered[0] == qq(-1) and ordered[-1] == qq(3)
