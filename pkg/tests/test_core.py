from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from drgresist.core import (
    IntersectionArray,
    format_rational,
    order,
    parse_rational,
    rational_from_json,
    rational_to_json,
    validate_intersection_array,
)
from drgresist.errors import (
    ArrayShapeError,
    FirstCNotOne,
    IntersectionArrayError,
    NegativeIntersectionNumber,
    NonIntegralValency,
    ZeroEntry,
)


def test_cube_array():
    arr = validate_intersection_array([3, 2, 1], [1, 2, 3])
    assert arr.d == 3
    assert arr.kappa == (1, 3, 3, 1)
    assert arr.N == 8
    assert arr.a == (0, 0, 0, 0)
    assert arr.valency == 3


def test_complete_graph_array():
    arr = validate_intersection_array([4], [1])
    assert (arr.d, arr.kappa, arr.N, arr.a) == (1, (1, 4), 5, (0, 3))


@pytest.mark.parametrize(
    "b, c, err",
    [
        ([2, 2], [1, 1], NegativeIntersectionNumber),
        ([3, 2], [1, 4], NonIntegralValency),
        ([3, 0], [1, 1], ZeroEntry),
        ([3, 2], [1, -1], ZeroEntry),
        ([3, 2], [2, 3], FirstCNotOne),
        ([], [], ArrayShapeError),
        ([3, 2], [1], ArrayShapeError),
        ([3.5], [1], ArrayShapeError),
        (["3"], [1], ArrayShapeError),
    ],
)
def test_rejections(b, c, err):
    with pytest.raises(err):
        validate_intersection_array(b, c)


@pytest.mark.parametrize(
    "b, c, n",
    [
        ([3, 2, 1], [1, 2, 3], 8),
        ([3, 2, 2, 2, 1, 1, 1], [1, 1, 1, 1, 1, 1, 3], 102),
        ([1], [1], 2),
    ],
)
def test_order(b, c, n):
    assert order(validate_intersection_array(b, c)) == n


def test_boundary_conventions():
    arr = validate_intersection_array([7, 6, 4, 4], [1, 1, 1, 6])
    assert arr.b_at(arr.d) == 0 and arr.c_at(0) == 0
    assert arr.a[arr.d] == arr.valency - arr.c[-1]


def test_immutable():
    arr = validate_intersection_array([3, 2, 1], [1, 2, 3])
    with pytest.raises(AttributeError):
        arr.N = 9


def test_json_roundtrip():
    arr = validate_intersection_array([7, 6, 4, 4], [1, 1, 1, 6])
    obj = arr.to_json()
    assert obj["N"] == 330 and obj["kappa"] == [1, 7, 42, 168, 112]
    assert IntersectionArray.from_json(obj) == arr
    with pytest.raises(ArrayShapeError):
        IntersectionArray.from_json({"b": [1]})


def test_rational_value_equality():
    assert Fraction(150, 153) == Fraction(50, 51)
    assert rational_to_json(Fraction(150, 153)) == {"num": "50", "den": "51"}


rationals = st.fractions(max_denominator=10**12) | st.builds(
    Fraction, st.integers(-(10**40), 10**40), st.integers(1, 10**40)
)


@given(rationals)
def test_rational_format_roundtrip(x):
    assert parse_rational(format_rational(x)) == x
    assert rational_from_json(rational_to_json(x)) == x


@given(rationals, rationals)
def test_rational_ops_reduced(x, y):
    for z in (x + y, x - y, x * y):
        assert z.denominator > 0
        from math import gcd

        assert gcd(abs(z.numerator), z.denominator) == 1


@given(st.lists(st.integers(-2, 6), min_size=1, max_size=5), st.data())
def test_validation_is_total(b, data):
    c = data.draw(st.lists(st.integers(-2, 6), min_size=len(b), max_size=len(b)))
    try:
        arr = validate_intersection_array(b, c)
    except IntersectionArrayError:
        return
    k = arr.valency
    assert arr.kappa[0] == 1 and arr.kappa[1] == k == arr.b[0]
    assert arr.c[0] == 1
    assert sum(arr.kappa) == arr.N
    for i in range(1, arr.d + 1):
        assert arr.kappa[i - 1] * arr.b[i - 1] == arr.kappa[i] * arr.c[i - 1]
        assert arr.a[i] + arr.b_at(i) + arr.c_at(i) == k
        assert arr.a[i] >= 0
