import itertools

import pytest

from perrin_repdigits.repdigits import (
    ConcatPattern,
    InvalidPattern,
    concat_value,
    decompose,
    repdigit_value,
)


def test_repdigit_value():
    assert repdigit_value(7, 3) == 777
    assert repdigit_value(0, 5) == 0
    assert repdigit_value(9, 2) == 99


def test_concat_examples():
    assert concat_value(ConcatPattern(6, 4, 1, 2)) == 644
    assert concat_value(ConcatPattern(1, 0, 1, 1)) == 10
    assert concat_value(ConcatPattern(2, 0, 1, 2)) == 200


def test_decompose_examples():
    assert decompose(644) == ConcatPattern(6, 4, 1, 2)
    assert decompose(22) is None
    assert decompose(123) is None
    assert decompose(7) is None
    assert decompose(0) is None


@pytest.mark.parametrize("bad", [(0, 1, 1, 1), (3, 3, 1, 1), (1, 2, 0, 1), (1, 2, 1, 0), (10, 2, 1, 1)])
def test_invalid_patterns(bad):
    with pytest.raises(InvalidPattern):
        ConcatPattern(*bad)


def test_round_trip_exhaustive():
    for d1, d2 in itertools.product(range(1, 10), range(10)):
        if d1 == d2:
            continue
        for ell, m in itertools.product(range(1, 7), repeat=2):
            p = ConcatPattern(d1, d2, ell, m)
            v = concat_value(p)
            assert str(v) == str(d1) * ell + str(d2) * m
            assert decompose(v) == p
