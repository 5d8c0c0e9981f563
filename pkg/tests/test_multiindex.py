# -*- coding: utf-8 -*-
import pytest

from chaospu.exceptions import InvalidInput
from chaospu.multiindex import ZERO, MultiIndex, PSequence, admissible, \
    exponent_drop, omega_shift, positive_index_set, prime_index_set, \
    sort_with_sign, step_down, subsets, truncate


def test_parse_multiindex():
    index = MultiIndex.parse(8, "1,2,8")
    assert index.elements == (1, 2, 8)
    assert index.top == 8
    assert index.degree() == 1 + 3 + 15
    assert str(index) == "1,2,8"
    assert 2 in index
    assert len(index) == 3


def test_multiindex_must_increase_and_stay_in_range():
    with pytest.raises(InvalidInput):
        MultiIndex(8, (2, 1))
    with pytest.raises(InvalidInput):
        MultiIndex(8, (0,))
    with pytest.raises(InvalidInput):
        MultiIndex(8, (9,))
    with pytest.raises(InvalidInput):
        MultiIndex.parse(8, "1,x")


def test_truncate_drops_top():
    assert truncate(MultiIndex(8, (1, 4, 8))).elements == (1, 4)
    with pytest.raises(InvalidInput):
        truncate(MultiIndex(8, ()))


def test_index_sets():
    assert positive_index_set(4) == (2, 3, 4)
    assert prime_index_set(12, 2) == (1, 2, 4)
    assert prime_index_set(12, 3) == (1, 3)


def test_subsets_by_size_then_lexicographic():
    assert list(subsets((1, 2, 4), min_size=2)) == [
        (1, 2), (1, 4), (2, 4), (1, 2, 4)]


def test_psequence_from_multiindex():
    sequence = PSequence.from_multiindex(MultiIndex(8, (1, 4, 8)), 2)
    assert sequence.exponents == (0, 2, 3)
    assert sequence.r == 3
    assert sequence.elements == (1, 4, 8)
    assert sequence.to_multiindex() == MultiIndex(8, (1, 4, 8))

    with pytest.raises(InvalidInput):
        PSequence.from_multiindex(MultiIndex(12, (1, 3)), 2)
    with pytest.raises(InvalidInput):
        PSequence(8, 3, (0,))


def test_step_down():
    assert step_down(PSequence(8, 2, (0, 3))) == PSequence(8, 2, (0, 2))
    assert step_down(PSequence(8, 2, (2, 3))) is ZERO


def test_admissible_sets():
    index = PSequence(8, 2, (0, 2, 3))
    assert [j.exponents for j in admissible(index)] == [(1, 3), (2, 3)]
    with pytest.raises(InvalidInput):
        admissible(PSequence(8, 2, (3,)))


def test_exponent_drop_and_omega_shift():
    index = PSequence(8, 2, (0, 3))
    assert exponent_drop(index, PSequence(8, 2, (3,))) == 0
    assert exponent_drop(index, PSequence(8, 2, (1,))) == 2
    assert omega_shift(index, PSequence(8, 2, (3,))) == 0
    assert omega_shift(index, PSequence(8, 2, (2,))) == 4
    assert omega_shift(index, PSequence(8, 2, (1,))) == 6

    with pytest.raises(InvalidInput):
        exponent_drop(index, PSequence(8, 2, (0,)))


def test_sort_with_sign():
    assert sort_with_sign((1, 2, 3)) == ((1, 2, 3), 1)
    assert sort_with_sign((2, 1)) == ((1, 2), -1)
    assert sort_with_sign((3, 1, 2)) == ((1, 2, 3), 1)
    assert sort_with_sign((2, 2)) is ZERO
    assert not ZERO
