# -*- coding: utf-8 -*-
import pytest

from chaospu.arithmetic import factorize
from chaospu.exceptions import InvalidInput
from chaospu.graded import ExteriorElement, PresElement
from chaospu.gysin import closed_form_sum, closed_form_unit, gysin_closed, \
    gysin_image, gysin_of, gysin_single, is_prime_sequence, prime_of, \
    split_by_primes
from chaospu.multiindex import MultiIndex, PSequence, prime_index_set, \
    subsets


def _index(n, text):
    return MultiIndex.parse(n, text)


def test_single_generator():
    assert gysin_single(8, 3) == PresElement.monomial(8, 2, (), 56)
    assert gysin_single(8, 1) == PresElement.one(8, 8)
    with pytest.raises(InvalidInput):
        gysin_single(8, 0)


def test_two_generators_for_pu2():
    assert gysin_image(2, _index(2, "1,2")) == -PresElement.rho(2, 2)


def test_recursion_on_powers_of_two():
    n = 8
    assert gysin_image(n, _index(n, "1,2")) == \
        PresElement.monomial(n, 0, (2,), -4)
    assert gysin_image(n, _index(n, "1,4")) == \
        PresElement.monomial(n, 0, (4,), -4) + \
        PresElement.monomial(n, 2, (2,), -2)
    assert gysin_image(n, _index(n, "1,8")).to_text() == \
        "-4*r15 - 2*w^4*r7 - w^6*r3"


def test_image_needs_a_matching_nonempty_index():
    with pytest.raises(InvalidInput):
        gysin_image(8, MultiIndex(8, ()))
    with pytest.raises(InvalidInput):
        gysin_image(8, MultiIndex(6, (1, 2)))


def test_linear_extension():
    element = ExteriorElement.basis(8, (1, 2)).scale(3) + \
        ExteriorElement.generator(8, 3)
    assert gysin_of(element) == \
        gysin_image(8, _index(8, "1,2")).scale(3) + gysin_single(8, 3)
    assert not gysin_of(ExteriorElement.one(8))


@pytest.mark.parametrize("n", [4, 8, 9, 12, 16, 27])
def test_closed_form_matches_recursion(n):
    for p in factorize(n).primes:
        for elements in subsets(prime_index_set(n, p), min_size=2):
            index = MultiIndex(n, elements)
            closed = gysin_closed(n, PSequence.from_multiindex(index, p))
            value = gysin_image(n, index)
            assert value in (closed, -closed), str(index)


def test_closed_form_for_one_and_eight():
    index = PSequence(8, 2, (0, 3))
    assert closed_form_unit(8, index) == 1
    assert closed_form_sum(8, index).to_text() == \
        "4*r15 + 2*w^4*r7 + w^6*r3"
    assert gysin_closed(8, index) == -closed_form_sum(8, index)


def test_printed_exponent_differs_from_recursion():
    index = PSequence(8, 2, (0, 3))
    printed = gysin_closed(8, index, printed_exponent=True)
    assert printed == gysin_closed(8, index).scale(2)
    assert printed != gysin_image(8, index.to_multiindex())


def test_closed_form_needs_two_elements():
    with pytest.raises(InvalidInput):
        closed_form_sum(8, PSequence(8, 2, (3,)))


def test_images_are_integral_and_homogeneous():
    n = 6
    for elements in subsets(range(1, n + 1), min_size=1):
        value = gysin_image(n, MultiIndex(n, elements))
        assert value.is_integral()
        assert value.is_homogeneous()


def test_split_without_prime_powers():
    splitting = split_by_primes(6, _index(6, "5"))
    assert splitting.case == "a"
    assert splitting.parts == ()
    assert splitting.remainder == (5,)
    assert not splitting.evaluate()


def test_split_with_unit_and_no_prime_powers():
    splitting = split_by_primes(6, _index(6, "5"), with_unit=True)
    assert splitting.case == "a"
    assert splitting.index == _index(6, "1,5")
    assert splitting.evaluate() == gysin_image(6, _index(6, "1,5"))


def test_split_over_two_primes():
    splitting = split_by_primes(6, _index(6, "2,3,5"), with_unit=True)
    assert splitting.case == "c"
    assert splitting.remainder == (5,)
    assert [part.prime for part in splitting.parts] == [2, 3]
    assert [part.component.elements for part in splitting.parts] == \
        [(1, 2), (1, 3)]
    assert sum(part.q * part.b for part in splitting.parts) == 1


def test_split_over_one_prime():
    splitting = split_by_primes(8, _index(8, "2,3,4"))
    assert splitting.case == "b"
    assert splitting.remainder == (3,)
    assert splitting.parts[0].component.elements == (2, 4)


def test_split_refuses_the_unit_index():
    with pytest.raises(InvalidInput):
        split_by_primes(6, _index(6, "1,2"))


def test_prime_sequences():
    assert is_prime_sequence(12, _index(12, "1,2,4"))
    assert not is_prime_sequence(12, _index(12, "2,3"))
    assert prime_of(12, _index(12, "1,3")) == 3
    with pytest.raises(InvalidInput):
        prime_of(12, _index(12, "1,5"))
