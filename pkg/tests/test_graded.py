# -*- coding: utf-8 -*-
from fractions import Fraction

import pytest

from chaospu.exceptions import IntegralityViolation, InvalidInput
from chaospu.graded import DegreeMarker, ExteriorElement, PresElement, \
    assert_integral, rho_degree


def test_exterior_generators_anticommute():
    x1 = ExteriorElement.generator(4, 1)
    x2 = ExteriorElement.generator(4, 2)
    assert x1 * x2 == -(x2 * x1)
    assert x1 * x1 == 0
    assert (x2 * x1).coefficient((1, 2)) == -1
    assert str(x1 * x2) == "x1x3"


def test_exterior_basis_sorts_with_sign():
    assert ExteriorElement.basis(4, (3, 1)) == \
        ExteriorElement(4, {(1, 3): -1})
    assert not ExteriorElement.basis(4, (2, 2))
    with pytest.raises(InvalidInput):
        ExteriorElement.generator(4, 5)


def test_rho_squares_to_zero_and_w_is_central():
    r3 = PresElement.rho(4, 2)
    r5 = PresElement.rho(4, 3)
    w = PresElement.omega(4)
    assert r3 * r3 == 0
    assert r3 * r5 == -(r5 * r3)
    assert w * r3 == r3 * w


def test_monomial_validates_input():
    with pytest.raises(InvalidInput):
        PresElement.monomial(4, -1)
    with pytest.raises(InvalidInput):
        PresElement.monomial(4, 0, (1,))
    with pytest.raises(InvalidInput):
        PresElement.monomial(4, 0, (5,))
    assert not PresElement.monomial(4, 1, (2, 2))


def test_degree_markers():
    assert PresElement(4).degree() is DegreeMarker.BOTTOM
    assert PresElement.monomial(4, 1, (2,), 3).degree() == 5
    mixed = PresElement.omega(4) + PresElement.rho(4, 2)
    assert mixed.degree() is DegreeMarker.MIXED
    assert not mixed.is_homogeneous()
    assert rho_degree((2, 4)) == 3 + 7


def test_cannot_mix_ambients():
    with pytest.raises(InvalidInput):
        PresElement.omega(4) + PresElement.omega(5)
    with pytest.raises(InvalidInput):
        PresElement.omega(4) + ExteriorElement.one(4)


def test_text_rendering():
    value = PresElement.monomial(8, 1, (4,), 4) + \
        PresElement.monomial(8, 3, (2,), 2)
    assert value.to_text() == "4*w*r7 + 2*w^3*r3"
    assert str(-value) == "-4*w*r7 - 2*w^3*r3"
    assert PresElement(8).to_text() == "0"
    assert PresElement.one(8, 5).to_text() == "5"


def test_latex_rendering():
    value = PresElement.monomial(8, 1, (4, 8), 2)
    assert value.to_latex() == r"2\omega\otimes \rho_{7}\rho_{15}"
    assert PresElement.monomial(8, 2).to_latex() == r"\omega^{2}"


def test_json_terms_use_string_coefficients():
    value = PresElement.monomial(8, 2, (4,), Fraction(3, 2))
    terms = value.to_json()
    assert terms == [{"coeff": "3/2", "omega": 2, "rho": [4]}]
    assert PresElement.from_json(8, terms) == value

    with pytest.raises(InvalidInput):
        PresElement.from_json(8, [{"omega": 1}])


def test_normalized_and_truncated():
    value = PresElement.monomial(4, 1, (), -2) + \
        PresElement.monomial(4, 5, (), 3)
    assert value.normalized().leading_coefficient() == 2
    assert value.max_omega() == 5
    assert value.truncate_omega(4) == PresElement.monomial(4, 1, (), -2)


def test_assert_integral_names_the_term():
    value = PresElement.monomial(4, 1, (2,), Fraction(1, 2))
    assert not value.is_integral()
    with pytest.raises(IntegralityViolation) as excinfo:
        assert_integral(value)
    assert excinfo.value.term == ((1, (2,)), Fraction(1, 2))


def test_exterior_coefficients_must_be_integers():
    x1 = ExteriorElement.generator(4, 1)
    assert x1.scale(Fraction(4, 2)) == ExteriorElement(4, {(1,): 2})
    with pytest.raises(IntegralityViolation) as excinfo:
        x1.scale(Fraction(1, 2))
    assert "not an integer" in str(excinfo)
    assert excinfo.value.term == Fraction(1, 2)
    with pytest.raises(IntegralityViolation):
        ExteriorElement(4, {(2,): Fraction(3, 2)})
