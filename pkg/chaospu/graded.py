# -*- coding: utf-8 -*-
"""
Exact arithmetic in the two graded rings the connecting map lives between:

* the exterior ring on odd generators xi_1, xi_3, ..., xi_{2n-1}
  (`ExteriorElement`, integer coefficients, keyed by multi-index);
* Q[w] (x) exterior(rho_3, ..., rho_{2n-1}) (`PresElement`, rational
  coefficients, keyed by `(a, J)` for w^a rho_J where J lists the k of each
  rho_{2k-1}).

Odd generators anticommute and square to zero; w is central.
"""
import enum
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Tuple, Union

from chaospu.exceptions import IntegralityViolation, InvalidInput
from chaospu.multiindex import ZERO, sort_with_sign

__all__ = ["DegreeMarker", "ExteriorElement", "PresElement",
           "assert_integral", "rho_degree"]


class DegreeMarker(enum.Enum):
    BOTTOM = "bottom"
    MIXED = "mixed"


def rho_degree(indices: Tuple[int, ...]) -> int:
    return sum(2 * k - 1 for k in indices)


class _GradedElement:
    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Dict[Any, Any] = None):
        self.n = n
        cleaned = {}
        for key, value in (terms or {}).items():
            value = self._coerce(value)
            if value:
                cleaned[key] = value
        self._terms = cleaned

    # hooks ------------------------------------------------------------------
    @staticmethod
    def _coerce(value):
        raise NotImplementedError()

    @staticmethod
    def _key_degree(key) -> int:
        raise NotImplementedError()

    @staticmethod
    def _key_product(left, right):
        raise NotImplementedError()

    @classmethod
    def _sort_key(cls, key):
        return (cls._key_degree(key), key)

    # container --------------------------------------------------------------
    @property
    def terms(self) -> Dict[Any, Any]:
        return dict(self._terms)

    def items(self) -> List[Tuple[Any, Any]]:
        """
        Terms in canonical order.
        """
        return sorted(self._terms.items(), key=lambda t: self._sort_key(t[0]))

    def __iter__(self) -> Iterator[Tuple[Any, Any]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, key) -> Any:
        return self._terms.get(key, 0)

    def _new(self, terms):
        return type(self)(self.n, terms)

    def _check(self, other):
        if not isinstance(other, type(self)):
            raise InvalidInput("cannot combine {a} with {b}".format(
                a=type(self).__name__, b=type(other).__name__))
        if other.n != self.n:
            raise InvalidInput(
                "ambient mismatch: n={a} against n={b}".format(
                    a=self.n, b=other.n))

    # arithmetic -------------------------------------------------------------
    def __add__(self, other):
        self._check(other)
        terms = dict(self._terms)
        for key, value in other._terms.items():
            terms[key] = terms.get(key, 0) + value
        return self._new(terms)

    def __neg__(self):
        return self._new({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor):
        return self._new({k: v * factor for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        terms = {}
        for k1, v1 in self._terms.items():
            for k2, v2 in other._terms.items():
                product = self._key_product(k1, k2)
                if product is ZERO:
                    continue
                key, sign = product
                terms[key] = terms.get(key, 0) + sign * v1 * v2
        return self._new(terms)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, type(self)):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.n,
                     frozenset(self._terms.items())))

    def degree(self) -> Union[int, DegreeMarker]:
        degrees = {self._key_degree(k) for k in self._terms}
        if not degrees:
            return DegreeMarker.BOTTOM
        if len(degrees) > 1:
            return DegreeMarker.MIXED
        return degrees.pop()

    def is_homogeneous(self) -> bool:
        return self.degree() is not DegreeMarker.MIXED


class ExteriorElement(_GradedElement):
    """
    Integer combination of the products xi_I, keyed by the sorted tuple I.
    """
    __slots__ = ()

    @staticmethod
    def _coerce(value):
        if int(value) != value:
            raise IntegralityViolation(
                "coefficient {v} of an exterior element is not an "
                "integer".format(v=value), term=value)
        return int(value)

    @staticmethod
    def _key_degree(key) -> int:
        return rho_degree(key)

    @staticmethod
    def _key_product(left, right):
        return sort_with_sign(left + right)

    @classmethod
    def one(cls, n: int) -> "ExteriorElement":
        return cls(n, {(): 1})

    @classmethod
    def generator(cls, n: int, k: int) -> "ExteriorElement":
        if k < 1 or k > n:
            raise InvalidInput("xi index {k} leaves 1..{n}".format(k=k, n=n))
        return cls(n, {(k,): 1})

    @classmethod
    def basis(cls, n: int, indices) -> "ExteriorElement":
        product = sort_with_sign(tuple(indices))
        if product is ZERO:
            return cls(n)
        key, sign = product
        if key and (key[0] < 1 or key[-1] > n):
            raise InvalidInput("xi indices {k} leave 1..{n}".format(
                k=list(key), n=n))
        return cls(n, {key: sign})

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for key, value in self.items():
            name = "".join("x{d}".format(d=2 * k - 1) for k in key) or "1"
            parts.append(_signed(value, name, first=not parts))
        return "".join(parts)


class PresElement(_GradedElement):
    """
    Rational combination of w^a rho_J keyed by `(a, J)`. Coefficients are
    `Fraction`; integrality is only expected of finished values.
    """
    __slots__ = ()

    @staticmethod
    def _coerce(value):
        return Fraction(value)

    @staticmethod
    def _key_degree(key) -> int:
        a, rho = key
        return 2 * a + rho_degree(rho)

    @staticmethod
    def _key_product(left, right):
        a1, rho1 = left
        a2, rho2 = right
        product = sort_with_sign(rho1 + rho2)
        if product is ZERO:
            return ZERO
        rho, sign = product
        return (a1 + a2, rho), sign

    @classmethod
    def _sort_key(cls, key):
        a, rho = key
        return (cls._key_degree(key), a, rho)

    @classmethod
    def one(cls, n: int, coefficient=1) -> "PresElement":
        return cls(n, {(0, ()): coefficient})

    @classmethod
    def monomial(cls, n: int, a: int = 0, rho: Tuple[int, ...] = (),
                 coefficient=1) -> "PresElement":
        """
        `coefficient * w^a * rho_J`; `rho` lists the k of each rho_{2k-1} and
        is sorted with its sign.
        """
        if a < 0:
            raise InvalidInput("negative power of w: {a}".format(a=a))
        product = sort_with_sign(tuple(rho))
        if product is ZERO:
            return cls(n)
        key, sign = product
        if key and (key[0] < 2 or key[-1] > n):
            raise InvalidInput("rho indices {k} leave 2..{n}".format(
                k=list(key), n=n))
        return cls(n, {(a, key): sign * Fraction(coefficient)})

    @classmethod
    def omega(cls, n: int, a: int = 1) -> "PresElement":
        return cls.monomial(n, a)

    @classmethod
    def rho(cls, n: int, k: int) -> "PresElement":
        return cls.monomial(n, 0, (k,))

    def leading_coefficient(self) -> Fraction:
        if not self._terms:
            return Fraction(0)
        return self.items()[0][1]

    def normalized(self) -> "PresElement":
        """
        The same element up to sign, with a positive leading coefficient.
        """
        if self.leading_coefficient() < 0:
            return -self
        return self

    def max_omega(self) -> int:
        return max((a for a, _ in self._terms), default=0)

    def truncate_omega(self, bound: int) -> "PresElement":
        """
        Drop every term whose power of w is at least `bound`.
        """
        return self._new({k: v for k, v in self._terms.items()
                          if k[0] < bound})

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self._terms.values())

    def to_text(self) -> str:
        """
        Render as e.g. `4*w*r7 + 2*w^3*r3`; rho factors are named by degree.
        """
        if not self._terms:
            return "0"
        parts = []
        for (a, rho), value in self.items():
            factors = []
            if a == 1:
                factors.append("w")
            elif a > 1:
                factors.append("w^{a}".format(a=a))
            if rho:
                factors.append("".join(
                    "r{d}".format(d=2 * k - 1) for k in rho))
            parts.append(_signed(value, "*".join(factors), first=not parts))
        return "".join(parts)

    __str__ = to_text

    def to_latex(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (a, rho), value in self.items():
            omega = ""
            if a == 1:
                omega = r"\omega"
            elif a > 1:
                omega = r"\omega^{%d}" % a
            rhos = "".join(r"\rho_{%d}" % (2 * k - 1) for k in rho)
            name = r"%s\otimes %s" % (omega, rhos) if omega and rhos \
                else omega or rhos
            parts.append(_signed(value, name, first=not parts, sep=""))
        return "".join(parts)

    def to_json(self) -> List[Dict[str, Any]]:
        return [{"coeff": str(value), "omega": a, "rho": list(rho)}
                for (a, rho), value in self.items()]

    @classmethod
    def from_json(cls, n: int, terms: List[Dict[str, Any]]) -> "PresElement":
        element = cls(n)
        for term in terms:
            try:
                element = element + cls.monomial(
                    n, int(term["omega"]), tuple(term["rho"]),
                    Fraction(term["coeff"]))
            except (KeyError, TypeError, ValueError) as x:
                raise InvalidInput(
                    "malformed term {t}: {x}".format(t=term, x=str(x)))
        return element


def assert_integral(element: PresElement) -> PresElement:
    for key, value in element.items():
        if value.denominator != 1:
            raise IntegralityViolation(
                "coefficient {v} of w^{a} rho{j} is not an integer".format(
                    v=value, a=key[0], j=list(key[1])), term=(key, value))
    return element


def _signed(value, name: str, first: bool, sep: str = "*") -> str:
    negative = value < 0
    magnitude = -value if negative else value
    if not name:
        body = str(magnitude)
    elif magnitude == 1:
        body = name
    else:
        body = "{c}{s}{n}".format(c=magnitude, s=sep, n=name)
    if first:
        return "-" + body if negative else body
    return (" - " if negative else " + ") + body
