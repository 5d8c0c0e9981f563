# -*- coding: utf-8 -*-
"""
Multi-index combinatorics for the exterior generators: the index sets
Q(n) = {1..n}, Q+(n) = {2..n}, Q_p(n) = {1, p, ..., p^r}, the truncation and
step-down operators and the admissible sets used by the closed formula.
"""
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple, Union

from chaospu.arithmetic import factorize
from chaospu.exceptions import InvalidInput

__all__ = ["MultiIndex", "PSequence", "ZERO", "truncate", "step_down",
           "admissible", "exponent_drop", "omega_shift", "sort_with_sign",
           "index_set", "positive_index_set", "prime_index_set",
           "subsets"]


class _Zero:
    """
    The vanishing product: a repeated odd generator squares to zero.
    """
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __bool__(self) -> bool:
        return False

    def __repr__(self) -> str:
        return "ZERO"


ZERO = _Zero()


@dataclass(frozen=True, order=True)
class MultiIndex:
    n: int
    elements: Tuple[int, ...]

    def __post_init__(self):
        elements = tuple(self.elements)
        object.__setattr__(self, "elements", elements)
        for a, b in zip(elements, elements[1:]):
            if a >= b:
                raise InvalidInput(
                    "multi-index {e} is not strictly increasing".format(
                        e=list(elements)))
        if elements and (elements[0] < 1 or elements[-1] > self.n):
            raise InvalidInput(
                "multi-index {e} leaves 1..{n}".format(
                    e=list(elements), n=self.n))

    @classmethod
    def parse(cls, n: int, text: str) -> "MultiIndex":
        """
        Parse the comma separated form, e.g. `"1,2,8"`.
        """
        text = text.strip()
        if not text:
            return cls(n, ())
        try:
            values = [int(v) for v in text.split(",")]
        except ValueError:
            raise InvalidInput(
                "cannot read a multi-index from '{t}'".format(t=text))
        return cls(n, tuple(values))

    @property
    def top(self) -> int:
        if not self.elements:
            raise InvalidInput("the empty multi-index has no top element")
        return self.elements[-1]

    def degree(self) -> int:
        return sum(2 * i - 1 for i in self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, i: int) -> bool:
        return i in self.elements

    def __str__(self) -> str:
        return ",".join(str(i) for i in self.elements)


@dataclass(frozen=True, order=True)
class PSequence:
    """
    The set {p^i1, ..., p^ik} inside Q_p(n), kept as its exponents.
    """
    n: int
    p: int
    exponents: Tuple[int, ...]

    def __post_init__(self):
        exponents = tuple(self.exponents)
        object.__setattr__(self, "exponents", exponents)
        r = self.r
        if r == 0:
            raise InvalidInput("{p} does not divide {n}".format(
                p=self.p, n=self.n))
        for a, b in zip(exponents, exponents[1:]):
            if a >= b:
                raise InvalidInput(
                    "exponents {e} are not strictly increasing".format(
                        e=list(exponents)))
        if exponents and (exponents[0] < 0 or exponents[-1] > r):
            raise InvalidInput(
                "exponents {e} leave 0..{r}".format(e=list(exponents), r=r))

    @property
    def r(self) -> int:
        return factorize(self.n).exponent(self.p)

    @property
    def elements(self) -> Tuple[int, ...]:
        return tuple(self.p ** i for i in self.exponents)

    def to_multiindex(self) -> MultiIndex:
        return MultiIndex(self.n, self.elements)

    @classmethod
    def from_multiindex(cls, index: MultiIndex, p: int) -> "PSequence":
        exponents = []
        for i in index:
            e, rest = 0, i
            while rest % p == 0:
                rest //= p
                e += 1
            if rest != 1:
                raise InvalidInput(
                    "{i} is not a power of {p}".format(i=i, p=p))
            exponents.append(e)
        return cls(index.n, p, tuple(exponents))

    def __len__(self) -> int:
        return len(self.exponents)

    def __str__(self) -> str:
        return ",".join(str(i) for i in self.elements)


def index_set(n: int) -> Tuple[int, ...]:
    return tuple(range(1, n + 1))


def positive_index_set(n: int) -> Tuple[int, ...]:
    return tuple(range(2, n + 1))


def prime_index_set(n: int, p: int) -> Tuple[int, ...]:
    r = factorize(n).exponent(p)
    return tuple(p ** s for s in range(0, r + 1))


def subsets(values: Sequence[int],
            min_size: int = 0) -> Iterator[Tuple[int, ...]]:
    """
    All subsets of `values` of size at least `min_size`, by size then
    lexicographically.
    """
    values = sorted(values)
    for size in range(min_size, len(values) + 1):
        for combo in itertools.combinations(values, size):
            yield combo


def truncate(index: MultiIndex) -> MultiIndex:
    if not index.elements:
        raise InvalidInput("cannot truncate the empty multi-index")
    return MultiIndex(index.n, index.elements[:-1])


def step_down(index: PSequence) -> Union[PSequence, _Zero]:
    """
    Lower the top exponent by one; a collision with the exponent below
    yields `ZERO`.
    """
    if not index.exponents:
        raise InvalidInput("cannot step down the empty sequence")
    top = index.exponents[-1]
    if top == 0:
        raise InvalidInput("the top exponent is already 0")
    rest = index.exponents[:-1]
    if rest and rest[-1] == top - 1:
        return ZERO
    return PSequence(index.n, index.p, rest + (top - 1,))


def admissible(index: PSequence) -> List[PSequence]:
    """
    All J = {p^j2, ..., p^jk} with i_s >= j_s > i_(s-1), in lexicographic
    order of (j2, ..., jk).
    """
    i = index.exponents
    if len(i) < 2:
        raise InvalidInput(
            "admissible sets need at least two elements, got {k}".format(
                k=len(i)))
    ranges = [range(i[s - 1] + 1, i[s] + 1) for s in range(1, len(i))]
    return [PSequence(index.n, index.p, tuple(j))
            for j in itertools.product(*ranges)]


def _check_admissible(index: PSequence, other: PSequence):
    i, j = index.exponents, other.exponents
    if len(j) != len(i) - 1 or other.p != index.p or any(
            not (i[s - 1] < j[s - 1] <= i[s]) for s in range(1, len(i))):
        raise InvalidInput("{j} is not admissible for {i}".format(
            j=str(other), i=str(index)))


def exponent_drop(index: PSequence, other: PSequence) -> int:
    """
    Sum of the exponent drops i_s - j_s, s = 2..k.
    """
    _check_admissible(index, other)
    i, j = index.exponents, other.exponents
    return sum(i[s] - j[s - 1] for s in range(1, len(i)))


def omega_shift(index: PSequence, other: PSequence) -> int:
    """
    Sum of p^i_s - p^j_s for s = 2..k, plus p^i1 - 1: the power of the Euler
    class carried by the J term.
    """
    _check_admissible(index, other)
    p = index.p
    i, j = index.exponents, other.exponents
    return sum(p ** i[s] - p ** j[s - 1] for s in range(1, len(i))) + \
        p ** i[0] - 1


def sort_with_sign(indices: Iterable[int]) -> Union[
        Tuple[Tuple[int, ...], int], _Zero]:
    """
    Sort a product of odd generators. Returns the sorted indices with the
    permutation sign, or `ZERO` when an index repeats.
    """
    values = list(indices)
    if len(set(values)) != len(values):
        return ZERO
    sign = 1
    # insertion sort, counting transpositions
    for a in range(1, len(values)):
        b = a
        while b > 0 and values[b - 1] > values[b]:
            values[b - 1], values[b] = values[b], values[b - 1]
            sign = -sign
            b -= 1
    return tuple(values), sign
