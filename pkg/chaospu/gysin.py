# -*- coding: utf-8 -*-
"""
The connecting map of the Gysin sequence of the circle bundle
U(n) -> PU(n), evaluated on the exterior basis xi_I of H*(U(n)).

Values are `PresElement` representatives in Q[w] (x) exterior(rho): the
recursion divides by primes on the way, the finished values are integral.
"""
from fractions import Fraction
from functools import lru_cache
from typing import List, NamedTuple, Tuple

from logzero import logger

from chaospu.arithmetic import binomial, bezout, cstar_multiplier, \
    factorize, prime_power_of
from chaospu.exceptions import InternalInconsistency, InvalidInput
from chaospu.graded import ExteriorElement, PresElement, assert_integral
from chaospu.multiindex import ZERO, MultiIndex, PSequence, admissible, \
    exponent_drop, omega_shift, prime_index_set, sort_with_sign

__all__ = ["gysin_single", "gysin_image", "gysin_of", "gysin_closed",
           "closed_form_sum", "closed_form_unit",
           "split_by_primes", "PrimeSplitting", "SplitPart",
           "is_prime_sequence", "prime_of"]


def gysin_single(n: int, k: int) -> PresElement:
    """
    Image of a single generator: C(n,k) w^(k-1).
    """
    if k < 1 or k > n:
        raise InvalidInput("k must lie in 1..{n}, got {k}".format(n=n, k=k))
    return PresElement.monomial(n, k - 1, (), binomial(n, k))


def gysin_image(n: int, index: MultiIndex) -> PresElement:
    """
    Image of the basis element xi_I, I a non-empty subset of 1..n.

    The top element i_r of I decides the step: when its multiplier c is 1
    the value is -theta(xi_{I minus i_r}) rho_{2 i_r - 1}; when it is a
    prime p the value is

        -(1/p) theta(xi_{I minus i_r}) rho_{2 i_r - 1}
        +(1/p) w^(i_r - i_r/p) theta(xi_{I minus i_r} xi_{2 i_r/p - 1})

    where the second product is re-sorted with its sign and vanishes on a
    repeated index.
    """
    if index.n != n:
        raise InvalidInput("multi-index {i} belongs to n={m}, not {n}".format(
            i=str(index), m=index.n, n=n))
    if not index.elements:
        raise InvalidInput("the connecting map needs a non-empty index")
    return _evaluate(n, index.elements)


def gysin_of(element: ExteriorElement) -> PresElement:
    """
    Linear extension to arbitrary integer combinations of the xi_I.
    """
    n = element.n
    total = PresElement(n)
    for key, value in element.items():
        if not key:
            continue
        total = total + _evaluate(n, key).scale(value)
    return total


@lru_cache(maxsize=None)
def _evaluate(n: int, elements: Tuple[int, ...]) -> PresElement:
    if len(elements) == 1:
        return gysin_single(n, elements[0])

    rest, top = elements[:-1], elements[-1]
    lower = _evaluate(n, rest)
    with_rho = lower * PresElement.rho(n, top)
    c = cstar_multiplier(n, top)

    if c == 1:
        return assert_integral(-with_rho)

    p = c
    below = top // p
    span = top - below
    # (-1)^(p^s - p^(s-1)) is -1 only for top = 2, where the product below
    # is xi_1 xi_1 = 0
    tail_sign = -1 if span % 2 else 1

    value = with_rho.scale(Fraction(-1, p))
    product = sort_with_sign(rest + (below,))
    if product is not ZERO:
        key, sign = product
        tail = PresElement.omega(n, span) * _evaluate(n, key)
        value = value + tail.scale(Fraction(tail_sign * sign, p))

    logger.debug("Evaluated the connecting map on {i} for n={n}".format(
        i=list(elements), n=n))
    return assert_integral(value)


def gysin_closed(n: int, index: PSequence,
                 printed_exponent: bool = False) -> PresElement:
    """
    Closed form for I = {p^i1, ..., p^ik} inside Q_p(n), k >= 2:

        (-1)^(k-1) u sum_J p^(r - i1 - (k-1) - eps(J)) w^kappa(J) rho_J

    where J runs over the admissible sets of I and u = C(n, p^i1)/p^(r-i1)
    is prime to p.

    With `printed_exponent` the `(k-1)` is left out of the power of p; that
    variant does not agree with the recursion and only serves comparisons.
    """
    total = closed_form_sum(n, index, printed_exponent)
    return total.scale((-1) ** (len(index) - 1) * closed_form_unit(n, index))


def closed_form_unit(n: int, index: PSequence) -> int:
    """
    u = C(n, p^i1) / p^(r - i1), prime to p.
    """
    p, r = index.p, index.r
    i1 = index.exponents[0]
    head = binomial(n, p ** i1)
    if head % p ** (r - i1):
        raise InternalInconsistency(
            "p^{e} does not divide C({n},{m})".format(
                e=r - i1, n=n, m=p ** i1))
    return head // p ** (r - i1)


def closed_form_sum(n: int, index: PSequence,
                    printed_exponent: bool = False) -> PresElement:
    """
    The positive sum over the admissible sets J of I in the closed form.
    """
    if index.n != n:
        raise InvalidInput("sequence {i} belongs to n={m}, not {n}".format(
            i=str(index), m=index.n, n=n))
    k = len(index)
    if k < 2:
        raise InvalidInput(
            "the closed form needs at least two elements, got {k}".format(
                k=k))

    p, r = index.p, index.r
    i1 = index.exponents[0]
    total = PresElement(n)
    for other in admissible(index):
        exponent = r - i1 - exponent_drop(index, other)
        if not printed_exponent:
            exponent -= k - 1
        if exponent < 0:
            raise InternalInconsistency(
                "negative power of {p} for {i} at {j}".format(
                    p=p, i=str(index), j=str(other)))
        total = total + PresElement.monomial(
            n, omega_shift(index, other), other.elements, p ** exponent)
    return total


class SplitPart(NamedTuple):
    prime: int
    component: MultiIndex
    b: int
    q: int
    coefficient: PresElement


class PrimeSplitting(NamedTuple):
    """
    theta(xi_I) written as sum of coefficient * theta(xi_component), one part
    per prime whose powers meet I. `case` is `"a"` (no prime power in I,
    the image vanishes), `"b"` (one prime) or `"c"` (several primes).
    """
    n: int
    index: MultiIndex
    case: str
    remainder: Tuple[int, ...]
    parts: Tuple[SplitPart, ...]

    def evaluate(self) -> PresElement:
        total = PresElement(self.n)
        for part in self.parts:
            total = total + part.coefficient * gysin_image(
                self.n, part.component)
        return total


def split_by_primes(n: int, index: MultiIndex,
                    with_unit: bool = False) -> PrimeSplitting:
    """
    Split I, a subset of 2..n, into its intersections I_i with the prime
    index sets Q_p(n) and the remainder I_0. With `with_unit`, the split is
    of xi_1 xi_I and every component carries the index 1.

    For each prime part, b_i is the product of p_m^|I_m| over the other
    primes, the q_i solve sum q_i b_i = 1 and the coefficient is
    sign * q_i * rho_{I minus I_i}, the sign coming from moving I_i to the
    end of I.
    """
    if index.n != n:
        raise InvalidInput("multi-index {i} belongs to n={m}, not {n}".format(
            i=str(index), m=index.n, n=n))
    if 1 in index:
        raise InvalidInput(
            "split the index without 1 and use with_unit instead")

    primes = factorize(n).primes
    pieces = []  # type: List[Tuple[int, Tuple[int, ...]]]
    covered = set()
    for p in primes:
        members = tuple(i for i in index if i in prime_index_set(n, p))
        covered.update(members)
        if members:
            pieces.append((p, members))
    remainder = tuple(i for i in index if i not in covered)
    full = MultiIndex(n, ((1,) if with_unit else ()) + index.elements)

    if not pieces:
        logger.debug("No prime power of {n} meets {i}".format(
            n=n, i=str(index)))
        if not with_unit:
            return PrimeSplitting(n, full, "a", remainder, ())
        # xi_I is the restriction of rho_I; only xi_1 stays, under prime 1
        _, sign = sort_with_sign(index.elements + (1,))
        part = SplitPart(1, MultiIndex(n, (1,)), 1, 1,
                         PresElement.monomial(n, 0, index.elements, sign))
        return PrimeSplitting(n, full, "a", remainder, (part,))

    bs = []
    for p, members in pieces:
        b = 1
        for q, others in pieces:
            if q != p:
                b *= q ** len(others)
        bs.append(b)
    g, qs = bezout(bs)
    if g != 1:
        raise InternalInconsistency(
            "the cofactors {b} are not coprime".format(b=bs))

    parts = []
    for (p, members), b, q in zip(pieces, bs, qs):
        component = ((1,) if with_unit else ()) + members
        complement = tuple(i for i in index if i not in members)
        product = sort_with_sign(complement + component)
        if product is ZERO or product[0] != full.elements:
            raise InternalInconsistency(
                "rearranging {i} failed".format(i=str(full)))
        sign = product[1]
        parts.append(SplitPart(
            p, MultiIndex(n, component), b, q,
            PresElement.monomial(n, 0, complement, sign * q)))

    case = "b" if len(parts) == 1 else "c"
    return PrimeSplitting(n, full, case, remainder, tuple(parts))


def is_prime_sequence(n: int, index: MultiIndex) -> bool:
    """
    True when every element of I is a power of one prime dividing n (1
    included).
    """
    for p in factorize(n).primes:
        if all(i in prime_index_set(n, p) for i in index):
            return True
    return False


def prime_of(n: int, index: MultiIndex) -> int:
    for i in index:
        power = prime_power_of(n, i)
        if power:
            return power[0]
    raise InvalidInput("{i} holds no prime power of {n}".format(
        i=str(index), n=n))
