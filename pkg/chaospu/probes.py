# -*- coding: utf-8 -*-
from typing import Dict, List

from chaoslib.types import Configuration
from logzero import logger

from chaospu.arithmetic import binomial, check_binomial_gcd_factorization, \
    factorize, kummer_check, newton_check, split_identity
from chaospu.exceptions import InternalInconsistency, VerificationFailed
from chaospu.graded import PresElement
from chaospu.gysin import gysin_closed, gysin_image, split_by_primes
from chaospu.multiindex import MultiIndex, PSequence, index_set, \
    positive_index_set, prime_index_set, subsets
from chaospu.presentation.groups import full_module

__all__ = ["binomial_gcd_factorization_holds", "split_identity_holds",
           "kummer_valuations_hold", "closed_form_agrees",
           "integrality_holds", "prime_splitting_check",
           "torsion_multiple_check"]


def binomial_gcd_factorization_holds(n_max: int = 256,
                                     configuration: Configuration = None
                                     ) -> int:
    """
    For every n in 2..n_max, b_{n,1} = n, b_{n,r-1} / b_{n,r} = c_r and
    C(n,r) satisfies the Newton recurrence for every r.

    Raises :exc:`chaospu.exceptions.VerificationFailed` on the first n that
    breaks one of these.
    """
    for n in range(2, n_max + 1):
        if not check_binomial_gcd_factorization(n):
            raise VerificationFailed(
                "b_(n,r) does not factor through c_k for n={n}".format(n=n))
        for r in range(1, n + 1):
            if not newton_check(n, r):
                raise VerificationFailed(
                    "Newton recurrence fails for C({n},{r})".format(n=n, r=r))
    return n_max


def split_identity_holds(n_max: int = 256,
                         configuration: Configuration = None) -> int:
    """
    C(n, p^s) splits into its main sum plus +-(1/p) C(n, p^(s-1)) for every
    prime power p^s dividing n, n in 2..n_max. Returns the number of splits
    checked.
    """
    count = 0
    for n in range(2, n_max + 1):
        for p, r in factorize(n).pairs:
            for s in range(1, r + 1):
                try:
                    split_identity(n, p, s)
                except InternalInconsistency as x:
                    raise VerificationFailed(str(x))
                count += 1
    return count


def kummer_valuations_hold(n_max: int = 256,
                           configuration: Configuration = None) -> int:
    for n in range(2, n_max + 1):
        if not kummer_check(n):
            raise VerificationFailed(
                "C({n}, p^s) has the wrong p-adic valuation".format(n=n))
    return n_max


def closed_form_agrees(n: int, configuration: Configuration = None) -> Dict[
        str, int]:
    """
    For every p dividing n and every I in Q_p(n) with |I| >= 2, the
    recursive value of the connecting map equals the closed form up to sign.
    Returns the matching sign per index.
    """
    signs = {}
    for p in factorize(n).primes:
        for elements in subsets(prime_index_set(n, p), min_size=2):
            index = MultiIndex(n, elements)
            recursive = gysin_image(n, index)
            closed = gysin_closed(n, PSequence.from_multiindex(index, p))
            if recursive == closed:
                signs[str(index)] = 1
            elif recursive == -closed:
                signs[str(index)] = -1
            else:
                raise VerificationFailed(
                    "closed form {c} differs from {r} for I={i}, "
                    "n={n}".format(c=str(closed), r=str(recursive),
                                   i=str(index), n=n))
    return signs


def integrality_holds(n: int, configuration: Configuration = None) -> int:
    """
    The connecting map has integral values on every xi_I, I in 1..n.
    """
    count = 0
    for elements in subsets(index_set(n), min_size=1):
        try:
            value = gysin_image(n, MultiIndex(n, elements))
        except InternalInconsistency as x:
            raise VerificationFailed(str(x))
        if not value.is_integral():
            raise VerificationFailed(
                "theta(xi_{i}) = {v} is not integral".format(
                    i=list(elements), v=str(value)))
        count += 1
    logger.debug("All {c} values are integral for n={n}".format(
        c=count, n=n))
    return count


def prime_splitting_check(n: int, configuration: Configuration = None) -> Dict[
        str, str]:
    """
    For every non-empty I in 2..n, with and without xi_1, the value on the
    whole index equals the sum over its prime parts modulo the relations.
    Returns the split case per index.
    """
    module = full_module(n)
    cases = {}
    for elements in subsets(positive_index_set(n), min_size=1):
        index = MultiIndex(n, elements)
        for with_unit in (False, True):
            splitting = split_by_primes(n, index, with_unit)
            difference = gysin_image(n, splitting.index) - \
                splitting.evaluate()
            if not module.contains(difference):
                raise VerificationFailed(
                    "prime splitting of {i} leaves {d} for n={n}".format(
                        i=str(splitting.index), d=str(difference), n=n))
            cases[str(splitting.index)] = splitting.case
    return cases


def torsion_multiple_check(n: int,
                           configuration: Configuration = None) -> List[str]:
    """
    For I in Q_p(n) without 1: p^|I| theta(xi_1 xi_I) is +-n rho_I and
    p^|I| theta(xi_I) vanishes, both modulo the relations.
    """
    module = full_module(n)
    checked = []
    for p in factorize(n).primes:
        for elements in subsets(prime_index_set(n, p)[1:], min_size=1):
            power = p ** len(elements)
            with_unit = gysin_image(
                n, MultiIndex(n, (1,) + elements)).scale(power)
            target = PresElement.monomial(n, 0, elements, binomial(n, 1))
            if not (module.contains(with_unit - target) or
                    module.contains(with_unit + target)):
                raise VerificationFailed(
                    "{q} theta(xi_1 xi_{i}) is not +-{n} rho_{i}".format(
                        q=power, i=list(elements), n=n))
            alone = gysin_image(n, MultiIndex(n, elements)).scale(power)
            if not module.contains(alone):
                raise VerificationFailed(
                    "{q} theta(xi_{i}) does not vanish for n={n}".format(
                        q=power, i=list(elements), n=n))
            checked.append(str(MultiIndex(n, elements)))
    return checked
