# -*- coding: utf-8 -*-
from typing import Any, Dict, List

from chaoslib.types import Configuration
from logzero import logger

from chaospu import get_setting
from chaospu.arithmetic import cstar_multiplier, factorize
from chaospu.exceptions import VerificationFailed
from chaospu.graded import PresElement
from chaospu.gysin import closed_form_unit, gysin_image
from chaospu.multiindex import MultiIndex, PSequence, positive_index_set, \
    prime_index_set, subsets
from chaospu.presentation.groups import euler_consistency, full_module, \
    groups_by_degree, groups_from_primary_form, prime_power_prediction, \
    primary_decomposition, sanity_suite, squarefree_prediction
from chaospu.presentation.relations import primary_relation

__all__ = ["sanity_facts_hold", "primary_form_agrees",
           "relation_generators_match", "torsion_predictions_hold",
           "euler_characteristic_consistent", "unitary_restriction_check",
           "decomposition_shape_holds"]


def _max_degree(max_degree: int,
                configuration: Configuration) -> int:
    value = max_degree if max_degree is not None else get_setting(
        "max_degree", configuration)
    return int(value) if value is not None else None


def sanity_facts_hold(n: int, configuration: Configuration = None) -> Dict[
        str, bool]:
    """
    H^d vanishes above n^2 - 1, the top group and H^3 are Z, H^2 is Z/n,
    the free ranks add up to 2^(n-1) and c_2 is 2 exactly for even n.

    Raises :exc:`chaospu.exceptions.VerificationFailed` when one of them
    fails on the presented groups.
    """
    jobs = int(get_setting("jobs", configuration, 1))
    groups = groups_by_degree(n, n * n + 1, jobs=jobs)
    report = sanity_suite(n, groups)
    failed = sorted(k for k, ok in report.items() if not ok)
    if failed:
        raise VerificationFailed(
            "sanity checks {f} fail for n={n}".format(f=failed, n=n),
            report=report)
    return report


def primary_form_agrees(n: int, max_degree: int = None,
                        configuration: Configuration = None) -> Dict[
                            int, str]:
    """
    The full relation set and the per-prime relation set give the same
    groups in every degree.
    """
    d_max = _max_degree(max_degree, configuration)
    full = groups_by_degree(n, d_max)
    primary = groups_from_primary_form(n, d_max)
    bad = [d for d in full if full[d] != primary[d]]
    if bad:
        raise VerificationFailed(
            "the relation forms disagree for n={n} in degrees {d}".format(
                n=n, d=bad),
            report={d: {"full": str(full[d]), "primary": str(primary[d])}
                    for d in bad})
    return {d: str(g) for d, g in full.items()}


def relation_generators_match(n: int,
                              configuration: Configuration = None) -> List[
                                  str]:
    """
    Every per-prime relation generator R_I times +-u equals w theta(xi_I),
    with u = C(n, p^i1) / p^(r - i1) prime to p.
    """
    checked = []
    w = PresElement.omega(n)
    for p in factorize(n).primes:
        for elements in subsets(prime_index_set(n, p), min_size=2):
            index = MultiIndex(n, elements)
            sequence = PSequence.from_multiindex(index, p)
            expected = w * gysin_image(n, index)
            generator = primary_relation(n, sequence)
            unit = closed_form_unit(n, sequence)
            if expected not in (generator.scale(unit),
                                generator.scale(-unit)):
                raise VerificationFailed(
                    "R_{i} = {r} is not a unit multiple of {e} for "
                    "n={n}".format(i=str(index), r=str(generator),
                                   e=str(expected), n=n))
            checked.append(str(index))
    return checked


def torsion_predictions_hold(n: int, max_degree: int = None,
                             configuration: Configuration = None) -> Dict[
                                 int, List[int]]:
    """
    For squarefree n the p-part is a sum of Z/p counted by monomials; in
    general the p-part of PU(n) is the p-part of PU(p^r) tensored with the
    exterior ring on rho_{2p^r+1}, ..., rho_{2n-1}.
    """
    d_max = _max_degree(max_degree, configuration)
    groups = groups_by_degree(n, d_max)
    factors = factorize(n)
    squarefree = all(r == 1 for _, r in factors.pairs)
    checked = {}  # type: Dict[int, List[int]]
    for p in factors.primes:
        predicted = prime_power_prediction(n, p, d_max)
        for d, group in groups.items():
            actual = group.primary_part(p)
            if actual != predicted[d] or (
                    squarefree and
                    actual != squarefree_prediction(n, p, d)):
                raise VerificationFailed(
                    "the {p}-part of H^{d}(PU({n})) is {g}, not as "
                    "predicted".format(p=p, d=d, n=n, g=str(actual)))
        checked[p] = sorted(groups)
    return checked


def euler_characteristic_consistent(n: int, max_degree: int = None,
                                    configuration: Configuration = None
                                    ) -> Dict[int, bool]:
    d_max = _max_degree(max_degree, configuration)
    report = euler_consistency(n, d_max)
    bad = [d for d, ok in report.items() if not ok]
    if bad:
        raise VerificationFailed(
            "rank counts are inconsistent for n={n} in degrees {d}".format(
                n=n, d=bad), report=report)
    return report


def unitary_restriction_check(n: int,
                              configuration: Configuration = None) -> Dict[
                                  str, Any]:
    """
    rho_J restricts to c_J xi_J on U(n), so c_J theta(xi_J) vanishes in
    H*(PU(n)) for every non-empty J in 2..n. The exterior ring on
    rho_3, ..., rho_{2n-1} has rank 2^(n-1), the rank of H*(SU(n)).
    """
    module = full_module(n)
    checked = 0
    for elements in subsets(positive_index_set(n), min_size=1):
        c = 1
        for k in elements:
            c *= cstar_multiplier(n, k)
        value = gysin_image(n, MultiIndex(n, elements)).scale(c)
        if not module.contains(value):
            raise VerificationFailed(
                "{c} theta(xi_{j}) = {v} is not zero in H*(PU({n}))".format(
                    c=c, j=list(elements), v=str(value), n=n))
        checked += 1
    rank = 2 ** len(positive_index_set(n))
    logger.debug("Checked {c} restrictions for n={n}".format(c=checked, n=n))
    return {"n": n, "checked": checked, "special_unitary_rank": rank}


def decomposition_shape_holds(n: int, max_degree: int = None,
                              configuration: Configuration = None) -> Dict[
                                  str, Any]:
    """
    The free part has Poincare polynomial prod_{i=2..n} (1 + t^(2i-1)) and
    each p-primary part is killed by p^r.
    """
    d_max = _max_degree(max_degree, configuration)
    report = primary_decomposition(n, d_max)
    if not report["match"]:
        raise VerificationFailed(
            "H*(PU({n})) does not decompose as expected".format(n=n),
            report=report)
    return report
