# -*- coding: utf-8 -*-
import math
import random
from typing import Any, Dict, List, Tuple

from chaoslib.types import Configuration
from logzero import logger

from chaospu.arithmetic import binomial, binomial_gcd, cstar_multiplier
from chaospu.exceptions import VerificationFailed
from chaospu.koszul.chains import E2Element, chain_basis, cstar_chain, d2, \
    elementary_cocycle, from_coordinates, product_cocycle, \
    reduced_cocycle, rho_cocycle, split_t0, x1_chain
from chaospu.koszul.coinvariants import coinvariant_ring, elementary
from chaospu.koszul.pages import check_oracle_bound, compare_groups, \
    e3_page, koszul_complex, oracle_theta_sign, total_degree_groups, \
    verify_gysin
from chaospu.multiindex import MultiIndex, index_set, subsets

__all__ = ["coinvariant_rank_check", "differential_squares_to_zero",
           "cocycle_check", "restriction_coboundary_check",
           "unitary_page_check", "omega_order_check", "top_class_check",
           "product_rule_check", "gysin_oracle_check", "oracle_groups_agree"]


def coinvariant_rank_check(n: int,
                           configuration: Configuration = None) -> bool:
    """
    The coinvariant ring has n! standard monomials and every e_r reduces to
    zero.

    Raises :exc:`chaospu.exceptions.VerificationFailed` otherwise.
    """
    ring = coinvariant_ring(n)
    if ring.rank() != math.factorial(n):
        raise VerificationFailed(
            "found {r} standard monomials for n={n}".format(
                r=ring.rank(), n=n))
    for r in range(1, n + 1):
        if ring.reduce(elementary(n, r)):
            raise VerificationFailed(
                "e_{r} does not vanish for n={n}".format(r=r, n=n))
    return True


def differential_squares_to_zero(n: int, unitary: bool = False,
                                 configuration: Configuration = None) -> bool:
    """
    d2 composed with itself vanishes on every bidegree.
    """
    check_oracle_bound(n, None, configuration)
    complex_ = koszul_complex(n, unitary)
    for p, q in complex_.bidegrees():
        if q < 2:
            continue
        square = complex_.matrix(p + 2, q - 1) @ complex_.matrix(p, q)
        if square.nnz:
            raise VerificationFailed(
                "d2 o d2 is not zero on E2^({p},{q})".format(p=p, q=q),
                report=square.dump())
    return True


def cocycle_check(n: int, configuration: Configuration = None) -> Dict[
        str, List[int]]:
    """
    The lifts of e_r are cocycles, their t_0-free parts have d2 equal to
    -C(n,r) x_1^r, and the rho cocycles are closed.
    """
    check_oracle_bound(n, None, configuration)
    ring = coinvariant_ring(n)
    checked = {"elementary": [], "reduced": [], "rho": []}
    for r in range(1, n + 1):
        if d2(elementary_cocycle(n, r)):
            raise VerificationFailed(
                "the lift of e_{r} is not closed for n={n}".format(r=r, n=n))
        checked["elementary"].append(r)

        expected = x1_chain(ring, r).scale(-binomial(n, r))
        if d2(reduced_cocycle(n, r)) != expected:
            raise VerificationFailed(
                "d2 of the reduced lift of e_{r} is off for n={n}".format(
                    r=r, n=n))
        checked["reduced"].append(r)

        if r >= 2:
            # closure is asserted on construction
            rho_cocycle(n, r)
            checked["rho"].append(r)
    return checked


def restriction_coboundary_check(n: int, k: int = None,
                                 configuration: Configuration = None) -> List[
                                     int]:
    """
    The rho cocycle of k, seen on the U(n) page, is c_k times the lift of e_k
    up to a boundary.
    """
    check_oracle_bound(n, None, configuration)
    complex_ = koszul_complex(n, True)
    ks = [k] if k is not None else list(range(2, n + 1))
    for i in ks:
        difference = cstar_chain(rho_cocycle(n, i)) - \
            elementary_cocycle(n, i).scale(cstar_multiplier(n, i))
        if not complex_.is_coboundary(difference):
            raise VerificationFailed(
                "restriction of the rho cocycle for k={k}, n={n} is not "
                "c_k times the lift of e_k".format(k=i, n=n))
    return ks


def unitary_page_check(n: int, configuration: Configuration = None) -> Dict[
        int, int]:
    """
    E3 of U(n) is free with Poincare polynomial prod (1 + t^(2i-1)).
    """
    totals = total_degree_groups(e3_page(n, True, configuration=configuration))
    expected = {0: 1}
    for i in range(1, n + 1):
        step = dict(expected)
        for d, c in expected.items():
            step[d + 2 * i - 1] = step.get(d + 2 * i - 1, 0) + c
        expected = step

    ranks = {}
    for d, group in sorted(totals.items()):
        if group.torsion:
            raise VerificationFailed(
                "E3 of U({n}) has torsion in degree {d}".format(n=n, d=d))
        if group.free_rank != expected.get(d, 0):
            raise VerificationFailed(
                "E3 of U({n}) has rank {r} in degree {d}, expected "
                "{e}".format(n=n, r=group.free_rank, d=d,
                             e=expected.get(d, 0)))
        if group.free_rank:
            ranks[d] = group.free_rank
    if sum(ranks.values()) != 2 ** n:
        raise VerificationFailed("E3 of U({n}) has total rank {r}".format(
            n=n, r=sum(ranks.values())))
    return ranks


def omega_order_check(n: int, configuration: Configuration = None) -> Dict[
        int, int]:
    """
    E3^{2r,0} of PU(n) is cyclic of order b_{n,r}.
    """
    check_oracle_bound(n, None, configuration)
    complex_ = koszul_complex(n, False)
    orders = {}
    for r in range(1, n + 1):
        group = complex_.group(2 * r, 0)
        b = binomial_gcd(n, r)
        expected = (b,) if b > 1 else ()
        if group.free_rank or group.torsion != expected:
            raise VerificationFailed(
                "E3^({p},0) of PU({n}) is {g}, expected Z/{b}".format(
                    p=2 * r, n=n, g=str(group), b=b))
        orders[r] = b
    return orders


def top_class_check(n: int, configuration: Configuration = None) -> int:
    """
    The product of the rho cocycles of 2..n generates the top bidegree
    E3^{n(n-1), n-1} of PU(n), a copy of Z. Returns its coefficient, +1 or
    -1.
    """
    check_oracle_bound(n, None, configuration)
    complex_ = koszul_complex(n, False)
    p, q = n * (n - 1), n - 1
    group = complex_.group(p, q)
    if group.free_rank != 1 or group.torsion:
        raise VerificationFailed(
            "the top bidegree of PU({n}) is {g}".format(n=n, g=str(group)))

    basis = complex_.basis(p, q)
    product = product_cocycle(n, range(2, n + 1))
    coefficient = product.coefficient(basis[0]) if len(basis) == 1 else None
    if coefficient not in (1, -1):
        raise VerificationFailed(
            "the product of the rho cocycles is {c} times the top "
            "class".format(c=coefficient))
    return coefficient


def _random_chain(ring, unitary: bool, p: int, q: int,
                  rng: random.Random) -> E2Element:
    basis = chain_basis(ring, unitary, p, q)
    values = [rng.randint(-3, 3) for _ in basis]
    if basis and not any(values):
        values[rng.randrange(len(basis))] = 1
    return from_coordinates(ring, unitary, basis, values)


def product_rule_check(n: int, seed: int = 0, trials: int = 10,
                       configuration: Configuration = None) -> int:
    """
    For x = a + theta(x) t_0 and x' = a' + theta(x') t_0 on the U(n) page,
    theta(x x') = a theta(x') + (-1)^deg(x') theta(x) a', on seeded random
    pairs. Returns the number of pairs checked, which is every trial since
    the random chains are never zero.
    """
    check_oracle_bound(n, None, configuration)
    rng = random.Random(seed)
    ring = coinvariant_ring(n)
    checked = 0
    for _ in range(trials):
        bidegrees = [(2 * rng.randint(0, ring.top_degree), rng.randint(0, n))
                     for _ in range(2)]
        x, y = (_random_chain(ring, True, p, q, rng) for p, q in bidegrees)
        if not x or not y:
            continue
        a, theta_x = split_t0(x)
        b, theta_y = split_t0(y)
        sign = -1 if bidegrees[1][1] % 2 else 1
        expected = a * theta_y + (theta_x * b).scale(sign)
        if split_t0(x * y)[1] != expected:
            raise VerificationFailed(
                "product rule fails for n={n} on bidegrees {b}".format(
                    n=n, b=bidegrees))
        checked += 1
    logger.debug("Checked the product rule on {c} pairs".format(c=checked))
    return checked


def gysin_oracle_check(n: int, configuration: Configuration = None) -> List[
        Dict[str, Any]]:
    """
    The recursive values of the connecting map agree with the chain-level
    evaluation up to a boundary, for every non-empty I in 1..n. The
    solved class in the presented ring must also agree up to sign modulo
    the relations.
    """
    reports = []
    for elements in subsets(index_set(n), min_size=1):
        index = MultiIndex(n, elements)
        report = verify_gysin(n, index, configuration)
        report["class_sign"] = oracle_theta_sign(n, index, configuration)
        reports.append(report)
        if not report["match"] or report["class_sign"] is None:
            raise VerificationFailed(
                "the connecting map disagrees with the oracle on {i}".format(
                    i=report["index"]), report=reports)
    return reports


def oracle_groups_agree(n: int, jobs: int = 1, window: Tuple[int, int] = None,
                        configuration: Configuration = None) -> Dict[
                            int, Dict[str, Any]]:
    """
    The presented groups equal the total-degree sums of E3 of PU(n).
    """
    report = compare_groups(n, jobs=jobs, window=window,
                            configuration=configuration)
    bad = [d for d, row in report.items() if not row["match"]]
    if bad:
        raise VerificationFailed(
            "groups disagree with the oracle in degrees {d}".format(d=bad),
            report=report)
    return report
