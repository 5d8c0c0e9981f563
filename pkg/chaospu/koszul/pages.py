# -*- coding: utf-8 -*-
"""
E3 pages of the Koszul complexes of U(n) and PU(n), and the chain-level
evaluation of the connecting map used to check the closed formulas.
"""
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from typing import Any, Dict, List, NamedTuple, Optional, Tuple

from chaoslib.types import Configuration
from logzero import logger

from chaospu import get_setting
from chaospu.exceptions import InvalidInput, ResourceLimitExceeded, \
    VerificationFailed
from chaospu.graded import PresElement
from chaospu.gysin import gysin_image
from chaospu.intlinalg import AbelianGroup, IntegerSolver, SparseIntMatrix, \
    cokernel_generators, kernel_basis, smith_normal_form
from chaospu.koszul.chains import Chain, E2Element, chain_basis, \
    coordinates, d2, differential_matrix, from_coordinates, \
    product_cocycle, substitute, theta_chain, x1_chain
from chaospu.koszul.coinvariants import coinvariant_ring
from chaospu.multiindex import MultiIndex, positive_index_set, subsets

__all__ = ["KoszulComplex", "BidegreeHomology", "koszul_complex",
           "check_oracle_bound", "e3_page", "total_degree_groups",
           "oracle_theta", "oracle_theta_sign",
           "verify_gysin", "compare_groups"]

DEFAULT_ORACLE_MAX_N = 6
WINDOWED_MAX_N = 8


class BidegreeHomology(NamedTuple):
    p: int
    q: int
    group: AbelianGroup
    generators: Tuple[Tuple[int, E2Element], ...] = ()


class KoszulComplex:
    """
    The E2 page of U(n) (`unitary=True`) or PU(n) with its differential,
    cached per bidegree.
    """

    def __init__(self, n: int, unitary: bool):
        self.n = n
        self.unitary = unitary
        self.ring = coinvariant_ring(n)
        self._bases = {}  # type: Dict[Tuple[int, int], List[Chain]]
        self._matrices = {}  # type: Dict[Tuple[int, int], SparseIntMatrix]

    @property
    def max_q(self) -> int:
        return self.n if self.unitary else self.n - 1

    @property
    def max_p(self) -> int:
        return 2 * self.ring.top_degree

    def bidegrees(self, window: Tuple[int, int] = None) -> List[
            Tuple[int, int]]:
        low, high = window if window else (0, self.max_p + self.max_q)
        return [(p, q) for p in range(0, self.max_p + 1, 2)
                for q in range(0, self.max_q + 1) if low <= p + q <= high]

    def basis(self, p: int, q: int) -> List[Chain]:
        if (p, q) not in self._bases:
            self._bases[(p, q)] = chain_basis(self.ring, self.unitary, p, q)
        return self._bases[(p, q)]

    def matrix(self, p: int, q: int) -> SparseIntMatrix:
        """
        d2 leaving E2^{p,q}.
        """
        if (p, q) not in self._matrices:
            self._matrices[(p, q)] = differential_matrix(
                self.ring, self.unitary, p, q)
        return self._matrices[(p, q)]

    def incoming(self, p: int, q: int) -> SparseIntMatrix:
        if p < 2:
            return SparseIntMatrix(len(self.basis(p, q)), 0)
        return self.matrix(p - 2, q + 1)

    def group(self, p: int, q: int) -> AbelianGroup:
        """
        E3^{p,q}: with a saturated kernel, the invariant factors of the
        incoming image are those of the incoming matrix.
        """
        dimension = len(self.basis(p, q))
        outgoing = smith_normal_form(self.matrix(p, q)).rank
        incoming = smith_normal_form(self.incoming(p, q))
        free = dimension - outgoing - incoming.rank
        logger.debug("E3^({p},{q}) for n={n}: dim {d}, ranks {o}/{i}".format(
            p=p, q=q, n=self.n, d=dimension, o=outgoing, i=incoming.rank))
        return AbelianGroup(free, tuple(d for d in incoming.factors if d > 1))

    def homology(self, p: int, q: int) -> BidegreeHomology:
        """
        E3^{p,q} with a cocycle representative for each cyclic summand.
        """
        kernel = kernel_basis(self.matrix(p, q))
        dimension = len(self.basis(p, q))
        if not kernel:
            return BidegreeHomology(p, q, AbelianGroup(0))

        frame = SparseIntMatrix(dimension, len(kernel), {
            (i, u): v for u, vector in enumerate(kernel)
            for i, v in enumerate(vector) if v})
        solver = IntegerSolver(frame)
        incoming = self.incoming(p, q)
        relations = []
        for j in range(incoming.cols):
            column = incoming.column(j)
            if not column:
                continue
            coords = solver.solve([column.get(i, 0) for i in range(dimension)])
            if coords is None:
                raise VerificationFailed(
                    "a boundary in E2^({p},{q}) leaves the cocycles".format(
                        p=p, q=q))
            relations.append({u: v for u, v in enumerate(coords) if v})

        quotient = SparseIntMatrix.from_rows(len(kernel), relations)
        generators = []
        orders = []
        free = 0
        for order, coords in cokernel_generators(quotient):
            vector = [sum(c * kernel[u][i] for u, c in enumerate(coords))
                      for i in range(dimension)]
            generators.append((order, from_coordinates(
                self.ring, self.unitary, self.basis(p, q), vector)))
            if order:
                orders.append(order)
            else:
                free += 1
        return BidegreeHomology(p, q, AbelianGroup.from_orders(free, orders),
                                tuple(generators))

    def bounding_chain(self, z: E2Element) -> Optional[E2Element]:
        """
        A chain w with d2(w) = z, or `None` when z is not a boundary.
        """
        if not z:
            return E2Element(self.ring, self.unitary)
        p, q = z.bidegree()
        incoming = self.incoming(p, q)
        solution = IntegerSolver(incoming).solve(
            coordinates(z, self.basis(p, q)))
        if solution is None:
            return None
        return from_coordinates(self.ring, self.unitary,
                                self.basis(p - 2, q + 1), solution)

    def is_coboundary(self, z: E2Element) -> bool:
        return self.bounding_chain(z) is not None


@lru_cache(maxsize=None)
def koszul_complex(n: int, unitary: bool) -> KoszulComplex:
    return KoszulComplex(n, unitary)


def check_oracle_bound(n: int, window: Tuple[int, int] = None,
                       configuration: Configuration = None):
    """
    Refuse oracle runs beyond the configured `oracle_max_n`; degree windows
    stretch the bound up to n = 8.
    """
    if n < 2:
        raise InvalidInput("n must be at least 2, got {n}".format(n=n))
    bound = int(get_setting("oracle_max_n", configuration,
                            DEFAULT_ORACLE_MAX_N))
    if window is not None:
        bound = max(bound, WINDOWED_MAX_N)
    if n > bound:
        raise ResourceLimitExceeded(
            "the Koszul oracle is limited to n <= {b}, got {n}".format(
                b=bound, n=n))


def _bidegree_group(job: Tuple[int, bool, int, int]) -> Tuple[
        int, int, AbelianGroup]:
    n, unitary, p, q = job
    return p, q, koszul_complex(n, unitary).group(p, q)


def e3_page(n: int, unitary: bool = False, window: Tuple[int, int] = None,
            representatives: bool = False, jobs: int = 1,
            configuration: Configuration = None) -> Dict[
                Tuple[int, int], BidegreeHomology]:
    """
    E3^{p,q} for every bidegree whose total degree lies in `window` (all of
    them by default). Bidegrees are independent; with `jobs > 1` and no
    representatives they are computed in worker processes.
    """
    check_oracle_bound(n, window, configuration)
    complex_ = koszul_complex(n, unitary)
    bidegrees = complex_.bidegrees(window)
    logger.debug("Computing {c} bidegrees of the {k} page for n={n}".format(
        c=len(bidegrees), k="U" if unitary else "PU", n=n))

    if representatives:
        return {(p, q): complex_.homology(p, q) for p, q in bidegrees}

    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            results = list(executor.map(
                _bidegree_group, [(n, unitary, p, q) for p, q in bidegrees]))
    else:
        results = [_bidegree_group((n, unitary, p, q)) for p, q in bidegrees]
    return {(p, q): BidegreeHomology(p, q, group)
            for p, q, group in sorted(results)}


def total_degree_groups(page: Dict[Tuple[int, int], BidegreeHomology]) -> Dict[
        int, AbelianGroup]:
    totals = {}  # type: Dict[int, AbelianGroup]
    for (p, q), homology in sorted(page.items()):
        d = p + q
        totals[d] = totals.get(d, AbelianGroup(0)) + homology.group
    return totals


def _frame(n: int, p: int, q: int) -> List[Tuple[int, Tuple[int, ...]]]:
    """
    The monomials w^a rho_J sitting in bidegree (p, q): |J| = q and
    2a + 2 sum(j - 1) = p.
    """
    found = []
    for rho in subsets(positive_index_set(n)):
        if len(rho) != q:
            continue
        rest = p - 2 * sum(j - 1 for j in rho)
        if rest >= 0 and rest % 2 == 0:
            found.append((rest // 2, rho))
    return sorted(found)


def oracle_theta(n: int, index: MultiIndex,
                 configuration: Configuration = None) -> PresElement:
    """
    Evaluate the connecting map on xi_I at chain level: take the t_0 part of
    the product of the lifts of e_i, check it is a cocycle and write its
    class in terms of the classes x_1^a times the rho cocycles.

    The coefficients come from an integer solve and are only defined modulo
    the relations; compare values with `oracle_theta_sign`.
    """
    check_oracle_bound(n, None, configuration)
    if index.n != n or not index.elements:
        raise InvalidInput("need a non-empty multi-index for n={n}".format(
            n=n))

    theta = theta_chain(product_cocycle(n, index.elements, unitary=True))
    if not theta:
        return PresElement(n)
    if d2(theta):
        raise VerificationFailed(
            "the t_0 part for {i} is not a cocycle".format(i=str(index)))

    p, q = theta.bidegree()
    complex_ = koszul_complex(n, False)
    basis = complex_.basis(p, q)
    frame = _frame(n, p, q)
    columns = {}  # type: Dict[Tuple[int, int], int]
    for j, (a, rho) in enumerate(frame):
        chain = x1_chain(complex_.ring, a) * product_cocycle(n, rho)
        for i, v in enumerate(coordinates(chain, basis)):
            if v:
                columns[(i, j)] = v
    incoming = complex_.incoming(p, q)
    for (i, j), v in incoming.items():
        columns[(i, len(frame) + j)] = v

    system = SparseIntMatrix(len(basis), len(frame) + incoming.cols, columns)
    solution = IntegerSolver(system).solve(coordinates(theta, basis))
    if solution is None:
        raise VerificationFailed(
            "the class of the t_0 part for {i} is not spanned by "
            "w^a rho_J".format(i=str(index)))

    value = PresElement(n)
    for (a, rho), c in zip(frame, solution):
        if c:
            value = value + PresElement.monomial(n, a, rho, c)
    return value


def oracle_theta_sign(n: int, index: MultiIndex,
                      configuration: Configuration = None) -> Optional[int]:
    """
    The sign s for which the chain-level value on xi_I minus s times the
    recursive value lies in the relation ideal, or None when neither does.
    """
    from chaospu.presentation.groups import cached_full_module

    value = oracle_theta(n, index, configuration)
    expected = gysin_image(n, index)
    module = cached_full_module(n)
    for sign in (1, -1):
        if module.contains(value - expected.scale(sign)):
            return sign
    logger.debug("Chain-level value {v} misses {e} for {i}".format(
        v=str(value), e=str(expected), i=str(index)))
    return None


def verify_gysin(n: int, index: MultiIndex,
                 configuration: Configuration = None) -> Dict[str, Any]:
    """
    Check that the chain-level value for xi_I and the substituted closed
    value differ by a boundary. Reports which sign matched; +1 is expected.
    """
    check_oracle_bound(n, None, configuration)
    theta = theta_chain(product_cocycle(n, index.elements, unitary=True))
    predicted = substitute(gysin_image(n, index))
    complex_ = koszul_complex(n, False)
    report = {"n": n, "index": str(index), "sign": None, "match": False,
              "residue": None}  # type: Dict[str, Any]
    if predicted is None:
        report["residue"] = "non-integral prediction"
        return report

    for sign in (1, -1):
        difference = theta - predicted.scale(sign)
        if not difference or (len(difference.bidegrees()) == 1 and
                              complex_.is_coboundary(difference)):
            report["sign"] = sign
            report["match"] = True
            return report

    difference = theta - predicted
    if len(difference.bidegrees()) == 1:
        p, q = difference.bidegree()
        basis = complex_.basis(p, q)
        residue = SparseIntMatrix(len(basis), 1, {
            (i, 0): v for i, v in enumerate(coordinates(difference, basis))})
        report["residue"] = residue.dump()
    else:
        report["residue"] = str(difference)
    logger.debug("No sign matches for {i}, n={n}".format(i=str(index), n=n))
    return report


def compare_groups(n: int, jobs: int = 1, window: Tuple[int, int] = None,
                   configuration: Configuration = None) -> Dict[
                       int, Dict[str, Any]]:
    """
    Per total degree: the presented groups against the E3 page of PU(n),
    over the whole range or the degrees in `window`.
    """
    from chaospu.presentation.groups import groups_by_degree

    check_oracle_bound(n, window, configuration)
    top = n * n - 1
    low, high = window if window else (0, top)
    high = min(high, top)
    expected = groups_by_degree(n, high, jobs=jobs)
    computed = total_degree_groups(
        e3_page(n, False, window=window, jobs=jobs,
                configuration=configuration))
    report = {}
    for d in range(low, high + 1):
        e = expected.get(d, AbelianGroup(0))
        c = computed.get(d, AbelianGroup(0))
        report[d] = {"expected": str(e), "computed": str(c),
                     "match": e == c}
    return report
