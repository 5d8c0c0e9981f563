# -*- coding: utf-8 -*-
"""
Degree by degree abelian groups of the presented ring.

In each degree d the ambient lattice has the basis w^a rho_J with
2a + deg(rho_J) = d and the relation rows are every monomial multiple
w^b rho_K of every relation that lands in degree d. The group is the
cokernel, read off a Smith normal form.
"""
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from typing import Any, Dict, List, Optional, Sequence, Tuple

from logzero import logger

from chaospu.arithmetic import cstar_multiplier, factorize
from chaospu.exceptions import InternalInconsistency, InvalidInput
from chaospu.graded import DegreeMarker, PresElement, rho_degree
from chaospu.intlinalg import AbelianGroup, IntegerSolver, SparseIntMatrix, \
    cokernel_invariants, smith_normal_form
from chaospu.multiindex import ZERO, positive_index_set, sort_with_sign, \
    subsets
from chaospu.presentation.relations import present, primary_component

__all__ = ["RelationModule", "full_module", "cached_full_module",
           "primary_module",
           "groups_by_degree", "primary_groups_by_degree",
           "groups_from_primary_form", "free_ranks", "primary_decomposition",
           "squarefree_prediction", "prime_power_prediction",
           "euler_consistency", "sanity_suite", "default_max_degree"]

Key = Tuple[int, Tuple[int, ...]]


def default_max_degree(n: int) -> int:
    return n * n + 1


def _check_max_degree(n: int, d_max: Optional[int]) -> int:
    if d_max is None:
        return default_max_degree(n)
    if d_max < 0 or d_max > default_max_degree(n):
        raise InvalidInput(
            "max degree must lie in 0..{m} for n={n}, got {d}".format(
                m=default_max_degree(n), n=n, d=d_max))
    return d_max


class RelationModule:
    """
    The submodule spanned by the monomial multiples of `relations` inside
    the ambient w^a rho_J, a in [omega_low, omega_high), J within
    `rho_indices`. Terms with a >= omega_high are dropped; the caller makes
    sure w^omega_high lies in the ideal.
    """

    def __init__(self, n: int, relations: Sequence[PresElement],
                 omega_low: int, omega_high: int,
                 rho_indices: Sequence[int] = None):
        self.n = n
        self.omega_low = omega_low
        self.omega_high = omega_high
        self.rho_indices = tuple(rho_indices or positive_index_set(n))
        self.relations = []  # type: List[Tuple[int, PresElement]]
        self._rho_by_degree = {}  # type: Dict[int, List[Tuple[int, ...]]]
        for rho in subsets(self.rho_indices):
            self._rho_by_degree.setdefault(rho_degree(rho), []).append(rho)
        self._ambient = {}  # type: Dict[int, List[Key]]
        self._matrices = {}  # type: Dict[int, SparseIntMatrix]
        self._solvers = {}  # type: Dict[int, IntegerSolver]
        for value in relations:
            self.add(value)

    def add(self, value: PresElement):
        """
        Append a homogeneous relation and forget the matrices it changes.
        """
        degree = value.degree()
        if degree is DegreeMarker.MIXED:
            raise InternalInconsistency(
                "relation {v} is not homogeneous".format(v=str(value)))
        if degree is DegreeMarker.BOTTOM:
            return
        self.relations.append((degree, value))
        for cache in (self._matrices, self._solvers):
            for d in [d for d in cache if d >= degree]:
                del cache[d]

    def ambient(self, d: int) -> List[Key]:
        if d not in self._ambient:
            basis = []
            for rho_deg, rhos in self._rho_by_degree.items():
                rest = d - rho_deg
                if rest < 0 or rest % 2:
                    continue
                a = rest // 2
                if self.omega_low <= a < self.omega_high:
                    basis.extend((a, rho) for rho in rhos)
            self._ambient[d] = sorted(basis)
        return self._ambient[d]

    def multipliers(self, degree: int) -> List[Key]:
        """
        The monomials w^b rho_K of the given degree, b >= 0.
        """
        found = []
        for rho_deg, rhos in self._rho_by_degree.items():
            rest = degree - rho_deg
            if rest < 0 or rest % 2 or rest // 2 >= self.omega_high:
                continue
            found.extend((rest // 2, rho) for rho in rhos)
        return sorted(found)

    def rows(self, d: int) -> List[Dict[int, int]]:
        position = {key: i for i, key in enumerate(self.ambient(d))}
        seen = set()
        rows = []
        for degree, value in self.relations:
            if degree > d:
                continue
            terms = value.items()
            for b, extra in self.multipliers(d - degree):
                row = {}  # type: Dict[int, int]
                for (a, rho), c in terms:
                    if a + b >= self.omega_high:
                        continue
                    product = sort_with_sign(rho + extra)
                    if product is ZERO:
                        continue
                    key, sign = product
                    i = position.get((a + b, key))
                    if i is None:
                        continue
                    row[i] = row.get(i, 0) + sign * int(c)
                row = {i: v for i, v in row.items() if v}
                if not row:
                    continue
                lead = row[min(row)]
                if lead < 0:
                    row = {i: -v for i, v in row.items()}
                frozen = tuple(sorted(row.items()))
                if frozen not in seen:
                    seen.add(frozen)
                    rows.append(row)
        return rows

    def matrix(self, d: int) -> SparseIntMatrix:
        """
        Relation rows against the ambient basis of degree d.
        """
        if d not in self._matrices:
            self._matrices[d] = SparseIntMatrix.from_rows(
                len(self.ambient(d)), self.rows(d))
        return self._matrices[d]

    def group(self, d: int) -> AbelianGroup:
        group = cokernel_invariants(self.matrix(d))
        logger.debug("Degree {d}: {a} generators, {r} relations -> {g}".format(
            d=d, a=len(self.ambient(d)), r=self.matrix(d).rows, g=str(group)))
        return group

    def rank(self, d: int) -> int:
        return smith_normal_form(self.matrix(d)).rank

    def coordinates(self, element: PresElement) -> Tuple[int, List[int]]:
        """
        Degree and ambient coordinates of a homogeneous integral element,
        after dropping terms outside the ambient.
        """
        d = element.degree()
        if d is DegreeMarker.BOTTOM:
            return 0, []
        if d is DegreeMarker.MIXED:
            raise InvalidInput("element {e} is not homogeneous".format(
                e=str(element)))
        position = {key: i for i, key in enumerate(self.ambient(d))}
        vector = [0] * len(position)
        for key, c in element.items():
            if c.denominator != 1:
                raise InvalidInput("element {e} is not integral".format(
                    e=str(element)))
            i = position.get(key)
            if i is not None:
                vector[i] += int(c)
            elif self.omega_low <= key[0] < self.omega_high:
                raise InvalidInput(
                    "term {k} of {e} leaves the ambient".format(
                        k=key, e=str(element)))
        return d, vector

    def contains(self, element: PresElement) -> bool:
        """
        Membership of a homogeneous element in the relation module.
        """
        d, vector = self.coordinates(element)
        if not any(vector):
            return True
        if not self.matrix(d).rows:
            return False
        if d not in self._solvers:
            self._solvers[d] = IntegerSolver(self.matrix(d).transpose())
        return self._solvers[d].solve(vector) is not None


def full_module(n: int, relations: Sequence[PresElement] = None
                ) -> RelationModule:
    """
    The full relation set over the ambient with w-powers below n; b_{n,n} = 1
    makes w^n a relation.
    """
    if relations is None:
        relations = present(n).values
    return RelationModule(n, relations, 0, n)


def primary_module(n: int, p: int) -> RelationModule:
    """
    The p-primary relations over w^a rho_J with 1 <= a < p^r; w^(p^r) is a
    relation.
    """
    component = primary_component(n, p)
    values = [r.value for r in component.orders + component.relations]
    return RelationModule(n, values, 1, p ** component.r)


@lru_cache(maxsize=32)
def cached_full_module(n: int) -> RelationModule:
    return full_module(n)


def _degree_group(job: Tuple[int, int]) -> Tuple[int, AbelianGroup]:
    n, d = job
    return d, cached_full_module(n).group(d)


def groups_by_degree(n: int, d_max: int = None,
                     relations: Sequence[PresElement] = None,
                     jobs: int = 1) -> Dict[int, AbelianGroup]:
    """
    H^d of the presented ring for d = 0..d_max (default n^2 + 1).
    """
    factorize(n)
    d_max = _check_max_degree(n, d_max)
    if relations is not None:
        module = full_module(n, relations)
        return {d: module.group(d) for d in range(0, d_max + 1)}

    degrees = list(range(0, d_max + 1))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            results = list(executor.map(_degree_group,
                                        [(n, d) for d in degrees]))
    else:
        results = [_degree_group((n, d)) for d in degrees]
    return dict(sorted(results))


def primary_groups_by_degree(n: int, p: int,
                             d_max: int = None) -> Dict[int, AbelianGroup]:
    """
    The p-primary part per degree, from the primary relations alone.
    """
    d_max = _check_max_degree(n, d_max)
    module = primary_module(n, p)
    return {d: module.group(d) for d in range(0, d_max + 1)}


def free_ranks(n: int, d_max: int = None) -> Dict[int, int]:
    """
    Ranks of exterior(rho_3, ..., rho_{2n-1}) per degree.
    """
    d_max = _check_max_degree(n, d_max)
    ranks = {d: 0 for d in range(0, d_max + 1)}
    for rho in subsets(positive_index_set(n)):
        d = rho_degree(rho)
        if d <= d_max:
            ranks[d] += 1
    return ranks


def groups_from_primary_form(n: int, d_max: int = None) -> Dict[
        int, AbelianGroup]:
    """
    The free exterior part plus the p-primary parts for every p dividing n.
    """
    d_max = _check_max_degree(n, d_max)
    groups = {d: AbelianGroup(r) for d, r in free_ranks(n, d_max).items()}
    for p in factorize(n).primes:
        for d, group in primary_groups_by_degree(n, p, d_max).items():
            groups[d] = groups[d] + group
    return groups


def _poincare(indices: Sequence[int]) -> Dict[int, int]:
    series = {0: 1}
    for k in indices:
        step = dict(series)
        for d, c in series.items():
            step[d + 2 * k - 1] = step.get(d + 2 * k - 1, 0) + c
        series = step
    return series


def primary_decomposition(n: int, d_max: int = None,
                          groups: Dict[int, AbelianGroup] = None) -> Dict[
                              str, Any]:
    """
    Split each group into its free rank and its p-primary parts and compare
    with the expected shape: the free part has Poincare polynomial
    prod_{i=2..n} (1 + t^(2i-1)) and each p-part is killed by p^r.
    """
    d_max = _check_max_degree(n, d_max)
    if groups is None:
        groups = groups_by_degree(n, d_max)
    expected = _poincare(positive_index_set(n))
    free = {d: g.free_rank for d, g in groups.items()}
    poincare_match = all(free.get(d, 0) == expected.get(d, 0)
                         for d in range(0, d_max + 1))

    primary = {}
    annihilated = {}
    for p, r in factorize(n).pairs:
        parts = {d: list(g.elementary_divisors(p)) for d, g in groups.items()
                 if g.elementary_divisors(p)}
        primary[p] = parts
        annihilated[p] = all(q <= p ** r for qs in parts.values() for q in qs)

    other = [d for d, g in groups.items()
             if g.order_of_torsion != _product(
                 q for p in primary for q in primary[p].get(d, []))]
    return {"n": n, "free": free, "primary": primary,
            "poincare_match": poincare_match, "annihilated": annihilated,
            "match": poincare_match and all(annihilated.values()) and
            not other}


def _product(values) -> int:
    total = 1
    for v in values:
        total *= v
    return total


def squarefree_prediction(n: int, p: int, d: int) -> AbelianGroup:
    """
    For squarefree n the p-part in degree d is (Z/p)^c with c the number of
    w^a rho_K, 1 <= a <= p-1, K in 2..n without p, of degree d.
    """
    if any(r > 1 for _, r in factorize(n).pairs):
        raise InvalidInput("{n} is not squarefree".format(n=n))
    if n % p:
        raise InvalidInput("{p} does not divide {n}".format(p=p, n=n))
    indices = [k for k in positive_index_set(n) if k != p]
    count = 0
    for rho in subsets(indices):
        rest = d - rho_degree(rho)
        if rest >= 2 and rest % 2 == 0 and rest // 2 <= p - 1:
            count += 1
    return AbelianGroup(0, (p,) * count)


def prime_power_prediction(n: int, p: int, d_max: int = None) -> Dict[
        int, AbelianGroup]:
    """
    The p-part of PU(n), n = p^r n', predicted as the p-part of PU(p^r)
    tensored with exterior(rho_{2p^r+1}, ..., rho_{2n-1}).
    """
    d_max = _check_max_degree(n, d_max)
    r = factorize(n).exponent(p)
    if r == 0:
        raise InvalidInput("{p} does not divide {n}".format(p=p, n=n))
    m = p ** r
    small = {d: g.primary_part(p)
             for d, g in groups_by_degree(m, default_max_degree(m)).items()}
    extra = _poincare(range(m + 1, n + 1))
    predicted = {d: AbelianGroup(0) for d in range(0, d_max + 1)}
    for d1, group in small.items():
        if group.is_trivial():
            continue
        for d2, count in extra.items():
            d = d1 + d2
            if d <= d_max:
                predicted[d] = predicted[d] + AbelianGroup(
                    0, group.torsion * count)
    return predicted


def euler_consistency(n: int, d_max: int = None) -> Dict[int, bool]:
    """
    Per degree, ambient rank minus relation rank is the free rank, for the
    full relation set and, summed over primes, for the primary form.
    """
    d_max = _check_max_degree(n, d_max)
    full = full_module(n)
    primaries = [primary_module(n, p) for p in factorize(n).primes]
    free = free_ranks(n, d_max)
    report = {}
    for d in range(0, d_max + 1):
        full_ok = len(full.ambient(d)) - full.rank(d) == free[d]
        primary_ok = all(len(m.ambient(d)) == m.rank(d) for m in primaries)
        report[d] = full_ok and primary_ok
    return report


def _ambient_top(n: int) -> int:
    return 2 * (n - 1) + rho_degree(positive_index_set(n))


def sanity_suite(n: int, groups: Dict[int, AbelianGroup] = None) -> Dict[
        str, bool]:
    """
    Facts every H*(PU(n)) satisfies, checked on the presented groups.
    Vanishing is checked in every degree from n^2 up to the top of the
    ambient w^a rho_J, a < n; degrees missing from `groups` come from the
    cached full module.
    """
    top = n * n - 1
    if groups is None:
        groups = groups_by_degree(n, top + 2)
    zero, z = AbelianGroup(0), AbelianGroup(1)
    above = [groups[d] if d in groups else cached_full_module(n).group(d)
             for d in range(top + 1, _ambient_top(n) + 1)]
    report = {
        "vanishes_above_top": all(group == zero for group in above),
        "top_degree_is_Z": groups[top] == z,
        "degree_3_is_Z": groups[3] == z,
        "degree_2_is_Z_n": groups[2] == AbelianGroup(0, (n,)),
        "total_free_rank": sum(g.free_rank for g in groups.values()) ==
        2 ** (n - 1),
        "c2_parity": (cstar_multiplier(n, 2) == 2) == (n % 2 == 0),
    }
    logger.debug("Sanity suite for n={n}: {r}".format(n=n, r=report))
    return report
