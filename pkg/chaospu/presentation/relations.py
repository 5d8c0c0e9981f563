# -*- coding: utf-8 -*-
"""
Relations presenting H*(PU(n)) as a quotient of Z[w] (x) exterior(rho_3, ...,
rho_{2n-1}).

Two relation sets are built. The full set holds the orders b_{n,r} w^r and
the products w theta(xi_I). The primary set holds, for each prime p with
p^r exactly dividing n, the orders p^(r-s) w^(p^s) and one relation
generator R_I for every I in Q_p(n) of size at least two.
"""
from typing import List, NamedTuple, Optional, Tuple

from logzero import logger
from sympy import isprime

from chaospu.arithmetic import binomial_gcd, factorize
from chaospu.exceptions import InternalInconsistency, InvalidInput
from chaospu.graded import DegreeMarker, PresElement
from chaospu.gysin import closed_form_sum, gysin_image
from chaospu.multiindex import MultiIndex, PSequence, index_set, \
    positive_index_set, prime_index_set, subsets

__all__ = ["Relation", "PrimaryComponent", "RingPresentation",
           "omega_order_relations", "primary_relation", "primary_component",
           "present", "minimal_relations", "generators_of"]


class Relation(NamedTuple):
    value: PresElement
    provenance: str
    index: Optional[MultiIndex] = None


class PrimaryComponent(NamedTuple):
    p: int
    r: int
    orders: Tuple[Relation, ...]
    relations: Tuple[Relation, ...]


class RingPresentation(NamedTuple):
    n: int
    generators: Tuple[Tuple[str, int], ...]
    relations: Tuple[Relation, ...]
    primary: Tuple[PrimaryComponent, ...] = ()

    @property
    def values(self) -> List[PresElement]:
        return [r.value for r in self.relations]


def generators_of(n: int) -> Tuple[Tuple[str, int], ...]:
    """
    w in degree 2 and rho_{2k-1} in degree 2k-1, k = 2..n, named by degree.
    """
    return (("w", 2),) + tuple(("r{d}".format(d=2 * k - 1), 2 * k - 1)
                               for k in positive_index_set(n))


def omega_order_relations(p: int, r: int, n: int = None) -> List[Relation]:
    """
    p^(r-s) w^(p^s) for s = 0..r.
    """
    if not isprime(p):
        raise InvalidInput("{p} is not a prime".format(p=p))
    if r < 1:
        raise InvalidInput("r must be positive, got {r}".format(r=r))
    n = n or p ** r
    return [Relation(PresElement.monomial(n, p ** s, (), p ** (r - s)),
                     "order w^{a}".format(a=p ** s))
            for s in range(0, r + 1)]


def primary_relation(n: int, index: PSequence,
                     printed_exponent: bool = False) -> PresElement:
    """
    R_I = sum_J p^(r - i1 - (k-1) - eps(J)) w^(kappa(J) + 1) rho_J over the
    admissible sets J of I. It is w theta(xi_I) divided by a unit prime to p.
    """
    return PresElement.omega(n) * closed_form_sum(n, index, printed_exponent)


def primary_component(n: int, p: int,
                      printed_exponent: bool = False) -> PrimaryComponent:
    r = factorize(n).exponent(p)
    if r == 0:
        raise InvalidInput("{p} does not divide {n}".format(p=p, n=n))
    relations = []
    for elements in subsets(prime_index_set(n, p), min_size=2):
        index = MultiIndex(n, elements)
        value = primary_relation(n, PSequence.from_multiindex(index, p),
                                 printed_exponent)
        relations.append(Relation(value, "I={i}".format(i=str(index)), index))
    return PrimaryComponent(p, r, tuple(omega_order_relations(p, r, n)),
                            tuple(relations))


def present(n: int) -> RingPresentation:
    """
    The full relation set: b_{n,r} w^r for r = 1..n and w theta(xi_I) for
    every I in 1..n with |I| >= 2 and non-zero image, each with a positive
    leading coefficient. The primary form is carried alongside.
    """
    factorize(n)
    relations = [Relation(PresElement.monomial(n, r, (), binomial_gcd(n, r)),
                          "order r={r}".format(r=r))
                 for r in range(1, n + 1)]

    w = PresElement.omega(n)
    for elements in subsets(index_set(n), min_size=2):
        index = MultiIndex(n, elements)
        value = w * gysin_image(n, index)
        if not value:
            continue
        if value.degree() is DegreeMarker.MIXED:
            raise InternalInconsistency(
                "relation for {i} is not homogeneous".format(i=str(index)))
        relations.append(Relation(value.normalized(),
                                  "I={i}".format(i=str(index)), index))

    primary = tuple(primary_component(n, p) for p in factorize(n).primes)
    logger.debug("Presented PU({n}) with {c} relations".format(
        n=n, c=len(relations)))
    return RingPresentation(n, generators_of(n), tuple(relations), primary)


def minimal_relations(presentation: RingPresentation) -> RingPresentation:
    """
    Keep a relation only when it is not already in the ideal of the ones
    kept before it. Candidates go by degree; within a degree the orders
    come first, then the primary generators R_I that lie in the ideal,
    then the products w theta(xi_I). The ideal is unchanged.
    """
    from chaospu.presentation.groups import RelationModule

    n = presentation.n
    full = RelationModule(n, presentation.values, 0, n)
    candidates = []  # type: List[Tuple[int, int, Relation]]
    for position, relation in enumerate(presentation.relations):
        priority = 0 if relation.index is None else 2
        candidates.append((priority, position, relation))
    primary = [r for component in presentation.primary
               for r in component.relations]
    for position, relation in enumerate(primary):
        if relation.value.is_integral() and full.contains(relation.value):
            candidates.append((1, position, relation))

    kept = RelationModule(n, [], 0, n)
    chosen = []  # type: List[Tuple[int, int, Relation]]
    for priority, position, relation in sorted(
            candidates, key=lambda c: (_degree_of(c[2]), c[0], c[1])):
        if kept.contains(relation.value):
            continue
        kept.add(relation.value)
        chosen.append((priority, position, relation))
    chosen.sort(key=lambda c: (c[0], c[1]))
    logger.debug("Kept {k} of {c} relations for n={n}".format(
        k=len(chosen), c=len(candidates), n=n))
    return presentation._replace(
        relations=tuple(relation for _, _, relation in chosen))


def _degree_of(relation: Relation) -> int:
    degree = relation.value.degree()
    if not isinstance(degree, int):
        return 0
    return degree
