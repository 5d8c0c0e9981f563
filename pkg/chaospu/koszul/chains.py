# -*- coding: utf-8 -*-
"""
Chains on the E2 pages of the Serre spectral sequences of T -> U(n) -> U(n)/T
and T/S^1 -> PU(n) -> PU(n)/T.

An `E2Element` is an integer combination of m (x) t_S where m is a standard
monomial of the coinvariant ring and S a sorted subset of the exterior
generators t_0, ..., t_(n-1). The PU(n) page is the subcomplex without t_0.
The differential is the derivation with d2(t_0) = x_1 and
d2(t_i) = x_(i+1) - x_i.
"""
import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Tuple

from logzero import logger

from chaospu.arithmetic import binomial, binomial_gcd, cstar_multiplier, \
    prime_power_of
from chaospu.exceptions import InternalInconsistency, InvalidInput
from chaospu.graded import PresElement
from chaospu.intlinalg import SparseIntMatrix, solve_integer
from chaospu.koszul.coinvariants import CoinvariantRing, Monomial, Poly, \
    coinvariant_ring, elementary, poly_add, taylor_expand
from chaospu.multiindex import ZERO, sort_with_sign

__all__ = ["E2Element", "Chain", "hat", "d2", "cstar_chain", "theta_chain",
           "elementary_cocycle", "reduced_cocycle", "order_witness",
           "rho_cocycle", "product_cocycle", "x1_chain", "substitute",
           "chain_basis", "differential_matrix", "coordinates",
           "from_coordinates", "split_t0"]

Chain = Tuple[Monomial, Tuple[int, ...]]


class E2Element:
    __slots__ = ("ring", "unitary", "_terms")

    def __init__(self, ring: CoinvariantRing, unitary: bool,
                 terms: Dict[Chain, int] = None):
        self.ring = ring
        self.unitary = unitary
        self._terms = {k: v for k, v in (terms or {}).items() if v}
        if not unitary:
            for _, subset in self._terms:
                if 0 in subset:
                    raise InvalidInput(
                        "t_0 does not live on the PU(n) page")

    @property
    def n(self) -> int:
        return self.ring.n

    @classmethod
    def from_poly(cls, ring: CoinvariantRing, unitary: bool, poly: Poly,
                  subset: Tuple[int, ...] = ()) -> "E2Element":
        product = sort_with_sign(subset)
        if product is ZERO:
            return cls(ring, unitary)
        key, sign = product
        return cls(ring, unitary, {(m, key): sign * v
                                   for m, v in ring.reduce(poly).items()})

    @classmethod
    def one(cls, ring: CoinvariantRing, unitary: bool) -> "E2Element":
        return cls(ring, unitary, {(tuple([0] * ring.n), ()): 1})

    @classmethod
    def t(cls, ring: CoinvariantRing, unitary: bool, i: int) -> "E2Element":
        if i < 0 or i >= ring.n or (i == 0 and not unitary):
            raise InvalidInput("t_{i} is not a generator here".format(i=i))
        return cls(ring, unitary, {(tuple([0] * ring.n), (i,)): 1})

    @property
    def terms(self) -> Dict[Chain, int]:
        return dict(self._terms)

    def items(self) -> List[Tuple[Chain, int]]:
        return sorted(self._terms.items(),
                      key=lambda t: (sum(t[0][0]), len(t[0][1]), t[0][1],
                                     t[0][0]))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, chain: Chain) -> int:
        return self._terms.get(chain, 0)

    def _check(self, other: "E2Element"):
        if not isinstance(other, E2Element):
            raise InvalidInput("cannot combine a chain with {t}".format(
                t=type(other).__name__))
        if other.ring.n != self.ring.n or other.unitary != self.unitary:
            raise InvalidInput("chains live on different pages")

    def _new(self, terms: Dict[Chain, int]) -> "E2Element":
        return E2Element(self.ring, self.unitary, terms)

    def __add__(self, other: "E2Element") -> "E2Element":
        self._check(other)
        terms = dict(self._terms)
        for k, v in other._terms.items():
            terms[k] = terms.get(k, 0) + v
        return self._new(terms)

    def __neg__(self) -> "E2Element":
        return self._new({k: -v for k, v in self._terms.items()})

    def __sub__(self, other: "E2Element") -> "E2Element":
        return self + (-other)

    def scale(self, factor: int) -> "E2Element":
        return self._new({k: v * factor for k, v in self._terms.items()})

    def __mul__(self, other) -> "E2Element":
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        terms = {}  # type: Dict[Chain, int]
        reduce = self.ring.reduce_monomial
        for (m1, s1), v1 in self._terms.items():
            for (m2, s2), v2 in other._terms.items():
                product = sort_with_sign(s1 + s2)
                if product is ZERO:
                    continue
                subset, sign = product
                monomial = tuple(a + b for a, b in zip(m1, m2))
                for m, w in reduce(monomial).items():
                    key = (m, subset)
                    terms[key] = terms.get(key, 0) + sign * v1 * v2 * w
        return self._new(terms)

    def __rmul__(self, other) -> "E2Element":
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, E2Element):
            return NotImplemented
        return self.ring.n == other.ring.n and \
            self.unitary == other.unitary and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.ring.n, self.unitary,
                     frozenset(self._terms.items())))

    def bidegrees(self) -> List[Tuple[int, int]]:
        """
        The bidegrees (2 deg_x, |S|) present, sorted.
        """
        return sorted({(2 * sum(m), len(s)) for m, s in self._terms})

    def bidegree(self) -> Tuple[int, int]:
        found = self.bidegrees()
        if len(found) != 1:
            raise InvalidInput("chain is zero or not bihomogeneous")
        return found[0]

    def parity(self) -> int:
        """
        Total degree modulo 2 of a homogeneous chain: the size of S.
        """
        return self.bidegree()[1] % 2

    def __repr__(self) -> str:
        return "E2Element(n={n}, {page}, {k} terms)".format(
            n=self.ring.n, page="U" if self.unitary else "PU",
            k=len(self._terms))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (m, s), v in self.items():
            x = "".join("x{k}^{a}".format(k=k, a=a) if a > 1
                        else "x{k}".format(k=k)
                        for k, a in enumerate(m, start=1) if a)
            t = "".join("t{i}".format(i=i) for i in s)
            parts.append("{v}*{b}".format(v=v, b=(x + t) or "1"))
        return " + ".join(parts)


def _transgression(ring: CoinvariantRing, i: int) -> Poly:
    if i == 0:
        return ring.x(1)
    return poly_add(dict(ring.x(i + 1)), ring.x(i), -1)


def d2(z: E2Element) -> E2Element:
    """
    d2(m t_S) = sum_j (-1)^(j-1) m d2(t_(s_j)) t_(S minus s_j).
    """
    ring = z.ring
    images = {i: _transgression(ring, i) for i in range(ring.n)}
    terms = {}  # type: Dict[Chain, int]
    for (m, subset), v in z._terms.items():
        for j, i in enumerate(subset):
            rest = subset[:j] + subset[j + 1:]
            sign = -v if j % 2 else v
            for u, w in images[i].items():
                monomial = tuple(a + b for a, b in zip(m, u))
                for r, c in ring.reduce_monomial(monomial).items():
                    key = (r, rest)
                    terms[key] = terms.get(key, 0) + sign * w * c
    return E2Element(ring, z.unitary, terms)


def hat(ring: CoinvariantRing, poly: Poly) -> E2Element:
    """
    The lift sum_k h^(k) (x) t_(k-1) on the U(n) page; d2 of it is the class
    of h in the coinvariant ring.
    """
    parts = taylor_expand(poly, ring.n)
    total = E2Element(ring, True)
    for k, part in enumerate(parts, start=1):
        if part:
            total = total + E2Element.from_poly(ring, True, part, (k - 1,))
    return total


def cstar_chain(z: E2Element) -> E2Element:
    """
    Inclusion of the PU(n) page into the U(n) page.
    """
    if z.unitary:
        raise InvalidInput("cstar_chain expects a chain on the PU(n) page")
    return E2Element(z.ring, True, z._terms)


def split_t0(x: E2Element) -> Tuple[E2Element, E2Element]:
    """
    Write x = a + theta(x) t_0 with a and theta(x) free of t_0, both returned
    on the PU(n) page.
    """
    if not x.unitary:
        raise InvalidInput("theta_chain expects a chain on the U(n) page")
    rest, theta = {}, {}  # type: Dict[Chain, int], Dict[Chain, int]
    for (m, subset), v in x._terms.items():
        if subset and subset[0] == 0:
            tail = subset[1:]
            # t_0 t_S' = (-1)^|S'| t_S' t_0
            theta[(m, tail)] = -v if len(tail) % 2 else v
        else:
            rest[(m, subset)] = v
    return E2Element(x.ring, False, rest), E2Element(x.ring, False, theta)


def theta_chain(x: E2Element) -> E2Element:
    return split_t0(x)[1]


def x1_chain(ring: CoinvariantRing, a: int,
             unitary: bool = False) -> E2Element:
    return E2Element.from_poly(ring, unitary, ring.x1_power(a))


def chain_basis(ring: CoinvariantRing, unitary: bool, p: int,
                q: int) -> List[Chain]:
    """
    Basis of E2^{p,q}: standard monomials of degree p/2 times q-subsets.
    """
    if p % 2 or q < 0:
        return []
    generators = range(0 if unitary else 1, ring.n)
    return [(m, s) for m in ring.basis(p // 2)
            for s in itertools.combinations(generators, q)]


def differential_matrix(ring: CoinvariantRing, unitary: bool, p: int,
                        q: int) -> SparseIntMatrix:
    """
    Matrix of d2: E2^{p,q} -> E2^{p+2,q-1}, columns indexed by the source
    basis and rows by the target basis.
    """
    source = chain_basis(ring, unitary, p, q)
    target = chain_basis(ring, unitary, p + 2, q - 1)
    position = {c: i for i, c in enumerate(target)}
    entries = {}  # type: Dict[Tuple[int, int], int]
    for j, chain in enumerate(source):
        image = d2(E2Element(ring, unitary, {chain: 1}))
        for key, v in image._terms.items():
            entries[(position[key], j)] = v
    return SparseIntMatrix(len(target), len(source), entries)


def coordinates(z: E2Element, basis: List[Chain]) -> List[int]:
    position = {c: i for i, c in enumerate(basis)}
    vector = [0] * len(basis)
    for key, v in z._terms.items():
        if key not in position:
            raise InvalidInput("chain term {k} outside the basis".format(
                k=key))
        vector[position[key]] = v
    return vector


def from_coordinates(ring: CoinvariantRing, unitary: bool, basis: List[Chain],
                     vector: Iterable[int]) -> E2Element:
    return E2Element(ring, unitary, {c: v for c, v in zip(basis, vector)})


@lru_cache(maxsize=None)
def elementary_cocycle(n: int, r: int) -> E2Element:
    """
    The lift of e_r to the U(n) page; a d2-cocycle since e_r vanishes in the
    coinvariant ring.
    """
    if r < 1 or r > n:
        raise InvalidInput("r must lie in 1..{n}, got {r}".format(n=n, r=r))
    ring = coinvariant_ring(n)
    return hat(ring, elementary(n, r))


@lru_cache(maxsize=None)
def reduced_cocycle(n: int, r: int) -> E2Element:
    """
    The t_0-free part of the lift of e_r, on the PU(n) page. Its d2 equals
    -C(n,r) x_1^r.
    """
    return split_t0(elementary_cocycle(n, r))[0]


@lru_cache(maxsize=None)
def order_witness(n: int, r: int) -> E2Element:
    """
    A chain of bidegree (2(r-1), 1) on the PU(n) page whose d2 is
    b_{n,r} x_1^r, found by integer solving.
    """
    ring = coinvariant_ring(n)
    b = binomial_gcd(n, r)
    p = 2 * (r - 1)
    basis = chain_basis(ring, False, p, 1)
    matrix = differential_matrix(ring, False, p, 1)
    target = E2Element.from_poly(ring, False, ring.x1_power(r))
    rhs = [b * v for v in coordinates(target, chain_basis(ring, False,
                                                          p + 2, 0))]
    solution = solve_integer(matrix, rhs)
    if solution is None:
        raise InternalInconsistency(
            "no chain bounds {b}*x1^{r} for n={n}".format(b=b, r=r, n=n))
    logger.debug("Found the order witness for b({n},{r})={b}".format(
        n=n, r=r, b=b))
    return from_coordinates(ring, False, basis, solution)


@lru_cache(maxsize=None)
def rho_cocycle(n: int, r: int) -> E2Element:
    """
    The PU(n) cocycle whose class restricts to c_r times the class of the lift
    of e_r. When c_r = 1 it is the reduced lift corrected by a multiple of
    x_1 times an order witness; when r = p^s it is

        p a_r - (n/p^(s-1)) sum_{t=1..p^s-p^(s-1)} (-1)^(t-1) x_1^t a_(r-t)
              - sigma x_1^(p^s-p^(s-1)) a_(p^(s-1))

    with sigma = (-1)^(p^s-p^(s-1)).
    """
    if r < 2 or r > n:
        raise InvalidInput("r must lie in 2..{n}, got {r}".format(n=n, r=r))
    ring = coinvariant_ring(n)
    c = cstar_multiplier(n, r)
    if c == 1:
        factor = Fraction(binomial(n, r), binomial_gcd(n, r))
        if factor.denominator != 1:
            raise InternalInconsistency(
                "b({n},{r}) does not divide C({n},{r})".format(n=n, r=r))
        value = reduced_cocycle(n, r) + \
            (x1_chain(ring, 1) * order_witness(n, r - 1)).scale(
                int(factor))
    else:
        p, s = prime_power_of(n, r)
        below = p ** (s - 1)
        span = r - below
        sigma = -1 if span % 2 else 1
        weight = n // below
        value = reduced_cocycle(n, r).scale(p)
        for t in range(1, span + 1):
            term = x1_chain(ring, t) * reduced_cocycle(n, r - t)
            value = value - term.scale(weight * (-1) ** (t - 1))
        value = value - (x1_chain(ring, span) *
                         reduced_cocycle(n, below)).scale(sigma)

    if d2(value):
        raise InternalInconsistency(
            "the rho cocycle for n={n}, r={r} is not closed".format(
                n=n, r=r))
    return value


def product_cocycle(n: int, indices: Iterable[int],
                    unitary: bool = False) -> E2Element:
    """
    Ordered product of the cocycles for the given indices: the rho cocycles
    on the PU(n) page, the lifts of e_i on the U(n) page.
    """
    ring = coinvariant_ring(n)
    total = E2Element.one(ring, unitary)
    for i in indices:
        total = total * (elementary_cocycle(n, i) if unitary
                         else rho_cocycle(n, i))
    return total


def substitute(element: PresElement) -> Optional[E2Element]:
    """
    Send w^a rho_J to x_1^a times the product of the rho cocycles of J. Returns
    `None` when a coefficient is not integral.
    """
    ring = coinvariant_ring(element.n)
    total = E2Element(ring, False)
    for (a, rho), value in element.items():
        if value.denominator != 1:
            return None
        term = x1_chain(ring, a) * product_cocycle(element.n, rho)
        total = total + term.scale(int(value))
    return total
