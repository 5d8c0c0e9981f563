# -*- coding: utf-8 -*-
"""
The coinvariant ring Z[x_1, ..., x_n] / (e_1, ..., e_n), which is the
cohomology of the flag manifold U(n)/T.

Polynomials are plain dicts from exponent tuples to integers. Normal forms
come from the Groebner basis g_k = h_{n-k+1}(x_1, ..., x_k), k = 1..n, whose
leading terms are the powers x_k^(n-k+1): a monomial is standard exactly
when the exponent of x_k is at most n - k, and there are n! of them.
"""
import itertools
from functools import lru_cache
from typing import Dict, List, Tuple

from logzero import logger

from chaospu.exceptions import InternalInconsistency, InvalidInput

__all__ = ["Monomial", "Poly", "CoinvariantRing", "coinvariant_ring",
           "variable", "elementary", "complete", "poly_add", "poly_mul",
           "poly_scale", "poly_degree", "taylor_expand", "re_expand"]

Monomial = Tuple[int, ...]
Poly = Dict[Monomial, int]


def poly_add(target: Poly, source: Poly, factor: int = 1) -> Poly:
    """
    target += factor * source, in place; returns target.
    """
    for m, v in source.items():
        w = target.get(m, 0) + factor * v
        if w:
            target[m] = w
        else:
            target.pop(m, None)
    return target


def poly_scale(poly: Poly, factor: int) -> Poly:
    if not factor:
        return {}
    return {m: v * factor for m, v in poly.items()}


def poly_mul(left: Poly, right: Poly) -> Poly:
    result = {}  # type: Poly
    for m1, v1 in left.items():
        for m2, v2 in right.items():
            m = tuple(a + b for a, b in zip(m1, m2))
            w = result.get(m, 0) + v1 * v2
            if w:
                result[m] = w
            else:
                result.pop(m, None)
    return result


def poly_degree(poly: Poly) -> int:
    """
    Degree of a homogeneous non-zero polynomial, in powers of the x_k.
    """
    degrees = {sum(m) for m in poly}
    if len(degrees) != 1:
        raise InvalidInput("polynomial is zero or not homogeneous")
    return degrees.pop()


def variable(n: int, k: int) -> Poly:
    if k < 1 or k > n:
        raise InvalidInput("x_{k} is not a variable for n={n}".format(
            k=k, n=n))
    return {tuple(1 if i == k - 1 else 0 for i in range(n)): 1}


def elementary(n: int, r: int) -> Poly:
    """
    The elementary symmetric polynomial e_r(x_1, ..., x_n).
    """
    poly = {}  # type: Poly
    for chosen in itertools.combinations(range(n), r):
        poly[tuple(1 if i in chosen else 0 for i in range(n))] = 1
    return poly


def complete(n: int, k: int, m: int) -> Poly:
    """
    The complete homogeneous symmetric polynomial h_m(x_1, ..., x_k), as a
    polynomial in n variables.
    """
    poly = {}  # type: Poly
    for chosen in itertools.combinations_with_replacement(range(k), m):
        exponents = [0] * n
        for i in chosen:
            exponents[i] += 1
        poly[tuple(exponents)] = 1
    return poly


class CoinvariantRing:
    """
    Arithmetic modulo (e_1, ..., e_n) on standard-monomial coordinates.
    """

    def __init__(self, n: int):
        if n < 1:
            raise InvalidInput("n must be positive, got {n}".format(n=n))
        self.n = n
        self._cache = {}  # type: Dict[Monomial, Poly]
        # tails of the Groebner basis: g_k minus its leading power
        self._tails = {}  # type: Dict[int, Poly]
        for k in range(1, n + 1):
            lead = tuple(n - k + 1 if i == k - 1 else 0 for i in range(n))
            tail = complete(n, k, n - k + 1)
            del tail[lead]
            self._tails[k] = tail
        self._basis = {}  # type: Dict[int, List[Monomial]]
        for m in itertools.product(*(range(n - k + 1)
                                     for k in range(1, n + 1))):
            self._basis.setdefault(sum(m), []).append(m)
        for monomials in self._basis.values():
            monomials.sort()

    @property
    def top_degree(self) -> int:
        return self.n * (self.n - 1) // 2

    def basis(self, degree: int) -> List[Monomial]:
        """
        Standard monomials of the given degree, sorted.
        """
        return list(self._basis.get(degree, []))

    def rank(self) -> int:
        return sum(len(v) for v in self._basis.values())

    def is_standard(self, m: Monomial) -> bool:
        return all(a <= self.n - k for k, a in enumerate(m, start=1))

    def reduce_monomial(self, m: Monomial) -> Poly:
        if m in self._cache:
            return self._cache[m]
        violating = [k for k, a in enumerate(m, start=1) if a > self.n - k]
        if not violating:
            result = {m: 1}
        else:
            k = violating[-1]
            rest = list(m)
            rest[k - 1] -= self.n - k + 1
            rest = tuple(rest)
            result = {}
            for u, v in self._tails[k].items():
                shifted = tuple(a + b for a, b in zip(rest, u))
                poly_add(result, self.reduce_monomial(shifted), -v)
        self._cache[m] = result
        return result

    def reduce(self, poly: Poly) -> Poly:
        result = {}  # type: Poly
        for m, v in poly.items():
            if len(m) != self.n:
                raise InvalidInput(
                    "monomial {m} has the wrong number of variables".format(
                        m=m))
            poly_add(result, self.reduce_monomial(m), v)
        return result

    def multiply(self, left: Poly, right: Poly) -> Poly:
        return self.reduce(poly_mul(left, right))

    def x(self, k: int) -> Poly:
        return self.reduce(variable(self.n, k))

    def x1_power(self, a: int) -> Poly:
        return self.reduce({tuple(a if i == 0 else 0
                                  for i in range(self.n)): 1})


@lru_cache(maxsize=None)
def coinvariant_ring(n: int) -> CoinvariantRing:
    ring = CoinvariantRing(n)
    logger.debug("Built the coinvariant ring for n={n}: {r} monomials".format(
        n=n, r=ring.rank()))
    return ring


def _substitute_last(poly: Poly, k: int) -> Poly:
    """
    Set x_k = x_(k-1).
    """
    result = {}  # type: Poly
    for m, v in poly.items():
        moved = list(m)
        moved[k - 2] += moved[k - 1]
        moved[k - 1] = 0
        poly_add(result, {tuple(moved): v})
    return result


def _difference_quotient(poly: Poly, k: int) -> Poly:
    """
    (P(.., x_(k-1), x_k) - P(.., x_(k-1), x_(k-1))) / (x_k - x_(k-1)) for P in
    x_1..x_k, using (x^j - y^j)/(x - y) = sum_{i<j} x^i y^(j-1-i).
    """
    result = {}  # type: Poly
    for m, v in poly.items():
        j = m[k - 1]
        for i in range(j):
            quotient = list(m)
            quotient[k - 1] = i
            quotient[k - 2] += j - 1 - i
            poly_add(result, {tuple(quotient): v})
    return result


def taylor_expand(poly: Poly, n: int) -> List[Poly]:
    """
    The unique h^(1), ..., h^(n) with h^(k) a polynomial in x_1..x_k and

        h = h^(1) x_1 + sum_{k>=2} h^(k) (x_k - x_(k-1)).

    Works top down: P_n = h and P_(k-1) = P_k with x_k set to x_(k-1), so
    h^(k) = (P_k - P_(k-1)) / (x_k - x_(k-1)) and h^(1) = P_1 / x_1.
    """
    degree = poly_degree(poly)
    if degree < 1:
        raise InvalidInput("cannot expand a constant")

    parts = [{} for _ in range(n)]  # type: List[Poly]
    current = dict(poly)
    for k in range(n, 1, -1):
        parts[k - 1] = _difference_quotient(current, k)
        current = _substitute_last(current, k)

    first = {}  # type: Poly
    for m, v in current.items():
        lowered = list(m)
        lowered[0] -= 1
        first[tuple(lowered)] = v
    parts[0] = first

    if re_expand(parts, n) != {m: v for m, v in poly.items() if v}:
        raise InternalInconsistency(
            "the expansion of a degree {d} polynomial does not "
            "re-expand".format(d=degree))
    return parts


def re_expand(parts: List[Poly], n: int) -> Poly:
    total = poly_mul(parts[0], variable(n, 1))
    for k in range(2, n + 1):
        step = poly_add(dict(variable(n, k)), variable(n, k - 1), -1)
        poly_add(total, poly_mul(parts[k - 1], step))
    return total
