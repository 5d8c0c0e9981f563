# -*- coding: utf-8 -*-
"""
Binomial-coefficient arithmetic: factorizations, the gcds b_{n,r} of the
leading binomial coefficients of n, the multipliers c_k and the Newton
identity splittings that the cocycle constructions rely upon.

Everything is exact; Python integers carry arbitrary precision.
"""
from fractions import Fraction
from functools import lru_cache
from typing import List, NamedTuple, Optional, Sequence, Tuple

from logzero import logger
from sympy import binomial as sympy_binomial
from sympy import factorint, igcd, multiplicity
try:
    from sympy.core.intfunc import igcdex
except ImportError:  # sympy < 1.13
    from sympy.core.numbers import igcdex

from chaospu.exceptions import InternalInconsistency, InvalidInput

__all__ = ["PrimeFactorization", "SplitIdentity", "factorize", "binomial",
           "cstar_multiplier", "binomial_gcd", "binomial_gcd_sequence",
           "multiplier_sequence", "check_binomial_gcd_factorization",
           "newton_check", "split_identity", "padic_valuation",
           "kummer_check", "prime_power_of", "bezout"]


class PrimeFactorization(NamedTuple):
    pairs: Tuple[Tuple[int, int], ...]

    @property
    def n(self) -> int:
        value = 1
        for p, r in self.pairs:
            value *= p ** r
        return value

    @property
    def primes(self) -> Tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)

    def exponent(self, p: int) -> int:
        for q, r in self.pairs:
            if q == p:
                return r
        return 0

    def __str__(self) -> str:
        return "*".join(
            "{p}^{r}".format(p=p, r=r) if r > 1 else str(p)
            for p, r in self.pairs)


class SplitIdentity(NamedTuple):
    main_sum: int
    tail_sign: int


@lru_cache(maxsize=None)
def factorize(n: int) -> PrimeFactorization:
    if n < 2:
        raise InvalidInput("n must be at least 2, got {n}".format(n=n))
    return PrimeFactorization(
        tuple(sorted((int(p), int(r)) for p, r in factorint(n).items())))


@lru_cache(maxsize=None)
def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return int(sympy_binomial(n, k))


def prime_power_of(n: int, k: int) -> Optional[Tuple[int, int]]:
    """
    Return `(p, s)` when `k = p^s` with `1 <= s` and `p^s` dividing `n`,
    `None` otherwise.
    """
    if k < 2 or n % k:
        return None
    pairs = factorint(k)
    if len(pairs) != 1:
        return None
    (p, s), = pairs.items()
    return int(p), int(s)


def cstar_multiplier(n: int, k: int) -> int:
    """
    The multiplier c_k: the prime `p` when `k` is a positive power of `p`
    dividing `n`, 1 otherwise.
    """
    if k < 2 or k > n:
        raise InvalidInput(
            "k must lie in 2..{n}, got {k}".format(n=n, k=k))
    power = prime_power_of(n, k)
    return power[0] if power else 1


@lru_cache(maxsize=None)
def binomial_gcd_sequence(n: int) -> Tuple[int, ...]:
    """
    The sequence b_{n,1}, ..., b_{n,n} with
    b_{n,r} = gcd(C(n,1), ..., C(n,r)).
    """
    if n < 1:
        raise InvalidInput("n must be positive, got {n}".format(n=n))
    values = []
    g = 0
    for r in range(1, n + 1):
        g = int(igcd(g, binomial(n, r)))
        values.append(g)
    return tuple(values)


def binomial_gcd(n: int, r: int) -> int:
    if r < 1 or r > n:
        raise InvalidInput(
            "r must lie in 1..{n}, got {r}".format(n=n, r=r))
    return binomial_gcd_sequence(n)[r - 1]


def multiplier_sequence(n: int) -> Tuple[int, ...]:
    """
    The ratios a_r = b_{n,r-1} / b_{n,r} for r = 2..n.
    """
    b = binomial_gcd_sequence(n)
    return tuple(b[r - 2] // b[r - 1] for r in range(2, n + 1))


def check_binomial_gcd_factorization(n: int) -> bool:
    """
    Check that every ratio a_r equals c_r and that b_{n,r} is the product
    c_{r+1} ... c_n, and that b_{n,1} = n.
    """
    b = binomial_gcd_sequence(n)
    c = {k: cstar_multiplier(n, k) for k in range(2, n + 1)}

    if b[0] != n:
        logger.debug("b_({n},1) = {b} differs from n".format(n=n, b=b[0]))
        return False

    for r in range(2, n + 1):
        if b[r - 2] % b[r - 1] or b[r - 2] // b[r - 1] != c[r]:
            logger.debug("Ratio mismatch for n={n} at r={r}".format(
                n=n, r=r))
            return False
        tail = 1
        for k in range(r + 1, n + 1):
            tail *= c[k]
        if b[r - 1] != tail:
            logger.debug("Product mismatch for n={n} at r={r}".format(
                n=n, r=r))
            return False
    return True


def newton_check(n: int, r: int) -> bool:
    """
    C(n,r) = (n/r) * sum_{t=1..r} (-1)^(t-1) C(n, r-t), evaluated with exact
    rationals.
    """
    if r < 1 or r > n:
        raise InvalidInput(
            "r must lie in 1..{n}, got {r}".format(n=n, r=r))
    total = sum((-1) ** (t - 1) * binomial(n, r - t)
                for t in range(1, r + 1))
    return Fraction(n, r) * total == binomial(n, r)


def split_identity(n: int, p: int, s: int) -> SplitIdentity:
    """
    Split the Newton identity for C(n, p^s) into the main sum

        M = (n/p^s) * sum_{t=1..p^s-p^(s-1)} (-1)^(t-1) C(n, p^s-t)

    and the tail, which equals sigma * (1/p) * C(n, p^(s-1)) with
    sigma = (-1)^(p^s - p^(s-1)). The sign is -1 exactly for p = 2, s = 1.
    """
    r = multiplicity(p, n) if n % p == 0 else 0
    if s < 1 or s > r:
        raise InvalidInput(
            "s must lie in 1..{r} for n={n}, p={p}; got {s}".format(
                r=r, n=n, p=p, s=s))

    top = p ** s
    below = p ** (s - 1)
    span = top - below
    main_sum = (n // top) * sum((-1) ** (t - 1) * binomial(n, top - t)
                                for t in range(1, span + 1))
    sign = -1 if span % 2 else 1

    if binomial(n, top) != main_sum + sign * Fraction(binomial(n, below), p):
        raise InternalInconsistency(
            "split identity fails for n={n}, p={p}, s={s}".format(
                n=n, p=p, s=s))
    return SplitIdentity(main_sum, sign)


def padic_valuation(p: int, m: int) -> int:
    if m == 0:
        raise InvalidInput("the valuation of 0 is not finite")
    return int(multiplicity(p, abs(m)))


def kummer_check(n: int) -> bool:
    """
    For every prime power p^s dividing n = p^r n', the valuation of
    C(n, p^s) is r - s.
    """
    for p, r in factorize(n).pairs:
        for s in range(0, r + 1):
            if padic_valuation(p, binomial(n, p ** s)) != r - s:
                return False
    return True


def bezout(values: Sequence[int]) -> Tuple[int, List[int]]:
    """
    Return `(g, q)` where `g` is the non-negative gcd of `values` and
    `sum(q[i] * values[i]) == g`.
    """
    g = 0
    coeffs = []  # type: List[int]
    for v in values:
        x, y, h = igcdex(g, v)
        coeffs = [int(x) * q for q in coeffs] + [int(y)]
        g = int(h)
    if g < 0:
        g = -g
        coeffs = [-q for q in coeffs]
    return g, coeffs
