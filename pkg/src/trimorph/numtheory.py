"""Perfect-power structure of integers >= 2.

Every integer n >= 2 has a unique primitive root d with n = d^e, e maximal
(equivalently, d is not itself a proper power).  Two integers p, q >= 2 are
multiplicatively dependent exactly when they share that root, and then the
canonical witness p = r^m, q = r^n with gcd(m, n) = 1 comes from dividing
both exponents by their gcd.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

# Primes up to 64: exponents of perfect powers below 2^64 factor over these.
_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61)
_ODD_PRIMES = _PRIMES[1:]


def _is_tiny_prime(m: int) -> bool:
    if m < 2:
        return False
    f = 2
    while f * f <= m:
        if m % f == 0:
            return False
        f += 1
    return True


def _residue_filter(exp: int) -> tuple[int, frozenset[int]]:
    """A modulus M (prime, M = 1 mod exp) and the exp-th power residues mod M.

    n = r^exp forces n mod M into this set, which is small because the
    exp-th powers form an index-exp subgroup of the units mod M.  Testing
    membership cheaply rejects most non-powers before any root extraction.
    """
    m = 2 * exp + 1
    while not _is_tiny_prime(m):
        m += 2 * exp
    return m, frozenset(pow(x, exp, m) for x in range(m))


_FILTERS = {exp: _residue_filter(exp) for exp in _ODD_PRIMES}


@dataclass(frozen=True)
class Independent:
    pass


@dataclass(frozen=True)
class Dependent:
    r: int
    m: int
    n: int


MultDependence = Independent | Dependent

INDEPENDENT = Independent()


def integer_root(n: int, k: int) -> int:
    """Floor of the k-th root of n >= 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 1:
        raise ValueError("k must be positive")
    if k == 1 or n < 2:
        return n
    if k == 2:
        return math.isqrt(n)
    x = int(n ** (1.0 / k))
    if x < 1:
        x = 1
    while x > 1 and x**k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x


def primitive_root(n: int) -> tuple[int, int]:
    """The unique (d, e) with n = d^e, e maximal.

    Prime factors of e are peeled off ascending: squares via isqrt, odd
    primes behind their residue filters.  A base that is not a proper power
    stays fixed, so the loop terminates with the primitive root.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    d, e = n, 1
    while d >= 4:
        r = math.isqrt(d)
        if r * r != d:
            break
        d = r
        e *= 2
    for prime in _ODD_PRIMES:
        # A prime-th root below 2 cannot exist once 2^prime exceeds d.
        if (1 << prime) > d:
            break
        modulus, residues = _FILTERS[prime]
        while (1 << prime) <= d:
            if d % modulus not in residues:
                break
            r = integer_root(d, prime)
            if r**prime != d:
                break
            d = r
            e *= prime
    return d, e


@lru_cache(maxsize=65536)
def mult_dependence(p: int, q: int) -> MultDependence:
    """Decide whether p and q are powers of a common integer.

    Dependent(r, m, n) satisfies p = r^m, q = r^n with gcd(m, n) = 1 and r
    maximal in the sense that it is the smallest possible common base made
    canonical: r is a power of the shared primitive root.
    """
    if p < 2 or q < 2:
        raise ValueError("arguments must be at least 2")
    d1, e1 = primitive_root(p)
    d2, e2 = primitive_root(q)
    if d1 != d2:
        return INDEPENDENT
    g = math.gcd(e1, e2)
    return Dependent(d1**g, e1 // g, e2 // g)


def val_and_digit(i: int, p: int) -> tuple[int, int]:
    """The p-adic valuation of i and the lowest nonzero base-p digit of i."""
    if i < 1:
        raise ValueError("i must be positive")
    if p < 2:
        raise ValueError("p must be at least 2")
    m = 0
    while i % p == 0:
        i //= p
        m += 1
    return m, i % p
