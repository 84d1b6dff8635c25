"""Small integer utilities: factorization, totient, multiplicative order, sieve."""
from functools import lru_cache
from math import gcd

import numpy as np


@lru_cache(maxsize=None)
def factorize(n):
    """Prime factorization of n >= 1 as a tuple of (p, e) pairs, p increasing."""
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def is_prime(n):
    return n >= 2 and factorize(n) == ((n, 1),)


def euler_phi(n):
    r = n
    for p, _ in factorize(n):
        r = r // p * (p - 1)
    return r


def divisors(n):
    ds = [1]
    for p, e in factorize(n):
        ds = [d * p**k for d in ds for k in range(e + 1)]
    return sorted(ds)


def valuation(n, p):
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def multiplicative_order(a, n):
    """Order of a in (Z/nZ)*; 1 when n == 1."""
    if n == 1:
        return 1
    if gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit modulo {n}")
    a %= n
    k, x = 1, a
    while x != 1:
        x = x * a % n
        k += 1
    return k


def crt_pair(r1, m1, r2, m2):
    """x mod m1*m2 with x = r1 (m1), x = r2 (m2), for coprime moduli."""
    if m2 == 1:
        return r1 % m1
    if m1 == 1:
        return r2 % m2
    t = (r2 - r1) * pow(m1, -1, m2) % m2
    return (r1 + m1 * t) % (m1 * m2)


def units(m):
    return [a for a in range(m) if gcd(a, m) == 1] if m > 1 else [0]


@lru_cache(maxsize=8)
def primes_up_to(n):
    """Sieve of Eratosthenes; returns an int64 array of primes <= n."""
    if n < 2:
        return np.zeros(0, dtype=np.int64)
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    sieve[4::2] = False
    for p in range(3, int(n**0.5) + 1, 2):
        if sieve[p]:
            sieve[p * p::2 * p] = False
    return np.flatnonzero(sieve).astype(np.int64)
