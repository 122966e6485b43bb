"""Exact integer number theory used by the counting and indexing layers.

Everything here is arbitrary-precision; no floating point is used anywhere
in this package.
"""

from math import gcd, isqrt


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test.

    Inputs are small user-supplied primes, so trial division up to sqrt(n)
    is both simple and fast enough.
    """
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f <= isqrt(n):
        if n % f == 0:
            return False
        f += 2
    return True


def require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def mobius(n: int) -> int:
    """Mobius function: 0 if n has a squared prime factor, else (-1)^#primes."""
    if n < 1:
        raise ValueError("mobius requires n >= 1")
    result = 1
    f = 2
    while f * f <= n:
        if n % f == 0:
            n //= f
            if n % f == 0:
                return 0
            result = -result
        f += 1
    if n > 1:
        result = -result
    return result


def vp(p: int, n: int) -> int:
    """p-adic valuation: the largest e with p^e dividing n."""
    require_prime(p)
    if n < 1:
        raise ValueError("vp requires n >= 1")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    if n < 1:
        raise ValueError("divisors requires n >= 1")
    small = []
    large = []
    f = 1
    while f * f <= n:
        if n % f == 0:
            small.append(f)
            if f != n // f:
                large.append(n // f)
        f += 1
    return small + large[::-1]


def in_jp(p: int, m: int) -> bool:
    """True iff m is coprime to the prime p."""
    require_prime(p)
    return gcd(m, p) == 1


def factor_prime_power(q: int) -> tuple[int, int]:
    """Write q = p^f with p prime, or raise ValueError."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    for p in range(2, isqrt(q) + 1):
        if q % p == 0:
            f = 0
            while q % p == 0:
                q //= p
                f += 1
            if q != 1:
                raise ValueError("not a prime power")
            return p, f
    return q, 1
