"""Small integer helpers shared by the field and polynomial layers."""

from __future__ import annotations

import math


def is_prime(n: int) -> bool:
    """Trial-division primality test (desk scale)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {prime: exponent}."""
    if n < 1:
        raise ValueError("factorize expects n >= 1")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_factors(n: int) -> list[int]:
    """Sorted distinct prime factors of n."""
    return sorted(factorize(n))


def divisors(n: int) -> list[int]:
    """Sorted positive divisors of n."""
    if n < 1:
        raise ValueError("divisors expects n >= 1")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def prime_power(n: int) -> tuple[int, int] | None:
    """Return (p, k) with n == p**k and p prime, or None."""
    if n < 2:
        return None
    fac = factorize(n)
    if len(fac) != 1:
        return None
    (p, k), = fac.items()
    return p, k


def ilog(base: int, n: int) -> int | None:
    """Return k with base**k == n, or None."""
    if base < 2 or n < 1:
        return None
    k, t = 0, 1
    while t < n:
        t *= base
        k += 1
    return k if t == n else None


def isqrt(n: int) -> int:
    return math.isqrt(n)
