"""Small integer helpers: factorization, divisors, p-parts, exact square roots."""

from __future__ import annotations

import math
from functools import lru_cache


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 1 as ((p, multiplicity), ...) with p ascending."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}")
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            v = 0
            while m % p == 0:
                m //= p
                v += 1
            out.append((p, v))
        p += 1 if p == 2 else 2
    if m > 1:
        out.append((m, 1))
    return tuple(out)


def prime_factors(n: int) -> list[int]:
    return [p for p, _ in factorize(n)]


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, v in factorize(n):
        divs = [d * p**i for d in divs for i in range(v + 1)]
    return sorted(divs)


def p_part(n: int, p: int) -> int:
    """Largest power of p dividing n."""
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


def pprime_part(n: int, p: int) -> int:
    """n divided by its p-part."""
    return n // p_part(n, p)


def int_sqrt(n: int) -> int | None:
    """Exact integer square root of n >= 1, or None when n is not a square."""
    if n < 1:
        raise ValueError(f"int_sqrt expects a positive integer, got {n}")
    r = math.isqrt(n)
    return r if r * r == n else None


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return factorize(n) == ((n, 1),)


def prime_power(n: int) -> tuple[int, int] | None:
    """(p, m) with n = p**m and m >= 1, or None when n is not a prime power."""
    f = factorize(n)
    if len(f) == 1:
        return f[0]
    return None


def phi(n: int) -> int:
    """Euler totient."""
    out = n
    for p, _ in factorize(n):
        out = out // p * (p - 1)
    return out


def units(n: int) -> list[int]:
    """Residues coprime to n in [1, n); empty for n = 1."""
    return [j for j in range(1, n) if math.gcd(j, n) == 1]
