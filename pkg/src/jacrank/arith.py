"""Exact integer utilities: primes, multiplicative orders, squarefree tests.

Everything here is deterministic. Primality below 3.3e14 uses a fixed
Miller-Rabin base set known to be exact in that range, far above any input
this package handles (the largest scan touches 92459).
"""

from __future__ import annotations

from typing import List

__all__ = [
    "primes_upto",
    "is_prime",
    "multiplicative_order",
    "is_squarefree_integer",
    "jacobi",
    "primes_with_odd_order_of_two",
]

# exact for all n < 3_317_044_064_679_887_385_961_981 per Sorenson-Webster
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def primes_upto(n: int) -> List[int]:
    """All primes <= n, ascending (sieve of Eratosthenes)."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(n**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(2, n + 1) if sieve[i]]


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (exact well past this package's inputs)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def multiplicative_order(a: int, n: int) -> int:
    """Least k >= 1 with a^k = 1 (mod n); requires gcd(a, n) = 1."""
    if n < 2:
        raise ValueError(f"modulus must be >= 2, got {n}")
    a %= n
    import math

    if math.gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit mod {n}")
    k = 1
    t = a
    while t != 1:
        t = t * a % n
        k += 1
    return k


def is_squarefree_integer(n: int) -> bool:
    """True iff no prime square divides n; trial division up to sqrt(n)."""
    if n <= 0:
        raise ValueError(f"expected a positive integer, got {n}")
    if n % 4 == 0:
        return False
    while n % 2 == 0:
        n //= 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return False
        else:
            d += 2
    return True


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n > 0; the Legendre symbol for prime n."""
    if n <= 0 or n % 2 == 0:
        raise ValueError(f"modulus must be odd and positive, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def primes_with_odd_order_of_two(limit: int) -> List[int]:
    """Odd primes p < limit for which the order of 2 mod p is odd."""
    return [
        p
        for p in primes_upto(limit - 1)
        if p != 2 and multiplicative_order(2, p) % 2 == 1
    ]
