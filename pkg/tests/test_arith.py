"""Integer utilities: primality, orders, squarefree tests, Jacobi symbols.

Oracles here are deliberately dumber and structurally different from the
implementations: full trial-division factorization, divisor-lattice order
search, Euler-criterion Legendre symbols.
"""

from __future__ import annotations

import random

import pytest

from jacrank.arith import (
    is_prime,
    is_squarefree_integer,
    jacobi,
    multiplicative_order,
    primes_upto,
    primes_with_odd_order_of_two,
)

PRIMES_BELOW_100 = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
    71, 73, 79, 83, 89, 97,
]


def factorize(n: int) -> dict[int, int]:
    """Trial-division oracle: complete factorization as {prime: exponent}."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def order_oracle(a: int, n: int) -> int:
    """Smallest divisor d of lambda-candidate set with a^d = 1 (mod n).

    For prime n the group order is n-1; scan its divisors in increasing
    order. Structurally different from the implementation's direct walk.
    """
    assert is_prime(n)
    divs = sorted(
        d for d in range(1, n) if (n - 1) % d == 0
    )
    for d in divs:
        if pow(a, d, n) == 1:
            return d
    raise AssertionError("no order found")


def test_primes_upto_frozen():
    assert primes_upto(100) == PRIMES_BELOW_100
    assert primes_upto(1) == []
    assert primes_upto(2) == [2]
    assert len(primes_upto(10000)) == 1229


def test_is_prime_matches_sieve():
    sieve = set(primes_upto(2000))
    for n in range(2000):
        assert is_prime(n) == (n in sieve)


def test_is_prime_large_pairs():
    # the largest pair touched by the scan
    assert is_prime(92459)
    assert is_prime(46229)
    assert not is_prime(92459 * 46229)


def test_multiplicative_order_frozen():
    assert multiplicative_order(2, 3) == 2
    assert multiplicative_order(2, 7) == 3
    assert multiplicative_order(2, 11) == 10
    assert multiplicative_order(2, 23) == 11


def test_multiplicative_order_against_divisor_oracle():
    rng = random.Random(11)
    for p in primes_upto(200):
        if p == 2:
            continue
        for _ in range(3):
            a = rng.randrange(1, p)
            assert multiplicative_order(a, p) == order_oracle(a, p)


def test_multiplicative_order_rejects_noncoprime():
    with pytest.raises(ValueError):
        multiplicative_order(6, 9)


def test_order_divides_group_order():
    for p in primes_upto(100):
        if p == 2:
            continue
        assert (p - 1) % multiplicative_order(2, p) == 0


def test_is_squarefree_frozen():
    assert is_squarefree_integer(13)  # 1 + 3 + 9
    assert not is_squarefree_integer(49)
    assert not is_squarefree_integer(9)
    assert is_squarefree_integer(1)
    assert not is_squarefree_integer(12)
    assert is_squarefree_integer(30)


def test_is_squarefree_against_factorization():
    for n in range(1, 2000):
        expect = all(e == 1 for e in factorize(n).values())
        assert is_squarefree_integer(n) == expect


def test_is_squarefree_rejects_nonpositive():
    with pytest.raises(ValueError):
        is_squarefree_integer(0)
    with pytest.raises(ValueError):
        is_squarefree_integer(-4)


def test_jacobi_matches_euler_criterion():
    rng = random.Random(23)
    for p in primes_upto(300):
        if p == 2:
            continue
        for _ in range(4):
            a = rng.randrange(1, p)
            euler = pow(a, (p - 1) // 2, p)
            expect = 1 if euler == 1 else -1
            assert jacobi(a, p) == expect
    assert jacobi(0, 7) == 0
    assert jacobi(14, 7) == 0


def test_odd_order_of_two_primes_frozen():
    assert primes_with_odd_order_of_two(100) == [7, 23, 31, 47, 71, 73, 79, 89]
