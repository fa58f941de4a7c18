"""Polynomial arithmetic and factorization over prime fields F_p.

Factorization is squarefree decomposition, then distinct-degree splitting by
Frobenius powers, then Cantor-Zassenhaus equal-degree splitting (trace map in
characteristic 2). The splitting RNG is seeded from the input so repeated runs
are identical; output order is (degree, coefficient tuple) regardless.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List, Tuple

from .arith import is_prime

__all__ = ["PrimePoly", "factor_mod_p", "is_irreducible_mod_p"]

Coeffs = Tuple[int, ...]


@dataclass(frozen=True)
class PrimePoly:
    modulus: int
    coeffs: Coeffs

    def __init__(self, modulus: int, coeffs) -> None:
        if not is_prime(modulus):
            raise ValueError(f"modulus must be prime, got {modulus}")
        cs = [c % modulus for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "coeffs", tuple(cs))

    def deg(self) -> int:
        return len(self.coeffs) - 1

    def lc(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial")
        return self.coeffs[-1]


def _trim(a: List[int]) -> List[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _mul(a: List[int], b: List[int], p: int) -> List[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _divmod(a: List[int], b: List[int], p: int) -> Tuple[List[int], List[int]]:
    if not b:
        raise ZeroDivisionError
    inv = pow(b[-1], p - 2, p)
    r = list(a)
    if len(r) < len(b):
        return [], _trim(r)
    q = [0] * (len(r) - len(b) + 1)
    db = len(b) - 1
    for k in range(len(q) - 1, -1, -1):
        c = r[k + db] * inv % p
        if c:
            q[k] = c
            for j in range(db + 1):
                r[k + j] = (r[k + j] - c * b[j]) % p
    return _trim(q), _trim(r)


def _monic(a: List[int], p: int) -> List[int]:
    if not a or a[-1] == 1:
        return list(a)
    inv = pow(a[-1], p - 2, p)
    return [c * inv % p for c in a]


def _gcd(a: List[int], b: List[int], p: int) -> List[int]:
    a, b = list(a), list(b)
    while b:
        a, b = b, _divmod(a, b, p)[1]
    return _monic(a, p)


def _deriv(a: List[int], p: int) -> List[int]:
    return _trim([i * c % p for i, c in enumerate(a)][1:])


def _powmod(base: List[int], e: int, mod: List[int], p: int) -> List[int]:
    result = [1]
    base = _divmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _divmod(_mul(result, base, p), mod, p)[1]
        base = _divmod(_mul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def _sub(a: List[int], b: List[int], p: int) -> List[int]:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _trim(out)


def _squarefree_decomposition(f: List[int], p: int) -> List[Tuple[List[int], int]]:
    """Monic input; returns [(monic squarefree, multiplicity)] with distinct parts."""
    out: List[Tuple[List[int], int]] = []
    e = 1
    while len(f) > 1:
        fp = _deriv(f, p)
        if not fp:
            # f = h(x^p) = h(x)^p over F_p
            f = f[::p]
            e *= p
            continue
        g = _gcd(f, fp, p)
        w = _divmod(f, g, p)[0]
        i = 1
        while len(w) > 1:
            y = _gcd(w, g, p)
            z = _divmod(w, y, p)[0]
            if len(z) > 1:
                out.append((z, e * i))
            w = y
            g = _divmod(g, y, p)[0]
            i += 1
        f = g  # remaining part has all multiplicities divisible by p
    return out


def _distinct_degree(f: List[int], p: int) -> List[Tuple[List[int], int]]:
    """Monic squarefree input; returns [(product-of-degree-d-factors, d)]."""
    blocks: List[Tuple[List[int], int]] = []
    x = [0, 1]
    h = _divmod(x, f, p)[1]
    d = 0
    while len(f) - 1 > 2 * d:
        d += 1
        h = _powmod(h, p, f, p)
        g = _gcd(_sub(h, x, p), f, p)
        if len(g) > 1:
            blocks.append((g, d))
            f = _divmod(f, g, p)[0]
            h = _divmod(h, f, p)[1]
    if len(f) > 1:
        blocks.append((f, len(f) - 1))
    return blocks


def _equal_degree(f: List[int], d: int, p: int, rng: random.Random) -> List[List[int]]:
    """Monic squarefree product of irreducibles all of degree d; splits fully."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        r = _trim([rng.randrange(p) for _ in range(n)])
        if p == 2:
            t = list(r)  # trace map r + r^2 + ... + r^(2^(d-1))
            acc = list(r)
            for _ in range(d - 1):
                acc = _divmod(_mul(acc, acc, p), f, p)[1]
                t = _sub(t, acc, p)  # char 2: subtraction is addition
            g = _gcd(t, f, p)
        else:
            s = _powmod(r, (p**d - 1) // 2, f, p)
            g = _gcd(_sub(s, [1], p), f, p)
        if 1 < len(g) < len(f):
            other = _divmod(f, g, p)[0]
            return _equal_degree(g, d, p, rng) + _equal_degree(other, d, p, rng)


def factor_mod_p(f: PrimePoly) -> List[Tuple[PrimePoly, int]]:
    """Monic irreducible factors with multiplicities; product times lc(f)
    reproduces f. Sorted by (degree, coefficient tuple)."""
    p = f.modulus
    if not f.coeffs:
        raise ValueError("cannot factor the zero polynomial")
    work = _monic(list(f.coeffs), p)
    rng = random.Random(f"{p}:{f.coeffs}")
    out: List[Tuple[PrimePoly, int]] = []
    for part, mult in _squarefree_decomposition(work, p):
        for block, d in _distinct_degree(part, p):
            for irr in _equal_degree(block, d, p, rng):
                out.append((PrimePoly(p, irr), mult))
    out.sort(key=lambda ge: (len(ge[0].coeffs), ge[0].coeffs))
    return out


def is_irreducible_mod_p(f: PrimePoly) -> bool:
    """Rabin's irreducibility test."""
    p = f.modulus
    n = f.deg()
    if n <= 0:
        return False
    if n == 1:
        return True
    work = _monic(list(f.coeffs), p)
    x = [0, 1]
    # x^(p^n) = x mod f, and no proper Frobenius power fixes a factor
    h = list(x)
    for _ in range(n):
        h = _powmod(h, p, work, p)
    if _sub(h, x, p):
        return False
    for t in {d for d in range(2, n + 1) if n % d == 0 and is_prime(d)}:
        h = list(x)
        for _ in range(n // t):
            h = _powmod(h, p, work, p)
        if len(_gcd(_sub(h, x, p), work, p)) > 1:
            return False
    return True
