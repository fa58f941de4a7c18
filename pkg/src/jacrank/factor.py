"""Exact irreducible factorization over Q.

Pipeline: content/primitive split, Yun squarefree decomposition, reduction at
a good prime (smallest of five candidates giving the fewest modular factors),
quadratic Hensel lifting on a subproduct tree past twice the Mignotte bound,
then subset recombination in increasing cardinality. Non-monic inputs are
monicized first via G(y) = lc^(n-1) f(y/lc), so every lifted object is monic
and recombination candidates can be tested by exact integer division.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import List, Tuple

from .arith import is_prime
from .modpoly import PrimePoly, factor_mod_p
from .polys import RationalPoly

__all__ = ["factor_over_Q"]


def _gcd_q(a: RationalPoly, b: RationalPoly) -> RationalPoly:
    while b.deg() >= 0:
        a, b = b, a % b
    if a.deg() < 0:
        return a
    return a.monic()


def _yun_squarefree(f: RationalPoly) -> List[Tuple[RationalPoly, int]]:
    """Monic input, characteristic zero; [(monic squarefree part, multiplicity)]."""
    out: List[Tuple[RationalPoly, int]] = []
    g = _gcd_q(f, f.derivative())
    w = f.divmod(g)[0]
    y = f.derivative().divmod(g)[0]
    z = y - w.derivative()
    i = 1
    while w.deg() > 0:
        h = _gcd_q(w, z)
        if h.deg() > 0:
            out.append((h, i))
        w = w.divmod(h)[0]
        y = z.divmod(h)[0]
        z = y - w.derivative()
        i += 1
    return out


# --- integer polynomial arithmetic mod m (m a prime power; divisors monic) ---


def _ztrim(a: List[int]) -> List[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _zmul(a: List[int], b: List[int], m: int) -> List[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % m
    return _ztrim(out)


def _zsub(a: List[int], b: List[int], m: int) -> List[int]:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c % m
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % m
    return _ztrim(out)


def _zdivmod_monic(a: List[int], b: List[int], m: int) -> Tuple[List[int], List[int]]:
    assert b and b[-1] == 1
    r = [c % m for c in a]
    if len(r) < len(b):
        return [], _ztrim(r)
    q = [0] * (len(r) - len(b) + 1)
    db = len(b) - 1
    for k in range(len(q) - 1, -1, -1):
        c = r[k + db] % m
        if c:
            q[k] = c
            for j in range(db + 1):
                r[k + j] = (r[k + j] - c * b[j]) % m
    return _ztrim(q), _ztrim(r)


def _zadd(a: List[int], b: List[int], m: int) -> List[int]:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c % m
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % m
    return _ztrim(out)


def _xgcd_mod_p(a: List[int], b: List[int], p: int) -> Tuple[List[int], List[int]]:
    """For coprime a, b mod p (both degree >= 1) returns (s, t) with
    s*a + t*b = 1; extended Euclid gives deg s < deg b, deg t < deg a."""
    r0, r1 = [c % p for c in a], [c % p for c in b]
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        u = pow(r1[-1], p - 2, p)
        q, _ = _zdivmod_monic([c * u % p for c in r0],
                              [c * u % p for c in r1], p)
        r0, r1 = r1, _zsub(r0, _zmul(q, r1, p), p)
        s0, s1 = s1, _zsub(s0, _zmul(q, s1, p), p)
        t0, t1 = t1, _zsub(t0, _zmul(q, t1, p), p)
    assert len(r0) == 1, "inputs were not coprime"
    inv = pow(r0[0], p - 2, p)
    return [c * inv % p for c in s0], [c * inv % p for c in t0]


class _Node:
    __slots__ = ("leaf", "poly", "left", "right", "g", "h", "s", "t")

    def __init__(self) -> None:
        self.leaf = False
        self.poly: List[int] = []
        self.left = self.right = None
        self.g: List[int] = []
        self.h: List[int] = []
        self.s: List[int] = []
        self.t: List[int] = []


def _build_tree(factors: List[List[int]], p: int) -> _Node:
    node = _Node()
    if len(factors) == 1:
        node.leaf = True
        node.poly = list(factors[0])
        return node
    mid = len(factors) // 2
    node.left = _build_tree(factors[:mid], p)
    node.right = _build_tree(factors[mid:], p)
    node.g = _prod_mod(factors[:mid], p)
    node.h = _prod_mod(factors[mid:], p)
    node.s, node.t = _xgcd_mod_p(node.g, node.h, p)
    return node


def _prod_mod(factors: List[List[int]], m: int) -> List[int]:
    out = [1]
    for f in factors:
        out = _zmul(out, f, m)
    return out


def _hensel_step(m: int, f: List[int], g: List[int], h: List[int],
                 s: List[int], t: List[int]):
    """Lift f = g*h and s*g + t*h = 1 from mod m to mod m^2; h stays monic."""
    mm = m * m
    e = _zsub(f, _zmul(g, h, mm), mm)
    q, r = _zdivmod_monic(_zmul(s, e, mm), h, mm)
    g1 = _zadd(g, _zadd(_zmul(t, e, mm), _zmul(q, g, mm), mm), mm)
    h1 = _zadd(h, r, mm)
    b = _zsub(_zadd(_zmul(s, g1, mm), _zmul(t, h1, mm), mm), [1], mm)
    c, d = _zdivmod_monic(_zmul(s, b, mm), h1, mm)
    s1 = _zsub(s, d, mm)
    t1 = _zsub(_zsub(t, _zmul(t, b, mm), mm), _zmul(c, g1, mm), mm)
    return g1, h1, s1, t1


def _lift_tree(node: _Node, target: List[int], m: int) -> None:
    """target given mod m^2, congruent mod m to the node's product."""
    if node.leaf:
        node.poly = target
        return
    g1, h1, s1, t1 = _hensel_step(m, target, node.g, node.h, node.s, node.t)
    node.g, node.h, node.s, node.t = g1, h1, s1, t1
    _lift_tree(node.left, g1, m)
    _lift_tree(node.right, h1, m)


def _leaves(node: _Node, out: List[List[int]]) -> None:
    if node.leaf:
        out.append(node.poly)
        return
    _leaves(node.left, out)
    _leaves(node.right, out)


def _balanced(c: int, m: int) -> int:
    c %= m
    return c - m if c > m // 2 else c


def _int_divmod_monic(a: List[int], b: List[int]) -> Tuple[List[int], List[int]]:
    r = list(a)
    if len(r) < len(b):
        return [], _ztrim(r)
    q = [0] * (len(r) - len(b) + 1)
    db = len(b) - 1
    for k in range(len(q) - 1, -1, -1):
        c = r[k + db]
        if c:
            q[k] = c
            for j in range(db + 1):
                r[k + j] -= c * b[j]
    return _ztrim(q), _ztrim(r)


def _good_prime(coeffs: List[int]) -> Tuple[int, List[List[int]]]:
    """Smallest of the first five usable primes with the fewest modular factors."""
    best = None
    found = 0
    p = 1
    while found < 5:
        p += 1
        while not is_prime(p):
            p += 1
        if coeffs[-1] % p == 0:
            continue
        fp = PrimePoly(p, coeffs)
        dfp = PrimePoly(p, [i * c for i, c in enumerate(coeffs)][1:])
        if _gcd_deg(fp, dfp) != 0:
            continue
        factors = [list(g.coeffs) for g, _ in factor_mod_p(fp)]
        found += 1
        if best is None or len(factors) < len(best[1]):
            best = (p, factors)
        if len(factors) == 1:
            break
    return best


def _gcd_deg(a: PrimePoly, b: PrimePoly) -> int:
    p = a.modulus
    x, y = list(a.coeffs), list(b.coeffs)
    while y:
        inv = pow(y[-1], p - 2, p)
        q, _ = _zdivmod_monic([c * inv % p for c in x], [c * inv % p for c in y], p)
        x, y = y, _zsub(x, _zmul(q, y, p), p)
    return len(x) - 1


def _factor_squarefree_monic_int(coeffs: List[int]) -> List[List[int]]:
    """Monic squarefree integer polynomial -> monic integer irreducible factors."""
    n = len(coeffs) - 1
    if n <= 1:
        return [list(coeffs)]
    p, mod_factors = _good_prime(coeffs)
    if len(mod_factors) == 1:
        return [list(coeffs)]
    # Mignotte: factor coefficients bounded by 2^n * l2norm(f)
    norm = math.isqrt(sum(c * c for c in coeffs)) + 1
    bound = 2 * (norm << n) + 1
    tree = _build_tree(mod_factors, p)
    m = p
    while m < bound:
        _lift_tree(tree, [c % (m * m) for c in coeffs], m)
        m *= m
    lifted: List[List[int]] = []
    _leaves(tree, lifted)
    # recombination over subsets of lifted factors, smallest first
    remaining = list(range(len(lifted)))
    result: List[List[int]] = []
    current = list(coeffs)
    k = 1
    while 2 * k <= len(remaining):
        merged = False
        for subset in itertools.combinations(remaining, k):
            cand = _prod_mod([lifted[i] for i in subset], m)
            cand = [_balanced(c, m) for c in cand]
            q, r = _int_divmod_monic(current, cand)
            if not r:
                result.append(cand)
                current = q
                remaining = [i for i in remaining if i not in subset]
                merged = True
                break
        if not merged:
            k += 1
    if len(current) > 1:
        result.append(current)
    return result


def factor_over_Q(f: RationalPoly) -> Tuple[Fraction, List[Tuple[RationalPoly, int]]]:
    """Returns (content, [(monic irreducible factor, multiplicity)...]) with
    content * product(factor^multiplicity) == f exactly. Factors are sorted by
    degree, then by ascending coefficient tuple."""
    if f.deg() < 0:
        raise ValueError("cannot factor the zero polynomial")
    if f.deg() == 0:
        return f.coeffs[0], []
    content, prim = f.primitive()
    lc = prim.lc()
    content *= lc
    monic = prim.monic()
    out: List[Tuple[RationalPoly, int]] = []
    for part, mult in _yun_squarefree(monic):
        _, ipart = part.primitive()
        plc = int(ipart.lc())
        icoeffs = [int(c) for c in ipart.coeffs]
        if plc == 1:
            work = icoeffs
            scale = 1
        else:
            # monicize: G(y) = lc^(n-1) F(y/lc), monic integer in y
            n = len(icoeffs) - 1
            work = [icoeffs[i] * plc ** (n - 1 - i) for i in range(n)] + [1]
            scale = plc
        for g in _factor_squarefree_monic_int(work):
            if scale == 1:
                fac = RationalPoly(g)
            else:
                d = len(g) - 1
                fac = RationalPoly([Fraction(g[i], scale ** (d - i))
                                    for i in range(d + 1)])
            out.append((fac, mult))
    out.sort(key=lambda gm: (gm[0].deg(), gm[0].coeffs))
    return content, out
