"""Signature data for the canonical unit of L = Q(zeta_q)+, q = 2p+1.

For a Sophie Germain pair (p, q) the unit is u = (-1)^((p-1)/2) * theta,
where theta = (-1)^((p-1)/2) (zeta + zeta^-1) generates the field; that is,
u = -(zeta+zeta^-1) when p = 1 mod 4 and +(zeta+zeta^-1) when p = 3 mod 4,
so that u has norm +1. Under the ascending ordering r_1 < ... < r_p of the
conjugates of u, its sign vector has a fixed prefix of -1 entries, and the
Galois action sigma permutes conjugates by the doubling permutation phi.

The sign matrix M_infty has entry (i, j) = psi(sign of tau_i(sigma^j u)),
j = 0..p-2, with psi(-1) = 1. Because phi is a p-cycle, the rows of the
full p x p version are rotations of a single orbit word w, so

    rank(M_infty) = p - deg gcd(w(x), x^p - 1)   over F2,

and the norm-1 relation makes the omitted column the sum of the kept ones.
The certificate d_infty = p - 1 holds exactly when the gcd is x + 1. Both
the gcd route and direct packed elimination are implemented and must agree.
"""

from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass
from typing import List, Tuple

from .arith import is_prime, primes_upto
from .f2 import MatF2, poly_gcd, rank

__all__ = [
    "SophieGermainPair",
    "SignatureVector",
    "DoublingPermutation",
    "RhoInftyCertificate",
    "sophie_germain_pairs",
    "canonical_signature",
    "doubling_permutation",
    "orbit_word",
    "build_M_infty",
    "certify_rho_infty",
    "scan_sophie_germain",
]


@dataclass(frozen=True)
class SophieGermainPair:
    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p < 3 or self.p % 2 == 0 or not is_prime(self.p):
            raise ValueError(f"p must be an odd prime, got {self.p}")
        if self.q != 2 * self.p + 1:
            raise ValueError(f"q must equal 2p+1, got p={self.p}, q={self.q}")
        if not is_prime(self.q):
            raise ValueError(f"q must be prime, got {self.q}")

    @property
    def genus(self) -> int:
        return (self.p - 1) // 2


@dataclass(frozen=True)
class SignatureVector:
    signs: Tuple[int, ...]

    def __post_init__(self) -> None:
        if any(s not in (-1, 1) for s in self.signs):
            raise ValueError("signs must be +1 or -1")

    def psi_bits(self) -> int:
        """psi(-1) = 1, psi(+1) = 0, packed with bit i = entry i."""
        return sum(1 << i for i, s in enumerate(self.signs) if s < 0)


@dataclass(frozen=True)
class DoublingPermutation:
    images: Tuple[int, ...]  # 1-based: images[i-1] = phi(i)

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError("not a permutation of 1..p")


@dataclass(frozen=True)
class RhoInftyCertificate:
    pair: SophieGermainPair
    d_infty: int
    rho_infty_zero: bool


def sophie_germain_pairs(q_max: int) -> List[SophieGermainPair]:
    """All pairs (p, q) with q <= q_max, q = 2p+1, both prime, p odd."""
    if q_max < 7:
        return []
    sieve = set(primes_upto(q_max))
    out = []
    for q in sorted(sieve):
        p = (q - 1) // 2
        if q >= 7 and q % 2 == 1 and p in sieve:
            out.append(SophieGermainPair(p, q))
    return out


def _n_minus(pair: SophieGermainPair) -> int:
    return (pair.p - 1) // 2 if pair.p % 4 == 1 else (pair.p + 1) // 2


def canonical_signature(pair: SophieGermainPair) -> SignatureVector:
    """Sign vector of the canonical norm-one unit at the ascending real
    embeddings: a prefix of -1 entries, (p-1)/2 of them when p = 1 mod 4 and
    (p+1)/2 when p = 3 mod 4."""
    n = _n_minus(pair)
    return SignatureVector((-1,) * n + (1,) * (pair.p - n))


def doubling_permutation(pair: SophieGermainPair) -> DoublingPermutation:
    """phi with tau_i(sigma(u)) = r_phi(i), sigma(zeta+zeta^-1) = zeta^2+zeta^-2."""
    p, q = pair.p, pair.q
    images = []
    for i in range(1, p + 1):
        if p % 4 == 1:
            t = 2 * i % q
            images.append(min(t, q - t))
        else:
            t = 2 * (p + 1 - i) % q
            images.append(p + 1 - min(t, q - t))
    return DoublingPermutation(tuple(images))


def orbit_word(pair: SophieGermainPair) -> int:
    """The length-p word w with w_k = psi(epsilon at phi^k of a fixed start
    index), packed with bit k = w_k. Rows of the full circulant sign matrix
    are rotations of w; any start index gives the same gcd with x^p - 1."""
    p, q = pair.p, pair.q
    n = _n_minus(pair)
    buf = bytearray((p + 7) // 8)
    t = 1
    if p % 4 == 1:
        for k in range(p):
            if min(t, q - t) <= n:
                buf[k >> 3] |= 1 << (k & 7)
            t = 2 * t % q
    else:
        for k in range(p):
            if p + 1 - min(t, q - t) <= n:
                buf[k >> 3] |= 1 << (k & 7)
            t = 2 * t % q
    return int.from_bytes(bytes(buf), "little")


def build_M_infty(pair: SophieGermainPair) -> MatF2:
    """p x (p-1) matrix with entry (i, j) = psi(epsilon_{phi^j(i)})."""
    p = pair.p
    f = canonical_signature(pair).psi_bits()
    images = doubling_permutation(pair).images
    rows = [0] * p
    idx = list(range(1, p + 1))  # idx[i-1] = phi^j(i)
    for j in range(p - 1):
        for i in range(p):
            if (f >> (idx[i] - 1)) & 1:
                rows[i] |= 1 << j
        idx = [images[k - 1] for k in idx]
    return MatF2(p, p - 1, tuple(rows))


def certify_rho_infty(pair: SophieGermainPair, method: str = "gcd") -> RhoInftyCertificate:
    """d_infty = rank of the sign matrix; rho_infty = 0 iff d_infty = p-1.

    method="gcd" exploits the circulant structure: d = p - deg gcd(w, x^p-1).
    method="matrix" runs packed elimination on the assembled matrix."""
    if method == "gcd":
        g = poly_gcd(orbit_word(pair), (1 << pair.p) | 1)
        d = pair.p - (g.bit_length() - 1)
    elif method == "matrix":
        d = rank(build_M_infty(pair))
    else:
        raise ValueError(f"unknown method {method!r}")
    return RhoInftyCertificate(pair, d, d == pair.p - 1)


def scan_sophie_germain(q_max: int, threads: int = 1) -> List[RhoInftyCertificate]:
    """Certify every pair with q <= q_max; output sorted by q regardless of
    thread count."""
    pairs = sophie_germain_pairs(q_max)
    if threads <= 1 or len(pairs) < 2:
        return [certify_rho_infty(pr) for pr in pairs]
    with concurrent.futures.ThreadPoolExecutor(max_workers=threads) as pool:
        certs = list(pool.map(certify_rho_infty, pairs))
    certs.sort(key=lambda c: c.pair.q)
    return certs
