# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled F2 kernels on uint64 limbs; mirrors _f2pure function for
function, including output order."""

from libc.stdint cimport uint64_t
from libc.stdlib cimport calloc, malloc, free

__all__ = ["rank_rows", "kernel_rows", "poly_gcd"]

cdef extern from *:
    int __builtin_clzll(unsigned long long) nogil


cdef inline long _bitlen(uint64_t* a, long nw) nogil:
    cdef long w = nw - 1
    while w >= 0 and a[w] == 0:
        w -= 1
    if w < 0:
        return 0
    return w * 64 + 64 - __builtin_clzll(a[w])


cdef void _pack(object value, uint64_t* dst, long nw):
    cdef long w = 0
    cdef object v = value
    while v and w < nw:
        dst[w] = <uint64_t> (v & 0xFFFFFFFFFFFFFFFF)
        v >>= 64
        w += 1


cdef object _unpack(uint64_t* src, long nw):
    cdef long w
    out = 0
    for w in range(nw - 1, -1, -1):
        out = (out << 64) | src[w]
    return out


def poly_gcd(a, b):
    """gcd of polynomials over F2 packed as ints."""
    if a == 0:
        return b
    if b == 0:
        return a
    cdef long nbits = max(a.bit_length(), b.bit_length())
    cdef long nw = (nbits + 63) // 64 + 1
    cdef uint64_t* A = <uint64_t*> calloc(nw, 8)
    cdef uint64_t* B = <uint64_t*> calloc(nw, 8)
    if A == NULL or B == NULL:
        free(A)
        free(B)
        raise MemoryError
    _pack(a, A, nw)
    _pack(b, B, nw)
    cdef long da = _bitlen(A, nw) - 1
    cdef long db = _bitlen(B, nw) - 1
    cdef uint64_t* T
    cdef long sh, sw, sb, w, lo, hi, t
    cdef uint64_t v
    with nogil:
        while db >= 0:
            while da >= db:
                sh = da - db
                sw = sh >> 6
                sb = sh & 63
                lo = sw
                hi = db // 64 + sw + 1
                if hi > nw - 1:
                    hi = nw - 1
                if sb == 0:
                    for w in range(hi, lo - 1, -1):
                        if w - sw <= db // 64:
                            A[w] ^= B[w - sw]
                else:
                    for w in range(hi, lo - 1, -1):
                        v = 0
                        if w - sw <= db // 64:
                            v = B[w - sw] << sb
                        if w - sw - 1 >= 0:
                            v |= B[w - sw - 1] >> (64 - sb)
                        A[w] ^= v
                # degree strictly dropped; rescan downward
                t = da // 64
                if t > nw - 1:
                    t = nw - 1
                da = _bitlen(A, t + 1) - 1
            T = A
            A = B
            B = T
            t = da
            da = db
            db = t
    result = _unpack(A, nw)
    free(A)
    free(B)
    return result


def rank_rows(rows, cols):
    cdef long n = len(rows)
    if n == 0 or cols == 0:
        return 0
    cdef long nw = (cols + 63) // 64
    cdef uint64_t* buf = <uint64_t*> calloc(n * nw, 8)
    cdef long* piv = <long*> malloc(cols * sizeof(long))
    if buf == NULL or piv == NULL:
        free(buf)
        free(piv)
        raise MemoryError
    cdef long i, w, d, j, rk
    for i in range(cols):
        piv[i] = -1
    for i in range(n):
        _pack(rows[i], buf + i * nw, nw)
    rk = 0
    with nogil:
        for i in range(n):
            while True:
                d = _bitlen(buf + i * nw, nw) - 1
                if d < 0:
                    break
                j = piv[d]
                if j < 0:
                    piv[d] = i
                    rk += 1
                    break
                for w in range(nw):
                    buf[i * nw + w] ^= buf[j * nw + w]
    free(buf)
    free(piv)
    return rk


def kernel_rows(rows, cols):
    cdef long n = len(rows)
    cdef long ncols = cols
    out = []
    if ncols == 0:
        return out
    cdef long nw = (ncols + 63) // 64
    cdef long ncw = (n + 63) // 64
    if ncw == 0:
        ncw = 1
    cdef long tw = (ncols + 63) // 64
    cdef uint64_t* rowbuf = <uint64_t*> calloc((n if n else 1) * nw, 8)
    cdef uint64_t* colbuf = <uint64_t*> calloc(ncols * ncw, 8)
    cdef uint64_t* trbuf = <uint64_t*> calloc(ncols * tw, 8)
    cdef long* piv = <long*> malloc((n if n else 1) * sizeof(long))
    if rowbuf == NULL or colbuf == NULL or trbuf == NULL or piv == NULL:
        free(rowbuf)
        free(colbuf)
        free(trbuf)
        free(piv)
        raise MemoryError
    cdef long i, j, w, d, k
    for i in range(n):
        _pack(rows[i], rowbuf + i * nw, nw)
        piv[i] = -1
    for j in range(ncols):
        for i in range(n):
            if (rowbuf[i * nw + (j >> 6)] >> (j & 63)) & 1:
                colbuf[j * ncw + (i >> 6)] |= (<uint64_t> 1) << (i & 63)
        trbuf[j * tw + (j >> 6)] |= (<uint64_t> 1) << (j & 63)
    for j in range(ncols):
        while True:
            d = _bitlen(colbuf + j * ncw, ncw) - 1
            if d < 0:
                out.append(_unpack(trbuf + j * tw, tw))
                break
            k = piv[d]
            if k < 0:
                piv[d] = j
                break
            for w in range(ncw):
                colbuf[j * ncw + w] ^= colbuf[k * ncw + w]
            for w in range(tw):
                trbuf[j * tw + w] ^= trbuf[k * tw + w]
    free(rowbuf)
    free(colbuf)
    free(trbuf)
    free(piv)
    return out
