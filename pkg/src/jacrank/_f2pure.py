"""Pure-Python F2 kernels on int bitsets.

Rows and polynomials are Python ints, bit i = column i (or coefficient of
x^i). The compiled backend mirrors this module function for function and
must produce identical outputs, including kernel basis order.
"""

from __future__ import annotations

from typing import List

__all__ = ["rank_rows", "kernel_rows", "poly_gcd"]


def rank_rows(rows: List[int], cols: int) -> int:
    pivots = {}
    rk = 0
    for row in rows:
        cur = row
        while cur:
            m = cur.bit_length() - 1
            if m in pivots:
                cur ^= pivots[m]
            else:
                pivots[m] = cur
                rk += 1
                break
    return rk


def kernel_rows(rows: List[int], cols: int) -> List[int]:
    """Basis of {x : every row r has parity(r & x) = 0}, one int per vector.

    Columns are eliminated left to right; each dependent column emits the
    accumulated combination, so the order is deterministic."""
    n = len(rows)
    pivots = {}
    out: List[int] = []
    for j in range(cols):
        cur = 0
        for i in range(n):
            cur |= ((rows[i] >> j) & 1) << i
        tracker = 1 << j
        while cur:
            m = cur.bit_length() - 1
            if m in pivots:
                pc, pt = pivots[m]
                cur ^= pc
                tracker ^= pt
            else:
                pivots[m] = (cur, tracker)
                break
        if cur == 0:
            out.append(tracker)
    return out


def poly_gcd(a: int, b: int) -> int:
    """gcd of polynomials over F2 packed as ints."""
    while b:
        db = b.bit_length() - 1
        while a:
            da = a.bit_length() - 1
            if da < db:
                break
            a ^= b << (da - db)
        a, b = b, a
    return a
