"""Dense bit-packed linear algebra over F2.

Matrices are immutable; elimination always works on copies, so values can be
shared freely across threads. The heavy kernels live in a compiled extension
when available, with a pure-Python fallback selected at import time; set
JACRANK_F2_BACKEND=pure or =compiled to force one.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

__all__ = ["MatF2", "VecF2", "rank", "kernel_basis", "span_dimension",
           "poly_gcd", "backend_name"]

_choice = os.environ.get("JACRANK_F2_BACKEND", "")
if _choice == "pure":
    from . import _f2pure as _kern
    _NAME = "pure"
elif _choice == "compiled":
    from . import _f2core as _kern  # type: ignore[attr-defined]
    _NAME = "compiled"
elif _choice == "":
    try:
        from . import _f2core as _kern  # type: ignore[attr-defined]
        _NAME = "compiled"
    except ImportError:
        from . import _f2pure as _kern
        _NAME = "pure"
else:
    raise ImportError(f"JACRANK_F2_BACKEND must be 'pure' or 'compiled', got {_choice!r}")


def backend_name() -> str:
    return _NAME


@dataclass(frozen=True)
class VecF2:
    length: int
    bits: int

    def __post_init__(self) -> None:
        if self.length < 0 or not 0 <= self.bits < (1 << self.length):
            raise ValueError("bits exceed vector length")

    @classmethod
    def from_bits(cls, entries: Iterable[int]) -> "VecF2":
        es = [int(bool(e)) for e in entries]
        return cls(len(es), sum(b << i for i, b in enumerate(es)))

    def to_bits(self) -> Tuple[int, ...]:
        return tuple((self.bits >> i) & 1 for i in range(self.length))


@dataclass(frozen=True)
class MatF2:
    rows: int
    cols: int
    bits: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.bits) != self.rows:
            raise ValueError("bit storage length does not match row count")
        for r in self.bits:
            if not 0 <= r < (1 << self.cols):
                raise ValueError("row value exceeds column width")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "MatF2":
        packed = []
        cols = None
        for row in rows:
            es = [int(bool(e)) for e in row]
            if cols is None:
                cols = len(es)
            elif len(es) != cols:
                raise ValueError("ragged rows")
            packed.append(sum(b << i for i, b in enumerate(es)))
        return cls(len(packed), cols or 0, tuple(packed))

    @classmethod
    def identity(cls, n: int) -> "MatF2":
        return cls(n, n, tuple(1 << i for i in range(n)))

    def row(self, i: int) -> VecF2:
        return VecF2(self.cols, self.bits[i])


def rank(m: MatF2) -> int:
    return _kern.rank_rows(list(m.bits), m.cols)


def kernel_basis(m: MatF2) -> Tuple[VecF2, ...]:
    return tuple(VecF2(m.cols, v) for v in _kern.kernel_rows(list(m.bits), m.cols))


def span_dimension(vectors: Sequence[VecF2]) -> int:
    vs = list(vectors)
    if not vs:
        return 0
    n = vs[0].length
    if any(v.length != n for v in vs):
        raise ValueError("vectors have mismatched lengths")
    return _kern.rank_rows([v.bits for v in vs], n)


def poly_gcd(a: int, b: int) -> int:
    """gcd of polynomials over F2, coefficients packed into int bits."""
    if a < 0 or b < 0:
        raise ValueError("packed polynomials must be nonnegative")
    return _kern.poly_gcd(a, b)
