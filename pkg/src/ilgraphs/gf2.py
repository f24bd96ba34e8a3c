"""Gaussian elimination over GF(2) on bit-packed rows.

Rows are Python integers (bit ``j`` = column ``j``). Elimination is
incremental: each row is reduced against the pivots found so far, pivoting
on its lowest set column. Every stored pivot carries the set of input rows
it is the sum of, so an inconsistent row yields an explicit left-null
combination ``0 = 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class Gf2Result:
    consistent: bool
    solution: int | None = None      # bitmask over columns
    combination: int | None = None   # bitmask over rows summing to 0 = 1
    rank: int = 0


def solve_gf2(rows: Sequence[int], rhs: Sequence[int], ncols: int) -> Gf2Result:
    """Solve ``A x = b``; ``rows[i]`` is row ``i`` of ``A``, ``rhs[i]`` its bit."""
    pivots: dict[int, tuple[int, int, int]] = {}
    for i, (r, b) in enumerate(zip(rows, rhs)):
        b &= 1
        combo = 1 << i
        while r:
            col = (r & -r).bit_length() - 1
            piv = pivots.get(col)
            if piv is None:
                pivots[col] = (r, b, combo)
                break
            r ^= piv[0]
            b ^= piv[1]
            combo ^= piv[2]
        if not r and b:
            return Gf2Result(False, combination=combo, rank=len(pivots))
    x = 0
    for col in sorted(pivots, reverse=True):
        r, b, _ = pivots[col]
        rest = r & ~(1 << col)
        if b ^ ((rest & x).bit_count() & 1):
            x |= 1 << col
    if x >> ncols:
        raise ValueError("row bits beyond ncols")
    return Gf2Result(True, solution=x, rank=len(pivots))


def bits_to_list(x: int, n: int) -> list[int]:
    return [(x >> j) & 1 for j in range(n)]


def list_to_bits(bits: Sequence[int]) -> int:
    x = 0
    for j, b in enumerate(bits):
        if b & 1:
            x |= 1 << j
    return x
