"""Pure-Python elimination kernels.

These are the hot loops of the exact homology solver: partial integer
diagonalization by unit pivots, and Gaussian elimination rank over Z/2.
The compiled twin in ``_speedups`` implements the same contract.
"""

from __future__ import annotations

from heapq import heappop, heappush
from typing import Iterable, Sequence


def eliminate_unit_pivots(
    n_rows: int, n_cols: int, entries: Sequence[tuple[int, int, int]]
) -> tuple[int, list[tuple[int, int, int]]]:
    """Diagonalize away every +-1 pivot of a sparse integer matrix.

    Pivots are chosen by the Markowitz fill estimate
    (row_nonzeros - 1) * (col_nonzeros - 1), smallest first.  Each pivot
    contributes one unit invariant factor and its row and column are removed;
    a column operation clearing the pivot row would touch nothing else, so
    removal is sound.  Returns ``(unit_count, residual)`` where ``residual``
    lists the surviving entries (no +-1 values) with their original indices;
    the Smith normal form of the input is ``[1] * unit_count`` followed by
    the Smith normal form of the residual.
    """
    rows: dict[int, dict[int, int]] = {}
    col_rows: dict[int, set[int]] = {}
    for r, c, v in sorted(entries):
        if not 0 <= r < n_rows or not 0 <= c < n_cols:
            raise ValueError(f"entry ({r}, {c}) outside a {n_rows} x {n_cols} matrix")
        if not v:
            continue
        row = rows.setdefault(r, {})
        nv = row.get(c, 0) + v
        if nv:
            row[c] = nv
            col_rows.setdefault(c, set()).add(r)
        elif c in row:
            del row[c]
            col_rows[c].discard(r)
    for r in [r for r, row in rows.items() if not row]:
        del rows[r]

    heap: list[tuple[int, int, int]] = []

    def push_units(r: int, row: dict[int, int]) -> None:
        rlen = len(row) - 1
        for c, v in row.items():
            if v == 1 or v == -1:
                heappush(heap, (rlen * (len(col_rows[c]) - 1), r, c))

    for r, row in rows.items():
        push_units(r, row)

    unit_count = 0
    while heap:
        cost, r, c = heappop(heap)
        row = rows.get(r)
        if row is None:
            continue
        v = row.get(c, 0)
        if v != 1 and v != -1:
            continue
        current = (len(row) - 1) * (len(col_rows[c]) - 1)
        if current > cost:
            heappush(heap, (current, r, c))  # stale estimate, retry later
            continue
        unit_count += 1
        pivot_row = row
        del rows[r]
        for cc in pivot_row:
            col_rows[cc].discard(r)
        for r2 in sorted(col_rows[c]):
            row2 = rows[r2]
            q = row2[c] * v  # v is +-1, so this is row2[c] / v
            for cc, vv in pivot_row.items():
                nv = row2.get(cc, 0) - q * vv
                if nv:
                    if cc not in row2:
                        col_rows[cc].add(r2)
                    row2[cc] = nv
                else:
                    if cc in row2:
                        del row2[cc]
                        col_rows[cc].discard(r2)
            if row2:
                push_units(r2, row2)
            else:
                del rows[r2]
        del col_rows[c]

    residual = sorted(
        (r, c, v) for r, row in rows.items() for c, v in row.items()
    )
    return unit_count, residual


def rank_mod2(n_rows: int, n_cols: int, entries: Iterable[tuple[int, int, int]]) -> int:
    """Rank over Z/2, with rows packed into Python integers as bit vectors."""
    rows: dict[int, int] = {}
    for r, c, v in entries:
        if not 0 <= r < n_rows or not 0 <= c < n_cols:
            raise ValueError(f"entry ({r}, {c}) outside a {n_rows} x {n_cols} matrix")
        if v & 1:
            rows[r] = rows.get(r, 0) ^ (1 << c)
    pivots: dict[int, int] = {}
    rank = 0
    for r in sorted(rows):
        vec = rows[r]
        while vec:
            low = vec & -vec
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = vec
                rank += 1
                break
            vec ^= piv
    return rank
