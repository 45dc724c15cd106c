# cython: language_level=3, boundscheck=False, wraparound=False
# distutils: language = c++
"""Compiled elimination kernels (int64 fast path).

Same contract as ``_pure``: unit-pivot integer diagonalization and Z/2 rank.
Entry values are processed as C int64; any value or intermediate that could
leave the safe range raises OverflowError, and callers fall back to the
pure-Python big-integer kernel.
"""

from cython.operator cimport dereference, preincrement
from libcpp.pair cimport pair
from libcpp.queue cimport priority_queue
from libcpp.unordered_map cimport unordered_map
from libcpp.unordered_set cimport unordered_set
from libcpp.vector cimport vector

cdef extern from *:
    int __builtin_ctzll(unsigned long long)

ctypedef long long i64
ctypedef unsigned long long u64
ctypedef unordered_map[int, i64] Row

# |multiplicands| kept below 2^31 and |accumulated values| below 2^61, so
# every intermediate fits in int64.
cdef i64 LIM_MUL = <i64>1 << 31
cdef i64 LIM_ADD = <i64>1 << 61

cdef inline i64 _abs64(i64 x):
    return -x if x < 0 else x


def eliminate_unit_pivots(int n_rows, int n_cols, entries):
    """Compiled twin of ``_pure.eliminate_unit_pivots``."""
    cdef vector[Row] rows = vector[Row](n_rows)
    cdef vector[unordered_set[int]] col_rows = vector[unordered_set[int]](n_cols)
    cdef vector[char] live = vector[char](n_rows, 0)
    cdef int r, c, r2, cc
    cdef i64 v, q, vv, nv, cost, cur
    cdef Row.iterator it

    for item in sorted(entries):
        r = item[0]
        c = item[1]
        v = item[2]
        if r < 0 or r >= n_rows or c < 0 or c >= n_cols:
            raise ValueError(f"entry ({r}, {c}) outside a {n_rows} x {n_cols} matrix")
        if v == 0:
            continue
        if _abs64(v) > LIM_ADD:
            raise OverflowError("input entry too large for the compiled kernel")
        nv = rows[r][c] + v
        if nv != 0:
            rows[r][c] = nv
            col_rows[c].insert(r)
            live[r] = 1
        else:
            rows[r].erase(c)
            col_rows[c].erase(r)

    # Min-heap by (cost, row, col) via a negated max-heap.
    cdef priority_queue[pair[i64, pair[int, int]]] heap
    cdef pair[i64, pair[int, int]] top

    for r in range(n_rows):
        if live[r] and rows[r].size() > 0:
            _push_units(rows, col_rows, heap, r)

    cdef int unit_count = 0
    cdef Row pivot_row
    cdef vector[int] touched
    cdef size_t k
    while heap.size() > 0:
        top = heap.top()
        heap.pop()
        cost = -top.first
        r = -top.second.first
        c = -top.second.second
        if not live[r]:
            continue
        it = rows[r].find(c)
        if it == rows[r].end():
            continue
        v = dereference(it).second
        if v != 1 and v != -1:
            continue
        cur = (<i64>rows[r].size() - 1) * (<i64>col_rows[c].size() - 1)
        if cur > cost:
            top.first = -cur
            heap.push(top)
            continue
        unit_count += 1
        pivot_row = rows[r]
        live[r] = 0
        rows[r].clear()
        it = pivot_row.begin()
        while it != pivot_row.end():
            col_rows[dereference(it).first].erase(r)
            preincrement(it)

        touched.clear()
        for r2 in col_rows[c]:
            touched.push_back(r2)
        # sorted for a deterministic elimination order
        _sort_ints(touched)
        for k in range(touched.size()):
            r2 = touched[k]
            q = rows[r2][c] * v
            if _abs64(q) > LIM_MUL:
                raise OverflowError("pivot multiplier out of range")
            it = pivot_row.begin()
            while it != pivot_row.end():
                cc = dereference(it).first
                vv = dereference(it).second
                preincrement(it)
                if _abs64(vv) > LIM_MUL:
                    raise OverflowError("pivot entry out of range")
                nv = rows[r2][cc]
                if _abs64(nv) > LIM_ADD:
                    raise OverflowError("matrix entry out of range")
                nv = nv - q * vv
                if nv != 0:
                    rows[r2][cc] = nv
                    col_rows[cc].insert(r2)
                else:
                    rows[r2].erase(cc)
                    col_rows[cc].erase(r2)
            if rows[r2].size() > 0:
                _push_units(rows, col_rows, heap, r2)
            else:
                live[r2] = 0
        col_rows[c].clear()

    residual = []
    for r in range(n_rows):
        if live[r]:
            it = rows[r].begin()
            while it != rows[r].end():
                residual.append((r, dereference(it).first, dereference(it).second))
                preincrement(it)
    residual.sort()
    return unit_count, residual


cdef void _push_units(vector[Row]& rows, vector[unordered_set[int]]& col_rows,
                      priority_queue[pair[i64, pair[int, int]]]& heap, int r):
    cdef Row.iterator it = rows[r].begin()
    cdef i64 rlen = <i64>rows[r].size() - 1
    cdef i64 v
    cdef int c
    cdef pair[i64, pair[int, int]] item
    while it != rows[r].end():
        c = dereference(it).first
        v = dereference(it).second
        preincrement(it)
        if v == 1 or v == -1:
            item.first = -rlen * (<i64>col_rows[c].size() - 1)
            item.second.first = -r
            item.second.second = -c
            heap.push(item)


cdef void _sort_ints(vector[int]& xs):
    cdef size_t i, j
    cdef int tmp
    # insertion sort: touched-row lists are short
    for i in range(1, xs.size()):
        tmp = xs[i]
        j = i
        while j > 0 and xs[j - 1] > tmp:
            xs[j] = xs[j - 1]
            j -= 1
        xs[j] = tmp


def rank_mod2(int n_rows, int n_cols, entries):
    """Compiled twin of ``_pure.rank_mod2``: dense packed-word elimination."""
    cdef int words = (n_cols + 63) >> 6
    if words == 0:
        words = 1
    if <long long>n_rows * words > 200_000_000:
        raise MemoryError("matrix too large for the dense mod-2 kernel")
    cdef vector[vector[u64]] packed = vector[vector[u64]](n_rows)
    cdef vector[char] used = vector[char](n_rows, 0)
    cdef int r, c
    for item in entries:
        r = item[0]
        c = item[1]
        if r < 0 or r >= n_rows or c < 0 or c >= n_cols:
            raise ValueError(f"entry ({r}, {c}) outside a {n_rows} x {n_cols} matrix")
        if item[2] & 1:
            if not used[r]:
                packed[r] = vector[u64](words, 0)
                used[r] = 1
            packed[r][c >> 6] ^= (<u64>1) << (c & 63)

    cdef vector[vector[u64]] pivots
    cdef vector[int] pivot_for_col = vector[int](n_cols if n_cols else 1, -1)
    cdef int rank = 0
    cdef int w, col, t
    for r in range(n_rows):
        if not used[r]:
            continue
        while True:
            col = -1
            for w in range(words):
                if packed[r][w] != 0:
                    col = (w << 6) + __builtin_ctzll(packed[r][w])
                    break
            if col < 0:
                break
            t = pivot_for_col[col]
            if t < 0:
                pivot_for_col[col] = <int>pivots.size()
                pivots.push_back(packed[r])
                rank += 1
                break
            for w in range(words):
                packed[r][w] ^= pivots[t][w]
    return rank
