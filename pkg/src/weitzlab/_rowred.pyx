# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Fraction-free row reduction, compiled twin of weitzlab._rowred_py.

Entries stay arbitrary-precision Python ints; the win over the pure
version is C-level loop indexing in the elimination triple loop.
"""


def echelonize(list rows, Py_ssize_t pivot_limit):
    """Reduce to row echelon form; returns the list of pivot columns.

    Same contract as the pure twin: pivot search in the first
    pivot_limit columns only, full-width row updates, in-place.
    """
    cdef Py_ssize_t m = len(rows)
    cdef Py_ssize_t r = 0
    cdef Py_ssize_t c, i, j, pr, width
    cdef list pivots = []
    cdef object prev = 1
    cdef list ri, rr
    cdef object piv, vi
    for c in range(pivot_limit):
        if r == m:
            break
        pr = -1
        for i in range(r, m):
            ri = <list>rows[i]
            if ri[c] != 0:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            rows[r], rows[pr] = rows[pr], rows[r]
        rr = <list>rows[r]
        piv = rr[c]
        width = len(rr)
        for i in range(r + 1, m):
            ri = <list>rows[i]
            vi = ri[c]
            for j in range(c + 1, width):
                ri[j] = (piv * <object>ri[j] - vi * <object>rr[j]) // prev
            ri[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return pivots
