# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled crossing-count kernel; see _kernels_py for the reference
implementation and semantics."""

from libc.stdlib cimport malloc, free


def count_inversions(values):
    """Number of index pairs i < j with values[i] > values[j] (strict)."""
    cdef Py_ssize_t n = len(values)
    if n < 2:
        return 0
    cdef long long *buf = <long long *> malloc(n * sizeof(long long))
    cdef long long *tmp = <long long *> malloc(n * sizeof(long long))
    if buf == NULL or tmp == NULL:
        if buf != NULL:
            free(buf)
        if tmp != NULL:
            free(tmp)
        raise MemoryError()
    cdef Py_ssize_t idx
    for idx in range(n):
        buf[idx] = values[idx]

    cdef unsigned long long total = 0
    cdef Py_ssize_t width = 1, lo, mid, hi, i, j, t
    while width < n:
        lo = 0
        while lo < n - width:
            mid = lo + width
            hi = lo + 2 * width
            if hi > n:
                hi = n
            i = lo
            j = mid
            t = lo
            while i < mid and j < hi:
                if buf[i] <= buf[j]:
                    tmp[t] = buf[i]
                    i += 1
                else:
                    tmp[t] = buf[j]
                    j += 1
                    total += <unsigned long long> (mid - i)
                t += 1
            while i < mid:
                tmp[t] = buf[i]
                i += 1
                t += 1
            while j < hi:
                tmp[t] = buf[j]
                j += 1
                t += 1
            for t in range(lo, hi):
                buf[t] = tmp[t]
            lo += 2 * width
        width *= 2

    free(buf)
    free(tmp)
    return total
