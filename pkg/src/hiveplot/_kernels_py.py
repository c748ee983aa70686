"""Pure-Python crossing-count kernel, fallback for the compiled extension.

Both backends expose ``count_inversions(values)``: the number of index
pairs i < j with values[i] > values[j] (strict).  Crossing counting reduces
to this after sorting edge endpoint positions on one axis.
"""

from __future__ import annotations


def count_inversions(values: list[int]) -> int:
    """Merge-sort inversion count; strict comparisons, ties contribute 0."""
    n = len(values)
    if n < 2:
        return 0
    buf = list(values)
    tmp = [0] * n
    total = 0
    width = 1
    while width < n:
        for lo in range(0, n - width, 2 * width):
            mid = lo + width
            hi = min(lo + 2 * width, n)
            i, j, t = lo, mid, lo
            while i < mid and j < hi:
                if buf[i] <= buf[j]:
                    tmp[t] = buf[i]
                    i += 1
                else:
                    tmp[t] = buf[j]
                    j += 1
                    total += mid - i
                t += 1
            while i < mid:
                tmp[t] = buf[i]
                i += 1
                t += 1
            while j < hi:
                tmp[t] = buf[j]
                j += 1
                t += 1
            buf[lo:hi] = tmp[lo:hi]
        width *= 2
    return total
