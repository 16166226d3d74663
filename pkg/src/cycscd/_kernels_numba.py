"""Numba-compiled array kernels.

Semantics must match ``_kernels_numpy`` exactly; the test suite compares the
two backends row for row.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def _rot_period(row):
    # least p dividing n with row == row shifted left by p
    n = row.shape[0]
    for p in range(1, n + 1):
        if n % p != 0:
            continue
        ok = True
        for i in range(n):
            if row[i] != row[(i + p) % n]:
                ok = False
                break
        if ok:
            return p
    return n


@njit(cache=True)
def _booth(row, f):
    # Booth's least-rotation scan over the doubled word.
    n = row.shape[0]
    n2 = 2 * n
    for j in range(n2):
        f[j] = -1
    k = 0
    for j in range(1, n2):
        sj = row[j % n]
        i = f[j - k - 1]
        while i != -1 and sj != row[(k + i + 1) % n]:
            if sj < row[(k + i + 1) % n]:
                k = j - i - 1
            i = f[i]
        if sj != row[(k + i + 1) % n]:
            if sj < row[k % n]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k % n


@njit(cache=True)
def least_rotations(words):
    """Per row: least start index s such that row[s:]+row[:s] is lex-minimal."""
    m, n = words.shape
    out = np.empty(m, np.int64)
    f = np.empty(2 * n, np.int64)
    for r in range(m):
        row = words[r]
        k = _booth(row, f)
        # shifts yielding the minimal rotation form a coset of the period
        # subgroup, so reducing mod the period gives the least one
        out[r] = k % _rot_period(row)
    return out


@njit(cache=True)
def row_periods(words):
    """Per row: least p dividing the length with rotation-by-p fixing the row."""
    m = words.shape[0]
    out = np.empty(m, np.int64)
    for r in range(m):
        out[r] = _rot_period(words[r])
    return out


@njit(cache=True)
def _fkm_count(n, k):
    a = np.zeros(n + 1, np.int64)
    count = 1
    while True:
        i = n
        while i > 0 and a[i] == k - 1:
            i -= 1
        if i == 0:
            break
        a[i] += 1
        for j in range(i + 1, n + 1):
            a[j] = a[j - i]
        if n % i == 0:
            count += 1
    return count


@njit(cache=True)
def _fkm_fill(n, k, out):
    a = np.zeros(n + 1, np.int64)
    for j in range(n):
        out[0, j] = 0
    count = 1
    while True:
        i = n
        while i > 0 and a[i] == k - 1:
            i -= 1
        if i == 0:
            break
        a[i] += 1
        for j in range(i + 1, n + 1):
            a[j] = a[j - i]
        if n % i == 0:
            for j in range(n):
                out[count, j] = a[j + 1]
            count += 1
    return count


def necklace_words(n, k, cap):
    """All canonical k-ary necklaces of length n, lex ascending, via the
    classic prenecklace successor walk."""
    from .errors import SizeLimitExceeded

    count = _fkm_count(n, k)
    if count > cap:
        raise SizeLimitExceeded(f"{count} necklaces exceeds cap {cap}")
    out = np.empty((count, n), np.int64)
    filled = _fkm_fill(n, k, out)
    assert filled == count
    return out
