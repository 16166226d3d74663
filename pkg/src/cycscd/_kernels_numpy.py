"""Pure-numpy fallback kernels.

Same contracts as ``_kernels_numba``; used when numba is unavailable or when
``SCD_NO_NUMBA`` is set.  Vectorized over rotation comparisons, chunked to
bound memory at O(chunk * n).
"""

import numpy as np

from .errors import SizeLimitExceeded

_CHUNK_CELLS = 1 << 22  # budget for the (rows, n, n)-shaped rotation scans


def _chunk_rows(n):
    return max(1, _CHUNK_CELLS // max(1, n * n))


def _least_rotations_block(block):
    m, n = block.shape
    doubled = np.concatenate([block, block], axis=1)
    big = np.iinfo(np.int64).max
    cand = np.ones((m, n), dtype=bool)
    for j in range(n):
        # value of rotation s at position j is doubled[:, s + j]
        vals = doubled[:, j:j + n]
        masked = np.where(cand, vals, big)
        vmin = masked.min(axis=1, keepdims=True)
        cand &= vals == vmin
    # surviving candidates are exactly the minimal rotations; first wins
    return cand.argmax(axis=1).astype(np.int64)


def least_rotations(words):
    """Per row: least start index s such that row[s:]+row[:s] is lex-minimal."""
    m, n = words.shape
    out = np.empty(m, dtype=np.int64)
    step = _chunk_rows(n)
    for lo in range(0, m, step):
        hi = min(m, lo + step)
        out[lo:hi] = _least_rotations_block(words[lo:hi])
    return out


def row_periods(words):
    """Per row: least p dividing the length with rotation-by-p fixing the row."""
    m, n = words.shape
    out = np.full(m, n, dtype=np.int64)
    open_rows = np.arange(m)
    for p in range(1, n):
        if n % p != 0 or open_rows.size == 0:
            continue
        sub = words[open_rows]
        eq = (sub == np.roll(sub, -p, axis=1)).all(axis=1)
        out[open_rows[eq]] = p
        open_rows = open_rows[~eq]
    return out


def necklace_words(n, k, cap):
    """All canonical k-ary necklaces of length n, lex ascending, by filtering
    the full k**n enumeration down to self-canonical rows."""
    total = k ** n
    if total > cap * n:
        # every orbit has at most n words, so the orbit count already exceeds cap
        raise SizeLimitExceeded(f"more than {cap} necklaces for k={k}, n={n}")
    keep = []
    count = 0
    step = _chunk_rows(n)
    for lo in range(0, total, step):
        hi = min(total, lo + step)
        ids = np.arange(lo, hi, dtype=np.int64)
        block = np.empty((hi - lo, n), dtype=np.int64)
        for col in range(n - 1, -1, -1):
            block[:, col] = ids % k
            ids //= k
        mask = _least_rotations_block(block) == 0
        count += int(mask.sum())
        if count > cap:
            raise SizeLimitExceeded(f"more than {cap} necklaces for k={k}, n={n}")
        keep.append(block[mask])
    return np.concatenate(keep) if keep else np.empty((0, n), dtype=np.int64)
