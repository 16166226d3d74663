"""Backend dispatch for the bulk word kernels.

The jitted backend is selected at import time; setting the environment
variable ``SCD_NO_NUMBA`` (to anything but ``0``/``false``/``no``) forces the
pure-numpy fallback, as does a failed numba import.  ``set_backend`` allows
explicit switching, used by the benchmark and the backend-equivalence tests.
"""

import os

import numpy as np

from . import _kernels_numpy
from .errors import SizeLimitExceeded

_impl = None
ACTIVE_BACKEND = None


def _numba_disabled_by_env():
    value = os.environ.get("SCD_NO_NUMBA", "").strip().lower()
    return value not in ("", "0", "false", "no")


def set_backend(name):
    """Select the kernel backend: ``"numba"`` or ``"numpy"``."""
    global _impl, ACTIVE_BACKEND
    if name == "numpy":
        _impl = _kernels_numpy
    elif name == "numba":
        from . import _kernels_numba
        _impl = _kernels_numba
    else:
        raise ValueError(f"unknown backend {name!r}")
    ACTIVE_BACKEND = name


if _numba_disabled_by_env():
    set_backend("numpy")
else:
    try:
        set_backend("numba")
    except ImportError:
        set_backend("numpy")


def as_word_matrix(words):
    """Coerce to a C-contiguous 2-D int64 array of cyclic words."""
    arr = np.ascontiguousarray(words, dtype=np.int64)
    if arr.ndim != 2 or arr.shape[1] < 1:
        raise ValueError("expected a nonempty 2-D word matrix")
    return arr


def least_rotations(words):
    return _impl.least_rotations(as_word_matrix(words))


def row_periods(words):
    return _impl.row_periods(as_word_matrix(words))


def canonicalize_rows(words):
    """Rotate every row to its lexicographically least form.

    Returns ``(canonical, shifts)`` where ties are broken by the least shift.
    """
    words = as_word_matrix(words)
    shifts = _impl.least_rotations(words)
    n = words.shape[1]
    cols = (shifts[:, None] + np.arange(n, dtype=np.int64)[None, :]) % n
    return np.take_along_axis(words, cols, axis=1), shifts


def necklace_words(n, k, cap):
    """All canonical k-ary necklaces of length n as a lex-ascending matrix."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    if k ** n > max(cap, 1) * n:
        # orbit count is at least k**n / n, so the cap is already blown
        raise SizeLimitExceeded(f"more than {cap} necklaces for k={k}, n={n}")
    return _impl.necklace_words(n, k, cap)


def encode_rows(words, k):
    """Injective base-k integer key per row; rows must use symbols 0..k-1."""
    words = as_word_matrix(words)
    n = words.shape[1]
    if k ** n >= 2 ** 62:
        raise SizeLimitExceeded("word space too large for int64 keys")
    keys = np.zeros(words.shape[0], dtype=np.int64)
    for col in range(n):
        keys *= k
        keys += words[:, col]
    return keys
