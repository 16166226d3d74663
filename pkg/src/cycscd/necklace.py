"""Cyclic words and their quotient machinery.

Canonical form everywhere is the lexicographically least rotation, ties broken
by the least left-shift.  Scalar helpers accept arbitrary comparable labels;
the bulk paths run on int matrices through :mod:`cycscd.kernels`.
"""

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import kernels
from .errors import BaseMismatch, EmptyPoset, EmptyWord, InternalCheckFailed, PatternViolation
from .poset import RankedPoset

DEFAULT_CAP = 1_000_000

_BOOTH_CUTOVER = 5  # below this the quadratic scan beats Booth's bookkeeping


def _booth_shift(word):
    n = len(word)
    f = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        sj = word[j % n]
        i = f[j - k - 1]
        while i != -1 and sj != word[(k + i + 1) % n]:
            if sj < word[(k + i + 1) % n]:
                k = j - i - 1
            i = f[i]
        if sj != word[(k + i + 1) % n]:
            if sj < word[k % n]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k % n


def period(word):
    """Least p dividing len(word) such that rotating by p fixes the word."""
    word = tuple(word)
    n = len(word)
    if n == 0:
        raise EmptyWord("period of the empty word is undefined")
    for p in range(1, n + 1):
        if n % p == 0 and all(word[i] == word[(i + p) % n] for i in range(n)):
            return p
    return n


def canonical_rotation(word):
    """Lexicographically least rotation and the left-shift producing it.

    Ties (periodic words) resolve to the least shift.
    """
    word = tuple(word)
    n = len(word)
    if n == 0:
        raise EmptyWord("cannot canonicalize the empty word")
    if n < _BOOTH_CUTOVER:
        shift = min(range(n), key=lambda s: (word[s:] + word[:s], s))
    else:
        shift = _booth_shift(word) % period(word)
    return word[shift:] + word[:shift], shift


@dataclass(frozen=True)
class Necklace:
    """A rotation orbit, stored as its canonical word.

    Use :meth:`from_word` for arbitrary rotations; the bare constructor trusts
    the caller to pass a canonical word with its period.
    """

    word: tuple
    period: int

    @classmethod
    def from_word(cls, word):
        canon, _ = canonical_rotation(word)
        return cls(canon, period(canon))

    @property
    def n(self):
        return len(self.word)

    def __str__(self):
        return "[" + ",".join(str(v) for v in self.word) + "]"


def enumerate_necklaces(n, alphabet, cap=DEFAULT_CAP):
    """One canonical representative per rotation orbit, lex ascending.

    ``alphabet`` is either a size (labels ``0..k-1``) or an explicit label
    collection, which is sorted so canonical forms respect the label order.
    """
    if n < 1:
        raise EmptyWord("necklaces need at least one bead")
    if isinstance(alphabet, (int, np.integer)):
        labels = None
        k = int(alphabet)
    else:
        labels = sorted(alphabet)
        k = len(labels)
    if k < 1:
        raise EmptyWord("alphabet must be nonempty")
    words = kernels.necklace_words(n, k, cap)
    periods = kernels.row_periods(words)
    out = []
    for row, p in zip(words, periods):
        tup = tuple(int(v) for v in row)
        if labels is not None:
            tup = tuple(labels[v] for v in tup)
        out.append(Necklace(tup, int(p)))
    return out


@dataclass(frozen=True, eq=False)
class PowerQuotient:
    """Quotient of the n-fold power of a poset by cyclic coordinate rotation.

    Element ids index the canonical words in ascending lex order; ``words``
    row i is the canonical word of element i.
    """

    poset: RankedPoset
    words: np.ndarray
    source: RankedPoset
    n: int

    @cached_property
    def _keys(self):
        return kernels.encode_rows(self.words, max(self.source.n_elements, 1))

    def ids_of_words(self, matrix):
        """Canonicalize rows and resolve them to element ids (vectorized)."""
        canon, _ = kernels.canonicalize_rows(matrix)
        keys = kernels.encode_rows(canon, max(self.source.n_elements, 1))
        pos = np.searchsorted(self._keys, keys)
        if pos.size:
            bad = (pos >= self._keys.shape[0]) | (self._keys[pos.clip(max=self._keys.shape[0] - 1)] != keys)
            if bad.any():
                raise InternalCheckFailed("word does not name a quotient element")
        return pos

    def id_of_word(self, word):
        arr = np.asarray([tuple(word)], dtype=np.int64)
        return int(self.ids_of_words(arr)[0])

    def necklace(self, i):
        row = tuple(int(v) for v in self.words[i])
        return Necklace(row, period(row))


def build_power_quotient(source, n, cap=DEFAULT_CAP):
    """Construct Pⁿ/ℤₙ: canonical coordinate words, summed ranks, and covers
    generated by raising one coordinate along a source cover and
    re-canonicalizing."""
    if n < 1:
        raise EmptyWord("power quotients need n >= 1")
    k = source.n_elements
    if k == 0:
        raise EmptyPoset("cannot take powers of the empty poset")
    words = kernels.necklace_words(n, k, cap)
    rank = np.take(source.rank, words).sum(axis=1)
    keys = kernels.encode_rows(words, k)

    src_parts = []
    dst_parts = []
    cover_list = [(int(lo), int(hi)) for lo, hi in source.covers]
    for j in range(n):
        col = words[:, j]
        for lo, hi in cover_list:
            rows = np.nonzero(col == lo)[0]
            if rows.size == 0:
                continue
            cand = words[rows].copy()
            cand[:, j] = hi
            canon, _ = kernels.canonicalize_rows(cand)
            ck = kernels.encode_rows(canon, k)
            pos = np.searchsorted(keys, ck)
            if pos.size and ((pos >= keys.shape[0]).any() or (keys[pos] != ck).any()):
                raise InternalCheckFailed("cover candidate escaped the element table")
            src_parts.append(rows)
            dst_parts.append(pos)
    if src_parts:
        src = np.concatenate(src_parts)
        dst = np.concatenate(dst_parts)
        pair_keys = np.unique(src * words.shape[0] + dst)
        covers = np.stack([pair_keys // words.shape[0], pair_keys % words.shape[0]], axis=1)
    else:
        covers = np.zeros((0, 2), dtype=np.int64)

    words.flags.writeable = False
    poset = RankedPoset(words.shape[0], covers, rank)
    return PowerQuotient(poset, words, source, n)


@dataclass(frozen=True)
class FiberKey:
    """Projected base of a necklace together with the base's period."""

    base: Necklace
    period_d: int


@dataclass(frozen=True)
class BlockNecklace:
    """Necklace of fixed-size blocks, each projecting onto the base ``beta``."""

    blocks: tuple
    beta: tuple


def classify_fiber(x, projection):
    """Fiber of a necklace under a label projection: canonical projected base
    plus its period.  Grouping by this key partitions the necklace set."""
    base = tuple(projection[y] for y in x.word)
    canon, _ = canonical_rotation(base)
    d = period(canon)
    return FiberKey(Necklace(canon, d), d)


def _alignments(base, target):
    n = len(base)
    return [s for s in range(n) if base[s:] + base[:s] == target]


def fold_periodic(x, projection, key):
    """Cut a necklace into blocks of the base period.

    The word is rotated so its projection reads as the canonical base repeated,
    cut into blocks of size d, and block-canonicalized.  Any two admissible
    rotations differ by a multiple of d, so the result is well defined.
    """
    if classify_fiber(x, projection) != key:
        raise BaseMismatch(f"necklace {x} does not lie over base {key.base}")
    d = key.period_d
    n = x.n
    base = tuple(projection[y] for y in x.word)
    shifts = _alignments(base, key.base.word)
    s = shifts[0]
    rotated = x.word[s:] + x.word[:s]
    blocks = tuple(rotated[i * d:(i + 1) * d] for i in range(n // d))
    canon, _ = canonical_rotation(blocks)
    if __debug__:
        for other in shifts[1:]:
            rot = x.word[other:] + x.word[:other]
            alt = tuple(rot[i * d:(i + 1) * d] for i in range(n // d))
            assert canonical_rotation(alt)[0] == canon, "cut alignment is ambiguous"
    return BlockNecklace(canon, key.base.word[:d])


def unfold_periodic(blocks, projection, n):
    """Concatenate the blocks back into a length-n necklace.

    Inverse of :func:`fold_periodic` on canonical forms.
    """
    d = len(blocks.beta)
    if d == 0 or len(blocks.blocks) * d != n:
        raise PatternViolation(f"blocks do not tile a word of length {n}")
    for block in blocks.blocks:
        if tuple(projection[y] for y in block) != blocks.beta:
            raise PatternViolation(f"block {block} does not project onto {blocks.beta}")
    flat = tuple(v for block in blocks.blocks for v in block)
    return Necklace.from_word(flat)
