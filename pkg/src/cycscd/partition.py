"""Partition necklaces and the codecs tying them to k-ary necklaces.

A partition necklace is the rotation orbit of a tuple of positive integers
summing to n; its rank is the number of parts.  The all-ones word and the
empty word are excluded, so ranks run from 1 to n-1.  The block code merges
every run of 1-parts into the following larger part, indexing each necklace by
a fundamental necklace (all parts >= 2); the codecs translate between these
and binary / (m+1)-ary necklaces while preserving rank and covers.
"""

from dataclasses import dataclass
from itertools import product as _iter_product

from .errors import (
    AllOnes,
    AperiodicAlpha,
    EmptyWord,
    ExcludedNecklace,
    NotDivisible,
    PeriodicAlpha,
)
from .necklace import Necklace, build_power_quotient, canonical_rotation, period
from .poset import CoverMorphism, RankedPoset, chain_poset, induced_subposet, product_poset


@dataclass(frozen=True)
class PartitionNecklace:
    """Canonical rotation of a positive composition; rank = number of parts."""

    parts: tuple

    @classmethod
    def from_parts(cls, parts):
        parts = tuple(int(a) for a in parts)
        if not parts:
            raise EmptyWord("partition necklaces are nonempty")
        if any(a < 1 for a in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if all(a == 1 for a in parts):
            raise AllOnes("the all-ones word is excluded")
        canon, _ = canonical_rotation(parts)
        return cls(canon)

    @property
    def n(self):
        return sum(self.parts)

    @property
    def r(self):
        return len(self.parts)

    def __str__(self):
        return "[" + ",".join(str(a) for a in self.parts) + "]"


def is_fundamental(q):
    return all(a >= 2 for a in q.parts)


def is_divisible(q, m):
    return all(a % m == 0 for a in q.parts)


def _ones_groups(parts):
    """Cyclic normal form ``(1^{n_1}, m_1, ..., 1^{n_k}, m_k)`` as (n_i, m_i)
    pairs, groups listed in the order their big parts appear in ``parts``."""
    big = [i for i, a in enumerate(parts) if a >= 2]
    if not big:
        raise AllOnes("no part >= 2")
    r = len(parts)
    groups = []
    prev = big[-1] - r  # cyclic predecessor of the first big part
    for i in big:
        groups.append((i - prev - 1, parts[i]))
        prev = i
    return groups


def block_code(q):
    """Merge each run of 1-parts into the following larger part.

    Restricts to the identity on fundamental necklaces and is idempotent.
    """
    merged = tuple(run + big for run, big in _ones_groups(q.parts))
    return PartitionNecklace.from_parts(merged)


def partition_from_binary(b):
    """Binary necklace -> gaps between consecutive ones, as a partition.

    Rank-preserving: a necklace of weight r maps to r parts.
    """
    w = b.word
    if any(v not in (0, 1) for v in w):
        raise ExcludedNecklace(f"not a binary word: {w}")
    ones = [i for i, v in enumerate(w) if v == 1]
    if not ones or len(ones) == len(w):
        raise ExcludedNecklace("constant necklaces have no gap encoding")
    n = len(w)
    parts = tuple(ones[(i + 1) % len(ones)] - ones[i] if i + 1 < len(ones)
                  else ones[0] + n - ones[i]
                  for i in range(len(ones)))
    return PartitionNecklace.from_parts(parts)


def binary_from_partition(q):
    """Inverse gap encoding: part a becomes the block 1 0^(a-1)."""
    word = []
    for a in q.parts:
        word.append(1)
        word.extend([0] * (a - 1))
    return Necklace.from_word(word)


def _mary_letter_word(groups, m):
    """Letter word over 0..m for normal-form groups of an m-divisible necklace."""
    word = []
    for run, big in groups:
        if (run + big) % m != 0:
            raise NotDivisible(f"group of size {run + big} not divisible by {m}")
        q, rem = divmod(run + 1, m)
        tail = (run + big) // m - q - 1
        word.extend([m] * q)
        word.append(rem)
        word.extend([0] * tail)
    return tuple(word)


def partition_from_mary(x, m):
    """(m+1)-ary necklace -> partition necklace, by expanding each letter j to
    the binary block 1^j 0^(m-j) and gap-encoding the result.

    Rank-preserving: the letter sum equals the number of parts, and the block
    code of the image is divisible by m.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    w = x.word
    if any(v < 0 or v > m for v in w):
        raise ExcludedNecklace(f"letters must lie in 0..{m}: {w}")
    if all(v == 0 for v in w) or all(v == m for v in w):
        raise ExcludedNecklace("constant necklaces are excluded")
    binary = []
    for v in w:
        binary.extend([1] * v)
        binary.extend([0] * (m - v))
    out = partition_from_binary(Necklace.from_word(binary))
    assert not __debug__ or is_divisible(block_code(out), m)
    return out


def mary_from_partition(q, m):
    """Partition necklace with m-divisible block code -> (m+1)-ary necklace.

    Two-sided inverse of :func:`partition_from_mary`.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    return Necklace.from_word(_mary_letter_word(_ones_groups(q.parts), m))


def composition_necklaces(n, min_part=1):
    """Canonical necklaces of compositions of n with all parts >= min_part,
    ascending by (length, parts)."""
    out = []
    prefix = []

    def extend(remaining):
        if remaining == 0:
            word = tuple(prefix)
            if canonical_rotation(word)[0] == word:
                out.append(word)
            return
        for a in range(min_part, remaining + 1):
            prefix.append(a)
            extend(remaining - a)
            prefix.pop()

    if n >= min_part:
        extend(n)
    return sorted(out, key=lambda w: (len(w), w))


def enumerate_partition_necklaces(n):
    """All partition necklaces of n (all-ones excluded), canonical order."""
    return [PartitionNecklace(w) for w in composition_necklaces(n, 1)
            if any(a >= 2 for a in w)]


def fundamental_necklaces(n):
    """All fundamental necklaces of n (every part >= 2), canonical order."""
    return [PartitionNecklace(w) for w in composition_necklaces(n, 2)]


def partition_covers_up(q):
    """Upward covers in the refinement order: split one part into an adjacent
    positive pair; splits landing on the excluded all-ones word are dropped."""
    seen = set()
    out = []
    parts = q.parts
    for i, a in enumerate(parts):
        for x in range(1, a):
            split = parts[:i] + (x, a - x) + parts[i + 1:]
            if all(v == 1 for v in split):
                continue
            canon, _ = canonical_rotation(split)
            if canon not in seen:
                seen.add(canon)
                out.append(PartitionNecklace(canon))
    return out


@dataclass(frozen=True, eq=False)
class PartitionPoset:
    """The refinement poset of partition necklaces of n, with an id table."""

    poset: RankedPoset
    elements: tuple
    index: dict
    n: int


def build_partition_poset(n):
    elements = enumerate_partition_necklaces(n)
    index = {q: i for i, q in enumerate(elements)}
    covers = []
    for q, i in index.items():
        for up in partition_covers_up(q):
            covers.append((i, index[up]))
    rank = [q.r for q in elements]
    return PartitionPoset(RankedPoset(len(elements), covers, rank),
                          tuple(elements), index, n)


@dataclass(frozen=True)
class FiberElement:
    """A block-code fiber member: the fundamental index plus one splitting
    offset per part, taken up to the rotation symmetry of the index."""

    alpha: PartitionNecklace
    offsets: tuple

    def necklace(self):
        return realize_offsets(self.alpha, self.offsets)

    @property
    def rank(self):
        return self.alpha.r + sum(self.offsets)


def realize_offsets(alpha, offsets):
    """Insert j_i ones before part i shrunk to a_i - j_i; the result's block
    code is alpha again."""
    word = []
    for a, j in zip(alpha.parts, offsets):
        word.extend([1] * j)
        word.append(a - j)
    return PartitionNecklace.from_parts(word)


def _offset_orbit_rep(offsets, d):
    """Least rotation of the offset tuple among shifts fixing alpha's parts."""
    r = len(offsets)
    return min(offsets[s:] + offsets[:s] for s in range(0, r, d))


def fiber_enumerate(alpha, n=None):
    """All fiber elements over a fundamental necklace: offset tuples with
    0 <= j_i <= a_i - 2, deduplicated under alpha's rotation symmetry."""
    if not is_fundamental(alpha):
        raise ValueError(f"{alpha} is not fundamental")
    if n is not None and alpha.n != n:
        raise ValueError(f"parts of {alpha} sum to {alpha.n}, not {n}")
    d = period(alpha.parts)
    seen = set()
    out = []
    for offsets in _iter_product(*(range(a - 1) for a in alpha.parts)):
        rep = _offset_orbit_rep(offsets, d)
        if rep not in seen:
            seen.add(rep)
            out.append(FiberElement(alpha, rep))
    return out


def _induced_fiber(alpha, ambient):
    ids = sorted(ambient.index[f.necklace()] for f in fiber_enumerate(alpha))
    sub, old_ids = induced_subposet(ambient.poset, ids)
    return sub, {old: new for new, old in enumerate(old_ids)}


def _offset_grid(parts):
    """Product of chains with a_i - 1 vertices; grid rank is the offset sum."""
    grid = chain_poset(parts[0] - 1)
    for a in parts[1:]:
        grid = product_poset(grid, chain_poset(a - 1))
    return grid


def _decode_mixed_radix(i, sizes):
    coords = []
    for size in reversed(sizes):
        i, j = divmod(i, size)
        coords.append(j)
    return tuple(reversed(coords))


def fiber_product_cover(alpha, ambient=None):
    """For aperiodic alpha: cover morphism from the offset grid onto the fiber
    inside the partition poset.  Grid ranks start at zero, so the rank offset
    is the number of parts."""
    if period(alpha.parts) != alpha.r:
        raise PeriodicAlpha(f"{alpha} is periodic")
    if not is_fundamental(alpha):
        raise ValueError(f"{alpha} is not fundamental")
    if ambient is None:
        ambient = build_partition_poset(alpha.n)
    sub, to_new = _induced_fiber(alpha, ambient)
    grid = _offset_grid(alpha.parts)
    sizes = [a - 1 for a in alpha.parts]
    mapping = []
    for gid in range(grid.n_elements):
        offsets = _decode_mixed_radix(gid, sizes)
        q = realize_offsets(alpha, offsets)
        mapping.append(to_new[ambient.index[q]])
    return CoverMorphism(grid, sub, tuple(mapping), rank_offset=alpha.r)


def fiber_periodic_cover(alpha, ambient=None):
    """For periodic alpha with period d: cover morphism from the cyclic power
    quotient of the d-part offset grid onto the fiber.

    Block words flatten to one offset per part; the rotation ambiguity of the
    flattening collapses once the result is canonicalized.
    """
    d = period(alpha.parts)
    if d == alpha.r:
        raise AperiodicAlpha(f"{alpha} is aperiodic")
    if not is_fundamental(alpha):
        raise ValueError(f"{alpha} is not fundamental")
    if ambient is None:
        ambient = build_partition_poset(alpha.n)
    sub, to_new = _induced_fiber(alpha, ambient)
    beta = alpha.parts[:d]
    sizes = [a - 1 for a in beta]
    grid = _offset_grid(beta)
    blocks = build_power_quotient(grid, alpha.r // d)
    mapping = []
    for row in blocks.words:
        offsets = tuple(j for gid in row for j in _decode_mixed_radix(int(gid), sizes))
        q = realize_offsets(alpha, offsets)
        if __debug__:
            shifted = offsets[d:] + offsets[:d]
            assert realize_offsets(alpha, shifted) == q, "block flattening is ambiguous"
        mapping.append(to_new[ambient.index[q]])
    return CoverMorphism(blocks.poset, sub, tuple(mapping), rank_offset=alpha.r)
