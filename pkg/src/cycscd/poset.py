"""Finite ranked posets, chains, symmetric chain decompositions, morphisms.

Element ids are dense integers ``0..n-1``.  Covers are stored as a
lexicographically sorted ``(E, 2)`` int64 array; rank labels as an ``(n,)``
int64 array.  All values are frozen after construction and every operation is
a pure function, so concurrent readers are safe.
"""

from collections.abc import Mapping
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import (
    CoverRankMismatch,
    DuplicateCover,
    EmptyPoset,
    EmptySubset,
    IdOutOfRange,
    InternalCheckFailed,
    InvalidMorphism,
    InvalidSourceScd,
)


class RankedPoset:
    """A finite poset presented by its cover pairs and a rank labeling.

    Construction validates the data: ids in range, rank total, no duplicate
    covers, and rank(hi) == rank(lo) + 1 for every cover.
    """

    def __init__(self, n_elements, covers, rank):
        n = int(n_elements)
        if n < 0:
            raise IdOutOfRange(f"negative element count {n}")
        rank = np.asarray(rank, dtype=np.int64).reshape(-1)
        if rank.shape[0] != n:
            raise IdOutOfRange(f"rank table has {rank.shape[0]} entries for {n} elements")
        if n and rank.min() < 0:
            raise IdOutOfRange("ranks must be non-negative")

        covers = np.asarray(list(covers) if not isinstance(covers, np.ndarray) else covers,
                            dtype=np.int64)
        if covers.size == 0:
            covers = covers.reshape(0, 2)
        if covers.ndim != 2 or covers.shape[1] != 2:
            raise IdOutOfRange("covers must be pairs")
        if covers.size and (covers.min() < 0 or covers.max() >= n):
            bad = covers[(covers < 0).any(axis=1) | (covers >= n).any(axis=1)][0]
            raise IdOutOfRange(f"cover {tuple(bad)} references an id outside 0..{n - 1}")
        order = np.lexsort((covers[:, 1], covers[:, 0]))
        covers = covers[order]
        if covers.shape[0] > 1:
            dup = (covers[1:] == covers[:-1]).all(axis=1)
            if dup.any():
                pair = covers[1:][dup][0]
                raise DuplicateCover(f"cover {tuple(pair)} appears more than once")
        if covers.shape[0]:
            bad = rank[covers[:, 1]] != rank[covers[:, 0]] + 1
            if bad.any():
                lo, hi = covers[bad][0]
                raise CoverRankMismatch(
                    f"cover ({lo}, {hi}) has ranks {rank[lo]} -> {rank[hi]}")

        rank.flags.writeable = False
        covers.flags.writeable = False
        self.n_elements = n
        self.rank = rank
        self.covers = covers

    @cached_property
    def cover_keys(self):
        # sorted because covers are lex sorted and lo*n + hi is monotone
        return self.covers[:, 0] * max(self.n_elements, 1) + self.covers[:, 1]

    def has_covers(self, pairs):
        """Vectorized membership test for an (m, 2) array of candidate covers."""
        pairs = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
        keys = pairs[:, 0] * max(self.n_elements, 1) + pairs[:, 1]
        pos = np.searchsorted(self.cover_keys, keys)
        ok = pos < self.cover_keys.shape[0]
        ok[ok] = self.cover_keys[pos[ok]] == keys[ok]
        return ok

    @cached_property
    def up(self):
        """Upper covers per element, ascending."""
        adj = [[] for _ in range(self.n_elements)]
        for lo, hi in self.covers:
            adj[lo].append(int(hi))
        return tuple(tuple(a) for a in adj)

    @cached_property
    def down(self):
        """Lower covers per element, ascending."""
        adj = [[] for _ in range(self.n_elements)]
        for lo, hi in self.covers:
            adj[hi].append(int(lo))
        return tuple(tuple(sorted(a)) for a in adj)

    def census(self):
        """Element count per rank value, as an array indexed by rank."""
        if self.n_elements == 0:
            return np.zeros(0, dtype=np.int64)
        return np.bincount(self.rank)

    def __eq__(self, other):
        if not isinstance(other, RankedPoset):
            return NotImplemented
        return (self.n_elements == other.n_elements
                and np.array_equal(self.rank, other.rank)
                and np.array_equal(self.covers, other.covers))

    __hash__ = None

    def __repr__(self):
        return f"RankedPoset(n={self.n_elements}, covers={self.covers.shape[0]})"


def validate_ranked_poset(n_elements, covers, rank):
    """Build a validated poset; ``rank`` may be a sequence or an id -> rank mapping."""
    if isinstance(rank, Mapping):
        try:
            rank = [rank[i] for i in range(n_elements)]
        except KeyError as exc:
            raise IdOutOfRange(f"rank is not total: missing id {exc.args[0]}") from None
    return RankedPoset(n_elements, covers, rank)


def chain_poset(length, base_rank=0):
    """A saturated chain with ``length`` vertices at ranks base..base+length-1."""
    if length < 1:
        raise EmptyPoset("chains need at least one vertex")
    covers = [(i, i + 1) for i in range(length - 1)]
    return RankedPoset(length, covers, [base_rank + i for i in range(length)])


def poset_rank(poset):
    """Symmetry constant of the poset: max rank plus min rank."""
    if poset.n_elements == 0:
        raise EmptyPoset("rank of the empty poset is undefined")
    return int(poset.rank.max() + poset.rank.min())


@dataclass(frozen=True)
class Chain:
    """A saturated chain, stored bottom-up."""

    elements: tuple

    def __post_init__(self):
        elems = tuple(int(e) for e in self.elements)
        if not elems:
            raise ValueError("chains are nonempty")
        object.__setattr__(self, "elements", elems)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def bottom(self):
        return self.elements[0]

    @property
    def top(self):
        return self.elements[-1]


@dataclass(frozen=True)
class SymmetricChainDecomposition:
    """A set of chains meant to partition a poset, with the symmetry target."""

    chains: tuple
    target_rank: int

    def __post_init__(self):
        chains = tuple(c if isinstance(c, Chain) else Chain(tuple(c))
                       for c in self.chains)
        object.__setattr__(self, "chains", chains)
        object.__setattr__(self, "target_rank", int(self.target_rank))


@dataclass(frozen=True)
class ScdReport:
    """Outcome of the four decomposition checks, with first counterexamples."""

    saturated: bool
    disjoint: bool
    covering: bool
    symmetric: bool
    counterexamples: dict

    @property
    def ok(self):
        return self.saturated and self.disjoint and self.covering and self.symmetric


def verify_scd(poset, scd):
    """Check saturation, disjointness, covering, and rank symmetry.

    Counterexamples are the first failures in ascending id order.
    """
    all_ids = np.fromiter((e for c in scd.chains for e in c.elements), dtype=np.int64,
                          count=sum(len(c) for c in scd.chains))
    if all_ids.size and (all_ids.min() < 0 or all_ids.max() >= poset.n_elements):
        raise IdOutOfRange("chain element outside the poset")

    counts = np.bincount(all_ids, minlength=poset.n_elements)
    counterexamples = {}

    dup = np.nonzero(counts > 1)[0]
    disjoint = dup.size == 0
    if not disjoint:
        counterexamples["disjoint"] = int(dup[0])

    missing = np.nonzero(counts == 0)[0]
    covering = missing.size == 0
    if not covering:
        counterexamples["covering"] = int(missing[0])

    pairs = [(c.elements[i], c.elements[i + 1])
             for c in scd.chains for i in range(len(c) - 1)]
    if pairs:
        arr = np.asarray(pairs, dtype=np.int64)
        ok = poset.has_covers(arr)
        saturated = bool(ok.all())
        if not saturated:
            bad = arr[~ok]
            first = bad[np.lexsort((bad[:, 1], bad[:, 0]))][0]
            counterexamples["saturated"] = (int(first[0]), int(first[1]))
    else:
        saturated = True

    symmetric = True
    worst = None
    for c in scd.chains:
        lo, hi = c.elements[0], c.elements[-1]
        if int(poset.rank[lo] + poset.rank[hi]) != scd.target_rank:
            symmetric = False
            key = (lo, hi)
            if worst is None or key < worst[0]:
                worst = (key, c)
    if not symmetric:
        counterexamples["symmetric"] = worst[1].elements

    return ScdReport(saturated, disjoint, covering, symmetric, counterexamples)


def product_poset(p, q):
    """Componentwise product; pair (x, y) gets id x * |Q| + y."""
    np_, nq = p.n_elements, q.n_elements
    rank = (p.rank[:, None] + q.rank[None, :]).reshape(-1)
    parts = []
    if p.covers.size:
        ys = np.arange(nq, dtype=np.int64)
        lo = (p.covers[:, 0, None] * nq + ys).reshape(-1)
        hi = (p.covers[:, 1, None] * nq + ys).reshape(-1)
        parts.append(np.stack([lo, hi], axis=1))
    if q.covers.size:
        xs = np.arange(np_, dtype=np.int64) * nq
        lo = (xs[:, None] + q.covers[None, :, 0]).reshape(-1)
        hi = (xs[:, None] + q.covers[None, :, 1]).reshape(-1)
        parts.append(np.stack([lo, hi], axis=1))
    covers = np.concatenate(parts) if parts else np.zeros((0, 2), dtype=np.int64)
    return RankedPoset(np_ * nq, covers, rank)


@dataclass(frozen=True)
class CoverMorphism:
    """Bijective, cover-preserving map whose ranks shift by a constant offset."""

    source: RankedPoset
    target: RankedPoset
    mapping: tuple
    rank_offset: int = 0

    def __post_init__(self):
        object.__setattr__(self, "mapping", tuple(int(v) for v in self.mapping))


@dataclass(frozen=True)
class MorphismReport:
    bijective: bool
    rank_preserving: bool
    cover_preserving: bool
    counterexamples: dict

    @property
    def ok(self):
        return self.bijective and self.rank_preserving and self.cover_preserving


def verify_cover_morphism(m):
    """Check the three morphism invariants, with first counterexamples."""
    src, tgt = m.source, m.target
    counterexamples = {}
    if len(m.mapping) != src.n_elements:
        raise IdOutOfRange("mapping is not total on the source")
    vals = np.asarray(m.mapping, dtype=np.int64).reshape(-1)
    in_range = (vals >= 0) & (vals < tgt.n_elements)

    bijective = True
    if src.n_elements != tgt.n_elements:
        bijective = False
        counterexamples["bijective"] = ("size", src.n_elements, tgt.n_elements)
    elif not in_range.all():
        bijective = False
        counterexamples["bijective"] = int(np.nonzero(~in_range)[0][0])
    elif vals.size:
        dup = np.nonzero(np.bincount(vals, minlength=tgt.n_elements) != 1)[0]
        if dup.size:
            bijective = False
            counterexamples["bijective"] = int(dup[0])

    safe = vals.clip(0, max(tgt.n_elements - 1, 0))
    if src.n_elements and tgt.n_elements:
        ok = (tgt.rank[safe] == src.rank + m.rank_offset) & in_range
        rank_preserving = bool(ok.all())
        if not rank_preserving:
            counterexamples["rank_preserving"] = int(np.nonzero(~ok)[0][0])
    else:
        rank_preserving = src.n_elements == 0

    if src.covers.size:
        imaged = np.stack([safe[src.covers[:, 0]], safe[src.covers[:, 1]]], axis=1)
        ok = tgt.has_covers(imaged)
        cover_preserving = bool(ok.all())
        if not cover_preserving:
            lo, hi = src.covers[~ok][0]
            counterexamples["cover_preserving"] = (int(lo), int(hi))
    else:
        cover_preserving = True

    return MorphismReport(bijective, rank_preserving, cover_preserving, counterexamples)


def transfer_scd(m, scd):
    """Push a decomposition of the source through a cover morphism.

    The image chains decompose the target with symmetry constant shifted by
    twice the rank offset.
    """
    rep = verify_cover_morphism(m)
    if not rep.ok:
        raise InvalidMorphism(f"morphism failed: {rep.counterexamples}")
    rep = verify_scd(m.source, scd)
    if not rep.ok:
        raise InvalidSourceScd(f"source decomposition failed: {rep.counterexamples}")
    chains = tuple(Chain(tuple(m.mapping[e] for e in c.elements)) for c in scd.chains)
    out = SymmetricChainDecomposition(chains, scd.target_rank + 2 * m.rank_offset)
    rep = verify_scd(m.target, out)
    if not rep.ok:
        raise InternalCheckFailed(f"transferred decomposition failed: {rep.counterexamples}")
    return out


def is_centered_subposet(poset, subset):
    """True iff min+max rank over the subset equals the ambient symmetry constant."""
    ids = np.asarray(sorted(set(int(e) for e in subset)), dtype=np.int64)
    if ids.size == 0:
        raise EmptySubset("centered check needs a nonempty subset")
    if ids.min() < 0 or ids.max() >= poset.n_elements:
        raise IdOutOfRange("subset id outside the poset")
    ranks = poset.rank[ids]
    return int(ranks.min() + ranks.max()) == poset_rank(poset)


def induced_subposet(poset, subset):
    """Subposet on ``subset`` whose covers are the rank-adjacent order pairs.

    A comparable pair with rank gap one admits no intermediate element, so
    these are exactly the ambient covers with both endpoints kept.  Ranks keep
    their ambient values.  Returns ``(subposet, old_ids)`` with ``old_ids[new]
    == old``.
    """
    old_ids = np.asarray(sorted(set(int(e) for e in subset)), dtype=np.int64)
    if old_ids.size and (old_ids.min() < 0 or old_ids.max() >= poset.n_elements):
        raise IdOutOfRange("subset id outside the poset")
    lut = np.full(poset.n_elements, -1, dtype=np.int64)
    lut[old_ids] = np.arange(old_ids.size, dtype=np.int64)
    if poset.covers.size:
        keep = (lut[poset.covers[:, 0]] >= 0) & (lut[poset.covers[:, 1]] >= 0)
        covers = lut[poset.covers[keep]]
    else:
        covers = np.zeros((0, 2), dtype=np.int64)
    sub = RankedPoset(old_ids.size, covers, poset.rank[old_ids])
    return sub, tuple(int(i) for i in old_ids)
