"""Independent brute-force cross-checks.

Everything here is deliberately naive: orbit grouping by min-rotation over raw
tuples, order relations by reachability, covers by pairwise dominance.  The
fast paths are validated by agreeing with these on small instances.
"""

from dataclasses import dataclass
from itertools import product
from math import gcd

import numpy as np

from .errors import EmptyPoset, SizeLimitExceeded
from .poset import Chain, RankedPoset, SymmetricChainDecomposition, poset_rank, verify_scd

NAIVE_CAP = 10 ** 7
SEARCH_CAP = 30


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def totient(n):
    return sum(1 for i in range(1, n + 1) if gcd(i, n) == 1)


def burnside_count(k, n):
    """Number of k-ary n-bead necklaces: (1/n) sum over d|n of phi(d) k^(n/d)."""
    if k < 1 or n < 1:
        raise ValueError("need k >= 1 and n >= 1")
    total = sum(totient(d) * k ** (n // d) for d in divisors(n))
    assert total % n == 0
    return total // n


@dataclass(frozen=True)
class RankCensus:
    """Element count per rank value."""

    counts: dict

    @property
    def total(self):
        return sum(self.counts.values())

    @property
    def max_count(self):
        return max(self.counts.values(), default=0)

    def is_palindromic(self, target_rank):
        ranks = set(self.counts)
        return all(self.counts[r] == self.counts.get(target_rank - r, 0) for r in ranks)


def rank_census(poset):
    counts = {}
    for r in poset.rank:
        counts[int(r)] = counts.get(int(r), 0) + 1
    return RankCensus(counts)


def _reachability(poset):
    """leq[x] = set of y with x <= y, from the covers by propagation."""
    n = poset.n_elements
    leq = [{x} for x in range(n)]
    order = np.argsort(-poset.rank)  # process top-down so ups are complete
    ups = poset.up
    for x in order:
        for y in ups[x]:
            leq[x] |= leq[y]
    return leq


def naive_quotient(poset, n, cap=NAIVE_CAP):
    """Quotient of the n-fold power by rotation, built the slow way.

    Orbits are grouped by min-rotation over raw tuples; covers come from
    rank-adjacent coordinatewise dominance between orbit representatives,
    which is a different route than the generate-and-canonicalize builder.
    """
    k = poset.n_elements
    if k == 0:
        raise EmptyPoset("cannot take powers of the empty poset")
    if k ** n > cap:
        raise SizeLimitExceeded(f"{k}^{n} raw words exceed the naive cap {cap}")

    orbits = sorted({min(w[s:] + w[:s] for s in range(n))
                     for w in product(range(k), repeat=n)})
    index = {w: i for i, w in enumerate(orbits)}
    rank = [sum(int(poset.rank[v]) for v in w) for w in orbits]

    leq = _reachability(poset)
    by_rank = {}
    for w, r in zip(orbits, rank):
        by_rank.setdefault(r, []).append(w)

    def dominated(x, y):
        return all(y[i] in leq[x[i]] for i in range(n))

    covers = []
    for r, lows in sorted(by_rank.items()):
        highs = by_rank.get(r + 1, [])
        for x in lows:
            rotations = [x[s:] + x[:s] for s in range(n)]
            for y in highs:
                if any(dominated(rot, y) for rot in rotations):
                    covers.append((index[x], index[y]))
    return RankedPoset(len(orbits), covers, rank)


def quotients_agree(fast, naive):
    """Element words, ranks, and covers must match under canonical-word ids."""
    if fast.poset.n_elements != naive.n_elements:
        return False
    if not np.array_equal(fast.poset.rank, naive.rank):
        return False
    return np.array_equal(fast.poset.covers, naive.covers)


def exhaustive_scd_search(poset, limit=SEARCH_CAP):
    """Deterministic backtracking search for any symmetric chain decomposition.

    Returns the first decomposition found, or None.
    """
    n = poset.n_elements
    if n == 0:
        raise EmptyPoset("nothing to decompose")
    if n > limit:
        raise SizeLimitExceeded(f"{n} elements exceed the search cap {limit}")
    target = poset_rank(poset)
    ups, downs = poset.up, poset.down

    def paths(start, adjacency, alive):
        out = [[start]]
        frontier = [[start]]
        while frontier:
            nxt = []
            for path in frontier:
                for v in adjacency[path[-1]]:
                    if v in alive:
                        nxt.append(path + [v])
            out.extend(nxt)
            frontier = nxt
        return out

    def chains_through(e, alive):
        for dpath in paths(e, downs, alive):
            bottom = dpath[-1]
            for upath in paths(e, ups, alive):
                top = upath[-1]
                if int(poset.rank[bottom] + poset.rank[top]) == target:
                    yield tuple(reversed(dpath)) + tuple(upath[1:])

    def solve(alive):
        if not alive:
            return []
        e = min(alive)
        for chain in chains_through(e, alive):
            rest = solve(alive - set(chain))
            if rest is not None:
                return [chain] + rest
        return None

    chains = solve(frozenset(range(n)))
    if chains is None:
        return None
    scd = SymmetricChainDecomposition(tuple(Chain(c) for c in chains), target)
    assert verify_scd(poset, scd).ok
    return scd
