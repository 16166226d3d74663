"""Constructive symmetric chain decompositions.

Two builders: the hook rule for products of chains, and the recursive
decomposition of cyclic power quotients.  The recursion stratifies the
quotient by the projected base of each element (which chain each coordinate
lies on, up to rotation) and resolves every stratum to either a product of
chains or a strictly smaller quotient instance:

* aperiodic base: the stratum is a product of chains; decompose it with the
  hook rule and push the chains through the coordinate bijection;
* base of period d with 1 < d < n: the stratum is the (n/d)-power quotient of
  a d-fold chain product; recurse and unfold the blocks;
* constant base: the stratum is the power quotient of a single chain, handled
  in partition-necklace coordinates, where strata over m-divisible fundamental
  necklaces repeat the same three-way split and the all-equal index peels the
  chain length down by two.

Every certificate is re-verified before it is returned.
"""

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import InternalCheckFailed, InvalidSourceScd
from .necklace import DEFAULT_CAP, PowerQuotient, build_power_quotient, period
from .partition import _mary_letter_word, composition_necklaces
from .poset import (
    Chain,
    RankedPoset,
    SymmetricChainDecomposition,
    chain_poset,
    poset_rank,
    product_poset,
    verify_scd,
)


@dataclass(frozen=True)
class ChainProvenance:
    """Which recursion case emitted a chain, for which stratum, at what depth."""

    case: str  # aperiodic | fold | peel | binary | extremes
    alpha: str
    depth: int


@dataclass(frozen=True, eq=False)
class ScdCertificate:
    """A verified decomposition of a power quotient, with per-chain provenance."""

    poset: RankedPoset
    scd: SymmetricChainDecomposition
    provenance: tuple
    quotient: PowerQuotient


def scd_times_chain(poset, scd, length, base_rank=0):
    """Hook decomposition of P x C from a decomposition of P.

    For a chain a_0 < ... < a_p and 0 <= t <= min(p, q) the hook runs along
    (a_0..a_{p-t}) at height t, then climbs the column of a_{p-t} to the top.
    Returns the product poset (pair (x, j) gets id x*length + j) and its
    decomposition.
    """
    factor = chain_poset(length, base_rank)
    prod = product_poset(poset, factor)
    q = length - 1
    chains = []
    for a in scd.chains:
        p = len(a) - 1
        elems = a.elements
        for t in range(min(p, q) + 1):
            hook = [elems[i] * length + t for i in range(p - t + 1)]
            hook.extend(elems[p - t] * length + j for j in range(t + 1, q + 1))
            chains.append(Chain(tuple(hook)))
    out = SymmetricChainDecomposition(tuple(chains),
                                      scd.target_rank + 2 * base_rank + q)
    return prod, out


def scd_chain_product(lengths, base_ranks=None):
    """Decomposition of a product of chains, folding the hook rule.

    Element ids are mixed-radix over the lengths, most significant first.
    """
    lengths = [int(v) for v in lengths]
    if not lengths or any(v < 1 for v in lengths):
        raise ValueError("need at least one factor, all lengths >= 1")
    if base_ranks is None:
        base_ranks = [0] * len(lengths)
    poset = chain_poset(lengths[0], base_ranks[0])
    scd = SymmetricChainDecomposition((Chain(tuple(range(lengths[0]))),),
                                      2 * base_ranks[0] + lengths[0] - 1)
    for length, base in zip(lengths[1:], base_ranks[1:]):
        poset, scd = scd_times_chain(poset, scd, length, base)
    return poset, scd


def _coords_matrix(ids, sizes):
    """Mixed-radix decode of ids into per-factor coordinates."""
    ids = np.array(ids, dtype=np.int64, copy=True)
    coords = np.empty((ids.shape[0], len(sizes)), dtype=np.int64)
    for pos in range(len(sizes) - 1, -1, -1):
        ids, coords[:, pos] = np.divmod(ids, sizes[pos])
    return coords


def _word_str(word):
    return "[" + ",".join(str(v) for v in word) + "]"


def _map_chains(sub_chains, id_map, case, alpha_str, sub_prov):
    # depth stays the (absolute) creation depth recorded by the recursion;
    # the case and stratum are overwritten by the outermost dispatch
    chains = [Chain(tuple(int(id_map[e]) for e in c.elements)) for c in sub_chains]
    prov = [ChainProvenance(case, alpha_str, pp.depth) for pp in sub_prov]
    return chains, prov


def _certify(quot, chains, provenance, target):
    scd = SymmetricChainDecomposition(tuple(chains), target)
    report = verify_scd(quot.poset, scd)
    if not report.ok:
        raise InternalCheckFailed(f"constructed decomposition failed: {report.counterexamples}")
    width = int(quot.poset.census().max())
    if len(scd.chains) != width:
        raise InternalCheckFailed(f"{len(scd.chains)} chains for width {width}")
    return ScdCertificate(quot.poset, scd, tuple(provenance), quot)


def scd_power_quotient(poset, scd, n, cap=DEFAULT_CAP, _depth=0):
    """Decomposition of the cyclic quotient of the n-fold power of a
    decomposed poset."""
    report = verify_scd(poset, scd)
    if not report.ok:
        raise InvalidSourceScd(f"input decomposition failed: {report.counterexamples}")
    if n == 1:
        quot = build_power_quotient(poset, 1, cap)
        ids = quot.ids_of_words(np.arange(poset.n_elements, dtype=np.int64).reshape(-1, 1))
        chains = [Chain(tuple(int(ids[e]) for e in c.elements)) for c in scd.chains]
        prov = [ChainProvenance("aperiodic", f"[{i}]", _depth)
                for i in range(len(chains))]
        return _certify(quot, chains, prov, scd.target_rank)

    quot = build_power_quotient(poset, n, cap)
    chain_elems = [np.asarray(c.elements, dtype=np.int64) for c in scd.chains]
    r = len(chain_elems)

    bases = kernels.necklace_words(n, r, cap)
    base_periods = kernels.row_periods(bases)

    chains_out = []
    prov_out = []
    for base, d in zip(bases, base_periods):
        d = int(d)
        alpha_str = _word_str(base)
        if d == n:
            # product-of-chains stratum: one grid coordinate per position
            beta = [int(v) for v in base]
            lens = [chain_elems[i].shape[0] for i in beta]
            rank_bases = [int(poset.rank[chain_elems[i][0]]) for i in beta]
            _, grid_scd = scd_chain_product(lens, rank_bases)
            coords = _coords_matrix(np.arange(int(np.prod(lens)), dtype=np.int64), lens)
            words = np.empty_like(coords)
            for pos, i in enumerate(beta):
                words[:, pos] = chain_elems[i][coords[:, pos]]
            ids = quot.ids_of_words(words)
            for c in grid_scd.chains:
                chains_out.append(Chain(tuple(int(ids[e]) for e in c.elements)))
                prov_out.append(ChainProvenance("aperiodic", alpha_str, _depth))
        elif d == 1:
            # constant stratum: power quotient of a single chain, relabeled
            lut = chain_elems[int(base[0])]
            sub = scd_chain_power_quotient(lut.shape[0] - 1, n, cap, _depth + 1)
            ids = quot.ids_of_words(lut[sub.quotient.words])
            mapped, prov = _map_chains(sub.scd.chains, ids, "binary", alpha_str,
                                       sub.provenance)
            chains_out.extend(mapped)
            prov_out.extend(prov)
        else:
            # periodic stratum: recurse on the block alphabet, then unfold
            beta = [int(v) for v in base[:d]]
            lens = [chain_elems[i].shape[0] for i in beta]
            rank_bases = [int(poset.rank[chain_elems[i][0]]) for i in beta]
            grid, grid_scd = scd_chain_product(lens, rank_bases)
            coords = _coords_matrix(np.arange(grid.n_elements, dtype=np.int64), lens)
            coords_lut = np.empty_like(coords)
            for pos, i in enumerate(beta):
                coords_lut[:, pos] = chain_elems[i][coords[:, pos]]
            sub = scd_power_quotient(grid, grid_scd, n // d, cap, _depth + 1)
            sub_words = sub.quotient.words
            unfolded = np.hstack([coords_lut[sub_words[:, b]] for b in range(n // d)])
            ids = quot.ids_of_words(unfolded)
            mapped, prov = _map_chains(sub.scd.chains, ids, "fold", alpha_str,
                                       sub.provenance)
            chains_out.extend(mapped)
            prov_out.extend(prov)

    return _certify(quot, chains_out, prov_out, n * poset_rank(poset))


def _fiber_letter_words(parts, offsets_matrix, m):
    """Letter words of the fiber elements given one splitting offset per part."""
    rows = []
    for offsets in offsets_matrix:
        groups = [(int(j), a - int(j)) for a, j in zip(parts, offsets)]
        rows.append(_mary_letter_word(groups, m))
    return np.asarray(rows, dtype=np.int64)


def scd_chain_power_quotient(m, n, cap=DEFAULT_CAP, _depth=0):
    """Decomposition of Cⁿ/ℤₙ for a chain C with m+1 vertices.

    Nonconstant elements are handled in partition-necklace coordinates, one
    stratum per m-divisible fundamental necklace; the two constant elements
    are reattached to the unique chain spanning ranks 1..mn-1.
    """
    if m < 0 or n < 1:
        raise ValueError("need m >= 0 and n >= 1")
    quot = build_power_quotient(chain_poset(m + 1), n, cap)
    if m == 0:
        chains = [Chain((0,))]
        return _certify(quot, chains, [ChainProvenance("aperiodic", "[]", _depth)], 0)
    if n == 1:
        chains = [Chain(tuple(range(m + 1)))]
        return _certify(quot, chains, [ChainProvenance("aperiodic", "[]", _depth)], m)

    chains_out = []
    prov_out = []
    for eparts in composition_necklaces(n, 2 if m == 1 else 1):
        parts = tuple(m * e for e in eparts)
        s = len(parts)
        d = period(parts)
        alpha_str = _word_str(parts)
        if d == s:
            # product-of-chains stratum over the splitting offsets
            sizes = [a - 1 for a in parts]
            _, grid_scd = scd_chain_product(sizes)
            offsets = _coords_matrix(np.arange(int(np.prod(sizes)), dtype=np.int64), sizes)
            ids = quot.ids_of_words(_fiber_letter_words(parts, offsets, m))
            mapped = [Chain(tuple(int(ids[e]) for e in c.elements))
                      for c in grid_scd.chains]
            if parts == (m * n,):
                # the lone rank-1..mn-1 chain carries the two constants
                assert len(mapped) == 1
                chain = mapped[0]
                assert int(quot.poset.rank[chain.elements[0]]) == 1
                assert int(quot.poset.rank[chain.elements[-1]]) == m * n - 1
                chains_out.append(Chain((0,) + chain.elements + (quot.poset.n_elements - 1,)))
                prov_out.append(ChainProvenance("extremes", alpha_str, _depth))
            else:
                chains_out.extend(mapped)
                prov_out.extend(ChainProvenance("aperiodic", alpha_str, _depth)
                                for _ in mapped)
        elif d == 1:
            # all parts equal: a strictly smaller single-chain quotient
            a = parts[0]
            sub = scd_chain_power_quotient(a - 2, s, cap, _depth + 1)
            ids = quot.ids_of_words(_fiber_letter_words(parts, sub.quotient.words, m))
            case = "peel" if s == n else "binary"
            mapped, prov = _map_chains(sub.scd.chains, ids, case, alpha_str,
                                       sub.provenance)
            chains_out.extend(mapped)
            prov_out.extend(prov)
        else:
            # periodic index: power quotient of the d-part offset grid
            beta = parts[:d]
            sizes = [a - 1 for a in beta]
            grid, grid_scd = scd_chain_product(sizes)
            coords_lut = _coords_matrix(np.arange(grid.n_elements, dtype=np.int64), sizes)
            sub = scd_power_quotient(grid, grid_scd, s // d, cap, _depth + 1)
            sub_words = sub.quotient.words
            offsets = np.hstack([coords_lut[sub_words[:, b]] for b in range(s // d)])
            ids = quot.ids_of_words(_fiber_letter_words(parts, offsets, m))
            mapped, prov = _map_chains(sub.scd.chains, ids, "fold", alpha_str,
                                       sub.provenance)
            chains_out.extend(mapped)
            prov_out.extend(prov)

    return _certify(quot, chains_out, prov_out, m * n)

