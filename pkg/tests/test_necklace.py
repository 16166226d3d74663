import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cycscd.errors import BaseMismatch, EmptyWord, PatternViolation, SizeLimitExceeded
from cycscd.necklace import (
    Necklace,
    build_power_quotient,
    canonical_rotation,
    classify_fiber,
    enumerate_necklaces,
    fold_periodic,
    period,
    unfold_periodic,
)
from cycscd.oracle import burnside_count, naive_quotient, quotients_agree, rank_census
from cycscd.poset import RankedPoset, chain_poset, poset_rank

words = st.lists(st.integers(0, 3), min_size=1, max_size=12).map(tuple)


class TestCanonicalRotation:
    @pytest.mark.parametrize("word,expect", [
        ((1, 0, 0), ((0, 0, 1), 1)),
        ((0, 0, 0), ((0, 0, 0), 0)),
        ((2, 1, 0, 2, 1, 0), ((0, 2, 1, 0, 2, 1), 2)),
    ])
    def test_examples(self, word, expect):
        assert canonical_rotation(word) == expect

    def test_empty(self):
        with pytest.raises(EmptyWord):
            canonical_rotation(())

    @given(words)
    @settings(max_examples=300)
    def test_matches_brute_force(self, word):
        n = len(word)
        shift = min(range(n), key=lambda s: (word[s:] + word[:s], s))
        assert canonical_rotation(word) == (word[shift:] + word[:shift], shift)

    @given(words, st.integers(0, 20))
    def test_rotation_invariant_and_idempotent(self, word, k):
        k %= len(word)
        canon, _ = canonical_rotation(word)
        assert canonical_rotation(word[k:] + word[:k])[0] == canon
        assert canonical_rotation(canon)[0] == canon

    def test_generic_labels(self):
        assert canonical_rotation(("b", "a", "c"))[0] == ("a", "c", "b")
        assert canonical_rotation(((1, 2), (0, 9), (1, 0)))[0] == ((0, 9), (1, 0), (1, 2))


class TestPeriod:
    @pytest.mark.parametrize("word,expect", [
        ((0, 1, 0, 1), 2),
        ((0, 0, 0), 1),
        ((0, 1, 1, 0, 1, 1), 3),
    ])
    def test_examples(self, word, expect):
        assert period(word) == expect

    @given(words)
    def test_divides_length_and_repeats(self, word):
        p = period(word)
        assert len(word) % p == 0
        assert word == word[:p] * (len(word) // p)


class TestEnumerate:
    def test_binary_three(self):
        got = enumerate_necklaces(3, 2)
        assert [x.word for x in got] == [(0, 0, 0), (0, 0, 1), (0, 1, 1), (1, 1, 1)]
        assert [x.period for x in got] == [1, 3, 3, 1]

    def test_single_letter(self):
        assert len(enumerate_necklaces(5, 1)) == 1

    def test_binary_six(self):
        assert len(enumerate_necklaces(6, 2)) == 14

    def test_explicit_alphabet(self):
        got = enumerate_necklaces(2, ["x", "a"])
        assert [x.word for x in got] == [("a", "a"), ("a", "x"), ("x", "x")]

    def test_ascending_and_canonical(self):
        got = [x.word for x in enumerate_necklaces(7, 3)]
        assert got == sorted(got)
        assert all(canonical_rotation(w)[0] == w for w in got)

    def test_period_stratification(self):
        # orbits of period d correspond to aperiodic d-bead orbits
        for n in (6, 8, 12):
            by_period = {}
            for x in enumerate_necklaces(n, 2):
                by_period[x.period] = by_period.get(x.period, 0) + 1
            assert sum(by_period.values()) == burnside_count(2, n)
            for d, count in by_period.items():
                assert n % d == 0
                aperiodic_d = sum(1 for y in enumerate_necklaces(d, 2) if y.period == d)
                assert count == aperiodic_d


class TestPowerQuotient:
    def test_n1_is_identity(self, chain2):
        q = build_power_quotient(chain2, 1)
        assert q.poset == chain2

    def test_chain2_cubed(self, chain2):
        q = build_power_quotient(chain2, 3)
        assert q.poset.n_elements == 4
        assert q.poset.rank.tolist() == [0, 1, 2, 3]
        assert q.poset.covers.tolist() == [[0, 1], [1, 2], [2, 3]]

    def test_chain2_sixth_census(self, chain2):
        q = build_power_quotient(chain2, 6)
        assert q.poset.n_elements == 14
        assert q.poset.census().tolist() == [1, 1, 3, 4, 3, 1, 1]

    def test_census_matches_burnside_weights(self, chain2):
        for n in range(1, 11):
            q = build_power_quotient(chain2, n)
            assert q.poset.n_elements == burnside_count(2, n)
            census = rank_census(q.poset)
            assert census.is_palindromic(n * poset_rank(chain2))

    def test_agrees_with_naive(self, grid22):
        for poset in (chain_poset(2), chain_poset(3), grid22):
            for n in range(1, 5):
                fast = build_power_quotient(poset, n)
                assert quotients_agree(fast, naive_quotient(poset, n))

    def test_cap(self, chain2):
        with pytest.raises(SizeLimitExceeded):
            build_power_quotient(chain2, 12, cap=20)

    def test_id_lookup(self, chain2):
        q = build_power_quotient(chain2, 5)
        for i in range(q.poset.n_elements):
            x = q.necklace(i)
            assert q.id_of_word(x.word) == i
            assert q.id_of_word(x.word[2:] + x.word[:2]) == i


def two_chains_projection():
    # disjoint union of a 2-chain and a 3-chain, labeled by chain index
    poset = RankedPoset(5, [(0, 1), (2, 3), (3, 4)], [0, 1, 0, 1, 2])
    return poset, {0: 0, 1: 0, 2: 1, 3: 1, 4: 1}


class TestFibers:
    def test_constant_base(self):
        _, proj = two_chains_projection()
        key = classify_fiber(Necklace.from_word((0, 1, 0, 1)), proj)
        assert key.base.word == (0, 0, 0, 0)
        assert key.period_d == 1

    def test_alternating_base(self):
        _, proj = two_chains_projection()
        key = classify_fiber(Necklace.from_word((0, 2, 1, 3)), proj)
        assert key.base.word == (0, 1, 0, 1)
        assert key.period_d == 2

    def test_partition_of_all_necklaces(self):
        poset, proj = two_chains_projection()
        for n in (2, 3, 4):
            quot = build_power_quotient(poset, n)
            fibers = {}
            for i in range(quot.poset.n_elements):
                key = classify_fiber(quot.necklace(i), proj)
                fibers.setdefault(key, []).append(i)
            assert sum(len(v) for v in fibers.values()) == quot.poset.n_elements
            sizes = {2: 0, 3: 1}
            for key, members in fibers.items():
                if key.period_d == key.base.n:  # aperiodic base: product fiber
                    expect = 1
                    for i in key.base.word:
                        expect *= [2, 3][i]
                    assert len(members) == expect


class TestFoldUnfold:
    def test_fold_pairs_coordinates(self):
        # n=4, d=2 fiber: blocks pair the coordinates under the base pattern
        _, proj = two_chains_projection()
        x = Necklace.from_word((0, 2, 1, 3))
        key = classify_fiber(x, proj)
        b = fold_periodic(x, proj, key)
        assert b.beta == (0, 1)
        assert len(b.blocks) == 2 and all(len(block) == 2 for block in b.blocks)
        assert unfold_periodic(b, proj, 4) == x

    def test_aperiodic_single_block(self):
        _, proj = two_chains_projection()
        x = Necklace.from_word((0, 2, 2))
        key = classify_fiber(x, proj)
        assert key.period_d == 3
        b = fold_periodic(x, proj, key)
        assert len(b.blocks) == 1

    def test_constant_base_blocks_are_letters(self):
        _, proj = two_chains_projection()
        x = Necklace.from_word((2, 3, 2, 4))
        key = classify_fiber(x, proj)
        assert key.period_d == 1
        b = fold_periodic(x, proj, key)
        assert b.blocks == ((2,), (3,), (2,), (4,))

    def test_roundtrip_exhaustive(self):
        poset, proj = two_chains_projection()
        for n in range(1, 7):
            quot = build_power_quotient(poset, n)
            images = {}
            for i in range(quot.poset.n_elements):
                x = quot.necklace(i)
                key = classify_fiber(x, proj)
                b = fold_periodic(x, proj, key)
                assert unfold_periodic(b, proj, n) == x
                assert (key, b) not in images  # injective fiber-wise
                images[(key, b)] = x

    def test_base_mismatch(self):
        _, proj = two_chains_projection()
        x = Necklace.from_word((0, 2))
        wrong = classify_fiber(Necklace.from_word((0, 0)), proj)
        with pytest.raises(BaseMismatch):
            fold_periodic(x, proj, wrong)

    def test_pattern_violation(self):
        _, proj = two_chains_projection()
        x = Necklace.from_word((0, 2, 1, 3))
        b = fold_periodic(x, proj, classify_fiber(x, proj))
        bad = type(b)(b.blocks, (1, 0))
        with pytest.raises(PatternViolation):
            unfold_periodic(bad, proj, 4)
        with pytest.raises(PatternViolation):
            unfold_periodic(b, proj, 6)

    def test_cover_preservation_small(self):
        # quotient covers inside one fiber match block-necklace covers
        poset, proj = two_chains_projection()
        n = 4
        quot = build_power_quotient(poset, n)
        fibers = {}
        for i in range(quot.poset.n_elements):
            x = quot.necklace(i)
            fibers.setdefault(classify_fiber(x, proj), {})[i] = x
        chains = {0: (0, 1), 1: (2, 3, 4)}
        from conftest import block_product_poset
        for key, members in fibers.items():
            d = key.period_d
            folded = {i: fold_periodic(x, proj, key) for i, x in members.items()}
            beta = key.base.word[:d]
            block_alphabet = sorted(
                itertools.product(*(chains[i] for i in beta)))
            blockq = build_power_quotient(
                block_product_poset(poset, block_alphabet), n // d)
            index = {w: j for j, w in enumerate(map(tuple, blockq.words))}
            to_block = {i: index[tuple(block_alphabet.index(bl) for bl in b.blocks)]
                        for i, b in folded.items()}
            for (lo, hi) in quot.poset.covers.tolist():
                if lo in members and hi in members:
                    assert blockq.poset.has_covers([(to_block[lo], to_block[hi])])[0]
            back = {v: k for k, v in to_block.items()}
            for (lo, hi) in blockq.poset.covers.tolist():
                assert quot.poset.has_covers([(back[lo], back[hi])])[0]
