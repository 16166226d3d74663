import pytest
from hypothesis import given
from hypothesis import strategies as st

from cycscd.errors import (
    AllOnes,
    AperiodicAlpha,
    ExcludedNecklace,
    NotDivisible,
    PeriodicAlpha,
)
from cycscd.necklace import Necklace, build_power_quotient, period
from cycscd.partition import (
    PartitionNecklace,
    binary_from_partition,
    block_code,
    build_partition_poset,
    enumerate_partition_necklaces,
    fiber_enumerate,
    fiber_periodic_cover,
    fiber_product_cover,
    fundamental_necklaces,
    is_divisible,
    is_fundamental,
    mary_from_partition,
    partition_covers_up,
    partition_from_binary,
    partition_from_mary,
    realize_offsets,
)
from cycscd.poset import chain_poset, verify_cover_morphism

compositions = st.lists(st.integers(1, 5), min_size=1, max_size=7).filter(
    lambda parts: any(a >= 2 for a in parts)).map(tuple)


def q(*parts):
    return PartitionNecklace.from_parts(parts)


class TestPartitionNecklace:
    def test_canonicalizes(self):
        assert q(4, 1, 1).parts == (1, 1, 4)

    def test_all_ones_excluded(self):
        with pytest.raises(AllOnes):
            q(1, 1, 1)

    def test_rank_is_part_count(self):
        x = q(2, 4)
        assert (x.n, x.r) == (6, 2)


class TestGapCodec:
    def test_forward_examples(self):
        assert partition_from_binary(Necklace.from_word((1, 0, 1, 0, 0, 0))) == q(2, 4)
        assert partition_from_binary(Necklace.from_word((1, 1, 1, 1, 1, 0))) == q(1, 1, 1, 1, 2)
        assert partition_from_binary(Necklace.from_word((1, 0, 0, 0, 0, 0))) == q(6)

    def test_inverse_examples(self):
        assert binary_from_partition(q(2, 4)) == Necklace.from_word((1, 0, 1, 0, 0, 0))
        assert binary_from_partition(q(6)) == Necklace.from_word((1, 0, 0, 0, 0, 0))

    def test_excluded(self):
        with pytest.raises(ExcludedNecklace):
            partition_from_binary(Necklace.from_word((0, 0, 0)))
        with pytest.raises(ExcludedNecklace):
            partition_from_binary(Necklace.from_word((1, 1)))

    @pytest.mark.parametrize("n", range(2, 13))
    def test_roundtrip_exhaustive(self, n):
        for x in enumerate_partition_necklaces(n):
            assert partition_from_binary(binary_from_partition(x)) == x

    @given(compositions)
    def test_roundtrip_random(self, parts):
        x = PartitionNecklace.from_parts(parts)
        back = partition_from_binary(binary_from_partition(x))
        assert back == x
        assert back.r == x.r  # rank preserved


class TestBlockCode:
    @pytest.mark.parametrize("parts,expect", [
        ((1, 1, 4), (6,)),
        ((2, 4), (2, 4)),
        ((1, 2, 3), (3, 3)),
    ])
    def test_examples(self, parts, expect):
        assert block_code(q(*parts)).parts == expect

    @given(compositions)
    def test_idempotent_and_fundamental(self, parts):
        x = PartitionNecklace.from_parts(parts)
        f = block_code(x)
        assert is_fundamental(f)
        assert block_code(f) == f
        assert x.r >= f.r
        assert (x.r == f.r) == is_fundamental(x)

    def test_refinement_oracle(self):
        # dropping separators one at a time walks down to the block code's orbit
        x = q(1, 2, 3)
        f = block_code(x)
        assert f == q(3, 3)
        assert x in {c for c in partition_covers_up(q(3, 3))} | {
            c2 for c in partition_covers_up(q(3, 3)) for c2 in partition_covers_up(c)}


class TestMaryCodec:
    def test_forward_example(self):
        assert partition_from_mary(Necklace.from_word((2, 1, 0)), 2) == q(1, 1, 4)

    def test_single_one_gives_full_gap(self):
        for n in range(1, 8):
            x = Necklace.from_word((1,) + (0,) * (n - 1))
            assert partition_from_mary(x, 2) == q(2 * n)

    def test_inverse_example(self):
        assert mary_from_partition(q(1, 1, 4), 2) == Necklace.from_word((2, 1, 0))

    def test_m1_reduces_to_binary(self):
        for n in range(2, 10):
            for x in enumerate_partition_necklaces(n):
                assert mary_from_partition(x, 1) == binary_from_partition(x)

    def test_not_divisible(self):
        with pytest.raises(NotDivisible):
            mary_from_partition(q(3, 3), 2)

    def test_excluded(self):
        with pytest.raises(ExcludedNecklace):
            partition_from_mary(Necklace.from_word((2, 2, 2)), 2)
        with pytest.raises(ExcludedNecklace):
            partition_from_mary(Necklace.from_word((0, 3)), 2)

    @pytest.mark.parametrize("m,n", [(m, n) for m in (1, 2, 3, 4)
                                     for n in range(1, 13) if m * n <= 12])
    def test_roundtrip_and_rank(self, m, n):
        quot = build_power_quotient(chain_poset(m + 1), n)
        count = 0
        for i in range(quot.poset.n_elements):
            x = quot.necklace(i)
            if len(set(x.word)) == 1 and x.word[0] in (0, m):
                continue
            y = partition_from_mary(x, m)
            assert y.n == m * n
            assert y.r == sum(x.word)
            assert is_divisible(block_code(y), m)
            assert mary_from_partition(y, m) == x
            count += 1
        divisible = [z for z in enumerate_partition_necklaces(m * n)
                     if is_divisible(block_code(z), m)]
        assert count == len(divisible)
        for z in divisible:
            assert partition_from_mary(mary_from_partition(z, m), m) == z


class TestOrderIsomorphism:
    @pytest.mark.parametrize("m,n", [(1, 6), (1, 8), (2, 4), (3, 3)])
    def test_covers_match_both_ways(self, m, n):
        # covers of the letter quotient (constants removed) against covers of
        # the partition poset restricted to the m-divisible strata
        quot = build_power_quotient(chain_poset(m + 1), n)
        ambient = build_partition_poset(m * n)
        fwd = {}
        for i in range(quot.poset.n_elements):
            x = quot.necklace(i)
            if len(set(x.word)) == 1 and x.word[0] in (0, m):
                continue
            fwd[i] = ambient.index[partition_from_mary(x, m)]
        image = set(fwd.values())
        quot_covers = {(fwd[lo], fwd[hi]) for lo, hi in quot.poset.covers.tolist()
                       if lo in fwd and hi in fwd}
        part_covers = {(lo, hi) for lo, hi in ambient.poset.covers.tolist()
                       if lo in image and hi in image}
        assert quot_covers == part_covers


class TestFibers:
    def test_chain_fiber(self):
        got = [f.necklace().parts for f in fiber_enumerate(q(6))]
        assert got == [(6,), (1, 5), (1, 1, 4), (1, 1, 1, 3), (1, 1, 1, 1, 2)]
        assert [f.rank for f in fiber_enumerate(q(6))] == [1, 2, 3, 4, 5]

    def test_rigid_fiber(self):
        assert [f.necklace().parts for f in fiber_enumerate(q(2, 2, 2))] == [(2, 2, 2)]

    def test_symmetric_fiber(self):
        got = {f.necklace().parts for f in fiber_enumerate(q(3, 3))}
        assert got == {(3, 3), (1, 2, 3), (1, 2, 1, 2)}

    @pytest.mark.parametrize("n", range(2, 13))
    def test_fibers_partition_everything(self, n):
        everything = set(enumerate_partition_necklaces(n))
        seen = set()
        for alpha in fundamental_necklaces(n):
            for f in fiber_enumerate(alpha):
                x = f.necklace()
                assert block_code(x) == alpha
                assert x not in seen
                seen.add(x)
        assert seen == everything

    @pytest.mark.parametrize("n", range(2, 13))
    def test_fiber_rank_span_centered(self, n):
        for alpha in fundamental_necklaces(n):
            ranks = [f.rank for f in fiber_enumerate(alpha)]
            assert min(ranks) + max(ranks) == n
            assert min(ranks) == alpha.r

    def test_non_fundamental_rejected(self):
        with pytest.raises(ValueError):
            fiber_enumerate(q(1, 3))

    def test_realize_block_code_inverse(self):
        assert realize_offsets(q(2, 4), (0, 1)).parts == (1, 3, 2)


class TestFiberCovers:
    def test_aperiodic_example(self):
        m = fiber_product_cover(q(2, 4))
        assert verify_cover_morphism(m).ok
        assert m.source.n_elements == 3
        assert m.rank_offset == 2

    def test_single_part(self):
        m = fiber_product_cover(q(7))
        assert verify_cover_morphism(m).ok
        assert m.source.n_elements == 6

    def test_periodic_examples(self):
        m = fiber_periodic_cover(q(3, 3))
        assert verify_cover_morphism(m).ok
        assert m.source.n_elements == 3
        m = fiber_periodic_cover(q(2, 2))
        assert verify_cover_morphism(m).ok
        assert m.source.n_elements == 1

    def test_constant_alpha(self):
        for mm, r in ((2, 3), (3, 3), (4, 2)):
            m = fiber_periodic_cover(PartitionNecklace.from_parts((mm,) * r))
            assert verify_cover_morphism(m).ok

    def test_wrong_periodicity_rejected(self):
        with pytest.raises(PeriodicAlpha):
            fiber_product_cover(q(3, 3))
        with pytest.raises(AperiodicAlpha):
            fiber_periodic_cover(q(2, 4))

    @pytest.mark.parametrize("n", range(2, 11))
    def test_all_fibers_covered(self, n):
        ambient = build_partition_poset(n)
        for alpha in fundamental_necklaces(n):
            if period(alpha.parts) == alpha.r:
                morphism = fiber_product_cover(alpha, ambient)
            else:
                morphism = fiber_periodic_cover(alpha, ambient)
            report = verify_cover_morphism(morphism)
            assert report.ok, (alpha, report.counterexamples)


class TestPartitionPoset:
    def test_size_matches_binary_count(self):
        from cycscd.oracle import burnside_count
        for n in range(2, 13):
            assert len(enumerate_partition_necklaces(n)) == burnside_count(2, n) - 2

    def test_covers_are_splits(self):
        ups = partition_covers_up(q(4))
        assert {u.parts for u in ups} == {(1, 3), (2, 2)}
        # splitting [1,2] into all-ones is dropped
        assert {u.parts for u in partition_covers_up(q(1, 2))} == set()
