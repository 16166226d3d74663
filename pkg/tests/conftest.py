import pytest

from cycscd.engine import scd_chain_product
from cycscd.poset import Chain, RankedPoset, SymmetricChainDecomposition, chain_poset


def block_product_poset(poset, block_alphabet):
    """Product order on block tuples, covers = raise one coordinate."""
    index = {b: i for i, b in enumerate(block_alphabet)}
    covers = []
    for b in block_alphabet:
        for pos in range(len(b)):
            for up in poset.up[b[pos]]:
                c = b[:pos] + (up,) + b[pos + 1:]
                if c in index:
                    covers.append((index[b], index[c]))
    rank = [sum(int(poset.rank[v]) for v in b) for b in block_alphabet]
    return RankedPoset(len(block_alphabet), covers, rank)


@pytest.fixture
def chain2():
    return chain_poset(2)


@pytest.fixture
def chain2_scd():
    return SymmetricChainDecomposition((Chain((0, 1)),), 1)


@pytest.fixture
def grid22():
    # 2x2 grid: 0 bottom, 1/2 middle, 3 top
    return RankedPoset(4, [(0, 1), (0, 2), (1, 3), (2, 3)], [0, 1, 1, 2])


@pytest.fixture
def grid22_hook_scd():
    return SymmetricChainDecomposition((Chain((0, 1, 3)), Chain((2,))), 2)


@pytest.fixture
def vee():
    # one bottom, two tops: no symmetric chain decomposition exists
    return RankedPoset(3, [(0, 1), (0, 2)], [0, 1, 1])


def chain_scd(length):
    return SymmetricChainDecomposition((Chain(tuple(range(length))),), length - 1)


@pytest.fixture
def grid_factory():
    return scd_chain_product
