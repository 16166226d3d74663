"""Symmetric chain decompositions of cyclic power quotients of ranked posets."""

from .engine import (
    ChainProvenance,
    ScdCertificate,
    scd_chain_power_quotient,
    scd_chain_product,
    scd_power_quotient,
    scd_times_chain,
)
from .necklace import (
    DEFAULT_CAP,
    BlockNecklace,
    FiberKey,
    Necklace,
    PowerQuotient,
    build_power_quotient,
    canonical_rotation,
    classify_fiber,
    enumerate_necklaces,
    fold_periodic,
    period,
    unfold_periodic,
)
from .oracle import (
    RankCensus,
    burnside_count,
    exhaustive_scd_search,
    naive_quotient,
    quotients_agree,
    rank_census,
)
from .partition import (
    FiberElement,
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
    partition_from_binary,
    partition_from_mary,
    realize_offsets,
)
from .poset import (
    Chain,
    CoverMorphism,
    RankedPoset,
    SymmetricChainDecomposition,
    chain_poset,
    induced_subposet,
    is_centered_subposet,
    poset_rank,
    product_poset,
    transfer_scd,
    validate_ranked_poset,
    verify_cover_morphism,
    verify_scd,
)

__version__ = "0.1.0"
