"""JSON documents for posets, decompositions, and provenance sidecars.

Serialization is byte-deterministic: sorted keys, compact separators, one
trailing newline.
"""

import json

from .errors import CycScdError, DocumentError
from .poset import Chain, SymmetricChainDecomposition, validate_ranked_poset


def _dump(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise DocumentError(f"{path}: {exc}") from None


def poset_to_doc(poset):
    return {
        "n": poset.n_elements,
        "rank": [int(r) for r in poset.rank],
        "covers": [[int(lo), int(hi)] for lo, hi in poset.covers],
    }


def poset_from_doc(doc):
    try:
        n = doc["n"]
        rank = doc["rank"]
        covers = doc["covers"]
    except (TypeError, KeyError) as exc:
        raise DocumentError(f"poset document missing field: {exc}") from None
    try:
        return validate_ranked_poset(n, covers, rank)
    except CycScdError as exc:
        raise DocumentError(f"invalid poset document: {exc}") from None


def scd_to_doc(scd):
    return {
        "target_rank": scd.target_rank,
        "chains": [list(c.elements) for c in scd.chains],
    }


def scd_from_doc(doc):
    try:
        target = int(doc["target_rank"])
        chains = tuple(Chain(tuple(c)) for c in doc["chains"])
    except (TypeError, KeyError, ValueError) as exc:
        raise DocumentError(f"invalid decomposition document: {exc}") from None
    return SymmetricChainDecomposition(chains, target)


def provenance_to_doc(provenance):
    return [
        {"chain_index": i, "case": p.case, "alpha": p.alpha, "depth": p.depth}
        for i, p in enumerate(provenance)
    ]


def load_poset(path):
    return poset_from_doc(_load_json(path))


def load_scd(path):
    return scd_from_doc(_load_json(path))


def save_poset(path, poset):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(_dump(poset_to_doc(poset)))


def save_scd(path, scd):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(_dump(scd_to_doc(scd)))


def save_provenance(path, provenance):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(_dump(provenance_to_doc(provenance)))
