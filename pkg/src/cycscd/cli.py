"""Command-line surface.

Subcommands tie together construction (``quotient-scd``), the stream codecs
(``encode``), verification (``verify``), and the counting/oracle checks
(``census``, ``oracle``).  Stdout is byte-deterministic for fixed inputs and
flags; timing goes to stderr.

Exit codes: 0 success, 1 parse/validation error, 2 size cap exceeded,
3 verification or agreement failure.
"""

import argparse
import os
import random
import sys
import time
from dataclasses import dataclass

from .documents import load_poset, load_scd, save_poset, save_provenance, save_scd
from .engine import scd_chain_product, scd_power_quotient
from .errors import (
    CycScdError,
    DocumentError,
    InternalCheckFailed,
    SizeLimitExceeded,
)
from .necklace import DEFAULT_CAP, Necklace, build_power_quotient
from .oracle import burnside_count, naive_quotient, quotients_agree
from .partition import (
    PartitionNecklace,
    block_code,
    binary_from_partition,
    mary_from_partition,
    partition_from_binary,
    partition_from_mary,
)
from .poset import (
    CoverMorphism,
    RankedPoset,
    SymmetricChainDecomposition,
    transfer_scd,
    verify_scd,
)


@dataclass(frozen=True)
class RunConfig:
    """Validated parameters of one CLI invocation."""

    command: str
    poset_path: str = None
    scd_path: str = None
    n: int = 1
    m: int = 1
    k: int = 2
    cap: int = DEFAULT_CAP
    inverse: bool = False
    mode: str = None
    out: str = None
    provenance: str = None
    out_poset: str = None
    seed: int = 0
    count: int = 20


def _default_cap():
    raw = os.environ.get("SCD_CAP", "").strip()
    if not raw:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise DocumentError(f"SCD_CAP must be an integer, got {raw!r}") from None
    if cap < 1:
        raise DocumentError("SCD_CAP must be positive")
    return cap


def _config(args):
    cap = args.cap if getattr(args, "cap", None) is not None else _default_cap()
    cfg = RunConfig(
        command=args.command,
        poset_path=getattr(args, "poset", None),
        scd_path=getattr(args, "scd", None),
        n=getattr(args, "n", 1),
        m=getattr(args, "m", 1),
        k=getattr(args, "k", 2),
        cap=cap,
        inverse=getattr(args, "inverse", False),
        mode=getattr(args, "mode", None),
        out=getattr(args, "out", None),
        provenance=getattr(args, "provenance", None),
        out_poset=getattr(args, "out_poset", None),
        seed=getattr(args, "seed", 0) or 0,
        count=getattr(args, "count", 20),
    )
    if cfg.n < 1:
        raise DocumentError("--n must be >= 1")
    if cfg.m < 1:
        raise DocumentError("--m must be >= 1")
    if cfg.k < 1:
        raise DocumentError("--k must be >= 1")
    if cfg.cap < 1:
        raise DocumentError("--cap must be >= 1")
    if cfg.count < 1:
        raise DocumentError("--count must be >= 1")
    return cfg


def _cmd_quotient_scd(args):
    cfg = _config(args)
    poset = load_poset(cfg.poset_path)
    scd = load_scd(cfg.scd_path)
    started = time.perf_counter()
    cert = scd_power_quotient(poset, scd, cfg.n, cfg.cap)
    elapsed = time.perf_counter() - started
    if cfg.out:
        save_scd(cfg.out, cert.scd)
    if cfg.provenance:
        save_provenance(cfg.provenance, cert.provenance)
    if cfg.out_poset:
        save_poset(cfg.out_poset, cert.poset)
    census = cert.poset.census()
    print(f"{cert.poset.n_elements} elements, {len(cert.scd.chains)} chains, "
          f"max census {int(census.max())}")
    print(f"runtime {elapsed:.3f}s", file=sys.stderr)
    return 0


def _parse_bracketed(line):
    text = line.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise DocumentError(f"expected [a,b,...], got {text!r}")
    inner = text[1:-1].strip()
    if not inner:
        raise DocumentError("empty necklace")
    try:
        return tuple(int(tok) for tok in inner.split(","))
    except ValueError:
        raise DocumentError(f"non-integer entry in {text!r}") from None


def _encode_line(cfg, values):
    if cfg.mode == "psi":
        if cfg.inverse:
            return str(binary_from_partition(PartitionNecklace.from_parts(values)))
        return str(partition_from_binary(Necklace.from_word(values)))
    if cfg.mode == "psinm":
        if cfg.inverse:
            return str(mary_from_partition(PartitionNecklace.from_parts(values), cfg.m))
        return str(partition_from_mary(Necklace.from_word(values), cfg.m))
    if cfg.inverse:
        raise DocumentError("blockcode has no inverse")
    return str(block_code(PartitionNecklace.from_parts(values)))


def _cmd_encode(args):
    cfg = _config(args)
    failed = False
    for line in sys.stdin:
        if not line.strip():
            continue
        try:
            print(_encode_line(cfg, _parse_bracketed(line)))
        except (CycScdError, ValueError) as exc:
            failed = True
            print(f"ERROR: {exc}")
    return 1 if failed else 0


def _cmd_verify(args):
    cfg = _config(args)
    poset = load_poset(cfg.poset_path)
    scd = load_scd(cfg.scd_path)
    report = verify_scd(poset, scd)
    for name in ("saturated", "disjoint", "covering", "symmetric"):
        if getattr(report, name):
            print(f"{name}: OK")
        else:
            where = report.counterexamples[name]
            if name in ("disjoint", "covering"):
                print(f"{name}: FAIL at element {where}")
            elif name == "saturated":
                print(f"{name}: FAIL at {where}")
            else:
                print(f"{name}: FAIL at chain {list(where)}")
    return 0 if report.ok else 3


def _cmd_census(args):
    cfg = _config(args)
    poset = load_poset(cfg.poset_path)
    quot = build_power_quotient(poset, cfg.n, cfg.cap)
    census = quot.poset.census()
    ranks = range(int(quot.poset.rank.min()), int(quot.poset.rank.max()) + 1)
    print(" ".join(f"{r}:{int(census[r])}" for r in ranks))
    return 0


def _cmd_oracle_burnside(args):
    cfg = _config(args)
    print(burnside_count(cfg.k, cfg.n))
    return 0


def _cmd_oracle_agree(args):
    cfg = _config(args)
    poset = load_poset(cfg.poset_path)
    fast = build_power_quotient(poset, cfg.n, cfg.cap)
    naive = naive_quotient(poset, cfg.n)
    if quotients_agree(fast, naive):
        print("naive == fast: OK")
        return 0
    print("naive == fast: MISMATCH")
    return 3


def _cmd_oracle_fuzz(args):
    cfg = _config(args)
    rng = random.Random(cfg.seed)
    failures = 0
    for _ in range(cfg.count):
        lengths = [rng.randint(1, 4) for _ in range(rng.randint(1, 3))]
        poset, scd = scd_chain_product(lengths)
        perm = list(range(poset.n_elements))
        rng.shuffle(perm)
        rank = [0] * poset.n_elements
        for x in range(poset.n_elements):
            rank[perm[x]] = int(poset.rank[x])
        covers = [(perm[int(lo)], perm[int(hi)]) for lo, hi in poset.covers]
        target = RankedPoset(poset.n_elements, covers, rank)
        try:
            transfer_scd(CoverMorphism(poset, target, tuple(perm)), scd)
        except CycScdError:
            failures += 1
            continue
        # moving one element between chains must break disjoint or covering
        chains = [list(c.elements) for c in scd.chains]
        i = rng.randrange(len(chains))
        e = rng.choice(chains[i])
        j = rng.randrange(len(chains))
        tampered = [list(c) for c in chains]
        tampered[j] = tampered[j] + [e]
        bad = SymmetricChainDecomposition(tuple(tuple(c) for c in tampered),
                                          scd.target_rank)
        report = verify_scd(poset, bad)
        if report.disjoint:
            failures += 1
    if failures:
        print(f"fuzz: FAIL ({failures}/{cfg.count} cases)")
        return 3
    print(f"fuzz: OK ({cfg.count} cases)")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cycscd",
        description="Symmetric chain decompositions of cyclic power quotients.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("quotient-scd", help="decompose P^n/Z_n from a poset and its SCD")
    p.add_argument("poset")
    p.add_argument("scd")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--out")
    p.add_argument("--provenance")
    p.add_argument("--out-poset", dest="out_poset")
    p.set_defaults(func=_cmd_quotient_scd)

    p = sub.add_parser("encode", help="stream codec: one necklace per line on stdin")
    p.add_argument("mode", choices=("psi", "psinm", "blockcode"))
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--inverse", action="store_true")
    p.set_defaults(func=_cmd_encode)

    p = sub.add_parser("verify", help="check a decomposition against a poset")
    p.add_argument("poset")
    p.add_argument("scd")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("census", help="rank census of P^n/Z_n")
    p.add_argument("poset")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("oracle", help="brute-force cross-checks")
    osub = p.add_subparsers(dest="oracle_command", required=True)

    q = osub.add_parser("burnside", help="necklace count by orbit counting")
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q.set_defaults(func=_cmd_oracle_burnside)

    q = osub.add_parser("agree", help="naive vs fast quotient construction")
    q.add_argument("poset")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--cap", type=int, default=None)
    q.set_defaults(func=_cmd_oracle_agree)

    q = osub.add_parser("fuzz", help="randomized transfer and tamper properties")
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--count", type=int, default=20)
    q.set_defaults(func=_cmd_oracle_fuzz)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        return args.func(args)
    except SizeLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalCheckFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except CycScdError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
