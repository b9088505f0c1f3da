"""Batch command-line front end.

Subcommands compute decomposition matrices, Gram matrices, basic sets and
block partitions, or run the brute-force verification suites.  Output is
JSON (canonical) or CSV, deterministic byte-for-byte for a fixed
configuration.  The environment variable WREATH_GUARD_ELEMS overrides the
oracle's element guard (verification may be slow above the default).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import decomp, oracle
from .partitions import (
    format_multipartition,
    format_partition,
    is_odd_prime,
    p_core_and_quotient,
)

BLOCKS_GUARD = 40
KMATRIX_GUARD = 6


def _guard_from_env() -> int | None:
    raw = os.environ.get("WREATH_GUARD_ELEMS")
    return int(raw) if raw else None


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise SystemExit(f"error: {message}")


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json_text(payload) -> str:
    return json.dumps(payload, separators=(",", ":"), default=str) + "\n"


def cmd_kmatrix(args) -> int:
    _require(is_odd_prime(args.p), f"p must be an odd prime, got {args.p}")
    _require(0 <= args.w <= KMATRIX_GUARD, f"w must be in 0..{KMATRIX_GUARD}")
    rows = [format_multipartition(a) for a in decomp.hlabels(args.p, args.w)]
    cols = [format_multipartition(g) for g in decomp.glabels(args.p, args.w)]
    matrix = decomp.k_matrix(args.p, args.w)
    entries = [
        [i, j, v] for i, row in enumerate(matrix) for j, v in enumerate(row) if v
    ]
    if args.format == "json":
        _emit(args, _json_text(
            {"p": args.p, "w": args.w, "rows": rows, "cols": cols, "entries": entries}
        ))
    else:
        _emit(args, _csv_text(
            ["row_label", "col_label", "value"],
            [[rows[i], cols[j], v] for i, j, v in entries],
        ))
    return 0


def cmd_gram(args) -> int:
    _require(is_odd_prime(args.p), f"p must be an odd prime, got {args.p}")
    _require(0 <= args.w <= KMATRIX_GUARD, f"w must be in 0..{KMATRIX_GUARD}")
    labels = [format_multipartition(g) for g in decomp.glabels(args.p, args.w)]
    gram = decomp.gram_matrix(args.p, args.w)
    det = decomp.determinant(gram)
    entries = [
        [i, j, v] for i, row in enumerate(gram) for j, v in enumerate(row) if v
    ]
    if args.format == "json":
        _emit(args, _json_text(
            {
                "p": args.p,
                "w": args.w,
                "rows": labels,
                "cols": labels,
                "entries": entries,
                "determinant": det,
            }
        ))
    else:
        _emit(args, _csv_text(
            ["row_label", "col_label", "value"],
            [[labels[i], labels[j], v] for i, j, v in entries],
        ))
    return 0


def _block_records(n: int, p: int):
    mid = decomp.r_slot(p)
    blocks = decomp.block_partition(n, p)
    records = []
    for (core, weight), members in blocks.items():
        for lam in members:
            basic = not p_core_and_quotient(lam, p).quotient[mid]
            records.append((lam, core, weight, basic))
    return records


def cmd_basicset(args) -> int:
    _require(is_odd_prime(args.p), f"p must be an odd prime, got {args.p}")
    _require(1 <= args.n <= BLOCKS_GUARD, f"n must be in 1..{BLOCKS_GUARD}")
    records = _block_records(args.n, args.p)
    if args.format == "json":
        _emit(args, _json_text(
            {
                "n": args.n,
                "p": args.p,
                "partitions": [
                    {
                        "partition": format_partition(lam),
                        "core": format_partition(core),
                        "weight": weight,
                        "basic": basic,
                    }
                    for lam, core, weight, basic in records
                ],
            }
        ))
    else:
        _emit(args, _csv_text(
            ["partition", "core", "weight", "basic"],
            [
                [format_partition(lam), format_partition(core), weight, basic]
                for lam, core, weight, basic in records
            ],
        ))
    return 0


def cmd_blocks(args) -> int:
    _require(is_odd_prime(args.p), f"p must be an odd prime, got {args.p}")
    _require(1 <= args.n <= BLOCKS_GUARD, f"n must be in 1..{BLOCKS_GUARD}")
    blocks = decomp.block_partition(args.n, args.p)
    if args.format == "json":
        _emit(args, _json_text(
            {
                "n": args.n,
                "p": args.p,
                "blocks": [
                    {
                        "core": format_partition(core),
                        "weight": weight,
                        "partitions": [format_partition(lam) for lam in members],
                    }
                    for (core, weight), members in blocks.items()
                ],
            }
        ))
    else:
        rows = [
            [format_partition(core), weight, format_partition(lam)]
            for (core, weight), members in blocks.items()
            for lam in members
        ]
        _emit(args, _csv_text(["core", "weight", "partition"], rows))
    return 0


def cmd_verify(args) -> int:
    guard = _guard_from_env()
    claims = oracle.verify_suite(args.p, args.w, guard=guard)
    if not args.quiet:
        for c in claims:
            params = " ".join(f"{k}={v}" for k, v in c.params.items())
            print(f"[{c.status.upper():4}] {c.claim} {params}", file=sys.stderr)
    failed = sum(c.status == "fail" for c in claims)
    skipped = sum(c.status == "skip" for c in claims)
    payload = {
        "p": args.p,
        "w": args.w,
        "claims": [
            {
                "claim": c.claim,
                "params": {k: str(v) for k, v in c.params.items()},
                "expected": c.expected,
                "computed": c.computed,
                "status": c.status,
            }
            for c in claims
        ],
        "failed": failed,
        "skipped": skipped,
        "passed": failed == 0,
    }
    if args.format == "json":
        _emit(args, _json_text(payload))
    else:
        _emit(args, _csv_text(
            ["claim", "params", "expected", "computed", "status"],
            [
                [c.claim, " ".join(f"{k}={v}" for k, v in c.params.items()),
                 c.expected, c.computed, c.status]
                for c in claims
            ],
        ))
    if not args.quiet:
        total = len(claims)
        print(
            f"{total - failed - skipped}/{total} claims passed"
            + (f", {skipped} skipped" if skipped else ""),
            file=sys.stderr,
        )
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wreathdec",
        description="Exact wreath-product restriction decompositions and their verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, with_w=False, with_n=False):
        sp.add_argument("--p", type=int, required=True, help="odd prime")
        if with_w:
            sp.add_argument("--w", type=int, required=True, help="wreath weight")
        if with_n:
            sp.add_argument("--n", type=int, required=True, help="partition size")
        sp.add_argument("--format", choices=["json", "csv"], default="json")
        sp.add_argument("--out", help="output path (default: stdout)")
        sp.add_argument("--quiet", action="store_true", help="suppress progress lines")

    sp = sub.add_parser("kmatrix", help="decomposition coefficient matrix")
    common(sp, with_w=True)
    sp.set_defaults(func=cmd_kmatrix)

    sp = sub.add_parser("gram", help="Gram matrix of restricted characters")
    common(sp, with_w=True)
    sp.set_defaults(func=cmd_gram)

    sp = sub.add_parser("basicset", help="basic-set membership for partitions of n")
    common(sp, with_n=True)
    sp.set_defaults(func=cmd_basicset)

    sp = sub.add_parser("blocks", help="block partition keyed by (core, weight)")
    common(sp, with_n=True)
    sp.set_defaults(func=cmd_blocks)

    sp = sub.add_parser("verify", help="run the brute-force verification suites")
    common(sp, with_w=True)
    sp.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except oracle.GuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
