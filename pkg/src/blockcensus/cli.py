"""Command-line surface.

Verbs:
    table <id>       print the character table of a corpus group
    k0sigma <id>     print the sigma-fixed height-zero principal-block count
    blocks <id>      print the p-block partition
    check --name <check> <corpus>   run one check over a corpus
    census <corpus> [--checks all] [--prime 3] [--format csv|json] [--jobs N]

Exit codes: 0 all pass/skip, 1 any check failed, 2 input error.
"""

from __future__ import annotations

import argparse
import sys
from importlib import resources

from .blocks import block_partition, height_zero_indices, irr0_sigma_set
from .corpus import (
    census_exit_code,
    default_jobs,
    emit_report,
    parse_corpus,
    resolve_checks,
    run_census,
)
from .errors import InputError
from .theorems import GroupContext

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2


def _default_corpus_path() -> str:
    return str(resources.files("blockcensus").joinpath("data/fallback.jsonl"))


def _load_record(corpus_path: str | None, group_id: str):
    path = corpus_path or _default_corpus_path()
    records = parse_corpus(path)
    for rec in records:
        if rec.id == group_id:
            return rec
    raise InputError(f"group {group_id!r} not found in corpus {path}")


def _context(args, group_id: str) -> GroupContext:
    rec = _load_record(getattr(args, "corpus", None), group_id)
    return GroupContext(rec.build(), rec.id, args.prime, rec.flags)


def cmd_table(args) -> int:
    ctx = _context(args, args.id)
    table = ctx.table
    cd = ctx.classes
    if args.json:
        import json

        payload = {
            "id": ctx.id,
            "order": ctx.group.order,
            "exponent": cd.exponent,
            "classes": [
                {"rep": cd.reps[j].cycle_string(), "size": cd.sizes[j], "element_order": cd.reps[j].order()}
                for j in range(len(cd))
            ],
            "degrees": list(table.degrees),
            "characters": [[str(v) for v in row] for row in table.values],
        }
        print(json.dumps(payload, sort_keys=True))
        return EXIT_OK
    print(f"{ctx.id}: order {ctx.group.order}, {len(cd)} classes, exponent {cd.exponent}")
    print("class sizes:", " ".join(str(s) for s in cd.sizes))
    print("class reps: ", " ".join(cd.reps[j].cycle_string() for j in range(len(cd))))
    width = max(len(str(v)) for row in table.values for v in row)
    for i, row in enumerate(table.values):
        cells = " ".join(str(v).rjust(width) for v in row)
        print(f"chi_{i:<3}[{table.degrees[i]:>3}] {cells}")
    return EXIT_OK


def cmd_k0sigma(args) -> int:
    ctx = _context(args, args.id)
    idxs = irr0_sigma_set(ctx.table, ctx.p, ctx.sigma)
    print(f"{ctx.id}: k0_sigma(B0, p={ctx.p}) = {len(idxs)}  characters {list(idxs)}")
    return EXIT_OK


def cmd_blocks(args) -> int:
    ctx = _context(args, args.id)
    part = block_partition(ctx.table, ctx.p)
    if args.json:
        import json

        payload = {
            "id": ctx.id,
            "prime": ctx.p,
            "principal_index": part.principal_index,
            "blocks": [
                {
                    "characters": list(b.char_indices),
                    "degrees": [ctx.table.degrees[i] for i in b.char_indices],
                    "defect": b.defect,
                    "heights": list(b.heights),
                }
                for b in part.blocks
            ],
        }
        print(json.dumps(payload, sort_keys=True))
        return EXIT_OK
    print(f"{ctx.id}: {len(part.blocks)} blocks at p={ctx.p} (principal = block {part.principal_index})")
    for bi, b in enumerate(part.blocks):
        degs = [ctx.table.degrees[i] for i in b.char_indices]
        hz = len(height_zero_indices(ctx.table, b))
        print(f"block {bi}: defect {b.defect}, degrees {degs}, height-zero {hz}")
    return EXIT_OK


def cmd_census(args) -> int:
    path = args.corpus or _default_corpus_path()
    records = parse_corpus(path)
    checks = resolve_checks(args.checks)
    jobs = default_jobs(args.jobs)
    rows = run_census(records, checks, prime=args.prime, jobs=jobs)
    data = emit_report(rows, args.format, checks)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
    return census_exit_code(rows)


def cmd_check(args) -> int:
    path = args.corpus or _default_corpus_path()
    records = parse_corpus(path)
    checks = resolve_checks(args.name)
    jobs = default_jobs(args.jobs)
    rows = run_census(records, checks, prime=args.prime, jobs=jobs)
    for row in rows:
        for name in checks:
            entry = row.checks[name]
            line = f"{row.id}\t{name}\t{entry['status']}"
            if entry.get("reason"):
                line += f"\t{entry['reason']}"
            print(line)
    return census_exit_code(rows)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="blockcensus", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prime", type=int, default=3, help="block-theory prime (default 3)")
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", parents=[common], help="print a character table")
    p_table.add_argument("id")
    p_table.add_argument("--corpus", default=None)
    p_table.add_argument("--json", action="store_true")
    p_table.set_defaults(fn=cmd_table)

    p_k0 = sub.add_parser("k0sigma", parents=[common], help="sigma-fixed height-zero principal-block count")
    p_k0.add_argument("id")
    p_k0.add_argument("--corpus", default=None)
    p_k0.set_defaults(fn=cmd_k0sigma)

    p_blocks = sub.add_parser("blocks", parents=[common], help="print the p-block partition")
    p_blocks.add_argument("id")
    p_blocks.add_argument("--corpus", default=None)
    p_blocks.add_argument("--json", action="store_true")
    p_blocks.set_defaults(fn=cmd_blocks)

    p_check = sub.add_parser("check", parents=[common], help="run one check over a corpus")
    p_check.add_argument("corpus", nargs="?", default=None)
    p_check.add_argument("--name", required=True, help="check name")
    p_check.add_argument("--jobs", type=int, default=None)
    p_check.set_defaults(fn=cmd_check)

    p_census = sub.add_parser("census", parents=[common], help="run checks over a corpus and emit a report")
    p_census.add_argument("corpus", nargs="?", default=None)
    p_census.add_argument("--checks", default="all", help="comma-separated check names or 'all'")
    p_census.add_argument("--format", choices=["csv", "json"], default="csv")
    p_census.add_argument("--jobs", type=int, default=None)
    p_census.add_argument("--out", default=None)
    p_census.set_defaults(fn=cmd_census)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
