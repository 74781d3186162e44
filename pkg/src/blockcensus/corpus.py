"""Corpus ingestion, the census runner and report emission.

The corpus format is line-delimited JSON, one record per line:

    {"id": str, "degree": int, "generators": [[int, ...], ...],
     "order": int?, "flags": [str, ...]?, "oracle": {"block_sizes": [[int, ...], ...]}?}

Generators are 0-based image arrays.  When an order is present it is an
oracle: a mismatch against the computed order is a hard error.  The
optional oracle block_sizes (character-degree multisets per 3-block,
as exported by an external computer algebra system) are verified by the
census when present.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from multiprocessing import Pool

from .blocks import block_partition
from .errors import InputError
from .permgrp import PermGroup, build_group, is_cyclic, p_part
from .theorems import CHECKS, CheckReport, GroupContext

__all__ = [
    "CorpusRecord",
    "CensusRow",
    "parse_corpus",
    "parse_corpus_lines",
    "run_census",
    "emit_report",
    "rows_from_json",
    "ALL_CHECKS",
    "check_oracle_blocks",
]


@dataclass(frozen=True)
class CorpusRecord:
    id: str
    degree: int
    generators: tuple[tuple[int, ...], ...]
    order: int | None = None
    flags: frozenset = frozenset()
    oracle: dict | None = None

    def build(self) -> PermGroup:
        g = build_group(self.degree, [list(im) for im in self.generators])
        if self.order is not None and g.order != self.order:
            raise InputError(f"record {self.id!r}: computed order {g.order} != stated order {self.order}")
        return g


def parse_corpus(path: str) -> list[CorpusRecord]:
    """Parse and validate a corpus file; all errors carry line numbers."""
    try:
        with open(path) as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise InputError(f"cannot read corpus {path!r}: {exc}") from exc
    return parse_corpus_lines(lines, source=path)


def parse_corpus_lines(lines, source: str = "<corpus>") -> list[CorpusRecord]:
    records: list[CorpusRecord] = []
    seen: set[str] = set()
    for lineno, line in enumerate(lines, start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise InputError(f"{source}:{lineno}: invalid JSON at column {exc.colno}: {exc.msg}") from exc
        rec = _record_from_obj(obj, source, lineno)
        if rec.id in seen:
            raise InputError(f"{source}:{lineno}: duplicate record id {rec.id!r}")
        seen.add(rec.id)
        # order oracle: hard failure on mismatch
        rec.build()
        records.append(rec)
    return records


def _record_from_obj(obj, source: str, lineno: int) -> CorpusRecord:
    if not isinstance(obj, dict):
        raise InputError(f"{source}:{lineno}: record is not an object")
    try:
        rid = obj["id"]
        degree = obj["degree"]
        gens = obj["generators"]
    except KeyError as exc:
        raise InputError(f"{source}:{lineno}: missing field {exc.args[0]!r}") from exc
    if not isinstance(rid, str) or not rid:
        raise InputError(f"{source}:{lineno}: id must be a nonempty string")
    if not isinstance(degree, int) or degree < 1:
        raise InputError(f"{source}:{lineno}: degree must be a positive integer")
    if not isinstance(gens, list):
        raise InputError(f"{source}:{lineno}: generators must be an array")
    tgens = []
    for gi, g in enumerate(gens):
        if not isinstance(g, list) or sorted(g) != list(range(degree)):
            raise InputError(f"{source}:{lineno}: generator {gi} is not a permutation of 0..{degree - 1}")
        tgens.append(tuple(g))
    order = obj.get("order")
    if order is not None and (not isinstance(order, int) or order < 1):
        raise InputError(f"{source}:{lineno}: order must be a positive integer")
    flags = obj.get("flags", [])
    if not isinstance(flags, list) or not all(isinstance(f, str) for f in flags):
        raise InputError(f"{source}:{lineno}: flags must be an array of strings")
    unknown = set(flags) - {"simple", "almost_simple", "perfect"}
    if unknown:
        raise InputError(f"{source}:{lineno}: unknown flags {sorted(unknown)}")
    oracle = obj.get("oracle")
    if oracle is not None:
        if not isinstance(oracle, dict):
            raise InputError(f"{source}:{lineno}: oracle must be an object")
        bs = oracle.get("block_sizes")
        if bs is not None and not (
            isinstance(bs, list) and all(isinstance(b, list) and all(isinstance(d, int) for d in b) for b in bs)
        ):
            raise InputError(f"{source}:{lineno}: oracle.block_sizes must be an array of integer arrays")
    return CorpusRecord(
        id=rid,
        degree=degree,
        generators=tuple(tgens),
        order=order,
        flags=frozenset(flags),
        oracle=oracle,
    )


# -- the census -------------------------------------------------------------


def check_oracle_blocks(ctx: GroupContext, oracle: dict | None) -> CheckReport:
    """Compare the computed 3-block degree partition against an exported
    oracle (block_sizes: per-block character-degree lists)."""
    name = "oracle_blocks"
    if not oracle or "block_sizes" not in oracle:
        return CheckReport(ctx.id, name, "skipped", reason="no oracle data")
    part = block_partition(ctx.table, 3)
    ours = sorted(sorted(ctx.table.degrees[i] for i in b.char_indices) for b in part.blocks)
    theirs = sorted(sorted(b) for b in oracle["block_sizes"])
    witness = {"computed": ours, "oracle": theirs}
    if ours != theirs:
        return CheckReport(ctx.id, name, "fail", witness=witness)
    return CheckReport(ctx.id, name, "pass", witness={"blocks": len(ours)})


ALL_CHECKS = dict(CHECKS)
ALL_CHECKS["oracle_blocks"] = None  # handled specially (needs the record's oracle)


@dataclass
class CensusRow:
    id: str
    order: int
    order3: int
    sylow_cyclic: bool
    k0sigma: int
    frattini_index: int
    checks: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "order": self.order,
            "order3": self.order3,
            "sylow_cyclic": self.sylow_cyclic,
            "k0sigma": self.k0sigma,
            "frattini_index": self.frattini_index,
            "checks": self.checks,
        }

    @classmethod
    def from_dict(cls, obj: dict) -> "CensusRow":
        return cls(
            id=obj["id"],
            order=obj["order"],
            order3=obj["order3"],
            sylow_cyclic=obj["sylow_cyclic"],
            k0sigma=obj["k0sigma"],
            frattini_index=obj["frattini_index"],
            checks=obj.get("checks", {}),
        )


def _report_entry(rep: CheckReport) -> dict:
    entry: dict = {"status": rep.status}
    if rep.reason is not None:
        entry["reason"] = rep.reason
    if rep.witness:
        entry["witness"] = _plain(rep.witness)
    return entry


def _plain(value):
    """Normalize witness data to JSON-native structures."""
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    return str(value)


def _process_record(args) -> CensusRow:
    record, check_names, prime = args
    try:
        ctx = GroupContext(record.build(), record.id, prime, record.flags)
        row = CensusRow(
            id=record.id,
            order=ctx.group.order,
            order3=p_part(ctx.group.order, 3),
            sylow_cyclic=is_cyclic(ctx.sylow),
            k0sigma=ctx.k0sigma,
            frattini_index=ctx.frattini,
        )
        for name in check_names:
            if name == "oracle_blocks":
                rep = check_oracle_blocks(ctx, record.oracle)
            else:
                rep = CHECKS[name](ctx)
            row.checks[name] = _report_entry(rep)
        return row
    except InputError:
        raise
    except Exception as exc:  # captured as a failed row, never aborts the census
        row = CensusRow(record.id, record.order or 0, 0, False, -1, -1)
        for name in check_names:
            row.checks[name] = {"status": "fail", "witness": {"error": f"{type(exc).__name__}: {exc}"}}
        return row


def resolve_checks(selector: str | list[str] | None) -> list[str]:
    """Resolve a --checks selector ('all', a name list, or None=all)."""
    if selector is None or selector == "all" or selector == ["all"]:
        return list(ALL_CHECKS)
    names = selector.split(",") if isinstance(selector, str) else list(selector)
    names = [n.strip() for n in names if n.strip()]
    for n in names:
        if n not in ALL_CHECKS:
            raise InputError(f"unknown check {n!r}; known: {', '.join(ALL_CHECKS)}")
    return names


def run_census(
    records: list[CorpusRecord],
    checks: list[str] | None = None,
    prime: int = 3,
    jobs: int = 1,
) -> list[CensusRow]:
    """Run the selected checks over every record.

    Rows come back sorted by (order, id); output is byte-identical for any
    parallelism degree because each record is processed independently and
    deterministically.
    """
    check_names = checks if checks is not None else list(ALL_CHECKS)
    tasks = [(rec, check_names, prime) for rec in records]
    if jobs > 1 and len(tasks) > 1:
        with Pool(processes=jobs) as pool:
            rows = pool.map(_process_record, tasks, chunksize=1)
    else:
        rows = [_process_record(t) for t in tasks]
    rows.sort(key=lambda r: (r.order, r.id))
    return rows


def census_exit_code(rows: list[CensusRow]) -> int:
    for row in rows:
        for entry in row.checks.values():
            if entry.get("status") == "fail":
                return 1
    return 0


def default_jobs(flag_value: int | None) -> int:
    """Parallelism: the --jobs flag wins over the CENSUS_JOBS env var."""
    if flag_value is not None:
        return max(1, flag_value)
    env = os.environ.get("CENSUS_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise InputError(f"CENSUS_JOBS must be an integer, got {env!r}") from None
    return 1


# -- report emission ---------------------------------------------------------


def emit_report(rows: list[CensusRow], format: str, checks: list[str] | None = None) -> bytes:
    """Serialize census rows deterministically as csv or json."""
    if format == "json":
        payload = {"rows": [row.to_dict() for row in rows]}
        return (json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n").encode()
    if format == "csv":
        names = checks
        if names is None:
            names = list(rows[0].checks) if rows else []
        header = ["id", "order", "order3", "sylow_cyclic", "k0sigma", "frattini_index"] + names
        lines = [",".join(header)]
        for row in rows:
            cells = [
                _csv_cell(row.id),
                str(row.order),
                str(row.order3),
                "true" if row.sylow_cyclic else "false",
                str(row.k0sigma),
                str(row.frattini_index),
            ]
            for name in names:
                cells.append(row.checks.get(name, {}).get("status", ""))
            lines.append(",".join(cells))
        return ("\n".join(lines) + "\n").encode()
    raise InputError(f"unknown report format {format!r} (use csv or json)")


def _csv_cell(text: str) -> str:
    if any(c in text for c in ",\"\n"):
        return '"' + text.replace('"', '""') + '"'
    return text


def rows_from_json(data: bytes | str) -> list[CensusRow]:
    obj = json.loads(data)
    return [CensusRow.from_dict(r) for r in obj["rows"]]
