"""Command-line front end: construct, extend, map, analyze, search, verify.

Record files are JSON Lines; commands that derive a code from an existing
record append the full ancestor chain to the output so any record file
replays on its own.  Seed and worker overrides for searches may also come
from SDCODES_SEED and SDCODES_WORKERS; explicit flags win over both.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import replace
from datetime import datetime, timezone

from .codec import parse_element, parse_row, read_records, write_records
from .constructions import (
    CodeRecord,
    analyze_record,
    bordered_four_circulant,
    extend,
    four_circulant_classic,
    gray_image_record,
    modified_four_circulant,
    phi_u_record,
)
from .errors import CodesError, ConfigInvalid
from .rings import Alphabet
from .search import SearchConfig, run_search
from .tables import verify_table


def _now() -> str:
    return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def _read_chain(path: str) -> tuple[CodeRecord, dict[str, CodeRecord]]:
    records = read_records(path)
    if not records:
        raise CodesError(f"no records in {path}")
    return records[-1], {r.record_id: r for r in records}


def _write_chain(path: str, record: CodeRecord, parents: dict[str, CodeRecord]) -> None:
    chain: list[CodeRecord] = [record]
    current = record
    while current.parent_id is not None:
        current = parents[current.parent_id]
        chain.append(current)
    write_records(path, reversed(chain))


def _describe(record: CodeRecord) -> str:
    return (
        f"{record.construction} over {record.alphabet.value}"
        f" length={record.ring_length} id={record.record_id}"
    )


def _cmd_construct(args: argparse.Namespace) -> int:
    alphabet = Alphabet(args.alphabet)
    r_a = parse_row(args.ra, alphabet)
    r_b = parse_row(args.rb, alphabet)
    stamp = _now()
    if args.family == "four-circulant":
        record = four_circulant_classic(r_a, r_b, timestamp=stamp)
    elif args.family == "modified":
        lam = parse_element(args.lam, alphabet)
        record = modified_four_circulant(r_a, r_b, lam, timestamp=stamp)
    else:
        if args.x is None or args.y is None:
            raise ConfigInvalid("bordered construction needs --x and --y")
        x = parse_element(args.x, alphabet)
        y = parse_element(args.y, alphabet)
        record = bordered_four_circulant(r_a, r_b, x, y, timestamp=stamp)
    write_records(args.out, [record])
    print(_describe(record))
    return 0


def _cmd_extend(args: argparse.Namespace) -> int:
    parent, parents = _read_chain(args.infile)
    ext_x = parse_row(args.x, parent.alphabet)
    ext_c = parse_element(args.c, parent.alphabet)
    child = extend(parent, ext_x, ext_c, timestamp=_now())
    parents[parent.record_id] = parent
    _write_chain(args.out, child, parents)
    print(_describe(child))
    return 0


def _cmd_gray(args: argparse.Namespace) -> int:
    parent, parents = _read_chain(args.infile)
    if args.phi_u:
        child = phi_u_record(parent, timestamp=_now())
    else:
        child = gray_image_record(parent, timestamp=_now())
    parents[parent.record_id] = parent
    _write_chain(args.out, child, parents)
    print(_describe(child))
    return 0


def _cmd_analyze(args: argparse.Namespace) -> int:
    record, _ = _read_chain(args.infile)
    record, profile = analyze_record(record, w_max=args.wmax, workers=args.workers)
    a = record.analysis
    print(f"n={a.n} k={a.k} d={a.d}")
    head = sorted(profile.histogram)[:8]
    print("histogram:", " ".join(f"{w}:{profile.histogram[w]}" for w in head))
    family = a.family.value if a.family else "-"
    print(
        f"family={family}"
        f" beta={a.beta if a.beta is not None else '-'}"
        f" gamma={a.gamma if a.gamma is not None else '-'}"
    )
    return 0


def _cmd_search(args: argparse.Namespace) -> int:
    config = SearchConfig.from_file(args.config)
    seed = args.seed
    if seed is None and "SDCODES_SEED" in os.environ:
        seed = int(os.environ["SDCODES_SEED"])
    workers = args.workers
    if workers is None and "SDCODES_WORKERS" in os.environ:
        workers = int(os.environ["SDCODES_WORKERS"])
    if seed is not None or workers is not None:
        config = replace(
            config,
            seed=config.seed if seed is None else seed,
            workers=config.workers if workers is None else workers,
        )
    report = run_search(config, store=args.store, log=print)
    print(report.summary())
    return 0


def _cmd_verify_paper(args: argparse.Namespace) -> int:
    rows = None
    if args.rows is not None:
        rows = [int(part) for part in args.rows.split(",") if part]
    results = verify_table(
        args.table, rows, workers=args.workers, log=lambda line: print(line)
    )
    return 0 if all(r.ok for r in results) else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sdcodes",
        description="Construct, enumerate and classify self-dual codes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    construct = sub.add_parser(
        "construct", help="build a code from circulant defining rows"
    )
    construct.add_argument(
        "family", choices=["four-circulant", "modified", "bordered"]
    )
    construct.add_argument("--alphabet", required=True, choices=["f2", "r1", "r2"])
    construct.add_argument("--lambda", dest="lam", default="1")
    construct.add_argument("--ra", required=True)
    construct.add_argument("--rb", required=True)
    construct.add_argument("--x")
    construct.add_argument("--y")
    construct.add_argument("--out", required=True)
    construct.set_defaults(func=_cmd_construct)

    extend_p = sub.add_parser("extend", help="lengthen a stored code by two")
    extend_p.add_argument("--in", dest="infile", required=True)
    extend_p.add_argument("--x", required=True)
    extend_p.add_argument("--c", required=True)
    extend_p.add_argument("--out", required=True)
    extend_p.set_defaults(func=_cmd_extend)

    gray = sub.add_parser("gray", help="map a ring record to its image code")
    gray.add_argument("--in", dest="infile", required=True)
    gray.add_argument("--out", required=True)
    gray.add_argument("--phi-u", dest="phi_u", action="store_true")
    gray.set_defaults(func=_cmd_gray)

    analyze = sub.add_parser("analyze", help="enumerate and classify a record")
    analyze.add_argument("--in", dest="infile", required=True)
    analyze.add_argument("--wmax", type=int, default=None)
    analyze.add_argument("--workers", type=int, default=1)
    analyze.set_defaults(func=_cmd_analyze)

    search = sub.add_parser("search", help="randomized search from a JSON config")
    search.add_argument("--config", required=True)
    search.add_argument("--seed", type=int, default=None)
    search.add_argument("--workers", type=int, default=None)
    search.add_argument("--store", required=True)
    search.set_defaults(func=_cmd_search)

    verify = sub.add_parser("verify-paper", help="replay a published table")
    verify.add_argument("--table", type=int, required=True, choices=range(1, 8))
    verify.add_argument("--rows", default=None)
    verify.add_argument("--workers", type=int, default=1)
    verify.set_defaults(func=_cmd_verify_paper)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CodesError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
