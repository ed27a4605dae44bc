"""Command-line interface.

Commands: generate, verify, reduce, bound, table.  Exit codes: 0 success /
verification passed, 1 verification failed, 2 bad configuration or usage,
3 I/O error, 4 corrupt code-set file.
"""

from __future__ import annotations

import argparse
import itertools
import json
import random
import sys
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from zcacs import formats
from zcacs.correlation import optimality, verify_ccc, verify_zcacs
from zcacs.errors import CodesetFormatError, ConfigError, ZcacsError
from zcacs.generator import (
    KIND_CCC,
    KIND_ZCCS,
    GeneratorConfig,
    build_codeset,
    construction_kind,
    derive_params,
    random_choices,
    reduce_to_1d,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_CONFIG = 2
EXIT_IO = 3
EXIT_CORRUPT = 4


def _print_params(meta, out=None) -> None:
    # resolve the stream at call time so redirected stdout is honored
    out = out if out is not None else sys.stdout
    print(f"kind: {meta.kind}", file=out)
    print(f"sets: {meta.sets}", file=out)
    print(f"arrays_per_set: {meta.arrays_per_set}", file=out)
    print(f"size: {meta.rows}x{meta.cols}", file=out)
    print(f"zone: {meta.zone_rows}x{meta.zone_cols}", file=out)
    print(f"modulus: {meta.modulus}", file=out)
    print(f"optimal: {'true' if meta.optimal else 'false'}", file=out)


def _load_config(path: str, randomize: bool, seed: Optional[int]) -> GeneratorConfig:
    cfg = formats.load_config(path)
    if randomize:
        rng = random.Random(seed)
        cfg = random_choices(cfg.params, rng)
    return cfg


def cmd_generate(args) -> int:
    cfg = _load_config(args.config, args.randomize, args.seed)
    cs = build_codeset(cfg)
    if args.out:
        formats.write_codeset(cs, args.out, args.format)
    _print_params(cs.meta)
    return EXIT_OK


def cmd_reduce(args) -> int:
    cfg = _load_config(args.config, args.randomize, args.seed)
    cs = reduce_to_1d(cfg)
    if args.out:
        formats.write_codeset(cs, args.out, args.format)
    _print_params(cs.meta)
    return EXIT_OK


def cmd_verify(args) -> int:
    if bool(args.codeset) == bool(args.config):
        raise ConfigError("verify needs exactly one of --codeset or --config")
    if args.codeset:
        cs = formats.load_codeset(args.codeset)
    else:
        cs = build_codeset(_load_config(args.config, args.randomize, args.seed))
    kwargs = dict(
        tol=args.tol,
        exact=args.exact,
        threads=args.threads,
        verbose=args.verbose,
    )
    if cs.meta.kind == KIND_CCC and args.z1 is None and args.z2 is None:
        report = verify_ccc(cs, **kwargs)
    else:
        report = verify_zcacs(cs, z1=args.z1, z2=args.z2, **kwargs)
    text = formats.report_to_text(report)
    sys.stdout.write(text)
    if args.out:
        Path(args.out).write_text(text)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_bound(args) -> int:
    cfg = formats.load_config(args.config)
    meta = derive_params(cfg)
    result = optimality(meta)
    _print_params(meta)
    print(f"bound_lhs: {result.bound_lhs}")
    print(f"bound_rhs: {result.bound_rhs}")
    print(f"bound_holds: {'true' if result.bound_holds else 'false'}")
    print(f"optimal: {'true' if result.optimal else 'false'}")
    return EXIT_OK


def _csv_ints(text: str, name: str) -> List[int]:
    try:
        values = [int(v) for v in text.split(",") if v.strip() != ""]
    except ValueError as exc:
        raise ConfigError(f"{name}: expected comma-separated integers") from exc
    if not values:
        raise ConfigError(f"{name}: empty axis")
    return values


def _grid_documents(args) -> List[Dict]:
    """Expand the table grid into config documents.

    Either a JSON grid file (an object whose keys are config fields and whose
    values are lists of choices for that field) or the single-block axis
    flags.  Primed axis value 1 means "no primed extension on that side".
    """
    if args.grid:
        try:
            grid = json.loads(Path(args.grid).read_text())
        except json.JSONDecodeError as exc:
            raise ConfigError(f"grid is not valid JSON: {exc}") from exc
        if not isinstance(grid, dict) or not grid:
            raise ConfigError("grid must be a non-empty JSON object of choice lists")
        keys = sorted(grid)
        for key in keys:
            if not isinstance(grid[key], list) or not grid[key]:
                raise ConfigError(f"{key}: grid axis must be a non-empty list")
        docs = []
        for combo in itertools.product(*(grid[k] for k in keys)):
            docs.append(dict(zip(keys, combo)))
        return docs
    axes = {
        "p": _csv_ints(args.p, "--p"),
        "m": _csv_ints(args.m, "--m"),
        "k": _csv_ints(args.k, "--k"),
        "q": _csv_ints(args.q, "--q"),
        "n": _csv_ints(args.n, "--n"),
        "r": _csv_ints(args.r, "--r"),
        "pp": _csv_ints(args.pp, "--pp"),
        "qp": _csv_ints(args.qp, "--qp"),
    }
    docs = []
    for p, m, k, q, n, r, pp, qp in itertools.product(*axes.values()):
        doc = {
            "row_blocks": [[p, m, k]],
            "col_blocks": [[q, n, r]],
            "row_primed": [] if pp == 1 else [pp],
            "col_primed": [] if qp == 1 else [qp],
        }
        docs.append(doc)
    return docs


def cmd_table(args) -> int:
    docs = _grid_documents(args)
    rows = []
    seen = set()
    for doc in docs:
        cfg = formats.parse_config_document(doc)
        meta = derive_params(cfg)
        key = (
            meta.kind,
            meta.sets,
            meta.arrays_per_set,
            meta.rows,
            meta.cols,
            meta.zone_rows,
            meta.zone_cols,
            meta.modulus,
        )
        if key in seen:
            continue
        seen.add(key)
        rows.append(key + ("true" if meta.optimal else "false",))
    if not rows:
        raise ConfigError("the grid is empty")
    header = ("kind", "sets", "arrays", "rows", "cols", "zone_rows", "zone_cols", "modulus", "optimal")
    if args.format == "csv":
        lines = [",".join(header)]
        lines += [",".join(str(v) for v in row) for row in rows]
    else:
        widths = [
            max(len(header[i]), max(len(str(row[i])) for row in rows))
            for i in range(len(header))
        ]
        lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths))]
        for row in rows:
            lines.append("  ".join(str(v).ljust(w) for v, w in zip(row, widths)))
    text = "\n".join(lines) + "\n"
    sys.stdout.write(text)
    if args.out:
        Path(args.out).write_text(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zcacs",
        description="Construct and exhaustively verify complementary array code sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common_gen(p):
        p.add_argument("--config", required=True, help="JSON config document")
        p.add_argument("--out", help="output code-set file")
        p.add_argument(
            "--format", choices=("text", "binary"), default="text", help="output format"
        )
        p.add_argument(
            "--randomize",
            action="store_true",
            help="draw permutations, coefficients, and offsets at random",
        )
        p.add_argument("--seed", type=int, help="seed for --randomize")

    p = sub.add_parser("generate", help="build a family and write it out")
    add_common_gen(p)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("reduce", help="build the 1D reduction of a trivial-row config")
    add_common_gen(p)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("verify", help="exhaustively verify a family")
    p.add_argument("--codeset", help="code-set file to verify")
    p.add_argument("--config", help="config to build and verify in memory")
    p.add_argument("--randomize", action="store_true", help="randomize --config choices")
    p.add_argument("--seed", type=int, help="seed for --randomize")
    p.add_argument("--z1", type=int, help="zone rows override")
    p.add_argument("--z2", type=int, help="zone cols override")
    p.add_argument("--tol", type=float, help="tolerance override")
    p.add_argument("--exact", action="store_true", help="integer-exact verification")
    p.add_argument("--threads", type=int, default=1, help="worker threads")
    p.add_argument("--verbose", action="store_true", help="list every violation")
    p.add_argument("--out", help="also write the report here")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bound", help="show the set-size bound for a config")
    p.add_argument("--config", required=True, help="JSON config document")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("table", help="tabulate parameters over a config grid")
    p.add_argument("--grid", help="JSON grid of config-field choices")
    p.add_argument("--p", default="", help="row base choices (single block)")
    p.add_argument("--m", default="1", help="row digit-count choices")
    p.add_argument("--k", default="1", help="row exponent choices")
    p.add_argument("--q", default="", help="col base choices (single block)")
    p.add_argument("--n", default="1", help="col digit-count choices")
    p.add_argument("--r", default="1", help="col exponent choices")
    p.add_argument("--pp", default="1", help="row primed-base choices (1 = none)")
    p.add_argument("--qp", default="1", help="col primed-base choices (1 = none)")
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.add_argument("--out", help="also write the table here")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors, which matches the config slot
        return EXIT_CONFIG if exc.code else EXIT_OK
    try:
        return args.func(args)
    except CodesetFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CORRUPT
    except (ConfigError, ZcacsError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
