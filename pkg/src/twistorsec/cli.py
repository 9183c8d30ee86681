"""Command-line front end: verification suites and energy/degree tables.

Output is deterministic for a fixed seed and is written atomically, so a
failing run never leaves a partial report behind.  Exit status is 0 exactly
when every executed check passes; failing suite names go to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys

from . import flat_model as fm
from .datasets import load_vhs_dataset, render_table, vhs_energy_table
from .report import (RunConfig, atomic_write, failing_suites, format_value,
                     render_report)
from .scalars import QQi, conj
from .suites import SUITES, run_suites


def _add_output_flags(sub):
    sub.add_argument("--out", help="output file (stdout when omitted)")
    sub.add_argument("--format", choices=("json", "csv"), default=None,
                     help="output format (default json)")


def _emit(text: str, out_path):
    if out_path:
        atomic_write(out_path, text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistorsec",
        description="exact verification runs for the section/energy toolkit")
    subs = parser.add_subparsers(dest="command", required=True)

    verify = subs.add_parser("verify", help="run named verification suites")
    verify.add_argument("--suite", action="append", default=None,
                        metavar="NAME", help="suite to run (repeatable; "
                        "default: all suites)")
    verify.add_argument("--seed", type=int, default=None)
    group = verify.add_mutually_exclusive_group()
    group.add_argument("--exact", dest="exact", action="store_true", default=None)
    group.add_argument("--float", dest="exact", action="store_false")
    verify.add_argument("--order", type=int, default=None,
                        help="series truncation order")
    verify.add_argument("--modes", type=int, default=None,
                        help="Fourier mode bound")
    verify.add_argument("--rank", type=int, default=None, help="rank bound")
    verify.add_argument("--cases", type=int, default=None,
                        help="random cases per suite")
    verify.add_argument("--dataset", action="append", default=None,
                        metavar="PATH", help="block dataset file (repeatable)")
    verify.add_argument("--config", default=None,
                        help="JSON run configuration file")
    _add_output_flags(verify)

    table = subs.add_parser("vhs-energy",
                            help="energy/degree table for a block dataset")
    table.add_argument("--dataset", default=None,
                       help="dataset file (default: shipped samples)")
    _add_output_flags(table)

    degrees = subs.add_parser("hyperhol-degree",
                              help="pullback degrees for paired dataset entries")
    degrees.add_argument("--dataset", default=None,
                         help="dataset file (default: shipped samples)")
    _add_output_flags(degrees)

    demo = subs.add_parser("flat-demo",
                           help="energy bookkeeping on one random flat section")
    demo.add_argument("--seed", type=int, default=0)
    demo.add_argument("--blocks", type=int, default=2,
                      help="number of 4-dimensional blocks")
    group = demo.add_mutually_exclusive_group()
    group.add_argument("--exact", dest="exact", action="store_true", default=True)
    group.add_argument("--float", dest="exact", action="store_false")
    _add_output_flags(demo)
    return parser


def _verify_config(args) -> RunConfig:
    doc = (RunConfig.from_file(args.config) if args.config else RunConfig()).to_json()
    if args.suite is not None:
        doc["suites"] = args.suite
    elif not doc["suites"]:
        doc["suites"] = sorted(SUITES)
    overrides = {"seed": args.seed, "exact": args.exact, "order": args.order,
                 "mode_bound": args.modes, "rank_bound": args.rank,
                 "cases": args.cases, "datasets": args.dataset,
                 "out_format": args.format, "out_path": args.out}
    for key, value in overrides.items():
        if value is not None:
            doc[key] = value
    return RunConfig.from_json(doc)


def _cmd_verify(args) -> int:
    config = _verify_config(args)
    records = run_suites(config)
    _emit(render_report(config, records), config.out_path)
    bad = failing_suites(records)
    if bad:
        print("failing suites: " + " ".join(bad), file=sys.stderr)
        return 1
    return 0


def _cmd_vhs_energy(args) -> int:
    rows = vhs_energy_table(load_vhs_dataset(args.dataset))
    _emit(render_table(rows, args.format or "json"), args.out)
    return 0


def _cmd_hyperhol_degree(args) -> int:
    table = vhs_energy_table(load_vhs_dataset(args.dataset))
    rows = [{"label": r["label"], "pair": r["pair"],
             "hyperhol_degree": r["hyperhol_degree"]}
            for r in table if r["pair"]]
    fmt = args.format or "json"
    if fmt == "json":
        text = json.dumps({"rows": rows}, sort_keys=True, indent=2,
                          ensure_ascii=False) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(("label", "pair", "hyperhol_degree"))
        for r in rows:
            writer.writerow([r["label"], r["pair"], r["hyperhol_degree"]])
        text = buf.getvalue()
    _emit(text, args.out)
    return 0


def _cmd_flat_demo(args) -> int:
    if args.blocks < 1:
        raise ValueError("need at least one block")
    rng = random.Random(args.seed)
    s = fm.random_section(rng, args.blocks, exact=args.exact)
    v = fm.random_section(rng, args.blocks, exact=args.exact)
    field = fm.fundamental_field(s)
    moment = fm.d_energy(s, v) == QQi(0, 1) * fm.omega0_killing(s, field, v)
    reality = conj(fm.energy(fm.real_involution(s))) + fm.energy(s) == QQi(0)
    doc = {
        "seed": args.seed,
        "blocks": args.blocks,
        "section": s.to_json(args.exact),
        "energy": format_value(fm.energy(s)),
        "energy_infinity": format_value(fm.energy_infinity(s)),
        "rotation_field": field.to_json(args.exact),
        "moment_map_identity": moment,
        "reality_identity": reality,
    }
    fmt = args.format or "json"
    if fmt == "json":
        text = json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(("key", "value"))
        for key in sorted(doc):
            writer.writerow([key, json.dumps(doc[key], sort_keys=True)])
        text = buf.getvalue()
    _emit(text, args.out)
    return 0


_COMMANDS = {
    "verify": _cmd_verify,
    "vhs-energy": _cmd_vhs_energy,
    "hyperhol-degree": _cmd_hyperhol_degree,
    "flat-demo": _cmd_flat_demo,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, OSError, KeyError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
