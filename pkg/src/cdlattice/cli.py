"""
Command-line front end.

    cdlattice analyze dicyclic:2 [--json]
    cdlattice export dihedral:4 [--highlight-cd]
    cdlattice verify [--max-order 15] [--quaternions 3..6] [--extra DIR] [--json]
    cdlattice catalog [--max-order 15] [--quaternions 3..6]

Exit status: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import os
import sys

from .chermak_delgado import cd_report, sylow_center_profile
from .group_core import GroupError, GroupTable, build_group, parse_spec, read_cayley_file
from .lattice import enumerate_subgroups, to_dot
from .records import format_summary, records_to_json
from .verifier import IncompleteCatalogError, build_catalog, fingerprint, identify_group, run_verification

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def resolve_group(source: str) -> GroupTable:
    """A builtin spec string, or a path to a Cayley-table file."""
    if os.path.exists(source):
        return read_cayley_file(source)
    try:
        spec = parse_spec(source)
    except GroupError as exc:
        raise UsageError(f"{source!r} is neither a readable file nor a group spec: {exc}") from None
    return build_group(spec)


def parse_range(text: str) -> range:
    try:
        lo, hi = (int(v) for v in text.split(".."))
    except ValueError:
        raise UsageError(f"expected a range like 3..6, got {text!r}") from None
    if lo > hi + 1:
        raise UsageError(f"empty or inverted range {text!r}")
    return range(lo, hi + 1)


def _members(h) -> str:
    return "{" + ",".join(str(x) for x in h.members) + "}"


def run_analyze(args, out) -> int:
    g = resolve_group(args.group)
    report = cd_report(g)
    if args.json:
        out.write(report.to_json())
        return EXIT_OK
    lat = report.lattice
    profile = sylow_center_profile(g, lat)
    label = identify_group(g)
    w = out.write
    w(f"group: {args.group}\n")
    w(f"identified as: {label}\n")
    w(f"|G| = {g.order}\n")
    w(f"|L(G)| = {len(lat)}\n")
    w(f"m*(G) = {report.m_star}\n")
    w(f"|CD(G)| = {len(report.cd_members)}\n")
    for i in report.cd_members:
        h = lat[i]
        w(f"  H{i}  size={h.order}  measure={report.measures[i]}  members={_members(h)}\n")
    w(f"minimal CD member: H{report.min_member} (size {lat[report.min_member].order})\n")
    w(f"maximal CD member: H{report.max_member} (size {lat[report.max_member].order})\n")
    w(f"deficiency |L(G)|-|CD(G)| = {report.deficiency}\n")
    w(f"measure image = {{{', '.join(str(m) for m in report.measure_image)}}} (size {len(report.measure_image)})\n")
    w("sylow center profile: " + ", ".join(f"p={p} n_p={n}" for p, n in profile.entries) + "\n")
    margin = len(report.measure_image) - profile.bound
    w(f"image bound: {len(report.measure_image)} >= {profile.bound} (margin {margin})\n")
    return EXIT_OK


def run_export(args, out) -> int:
    g = resolve_group(args.group)
    lat = enumerate_subgroups(g)
    highlight = cd_report(g, lat).cd_members.members if args.highlight_cd else ()
    out.write(to_dot(lat, highlight))
    return EXIT_OK


def _catalog(args):
    qs = parse_range(args.quaternions)
    if qs and (qs.start < 3 or qs.stop - 1 > 6):
        raise UsageError(f"--quaternions must lie within 3..6, got {args.quaternions}")
    try:
        cat = build_catalog(args.max_order, qs, getattr(args, "extra", None))
    except IncompleteCatalogError as exc:
        raise UsageError(str(exc)) from None
    return cat, qs


def run_verify(args, out) -> int:
    cat, qs = _catalog(args)
    records, sets = run_verification(cat, qs, jobs=args.jobs)
    if args.json:
        out.write(records_to_json(records))
    else:
        out.write(format_summary(records))
        for k in (0, 1, 2):
            out.write(f"k={k}\t{','.join(sets.get(k, []))}\n")
        failures = sum(r.failed for r in records)
        out.write(f"records={len(records)}\tfailures={failures}\n")
    return EXIT_FAIL if any(r.failed for r in records) else EXIT_OK


def run_catalog(args, out) -> int:
    cat, _ = _catalog(args)
    for e in cat:
        lat = enumerate_subgroups(e.group)
        _, orders, abelian, nsub = fingerprint(e.group, lat)
        out.write(f"{e.name}\torder={e.group.order}\tabelian={int(abelian)}\tsubgroups={nsub}\tlabel={identify_group(e.group)}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cdlattice", description="Subgroup and Chermak-Delgado lattices of finite groups.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="measures, CD lattice and deficiency of one group")
    a.add_argument("group", help="builtin spec (cyclic:12, dicyclic:4, dihedral:6, alternating4, product:cyclic:2,cyclic:4) or Cayley-table file")
    a.add_argument("--json", action="store_true", help="emit the CD report as JSON")
    a.set_defaults(func=run_analyze)

    e = sub.add_parser("export", help="Hasse diagram of L(G) as DOT")
    e.add_argument("group")
    e.add_argument("--highlight-cd", action="store_true", help="fill the CD members")
    e.set_defaults(func=run_export)

    for name, func, text in (
        ("verify", run_verify, "run every check over the small-group catalog"),
        ("catalog", run_catalog, "list catalog entries"),
    ):
        v = sub.add_parser(name, help=text)
        v.add_argument("--max-order", type=int, default=15)
        v.add_argument("--quaternions", default="3..6", help="range of n for Q_{2^n}, e.g. 3..6")
        v.add_argument("--extra", default=None, help="directory of additional Cayley-table files")
        if name == "verify":
            v.add_argument("--json", action="store_true")
            v.add_argument("--jobs", type=int, default=1, help="worker processes")
        v.set_defaults(func=func)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (UsageError, GroupError, OSError) as exc:
        err.write(f"cdlattice: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
