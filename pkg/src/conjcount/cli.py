"""Command-line interface: compute invariants, scan catalogs, print the family table.

Exit codes: 0 success, 2 unparseable input, 3 builder failure, 4 unusable
catalog for a scan, 5 family-table verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import catalog as cat
from . import presets
from .builders import (
    Cyclic,
    Dihedral,
    Extraspecial,
    GroupSpec,
    Quaternion,
    Semidihedral,
    Stem,
    Trivial,
    build,
    _is_prime,
)
from .errors import ConjcountError, SpecFormatError
from .groups import FiniteGroup, verify_group_axioms
from .invariants import A_of, A_partial_fractions, B_of, build_record
from .oracle import alpha_bruteforce, beta_bruteforce
from .ratfun import (
    format_partial_fractions,
    format_rational,
    format_series,
    series_coeffs,
    to_partial_fractions,
)

PARSE_ERROR = 2
BUILD_ERROR = 3
SCAN_ERROR = 4
VERIFY_ERROR = 5


def parse_group_name(name: str) -> GroupSpec:
    """Resolve "dihedral:18", "stem:Phi5:3", or a builtin catalog name."""
    builtins = cat.builtin_specs()
    if name in builtins:
        return builtins[name]
    parts = name.split(":")
    head = parts[0].lower()
    try:
        if head == "trivial" and len(parts) == 1:
            return Trivial()
        if head == "cyclic" and len(parts) == 2:
            return Cyclic(int(parts[1]))
        if head == "dihedral" and len(parts) == 2:
            return Dihedral(int(parts[1]))
        if head == "quaternion" and len(parts) == 2:
            return Quaternion(int(parts[1]))
        if head == "semidihedral" and len(parts) == 2:
            return Semidihedral(int(parts[1]))
        if head == "extraspecial" and len(parts) in (3, 4):
            p = int(parts[1])
            variant = parts[3] if len(parts) == 4 else (
                "two-type" if p == 2 else "odd-exponent-p"
            )
            return Extraspecial(p, int(parts[2]), variant)
        if head == "stem" and len(parts) == 3:
            return Stem(parts[1], int(parts[2]))
    except ValueError as exc:
        raise SpecFormatError(f"bad group name {name!r}: {exc}") from exc
    raise SpecFormatError(
        f"unknown group {name!r}; use a builtin name or "
        "trivial|cyclic:N|dihedral:N|quaternion:N|semidihedral:N|"
        "extraspecial:P:ORDER[:VARIANT]|stem:FAMILY:P"
    )


def _build_group(args) -> tuple[str, FiniteGroup]:
    if args.spec_file:
        spec = cat.load_spec(args.spec_file)
        label = str(args.spec_file)
    else:
        spec = parse_group_name(args.group)
        label = args.group
    group = build(spec)
    if getattr(args, "exhaustive_check", False):
        verify_group_axioms(group.mul, force_exhaustive=True)
    return label, group


def cmd_compute(args) -> int:
    try:
        label, group = _build_group(args)
    except (SpecFormatError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return PARSE_ERROR
    except ConjcountError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return BUILD_ERROR

    print(f"group {label}  order {group.order}")
    wanted = ["A", "B"] if args.invariant == "both" else [args.invariant]
    for which in wanted:
        fn = A_of(group) if which == "A" else B_of(group)
        if args.format == "rational":
            print(f"{which} = {format_rational(fn)}")
        elif args.format == "partial-fractions":
            pf = (
                A_partial_fractions(group)
                if which == "A"
                else to_partial_fractions(fn, pole_divisor=group.order)
            )
            print(f"{which} = {format_partial_fractions(pf)}")
        else:
            coeffs = series_coeffs(fn, args.terms)
            print(f"{which} series = {format_series(int(c) for c in coeffs)}")
    return 0


def cmd_scan(args) -> int:
    try:
        if args.builtin:
            entries = cat.build_builtin_catalog()
        else:
            entries = cat.load_catalog(args.catalog)
    except (OSError, json.JSONDecodeError, SpecFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return PARSE_ERROR
    if args.names:
        requested = args.names.split(",")
        by_name = {e.name: e for e in entries}
        for name in requested:
            if name not in by_name:
                print(f"error: {name} is not in the catalog", file=sys.stderr)
                return SCAN_ERROR
            if by_name[name].status != "computed":
                print(
                    f"error: {name} is unavailable: {by_name[name].reason}", file=sys.stderr
                )
                return SCAN_ERROR
        entries = [by_name[name] for name in requested]
    try:
        report = cat.scan_catalog(entries, args.predicate)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return SCAN_ERROR
    if args.json:
        print(json.dumps(cat.scan_report_to_json(report), indent=2, sort_keys=True))
        return 0
    print(f"scan predicate={report.predicate}  pairs={len(report.pairs)}")
    for p in report.pairs:
        flags = (
            f"a_eq={_yn(p.a_equivalent)} b_eq={_yn(p.b_equivalent)} "
            f"norm_A={_yn(p.same_normalized_A)} norm_B={_yn(p.same_normalized_B)}"
        )
        print(f"  ({p.first}, {p.second})  {flags}")
    if report.unavailable:
        print("unavailable entries (not scanned): " + ", ".join(report.unavailable))
    return 0


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def cmd_table1(args) -> int:
    from .closedforms import family_table
    from .invariants import normalized_A, normalized_B
    from .presets import STEM_FAMILIES, stem_group

    p = args.p
    if not _is_prime(p):
        print(f"error: p must be prime, got {p}", file=sys.stderr)
        return PARSE_ERROR
    if args.verify and p > 7:
        print("error: --verify supports p <= 7", file=sys.stderr)
        return PARSE_ERROR
    families = ["Abelian"] + [
        f for f in STEM_FAMILIES if f.startswith("Gamma" if p == 2 else "Phi")
    ]
    failures = 0
    for family in families:
        row = family_table(family, p)
        print(f"{family}  A(t/|G|) = {format_rational(row.normalized_A)}")
        print(f"{' ' * len(family)}  B(t/|G|) = {format_rational(row.normalized_B)}")
        if args.verify and family != "Abelian":
            group = stem_group(family, p)
            a_ok = normalized_A(group) == row.normalized_A
            b_ok = normalized_B(group) == row.normalized_B
            verdict = "PASS" if (a_ok and b_ok) else "FAIL"
            print(f"{' ' * len(family)}  stem order {group.order}: {verdict}")
            if not (a_ok and b_ok):
                failures += 1
    return VERIFY_ERROR if failures else 0


def cmd_catalog_build(args) -> int:
    names = args.names.split(",") if args.names else None
    try:
        entries = cat.build_builtin_catalog(names)
    except KeyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return PARSE_ERROR
    out = args.output
    if out is None:
        base = cat.cache_dir() or Path(".")
        base.mkdir(parents=True, exist_ok=True)
        out = base / "catalog.json"
    cat.save_catalog(out, entries)
    computed = sum(1 for e in entries if e.status == "computed")
    print(f"wrote {out}: {computed} computed, {len(entries) - computed} unavailable")
    for e in entries:
        if e.status != "computed":
            print(f"  unavailable {e.name}: {e.reason}")
    return 0


def cmd_oracle_check(args) -> int:
    try:
        label, group = _build_group(args)
    except (SpecFormatError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return PARSE_ERROR
    except ConjcountError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return BUILD_ERROR
    a_series = series_coeffs(A_of(group), args.n + 1)
    b_series = series_coeffs(B_of(group), args.n + 1)
    ok = True
    for n in range(args.n + 1):
        alpha = alpha_bruteforce(group, n, max_states=args.max_states)
        beta = beta_bruteforce(group, n, max_states=args.max_states)
        a_ok = alpha.count == a_series[n]
        b_ok = beta.count == b_series[n]
        ok = ok and a_ok and b_ok
        print(
            f"n={n}: alpha pipeline={int(a_series[n])} bruteforce={alpha.count} "
            f"{'OK' if a_ok else 'MISMATCH'} | beta pipeline={int(b_series[n])} "
            f"bruteforce={beta.count} {'OK' if b_ok else 'MISMATCH'}"
        )
    return 0 if ok else 1


def _add_group_arguments(parser: argparse.ArgumentParser) -> None:
    target = parser.add_mutually_exclusive_group(required=True)
    target.add_argument("--group", help="builtin name or family:parameter recipe")
    target.add_argument("--spec-file", type=Path, help="path to a GroupSpec JSON file")
    parser.add_argument(
        "--exhaustive-check",
        action="store_true",
        help="force exhaustive associativity verification regardless of order",
    )


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="conjcount",
        description="Exact conjugacy-class and commuting-tuple generating functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="compute A and/or B for one group")
    _add_group_arguments(p_compute)
    p_compute.add_argument("--invariant", choices=["A", "B", "both"], default="both")
    p_compute.add_argument(
        "--format", choices=["rational", "partial-fractions", "series"], default="rational"
    )
    p_compute.add_argument("--terms", type=int, default=8, help="series length")
    p_compute.set_defaults(func=cmd_compute)

    p_scan = sub.add_parser("scan", help="pairwise equivalence scan over a catalog")
    p_scan.add_argument("catalog", nargs="?", help="catalog JSON file")
    p_scan.add_argument("--builtin", action="store_true", help="scan the builtin catalog")
    p_scan.add_argument("--predicate", choices=list(cat.SCAN_PREDICATES), required=True)
    p_scan.add_argument("--names", help="comma-separated entry names to restrict to")
    p_scan.add_argument("--json", action="store_true", help="emit the report as JSON")
    p_scan.set_defaults(func=cmd_scan)

    p_table = sub.add_parser("table1", help="normalized family invariants of rank <= 5")
    p_table.add_argument("--p", type=int, required=True, help="prime (2 for the Gamma families)")
    p_table.add_argument(
        "--verify", action="store_true", help="also build stem groups and compare"
    )
    p_table.set_defaults(func=cmd_table1)

    p_catalog = sub.add_parser("catalog", help="catalog maintenance")
    catalog_sub = p_catalog.add_subparsers(dest="catalog_command", required=True)
    p_build = catalog_sub.add_parser("build", help="compute the builtin catalog")
    p_build.add_argument("-o", "--output", type=Path, help="output path")
    p_build.add_argument("--names", help="comma-separated subset of builtin names")
    p_build.set_defaults(func=cmd_catalog_build)

    p_oracle = sub.add_parser("oracle", help="brute-force cross-checks")
    oracle_sub = p_oracle.add_subparsers(dest="oracle_command", required=True)
    p_check = oracle_sub.add_parser("check", help="compare pipeline vs brute force")
    _add_group_arguments(p_check)
    p_check.add_argument("--n", type=int, default=2, help="largest tuple length")
    p_check.add_argument(
        "--max-states", type=int, default=10**7, help="state guard for enumeration"
    )
    p_check.set_defaults(func=cmd_oracle_check)

    args = parser.parse_args(argv)
    if args.command == "scan" and not args.builtin and not args.catalog:
        parser.error("scan needs a catalog file or --builtin")
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
