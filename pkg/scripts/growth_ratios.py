#!/usr/bin/env python3
"""Print growth data for a selection of groups.

For each group: the dominant pole of A (always the group order, with
leading residue |Z|/|G|), the dominant pole of B (the maximal abelian
subgroup order), and the empirical ratios beta_{n+1}/beta_n, which approach
the B pole from below or above depending on the sign pattern of the
residues.
"""

from __future__ import annotations

import argparse

from conjcount.builders import build
from conjcount.catalog import builtin_specs
from conjcount.errors import ConjcountError
from conjcount.invariants import asymptotic_report

DEFAULT = ["S3", "Q8", "D18", "A4", "G54_6", "G72_41", "Phi10_p3", "G1029"]


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("names", nargs="*", default=DEFAULT, help="builtin group names")
    parser.add_argument("--horizon", type=int, default=10)
    args = parser.parse_args(argv)
    specs = builtin_specs()
    for name in args.names:
        if name not in specs:
            print(f"{name}: unknown builtin group")
            continue
        try:
            G = build(specs[name])
        except ConjcountError as exc:
            print(f"{name}: unavailable ({exc})")
            continue
        report = asymptotic_report(G, horizon=args.horizon)
        ratios = ", ".join(f"{float(r):.4f}" for r in report.empirical_ratio_B)
        print(
            f"{name}: |G|={G.order}  A-pole {report.dominant_pole_A} "
            f"(residue {report.leading_residue_A})  B-pole {report.dominant_pole_B}"
        )
        print(f"  beta ratios -> {ratios}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
