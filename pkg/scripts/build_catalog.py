#!/usr/bin/env python3
"""Build the full builtin catalog and write it to disk.

Equivalent to `conjcount catalog build`; kept as a script for batch runs.
Honors CONJCOUNT_CACHE_DIR when no output path is given.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from conjcount.catalog import build_builtin_catalog, cache_dir, save_catalog


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("-o", "--output", type=Path, default=None)
    args = parser.parse_args(argv)
    out = args.output
    if out is None:
        base = cache_dir() or Path(".")
        base.mkdir(parents=True, exist_ok=True)
        out = base / "catalog.json"
    entries = build_builtin_catalog()
    save_catalog(out, entries)
    computed = sum(1 for e in entries if e.status == "computed")
    print(f"{out}: {computed} computed, {len(entries) - computed} unavailable", file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
