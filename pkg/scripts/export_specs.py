#!/usr/bin/env python3
"""Regenerate the JSON recipe files shipped under src/conjcount/specs/.

The files mirror the programmatic presets exactly; a test asserts they stay
in sync, so rerun this script after touching any preset.
"""

from __future__ import annotations

import json
from pathlib import Path

from conjcount import presets
from conjcount.catalog import spec_to_json

SPEC_DIR = Path(__file__).resolve().parents[1] / "src" / "conjcount" / "specs"


def exported_specs():
    out = {
        "g18_4": presets.g18_4_spec(),
        "g54_6": presets.g54_6_spec(),
        "g54_8": presets.g54_8_spec(),
        "g128_1758": presets.g128_1758_spec(),
        "g128_2022_printed": presets.g128_2022_printed_spec(),
        "g128_2022": presets.g128_2022_spec(),
        "m16": presets.m16_spec(),
        "g72_41": presets.g72_41_spec(),
        "g1029": presets.g1029_spec(),
    }
    for family in presets.PHI_FAMILIES:
        out[f"stem_{family.lower()}_p3"] = presets.stem_spec(family, 3)
    for family in presets.GAMMA_FAMILIES:
        out[f"stem_{family.lower()}"] = presets.stem_spec(family, 2)
    return out


def main() -> int:
    SPEC_DIR.mkdir(parents=True, exist_ok=True)
    for name, spec in sorted(exported_specs().items()):
        path = SPEC_DIR / f"{name}.json"
        path.write_text(
            json.dumps(spec_to_json(spec), indent=2, sort_keys=True) + "\n", encoding="utf-8"
        )
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
