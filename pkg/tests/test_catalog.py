import json
from pathlib import Path

import pytest

from conjcount.builders import build
from conjcount.catalog import (
    CatalogEntry,
    builtin_specs,
    catalog_from_json,
    catalog_to_json,
    load_catalog,
    load_spec,
    record_from_json,
    record_to_json,
    save_catalog,
    scan_catalog,
    scan_report_to_json,
    spec_from_json,
    spec_to_json,
)
from conjcount.errors import SpecFormatError
from conjcount.invariants import build_record

SPEC_DIR = Path(__file__).resolve().parents[1] / "src" / "conjcount" / "specs"


def test_record_round_trip():
    rec = build_record(build(builtin_specs()["Q8"]))
    assert record_from_json(record_to_json(rec)) == rec


def test_spec_round_trip_all_builtins():
    for name, spec in builtin_specs().items():
        assert spec_from_json(spec_to_json(spec)) == spec, name


def test_catalog_save_load_byte_identical(tmp_path, ctx):
    path = tmp_path / "catalog.json"
    save_catalog(path, ctx.entries)
    first = path.read_bytes()
    reloaded = load_catalog(path)
    save_catalog(path, reloaded)
    assert path.read_bytes() == first
    assert catalog_to_json(reloaded) == catalog_to_json(ctx.entries)


def test_catalog_recompute_identical(ctx):
    # recomputing any stored entry from its spec reproduces the record
    for entry in ctx.entries:
        if entry.status != "computed" or entry.record.order > 100:
            continue
        fresh = build_record(build(entry.spec))
        assert fresh == entry.record, entry.name


def test_schema_violation_reports_path():
    bad = {"schema": "conjcount-catalog-v1", "entries": [{"name": "X", "status": "computed"}]}
    with pytest.raises(SpecFormatError) as err:
        catalog_from_json(bad)
    assert "entries/0" in str(err.value)


def test_malformed_pc_word_diagnosed(tmp_path):
    spec = {"kind": "pc", "orders": [2, 2], "conjugates": {"0,1": [[1, "x"]]}}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(spec), encoding="utf-8")
    with pytest.raises(SpecFormatError) as err:
        load_spec(path)
    assert "conjugates" in str(err.value)


def test_shipped_spec_files_match_presets():
    import sys

    sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "scripts"))
    try:
        from export_specs import exported_specs
    finally:
        sys.path.pop(0)
    for name, spec in exported_specs().items():
        path = SPEC_DIR / f"{name}.json"
        on_disk = json.loads(path.read_text(encoding="utf-8"))
        assert on_disk == spec_to_json(spec), name


def test_scan_predicates(ctx):
    report = scan_catalog(ctx.entries, "b-not-a")
    names = {(p.first, p.second) for p in report.pairs}
    assert ("G54_6", "G54_8") in names
    report = scan_catalog(ctx.entries, "a-not-b")
    names = {(p.first, p.second) for p in report.pairs}
    assert ("G128_1758", "G128_2022_derived") in names
    report = scan_catalog(ctx.entries, "ab-not-normalized")
    names = {(p.first, p.second) for p in report.pairs}
    assert ("D18", "G18_4") in names
    assert "G128_2022" in report.unavailable
    payload = scan_report_to_json(report)
    assert payload["schema"] == "conjcount-scan-v1"


def test_scan_needs_two_entries(ctx):
    with pytest.raises(ValueError):
        scan_catalog([ctx.entries[0]], "a-not-b")
    with pytest.raises(ValueError):
        scan_catalog(ctx.entries, "sideways")


def test_unavailable_entry_serialization(ctx):
    unavailable = [e for e in ctx.entries if e.status == "unavailable"]
    assert unavailable and all(e.reason for e in unavailable)
    round_tripped = catalog_from_json(catalog_to_json(unavailable))
    assert all(e.status == "unavailable" and e.record is None for e in round_tripped)
