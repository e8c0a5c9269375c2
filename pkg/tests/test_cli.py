import json
import subprocess
import sys
from pathlib import Path

import pytest

from conjcount.cli import main

SPEC_DIR = Path(__file__).resolve().parents[1] / "src" / "conjcount" / "specs"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_rational_d18(capsys):
    code, out, _ = run_cli(
        capsys, "compute", "--group", "dihedral:18", "--invariant", "A", "--format", "rational"
    )
    assert code == 0
    assert "(1 - 23t + 98t^2)/(1 - 29t + 216t^2 - 324t^3)" in out


def test_compute_cyclic_b(capsys):
    code, out, _ = run_cli(capsys, "compute", "--group", "cyclic:5", "--invariant", "B")
    assert code == 0
    assert "(1)/(1 - 5t)" in out


def test_compute_series_stem(capsys):
    code, out, _ = run_cli(
        capsys,
        "compute", "--group", "stem:Phi5:3", "--invariant", "B",
        "--format", "series", "--terms", "4",
    )
    assert code == 0
    assert "1, 83, 2889, 84267" in out


def test_compute_unknown_group_exit_2(capsys):
    code, _, err = run_cli(capsys, "compute", "--group", "wat:9")
    assert code == 2
    assert "unknown group" in err


def test_compute_builder_error_exit_3(capsys, tmp_path):
    spec = SPEC_DIR / "g128_2022_printed.json"
    code, _, err = run_cli(capsys, "compute", "--spec-file", str(spec))
    assert code == 3
    assert "InconsistentPresentation" in err


def test_compute_spec_file(capsys):
    code, out, _ = run_cli(
        capsys,
        "compute", "--spec-file", str(SPEC_DIR / "g54_6.json"),
        "--invariant", "A", "--format", "partial-fractions",
    )
    assert code == 0
    assert "(1/54)/(1 - 54t)" in out


def test_compute_exhaustive_flag(capsys):
    code, out, _ = run_cli(
        capsys, "compute", "--group", "Q8", "--exhaustive-check", "--invariant", "A"
    )
    assert code == 0


def test_scan_builtin_b_not_a(capsys):
    code, out, _ = run_cli(capsys, "scan", "--builtin", "--predicate", "b-not-a")
    assert code == 0
    assert "(G54_6, G54_8)" in out
    assert "unavailable entries" in out and "G128_2022" in out


def test_scan_catalog_file(capsys, tmp_path, ctx):
    from conjcount.catalog import save_catalog

    path = tmp_path / "catalog.json"
    save_catalog(path, ctx.entries)
    code, out, _ = run_cli(capsys, "scan", str(path), "--predicate", "a-not-b", "--json")
    assert code == 0
    payload = json.loads(out)
    pairs = {(p["first"], p["second"]) for p in payload["pairs"]}
    assert ("G128_1758", "G128_2022_derived") in pairs


def test_scan_rejects_unavailable_name(capsys, tmp_path, ctx):
    from conjcount.catalog import save_catalog

    path = tmp_path / "catalog.json"
    save_catalog(path, ctx.entries)
    code, _, err = run_cli(
        capsys, "scan", str(path), "--predicate", "a-not-b", "--names", "G128_2022,G128_1758"
    )
    assert code == 4
    assert "unavailable" in err


def test_scan_empty_catalog_exit_4(capsys, tmp_path):
    path = tmp_path / "empty.json"
    path.write_text('{"schema": "conjcount-catalog-v1", "entries": []}', encoding="utf-8")
    code, _, err = run_cli(capsys, "scan", str(path), "--predicate", "a-not-b")
    assert code == 4


def test_table1_rejects_non_prime(capsys):
    code, _, err = run_cli(capsys, "table1", "--p", "4")
    assert code == 2
    assert "prime" in err


def test_table1_verify_p3(capsys):
    code, out, _ = run_cli(capsys, "table1", "--p", "3", "--verify")
    assert code == 0
    assert out.count("PASS") == 9
    assert "FAIL" not in out


def test_table1_verify_p2(capsys):
    code, out, _ = run_cli(capsys, "table1", "--p", "2", "--verify")
    assert code == 0
    assert out.count("PASS") == 7


def test_table1_verify_failure_exit_5(capsys, monkeypatch):
    import conjcount.cli as cli_mod
    from conjcount.builders import build
    from conjcount.catalog import builtin_specs

    wrong = build(builtin_specs()["C8"])
    monkeypatch.setattr("conjcount.presets.stem_group", lambda fam, p: wrong)
    code, out, _ = run_cli(capsys, "table1", "--p", "2", "--verify")
    assert code == 5
    assert "FAIL" in out


def test_catalog_build_subset(capsys, tmp_path):
    out_path = tmp_path / "cat.json"
    code, out, _ = run_cli(
        capsys, "catalog", "build", "-o", str(out_path), "--names", "Q8,S3,G54_6"
    )
    assert code == 0
    assert out_path.exists()
    from conjcount.catalog import load_catalog

    assert len(load_catalog(out_path)) == 3


def test_catalog_build_cache_dir_env(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("CONJCOUNT_CACHE_DIR", str(tmp_path / "cachedir"))
    code, out, _ = run_cli(capsys, "catalog", "build", "--names", "Q8,S3")
    assert code == 0
    assert (tmp_path / "cachedir" / "catalog.json").exists()


def test_oracle_check(capsys):
    code, out, _ = run_cli(capsys, "oracle", "check", "--group", "S3", "--n", "2")
    assert code == 0
    assert "MISMATCH" not in out


def test_cli_entry_point_subprocess():
    result = subprocess.run(
        [sys.executable, "-m", "conjcount.cli", "compute", "--group", "Q8"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert result.returncode == 0
    assert "order 8" in result.stdout


def test_output_determinism(capsys):
    argv = ["compute", "--group", "G72_41", "--invariant", "both", "--format", "partial-fractions"]
    first = run_cli(capsys, *argv)
    second = run_cli(capsys, *argv)
    assert first == second
