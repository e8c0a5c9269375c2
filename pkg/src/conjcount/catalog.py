"""Catalog of named groups with persisted invariants, plus equivalence scans.

Serialization lives here: GroupSpec recipes, invariant records and scan
reports all have JSON forms with exact rationals as "numerator/denominator"
strings. Catalog files are schema-validated on load and written atomically
(temp file, then rename).
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import jsonschema

from . import builders as b
from . import presets
from .errors import ConjcountError, SpecFormatError
from .groups import CentralizerSpectrum, FiniteGroup
from .invariants import InvariantRecord, build_record
from .ratfun import PartialFraction, Polynomial, RationalFunction

CATALOG_SCHEMA_TAG = "conjcount-catalog-v1"
SCAN_SCHEMA_TAG = "conjcount-scan-v1"
SCAN_PREDICATES = ("a-not-b", "b-not-a", "ab-not-normalized")


# ---------------------------------------------------------------------------
# JSON forms for exact values

def _fraction_to_json(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _fraction_from_json(s: str) -> Fraction:
    return Fraction(s)


def _rational_to_json(r: RationalFunction) -> dict:
    return {
        "num": [_fraction_to_json(c) for c in r.num.coefficients],
        "den": [_fraction_to_json(c) for c in r.den.coefficients],
    }


def _rational_from_json(d: dict) -> RationalFunction:
    return RationalFunction.make(
        Polynomial.of(*[_fraction_from_json(c) for c in d["num"]]),
        Polynomial.of(*[_fraction_from_json(c) for c in d["den"]]),
    )


def _pf_to_json(pf: PartialFraction) -> list:
    return [[_fraction_to_json(c), m] for c, m in pf.terms]


def _pf_from_json(items: list) -> PartialFraction:
    return PartialFraction.of([(_fraction_from_json(c), m) for c, m in items])


def record_to_json(rec: InvariantRecord) -> dict:
    return {
        "group_id": rec.group_id,
        "order": rec.order,
        "center_order": rec.center_order,
        "A": _rational_to_json(rec.A),
        "B": _rational_to_json(rec.B),
        "A_pf": _pf_to_json(rec.A_pf),
        "B_pf": _pf_to_json(rec.B_pf),
        "spectrum": {str(m): z for m, z in rec.spectrum.items()},
        "max_abelian": rec.max_abelian,
        "normalized_A": _rational_to_json(rec.normalized_A),
        "normalized_B": _rational_to_json(rec.normalized_B),
    }


def record_from_json(d: dict) -> InvariantRecord:
    return InvariantRecord(
        group_id=d["group_id"],
        order=d["order"],
        center_order=d["center_order"],
        A=_rational_from_json(d["A"]),
        B=_rational_from_json(d["B"]),
        A_pf=_pf_from_json(d["A_pf"]),
        B_pf=_pf_from_json(d["B_pf"]),
        spectrum=CentralizerSpectrum(d["order"], {int(m): z for m, z in d["spectrum"].items()}),
        max_abelian=d["max_abelian"],
        normalized_A=_rational_from_json(d["normalized_A"]),
        normalized_B=_rational_from_json(d["normalized_B"]),
    )


# ---------------------------------------------------------------------------
# GroupSpec JSON

def spec_to_json(spec: b.GroupSpec) -> dict:
    if isinstance(spec, b.Trivial):
        return {"kind": "trivial"}
    if isinstance(spec, b.Cyclic):
        return {"kind": "cyclic", "order": spec.order}
    if isinstance(spec, b.DirectProduct):
        return {"kind": "direct_product", "factors": [spec_to_json(f) for f in spec.factors]}
    if isinstance(spec, b.Dihedral):
        return {"kind": "dihedral", "order": spec.order}
    if isinstance(spec, b.Quaternion):
        return {"kind": "quaternion", "order": spec.order}
    if isinstance(spec, b.Semidihedral):
        return {"kind": "semidihedral", "order": spec.order}
    if isinstance(spec, b.Extraspecial):
        return {"kind": "extraspecial", "p": spec.p, "order": spec.order, "variant": spec.variant}
    if isinstance(spec, b.Permutations):
        return {
            "kind": "permutations",
            "degree": spec.degree,
            "generators": [list(g) for g in spec.generators],
        }
    if isinstance(spec, b.Table):
        return {"kind": "table", "table": [list(row) for row in spec.table]}
    if isinstance(spec, b.PcPresentation):
        out = {
            "kind": "pc",
            "orders": list(spec.orders),
            "powers": {str(i): [list(pair) for pair in word] for i, word in spec.powers},
            "conjugates": {
                f"{i},{j}": [list(pair) for pair in word] for i, j, word in spec.conjugates
            },
        }
        if spec.expected_order is not None:
            out["expected_order"] = spec.expected_order
        return out
    if isinstance(spec, b.Semidirect):
        return {
            "kind": "semidirect",
            "kernel": spec_to_json(spec.kernel),
            "complement": spec_to_json(spec.complement),
            "action_generators": list(spec.action_generators),
            "action_images": [list(p) for p in spec.action_images],
        }
    if isinstance(spec, b.Stem):
        return {"kind": "stem", "family": spec.family, "p": spec.p}
    raise TypeError(f"unknown spec {spec!r}")


def spec_from_json(d: dict) -> b.GroupSpec:
    kind = d.get("kind")
    if kind == "trivial":
        return b.Trivial()
    if kind == "cyclic":
        return b.Cyclic(d["order"])
    if kind == "direct_product":
        return b.DirectProduct(tuple(spec_from_json(f) for f in d["factors"]))
    if kind == "dihedral":
        return b.Dihedral(d["order"])
    if kind == "quaternion":
        return b.Quaternion(d["order"])
    if kind == "semidihedral":
        return b.Semidihedral(d["order"])
    if kind == "extraspecial":
        return b.Extraspecial(d["p"], d["order"], d["variant"])
    if kind == "permutations":
        return b.Permutations(d["degree"], tuple(tuple(g) for g in d["generators"]))
    if kind == "table":
        return b.Table(tuple(tuple(row) for row in d["table"]))
    if kind == "pc":
        return b.PcPresentation(
            orders=tuple(d["orders"]),
            powers=tuple(
                (int(i), tuple((g, e) for g, e in word))
                for i, word in sorted(d.get("powers", {}).items(), key=lambda kv: int(kv[0]))
            ),
            conjugates=tuple(
                (int(key.split(",")[0]), int(key.split(",")[1]), tuple((g, e) for g, e in word))
                for key, word in sorted(
                    d.get("conjugates", {}).items(),
                    key=lambda kv: (int(kv[0].split(",")[0]), int(kv[0].split(",")[1])),
                )
            ),
            expected_order=d.get("expected_order"),
        )
    if kind == "semidirect":
        return b.Semidirect(
            kernel=spec_from_json(d["kernel"]),
            complement=spec_from_json(d["complement"]),
            action_generators=tuple(d["action_generators"]),
            action_images=tuple(tuple(p) for p in d["action_images"]),
        )
    if kind == "stem":
        return b.Stem(d["family"], d["p"])
    raise SpecFormatError(f"kind: unknown group-spec kind {kind!r}")


def load_spec(path) -> b.GroupSpec:
    """Read and validate a GroupSpec JSON file."""
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    _validate(data, GROUP_SPEC_SCHEMA)
    return spec_from_json(data)


# ---------------------------------------------------------------------------
# catalog entries

@dataclass(frozen=True)
class CatalogEntry:
    name: str
    spec: b.GroupSpec
    status: str  # "computed" or "unavailable"
    record: InvariantRecord | None = None
    reason: str | None = None


def compute_entry(name: str, spec: b.GroupSpec) -> CatalogEntry:
    try:
        group = b.build(spec)
        return CatalogEntry(name, spec, "computed", record=build_record(group))
    except ConjcountError as exc:
        return CatalogEntry(name, spec, "unavailable", reason=f"{type(exc).__name__}: {exc}")


def builtin_specs() -> dict[str, b.GroupSpec]:
    """Named recipes for every group this artifact ships with."""
    specs: dict[str, b.GroupSpec] = {}
    for k in range(2, 13):
        specs[f"C{k}"] = b.Cyclic(k)
    specs["C2xC2"] = b.DirectProduct((b.Cyclic(2), b.Cyclic(2)))
    specs["S3"] = presets.s3_spec()
    specs["A4"] = presets.a4_spec()
    for n in (8, 10, 12, 16, 18, 32):
        specs[f"D{n}"] = b.Dihedral(n)
    specs["Q8"] = b.Quaternion(8)
    specs["Q16"] = b.Quaternion(16)
    specs["SD16"] = b.Semidihedral(16)
    specs["M16"] = presets.m16_spec()
    specs["Heis27"] = b.Extraspecial(3, 27, "odd-exponent-p")
    specs["ES243"] = b.Extraspecial(3, 243, "odd-exponent-p")
    specs["G18_4"] = presets.g18_4_spec()
    specs["G54_6"] = presets.g54_6_spec()
    specs["G54_8"] = presets.g54_8_spec()
    specs["G72_41"] = presets.g72_41_spec()
    specs["G128_1758"] = presets.g128_1758_spec()
    specs["G128_2022"] = presets.g128_2022_printed_spec()
    specs["G128_2022_derived"] = presets.g128_2022_spec()
    specs["G1029"] = presets.g1029_spec()
    for family in presets.PHI_FAMILIES:
        specs[f"{family}_p3"] = b.Stem(family, 3)
    for family in presets.GAMMA_FAMILIES:
        specs[family] = b.Stem(family, 2)
    return specs


def build_builtin_catalog(names=None) -> list[CatalogEntry]:
    specs = builtin_specs()
    if names is not None:
        missing = [n for n in names if n not in specs]
        if missing:
            raise KeyError(f"unknown builtin groups: {', '.join(missing)}")
        specs = {n: specs[n] for n in names}
    return [compute_entry(name, spec) for name, spec in specs.items()]


def catalog_to_json(entries) -> dict:
    out = []
    for e in sorted(entries, key=lambda e: e.name):
        item = {"name": e.name, "spec": spec_to_json(e.spec), "status": e.status}
        if e.record is not None:
            item["record"] = record_to_json(e.record)
        if e.reason is not None:
            item["reason"] = e.reason
        out.append(item)
    return {"schema": CATALOG_SCHEMA_TAG, "entries": out}


def catalog_from_json(data) -> list[CatalogEntry]:
    _validate(data, CATALOG_SCHEMA)
    entries = []
    for item in data["entries"]:
        entries.append(
            CatalogEntry(
                name=item["name"],
                spec=spec_from_json(item["spec"]),
                status=item["status"],
                record=record_from_json(item["record"]) if "record" in item else None,
                reason=item.get("reason"),
            )
        )
    return entries


def save_catalog(path, entries) -> None:
    """Serialize entries and write the file atomically."""
    path = Path(path)
    payload = json.dumps(catalog_to_json(entries), indent=2, sort_keys=True) + "\n"
    fd, tmp = tempfile.mkstemp(dir=path.parent or Path("."), prefix=".catalog-", suffix=".json")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(payload)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def load_catalog(path) -> list[CatalogEntry]:
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    return catalog_from_json(data)


# ---------------------------------------------------------------------------
# equivalence scans

@dataclass(frozen=True)
class ScanPair:
    first: str
    second: str
    a_equivalent: bool
    b_equivalent: bool
    same_normalized_A: bool
    same_normalized_B: bool


@dataclass(frozen=True)
class ScanReport:
    predicate: str
    pairs: tuple[ScanPair, ...]
    unavailable: tuple[str, ...]


def scan_catalog(entries, predicate: str) -> ScanReport:
    """Evaluate all unordered pairs of computed entries under a predicate.

    "a-not-b" and "b-not-a" select one-sided equivalences; the
    "ab-not-normalized" predicate selects pairs that neither A nor B can
    distinguish (reported with their normalized-invariant flags).
    """
    if predicate not in SCAN_PREDICATES:
        raise ValueError(f"unknown predicate {predicate!r}; choose from {SCAN_PREDICATES}")
    computed = [e for e in entries if e.status == "computed"]
    unavailable = tuple(sorted(e.name for e in entries if e.status != "computed"))
    if len(computed) < 2:
        raise ValueError("need at least two computed catalog entries to scan")
    computed.sort(key=lambda e: (e.record.order, e.name))
    pairs = []
    for i, e1 in enumerate(computed):
        for e2 in computed[i + 1 :]:
            r1, r2 = e1.record, e2.record
            a_eq = r1.A == r2.A
            if a_eq:
                assert r1.spectrum == r2.spectrum
            b_eq = r1.B == r2.B
            pair = ScanPair(
                e1.name,
                e2.name,
                a_eq,
                b_eq,
                r1.normalized_A == r2.normalized_A,
                r1.normalized_B == r2.normalized_B,
            )
            if _predicate_holds(predicate, pair):
                pairs.append(pair)
    return ScanReport(predicate, tuple(pairs), unavailable)


def _predicate_holds(predicate: str, pair: ScanPair) -> bool:
    if predicate == "a-not-b":
        return pair.a_equivalent and not pair.b_equivalent
    if predicate == "b-not-a":
        return pair.b_equivalent and not pair.a_equivalent
    return pair.a_equivalent and pair.b_equivalent


def scan_report_to_json(report: ScanReport) -> dict:
    return {
        "schema": SCAN_SCHEMA_TAG,
        "predicate": report.predicate,
        "pairs": [
            {
                "first": p.first,
                "second": p.second,
                "a_equivalent": p.a_equivalent,
                "b_equivalent": p.b_equivalent,
                "same_normalized_A": p.same_normalized_A,
                "same_normalized_B": p.same_normalized_B,
            }
            for p in report.pairs
        ],
        "unavailable": list(report.unavailable),
    }


# ---------------------------------------------------------------------------
# schemas

_FRACTION = {"type": "string", "pattern": r"^-?\d+/\d+$"}
_WORD = {
    "type": "array",
    "items": {
        "type": "array",
        "prefixItems": [{"type": "integer"}, {"type": "integer", "minimum": 1}],
        "minItems": 2,
        "maxItems": 2,
    },
}

GROUP_SPEC_SCHEMA = {
    "type": "object",
    "required": ["kind"],
    "properties": {
        "kind": {
            "enum": [
                "trivial", "cyclic", "direct_product", "dihedral", "quaternion",
                "semidihedral", "extraspecial", "permutations", "table", "pc",
                "semidirect", "stem",
            ]
        },
        "order": {"type": "integer", "minimum": 1},
        "p": {"type": "integer", "minimum": 2},
        "variant": {"type": "string"},
        "degree": {"type": "integer", "minimum": 1},
        "generators": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
        "table": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
        "factors": {"type": "array"},
        "orders": {"type": "array", "items": {"type": "integer", "minimum": 2}},
        "powers": {"type": "object", "additionalProperties": _WORD},
        "conjugates": {"type": "object", "additionalProperties": _WORD},
        "expected_order": {"type": "integer", "minimum": 1},
        "kernel": {"type": "object"},
        "complement": {"type": "object"},
        "action_generators": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "action_images": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
        "family": {"type": "string"},
    },
}

_RATIONAL = {
    "type": "object",
    "required": ["num", "den"],
    "properties": {
        "num": {"type": "array", "items": _FRACTION},
        "den": {"type": "array", "items": _FRACTION},
    },
}

_RECORD = {
    "type": "object",
    "required": [
        "group_id", "order", "center_order", "A", "B", "A_pf", "B_pf",
        "spectrum", "max_abelian", "normalized_A", "normalized_B",
    ],
    "properties": {
        "group_id": {"type": "string"},
        "order": {"type": "integer", "minimum": 1},
        "center_order": {"type": "integer", "minimum": 1},
        "A": _RATIONAL,
        "B": _RATIONAL,
        "normalized_A": _RATIONAL,
        "normalized_B": _RATIONAL,
        "A_pf": {"type": "array"},
        "B_pf": {"type": "array"},
        "spectrum": {"type": "object", "additionalProperties": {"type": "integer", "minimum": 1}},
        "max_abelian": {"type": "integer", "minimum": 1},
    },
}

CATALOG_SCHEMA = {
    "type": "object",
    "required": ["schema", "entries"],
    "properties": {
        "schema": {"const": CATALOG_SCHEMA_TAG},
        "entries": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "spec", "status"],
                "properties": {
                    "name": {"type": "string"},
                    "spec": GROUP_SPEC_SCHEMA,
                    "status": {"enum": ["computed", "unavailable"]},
                    "record": _RECORD,
                    "reason": {"type": "string"},
                },
            },
        },
    },
}


def _validate(data, schema) -> None:
    try:
        jsonschema.validate(data, schema)
    except jsonschema.ValidationError as exc:
        path = "/".join(str(p) for p in exc.absolute_path) or "(root)"
        raise SpecFormatError(f"{path}: {exc.message}") from exc


def cache_dir() -> Path | None:
    """Directory from CONJCOUNT_CACHE_DIR, if set."""
    value = os.environ.get("CONJCOUNT_CACHE_DIR")
    return Path(value) if value else None
