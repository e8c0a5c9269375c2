from types import SimpleNamespace

import pytest

from conjcount.builders import build
from conjcount.catalog import CatalogEntry, builtin_specs
from conjcount.errors import ConjcountError
from conjcount.invariants import build_record


@pytest.fixture(scope="session")
def ctx():
    """Builtin groups and their catalog entries, built once per session."""
    groups = {}
    entries = []
    for name, spec in builtin_specs().items():
        try:
            G = build(spec)
        except ConjcountError as exc:
            entries.append(
                CatalogEntry(name, spec, "unavailable", reason=f"{type(exc).__name__}: {exc}")
            )
            continue
        groups[name] = G
        entries.append(CatalogEntry(name, spec, "computed", record=build_record(G)))
    return SimpleNamespace(groups=groups, entries=entries)
