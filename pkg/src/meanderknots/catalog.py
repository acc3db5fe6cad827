"""Reference tables shipped as JSON fixtures, name lookup, and census export.

Fixture schema (data/catalog.json): a list of rows with keys
    table           which listing the row belongs to
    name            knot or link symbol, or null for unnamed links
    kind            "knot" or "link"
    conway          Conway symbol as printed (display only)
    dt              DT code text or null
    short_gauss     second half of the Gauss code, or null
    gauss           full Gauss code text, or null
    meander_number  smallest meander diagram size, where listed
    verified        false when the row has a transcription defect
    note            free-text remark on the row
Rows are copied as printed; defects are flagged, never corrected.
"""
import csv
import io
import json
import os
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from importlib import resources

from .diagram import DTCode, GaussCode, _int_groups, from_dt_code, realize_gauss_code
from .errors import CatalogLoadError, MalformedInputError, MeanderKnotsError

ENV_VAR = "MEANDERKNOTS_CATALOG"
_KEYS = ("table", "name", "kind", "conway", "dt", "short_gauss", "gauss",
         "meander_number", "verified", "note")


@dataclass(frozen=True, eq=False)
class CatalogEntry:
    table: str
    name: str
    kind: str
    conway: str
    dt_text: str
    short_text: str
    gauss_text: str
    meander_number: int
    verified: bool
    note: str = field(default=None)

    @cached_property
    def dt(self):
        """Parsed DT code, or None when the printed code is malformed."""
        if self.dt_text is None:
            return None
        try:
            return DTCode.parse(self.dt_text)
        except MalformedInputError:
            return None

    @cached_property
    def short_gauss(self):
        if self.short_text is None:
            return None
        groups = _int_groups(self.short_text)
        return tuple(groups[0]) if len(groups) == 1 else None

    @cached_property
    def gauss(self):
        """Full Gauss code from the printed full code or the short code."""
        try:
            if self.gauss_text is not None:
                return GaussCode.parse(self.gauss_text)
            if self.short_gauss is not None:
                return GaussCode.from_short(self.short_gauss, link=self.kind == "link")
        except MalformedInputError:
            return None
        return None

    @property
    def n_crossings(self):
        for code in (self.dt, self.gauss):
            if code is not None:
                return code.n_crossings
        return None

    def diagram(self, source=None):
        """Realized diagram from the DT code ('dt') or the Gauss code
        ('gauss'); by default the DT code when it parses."""
        if source is None:
            source = "dt" if self.dt is not None else "gauss"
        if source == "dt":
            if self.dt is None:
                raise MalformedInputError(f"{self.label} has no usable DT code")
            return from_dt_code(self.dt)
        if self.gauss is None:
            raise MalformedInputError(f"{self.label} has no usable Gauss code")
        return realize_gauss_code(self.gauss)

    @cached_property
    def fingerprint(self):
        from .invariants import fingerprint
        try:
            return fingerprint(self.diagram())
        except MeanderKnotsError:
            return None

    @property
    def label(self):
        return self.name or self.conway or "?"


def _entry(row):
    if not isinstance(row, dict) or set(row) != set(_KEYS):
        raise CatalogLoadError(f"fixture row has unexpected keys: {row!r}")
    if row["kind"] not in ("knot", "link") or not isinstance(row["verified"], bool):
        raise CatalogLoadError(f"fixture row has a bad kind or verified flag: {row!r}")
    return CatalogEntry(row["table"], row["name"], row["kind"], row["conway"], row["dt"],
                        row["short_gauss"], row["gauss"], row["meander_number"],
                        row["verified"], row["note"])


def catalog_path():
    override = os.environ.get(ENV_VAR)
    if override:
        return override
    return str(resources.files("meanderknots") / "data" / "catalog.json")


@lru_cache(maxsize=4)
def _load(path):
    try:
        with open(path, encoding="utf-8") as fh:
            rows = json.load(fh)
    except (OSError, ValueError) as exc:
        raise CatalogLoadError(f"cannot read fixture file {path}: {exc}") from exc
    if not isinstance(rows, list):
        raise CatalogLoadError(f"fixture file {path} does not hold a list")
    return tuple(_entry(r) for r in rows)


def load_catalog(path=None):
    return list(_load(path or catalog_path()))


def entries(table=None, verified=None, path=None):
    out = []
    for e in load_catalog(path):
        if table is not None and e.table != table:
            continue
        if verified is not None and e.verified != verified:
            continue
        out.append(e)
    return out


def lookup(name, path=None):
    """Entries with the given name, verified ones first."""
    hits = [e for e in load_catalog(path) if e.name == name]
    return sorted(hits, key=lambda e: not e.verified)


# tables whose names count as knot or link types for name resolution
NAMING_TABLES = ("alternating_meander_knots", "alternating_meander_links",
                 "nonalternating_meander_knots", "meander_number",
                 "ogc_alternating", "ogc_nonalternating", "examples")


@lru_cache(maxsize=4)
def _fingerprint_index(path):
    index = {}
    for e in _load(path):
        if not e.verified or not e.name or e.table not in NAMING_TABLES:
            continue
        fp = e.fingerprint
        if fp is None:
            continue
        names = index.setdefault(fp, [])
        if e.name not in names:
            names.append(e.name)
    return index


def names_for_fingerprint(fp, path=None):
    return list(_fingerprint_index(path or catalog_path()).get(fp, ()))


@lru_cache(maxsize=4)
def _dt_index(path):
    """Canonical DT codes of the diagrams given by every verified named row."""
    from .diagram import to_dt_code
    index = {}
    for e in _load(path):
        if not e.verified or not e.name:
            continue
        for source in ("dt", "gauss"):
            try:
                key = str(to_dt_code(e.diagram(source)))
            except MeanderKnotsError:
                continue
            index.setdefault(key, e.name)
    return index


def name_for_dt(code, path=None):
    """Name of the verified row whose diagram has this canonical DT code."""
    return _dt_index(path or catalog_path()).get(str(code))


# ------------------------------------------------------------------ export


def _rows_sorted(rows):
    return sorted(rows, key=lambda r: (r.n, r.kind, r.c))


def export_census(rows, fmt):
    """Serialize census rows; 'csv' gives the count table, 'json' adds
    representatives and collision reports."""
    rows = _rows_sorted(rows)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "kind", "c", "count"])
        for r in rows:
            w.writerow([r.n, r.kind, r.c, r.type_count])
        return buf.getvalue().encode()
    if fmt == "json":
        return (json.dumps([r.to_json() for r in rows], indent=1, sort_keys=True) + "\n").encode()
    raise ValueError(f"unknown export format {fmt!r}")


def import_census(data, fmt):
    from .classify import CensusRow
    text = data.decode() if isinstance(data, bytes) else data
    if fmt == "csv":
        reader = csv.DictReader(io.StringIO(text))
        return [CensusRow(int(r["n"]), r["kind"], int(r["c"]), int(r["count"]))
                for r in reader]
    if fmt == "json":
        return [CensusRow.from_json(r) for r in json.loads(text)]
    raise ValueError(f"unknown export format {fmt!r}")
