"""Columnar voter dataset: CSV ingestion, validation and derived columns.

Rows containing missing or invalid cells are dropped during ingestion
(no imputation); the counts are reported per column in an
:class:`IngestReport`. A :class:`Dataset` is immutable once built and
safe to share across concurrent fitting tasks.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field

import numpy as np

from .schema import (
    CountTrue,
    CountTrueSince,
    Identity,
    Ratio,
    Schema,
    Square,
)

MISSING_TOKENS = ("", "NA", "NaN", "nan")


class IngestError(ValueError):
    """Unreadable file or header that cannot satisfy the schema."""


@dataclass
class IngestReport:
    """Row drop accounting for one CSV ingestion."""

    path: str
    n_read: int
    n_kept: int
    dropped: int
    violations: dict[str, int] = field(default_factory=dict)

    def to_text(self):
        lines = [
            f"ingested {self.path}",
            f"rows read     {self.n_read}",
            f"rows kept     {self.n_kept}",
            f"rows dropped  {self.dropped}",
        ]
        if self.violations:
            lines.append("violations by column:")
            for name in sorted(self.violations):
                lines.append(f"  {name:<20s} {self.violations[name]}")
        return "\n".join(lines)

    def __str__(self):
        return self.to_text()


@dataclass(frozen=True)
class Dataset:
    """Validated columnar table with a stable row identifier per record.

    Numeric columns are stored as float64, binary as int8 and
    categorical/ordinal as integer level codes into the declared level
    list. Identifier columns are kept verbatim as strings.
    """

    schema: Schema
    columns: dict[str, np.ndarray]
    row_ids: np.ndarray
    n_rows: int
    derivation_flags: dict[str, np.ndarray] = field(default_factory=dict)

    def __post_init__(self):
        for name, arr in self.columns.items():
            if len(arr) != self.n_rows:
                raise ValueError(f"column {name!r} has wrong length")
            arr.setflags(write=False)
        self.row_ids.setflags(write=False)

    def __len__(self):
        return self.n_rows

    def values(self, name):
        """Raw storage: floats, 0/1 ints, or level codes."""
        return self.columns[name]

    def level_strings(self, name):
        spec = self.schema.column(name)
        if spec.kind not in ("categorical", "ordinal"):
            raise ValueError(f"{name} has no levels")
        levels = np.asarray(spec.levels, dtype=object)
        return levels[self.columns[name]]

    def cell_text(self, name, i):
        """Canonical text form of one cell, as written by write_csv."""
        spec = self.schema.column(name)
        v = self.columns[name][i]
        if spec.role == "identifier":
            return str(v)
        if spec.kind in ("categorical", "ordinal"):
            return spec.levels[int(v)]
        if spec.kind == "binary":
            return str(int(v))
        return format_float(float(v))

    def response_values(self):
        return self.columns[self.schema.response.name]

    def take(self, indices):
        """Row subset / bootstrap resample (repeats allowed)."""
        idx = np.asarray(indices)
        cols = {name: arr[idx] for name, arr in self.columns.items()}
        flags = {name: arr[idx] for name, arr in self.derivation_flags.items()}
        return Dataset(self.schema, cols, self.row_ids[idx], len(idx), flags)


def format_float(x):
    """Shortest round-trip decimal form; integral values lose the '.0'."""
    if x != x:
        return "nan"
    if x in (float("inf"), float("-inf")):
        return "inf" if x > 0 else "-inf"
    if x == int(x) and abs(x) < 1e16:
        return str(int(x))
    return repr(x)


def load_csv(path, schema):
    """Read and validate a CSV against ``schema``.

    The header must contain every schema column (extra file columns are
    ignored). Rows with missing or invalid cells are dropped and
    counted. Returns ``(dataset, report)`` where the dataset already
    includes the schema's derived columns.
    """
    try:
        fh = open(path, "r", encoding="utf-8", newline="")
    except OSError as exc:
        raise IngestError(f"cannot read {path}: {exc}") from None
    with fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise IngestError(f"{path}: empty file") from None
        positions = {}
        for spec in schema.columns:
            if spec.name not in header:
                raise IngestError(f"{path}: header is missing column {spec.name!r}")
            positions[spec.name] = header.index(spec.name)
        rows = list(reader)

    n_read = len(rows)
    specs = list(schema.columns)
    raw = {}
    keep = np.ones(n_read, dtype=bool)
    violations = {}
    for spec in specs:
        j = positions[spec.name]
        cells = [row[j] if j < len(row) else "" for row in rows]
        parsed, bad = _parse_column(spec, cells)
        raw[spec.name] = parsed
        n_bad = int(bad.sum())
        if n_bad:
            violations[spec.name] = n_bad
            keep &= ~bad
    kept = np.flatnonzero(keep)

    columns = {spec.name: raw[spec.name][kept] for spec in specs}
    id_col = schema.identifier_column()
    if id_col is not None:
        row_ids = columns[id_col]
    else:
        row_ids = kept.astype(np.int64)
    ds = Dataset(schema, columns, row_ids, len(kept))
    report = IngestReport(
        path=str(path),
        n_read=n_read,
        n_kept=len(kept),
        dropped=n_read - len(kept),
        violations=violations,
    )
    return apply_derivations(ds), report


def _parse_column(spec, cells):
    n = len(cells)
    bad = np.zeros(n, dtype=bool)
    if spec.role == "identifier":
        return np.asarray(cells, dtype=object), bad
    if spec.kind in ("categorical", "ordinal"):
        code = {lvl: k for k, lvl in enumerate(spec.levels)}
        out = np.empty(n, dtype=np.int32)
        for i, cell in enumerate(cells):
            k = code.get(cell.strip(), -1)
            out[i] = k
            if k < 0:
                bad[i] = True
        return out, bad
    if spec.kind == "binary":
        out = np.zeros(n, dtype=np.int8)
        for i, cell in enumerate(cells):
            c = cell.strip()
            if c == "0" or c == "1":
                out[i] = int(c)
            else:
                bad[i] = True
        return out, bad
    out = np.empty(n, dtype=np.float64)
    for i, cell in enumerate(cells):
        c = cell.strip()
        if c in MISSING_TOKENS:
            bad[i] = True
            out[i] = np.nan
            continue
        try:
            v = float(c)
        except ValueError:
            bad[i] = True
            out[i] = np.nan
            continue
        out[i] = v
        if not np.isfinite(v):
            bad[i] = True
    return out, bad


def write_csv(ds, path, include_derived=False):
    """Write canonical CSV (base columns unless ``include_derived``)."""
    specs = list(ds.schema.columns)
    if include_derived:
        specs = specs + [r.spec() for r in ds.schema.derived]
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow([s.name for s in specs])
        for i in range(ds.n_rows):
            writer.writerow([ds.cell_text(s.name, i) for s in specs])


def apply_derivations(ds):
    """Evaluate schema derivation rules, appending/overwriting targets.

    Idempotent: targets are recomputed from their sources each call.
    Zero ratio denominators yield 0 and are flagged per row in
    ``dataset.derivation_flags[target]``.
    """
    columns = dict(ds.columns)
    flags = dict(ds.derivation_flags)
    for rule in ds.schema.derived:
        value, flag = _eval_rule(rule.op, ds.schema, columns)
        columns[rule.target] = value
        if flag is not None:
            flags[rule.target] = flag
        elif rule.target in flags:
            del flags[rule.target]
    return Dataset(ds.schema, columns, ds.row_ids, ds.n_rows, flags)


def _eval_rule(op, schema, columns):
    if isinstance(op, Identity):
        return np.asarray(columns[op.source], dtype=np.float64), None
    if isinstance(op, Square):
        src = schema.column(op.source)
        if src.kind not in ("numeric", "binary"):
            raise ValueError(f"square() needs a numeric source, got {src.kind}")
        v = np.asarray(columns[op.source], dtype=np.float64)
        return v * v, None
    if isinstance(op, CountTrue):
        _check_binary_sources(op.sources, schema)
        stack = np.vstack([columns[s] for s in op.sources]).astype(np.float64)
        return stack.sum(axis=0), None
    if isinstance(op, CountTrueSince):
        _check_binary_sources(op.sources, schema)
        anchor_spec = schema.column(op.anchor)
        if anchor_spec.kind != "numeric":
            raise ValueError("count_true_since anchor must be numeric")
        stack = np.vstack([columns[s] for s in op.sources]).astype(np.float64)
        skip = np.clip(
            np.asarray(columns[op.anchor], dtype=np.float64),
            0,
            len(op.sources),
        ).astype(np.int64)
        idx = np.arange(len(op.sources))[:, None]
        return np.where(idx >= skip[None, :], stack, 0.0).sum(axis=0), None
    if isinstance(op, Ratio):
        num, _ = _eval_rule(op.numerator, schema, columns)
        den, _ = _eval_rule(op.denominator, schema, columns)
        zero = den == 0
        out = np.divide(num, den, out=np.zeros_like(num), where=~zero)
        return out, zero
    raise TypeError(f"unknown derivation op {op!r}")


def _check_binary_sources(sources, schema):
    for s in sources:
        if schema.column(s).kind != "binary":
            raise ValueError(f"count source {s!r} must be binary")


def from_arrays(schema, columns, row_ids=None):
    """Build a Dataset from already-validated arrays (generator use)."""
    n = len(next(iter(columns.values())))
    cols = {}
    for spec in schema.columns:
        arr = np.asarray(columns[spec.name])
        if spec.role == "identifier":
            arr = arr.astype(object)
        elif spec.kind == "binary":
            arr = arr.astype(np.int8)
        elif spec.kind in ("categorical", "ordinal"):
            arr = arr.astype(np.int32)
            if arr.size and (arr.min() < 0 or arr.max() >= len(spec.levels)):
                raise ValueError(f"{spec.name}: level code out of range")
        else:
            arr = arr.astype(np.float64)
        cols[spec.name] = arr
    if row_ids is None:
        id_col = schema.identifier_column()
        row_ids = cols[id_col] if id_col else np.arange(n, dtype=np.int64)
    return apply_derivations(Dataset(schema, cols, np.asarray(row_ids), n))
