"""Design-matrix encoding for logistic node models.

Encoding is deterministic given the schema: intercept first, then one
block per X column in declaration order. Binary and numeric columns
pass through, ordinal columns enter as their level index, categorical
columns as reference-level indicator contrasts (reference = first
declared level).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

INTERCEPT_NAME = "(Intercept)"


@dataclass(frozen=True)
class DesignTerm:
    column: str
    kind: str
    levels: tuple[str, ...] = ()

    @property
    def width(self):
        if self.kind == "categorical":
            return len(self.levels) - 1
        return 1

    def names(self):
        if self.kind == "categorical":
            return tuple(f"{self.column}={lvl}" for lvl in self.levels[1:])
        return (self.column,)


@dataclass(frozen=True)
class DesignInfo:
    """Reproducible covariate-to-column mapping, including intercept."""

    terms: tuple[DesignTerm, ...]

    @property
    def names(self):
        out = [INTERCEPT_NAME]
        for t in self.terms:
            out.extend(t.names())
        return tuple(out)

    @property
    def n_columns(self):
        return 1 + sum(t.width for t in self.terms)

    def matrix(self, ds, rows=None, unknown="error"):
        """Dense design matrix for ``ds`` (optionally a row subset).

        ``unknown`` controls out-of-vocabulary categorical codes
        (code < 0): ``"error"`` raises, ``"reference"`` encodes them as
        the reference level (all indicators zero).
        """
        n = ds.n_rows if rows is None else len(rows)
        X = np.empty((n, self.n_columns), dtype=np.float64)
        X[:, 0] = 1.0
        j = 1
        for term in self.terms:
            col = ds.values(term.column)
            if rows is not None:
                col = col[rows]
            if term.kind == "categorical":
                codes = np.asarray(col, dtype=np.int64)
                if codes.size and codes.min() < 0:
                    if unknown == "error":
                        raise ValueError(
                            f"unknown level in column {term.column!r}"
                        )
                for k in range(1, len(term.levels)):
                    X[:, j] = codes == k
                    j += 1
            else:
                X[:, j] = np.asarray(col, dtype=np.float64)
                j += 1
        return X

    def encode_record(self, record, unknown="error"):
        """Encode one mapping of column name -> raw value."""
        row = np.zeros(self.n_columns, dtype=np.float64)
        row[0] = 1.0
        j = 1
        for term in self.terms:
            value = record[term.column]
            if term.kind == "categorical":
                try:
                    k = term.levels.index(value)
                except ValueError:
                    if unknown == "error":
                        raise ValueError(
                            f"unknown level {value!r} for {term.column!r}"
                        ) from None
                    k = 0
                for lvl in range(1, len(term.levels)):
                    row[j] = 1.0 if lvl == k else 0.0
                    j += 1
            elif term.kind == "ordinal":
                row[j] = (
                    term.levels.index(value)
                    if isinstance(value, str)
                    else float(value)
                )
                j += 1
            else:
                row[j] = float(value)
                j += 1
        return row

    def to_dict(self):
        return {
            "terms": [
                {"column": t.column, "kind": t.kind, "levels": list(t.levels)}
                for t in self.terms
            ]
        }

    @classmethod
    def from_dict(cls, d):
        return cls(
            tuple(
                DesignTerm(t["column"], t["kind"], tuple(t["levels"]))
                for t in d["terms"]
            )
        )


def design_for_columns(columns):
    """DesignInfo over ColumnSpecs; ordinal columns keep their level list
    for record encoding but enter the matrix as level indices."""
    terms = []
    for c in columns:
        if c.kind == "categorical":
            terms.append(DesignTerm(c.name, "categorical", tuple(c.levels)))
        elif c.kind == "ordinal":
            terms.append(DesignTerm(c.name, "ordinal", tuple(c.levels)))
        else:
            terms.append(DesignTerm(c.name, "numeric"))
    return DesignInfo(tuple(terms))
