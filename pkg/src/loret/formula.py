"""Model formula grammar and role views.

A model is written ``y ~ <terms> | <terms>``: regressor terms before the
bar, partitioning terms after it. Terms name predictor sets: ``1``
(intercept only / no partitioning), ``s`` (standard), ``e`` (extended)
or ``s+e``. The four shapes this spans:

    ``y ~ 1 | 1``   constant prevalence (majority vote)
    ``y ~ x | 1``   one global logistic regression
    ``y ~ 1 | z``   classification tree
    ``y ~ x | z``   tree with logistic node models

A set may appear on only one side of the bar, so the induced variable
views never overlap.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class FormulaError(ValueError):
    """Malformed or inconsistent model formula."""


@dataclass(frozen=True)
class ModelSchema:
    """Parsed formula: which predictor sets feed X and which feed Z."""

    regressor_sets: tuple[str, ...]
    partition_sets: tuple[str, ...]

    def __post_init__(self):
        for tag in self.regressor_sets + self.partition_sets:
            if tag not in ("s", "e"):
                raise FormulaError(f"unknown predictor set {tag!r}")
        overlap = set(self.regressor_sets) & set(self.partition_sets)
        if overlap:
            raise FormulaError(
                f"set(s) {sorted(overlap)} appear on both sides of '|'"
            )

    @property
    def has_regressors(self):
        return bool(self.regressor_sets)

    @property
    def has_partitioning(self):
        return bool(self.partition_sets)

    def unparse(self):
        return f"y ~ {_terms_text(self.regressor_sets)} | {_terms_text(self.partition_sets)}"


def parse_formula(text):
    body = text.replace(" ", "").replace("\t", "")
    lhs, tilde, rest = body.partition("~")
    if not tilde or lhs != "y":
        raise FormulaError(f"formula must look like 'y ~ terms | terms': {text!r}")
    xpart, bar, zpart = rest.partition("|")
    if not bar:
        raise FormulaError(f"formula needs a '|' partitioning part: {text!r}")
    return ModelSchema(_parse_terms(xpart, text), _parse_terms(zpart, text))


def _parse_terms(part, original):
    if part == "1":
        return ()
    tags = part.split("+")
    if not tags or any(t not in ("s", "e") for t in tags):
        raise FormulaError(f"bad terms {part!r} in {original!r}")
    if len(set(tags)) != len(tags):
        raise FormulaError(f"duplicate terms {part!r} in {original!r}")
    return tuple(sorted(tags))


def _terms_text(tags):
    return "+".join(tags) if tags else "1"


@dataclass(frozen=True)
class RoleViews:
    """Disjoint column views induced by a formula over a schema.

    ``x_columns`` feed the logistic design (squared derived terms
    included), ``z_columns`` are split candidates (squared terms
    excluded: splitting on a square duplicates its source).
    """

    response: str
    x_columns: tuple
    z_columns: tuple

    def x_names(self):
        return tuple(c.name for c in self.x_columns)

    def z_names(self):
        return tuple(c.name for c in self.z_columns)


def select_roles(ds, spec):
    """Resolve a ModelSchema to concrete (X, Z, y) column views."""
    schema = ds.schema
    x_cols = schema.model_columns(set(spec.regressor_sets), include_squares=True)
    z_cols = schema.model_columns(set(spec.partition_sets), include_squares=False)
    if spec.has_regressors and not x_cols:
        raise FormulaError(
            f"no columns carry set tag(s) {list(spec.regressor_sets)} for regressors"
        )
    if spec.has_partitioning and not z_cols:
        raise FormulaError(
            f"no columns carry set tag(s) {list(spec.partition_sets)} for partitioning"
        )
    return RoleViews(schema.response.name, x_cols, z_cols)


def response_vector(ds):
    return np.asarray(ds.response_values(), dtype=np.int8)
