"""Campaign artifacts: segment profiles, targeting lists and quadrants.

A segment profile summarizes one terminal node: its routing conditions,
predicted-probability summary, vote-likelihood shares (likely (0.7, 1],
undecided (0.3, 0.7], unlikely [0, 0.3]) and the marginal distribution
of descriptive variables. The targeting list ranks individual records
by predicted probability and flags the ones inside the targeting range
(default [0.3, 0.7]); optional attribute filters narrow the targeted
set after the range is applied.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass, field

import numpy as np

from .dataset import format_float

LIKELY_BOUNDS = (0.3, 0.7)  # unlikely [0, .3], undecided (.3, .7], likely (.7, 1]

DEFAULT_BANDS = {
    "income": ((35000.0, 75000.0), ("<35k", "35k-75k", ">75k")),
    "age": ((26.0, 35.0, 45.0, 54.0), ("18-26", "27-35", "36-45", "46-54", "55+")),
}


@dataclass(frozen=True)
class Banding:
    """Half-open numeric bands (-inf, e1], (e1, e2], ... (ek, inf)."""

    variable: str
    edges: tuple[float, ...]
    labels: tuple[str, ...]

    def __post_init__(self):
        if len(self.labels) != len(self.edges) + 1:
            raise ValueError("need one label more than edges")
        if any(a >= b for a, b in zip(self.edges, self.edges[1:])):
            raise ValueError("edges must increase")

    def assign(self, values):
        idx = np.searchsorted(np.asarray(self.edges), np.asarray(values), side="left")
        return np.asarray(self.labels, dtype=object)[idx]


@dataclass(frozen=True)
class TargetingConfig:
    """Probability range whose members receive mobilization effort,
    plus optional attribute filters applied after range selection."""

    low: float = 0.3
    high: float = 0.7
    filters: tuple = ()

    def __post_init__(self):
        if not 0.0 <= self.low < self.high <= 1.0:
            raise ValueError("need 0 <= low < high <= 1")

    def in_range(self, probs):
        p = np.asarray(probs)
        return (p >= self.low) & (p <= self.high)


@dataclass(frozen=True)
class QuadrantConfig:
    turnout_cutoff: float = 0.5
    support_cutoff: float = 0.5

    def __post_init__(self):
        for c in (self.turnout_cutoff, self.support_cutoff):
            if not 0.0 <= c <= 1.0:
                raise ValueError("cutoffs must lie in [0, 1]")


@dataclass
class SegmentProfile:
    node_id: int
    path: str
    n: int
    prob_mean: float
    prob_median: float
    share_likely: float
    share_undecided: float
    share_unlikely: float
    marginals: dict[str, dict[str, float]] = field(default_factory=dict)

    def to_text(self):
        lines = [
            f"segment {self.node_id}  (n={self.n})",
            f"  path: {self.path or '<root>'}",
            f"  predicted probability: mean={self.prob_mean:.3f} "
            f"median={self.prob_median:.3f}",
            f"  vote likelihood: likely={self.share_likely:.3f} "
            f"undecided={self.share_undecided:.3f} "
            f"unlikely={self.share_unlikely:.3f}",
        ]
        for var in self.marginals:
            parts = ", ".join(
                f"{lvl}={share:.3f}" for lvl, share in self.marginals[var].items()
            )
            lines.append(f"  {var}: {parts}")
        return "\n".join(lines)


def likelihood_shares(probs):
    """(likely, undecided, unlikely) shares of a probability vector."""
    p = np.asarray(probs, dtype=np.float64)
    lo, hi = LIKELY_BOUNDS
    likely = float(np.mean(p > hi))
    unlikely = float(np.mean(p <= lo))
    return likely, 1.0 - likely - unlikely, unlikely


def build_profiles(tree, ds, profile_variables, bandings=None):
    """One profile per terminal node, covering every row exactly once."""
    bandings = dict(bandings or {})
    for var in profile_variables:
        if not ds.schema.has_column(var):
            raise ValueError(f"profile variable {var!r} absent from schema")
    node_ids = tree.route_dataset(ds)
    probs = tree.predict_proba(ds)
    profiles = []
    for node_id in tree.terminal_ids():
        rows = np.flatnonzero(node_ids == node_id)
        p = probs[rows]
        likely, undecided, unlikely = likelihood_shares(p)
        marginals = {
            var: _marginal(ds, var, rows, bandings) for var in profile_variables
        }
        profiles.append(
            SegmentProfile(
                node_id=node_id,
                path=" and ".join(tree.path_conditions(node_id)),
                n=len(rows),
                prob_mean=float(np.mean(p)),
                prob_median=float(np.median(p)),
                share_likely=likely,
                share_undecided=undecided,
                share_unlikely=unlikely,
                marginals=marginals,
            )
        )
    return profiles


def _marginal(ds, var, rows, bandings):
    spec = ds.schema.column(var)
    if spec.kind in ("categorical", "ordinal"):
        values = ds.level_strings(var)[rows]
        levels = spec.levels
    else:
        banding = bandings.get(var) or _default_banding(var)
        if banding is None:
            raise ValueError(
                f"numeric profile variable {var!r} needs a Banding"
            )
        values = banding.assign(ds.values(var)[rows])
        levels = banding.labels
    n = len(rows)
    return {
        lvl: float(np.sum(values == lvl)) / n if n else 0.0 for lvl in levels
    }


def _default_banding(var):
    if var in DEFAULT_BANDS:
        edges, labels = DEFAULT_BANDS[var]
        return Banding(var, edges, labels)
    return None


def profiles_text(profiles):
    return "\n\n".join(p.to_text() for p in profiles)


def marginals_csv(profiles):
    lines = ["segment,variable,level,share"]
    for p in profiles:
        for var, dist in p.marginals.items():
            for lvl, share in dist.items():
                lines.append(f"{p.node_id},{var},{lvl},{format_float(share)}")
    return "\n".join(lines)


# --- targeting lists ----------------------------------------------------------

_FILTER_OPS = {
    "<=": operator.le,
    ">=": operator.ge,
    "==": operator.eq,
    "!=": operator.ne,
    "<": operator.lt,
    ">": operator.gt,
}


@dataclass(frozen=True)
class AttributeFilter:
    column: str
    op: str
    value: object

    def apply(self, ds, rows):
        spec = ds.schema.column(self.column)
        if spec.kind in ("categorical", "ordinal"):
            values = ds.level_strings(self.column)[rows]
            target = str(self.value)
        else:
            values = np.asarray(ds.values(self.column)[rows], dtype=np.float64)
            target = float(self.value)
        return _FILTER_OPS[self.op](values, target)

    def describe(self):
        return f"{self.column}{self.op}{self.value}"


def parse_filter(text):
    for op in ("<=", ">=", "==", "!=", "<", ">"):
        if op in text:
            col, _, val = text.partition(op)
            col, val = col.strip(), val.strip()
            if not col or not val:
                break
            return AttributeFilter(col, op, val)
    raise ValueError(f"cannot parse filter {text!r}; expected 'column<op>value'")


@dataclass
class TargetingList:
    """Records ranked by predicted probability, most likely first."""

    row_ids: np.ndarray
    probs: np.ndarray
    segments: np.ndarray
    in_range: np.ndarray
    targeted: np.ndarray
    columns: dict[str, np.ndarray]
    config: TargetingConfig

    def __len__(self):
        return len(self.probs)

    def targeted_rows(self):
        return np.flatnonzero(self.targeted)

    def to_csv(self):
        header = ["row_id", "prob", "segment", "in_range", "targeted"]
        header += list(self.columns)
        lines = [",".join(header)]
        for i in range(len(self.probs)):
            cells = [
                str(self.row_ids[i]),
                format_float(float(self.probs[i])),
                str(int(self.segments[i])),
                str(int(self.in_range[i])),
                str(int(self.targeted[i])),
            ]
            for name, values in self.columns.items():
                v = values[i]
                cells.append(
                    format_float(float(v)) if isinstance(v, (float, np.floating))
                    else str(v)
                )
            lines.append(",".join(cells))
        return "\n".join(lines)


def targeting_list(model, ds, config=TargetingConfig(), columns=()):
    """Rank all records by probability and flag the targeted ones.

    Sorting is by probability descending with a stable tie-break on row
    id. ``columns`` name descriptive schema columns carried into the
    output. Filters in the config narrow the targeted set but never the
    list itself.
    """
    probs = np.asarray(model.predict_proba(ds), dtype=np.float64)
    segments = (
        model.segment_ids(ds)
        if hasattr(model, "segment_ids")
        else np.ones(ds.n_rows, dtype=np.int64)
    )
    for col in columns:
        if not ds.schema.has_column(col):
            raise ValueError(f"descriptive column {col!r} absent from schema")
    order = sorted(
        range(ds.n_rows), key=lambda i: (-probs[i], _id_key(ds.row_ids[i]))
    )
    order = np.asarray(order, dtype=np.int64)
    in_range = config.in_range(probs[order])
    targeted = in_range.copy()
    for filt in config.filters:
        targeted &= filt.apply(ds, order)
    out_columns = {}
    for col in columns:
        spec = ds.schema.column(col)
        if spec.kind in ("categorical", "ordinal"):
            out_columns[col] = ds.level_strings(col)[order]
        else:
            out_columns[col] = np.asarray(ds.values(col))[order]
    return TargetingList(
        row_ids=np.asarray(ds.row_ids)[order],
        probs=probs[order],
        segments=np.asarray(segments)[order],
        in_range=in_range,
        targeted=targeted,
        columns=out_columns,
        config=config,
    )


def _id_key(value):
    try:
        return (0, float(value), "")
    except (TypeError, ValueError):
        return (1, 0.0, str(value))


def quadrant_assign(p_turnout, p_support, config=QuadrantConfig()):
    """Four-way targeting category from turnout and support likelihood.

    1 = likely vote & likely support, 2 = likely vote & unlikely
    support, 3 = unlikely vote & likely support, 4 = neither. "Likely"
    is cutoff-inclusive.
    """
    pt = np.asarray(p_turnout, dtype=np.float64)
    ps = np.asarray(p_support, dtype=np.float64)
    if np.any((pt < 0) | (pt > 1)) or np.any((ps < 0) | (ps > 1)):
        raise ValueError("probabilities must lie in [0, 1]")
    vote = pt >= config.turnout_cutoff
    support = ps >= config.support_cutoff
    out = np.where(
        vote & support, 1, np.where(vote, 2, np.where(support, 3, 4))
    )
    return out if out.ndim else int(out)
