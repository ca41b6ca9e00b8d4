"""Model-based recursive partitioning with logistic node models.

At each node a logistic regression is fitted; per-row score
contributions (the gradient terms x_i (y_i - pi_i)) are then tested for
instability along every partitioning variable. Ordered variables use
the trimmed supLM statistic over cumulative scores, categorical
variables a chi-square LM statistic over within-level score sums. The
minimum p-value is Bonferroni-adjusted across the tested variables; if
it passes ``alpha`` the winning variable is split at the binary
cutpoint minimizing the children's summed negative log-likelihood, and
the procedure recurses. Separation-flagged nodes are never split
further.

Splitting is deterministic: ties are broken by lowest variable index,
then smallest cutpoint.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import stats

from .design import design_for_columns
from .formula import select_roles
from .logit import SEPARATION_NONE, fit_logit
from .suplm import suplm_pvalue
from .tree import ROUTE_MAJORITY, LoretTree, SplitRule, TreeNode

KIND_ORDERED = "supLM_ordered"
KIND_CATEGORICAL = "LM_categorical"


@dataclass(frozen=True)
class MobMetaparams:
    """Stability-test level, node-size floor and trimming.

    ``minsplit`` is the minimum number of rows a child may receive; it
    must allow reliable node-model estimation (at least 10 rows per
    coefficient, checked at fit time). ``max_cutpoints`` caps the
    candidate thresholds evaluated per ordered variable; when more are
    admissible an evenly spaced subset is used.
    """

    alpha: float = 1e-6
    minsplit: int = 1000
    max_depth: int | None = None
    trim: float = 0.1
    max_cutpoints: int = 64

    def __post_init__(self):
        if not 0.0 < self.alpha <= 1.0:
            raise ValueError("alpha must lie in (0, 1]")
        if self.minsplit < 1:
            raise ValueError("minsplit must be positive")
        if not 0.0 < self.trim < 0.5:
            raise ValueError("trim must lie in (0, 0.5)")
        if self.max_cutpoints < 2:
            raise ValueError("max_cutpoints must be at least 2")


@dataclass(frozen=True)
class StabilityTestResult:
    variable: str
    statistic: float
    p_value: float
    kind: str


def score_contributions(model, X, y):
    """Per-row gradient contributions of the node model, (n, k)."""
    Xk = np.asarray(X, dtype=np.float64)[:, list(model.kept_idx)]
    resid = np.asarray(y, dtype=np.float64) - model.predict_matrix(X)
    return Xk * resid[:, None]


def stability_test(scores, values, column_spec, trim=0.1):
    """Fluctuation test of the scores along one partitioning variable.

    Parameters
    ----------
    scores : (n, k) array of per-row score contributions
    values : raw stored column values (floats or level codes)
    column_spec : ColumnSpec of the partitioning variable
    trim : boundary trimming fraction for ordered variables

    Returns
    -------
    StabilityTestResult with a Bonferroni-adjustable p-value.
    """
    scores = np.asarray(scores, dtype=np.float64)
    n, k = scores.shape
    v = np.asarray(values)
    if n < 2 or np.all(v == v[0]):
        kind = KIND_CATEGORICAL if column_spec.kind == "categorical" else KIND_ORDERED
        return StabilityTestResult(column_spec.name, 0.0, 1.0, kind)
    white = _whiten(scores)
    if column_spec.kind == "categorical":
        stat, p = _lm_categorical(white, v.astype(np.int64))
        return StabilityTestResult(column_spec.name, stat, p, KIND_CATEGORICAL)
    stat, p = _suplm_ordered(white, v.astype(np.float64), trim)
    return StabilityTestResult(column_spec.name, stat, p, KIND_ORDERED)


def _whiten(scores):
    n, k = scores.shape
    J = scores.T @ scores / n
    jitter = 1e-12 * max(np.trace(J) / k, 1.0)
    for _ in range(3):
        try:
            L = np.linalg.cholesky(J + jitter * np.eye(k))
            break
        except np.linalg.LinAlgError:
            jitter *= 1e3
    else:
        w, V = np.linalg.eigh(J)
        w = np.maximum(w, 1e-12 * w.max())
        L = V * np.sqrt(w)
    return np.linalg.solve(L, scores.T).T


def _suplm_ordered(white, values, trim):
    n, k = white.shape
    order = np.argsort(values, kind="stable")
    cum = np.cumsum(white[order], axis=0) / np.sqrt(n)
    vs = values[order]
    # evaluate only between distinct values, inside the trimmed band
    boundaries = np.flatnonzero(vs[1:] > vs[:-1]) + 1
    if boundaries.size == 0:
        return 0.0, 1.0
    t = boundaries / n
    inside = (t >= trim) & (t <= 1.0 - trim)
    if not np.any(inside):
        return 0.0, 1.0
    b = boundaries[inside]
    t = t[inside]
    q = (cum[b - 1] ** 2).sum(axis=1) / (t * (1.0 - t))
    stat = float(q.max())
    return stat, suplm_pvalue(stat, k, trim)


def _lm_categorical(white, codes):
    n, k = white.shape
    n_l = np.bincount(codes)
    observed = np.flatnonzero(n_l)
    if observed.size < 2:
        return 0.0, 1.0
    lm = 0.0
    for level in observed:
        s = white[codes == level].sum(axis=0)
        lm += float(s @ s) / n_l[level]
    dof = (observed.size - 1) * k
    return lm, float(stats.chi2.sf(lm, dof))


@dataclass(frozen=True)
class Cutpoint:
    rule: SplitRule
    objective: float  # children's summed negative log-likelihood
    left_mask: np.ndarray


def best_cutpoint(X, y, values, column_spec, minsplit, max_cutpoints=64, warm=None,
                  scores=None):
    """Best admissible binary cutpoint of one variable by likelihood.

    Each child must receive at least ``minsplit`` rows. Ordered
    variables try thresholds between distinct values (capped at
    ``max_cutpoints`` evenly spaced candidates); categorical variables
    try prefixes of the levels ordered by the leading principal
    coordinate of their mean score vector (falling back to class-1
    prevalence when no scores are given). Returns None when no cutpoint
    is admissible.
    """
    if column_spec.kind == "categorical":
        splits = _categorical_cuts(values, y, column_spec, minsplit, scores)
    else:
        splits = _ordered_cuts(values, minsplit, max_cutpoints, column_spec)
    best = None
    for rule, left_mask in splits:
        nll = 0.0
        for mask in (left_mask, ~left_mask):
            sub = fit_logit(X[mask], y[mask], start=warm)
            nll -= sub.log_likelihood
        if best is None or nll < best.objective - 1e-12:
            best = Cutpoint(rule, nll, left_mask)
    return best


def _ordered_cuts(values, minsplit, max_cutpoints, spec):
    x = np.asarray(values, dtype=np.float64)
    order = np.argsort(x, kind="stable")
    xs = x[order]
    n = len(xs)
    boundaries = np.flatnonzero(xs[1:] > xs[:-1]) + 1
    boundaries = boundaries[(boundaries >= minsplit) & (n - boundaries >= minsplit)]
    if boundaries.size == 0:
        return
    if boundaries.size > max_cutpoints:
        pick = np.unique(
            np.linspace(0, boundaries.size - 1, max_cutpoints).round().astype(int)
        )
        boundaries = boundaries[pick]
    for b in boundaries:
        threshold = 0.5 * (xs[b - 1] + xs[b])
        rule = SplitRule(
            variable=spec.name,
            kind="threshold",
            threshold=float(threshold),
            surrogate=ROUTE_MAJORITY,
            majority_side="left" if b >= n - b else "right",
        )
        yield rule, x <= threshold


def _categorical_cuts(values, y, spec, minsplit, scores=None):
    codes = np.asarray(values, dtype=np.int64)
    n = len(codes)
    n_l = np.bincount(codes, minlength=len(spec.levels))
    observed = np.flatnonzero(n_l)
    if observed.size < 2:
        return
    if scores is not None:
        coord = _score_coordinates(scores, codes, observed, n_l)
    else:
        n1_l = np.bincount(codes, weights=np.asarray(y, dtype=np.float64),
                           minlength=len(spec.levels))
        coord = n1_l[observed] / n_l[observed]
    order = observed[np.lexsort((observed, coord))]
    names = [spec.levels[c] for c in order]
    sizes = np.cumsum(n_l[order])
    for size in range(1, len(order)):
        if sizes[size - 1] < minsplit or n - sizes[size - 1] < minsplit:
            continue
        left = tuple(names[:size])
        rule = SplitRule(
            variable=spec.name,
            kind="subset",
            left_levels=left,
            right_levels=tuple(names[size:]),
            surrogate=ROUTE_MAJORITY,
            majority_side="left" if sizes[size - 1] >= n - sizes[size - 1] else "right",
        )
        yield rule, np.isin(codes, order[:size])


def _score_coordinates(scores, codes, observed, n_l):
    """Leading principal coordinate of the per-level mean score vectors.

    The sign is fixed by the largest-magnitude component so the level
    ordering is deterministic.
    """
    means = np.vstack([scores[codes == c].mean(axis=0) for c in observed])
    weights = n_l[observed].astype(np.float64)
    m = (means * weights[:, None]).T @ means
    eigvals, eigvecs = np.linalg.eigh(m)
    direction = eigvecs[:, -1]
    anchor = np.argmax(np.abs(direction))
    if direction[anchor] < 0:
        direction = -direction
    return means @ direction


def fit_mob(ds, spec, mp=MobMetaparams()):
    """Grow a logistic model tree for a ``y ~ x | z`` model."""
    if not spec.has_regressors:
        raise ValueError("model trees need regressors; use a classification tree")
    if ds.n_rows == 0:
        raise ValueError("empty dataset")
    views = select_roles(ds, spec)
    design = design_for_columns(views.x_columns)
    X = design.matrix(ds)
    y = np.asarray(ds.response_values(), dtype=np.int8)
    p1 = design.n_columns
    if mp.minsplit < 10 * p1:
        raise ValueError(
            f"minsplit {mp.minsplit} too small to estimate {p1} coefficients "
            f"(need at least {10 * p1})"
        )
    z_specs = views.z_columns
    z_values = {c.name: ds.values(c.name) for c in z_specs}

    nodes = {}
    counter = [0]

    def grow(rows, depth, warm):
        counter[0] += 1
        node_id = counter[0]
        model = fit_logit(
            X[rows], y[rows], coef_names=design.names, design=design, start=warm
        )
        node = TreeNode(
            node_id=node_id,
            depth=depth,
            n=len(rows),
            prevalence=float(y[rows].mean()),
            model=model,
            train_rows=np.asarray(rows),
        )
        nodes[node_id] = node
        if model.separation != SEPARATION_NONE:
            node.stop_reason = "separation"
            return node_id
        if not model.converged:
            node.stop_reason = "unstable_fit"
            return node_id
        if mp.max_depth is not None and depth >= mp.max_depth:
            node.stop_reason = "max_depth"
            return node_id
        if len(rows) < 2 * mp.minsplit:
            node.stop_reason = "minsplit"
            return node_id
        scores = score_contributions(model, X[rows], y[rows])
        results = [
            stability_test(scores, z_values[c.name][rows], c, trim=mp.trim)
            for c in z_specs
        ]
        tested = [
            (i, r) for i, r in enumerate(results)
            if not (r.p_value >= 1.0 and r.statistic == 0.0)
        ]
        if not tested:
            node.stop_reason = "no_variation"
            return node_id
        m = len(tested)
        best_i, best = min(tested, key=lambda ir: (ir[1].p_value, ir[0]))
        if min(1.0, m * best.p_value) > mp.alpha:
            node.stop_reason = "alpha"
            return node_id
        col = z_specs[best_i]
        warm_next = _full_coefficients(model, p1)
        cut = best_cutpoint(
            X[rows],
            y[rows],
            z_values[col.name][rows],
            col,
            mp.minsplit,
            max_cutpoints=mp.max_cutpoints,
            warm=warm_next,
            scores=scores,
        )
        if cut is None:
            node.stop_reason = "no_cutpoint"
            return node_id
        node.split = cut.rule
        node.split_info = {
            "variable": best.variable,
            "statistic": best.statistic,
            "p_value": best.p_value,
            "adjusted_p": min(1.0, m * best.p_value),
            "test": best.kind,
        }
        node.model = None
        node.train_rows = None
        node.left = grow(rows[cut.left_mask], depth + 1, warm_next)
        node.right = grow(rows[~cut.left_mask], depth + 1, warm_next)
        return node_id

    grow(np.arange(ds.n_rows), 0, None)
    return LoretTree(
        nodes=nodes,
        design=design,
        formula=spec.unparse(),
        strategy="mob",
        fit_meta={
            "alpha": mp.alpha,
            "minsplit": mp.minsplit,
            "max_depth": mp.max_depth,
            "trim": mp.trim,
            "max_cutpoints": mp.max_cutpoints,
        },
    )


def _full_coefficients(model, p1):
    full = np.zeros(p1)
    full[list(model.kept_idx)] = model.coefficients
    return full


def predict(tree, ds, rows=None):
    """Per-row probability from the routed terminal's node model."""
    return tree.predict_proba(ds, rows=rows)


def terminal_report(tree, schema, square_columns=(), square_scale=100.0):
    """One block per terminal node: path conditions over the partitioning
    variables, then coefficient (upper) and standard-error (lower) rows
    per regressor. Squared-term columns are scaled for readability and
    marked in the header."""
    split_vars = []
    for node in tree.nodes.values():
        if node.split and node.split.variable not in split_vars:
            split_vars.append(node.split.variable)
    coef_names = tree.design.names
    scaled = {
        name: (square_scale if name in square_columns else 1.0)
        for name in coef_names
    }
    header = ["segment"] + split_vars + [
        f"{n}*{square_scale:g}" if scaled[n] != 1.0 else n for n in coef_names
    ]
    rows = []
    for node_id in tree.terminal_ids():
        node = tree.nodes[node_id]
        conditions = _conditions_by_variable(tree, node_id)
        model = node.model
        coef = {}
        se = {}
        for name, b, s in zip(model.coef_names, model.coefficients, model.std_errors):
            coef[name] = b * scaled[name]
            se[name] = s * scaled[name]
        upper = [str(node_id)] + [conditions.get(v, "--") for v in split_vars]
        lower = [""] + ["" for _ in split_vars]
        for name in coef_names:
            if name in coef:
                upper.append(_fmt(coef[name]))
                lower.append(f"({_fmt(se[name])})" if np.isfinite(se[name]) else "(--.--)")
            else:
                upper.append("alias")
                lower.append("(--.--)")
        rows.append(upper)
        rows.append(lower)
    widths = [max(len(r[i]) for r in rows + [header]) for i in range(len(header))]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths))]
    for r in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)))
    return "\n".join(lines)


def _conditions_by_variable(tree, node_id):
    by_var = {}
    rev = {}
    for nid, node in tree.nodes.items():
        if not node.is_terminal:
            rev[node.left] = (nid, "left")
            rev[node.right] = (nid, "right")
    chain = []
    cur = node_id
    while cur in rev:
        parent, side = rev[cur]
        chain.append((tree.nodes[parent].split, side))
        cur = parent
    out = {}
    for split, side in reversed(chain):
        if split.kind == "threshold":
            op = "<=" if side == "left" else ">"
            text = f"{op} {split.threshold:g}"
            prev = out.get(split.variable)
            out[split.variable] = f"{prev}, {text}" if prev else text
        else:
            levels = split.left_levels if side == "left" else split.right_levels
            prev = out.get(split.variable)
            chosen = set(levels) if prev is None else (
                set(prev.split(", ")) & set(levels)
            )
            out[split.variable] = ", ".join(
                sorted(chosen, key=lambda l: levels.index(l) if l in levels else 0)
            )
    return out


def _fmt(x):
    if np.isposinf(x):
        return "Inf"
    if np.isneginf(x):
        return "-Inf"
    if x != x:
        return "--.--"
    return f"{x:.3f}"
