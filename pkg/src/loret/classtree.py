"""Classification-tree induction for partition-only models.

Two split-selection strategies are provided:

* ``cart``: exhaustive search maximizing the weighted Gini impurity
  decrease over all variables, all midpoint thresholds (ordered
  variables) and all level subsets (categorical variables, searched
  linearly over prevalence-ordered prefixes).
* ``ctree``: unbiased two-stage selection. Stage one runs one
  association test per candidate variable (Pearson chi-square for
  categorical, a permutation-moment standardized two-sample statistic
  for ordered variables) and applies a Bonferroni-adjusted gate at level
  ``alpha``; stage two picks the binary split of the selected variable
  maximizing the standardized two-sample statistic.

Ties are broken deterministically: lowest candidate-variable index
first, then smallest threshold / smallest level subset.

Terminal nodes carry intercept-only logistic models, so a terminal's
prediction is exactly its training prevalence.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import stats

from .design import DesignInfo
from .formula import select_roles
from .logit import fit_logit
from .tree import ROUTE_MAJORITY, LoretTree, SplitRule, TreeNode

STRATEGIES = ("cart", "ctree")


@dataclass(frozen=True)
class TreeMetaparams:
    """Pre-pruning controls.

    ``max_depth`` of None means unbounded; a root-only tree has depth 0.
    ``alpha`` is only consulted by the ctree strategy. The minimum leaf
    size is ``floor(minsplit / 3)`` so a node at the minsplit boundary
    can still be split.
    """

    max_depth: int | None = 7
    minsplit: int = 100
    alpha: float = 1e-6
    strategy: str = "cart"
    mc_permutations: int = 0

    def __post_init__(self):
        if self.strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {self.strategy!r}")
        if not 0.0 < self.alpha <= 1.0:
            raise ValueError("alpha must lie in (0, 1]")
        if self.minsplit < 2:
            raise ValueError("minsplit must be at least 2")
        if self.max_depth is not None and self.max_depth < 0:
            raise ValueError("max_depth must be non-negative")

    @property
    def min_leaf(self):
        return max(1, self.minsplit // 3)


def gini(count1, count0):
    """Binary Gini impurity 2p(1-p) from the two class counts."""
    if count1 < 0 or count0 < 0:
        raise ValueError("counts must be non-negative")
    n = count1 + count0
    if n == 0:
        raise ValueError("both counts are zero")
    p = count1 / n
    return 2.0 * p * (1.0 - p)


@dataclass(frozen=True)
class SplitCandidate:
    rule: SplitRule
    quality: float  # impurity decrease (cart) or |standardized stat| (ctree)


def best_split_cart(candidates, y, min_leaf):
    """Best Gini-decrease split over ``candidates``.

    ``candidates`` is a sequence of (ColumnSpec, values) pairs in
    tie-break order. Returns a SplitCandidate or None when no admissible
    split has a strictly positive decrease.
    """
    y = np.asarray(y, dtype=np.int64)
    n = len(y)
    n1 = int(y.sum())
    g0 = gini(n1, n - n1)
    best = None
    for spec, values in candidates:
        if spec.kind == "categorical":
            found = _best_subset_gini(spec, values, y, g0, min_leaf)
        else:
            found = _best_threshold_gini(spec, values, y, g0, min_leaf)
        if found is not None and (best is None or found.quality > best.quality):
            best = found
    return best


def _best_threshold_gini(spec, values, y, g0, min_leaf):
    x = np.asarray(values, dtype=np.float64)
    order = np.argsort(x, kind="stable")
    xs, ys = x[order], y[order]
    n = len(ys)
    total1 = int(ys.sum())
    cum1 = np.cumsum(ys)
    boundaries = np.flatnonzero(xs[1:] > xs[:-1]) + 1
    boundaries = boundaries[
        (boundaries >= min_leaf) & (n - boundaries >= min_leaf)
    ]
    if boundaries.size == 0:
        return None
    n_left = boundaries.astype(np.float64)
    n_right = n - n_left
    left1 = cum1[boundaries - 1].astype(np.float64)
    right1 = total1 - left1
    decrease = g0 - _children_impurity(left1, n_left, right1, n_right) / n
    j = int(np.argmax(decrease))
    if decrease[j] <= 0.0:
        return None
    b = boundaries[j]
    threshold = 0.5 * (xs[b - 1] + xs[b])
    rule = SplitRule(
        variable=spec.name,
        kind="threshold",
        threshold=float(threshold),
        surrogate=ROUTE_MAJORITY,
        majority_side="left" if n_left[j] >= n_right[j] else "right",
    )
    return SplitCandidate(rule, float(decrease[j]))


def _best_subset_gini(spec, values, y, g0, min_leaf):
    stats_ = _level_stats(spec, values, y)
    if stats_ is None:
        return None
    level_names, n_l, n1_l = stats_
    n = len(y)
    total1 = int(y.sum())
    cum_n = np.cumsum(n_l)[:-1].astype(np.float64)
    cum_1 = np.cumsum(n1_l)[:-1].astype(np.float64)
    admissible = (cum_n >= min_leaf) & (n - cum_n >= min_leaf)
    if not np.any(admissible):
        return None
    decrease = np.where(
        admissible,
        g0 - _children_impurity(cum_1, cum_n, total1 - cum_1, n - cum_n) / n,
        -np.inf,
    )
    j = int(np.argmax(decrease))
    if decrease[j] <= 0.0:
        return None
    rule = _subset_rule(spec, level_names, j + 1, cum_n[j], n - cum_n[j])
    return SplitCandidate(rule, float(decrease[j]))


def _children_impurity(left1, n_left, right1, n_right):
    # n_left * gini_left + n_right * gini_right, vectorized
    pl = left1 / n_left
    pr = right1 / n_right
    return n_left * 2.0 * pl * (1.0 - pl) + n_right * 2.0 * pr * (1.0 - pr)


def _level_stats(spec, values, y):
    """Observed levels ordered by class-1 prevalence (ties by level code)."""
    codes = np.asarray(values, dtype=np.int64)
    n_l = np.bincount(codes, minlength=len(spec.levels)).astype(np.int64)
    n1_l = np.bincount(codes, weights=y, minlength=len(spec.levels))
    observed = np.flatnonzero(n_l)
    if observed.size < 2:
        return None
    prevalence = n1_l[observed] / n_l[observed]
    order = observed[np.lexsort((observed, prevalence))]
    names = tuple(spec.levels[k] for k in order)
    return names, n_l[order], n1_l[order]


def _subset_rule(spec, level_names, size, n_left, n_right):
    return SplitRule(
        variable=spec.name,
        kind="subset",
        left_levels=tuple(level_names[:size]),
        right_levels=tuple(level_names[size:]),
        surrogate=ROUTE_MAJORITY,
        majority_side="left" if n_left >= n_right else "right",
    )


# --- ctree-style selection ----------------------------------------------------


def association_pvalue(spec, values, y):
    """Marginal test of y against one candidate variable.

    Returns (statistic, p_value); degenerate variables get (0, 1).
    Ordered variables use the standardized linear statistic sum(z*y)
    with its permutation moments; categorical variables use Pearson's
    chi-square over observed levels.
    """
    y = np.asarray(y, dtype=np.float64)
    n = len(y)
    if spec.kind == "categorical":
        codes = np.asarray(values, dtype=np.int64)
        n_l = np.bincount(codes, minlength=len(spec.levels))
        observed = np.flatnonzero(n_l)
        if observed.size < 2 or len(np.unique(y)) < 2:
            return 0.0, 1.0
        table = np.zeros((2, observed.size))
        for col, k in enumerate(observed):
            mask = codes == k
            table[1, col] = y[mask].sum()
            table[0, col] = mask.sum() - table[1, col]
        stat, p, _, _ = stats.chi2_contingency(table, correction=False)
        return float(stat), float(p)
    z = np.asarray(values, dtype=np.float64)
    stat = _standardized_linear(z, y)
    if stat is None:
        return 0.0, 1.0
    return float(abs(stat)), float(2.0 * stats.norm.sf(abs(stat)))


def _standardized_linear(z, y):
    """(sum(z*y) - E) / sd under permutations of y; None if degenerate."""
    n = len(y)
    var_z = np.var(z)
    n1 = y.sum()
    var_y_term = n1 * (n - n1) / (n - 1) if n > 1 else 0.0
    var = var_z * var_y_term
    if var <= 0.0:
        return None
    return (z @ y - n1 * z.mean()) / np.sqrt(var)


def best_split_ctree(candidates, y, alpha, min_leaf, mc_permutations=0, seed=0):
    """Two-stage unbiased split selection; None when the gate holds."""
    y = np.asarray(y, dtype=np.float64)
    tests = []
    for idx, (spec, values) in enumerate(candidates):
        stat, p = association_pvalue(spec, values, y)
        if p < 1.0 or stat > 0.0:
            tests.append((idx, stat, p))
    if not tests:
        return None
    if mc_permutations > 0:
        tests = _permutation_pvalues(candidates, y, tests, mc_permutations, seed)
    m = len(tests)
    idx, stat, p_min = min(tests, key=lambda t: (t[2], t[0]))
    if min(1.0, m * p_min) > alpha:
        return None
    spec, values = candidates[idx]
    if spec.kind == "categorical":
        return _best_subset_twosample(spec, values, y, min_leaf)
    return _best_threshold_twosample(spec, values, y, min_leaf)


def _permutation_pvalues(candidates, y, tests, B, seed):
    rng = np.random.default_rng(seed)
    perms = [rng.permutation(y) for _ in range(B)]
    out = []
    for idx, stat, _ in tests:
        spec, values = candidates[idx]
        hits = sum(
            1
            for yp in perms
            if association_pvalue(spec, values, yp)[0] >= stat
        )
        out.append((idx, stat, (1.0 + hits) / (B + 1.0)))
    return out


def _best_threshold_twosample(spec, values, y, min_leaf):
    x = np.asarray(values, dtype=np.float64)
    order = np.argsort(x, kind="stable")
    xs, ys = x[order], y[order]
    n = len(ys)
    boundaries = np.flatnonzero(xs[1:] > xs[:-1]) + 1
    boundaries = boundaries[
        (boundaries >= min_leaf) & (n - boundaries >= min_leaf)
    ]
    if boundaries.size == 0:
        return None
    stat = _cut_statistics(ys, boundaries)
    j = int(np.argmax(stat))
    if not stat[j] > 0.0:
        return None
    b = boundaries[j]
    rule = SplitRule(
        variable=spec.name,
        kind="threshold",
        threshold=float(0.5 * (xs[b - 1] + xs[b])),
        surrogate=ROUTE_MAJORITY,
        majority_side="left" if b >= n - b else "right",
    )
    return SplitCandidate(rule, float(stat[j]))


def _best_subset_twosample(spec, values, y, min_leaf):
    stats_ = _level_stats(spec, values, y)
    if stats_ is None:
        return None
    level_names, n_l, n1_l = stats_
    n = len(y)
    sizes = np.cumsum(n_l)[:-1]
    admissible = (sizes >= min_leaf) & (n - sizes >= min_leaf)
    if not np.any(admissible):
        return None
    # statistic for "left = prefix" computed from the ordered level counts
    var_y = np.var(y)
    scale = var_y * sizes * (n - sizes) / ((n - 1) * n) * n
    left1 = np.cumsum(n1_l)[:-1]
    expected = sizes * y.mean()
    with np.errstate(divide="ignore", invalid="ignore"):
        stat = np.where(
            admissible & (scale > 0), np.abs(left1 - expected) / np.sqrt(scale), -np.inf
        )
    j = int(np.argmax(stat))
    if not stat[j] > 0.0:
        return None
    rule = _subset_rule(spec, level_names, j + 1, sizes[j], n - sizes[j])
    return SplitCandidate(rule, float(stat[j]))


def _cut_statistics(ys_sorted, boundaries):
    n = len(ys_sorted)
    cum = np.cumsum(ys_sorted)
    n_left = boundaries.astype(np.float64)
    t = cum[boundaries - 1]
    expected = n_left * ys_sorted.mean()
    var = np.var(ys_sorted) * n_left * (n - n_left) / (n - 1)
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(var > 0, np.abs(t - expected) / np.sqrt(var), 0.0)


# --- induction ----------------------------------------------------------------


def fit_tree(ds, spec, mp=TreeMetaparams()):
    """Grow a classification tree for a ``y ~ 1 | z`` model."""
    views = select_roles(ds, spec)
    if spec.has_regressors:
        raise ValueError("classification trees take no regressors; use a model tree")
    if not views.z_columns:
        raise ValueError(
            "no partitioning variables: fit the intercept-only model directly"
        )
    if ds.n_rows == 0:
        raise ValueError("empty dataset")
    y = np.asarray(ds.response_values(), dtype=np.int8)
    z_specs = views.z_columns
    z_values = {c.name: ds.values(c.name) for c in z_specs}
    design = DesignInfo(())

    nodes = {}
    counter = [0]

    def chooser(rows):
        candidates = [(c, z_values[c.name][rows]) for c in z_specs]
        if mp.strategy == "cart":
            return best_split_cart(candidates, y[rows], mp.min_leaf)
        return best_split_ctree(
            candidates,
            y[rows],
            mp.alpha,
            mp.min_leaf,
            mc_permutations=mp.mc_permutations,
        )

    def grow(rows, depth):
        counter[0] += 1
        node_id = counter[0]
        yr = y[rows]
        node = TreeNode(
            node_id=node_id,
            depth=depth,
            n=len(rows),
            prevalence=float(yr.mean()),
        )
        nodes[node_id] = node
        found = None
        if mp.max_depth is not None and depth >= mp.max_depth:
            node.stop_reason = "max_depth"
        elif len(rows) < mp.minsplit:
            node.stop_reason = "minsplit"
        else:
            found = chooser(rows)
            if found is None:
                node.stop_reason = "no_split"
        if found is None:
            node.model = fit_logit(
                np.ones((len(rows), 1)), yr, coef_names=("(Intercept)",)
            )
            node.train_rows = np.asarray(rows)
            return node_id
        rule = found.rule
        col = ds.schema.column(rule.variable)
        levels = list(col.levels) if col.kind == "categorical" else None
        left_mask = rule.goes_left_values(z_values[rule.variable][rows], levels)
        node.split = rule
        node.split_info = {"variable": rule.variable, "quality": found.quality}
        node.left = grow(rows[left_mask], depth + 1)
        node.right = grow(rows[~left_mask], depth + 1)
        return node_id

    grow(np.arange(ds.n_rows), 0)
    return LoretTree(
        nodes=nodes,
        design=design,
        formula=spec.unparse(),
        strategy=mp.strategy,
        fit_meta={
            "max_depth": mp.max_depth,
            "minsplit": mp.minsplit,
            "alpha": mp.alpha,
            "min_leaf": mp.min_leaf,
        },
    )
