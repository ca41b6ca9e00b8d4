"""Bootstrap out-of-bag benchmarking of competing model specifications.

Each fold draws an in-bag sample of size N with replacement; the rows
absent from it form the out-of-bag test set. Every candidate model is
fitted per fold on the in-bag rows and evaluated on the out-of-bag rows
(accuracy at a fixed cutoff, AUC via the Wilcoxon rank statistic), and
once on the full sample for the in-sample columns. Mean accuracies are
compared across models with simultaneous all-pairwise confidence
intervals, centering accuracies per fold first to absorb the shared
fold effect.
"""

from __future__ import annotations

import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy import stats

from .dataset import format_float


@dataclass(frozen=True)
class FoldPlan:
    """Reproducible bootstrap folds: per-fold in-bag multiset and
    out-of-bag complement."""

    n: int
    in_bag: tuple[np.ndarray, ...]
    oob: tuple[np.ndarray, ...]
    master_seed: int

    @property
    def n_folds(self):
        return len(self.in_bag)


def make_folds(n, n_folds=10, seed=0):
    """Draw ``n_folds`` independent bootstrap folds of size ``n``.

    A fold whose out-of-bag set comes up empty is redrawn once, then
    reported as an error.
    """
    if n < 1 or n_folds < 1:
        raise ValueError("need n >= 1 and n_folds >= 1")
    root = np.random.SeedSequence(seed)
    in_bag = []
    oob = []
    for child in root.spawn(n_folds):
        rng = np.random.default_rng(child)
        for attempt in range(2):
            bag = np.sort(rng.integers(0, n, size=n))
            out = np.setdiff1d(np.arange(n), bag, assume_unique=False)
            if out.size:
                break
        else:
            raise ValueError("out-of-bag set empty after one redraw")
        in_bag.append(bag)
        oob.append(out)
    return FoldPlan(n=n, in_bag=tuple(in_bag), oob=tuple(oob), master_seed=seed)


def accuracy(predictions, labels):
    """Fraction of agreeing entries."""
    p = np.asarray(predictions)
    t = np.asarray(labels)
    if p.shape != t.shape:
        raise ValueError("length mismatch")
    if p.size == 0:
        raise ValueError("empty vectors")
    return float(np.mean(p == t))


def auc_wilcoxon(scores, labels):
    """Area under the ROC curve by the rank-sum statistic.

    Tied scores get half credit, so a constant scorer yields exactly
    0.5. Raises on single-class labels.
    """
    s = np.asarray(scores, dtype=np.float64)
    y = np.asarray(labels)
    n1 = int(np.sum(y == 1))
    n0 = int(np.sum(y == 0))
    if n1 == 0 or n0 == 0:
        raise ValueError("AUC undefined: need both classes present")
    ranks = stats.rankdata(s)
    return float((ranks[y == 1].sum() - n1 * (n1 + 1) / 2.0) / (n1 * n0))


@dataclass(frozen=True)
class RocCurve:
    """Operating points over a decreasing-specificity sweep.

    ``thresholds`` are descending; a score is called positive when it
    is >= the threshold, so the curve runs from (0, 0) up to (1, 1).
    """

    thresholds: np.ndarray
    fpr: np.ndarray
    tpr: np.ndarray

    def __post_init__(self):
        for arr in (self.fpr, self.tpr):
            if np.any(arr < -1e-12) or np.any(arr > 1 + 1e-12):
                raise ValueError("rates must lie in [0, 1]")
            if np.any(np.diff(arr) < -1e-12):
                raise ValueError("curve must be monotone along the sweep")

    def area(self):
        trapezoid = getattr(np, "trapezoid", None) or np.trapz
        return float(trapezoid(self.tpr, self.fpr))


def roc_curve(scores, labels, thresholds=None):
    """ROC points at the given descending thresholds.

    Without an explicit grid the full-resolution curve over the unique
    scores is returned (anchored at (0,0) by a leading +inf threshold);
    its trapezoid area equals the Wilcoxon AUC.
    """
    s = np.asarray(scores, dtype=np.float64)
    y = np.asarray(labels)
    n1 = int(np.sum(y == 1))
    n0 = int(np.sum(y == 0))
    if n1 == 0 or n0 == 0:
        raise ValueError("ROC undefined: need both classes present")
    if thresholds is None:
        thresholds = np.concatenate(([np.inf], np.unique(s)[::-1]))
    else:
        thresholds = np.asarray(thresholds, dtype=np.float64)
        if thresholds.size == 0:
            raise ValueError("empty threshold grid")
        if np.any(np.diff(thresholds) > 0):
            raise ValueError("thresholds must be descending")
    pos = np.sort(s[y == 1])
    neg = np.sort(s[y == 0])
    # count of scores >= t per class
    tp = n1 - np.searchsorted(pos, thresholds, side="left")
    fp = n0 - np.searchsorted(neg, thresholds, side="left")
    return RocCurve(thresholds, fp / n0, tp / n1)


def default_threshold_grid(n_points=201):
    """Common grid for threshold averaging: descending over [0, 1] with
    a leading +inf anchor so averaged curves start at (0, 0)."""
    return np.concatenate(([np.inf], np.linspace(1.0, 0.0, n_points)))


def threshold_average(curves):
    """Pointwise mean of fold curves sharing one threshold grid."""
    if not curves:
        raise ValueError("no curves to average")
    t0 = curves[0].thresholds
    for c in curves[1:]:
        if len(c.thresholds) != len(t0) or not np.all(
            (c.thresholds == t0) | (np.isinf(c.thresholds) & np.isinf(t0))
        ):
            raise ValueError("threshold averaging needs a common grid")
    fpr = np.mean([c.fpr for c in curves], axis=0)
    tpr = np.mean([c.tpr for c in curves], axis=0)
    return RocCurve(t0.copy(), fpr, tpr)


@dataclass(frozen=True)
class PairwiseCI:
    """Simultaneous confidence intervals for all pairwise mean
    differences of fold-centered metrics."""

    pairs: tuple[tuple[int, int], ...]
    estimates: np.ndarray
    lower: np.ndarray
    upper: np.ndarray
    level: float
    critical: float
    degenerate: bool


def pairwise_ci(metric_matrix, level=0.95, draws=100_000, seed=0):
    """All-pairwise mean-difference intervals controlling the FWER.

    ``metric_matrix`` has shape (models, folds). Fold means are
    subtracted from each column before estimating the fold-to-fold
    covariance (the folds are shared across models). The simultaneous
    critical value is the ``level`` quantile of max |t| over the
    contrast family, estimated by Monte Carlo from the fitted
    multivariate t with folds-1 degrees of freedom; at two models this
    reproduces the paired t interval.
    """
    a = np.asarray(metric_matrix, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] < 2 or a.shape[1] < 2:
        raise ValueError("need at least 2 models and 2 folds")
    m, f = a.shape
    centered = a - a.mean(axis=0, keepdims=True)
    cov = np.cov(centered, ddof=1) / f  # covariance of the model means
    pairs = [(i, j) for i in range(m) for j in range(i + 1, m)]
    contrasts = np.zeros((len(pairs), m))
    for row, (i, j) in enumerate(pairs):
        contrasts[row, i] = 1.0
        contrasts[row, j] = -1.0
    estimates = contrasts @ centered.mean(axis=1)
    ccov = contrasts @ cov @ contrasts.T
    se = np.sqrt(np.maximum(np.diag(ccov), 0.0))
    if np.all(se == 0.0):
        return PairwiseCI(
            pairs=tuple(pairs),
            estimates=estimates,
            lower=estimates.copy(),
            upper=estimates.copy(),
            level=level,
            critical=0.0,
            degenerate=True,
        )
    live = se > 0.0
    corr = np.eye(len(pairs))
    corr[np.ix_(live, live)] = ccov[np.ix_(live, live)] / np.outer(
        se[live], se[live]
    )
    w, v = np.linalg.eigh(corr[np.ix_(live, live)])
    root = v * np.sqrt(np.maximum(w, 0.0))
    rng = np.random.default_rng(seed)
    z = rng.standard_normal((draws, root.shape[1])) @ root.T
    chi = rng.chisquare(f - 1, size=draws) / (f - 1)
    maxt = np.max(np.abs(z), axis=1) / np.sqrt(chi)
    critical = float(np.quantile(maxt, level))
    half = critical * se
    return PairwiseCI(
        pairs=tuple(pairs),
        estimates=estimates,
        lower=estimates - half,
        upper=estimates + half,
        level=level,
        critical=critical,
        degenerate=False,
    )


# --- benchmark driver ---------------------------------------------------------


@dataclass
class ModelBenchRow:
    """Per-model fold metrics and full-sample summary."""

    name: str
    acc_folds: np.ndarray
    auc_folds: np.ndarray
    r_folds: np.ndarray
    p_plus_1: int
    acc_full: float
    auc_full: float
    r_full: int
    p_plus_1_full: int
    fold_errors: tuple[str, ...] = ()
    mean_curve: RocCurve | None = None
    cutoff_grid: np.ndarray | None = None
    cutoff_accuracy: np.ndarray | None = None

    @property
    def acc_mean(self):
        return float(np.nanmean(self.acc_folds))

    @property
    def acc_se(self):
        vals = self.acc_folds[~np.isnan(self.acc_folds)]
        if len(vals) < 2:
            return float("nan")
        return float(np.std(vals, ddof=1) / np.sqrt(len(vals)))

    @property
    def auc_mean(self):
        return float(np.nanmean(self.auc_folds))

    @property
    def r_median(self):
        return float(np.nanmedian(self.r_folds))


@dataclass
class BenchResult:
    rows: list[ModelBenchRow]
    plan: FoldPlan
    cutoff: float
    acc_ci: PairwiseCI | None = None
    auc_ci: PairwiseCI | None = None
    model_names: tuple[str, ...] = field(default_factory=tuple)


def _fit_eval_fold(args):
    builder, ds, bag, out, cutoff, grid, cut_grid = args
    est = builder()
    est.fit(ds.take(bag))
    probs = est.predict_proba(ds.take(out))
    labels = np.asarray(ds.response_values())[out]
    acc = accuracy((probs >= cutoff).astype(np.int8), labels)
    auc = auc_wilcoxon(probs, labels)
    curve = roc_curve(probs, labels, grid)
    cut_acc = np.array(
        [accuracy((probs >= c).astype(np.int8), labels) for c in cut_grid]
    )
    return acc, auc, est.n_segments_, curve, cut_acc


def run_benchmark(ds, builders, plan, cutoff=0.5, jobs=1, ci_level=0.95,
                  ci_draws=100_000):
    """Fit and score every model on every fold plus the full sample.

    ``builders`` maps display name -> zero-argument estimator factory.
    A failing fold is recorded and excluded from that model's means with
    a warning rather than aborting the run. Results are independent of
    ``jobs``.
    """
    names = list(builders)
    grid = default_threshold_grid()
    cut_grid = np.linspace(0.0, 1.0, 201)
    tasks = []
    for name in names:
        for k in range(plan.n_folds):
            tasks.append(
                (builders[name], ds, plan.in_bag[k], plan.oob[k], cutoff, grid,
                 cut_grid)
            )
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_eval_quiet, tasks))
    else:
        outcomes = [_eval_quiet(t) for t in tasks]

    rows = []
    labels_full = np.asarray(ds.response_values())
    for mi, name in enumerate(names):
        acc = np.full(plan.n_folds, np.nan)
        auc = np.full(plan.n_folds, np.nan)
        r = np.full(plan.n_folds, np.nan)
        curves = []
        cut_accs = []
        errors = []
        for k in range(plan.n_folds):
            outcome = outcomes[mi * plan.n_folds + k]
            if isinstance(outcome, str):
                errors.append(f"fold {k}: {outcome}")
                continue
            acc[k], auc[k], r[k], curve, cut_acc = outcome
            curves.append(curve)
            cut_accs.append(cut_acc)
        if errors:
            warnings.warn(
                f"{name}: {len(errors)} fold(s) failed and were excluded",
                RuntimeWarning,
                stacklevel=2,
            )
        try:
            est = builders[name]()
            est.fit(ds)
            probs = est.predict_proba(ds)
            acc_full = accuracy((probs >= cutoff).astype(np.int8), labels_full)
            auc_full = auc_wilcoxon(probs, labels_full)
            r_full = est.n_segments_
            p_plus_1 = est.n_params_
        except Exception as exc:  # noqa: BLE001
            errors.append(f"full sample: {type(exc).__name__}: {exc}")
            warnings.warn(
                f"{name}: full-sample fit failed", RuntimeWarning, stacklevel=2
            )
            acc_full = auc_full = float("nan")
            r_full = p_plus_1 = 0
        rows.append(
            ModelBenchRow(
                name=name,
                acc_folds=acc,
                auc_folds=auc,
                r_folds=r,
                p_plus_1=p_plus_1,
                acc_full=acc_full,
                auc_full=auc_full,
                r_full=r_full,
                p_plus_1_full=p_plus_1,
                fold_errors=tuple(errors),
                mean_curve=threshold_average(curves) if curves else None,
                cutoff_grid=cut_grid,
                cutoff_accuracy=np.mean(cut_accs, axis=0) if cut_accs else None,
            )
        )

    result = BenchResult(
        rows=rows, plan=plan, cutoff=cutoff, model_names=tuple(names)
    )
    complete = [
        row for row in rows if not np.any(np.isnan(row.acc_folds))
    ]
    if len(complete) >= 2:
        acc_matrix = np.vstack([row.acc_folds for row in complete])
        auc_matrix = np.vstack([row.auc_folds for row in complete])
        result.acc_ci = pairwise_ci(
            acc_matrix, level=ci_level, draws=ci_draws, seed=plan.master_seed
        )
        result.auc_ci = pairwise_ci(
            auc_matrix, level=ci_level, draws=ci_draws, seed=plan.master_seed + 1
        )
        result.model_names = tuple(row.name for row in complete)
    return result


def _eval_quiet(task):
    try:
        return _fit_eval_fold(task)
    except Exception as exc:  # noqa: BLE001 - fold failures are data, not bugs
        return f"{type(exc).__name__}: {exc}"


# --- reports ------------------------------------------------------------------

_COLUMNS = (
    "model", "acc_mean", "se_acc", "auc_mean", "p+1", "r_median",
    "acc_full", "auc_full", "p0+1", "r_full",
)


def report_rows(result):
    out = []
    for row in result.rows:
        out.append(
            (
                row.name,
                f"{row.acc_mean:.3f}",
                f"{row.acc_se:.3f}",
                f"{row.auc_mean:.3f}",
                str(row.p_plus_1),
                f"{row.r_median:.1f}",
                f"{row.acc_full:.3f}",
                f"{row.auc_full:.3f}",
                str(row.p_plus_1_full),
                str(row.r_full),
            )
        )
    return out


def report_text(result):
    rows = report_rows(result)
    widths = [
        max(len(_COLUMNS[i]), max((len(r[i]) for r in rows), default=0))
        for i in range(len(_COLUMNS))
    ]
    lines = ["  ".join(c.ljust(w) for c, w in zip(_COLUMNS, widths))]
    for r in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)))
    for row in result.rows:
        for err in row.fold_errors:
            lines.append(f"# {row.name} {err}")
    return "\n".join(lines)


def report_csv(result):
    lines = [",".join(_COLUMNS)]
    for r in report_rows(result):
        lines.append(",".join(r))
    return "\n".join(lines)


def roc_csv(result):
    lines = ["model,threshold,fpr,tpr"]
    for row in result.rows:
        if row.mean_curve is None:
            continue
        for t, fp, tp in zip(
            row.mean_curve.thresholds, row.mean_curve.fpr, row.mean_curve.tpr
        ):
            t_text = "inf" if np.isinf(t) else format_float(float(t))
            lines.append(
                f"{row.name},{t_text},{format_float(float(fp))},{format_float(float(tp))}"
            )
    return "\n".join(lines)


def cutoff_accuracy_csv(result):
    lines = ["model,cutoff,accuracy"]
    for row in result.rows:
        if row.cutoff_accuracy is None:
            continue
        for c, a in zip(row.cutoff_grid, row.cutoff_accuracy):
            lines.append(
                f"{row.name},{format_float(float(c))},{format_float(float(a))}"
            )
    return "\n".join(lines)


def ci_text(ci, names, metric):
    lines = [
        f"simultaneous {ci.level:.0%} intervals for pairwise mean {metric} "
        f"differences (critical |t| = {ci.critical:.3f})"
    ]
    if ci.degenerate:
        lines.append("# all contrasts have zero variance; intervals are degenerate")
    for (i, j), est, lo, hi in zip(ci.pairs, ci.estimates, ci.lower, ci.upper):
        tag = "" if lo <= 0.0 <= hi else "  *"
        lines.append(
            f"{names[i]} - {names[j]}: {est:+.4f}  [{lo:+.4f}, {hi:+.4f}]{tag}"
        )
    return "\n".join(lines)
