import functools
import warnings

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy import stats

from loret import bench
from loret.bench import (
    accuracy,
    auc_wilcoxon,
    default_threshold_grid,
    make_folds,
    pairwise_ci,
    roc_curve,
    threshold_average,
)
from loret.estimators import build_estimator
from loret.synth import generate, preset_null


def test_make_folds_deterministic():
    a = make_folds(5, 4, seed=9)
    b = make_folds(5, 4, seed=9)
    for x, y in zip(a.in_bag, b.in_bag):
        np.testing.assert_array_equal(x, y)
    c = make_folds(5, 4, seed=10)
    assert any(
        not np.array_equal(x, y) for x, y in zip(a.in_bag, c.in_bag)
    )


def test_fold_structure():
    plan = make_folds(500, 10, seed=1)
    assert plan.n_folds == 10
    for bag, out in zip(plan.in_bag, plan.oob):
        assert len(bag) == 500
        assert out.size > 0
        assert np.intersect1d(np.unique(bag), out).size == 0
        assert np.union1d(np.unique(bag), out).size == 500


def test_oob_fraction_near_e_inverse():
    plan = make_folds(10_000, 50, seed=3)
    fractions = [len(out) / 10_000 for out in plan.oob]
    assert 0.36 <= float(np.mean(fractions)) <= 0.375


def test_accuracy_oracle():
    rng = np.random.default_rng(0)
    for _ in range(50):
        n = int(rng.integers(1, 60))
        p = rng.integers(0, 2, n)
        t = rng.integers(0, 2, n)
        direct = sum(int(a == b) for a, b in zip(p, t)) / n
        assert accuracy(p, t) == pytest.approx(direct)
    assert accuracy([1, 1, 1], [1, 1, 1]) == 1.0
    with pytest.raises(ValueError):
        accuracy([], [])
    with pytest.raises(ValueError):
        accuracy([1], [1, 0])


def pair_count_auc(scores, labels):
    """Exhaustive concordant/tied pair counting."""
    pos = [s for s, l in zip(scores, labels) if l == 1]
    neg = [s for s, l in zip(scores, labels) if l == 0]
    total = 0.0
    for a in pos:
        for b in neg:
            if a > b:
                total += 1.0
            elif a == b:
                total += 0.5
    return total / (len(pos) * len(neg))


def test_auc_examples():
    assert auc_wilcoxon([0.9, 0.8, 0.2, 0.1], [1, 1, 0, 0]) == 1.0
    assert auc_wilcoxon([0.4] * 6, [1, 0, 1, 0, 1, 0]) == 0.5
    assert auc_wilcoxon([0.9, 0.4, 0.5, 0.1], [1, 1, 0, 0]) == pytest.approx(0.75)
    with pytest.raises(ValueError):
        auc_wilcoxon([0.3, 0.4], [1, 1])


def test_auc_equals_pair_counting_with_ties():
    rng = np.random.default_rng(12)
    for _ in range(200):
        n = int(rng.integers(4, 200))
        labels = rng.integers(0, 2, n)
        if labels.min() == labels.max():
            labels[0] = 1 - labels[0]
        scores = np.round(rng.random(n), 2)  # many ties
        assert auc_wilcoxon(scores, labels) == pair_count_auc(scores, labels)


@given(st.floats(min_value=0.1, max_value=10), st.floats(min_value=-5, max_value=5))
def test_auc_invariant_under_monotone_transform(scale, shift):
    rng = np.random.default_rng(4)
    scores = rng.random(80)
    labels = rng.integers(0, 2, 80)
    labels[0], labels[1] = 0, 1
    base = auc_wilcoxon(scores, labels)
    assert auc_wilcoxon(scale * scores + shift, labels) == pytest.approx(base)
    assert auc_wilcoxon(np.exp(scores), labels) == pytest.approx(base)


def test_roc_anchors_and_monotonicity():
    rng = np.random.default_rng(2)
    scores = rng.random(200)
    labels = rng.integers(0, 2, 200)
    labels[:2] = [0, 1]
    grid = default_threshold_grid()
    curve = roc_curve(scores, labels, grid)
    assert curve.fpr[0] == 0.0 and curve.tpr[0] == 0.0   # above every score
    assert curve.fpr[-1] == 1.0 and curve.tpr[-1] == 1.0  # threshold 0
    assert np.all(np.diff(curve.fpr) >= 0) and np.all(np.diff(curve.tpr) >= 0)


def test_trapezoid_area_equals_wilcoxon():
    rng = np.random.default_rng(8)
    for _ in range(200):
        n = int(rng.integers(5, 500))
        labels = rng.integers(0, 2, n)
        if labels.min() == labels.max():
            labels[0] = 1 - labels[0]
        scores = np.round(rng.random(n), 3)
        curve = roc_curve(scores, labels)
        assert curve.area() == pytest.approx(
            auc_wilcoxon(scores, labels), abs=1e-12
        )


def test_threshold_average_identity_and_mean():
    rng = np.random.default_rng(5)
    grid = default_threshold_grid(21)
    curves = []
    for _ in range(3):
        scores = rng.random(100)
        labels = rng.integers(0, 2, 100)
        labels[:2] = [0, 1]
        curves.append(roc_curve(scores, labels, grid))
    single = threshold_average([curves[0]])
    np.testing.assert_array_equal(single.fpr, curves[0].fpr)
    avg = threshold_average(curves)
    np.testing.assert_allclose(
        avg.tpr, np.mean([c.tpr for c in curves], axis=0)
    )
    with pytest.raises(ValueError):
        threshold_average([])
    with pytest.raises(ValueError):
        threshold_average([curves[0], roc_curve(rng.random(8), [0, 1] * 4)])


def test_pairwise_ci_identical_models_centered_at_zero():
    rng = np.random.default_rng(3)
    row = rng.uniform(0.6, 0.9, 10)
    ci = pairwise_ci(np.vstack([row, row]), seed=1)
    assert ci.degenerate
    assert ci.estimates[0] == 0.0
    assert ci.lower[0] == 0.0 == ci.upper[0]


def test_pairwise_ci_matches_paired_t_at_two_models():
    rng = np.random.default_rng(14)
    a = 0.80 + 0.01 * rng.standard_normal(10)
    b = 0.78 + 0.01 * rng.standard_normal(10)
    ci = pairwise_ci(np.vstack([a, b]), level=0.95, draws=400_000, seed=7)
    d = a - b
    se = d.std(ddof=1) / np.sqrt(len(d))
    tcrit = stats.t.ppf(0.975, len(d) - 1)
    assert ci.estimates[0] == pytest.approx(d.mean(), abs=1e-12)
    assert ci.critical == pytest.approx(tcrit, abs=2e-2)
    assert ci.lower[0] == pytest.approx(d.mean() - tcrit * se, abs=1e-3)
    assert ci.upper[0] == pytest.approx(d.mean() + tcrit * se, abs=1e-3)


def test_pairwise_ci_bounds_order():
    rng = np.random.default_rng(6)
    m = rng.uniform(0.5, 1.0, size=(4, 10))
    ci = pairwise_ci(m, seed=2)
    assert np.all(ci.lower <= ci.estimates) and np.all(ci.estimates <= ci.upper)
    assert len(ci.pairs) == 6


def test_centered_accuracies_sum_to_zero():
    rng = np.random.default_rng(9)
    m = rng.uniform(0.5, 1.0, size=(5, 8))
    centered = m - m.mean(axis=0, keepdims=True)
    np.testing.assert_allclose(centered.sum(axis=0), 0.0, atol=1e-12)


def test_accuracy_cutoff_extremes():
    rng = np.random.default_rng(10)
    labels = (rng.random(400) < 0.7).astype(int)
    scores = rng.uniform(0.01, 0.99, 400)
    acc0 = accuracy((scores >= 0.0).astype(int), labels)   # everyone called 1
    acc1 = accuracy((scores >= 1.0).astype(int), labels)   # everyone called 0
    prevalence = labels.mean()
    assert acc0 == pytest.approx(prevalence)
    assert acc1 == pytest.approx(1 - prevalence)
    assert max(acc0, acc1) == pytest.approx(max(prevalence, 1 - prevalence))


def small_bench(jobs=1, seed=5):
    ds, _ = generate(preset_null(600, seed=2))
    builders = {
        "y ~ 1 | 1": functools.partial(build_estimator, "y~1|1"),
        "y ~ s | 1": functools.partial(build_estimator, "y~s|1"),
    }
    plan = make_folds(ds.n_rows, 4, seed=seed)
    return bench.run_benchmark(ds, builders, plan, cutoff=0.5, jobs=jobs,
                               ci_draws=20_000)


def test_run_benchmark_shapes_and_reports():
    res = small_bench()
    assert len(res.rows) == 2
    for row in res.rows:
        assert row.acc_folds.shape == (4,)
        assert not np.any(np.isnan(row.acc_folds))
        assert row.acc_mean == pytest.approx(np.mean(row.acc_folds))
    assert res.rows[0].p_plus_1 == 1 and res.rows[1].p_plus_1 == 8
    assert res.acc_ci is not None
    text = bench.report_text(res)
    assert "y ~ 1 | 1" in text and "acc_mean" in text
    csv = bench.report_csv(res)
    assert csv.splitlines()[0].startswith("model,")
    assert len(bench.roc_csv(res).splitlines()) > 10
    assert len(bench.cutoff_accuracy_csv(res).splitlines()) == 2 * 201 + 1


def test_run_benchmark_deterministic_across_jobs():
    r1 = small_bench(jobs=1)
    r2 = small_bench(jobs=2)
    assert bench.report_csv(r1) == bench.report_csv(r2)
    assert bench.roc_csv(r1) == bench.roc_csv(r2)
    assert bench.ci_text(r1.acc_ci, r1.model_names, "accuracy") == bench.ci_text(
        r2.acc_ci, r2.model_names, "accuracy"
    )


class _FailingModel:
    def __init__(self):
        self.n_params_ = 1
        self.n_segments_ = 1

    def fit(self, ds):
        if len(np.unique(ds.row_ids)) < ds.n_rows:  # bootstrap duplicates
            raise RuntimeError("boom")
        return self

    def predict_proba(self, ds):
        return np.full(ds.n_rows, 0.5)


def test_fold_failures_warn_and_exclude():
    ds, _ = generate(preset_null(300, seed=4))
    plan = make_folds(ds.n_rows, 3, seed=0)
    builders = {"bad": _FailingModel, "ok": functools.partial(build_estimator, "y~1|1")}
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        res = bench.run_benchmark(ds, builders, plan)
    assert any("fold(s) failed" in str(w.message) for w in caught)
    bad = res.rows[0]
    assert np.all(np.isnan(bad.acc_folds))
    assert bad.fold_errors and "boom" in bad.fold_errors[0]
    assert res.acc_ci is None  # only one complete model, CI section skipped


def test_single_model_benchmark_skips_ci():
    ds, _ = generate(preset_null(300, seed=4))
    plan = make_folds(ds.n_rows, 3, seed=0)
    res = bench.run_benchmark(
        ds, {"y ~ 1 | 1": functools.partial(build_estimator, "y~1|1")}, plan
    )
    assert res.acc_ci is None and res.auc_ci is None
