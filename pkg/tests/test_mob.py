"""Model-tree induction tests: stability tests, cutpoint search and the
recursive procedure's invariants."""

import numpy as np
import pytest

from loret.dataset import from_arrays
from loret.design import design_for_columns
from loret.formula import parse_formula, select_roles
from loret.logit import fit_logit
from loret.mob import (
    MobMetaparams,
    best_cutpoint,
    fit_mob,
    score_contributions,
    stability_test,
)
from loret.schema import ColumnSpec, parse_schema
from loret.suplm import suplm_pvalue

TWO_VAR_SCHEMA = """
vote binary response none
x1 numeric regressor s
z1 numeric partitioning e
z2 categorical partitioning e a b c
"""


def simple_dataset(n, seed, break_at=None, flip_sign=False):
    rng = np.random.default_rng(seed)
    x1 = rng.normal(size=n)
    z1 = rng.uniform(0, 1, n)
    z2 = rng.integers(0, 3, n)
    slope = np.full(n, 1.2)
    if break_at is not None:
        slope = np.where(z1 <= break_at, 1.2, -1.2 if flip_sign else 0.2)
    eta = 0.3 + slope * x1
    y = (rng.random(n) < 1 / (1 + np.exp(-eta))).astype(int)
    return from_arrays(
        parse_schema(TWO_VAR_SCHEMA),
        {"vote": y, "x1": x1, "z1": z1, "z2": z2},
    )


def node_scores(ds):
    views = select_roles(ds, parse_formula("y ~ s | e"))
    design = design_for_columns(views.x_columns)
    X = design.matrix(ds)
    y = np.asarray(ds.response_values())
    model = fit_logit(X, y, coef_names=design.names)
    return model, X, y, score_contributions(model, X, y)


def test_constant_partition_variable_gives_p_one():
    ds = simple_dataset(300, 0)
    _, _, _, scores = node_scores(ds)
    spec = ColumnSpec("z", "numeric", "partitioning", "e")
    result = stability_test(scores, np.ones(300), spec)
    assert result.p_value == 1.0 and result.statistic == 0.0


def test_stability_null_rejection_rate():
    spec_num = ColumnSpec("z1", "numeric", "partitioning", "e")
    spec_cat = ColumnSpec("z2", "categorical", "partitioning", "e", ("a", "b", "c"))
    alpha = 0.05
    rejections = np.zeros(2)
    reps = 200
    for seed in range(reps):
        ds = simple_dataset(400, seed)
        _, _, _, scores = node_scores(ds)
        r1 = stability_test(scores, ds.values("z1"), spec_num)
        r2 = stability_test(scores, ds.values("z2"), spec_cat)
        rejections += [r1.p_value <= alpha, r2.p_value <= alpha]
    for rate in rejections / reps:
        assert rate <= 0.10


def test_stability_detects_sign_flip_regimes():
    ds = simple_dataset(5000, 42, break_at=0.48, flip_sign=True)
    _, _, _, scores = node_scores(ds)
    spec = ColumnSpec("z1", "numeric", "partitioning", "e")
    result = stability_test(scores, ds.values("z1"), spec)
    # Bonferroni over the two candidate variables keeps it far below 1e-6
    assert min(1.0, 2 * result.p_value) < 1e-6
    assert result.kind == "supLM_ordered"


def test_suplm_pvalue_monotone_and_bounded():
    grid = np.linspace(0.5, 60, 120)
    last = 1.0
    for stat in grid:
        p = suplm_pvalue(stat, 8, 0.1)
        assert 0.0 < p <= 1.0
        assert p <= last + 1e-12
        last = p
    with pytest.raises(ValueError):
        suplm_pvalue(10.0, 99, 0.1)


def test_best_cutpoint_matches_brute_force():
    ds = simple_dataset(120, 3, break_at=0.5, flip_sign=True)
    # coarsen z1 to exactly 10 distinct values
    z = np.round(np.asarray(ds.values("z1")) * 9) / 9
    ds = from_arrays(
        ds.schema,
        {"vote": ds.values("vote"), "x1": ds.values("x1"),
         "z1": z, "z2": ds.values("z2")},
    )
    views = select_roles(ds, parse_formula("y ~ s | e"))
    design = design_for_columns(views.x_columns)
    X = design.matrix(ds)
    y = np.asarray(ds.response_values())
    spec = ds.schema.column("z1")
    found = best_cutpoint(X, y, ds.values("z1"), spec, minsplit=25)

    # brute force: refit children at every admissible threshold
    best = (np.inf, None)
    xs = np.unique(z)
    for a, b in zip(xs, xs[1:]):
        t = (a + b) / 2
        mask = z <= t
        if mask.sum() < 25 or (~mask).sum() < 25:
            continue
        nll = -(fit_logit(X[mask], y[mask]).log_likelihood
                + fit_logit(X[~mask], y[~mask]).log_likelihood)
        if nll < best[0] - 1e-12:
            best = (nll, t)
    assert found.objective == pytest.approx(best[0], abs=1e-8)
    assert found.rule.threshold == pytest.approx(best[1], abs=1e-12)


def test_best_cutpoint_none_when_inadmissible():
    ds = simple_dataset(120, 3)
    views = select_roles(ds, parse_formula("y ~ s | e"))
    design = design_for_columns(views.x_columns)
    X = design.matrix(ds)
    y = np.asarray(ds.response_values())
    spec = ds.schema.column("z1")
    assert best_cutpoint(X, y, ds.values("z1"), spec, minsplit=100) is None


def test_piecewise_truth_cutpoint_recovered():
    ds = simple_dataset(5000, 11, break_at=0.48, flip_sign=True)
    mob = fit_mob(ds, parse_formula("y ~ s | e"),
                  MobMetaparams(alpha=1e-6, minsplit=500))
    splits = [n.split for n in mob.nodes.values() if n.split]
    assert splits, "expected at least one split"
    assert splits[0].variable == "z1"
    assert abs(splits[0].threshold - 0.48) < 0.05


def test_minsplit_respected_and_estimability_guard():
    ds = simple_dataset(3000, 5, break_at=0.5, flip_sign=True)
    mob = fit_mob(ds, parse_formula("y ~ s | e"),
                  MobMetaparams(alpha=1e-4, minsplit=300))
    for t in mob.terminal_ids():
        assert mob.nodes[t].n >= 300
    with pytest.raises(ValueError, match="minsplit"):
        fit_mob(ds, parse_formula("y ~ s | e"), MobMetaparams(minsplit=10))


def test_reduction_to_single_fit():
    ds = simple_dataset(800, 9)
    direct, X, y, _ = node_scores(ds)
    # alpha so strict that no split can ever pass
    mob = fit_mob(ds, parse_formula("y ~ s | e"),
                  MobMetaparams(alpha=1e-300, minsplit=80))
    assert mob.r == 1
    root_model = mob.nodes[1].model
    np.testing.assert_allclose(root_model.coefficients, direct.coefficients,
                               atol=1e-10)
    np.testing.assert_allclose(mob.predict_proba(ds), direct.predict_matrix(X),
                               atol=1e-12)


def test_deviance_decreases_per_split():
    ds = simple_dataset(4000, 21, break_at=0.5, flip_sign=True)
    mob = fit_mob(ds, parse_formula("y ~ s | e"),
                  MobMetaparams(alpha=1e-3, minsplit=300))
    y = np.asarray(ds.response_values())
    views = select_roles(ds, parse_formula("y ~ s | e"))
    X = design_for_columns(views.x_columns).matrix(ds)

    def subtree_ll(node_id, rows):
        node = mob.nodes[node_id]
        if node.is_terminal:
            return fit_logit(X[rows], y[rows]).log_likelihood
        mask = node.split.goes_left_values(
            np.asarray(ds.values(node.split.variable))[rows],
            list(ds.schema.column(node.split.variable).levels) or None,
        )
        return subtree_ll(node.left, rows[mask]) + subtree_ll(node.right, rows[~mask])

    for node in mob.nodes.values():
        if node.is_terminal:
            continue
        rows = np.concatenate([
            mob.nodes[t].train_rows
            for t in mob.terminal_ids()
            if _is_descendant(mob, t, node.node_id)
        ])
        parent_ll = fit_logit(X[rows], y[rows]).log_likelihood
        assert subtree_ll(node.node_id, np.sort(rows)) > parent_ll


def _is_descendant(tree, node_id, ancestor):
    rev = {}
    for nid, node in tree.nodes.items():
        if not node.is_terminal:
            rev[node.left] = nid
            rev[node.right] = nid
    cur = node_id
    while cur is not None:
        if cur == ancestor:
            return True
        cur = rev.get(cur)
    return False


def test_every_split_passes_bonferroni_gate():
    ds = simple_dataset(4000, 33, break_at=0.5, flip_sign=True)
    alpha = 1e-3
    mob = fit_mob(ds, parse_formula("y ~ s | e"),
                  MobMetaparams(alpha=alpha, minsplit=300))
    executed = [n for n in mob.nodes.values() if n.split]
    assert executed
    for node in executed:
        assert node.split_info["adjusted_p"] <= alpha


def test_separated_node_not_split(small_dataset):
    # all-positive response forces immediate complete separation
    ds = from_arrays(
        small_dataset.schema,
        {name: (np.ones(small_dataset.n_rows, dtype=np.int8)
                if name == "vote" else small_dataset.values(name))
         for name in small_dataset.columns},
    )
    mob = fit_mob(ds, parse_formula("y ~ s | e"),
                  MobMetaparams(alpha=0.5, minsplit=100))
    assert mob.r == 1
    assert mob.nodes[1].stop_reason == "separation"


def test_determinism(small_dataset):
    mp = MobMetaparams(alpha=0.05, minsplit=60)
    a = fit_mob(small_dataset, parse_formula("y ~ s | e"), mp)
    b = fit_mob(small_dataset, parse_formula("y ~ s | e"), mp)
    assert a.to_json() == b.to_json()
