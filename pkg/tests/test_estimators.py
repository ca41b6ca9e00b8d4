import numpy as np
import pytest

from loret.base import NotFittedError
from loret.estimators import (
    ClassificationTree,
    LogisticModel,
    MajorityVote,
    ModelTree,
    build_estimator,
    load_model,
    save_model,
)
from loret.formula import FormulaError
from loret.synth import generate, preset_household7


@pytest.fixture(scope="module")
def data():
    ds, _ = generate(preset_household7(2500, seed=2))
    return ds


def test_build_estimator_family_mapping():
    assert isinstance(build_estimator("y~1|1"), MajorityVote)
    assert isinstance(build_estimator("y~s|1"), LogisticModel)
    assert isinstance(build_estimator("y~s+e|1"), LogisticModel)
    tree = build_estimator("y~1|s+e@ctree")
    assert isinstance(tree, ClassificationTree) and tree.strategy == "ctree"
    assert build_estimator("y~1|s").strategy == "cart"
    assert isinstance(build_estimator("y~s|e"), ModelTree)
    assert isinstance(build_estimator("y~s|e@mob"), ModelTree)
    with pytest.raises(FormulaError):
        build_estimator("y~s|e@cart")
    with pytest.raises(FormulaError):
        build_estimator("y~s|1@ctree")


def test_get_set_params_roundtrip():
    est = ModelTree(alpha=0.01, minsplit=200)
    params = est.get_params()
    assert params["alpha"] == 0.01 and params["minsplit"] == 200
    clone = ModelTree(**params)
    assert clone.get_params() == params
    est.set_params(alpha=0.5)
    assert est.alpha == 0.5
    with pytest.raises(ValueError):
        est.set_params(bogus=1)


def test_not_fitted_errors(data):
    with pytest.raises(NotFittedError):
        MajorityVote().predict_proba(data)
    with pytest.raises(NotFittedError):
        ModelTree().predict_proba(data)


def test_majority_vote_scores_prevalence(data):
    est = MajorityVote().fit(data)
    probs = est.predict_proba(data)
    prevalence = data.response_values().mean()
    assert np.allclose(probs, prevalence)
    assert est.n_params_ == 1 and est.n_segments_ == 1
    preds = est.predict(data, cutoff=0.5)
    assert np.all(preds == (1 if prevalence >= 0.5 else 0))


def test_logistic_model_formula_guards(data):
    with pytest.raises(FormulaError):
        LogisticModel(formula="y ~ 1 | 1").fit(data)
    with pytest.raises(FormulaError):
        LogisticModel(formula="y ~ s | e").fit(data)
    est = LogisticModel(formula="y ~ s | 1").fit(data)
    assert est.n_params_ == 8


def test_tree_estimators_fit_predict(data):
    cart = ClassificationTree(
        formula="y ~ 1 | s+e", strategy="cart", minsplit=150
    ).fit(data)
    assert cart.n_params_ == 1
    assert cart.n_segments_ == cart.tree_.r
    probs = cart.predict_proba(data)
    assert probs.shape == (data.n_rows,)
    assert np.all((probs >= 0) & (probs <= 1))
    assert len(np.unique(cart.segment_ids(data))) == cart.n_segments_

    mob = ModelTree(formula="y ~ s | e", alpha=1e-4, minsplit=400).fit(data)
    assert mob.n_params_ == 8
    assert mob.predict_proba(data).shape == (data.n_rows,)


@pytest.mark.parametrize(
    "factory",
    [
        lambda: MajorityVote(),
        lambda: LogisticModel(formula="y ~ s | 1"),
        lambda: ClassificationTree(formula="y ~ 1 | e", minsplit=200),
        lambda: ModelTree(formula="y ~ s | e", alpha=1e-4, minsplit=500),
    ],
)
def test_save_load_roundtrip(tmp_path, data, factory):
    est = factory().fit(data)
    path = tmp_path / "model.json"
    save_model(est, path)
    loaded = load_model(path)
    np.testing.assert_array_equal(
        loaded.predict_proba(data), est.predict_proba(data)
    )
    np.testing.assert_array_equal(
        loaded.segment_ids(data), est.segment_ids(data)
    )
    assert loaded.get_params() == est.get_params()


def test_save_requires_fit(tmp_path):
    with pytest.raises(NotFittedError):
        save_model(MajorityVote(), tmp_path / "m.json")
