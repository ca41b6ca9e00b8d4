"""Estimator front-end over the model families.

Four estimators cover the framework's span: constant prevalence
(majority vote), one global logistic regression, classification trees
and logistic model trees. All follow the fit/predict convention with
parameters in the constructor, and expose ``n_params_`` (coefficients
per segment) and ``n_segments_`` (terminal-node count) after fitting.

``build_estimator`` maps a formula string with an optional strategy
suffix (``"y~1|s+e@cart"``) to the right family.
"""

from __future__ import annotations

import json

import numpy as np

from .base import ParamsMixin, check_is_fitted
from .classtree import TreeMetaparams, fit_tree
from .design import DesignInfo, design_for_columns
from .formula import FormulaError, parse_formula, select_roles
from .logit import LogitModel, fit_logit
from .mob import MobMetaparams, fit_mob
from .tree import LoretTree


class _FittedMixin:
    def predict(self, ds, cutoff=0.5):
        return (self.predict_proba(ds) >= cutoff).astype(np.int8)


class MajorityVote(ParamsMixin, _FittedMixin):
    """Intercept-only model: every record scores the prevalence."""

    def __init__(self, formula="y ~ 1 | 1"):
        self.formula = formula

    def fit(self, ds):
        spec = parse_formula(self.formula)
        if spec.has_regressors or spec.has_partitioning:
            raise FormulaError("majority vote takes no regressors or partitioning")
        y = ds.response_values()
        self.design_ = DesignInfo(())
        self.model_ = fit_logit(
            np.ones((len(y), 1)), y, coef_names=("(Intercept)",), design=self.design_
        )
        self.n_params_ = 1
        self.n_segments_ = 1
        return self

    def predict_proba(self, ds):
        check_is_fitted(self, "model_")
        return self.model_.predict_matrix(np.ones((ds.n_rows, 1)))

    def segment_ids(self, ds):
        check_is_fitted(self, "model_")
        return np.ones(ds.n_rows, dtype=np.int64)


class LogisticModel(ParamsMixin, _FittedMixin):
    """Global logistic regression on the formula's regressor sets."""

    def __init__(self, formula="y ~ s | 1", max_iter=100, tol=1e-10):
        self.formula = formula
        self.max_iter = max_iter
        self.tol = tol

    def fit(self, ds):
        spec = parse_formula(self.formula)
        if spec.has_partitioning:
            raise FormulaError("logistic regression takes no partitioning variables")
        if not spec.has_regressors:
            raise FormulaError("no regressors; use MajorityVote")
        views = select_roles(ds, spec)
        self.design_ = design_for_columns(views.x_columns)
        X = self.design_.matrix(ds)
        self.model_ = fit_logit(
            X,
            ds.response_values(),
            max_iter=self.max_iter,
            tol=self.tol,
            coef_names=self.design_.names,
            design=self.design_,
        )
        self.n_params_ = self.design_.n_columns
        self.n_segments_ = 1
        return self

    def predict_proba(self, ds):
        check_is_fitted(self, "model_")
        X = self.design_.matrix(ds, unknown="reference")
        return self.model_.predict_matrix(X)

    def segment_ids(self, ds):
        check_is_fitted(self, "model_")
        return np.ones(ds.n_rows, dtype=np.int64)


class _TreeEstimator(ParamsMixin, _FittedMixin):
    def predict_proba(self, ds):
        check_is_fitted(self, "tree_")
        return self.tree_.predict_proba(ds)

    def segment_ids(self, ds):
        check_is_fitted(self, "tree_")
        return self.tree_.route_dataset(ds)


class ClassificationTree(_TreeEstimator):
    """Partition-only model: prevalence per terminal node."""

    def __init__(
        self,
        formula="y ~ 1 | s",
        strategy="cart",
        max_depth=7,
        minsplit=100,
        alpha=1e-6,
        mc_permutations=0,
    ):
        self.formula = formula
        self.strategy = strategy
        self.max_depth = max_depth
        self.minsplit = minsplit
        self.alpha = alpha
        self.mc_permutations = mc_permutations

    def fit(self, ds):
        spec = parse_formula(self.formula)
        mp = TreeMetaparams(
            max_depth=self.max_depth,
            minsplit=self.minsplit,
            alpha=self.alpha,
            strategy=self.strategy,
            mc_permutations=self.mc_permutations,
        )
        self.tree_ = fit_tree(ds, spec, mp)
        self.n_params_ = 1
        self.n_segments_ = self.tree_.r
        return self


class ModelTree(_TreeEstimator):
    """Logistic regressions in the terminals of a learned partition."""

    def __init__(
        self,
        formula="y ~ s | e",
        alpha=1e-6,
        minsplit=1000,
        max_depth=None,
        trim=0.1,
        max_cutpoints=64,
    ):
        self.formula = formula
        self.alpha = alpha
        self.minsplit = minsplit
        self.max_depth = max_depth
        self.trim = trim
        self.max_cutpoints = max_cutpoints

    def fit(self, ds):
        spec = parse_formula(self.formula)
        mp = MobMetaparams(
            alpha=self.alpha,
            minsplit=self.minsplit,
            max_depth=self.max_depth,
            trim=self.trim,
            max_cutpoints=self.max_cutpoints,
        )
        self.tree_ = fit_mob(ds, spec, mp)
        self.n_params_ = self.tree_.design.n_columns
        self.n_segments_ = self.tree_.r
        return self


def parse_model_spec(text):
    """Split ``formula[@strategy]`` into (ModelSchema, strategy|None)."""
    body, at, strategy = text.partition("@")
    spec = parse_formula(body)
    return spec, (strategy if at else None)


def build_estimator(text, params=None):
    """Estimator for a ``formula[@strategy]`` string.

    The family follows the formula shape; ``@cart`` / ``@ctree`` select
    the classification-tree strategy and ``@mob`` is accepted for model
    trees. ``params`` are forwarded to the chosen constructor.
    """
    spec, strategy = parse_model_spec(text)
    formula = spec.unparse()
    params = dict(params or {})
    if spec.has_regressors and spec.has_partitioning:
        if strategy not in (None, "mob"):
            raise FormulaError(f"model trees support only '@mob', got {strategy!r}")
        return ModelTree(formula=formula, **params)
    if spec.has_partitioning:
        if strategy not in (None, "cart", "ctree"):
            raise FormulaError(
                f"classification trees support '@cart' or '@ctree', got {strategy!r}"
            )
        return ClassificationTree(formula=formula, strategy=strategy or "cart",
                                  **params)
    if strategy is not None:
        raise FormulaError("unpartitioned models take no strategy suffix")
    if spec.has_regressors:
        return LogisticModel(formula=formula, **params)
    return MajorityVote(formula=formula, **params)


def model_spec_label(text):
    spec, strategy = parse_model_spec(text)
    return spec.unparse() + (f" ({strategy})" if strategy else "")


# --- persistence ---------------------------------------------------------------


def save_model(est, path):
    if isinstance(est, (ClassificationTree, ModelTree)):
        check_is_fitted(est, "tree_")
        payload = {
            "family": type(est).__name__,
            "params": _jsonable(est.get_params()),
            "tree": est.tree_.to_dict(),
        }
    else:
        check_is_fitted(est, "model_")
        payload = {
            "family": type(est).__name__,
            "params": _jsonable(est.get_params()),
            "model": est.model_.to_dict(),
            "design": est.design_.to_dict(),
        }
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")


def load_model(path):
    with open(path, "r", encoding="utf-8") as fh:
        payload = json.load(fh)
    family = payload["family"]
    classes = {
        "MajorityVote": MajorityVote,
        "LogisticModel": LogisticModel,
        "ClassificationTree": ClassificationTree,
        "ModelTree": ModelTree,
    }
    if family not in classes:
        raise ValueError(f"unknown model family {family!r}")
    est = classes[family](**payload["params"])
    if "tree" in payload:
        est.tree_ = LoretTree.from_dict(payload["tree"])
        est.n_segments_ = est.tree_.r
        est.n_params_ = est.tree_.design.n_columns
    else:
        est.design_ = DesignInfo.from_dict(payload["design"])
        est.model_ = LogitModel.from_dict(payload["model"])
        est.n_params_ = len(est.design_.names)
        est.n_segments_ = 1
    return est


def _jsonable(params):
    out = {}
    for k, v in params.items():
        if isinstance(v, (np.integer,)):
            v = int(v)
        elif isinstance(v, (np.floating,)):
            v = float(v)
        out[k] = v
    return out
