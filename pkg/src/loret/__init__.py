"""Logistic regression trees for turnout modeling, segmentation and
voter targeting, with a bootstrap out-of-bag benchmarking harness."""

from .base import NotFittedError
from .bench import (
    BenchResult,
    FoldPlan,
    RocCurve,
    accuracy,
    auc_wilcoxon,
    make_folds,
    pairwise_ci,
    roc_curve,
    run_benchmark,
    threshold_average,
)
from .classtree import TreeMetaparams, best_split_cart, best_split_ctree, fit_tree, gini
from .dataset import Dataset, IngestReport, apply_derivations, load_csv, write_csv
from .design import DesignInfo
from .estimators import (
    ClassificationTree,
    LogisticModel,
    MajorityVote,
    ModelTree,
    build_estimator,
    load_model,
    save_model,
)
from .formula import ModelSchema, parse_formula, select_roles
from .logit import (
    ClassificationConfig,
    LogitModel,
    classify,
    fit_logit,
    log_likelihood,
    predict_prob,
    score,
)
from .mob import (
    MobMetaparams,
    StabilityTestResult,
    best_cutpoint,
    fit_mob,
    stability_test,
    terminal_report,
)
from .schema import ColumnSpec, DerivationRule, Schema, load_schema, parse_schema
from .synth import GenConfig, SegmentSpec, generate, null_generate, preset_household7, preset_null
from .targeting import (
    Banding,
    QuadrantConfig,
    SegmentProfile,
    TargetingConfig,
    build_profiles,
    quadrant_assign,
    targeting_list,
)
from .tree import LoretTree, SplitRule

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
