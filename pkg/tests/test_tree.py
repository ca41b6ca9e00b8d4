import numpy as np
import pytest

from loret.classtree import TreeMetaparams, fit_tree
from loret.formula import parse_formula
from loret.tree import LoretTree, SplitRule


@pytest.fixture
def fitted(small_dataset):
    mp = TreeMetaparams(max_depth=4, minsplit=30, strategy="cart")
    return fit_tree(small_dataset, parse_formula("y ~ 1 | s+e"), mp)


def test_preorder_ids_and_partition(fitted, small_dataset):
    assert fitted.root_id == 1
    assert sorted(fitted.nodes) == list(range(1, len(fitted.nodes) + 1))
    sizes = sum(fitted.nodes[t].n for t in fitted.terminal_ids())
    assert sizes == small_dataset.n_rows


def test_route_matches_training_membership(fitted, small_dataset):
    routed = fitted.route_dataset(small_dataset)
    for t in fitted.terminal_ids():
        stored = set(fitted.nodes[t].train_rows.tolist())
        assert stored == set(np.flatnonzero(routed == t).tolist())


def test_threshold_boundary_routes_left():
    rule = SplitRule(variable="x", kind="threshold", threshold=3.0)
    left = rule.goes_left_values(np.array([3.0, 3.0001]))
    assert left.tolist() == [True, False]


def test_root_only_tree_routes_to_root(small_dataset):
    mp = TreeMetaparams(max_depth=0, minsplit=30, strategy="cart")
    tree = fit_tree(small_dataset, parse_formula("y ~ 1 | e"), mp)
    assert tree.r == 1 and tree.depth == 0
    assert np.all(tree.route_dataset(small_dataset) == 1)


def test_unseen_level_follows_majority_surrogate():
    rule = SplitRule(
        variable="party",
        kind="subset",
        left_levels=("a",),
        right_levels=("b",),
        surrogate="route_majority",
        majority_side="right",
    )
    levels = ["a", "b", "c"]
    left = rule.goes_left_values(np.array([0, 1, 2]), levels)
    assert left.tolist() == [True, False, False]
    forced = SplitRule(
        variable="party", kind="subset", left_levels=("a",), right_levels=("b",),
        surrogate="route_left", majority_side="right",
    )
    assert forced.goes_left_values(np.array([2]), levels).tolist() == [True]


def test_route_record_agrees_with_dataset(fitted, small_dataset):
    routed = fitted.route_dataset(small_dataset)
    for i in (0, 7, 100, 239):
        record = {
            name: (
                small_dataset.level_strings(name)[i]
                if small_dataset.schema.column(name).kind in ("categorical", "ordinal")
                else float(small_dataset.values(name)[i])
            )
            for name in small_dataset.columns
            if name != "id"
        }
        assert fitted.route_record(record, small_dataset.schema) == routed[i]


def test_json_roundtrip(fitted, small_dataset):
    text = fitted.to_json()
    again = LoretTree.from_json(text)
    np.testing.assert_array_equal(
        again.route_dataset(small_dataset), fitted.route_dataset(small_dataset)
    )
    np.testing.assert_allclose(
        again.predict_proba(small_dataset), fitted.predict_proba(small_dataset)
    )
    assert again.to_json() == text


def test_dumps_one_line_per_node(fitted):
    lines = fitted.dumps().splitlines()
    assert len(lines) == len(fitted.nodes)
    assert lines[0].startswith("[1] root")
    assert all("n=" in line and "prevalence=" in line for line in lines)


def test_path_conditions_compose(fitted):
    for t in fitted.terminal_ids():
        conds = fitted.path_conditions(t)
        assert len(conds) == fitted.nodes[t].depth
