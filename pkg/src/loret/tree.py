"""Recursive-partition structure shared by all tree estimators.

Nodes are numbered in depth-first preorder starting at 1 (left child
before right subtree), so terminal-node ids are stable, reproducible
labels for segments. Internal nodes carry a binary split rule; terminal
nodes carry a fitted logistic node model plus the training rows they
received.

Unseen categorical levels at prediction time follow the split's
surrogate rule; the default sends them to the child that received the
larger share of training rows.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .design import DesignInfo
from .logit import LogitModel

ROUTE_LEFT = "route_left"
ROUTE_RIGHT = "route_right"
ROUTE_MAJORITY = "route_majority"


@dataclass(frozen=True)
class SplitRule:
    """Binary routing rule on one partitioning variable.

    ``threshold`` splits ordered variables (left holds value <= t;
    ordinal variables compare level indices). ``left_levels`` /
    ``right_levels`` split categorical variables by observed level;
    levels in neither set follow the surrogate.
    """

    variable: str
    kind: str  # "threshold" | "subset"
    threshold: float | None = None
    left_levels: tuple[str, ...] = ()
    right_levels: tuple[str, ...] = ()
    surrogate: str = ROUTE_MAJORITY
    majority_side: str = "left"

    def describe(self, side):
        if self.kind == "threshold":
            op = "<=" if side == "left" else ">"
            return f"{self.variable} {op} {_num(self.threshold)}"
        levels = self.left_levels if side == "left" else self.right_levels
        return f"{self.variable} in {{{', '.join(levels)}}}"

    def fallback_side(self):
        if self.surrogate == ROUTE_LEFT:
            return "left"
        if self.surrogate == ROUTE_RIGHT:
            return "right"
        return self.majority_side

    def goes_left_values(self, values, levels=None):
        """Vector of {True: left, False: right} over raw stored values."""
        if self.kind == "threshold":
            return np.asarray(values, dtype=np.float64) <= self.threshold
        codes = np.asarray(values, dtype=np.int64)
        left_codes = {levels.index(l) for l in self.left_levels if l in levels}
        right_codes = {levels.index(l) for l in self.right_levels if l in levels}
        left = np.isin(codes, sorted(left_codes))
        known = left | np.isin(codes, sorted(right_codes))
        if not np.all(known):
            left = left.copy()
            left[~known] = self.fallback_side() == "left"
        return left

    def to_dict(self):
        return {
            "variable": self.variable,
            "kind": self.kind,
            "threshold": self.threshold,
            "left_levels": list(self.left_levels),
            "right_levels": list(self.right_levels),
            "surrogate": self.surrogate,
            "majority_side": self.majority_side,
        }

    @classmethod
    def from_dict(cls, d):
        return cls(
            variable=d["variable"],
            kind=d["kind"],
            threshold=d["threshold"],
            left_levels=tuple(d["left_levels"]),
            right_levels=tuple(d["right_levels"]),
            surrogate=d["surrogate"],
            majority_side=d["majority_side"],
        )


@dataclass
class TreeNode:
    node_id: int
    depth: int
    n: int
    prevalence: float
    split: SplitRule | None = None
    left: int | None = None
    right: int | None = None
    model: LogitModel | None = None
    train_rows: np.ndarray | None = None
    stop_reason: str = ""
    split_info: dict = field(default_factory=dict)

    @property
    def is_terminal(self):
        return self.split is None


@dataclass
class LoretTree:
    """Fitted partition with logistic models in the terminal nodes."""

    nodes: dict[int, TreeNode]
    design: DesignInfo
    formula: str
    strategy: str
    fit_meta: dict = field(default_factory=dict)

    @property
    def root_id(self):
        return 1

    @property
    def r(self):
        return sum(1 for n in self.nodes.values() if n.is_terminal)

    @property
    def depth(self):
        return max(n.depth for n in self.nodes.values())

    def terminal_ids(self):
        return tuple(sorted(i for i, n in self.nodes.items() if n.is_terminal))

    def node(self, node_id):
        return self.nodes[node_id]

    def route_dataset(self, ds, rows=None):
        """Terminal node id per row (vectorized)."""
        idx = np.arange(ds.n_rows) if rows is None else np.asarray(rows)
        out = np.empty(len(idx), dtype=np.int64)
        stack = [(self.root_id, np.arange(len(idx)))]
        while stack:
            node_id, positions = stack.pop()
            node = self.nodes[node_id]
            if node.is_terminal:
                out[positions] = node_id
                continue
            col = ds.schema.column(node.split.variable)
            values = ds.values(node.split.variable)[idx[positions]]
            levels = list(col.levels) if col.kind == "categorical" else None
            left = node.split.goes_left_values(values, levels)
            stack.append((node.left, positions[left]))
            stack.append((node.right, positions[~left]))
        return out

    def route_record(self, record, schema):
        """Terminal id for one mapping of column name -> raw value."""
        node = self.nodes[self.root_id]
        while not node.is_terminal:
            split = node.split
            value = record[split.variable]
            col = schema.column(split.variable)
            if split.kind == "threshold":
                if col.kind == "ordinal" and isinstance(value, str):
                    value = col.levels.index(value)
                side = "left" if float(value) <= split.threshold else "right"
            else:
                if value in split.left_levels:
                    side = "left"
                elif value in split.right_levels:
                    side = "right"
                else:
                    side = split.fallback_side()
            node = self.nodes[node.left if side == "left" else node.right]
        return node.node_id

    def predict_proba(self, ds, rows=None):
        X = self.design.matrix(ds, rows=rows, unknown="reference")
        node_ids = self.route_dataset(ds, rows=rows)
        out = np.empty(len(node_ids), dtype=np.float64)
        for node_id in self.terminal_ids():
            mask = node_ids == node_id
            if np.any(mask):
                out[mask] = self.nodes[node_id].model.predict_matrix(X[mask])
        return out

    def path_conditions(self, node_id):
        """Conjunction of split conditions from the root to a node."""
        rev = {}
        for nid, node in self.nodes.items():
            if not node.is_terminal:
                rev[node.left] = (nid, "left")
                rev[node.right] = (nid, "right")
        conds = []
        cur = node_id
        while cur in rev:
            parent, side = rev[cur]
            conds.append(self.nodes[parent].split.describe(side))
            cur = parent
        return tuple(reversed(conds))

    def dumps(self):
        """Indented one-line-per-node rule dump."""
        lines = []

        def walk(node_id, label):
            node = self.nodes[node_id]
            indent = "  " * node.depth
            head = f"{indent}[{node.node_id}] {label}" if label else f"[{node.node_id}] root"
            tail = f"n={node.n} prevalence={node.prevalence:.4f}"
            if node.is_terminal:
                tail += " *"
            lines.append(f"{head}: {tail}")
            if not node.is_terminal:
                walk(node.left, node.split.describe("left"))
                walk(node.right, node.split.describe("right"))

        walk(self.root_id, "")
        return "\n".join(lines)

    def to_dict(self):
        return {
            "formula": self.formula,
            "strategy": self.strategy,
            "fit_meta": self.fit_meta,
            "design": self.design.to_dict(),
            "nodes": [
                {
                    "node_id": n.node_id,
                    "depth": n.depth,
                    "n": n.n,
                    "prevalence": n.prevalence,
                    "split": n.split.to_dict() if n.split else None,
                    "left": n.left,
                    "right": n.right,
                    "model": n.model.to_dict() if n.model else None,
                    "stop_reason": n.stop_reason,
                    "split_info": n.split_info,
                }
                for _, n in sorted(self.nodes.items())
            ],
        }

    @classmethod
    def from_dict(cls, d):
        nodes = {}
        for nd in d["nodes"]:
            nodes[nd["node_id"]] = TreeNode(
                node_id=nd["node_id"],
                depth=nd["depth"],
                n=nd["n"],
                prevalence=nd["prevalence"],
                split=SplitRule.from_dict(nd["split"]) if nd["split"] else None,
                left=nd["left"],
                right=nd["right"],
                model=LogitModel.from_dict(nd["model"]) if nd["model"] else None,
                stop_reason=nd.get("stop_reason", ""),
                split_info=nd.get("split_info", {}),
            )
        return cls(
            nodes=nodes,
            design=DesignInfo.from_dict(d["design"]),
            formula=d["formula"],
            strategy=d["strategy"],
            fit_meta=d["fit_meta"],
        )

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, allow_nan=True)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))


def _num(x):
    return f"{x:g}"
