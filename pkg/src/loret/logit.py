"""Maximum-likelihood logistic regression: the node model.

Fitting uses iteratively reweighted least squares with step halving, so
the Bernoulli log-likelihood never decreases across iterations.
Separation (perfect or quasi-complete prediction) is detected when a
coefficient diverges past a bound while the likelihood keeps improving;
the fit stops there, keeps the clamped coefficients usable for
prediction, and flags the model.

Rank-deficient designs are handled by dropping aliased columns, later
columns first in declaration order, and recording their names.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import expit

from .base import as_binary_array, as_float_matrix

SEPARATION_NONE = "none"
SEPARATION_QUASI = "quasi_complete"
SEPARATION_COMPLETE = "complete"

DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITER = 100
COEF_BOUND = 15.0
# a row counts as saturated when its linear predictor points at its own
# label with probability within 1e-3 of it; the coefficient bound stops
# iteration long before probabilities can tighten further
_SATURATION_ETA = 6.9


@dataclass(frozen=True)
class ClassificationConfig:
    """Cutoff for turning predicted probabilities into 0/1 calls."""

    cutoff: float = 0.5

    def __post_init__(self):
        if not 0.0 <= self.cutoff <= 1.0:
            raise ValueError("cutoff must lie in [0, 1]")


@dataclass(frozen=True)
class LogitModel:
    """Fitted logistic regression coefficients and diagnostics.

    ``coefficients`` and ``std_errors`` cover only the kept (non-aliased)
    design columns; ``kept_idx`` maps them back into the full design.
    ``std_errors`` entries are NaN when the model is separation-flagged.
    """

    coefficients: np.ndarray
    std_errors: np.ndarray
    coef_names: tuple[str, ...]
    log_likelihood: float
    n_obs: int
    n_iter: int
    converged: bool
    separation: str
    kept_idx: tuple[int, ...]
    aliased: tuple[str, ...] = ()
    design: object = None

    @property
    def n_params(self):
        return len(self.coefficients)

    def linear_predictor(self, X):
        Xk = np.asarray(X, dtype=np.float64)[:, list(self.kept_idx)]
        beta = self.coefficients
        finite = np.isfinite(beta)
        eta = Xk[:, finite] @ beta[finite]
        for j in np.flatnonzero(~finite):
            eta = eta + np.where(Xk[:, j] != 0, beta[j] * np.sign(Xk[:, j]), 0.0)
        return eta

    def predict_matrix(self, X):
        return expit(self.linear_predictor(X))

    def to_dict(self):
        return {
            "coefficients": [float(b) for b in self.coefficients],
            "std_errors": [float(s) for s in self.std_errors],
            "coef_names": list(self.coef_names),
            "log_likelihood": float(self.log_likelihood),
            "n_obs": int(self.n_obs),
            "n_iter": int(self.n_iter),
            "converged": bool(self.converged),
            "separation": self.separation,
            "kept_idx": list(self.kept_idx),
            "aliased": list(self.aliased),
        }

    @classmethod
    def from_dict(cls, d):
        return cls(
            coefficients=np.asarray(d["coefficients"], dtype=np.float64),
            std_errors=np.asarray(d["std_errors"], dtype=np.float64),
            coef_names=tuple(d["coef_names"]),
            log_likelihood=float(d["log_likelihood"]),
            n_obs=int(d["n_obs"]),
            n_iter=int(d["n_iter"]),
            converged=bool(d["converged"]),
            separation=d["separation"],
            kept_idx=tuple(d["kept_idx"]),
            aliased=tuple(d["aliased"]),
        )


def log_likelihood(beta, X, y):
    """Bernoulli log-likelihood at ``beta`` (columns already selected)."""
    eta = X @ beta
    # sum_i [y_i eta_i - log(1 + exp(eta_i))], stable at large |eta|
    return float(y @ eta - np.logaddexp(0.0, eta).sum())


def score(beta, X, y):
    """Gradient of the log-likelihood: X'(y - pi)."""
    if X.shape[1] != len(beta):
        raise ValueError("dimension mismatch between design and coefficients")
    return X.T @ (y - expit(X @ beta))


def fit_logit(
    X,
    y,
    max_iter=DEFAULT_MAX_ITER,
    tol=DEFAULT_TOL,
    coef_bound=COEF_BOUND,
    coef_names=None,
    design=None,
    start=None,
):
    """Fit a logistic regression by IRLS.

    Parameters
    ----------
    X : (n, p+1) array
        Design matrix whose first column is the intercept.
    y : (n,) array of 0/1
    max_iter, tol : iteration cap and score max-norm tolerance. The
        iteration runs on a column-rescaled design (each column divided
        by its absolute maximum), so both the tolerance and the bound
        are unit-free.
    coef_bound : divergence bound on the rescaled coefficients; crossing
        it with a still-improving likelihood flags separation and stops.
    coef_names : optional names, defaults to x0..xp
    start : optional warm-start coefficients over the full design

    Returns
    -------
    LogitModel
    """
    X = as_float_matrix(X)
    y = as_binary_array(y).astype(np.float64)
    n, p1 = X.shape
    if len(y) != n:
        raise ValueError("X and y disagree on the number of rows")
    if n == 0:
        raise ValueError("empty data")
    if not np.all(X[:, 0] == 1.0):
        raise ValueError("first design column must be the intercept")
    if coef_names is None:
        coef_names = tuple(f"x{j}" for j in range(p1))
    if len(coef_names) != p1:
        raise ValueError("coef_names length mismatch")

    kept, aliased_idx = _drop_aliased(X)
    aliased = tuple(coef_names[j] for j in aliased_idx)
    names = tuple(coef_names[j] for j in kept)
    pk = len(kept)
    if n < pk:
        raise ValueError(f"need at least {pk} rows to estimate {pk} coefficients")

    if pk == 1:
        return _fit_intercept_only(y, names, kept, aliased, design)

    # iterate on a column-rescaled design so convergence and the
    # divergence bound are unit-free; coefficients map back at the end
    scales = np.maximum(np.max(np.abs(X[:, kept]), axis=0), 1e-12)
    Xk = X[:, kept] / scales

    beta = np.zeros(pk)
    if start is not None:
        s = np.asarray(start, dtype=np.float64)[list(kept)] * scales
        if np.all(np.isfinite(s)) and np.max(np.abs(s)) < coef_bound:
            beta = s.copy()
    ll = log_likelihood(beta, Xk, y)
    converged = False
    separation = SEPARATION_NONE
    it = 0
    for it in range(1, max_iter + 1):
        pi = expit(Xk @ beta)
        g = Xk.T @ (y - pi)
        if np.max(np.abs(g)) < tol:
            converged = True
            it -= 1
            break
        w = pi * (1.0 - pi)
        H = (Xk * w[:, None]).T @ Xk
        try:
            delta = np.linalg.solve(H, g)
        except np.linalg.LinAlgError:
            delta = np.linalg.lstsq(H, g, rcond=None)[0]
        # halve on likelihood decrease, allowing float-resolution slack so
        # a 1-ulp drop near the optimum cannot derail the Newton step
        slack = 1e-10 * (abs(ll) + 1.0)
        step = 1.0
        new_ll = log_likelihood(beta + delta, Xk, y)
        halvings = 0
        while new_ll < ll - slack and halvings < 30:
            step *= 0.5
            halvings += 1
            new_ll = log_likelihood(beta + step * delta, Xk, y)
        if new_ll < ll - slack:
            break
        beta = beta + step * delta
        ll = max(ll, new_ll)
        if np.max(np.abs(beta)) > coef_bound:
            separation = _classify_separation(Xk @ beta, y)
            break
    if not converged and separation == SEPARATION_NONE:
        # score as small as float accumulation allows counts as converged
        g = Xk.T @ (y - expit(Xk @ beta))
        converged = bool(np.max(np.abs(g)) <= 1e-8)

    pi = expit(Xk @ beta)
    if separation == SEPARATION_NONE:
        w = pi * (1.0 - pi)
        H = (Xk * w[:, None]).T @ Xk
        try:
            cov = np.linalg.inv(H)
            se = np.sqrt(np.maximum(np.diag(cov), 0.0)) / scales
        except np.linalg.LinAlgError:
            se = np.full(pk, np.nan)
    else:
        se = np.full(pk, np.nan)
        converged = False

    return LogitModel(
        coefficients=beta / scales,
        std_errors=se,
        coef_names=names,
        log_likelihood=ll,
        n_obs=n,
        n_iter=it,
        converged=converged,
        separation=separation,
        kept_idx=tuple(kept),
        aliased=aliased,
        design=design,
    )


def _fit_intercept_only(y, names, kept, aliased, design):
    # closed form: the MLE of the intercept is the logit of the prevalence
    n = len(y)
    pbar = float(np.mean(y))
    if pbar in (0.0, 1.0):
        beta0 = np.inf if pbar == 1.0 else -np.inf
        return LogitModel(
            coefficients=np.array([beta0]),
            std_errors=np.array([np.nan]),
            coef_names=names,
            log_likelihood=0.0,
            n_obs=n,
            n_iter=0,
            converged=False,
            separation=SEPARATION_COMPLETE,
            kept_idx=tuple(kept),
            aliased=aliased,
            design=design,
        )
    beta0 = float(np.log(pbar / (1.0 - pbar)))
    ll = n * (pbar * np.log(pbar) + (1.0 - pbar) * np.log(1.0 - pbar))
    se = float(np.sqrt(1.0 / (n * pbar * (1.0 - pbar))))
    return LogitModel(
        coefficients=np.array([beta0]),
        std_errors=np.array([se]),
        coef_names=names,
        log_likelihood=ll,
        n_obs=n,
        n_iter=0,
        converged=True,
        separation=SEPARATION_NONE,
        kept_idx=tuple(kept),
        aliased=aliased,
        design=design,
    )


def _classify_separation(eta, y):
    saturated = (2.0 * y - 1.0) * eta >= _SATURATION_ETA
    return SEPARATION_COMPLETE if bool(np.all(saturated)) else SEPARATION_QUASI


def _drop_aliased(X, rtol=1e-9):
    """Greedy in-order column selection; returns (kept, dropped) indices."""
    n, p = X.shape
    kept = []
    dropped = []
    basis = np.zeros((n, 0))
    for j in range(p):
        col = X[:, j]
        if basis.shape[1]:
            resid = col - basis @ (basis.T @ col)
        else:
            resid = col.copy()
        norm = np.linalg.norm(resid)
        if norm <= rtol * max(1.0, np.linalg.norm(col)):
            dropped.append(j)
            continue
        kept.append(j)
        basis = np.hstack([basis, (resid / norm)[:, None]])
    return kept, dropped


def predict_prob(model, x):
    """Probability for one encoded covariate row or a stack of rows."""
    arr = np.asarray(x, dtype=np.float64)
    if arr.ndim == 1:
        return float(model.predict_matrix(arr[None, :])[0])
    return model.predict_matrix(arr)


def classify(prob, config=ClassificationConfig()):
    """1 iff probability >= cutoff (boundary inclusive)."""
    p = np.asarray(prob)
    if np.any(p < 0) or np.any(p > 1):
        raise ValueError("probabilities must lie in [0, 1]")
    out = (p >= config.cutoff).astype(np.int8)
    return out if out.ndim else int(out)


def coefficient_table(model):
    """Two-line-per-coefficient text table: estimate over standard error."""
    width = max(len(n) for n in model.coef_names) + 2
    lines = []
    for name, b, s in zip(model.coef_names, model.coefficients, model.std_errors):
        lines.append(f"{name:<{width}s} {_fmt_coef(b):>10s}")
        lines.append(f"{'':<{width}s} {_fmt_se(s):>10s}")
    flags = []
    if not model.converged:
        flags.append("not converged")
    if model.separation != SEPARATION_NONE:
        flags.append(f"separation: {model.separation}")
    if model.aliased:
        flags.append("aliased: " + ", ".join(model.aliased))
    if flags:
        lines.append("[" + "; ".join(flags) + "]")
    return "\n".join(lines)


def _fmt_coef(b):
    if np.isposinf(b):
        return "Inf"
    if np.isneginf(b):
        return "-Inf"
    return f"{b:.3f}"


def _fmt_se(s):
    if not np.isfinite(s):
        return "(--.--)"
    return f"({s:.3f})"
