import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy import optimize

from loret.logit import (
    ClassificationConfig,
    classify,
    coefficient_table,
    fit_logit,
    log_likelihood,
    predict_prob,
    score,
)


def random_instance(rng, n=None, p=None):
    n = n or int(rng.integers(60, 500))
    p = p or int(rng.integers(1, 5))
    X = np.column_stack([np.ones(n), rng.normal(size=(n, p))])
    beta = rng.normal(scale=0.8, size=p + 1)
    pi = 1.0 / (1.0 + np.exp(-(X @ beta)))
    y = (rng.random(n) < pi).astype(np.int8)
    if y.min() == y.max():
        y[0] = 1 - y[0]
    return X, y


def direct_mle(X, y):
    """Independent maximizer of the same Bernoulli likelihood."""
    y = np.asarray(y, dtype=np.float64)

    def nll(b):
        eta = X @ b
        return float(np.logaddexp(0.0, eta).sum() - y @ eta)

    def grad(b):
        pi = 1.0 / (1.0 + np.exp(-(X @ b)))
        return X.T @ (pi - y)

    res = optimize.minimize(nll, np.zeros(X.shape[1]), jac=grad, method="BFGS",
                            options={"gtol": 1e-10, "maxiter": 500})
    return res.x


def test_intercept_only_prevalence():
    m = fit_logit(np.ones((10, 1)), np.array([1] * 7 + [0] * 3))
    assert m.coefficients[0] == pytest.approx(np.log(7 / 3), abs=1e-12)
    assert predict_prob(m, np.array([1.0])) == pytest.approx(0.7, abs=1e-12)
    assert m.converged and m.separation == "none"
    assert m.std_errors[0] > 0


def test_saturated_binary_matches_cell_prevalence():
    x = np.array([0] * 40 + [1] * 60, dtype=float)
    rng = np.random.default_rng(5)
    y = np.concatenate([rng.random(40) < 0.25, rng.random(60) < 0.7]).astype(int)
    X = np.column_stack([np.ones(100), x])
    m = fit_logit(X, y)
    pi = m.predict_matrix(X)
    assert pi[0] == pytest.approx(y[:40].mean(), abs=1e-9)
    assert pi[-1] == pytest.approx(y[40:].mean(), abs=1e-9)


def test_perfect_separation_flagged_complete():
    x = np.array([0, 0, 0, 0, 1, 1, 1, 1], dtype=float)
    m = fit_logit(np.column_stack([np.ones(8), x]), x.astype(int))
    assert m.separation == "complete"
    assert not m.converged
    assert np.all(np.isnan(m.std_errors))
    probs = m.predict_matrix(np.column_stack([np.ones(2), [0.0, 1.0]]))
    assert probs[0] < 0.01 and probs[1] > 0.99


def test_quasi_separation_flagged():
    # x=1 rows are pure; x=0 rows stay mixed
    x = np.array([0] * 40 + [1] * 20, dtype=float)
    y = np.array([0, 1] * 20 + [1] * 20)
    m = fit_logit(np.column_stack([np.ones(60), x]), y)
    assert m.separation == "quasi_complete"


def test_matches_direct_likelihood_maximizer():
    rng = np.random.default_rng(7)
    for _ in range(12):
        X, y = random_instance(rng)
        m = fit_logit(X, y)
        assert m.converged
        oracle = direct_mle(X, y)
        np.testing.assert_allclose(m.coefficients, oracle, atol=1e-5)
        g = score(m.coefficients, X[:, m.kept_idx], y)
        assert np.max(np.abs(g)) <= 1e-8


def test_score_matches_finite_differences():
    rng = np.random.default_rng(3)
    X, y = random_instance(rng, n=200, p=3)
    beta = rng.normal(size=4) * 0.5
    g = score(beta, X, y)
    h = 1e-6
    for j in range(4):
        e = np.zeros(4)
        e[j] = h
        num = (log_likelihood(beta + e, X, y) - log_likelihood(beta - e, X, y)) / (2 * h)
        assert abs(num - g[j]) <= 1e-4 * max(1.0, abs(g[j]))


def test_loglik_at_zero():
    X = np.ones((10, 1))
    y = np.array([0, 1] * 5)
    assert log_likelihood(np.zeros(1), X, y) == pytest.approx(10 * np.log(0.5))


def test_residuals_sum_to_zero_with_intercept():
    rng = np.random.default_rng(17)
    X, y = random_instance(rng, n=300, p=3)
    m = fit_logit(X, y)
    resid = y - m.predict_matrix(X)
    assert abs(resid.sum()) <= 1e-6 * len(y)


def test_prediction_invariant_to_row_order():
    rng = np.random.default_rng(23)
    X, y = random_instance(rng, n=250, p=3)
    perm = rng.permutation(len(y))
    m1 = fit_logit(X, y)
    m2 = fit_logit(X[perm], y[perm])
    np.testing.assert_allclose(m1.coefficients, m2.coefficients, atol=1e-9)


def test_rank_deficient_drops_later_columns():
    rng = np.random.default_rng(2)
    x1 = rng.normal(size=120)
    X = np.column_stack([np.ones(120), x1, 2.0 * x1])
    y = (rng.random(120) < 0.5).astype(int)
    m = fit_logit(X, y, coef_names=("(Intercept)", "a", "b"))
    assert m.aliased == ("b",)
    assert m.coef_names == ("(Intercept)", "a")


def test_empty_data_errors():
    with pytest.raises(ValueError):
        fit_logit(np.ones((0, 1)), np.array([], dtype=int))


def test_underdetermined_design_resolved_by_aliasing():
    # with fewer rows than columns the design is rank deficient; later
    # columns are dropped deterministically until it is estimable
    X = np.column_stack([np.ones(2), np.eye(2)])
    m = fit_logit(X, np.array([0, 1]), coef_names=("(Intercept)", "a", "b"))
    assert m.aliased == ("b",)


def test_classify_boundary_semantics():
    cfg = ClassificationConfig(0.5)
    assert classify(0.5, cfg) == 1
    assert classify(0.499, cfg) == 0
    assert np.all(classify(np.array([0.0, 0.3, 1.0]), ClassificationConfig(0.0)) == 1)
    with pytest.raises(ValueError):
        classify(1.5, cfg)
    with pytest.raises(ValueError):
        ClassificationConfig(-0.1)


@given(
    st.lists(st.floats(min_value=0, max_value=1), min_size=2, max_size=30),
    st.floats(min_value=0, max_value=1),
)
def test_classify_monotone_in_probability(probs, cutoff):
    cfg = ClassificationConfig(cutoff)
    calls = classify(np.array(sorted(probs)), cfg)
    assert np.all(np.diff(calls) >= 0)


def test_zero_coefficients_predict_half():
    m = fit_logit(np.ones((4, 1)), np.array([0, 1, 0, 1]))
    assert predict_prob(m, np.array([1.0])) == pytest.approx(0.5)


def test_neg_inf_intercept_predicts_zero():
    m = fit_logit(np.ones((6, 1)), np.zeros(6, dtype=int))
    assert m.separation == "complete"
    assert np.isneginf(m.coefficients[0])
    assert predict_prob(m, np.array([1.0])) == 0.0


def test_coefficient_table_layout():
    m = fit_logit(np.ones((10, 1)), np.array([1] * 7 + [0] * 3),
                  coef_names=("(Intercept)",))
    table = coefficient_table(m)
    lines = table.splitlines()
    assert "(Intercept)" in lines[0] and "0.847" in lines[0]
    assert "(" in lines[1]  # standard error row below the estimate

    sep = fit_logit(np.ones((5, 1)), np.ones(5, dtype=int),
                    coef_names=("(Intercept)",))
    table = coefficient_table(sep)
    assert "Inf" in table and "(--.--)" in table and "separation" in table
