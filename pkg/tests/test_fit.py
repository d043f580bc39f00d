import numpy as np
import pytest

from oamix.catalog import czitrom_d_oofa
from oamix.core import ModelMatrix, ModelSpec
from oamix.errors import InsufficientDF, SchemaError
from oamix.fit import ols_fit, predict
from oamix.modelmat import build_model_matrix, default_interaction_subset


def t3_matrix(block=True):
    spec = ModelSpec("scheffe_quadratic", include_pwo=True,
                     interaction_terms=default_interaction_subset(3),
                     include_block=block)
    return build_model_matrix(czitrom_d_oofa(), spec)


def test_noiseless_recovery():
    X = t3_matrix()
    beta0 = np.ones(X.p)
    fit = ols_fit(X, X.data @ beta0)
    assert np.max(np.abs(np.array(fit.estimates) - beta0)) <= 1e-8
    assert fit.sigma_hat <= 1e-8


def test_residual_orthogonality():
    X = t3_matrix()
    rng = np.random.default_rng(101)
    y = X.data @ rng.normal(size=X.p) + rng.normal(scale=0.4, size=X.n)
    fit = ols_fit(X, y)
    resid = np.array(fit.residuals)
    assert np.max(np.abs(X.data.T @ resid)) <= 1e-8 * np.max(np.abs(y))
    assert np.array(fit.fitted) + resid == pytest.approx(y, abs=1e-10)


def test_block_only_response_separates():
    X = t3_matrix()
    y = X.column("blk").copy()
    fit = ols_fit(X, y)
    for name, est in zip(fit.columns, fit.estimates):
        if name == "blk":
            assert est == pytest.approx(1.0, abs=1e-8)
        else:
            assert est == pytest.approx(0.0, abs=1e-8)


def test_intercept_only_column():
    X = ModelMatrix(("1",), np.ones((3, 1)))
    fit = ols_fit(X, [1.0, 2.0, 3.0])
    assert fit.estimates[0] == pytest.approx(2.0)
    assert fit.sigma_hat == pytest.approx(1.0)
    assert fit.df_residual == 2


def test_block_removal_leaves_other_estimates():
    rng = np.random.default_rng(103)
    Xb = t3_matrix(block=True)
    y = Xb.data @ rng.normal(size=Xb.p) + rng.normal(scale=0.3, size=Xb.n)
    with_block = ols_fit(Xb, y)
    without_block = ols_fit(t3_matrix(block=False), y)
    for name, est in zip(without_block.columns, without_block.estimates):
        est_b = with_block.coefficient(name)
        assert est == pytest.approx(est_b, abs=1e-8)


def test_r_squared_bounds_with_simplex_basis():
    rng = np.random.default_rng(107)
    X = t3_matrix()
    y = X.data @ rng.normal(size=X.p) + rng.normal(scale=0.5, size=X.n)
    fit = ols_fit(X, y)
    assert 0.0 <= fit.r_squared <= 1.0


def test_insufficient_df():
    X = ModelMatrix(("a", "b"), np.eye(2))
    with pytest.raises(InsufficientDF):
        ols_fit(X, [1.0, 2.0])


def test_response_length_check():
    X = t3_matrix()
    with pytest.raises(SchemaError):
        ols_fit(X, np.ones(7))


def test_predict_reproduces_fitted_values():
    X = t3_matrix()
    rng = np.random.default_rng(109)
    y = X.data @ rng.normal(size=X.p) + rng.normal(scale=0.2, size=X.n)
    fit = ols_fit(X, y)
    values, variances = predict(fit, X)
    assert values == pytest.approx(np.array(fit.fitted), abs=1e-10)
    # highest-leverage training row has the largest prediction variance
    inv = fit.info_inv
    pv = np.einsum("ij,jk,ik->i", X.data, inv, X.data)
    assert variances == pytest.approx(fit.sigma_hat ** 2 * pv, rel=1e-10)
    assert np.max(pv) == pytest.approx(0.922, abs=0.02)


def test_predict_checks_columns():
    X = t3_matrix()
    rng = np.random.default_rng(113)
    y = X.data @ np.ones(X.p) + rng.normal(scale=0.1, size=X.n)
    fit = ols_fit(X, y)
    with pytest.raises(SchemaError):
        predict(fit, t3_matrix(block=False))


def test_noiseless_prediction_matches_truth():
    X = t3_matrix()
    beta0 = np.linspace(1.0, 2.0, X.p)
    fit = ols_fit(X, X.data @ beta0)
    values, variances = predict(fit, X)
    assert values == pytest.approx(X.data @ beta0, abs=1e-8)
    assert np.max(variances) <= 1e-12
