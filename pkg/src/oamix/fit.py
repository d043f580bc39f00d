"""Ordinary least squares on a model matrix."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import ModelMatrix
from .errors import InsufficientDF, SchemaError
from .evaluate import named_inverse, prediction_variance
from .linalg import solve, xtx


@dataclass(frozen=True)
class FitResult:
    columns: tuple[str, ...]
    estimates: tuple[float, ...]
    se: tuple[float, ...]
    sigma_hat: float
    df_residual: int
    r_squared: float
    residuals: tuple[float, ...]
    fitted: tuple[float, ...]
    info_inv: np.ndarray

    def coefficient(self, name: str) -> float:
        return self.estimates[self.columns.index(name)]


def _constant_in_span(X: np.ndarray) -> bool:
    # least-squares projection of the all-ones vector onto the columns
    ones = np.ones(X.shape[0])
    coef, *_ = np.linalg.lstsq(X, ones, rcond=None)
    return bool(np.max(np.abs(X @ coef - ones)) <= 1e-8)


def ols_fit(X: ModelMatrix, y) -> FitResult:
    """Least-squares fit via the normal equations.

    Residuals are orthogonal to every column; se comes from
    sigma_hat^2 * diag((X'X)^-1). R-squared is computed about the response
    mean when the columns span a constant (intercept or a full simplex
    linear basis), about zero otherwise.
    """
    y = np.asarray(y, dtype=float)
    n, p = X.n, X.p
    if y.shape != (n,):
        raise SchemaError(f"response length {y.shape} does not match n={n}")
    if n <= p:
        raise InsufficientDF(f"n={n} <= p={p}")
    _, inv = named_inverse(X)  # raises SingularMatrix with column names
    beta = solve(xtx(X.data), X.data.T @ y)
    fitted = X.data @ beta
    resid = y - fitted
    rss = float(resid @ resid)
    df = n - p
    sigma_hat = np.sqrt(rss / df)
    se = sigma_hat * np.sqrt(np.diag(inv))
    if _constant_in_span(X.data):
        tss = float(np.sum((y - y.mean()) ** 2))
    else:
        tss = float(y @ y)
    r2 = 1.0 - rss / tss if tss > 0 else 1.0
    return FitResult(
        columns=X.columns,
        estimates=tuple(float(b) for b in beta),
        se=tuple(float(s) for s in se),
        sigma_hat=float(sigma_hat),
        df_residual=df,
        r_squared=float(r2),
        residuals=tuple(float(r) for r in resid),
        fitted=tuple(float(f) for f in fitted),
        info_inv=inv)


def predict(fit: FitResult, X_new: ModelMatrix) -> tuple[np.ndarray, np.ndarray]:
    """Predicted values and their variances sigma_hat^2 * v'(X'X)^-1 v."""
    if tuple(X_new.columns) != tuple(fit.columns):
        raise SchemaError(
            f"column mismatch: fit has {fit.columns}, new matrix has "
            f"{X_new.columns}")
    beta = np.array(fit.estimates)
    values = X_new.data @ beta
    variances = np.array([
        fit.sigma_hat ** 2 * prediction_variance(fit.info_inv, row)
        for row in X_new.data])
    return values, variances
