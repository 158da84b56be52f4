"""Least-squares core shared by the estimation modules.

All estimators in this package reduce to multivariate OLS with a common
regressor matrix, so one carefully written routine serves them all.  QR is
used for numerical stability; rank deficiency raises instead of silently
returning a pseudo-inverse solution.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NumericalError


@dataclass(frozen=True)
class OlsFit:
    """Equation-by-equation OLS of ``y`` (T x K) on a common ``x`` (T x m).

    ``sigma2`` uses the degrees-of-freedom denominator ``T - m``;
    ``xtx_inv`` is (X'X)^-1, from which coefficient covariances follow as
    ``sigma2[j] * xtx_inv``.
    """

    coef: np.ndarray          # (m, K)
    resid: np.ndarray         # (T, K)
    rss: np.ndarray           # (K,)
    sigma2: np.ndarray        # (K,) df-adjusted
    se: np.ndarray            # (m, K)
    tstat: np.ndarray         # (m, K)
    xtx_inv: np.ndarray       # (m, m)
    nobs: int
    nparams: int

    @property
    def df_resid(self) -> int:
        return self.nobs - self.nparams


def ols(y: np.ndarray, x: np.ndarray, rcond: float = 1e-10) -> OlsFit:
    """Fit y = x b + u by least squares, raising on rank deficiency."""
    y = np.atleast_2d(np.asarray(y, dtype=float))
    if y.shape[0] == 1 and y.size > 1:
        y = y.T
    x = np.asarray(x, dtype=float)
    if x.ndim != 2:
        raise NumericalError("regressor matrix must be 2-D")
    nobs, m = x.shape
    if y.shape[0] != nobs:
        raise NumericalError("y and x have different numbers of rows")
    if nobs <= m:
        raise NumericalError(f"insufficient observations: {nobs} rows for "
                             f"{m} regressors")

    q, r = np.linalg.qr(x)
    diag = np.abs(np.diag(r))
    if m and diag.min() <= rcond * max(diag.max(), 1.0):
        raise NumericalError("rank-deficient regressor matrix")

    coef = np.linalg.solve(r, q.T @ y)
    resid = y - x @ coef
    rss = np.einsum("tk,tk->k", resid, resid)
    sigma2 = rss / (nobs - m)

    r_inv = np.linalg.solve(r, np.eye(m))
    xtx_inv = r_inv @ r_inv.T
    se = np.sqrt(np.outer(np.diag(xtx_inv), sigma2))
    with np.errstate(divide="ignore", invalid="ignore"):
        tstat = np.where(se > 0, coef / se, np.nan)
    return OlsFit(coef=coef, resid=resid, rss=rss, sigma2=sigma2, se=se,
                  tstat=tstat, xtx_inv=xtx_inv, nobs=nobs, nparams=m)


def lagged_differences(values: np.ndarray, k: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Build (dy_t, y_{t-1}, [dy_{t-1} .. dy_{t-k}]) aligned on a common sample.

    ``values`` is a 1-D series; rows run over t = k+1 .. T-1 in difference
    indexing, i.e. the regression sample has ``len(values) - 1 - k`` rows.
    """
    y = np.asarray(values, dtype=float)
    dy = np.diff(y)
    total = dy.shape[0]
    rows = total - k
    if rows <= 0:
        raise NumericalError("series too short for requested lag order")
    lhs = dy[k:]
    level = y[k:-1]
    lags = np.column_stack([dy[k - j:total - j] for j in range(1, k + 1)]) \
        if k else np.empty((rows, 0))
    return lhs, level, lags
