"""ADF and Phillips-Perron unit-root tests with embedded p-value tables.

The p-values interpolate simulated Dickey-Fuller quantile tables (see
``tools/gen_df_tables.py``) over both the statistic and the regression
sample size, so no runtime dependency on external critical-value sources is
needed.  ``integration_order`` combines level and first-difference tests
into an I(0)/I(1)/inconclusive report per series.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import _df_tables
from ._ols import lagged_differences, ols
from .errors import DataError, NumericalError
from .ingest import PricePanel, Scale

P_FLOOR = 1e-4
P_CEIL = 0.9999


class Deterministic(enum.Enum):
    """Deterministic terms included in a unit-root regression."""

    NONE = "none"
    CONSTANT = "constant"
    CONSTANT_TREND = "constant+trend"

    @property
    def nterms(self) -> int:
        return {"none": 0, "constant": 1, "constant+trend": 2}[self.value]

    @property
    def table_key(self) -> str:
        return {"none": "n", "constant": "c", "constant+trend": "ct"}[self.value]


class Criterion(enum.Enum):
    AIC = "aic"
    SC = "sc"
    FIXED = "fixed"


@dataclass(frozen=True)
class UnitRootResult:
    statistic: float
    p_value: float
    lags_or_bandwidth: int
    spec: Deterministic
    n_effective: int
    method: str

    def __post_init__(self):
        if not 0.0 <= self.p_value <= 1.0:
            raise NumericalError("p-value outside [0, 1]")

    def rejects(self, level: float = 0.05) -> bool:
        return self.p_value < level


def _det_columns(nobs: int, spec: Deterministic) -> np.ndarray:
    cols = []
    if spec in (Deterministic.CONSTANT, Deterministic.CONSTANT_TREND):
        cols.append(np.ones(nobs))
    if spec is Deterministic.CONSTANT_TREND:
        cols.append(np.arange(1.0, nobs + 1.0))
    return np.column_stack(cols) if cols else np.empty((nobs, 0))


def _check_series(series: np.ndarray) -> np.ndarray:
    y = np.asarray(series, dtype=float).ravel()
    if not np.all(np.isfinite(y)):
        raise DataError("series contains missing or non-finite values")
    if np.ptp(y) == 0.0:
        raise NumericalError("zero-variance series: unit-root regression "
                             "is degenerate")
    return y


def _adf_regression(y: np.ndarray, k: int, spec: Deterministic):
    """Return (t-ratio of the lagged level, regression nobs) for lag order k."""
    lhs, level, lags = lagged_differences(y, k)
    x = np.column_stack([level, lags, _det_columns(len(lhs), spec)])
    fit = ols(lhs, x)
    return float(fit.tstat[0, 0]), fit.nobs


def adf_test(series, spec: Deterministic = Deterministic.CONSTANT,
             max_lag: int = 15, criterion: Criterion = Criterion.AIC) -> UnitRootResult:
    """Augmented Dickey-Fuller test.

    Regresses the first difference on the lagged level, ``k`` lagged
    differences and the deterministic terms.  For AIC/SC selection every
    candidate ``k`` in 0..max_lag is fitted on a common sample (the largest
    ``k`` decides the trimming) and ties go to the smaller ``k``; the chosen
    order is then re-fitted on its own full sample.  ``criterion='fixed'``
    uses ``k = max_lag`` directly.
    """
    y = _check_series(series)
    if max_lag < 0:
        raise DataError("max_lag must be non-negative")
    if len(y) <= max_lag + 2 + spec.nterms:
        raise DataError(f"series too short ({len(y)}) for max_lag={max_lag} "
                        f"with {spec.value} terms")

    if criterion is Criterion.FIXED or max_lag == 0:
        k = max_lag
    else:
        lhs_all, level_all, lags_all = lagged_differences(y, max_lag)
        det = _det_columns(len(lhs_all), spec)
        best = (math.inf, 0)
        for k_try in range(max_lag + 1):
            x = np.column_stack([level_all, lags_all[:, :k_try], det])
            fit = ols(lhs_all, x)
            nobs = fit.nobs
            sigma2_ml = fit.rss[0] / nobs
            penalty = 2.0 if criterion is Criterion.AIC else math.log(nobs)
            value = math.log(sigma2_ml) + penalty * x.shape[1] / nobs
            if value < best[0] - 1e-12:
                best = (value, k_try)
        k = best[1]

    stat, nobs = _adf_regression(y, k, spec)
    p = mackinnon_pvalue(stat, spec, nobs)
    return UnitRootResult(stat, p, k, spec, nobs, "ADF")


def newey_west_bandwidth(nobs: int) -> int:
    """Conventional automatic truncation lag, floor(4 (T/100)^(2/9))."""
    return int(math.floor(4.0 * (nobs / 100.0) ** (2.0 / 9.0)))


def bartlett_long_run_variance(resid: np.ndarray, bandwidth: int) -> float:
    """Bartlett-kernel long-run variance with the 1/T scaling."""
    u = np.asarray(resid, dtype=float)
    n = len(u)
    if bandwidth >= n:
        raise NumericalError("bandwidth must be smaller than the sample")
    value = float(u @ u) / n
    for j in range(1, bandwidth + 1):
        gamma = float(u[j:] @ u[:-j]) / n
        value += 2.0 * (1.0 - j / (bandwidth + 1.0)) * gamma
    return value


def pp_test(series, spec: Deterministic = Deterministic.CONSTANT,
            bandwidth: int | None = None) -> UnitRootResult:
    """Phillips-Perron test (tau statistic, Bartlett kernel).

    The OLS t-ratio from the k=0 Dickey-Fuller regression is corrected with
    a kernel long-run variance of the residuals.  With ``bandwidth=0`` the
    correction vanishes and the statistic equals the k=0 ADF statistic.
    Default bandwidth is the automatic rule floor(4 (T/100)^(2/9)).
    """
    y = _check_series(series)
    if len(y) < 10:
        raise DataError("Phillips-Perron test needs at least 10 observations")

    lhs, level, _ = lagged_differences(y, 0)
    x = np.column_stack([level, _det_columns(len(lhs), spec)])
    fit = ols(lhs, x)
    nobs = fit.nobs
    if bandwidth is None:
        bandwidth = newey_west_bandwidth(nobs)
    if bandwidth < 0:
        raise DataError("bandwidth must be non-negative")

    u = fit.resid[:, 0]
    gamma0 = float(u @ u) / nobs
    lam2 = bartlett_long_run_variance(u, bandwidth)
    t0 = float(fit.tstat[0, 0])
    se_pi = float(fit.se[0, 0])
    s = math.sqrt(float(fit.sigma2[0]))
    stat = math.sqrt(gamma0 / lam2) * t0 \
        - 0.5 * (lam2 - gamma0) / math.sqrt(lam2) * (nobs * se_pi / s)
    p = mackinnon_pvalue(stat, spec, nobs)
    return UnitRootResult(stat, p, bandwidth, spec, nobs, "PP")


def _interp_grid(spec_key: str, n: int) -> np.ndarray:
    """Quantile grid at sample size n, interpolated in 1/T between tables."""
    grids = _df_tables.QUANTILES[spec_key]
    sizes = sorted(size for size in grids if size > 0)
    if n <= sizes[0]:
        return np.asarray(grids[sizes[0]])
    inv = 1.0 / n
    anchors = [(1.0 / size, np.asarray(grids[size])) for size in sizes]
    anchors.append((0.0, np.asarray(grids[0])))
    anchors.sort(key=lambda item: item[0])  # ascending in 1/T
    for (x0, q0), (x1, q1) in zip(anchors, anchors[1:]):
        if x0 <= inv <= x1:
            w = 0.0 if x1 == x0 else (inv - x0) / (x1 - x0)
            return q0 * (1.0 - w) + q1 * w
    return np.asarray(grids[sizes[-1]])


def mackinnon_pvalue(statistic: float, spec: Deterministic, n: int = 0) -> float:
    """Approximate p-value of the Dickey-Fuller t-distribution.

    Interpolates the embedded response-surface quantile tables over the
    statistic and, when ``n > 0``, over the regression sample size
    (``n = 0`` requests the asymptotic distribution).  Monotone and
    continuous in the statistic; saturates at [1e-4, 0.9999].
    """
    if not math.isfinite(statistic):
        raise DataError("statistic must be finite")
    grid = _interp_grid(spec.table_key, int(n) if n else 10 ** 9)
    probs = np.asarray(_df_tables.PROBS)
    # pad the tails so the interpolation saturates smoothly at the bounds
    q = np.concatenate([[grid[0] - 2.0], grid, [grid[-1] + 2.0]])
    p = np.concatenate([[P_FLOOR], probs, [P_CEIL]])
    return float(np.clip(np.interp(statistic, q, p), P_FLOOR, P_CEIL))


@dataclass(frozen=True)
class SeriesIntegrationReport:
    name: str
    adf_level: UnitRootResult
    pp_level: UnitRootResult
    adf_diff: UnitRootResult
    pp_diff: UnitRootResult
    order: str  # "I(0)", "I(1)" or "inconclusive"


def classify_order(adf_level, pp_level, adf_diff, pp_diff,
                   level: float = 0.05) -> str:
    level_rejects = adf_level.rejects(level) and pp_level.rejects(level)
    level_accepts = not adf_level.rejects(level) and not pp_level.rejects(level)
    diff_rejects = adf_diff.rejects(level) and pp_diff.rejects(level)
    if level_rejects:
        return "I(0)"
    if level_accepts and diff_rejects:
        return "I(1)"
    return "inconclusive"


def integration_order(panel: PricePanel, max_lag: int = 15,
                      spec: Deterministic = Deterministic.CONSTANT,
                      level: float = 0.05) -> list[SeriesIntegrationReport]:
    """ADF and PP on levels and first differences for every series.

    A series is I(1) when both level tests fail to reject at ``level`` and
    both difference tests reject; I(0) when both level tests reject;
    otherwise inconclusive.
    """
    if panel.scale is Scale.DIFF:
        raise DataError("integration report expects a level or log panel")
    reports = []
    for j, name in enumerate(panel.names):
        y = panel.values[:, j]
        dy = np.diff(y)
        adf_level = adf_test(y, spec, max_lag)
        pp_level = pp_test(y, spec)
        adf_diff = adf_test(dy, spec, max_lag)
        pp_diff = pp_test(dy, spec)
        order = classify_order(adf_level, pp_level, adf_diff, pp_diff, level)
        reports.append(SeriesIntegrationReport(name, adf_level, pp_level,
                                               adf_diff, pp_diff, order))
    return reports
