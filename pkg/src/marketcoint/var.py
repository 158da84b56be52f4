"""VAR(p) estimation in levels, lag-order selection and residual diagnostics.

Conventions (chosen to make the reported criteria reproducible):

* equation-by-equation OLS on the common sample rows p+1..T;
* the system log-likelihood uses the Gaussian likelihood with the ML
  residual covariance (denominator T_eff);
* AIC = (-2 logL + 2 n) / T_eff with n the total parameter count across
  equations, SC and HQ analogous, FPE = ((T_eff + m)/(T_eff - m))^K |Sigma|
  with m the per-equation regressor count;
* the sequential lag-selection LR statistic is (T_eff - m_l) times the drop
  in log |Sigma| where m_l is the per-equation regressor count of the larger
  model;
* t-statistics use the per-equation residual variance with denominator
  T_eff - m.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy import stats as _stats

from ._ols import OlsFit, ols
from .errors import DataError, NumericalError
from .ingest import DummyMatrix, PricePanel, empty_dummies

LOG_2PI = math.log(2.0 * math.pi)


@dataclass(frozen=True)
class DetTerms:
    """Deterministic terms in a VAR: constant and/or linear trend."""

    constant: bool = True
    trend: bool = False

    @property
    def count(self) -> int:
        return int(self.constant) + int(self.trend)

    def columns(self, positions: np.ndarray) -> np.ndarray:
        cols = []
        if self.constant:
            cols.append(np.ones(len(positions)))
        if self.trend:
            cols.append(positions.astype(float))
        return np.column_stack(cols) if cols else np.empty((len(positions), 0))


def _var_design(values: np.ndarray, p: int, det: DetTerms,
                dummies: DummyMatrix, offset: int = 0):
    """Design and dependent matrices for a VAR(p) on rows offset+p+1..T.

    Column layout: K*p lag columns (lag 1 variables first), then
    deterministic terms, then dummies.  ``offset`` trims extra initial rows
    so different orders can share a common sample.
    """
    t_total, k = values.shape
    start = p + offset
    if start >= t_total:
        raise DataError("sample too short for requested lag order")
    y = values[start:]
    lag_cols = [values[start - lag:t_total - lag] for lag in range(1, p + 1)]
    positions = np.arange(start + 1, t_total + 1, dtype=float)
    det_cols = det.columns(positions)
    dummy_cols = dummies.rows(start)
    x = np.column_stack([c for c in (*lag_cols, det_cols, dummy_cols)
                         if c.shape[1] > 0]) if (p or det.count or dummies.ncols) \
        else np.empty((len(y), 0))
    return y, x


def _sigma_ml(resid: np.ndarray) -> np.ndarray:
    n = resid.shape[0]
    return resid.T @ resid / n


def _logdet(matrix: np.ndarray) -> float:
    sign, value = np.linalg.slogdet(matrix)
    if sign <= 0:
        raise NumericalError("residual covariance is singular")
    return float(value)


def system_loglik(sigma_ml: np.ndarray, nobs: int) -> float:
    k = sigma_ml.shape[0]
    return -0.5 * nobs * (k * (1.0 + LOG_2PI) + _logdet(sigma_ml))


def system_ic(loglik: float, n_params: int, nobs: int) -> tuple[float, float, float]:
    """(AIC, SC, HQ) from the system log-likelihood and total parameter count."""
    base = -2.0 * loglik / nobs
    aic = base + 2.0 * n_params / nobs
    sc = base + math.log(nobs) * n_params / nobs
    hq = base + 2.0 * math.log(math.log(nobs)) * n_params / nobs
    return aic, sc, hq


@dataclass(frozen=True)
class VarModel:
    """An estimated VAR(p) with deterministic terms and impulse dummies."""

    order: int
    names: tuple[str, ...]
    det: DetTerms
    dummy_names: tuple[str, ...]
    lag_coefs: np.ndarray        # (p, K, K); lag_coefs[i][eq][var]
    det_coefs: np.ndarray        # (ndet, K)
    dummy_coefs: np.ndarray      # (ndum, K)
    coef: np.ndarray             # full (m, K) coefficient matrix
    tstat: np.ndarray            # (m, K)
    resid: np.ndarray            # (T_eff, K)
    sigma_ml: np.ndarray
    sigma_df: np.ndarray
    nobs: int
    nparams_per_eq: int
    loglik: float
    aic: float
    sc: float
    hq: float
    eq_loglik: np.ndarray        # (K,)
    eq_aic: np.ndarray
    eq_sc: np.ndarray
    eq_adj_r2: np.ndarray
    design: np.ndarray = field(repr=False)
    dependent: np.ndarray = field(repr=False)
    xtx_inv: np.ndarray = field(repr=False)

    @property
    def nseries(self) -> int:
        return len(self.names)


def _per_equation_stats(fit: OlsFit, y: np.ndarray):
    n, k = y.shape
    sigma2_ml = fit.rss / n
    loglik = -0.5 * n * (1.0 + LOG_2PI + np.log(sigma2_ml))
    m = fit.nparams
    aic = -2.0 * loglik / n + 2.0 * m / n
    sc = -2.0 * loglik / n + math.log(n) * m / n
    tss = np.sum((y - y.mean(axis=0)) ** 2, axis=0)
    with np.errstate(divide="ignore", invalid="ignore"):
        adj_r2 = 1.0 - (fit.rss / (n - m)) / (tss / (n - 1))
    return loglik, aic, sc, adj_r2


def fit_var(panel: PricePanel, p: int, det: DetTerms = DetTerms(),
            dummies: DummyMatrix | None = None) -> VarModel:
    """Estimate a VAR(p) by least squares on rows p+1..T."""
    if p < 0:
        raise DataError("lag order must be non-negative")
    values = panel.values
    k = values.shape[1]
    dummies = dummies if dummies is not None else empty_dummies(panel.nobs)
    if dummies.values.shape[0] != panel.nobs:
        raise DataError("dummy matrix length does not match panel")
    y, x = _var_design(values, p, det, dummies)
    if x.shape[1] == 0:
        raise DataError("model has no regressors; include lags or terms")
    fit = ols(y, x)

    m = fit.nparams
    lag_coefs = np.stack([fit.coef[i * k:(i + 1) * k].T for i in range(p)]) \
        if p else np.empty((0, k, k))
    det_coefs = fit.coef[p * k:p * k + det.count]
    dummy_coefs = fit.coef[p * k + det.count:]
    sigma_ml = _sigma_ml(fit.resid)
    loglik = system_loglik(sigma_ml, fit.nobs)
    aic, sc, hq = system_ic(loglik, k * m, fit.nobs)
    eq_loglik, eq_aic, eq_sc, eq_adj_r2 = _per_equation_stats(fit, y)

    return VarModel(order=p, names=panel.names, det=det,
                    dummy_names=dummies.names, lag_coefs=lag_coefs,
                    det_coefs=det_coefs, dummy_coefs=dummy_coefs,
                    coef=fit.coef, tstat=fit.tstat, resid=fit.resid,
                    sigma_ml=sigma_ml,
                    sigma_df=fit.resid.T @ fit.resid / (fit.nobs - m),
                    nobs=fit.nobs, nparams_per_eq=m, loglik=loglik,
                    aic=aic, sc=sc, hq=hq, eq_loglik=eq_loglik,
                    eq_aic=eq_aic, eq_sc=eq_sc, eq_adj_r2=eq_adj_r2,
                    design=x, dependent=y, xtx_inv=fit.xtx_inv)


@dataclass(frozen=True)
class LagSelectionRow:
    lag: int
    loglik: float
    lr: float | None
    lr_p: float | None
    fpe: float
    aic: float
    sc: float
    hq: float


@dataclass(frozen=True)
class LagSelectionTable:
    rows: tuple[LagSelectionRow, ...]
    selected: dict[str, int]
    level: float = 0.05

    def row(self, lag: int) -> LagSelectionRow:
        return self.rows[lag]


def lag_order_selection(panel: PricePanel, max_lag: int,
                        det: DetTerms = DetTerms(),
                        dummies: DummyMatrix | None = None,
                        level: float = 0.05) -> LagSelectionTable:
    """Information criteria for VAR orders 0..max_lag on a common sample.

    All candidates are estimated on rows max_lag+1..T so the criteria are
    comparable.  LR is the sequential modified statistic comparing lag l to
    l-1; its selection is the largest l whose test rejects at ``level``.
    Ties in the minimised criteria go to the smaller lag.
    """
    if max_lag < 1:
        raise DataError("max_lag must be at least 1")
    values = panel.values
    k = values.shape[1]
    dummies = dummies if dummies is not None else empty_dummies(panel.nobs)

    rows = []
    logdets = []
    for lag in range(max_lag + 1):
        y, x = _var_design(values, lag, det, dummies, offset=max_lag - lag)
        if x.shape[1] == 0:
            # lag 0 with no deterministic or dummy terms: residuals = y
            resid = y
            m = 0
        else:
            fit = ols(y, x)
            resid = fit.resid
            m = fit.nparams
        nobs = y.shape[0]
        sigma = _sigma_ml(resid)
        logdet = _logdet(sigma)
        loglik = -0.5 * nobs * (k * (1.0 + LOG_2PI) + logdet)
        aic, sc, hq = system_ic(loglik, k * m, nobs)
        fpe = ((nobs + m) / (nobs - m)) ** k * math.exp(logdet)
        if lag == 0:
            lr = lr_p = None
        else:
            lr = (nobs - m) * (logdets[-1] - logdet)
            lr_p = float(_stats.chi2.sf(lr, k * k))
        logdets.append(logdet)
        rows.append(LagSelectionRow(lag, loglik, lr, lr_p, fpe, aic, sc, hq))

    def argmin(values_: list[float]) -> int:
        best, best_i = math.inf, 0
        for i, v in enumerate(values_):
            tol = 1e-12 * max(abs(v), abs(best) if best != math.inf else 0.0)
            if v < best - tol:
                best, best_i = v, i
        return best_i

    selected = {
        "fpe": argmin([r.fpe for r in rows]),
        "aic": argmin([r.aic for r in rows]),
        "sc": argmin([r.sc for r in rows]),
        "hq": argmin([r.hq for r in rows]),
    }
    lr_choice = 0
    for lag in range(max_lag, 0, -1):
        row = rows[lag]
        if row.lr_p is not None and row.lr_p < level:
            lr_choice = lag
            break
    selected["lr"] = lr_choice
    return LagSelectionTable(tuple(rows), selected, level)


@dataclass(frozen=True)
class SerialTestRow:
    h: int
    lre: float
    df: int
    p: float
    rao_f: float
    df1: int
    df2: float
    p_f: float


def lm_serial_test(model: VarModel, h_max: int) -> tuple[SerialTestRow, ...]:
    """Residual serial-correlation LM tests at lags h = 1..h_max.

    For each h the residuals are regressed on the original regressors plus
    the residuals lagged h periods (initial values zero-filled).  Reported
    are the Edgerton-Shukur small-sample LR statistic (df K^2) and the Rao F
    approximation with its fractional denominator degrees of freedom.
    """
    if h_max < 1:
        raise DataError("h_max must be at least 1")
    u = model.resid
    nobs, k = u.shape
    sigma0 = _sigma_ml(u)
    logdet0 = _logdet(sigma0)
    q = k                      # regressors added per equation
    df = k * q
    s = math.sqrt((k * k * q * q - 4.0) / (k * k + q * q - 5.0)) \
        if (k * k + q * q) > 5 else 1.0

    rows = []
    for h in range(1, h_max + 1):
        lagged = np.zeros_like(u)
        lagged[h:] = u[:-h]
        x_aux = np.column_stack([model.design, lagged])
        if x_aux.shape[0] <= x_aux.shape[1]:
            raise DataError(f"insufficient residual sample for LM test at h={h}")
        fit = ols(u, x_aux)
        logdet1 = _logdet(_sigma_ml(fit.resid))
        lam = math.exp(logdet1 - logdet0)
        m_aux = x_aux.shape[1]
        n_corr = nobs - m_aux - 0.5 * (k - q + 1)
        lre = -n_corr * (logdet1 - logdet0)
        p = float(_stats.chi2.sf(lre, df))
        df2 = n_corr * s - 0.5 * df + 1.0
        lam_s = lam ** (1.0 / s)
        rao = (1.0 - lam_s) / lam_s * df2 / df
        p_f = float(_stats.f.sf(rao, df, df2))
        rows.append(SerialTestRow(h, lre, df, p, rao, df, df2, p_f))
    return tuple(rows)


@dataclass(frozen=True)
class NormalityComponent:
    component: int
    jarque_bera: float
    df: int
    p: float
    skewness: float
    excess_kurtosis: float


@dataclass(frozen=True)
class NormalityReport:
    components: tuple[NormalityComponent, ...]
    joint: float
    joint_df: int
    joint_p: float


def jb_from_orthogonalized(v: np.ndarray) -> NormalityReport:
    """Jarque-Bera per component plus the joint statistic."""
    n, k = v.shape
    centered = v - v.mean(axis=0)
    m2 = np.mean(centered ** 2, axis=0)
    skew = np.mean(centered ** 3, axis=0) / m2 ** 1.5
    kurt = np.mean(centered ** 4, axis=0) / m2 ** 2 - 3.0
    jb = n * (skew ** 2 / 6.0 + kurt ** 2 / 24.0)
    components = tuple(
        NormalityComponent(i + 1, float(jb[i]), 2,
                           float(_stats.chi2.sf(jb[i], 2)),
                           float(skew[i]), float(kurt[i]))
        for i in range(k))
    joint = float(jb.sum())
    return NormalityReport(components, joint, 2 * k,
                           float(_stats.chi2.sf(joint, 2 * k)))


def jarque_bera_test(model: VarModel) -> NormalityReport:
    """Multivariate normality test on Cholesky-orthogonalized residuals.

    The ordering of the panel columns fixes the orthogonalization, so the
    per-component statistics depend on it; the joint statistic is the sum of
    the components.
    """
    try:
        chol = np.linalg.cholesky(model.sigma_ml)
    except np.linalg.LinAlgError as exc:
        raise NumericalError("singular residual covariance") from exc
    v = np.linalg.solve(chol, model.resid.T).T
    return jb_from_orthogonalized(v)


@dataclass(frozen=True)
class StabilityReport:
    roots: tuple[complex, ...]
    moduli: tuple[float, ...]
    stable: bool


def companion_matrix(lag_coefs: np.ndarray) -> np.ndarray:
    p, k, _ = lag_coefs.shape
    if p == 0:
        return np.zeros((0, 0))
    top = np.concatenate(list(lag_coefs), axis=1)
    bottom = np.eye(k * (p - 1), k * p) if p > 1 else np.empty((0, k))
    return np.vstack([top, bottom]) if p > 1 else top


def stability_roots(model: VarModel) -> StabilityReport:
    """Companion-matrix eigenvalues sorted by modulus, flagging stability."""
    comp = companion_matrix(model.lag_coefs)
    eig = np.linalg.eigvals(comp) if comp.size else np.empty(0, dtype=complex)
    order = np.argsort(-np.abs(eig))
    roots = tuple(complex(z) for z in eig[order])
    moduli = tuple(float(abs(z)) for z in roots)
    return StabilityReport(roots, moduli, all(m < 1.0 for m in moduli))
