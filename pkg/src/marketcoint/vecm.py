"""Vector error-correction estimation and likelihood-ratio restriction tests.

``fit_vecm`` takes the leading eigenvectors of the reduced-rank regression
as the long-run vectors, normalizes them on a pivot variable, and estimates
adjustment speeds and short-run dynamics by least squares with the
error-correction terms as generated regressors.

Restriction tests (fixed long-run coefficients, weak exogeneity, price
parity) maximize the reduced-rank likelihood under the restriction.  When
every cointegration vector is confined to the same subspace the restricted
maximum has an exact eigenproblem solution; otherwise a switching algorithm
alternates closed-form GLS updates of the long-run vectors, the adjustment
matrix and the residual covariance.  Both routes work on the product-moment
matrices only.

Reporting conventions:

* the error-correction term is centered to zero sample mean whenever the
  case puts an unrestricted constant in the model; the centering constant
  is reported as the constant row of the cointegration vector (no t-ratio,
  since it is a reporting construct rather than an estimated coefficient);
* t-ratios for normalized long-run coefficients use the likelihood-based
  asymptotic covariance  var(vec beta_free) =
  (alpha' Sigma^-1 alpha)^{-1} (x) (T_eff * H' S_kk H)^{-1},
  with H selecting the non-pivot rows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy import stats as _stats

from ._ols import ols
from .errors import DataError, NumericalError, SpecificationError
from .ingest import DummyMatrix, PricePanel, empty_dummies
from .johansen import (JohansenCase, JohansenResult, max_eigen_test,
                       reduced_rank_regression, select_rank, trace_test)
from .var import LOG_2PI

SWITCH_TOL = 1e-10
SWITCH_MAX_ITER = 10_000
SWITCH_STARTS = 4


def _logdet(matrix: np.ndarray) -> float:
    sign, value = np.linalg.slogdet(matrix)
    if sign <= 0:
        raise NumericalError("covariance matrix is not positive definite")
    return float(value)


def rank_loglik(result: JohansenResult, r: int) -> float:
    """Maximized log-likelihood of the reduced-rank model at rank r."""
    if not 0 <= r <= result.nseries:
        raise SpecificationError(f"rank {r} outside 0..{result.nseries}")
    k = result.nseries
    tail = float(np.sum(np.log1p(-result.eigenvalues[:r])))
    return -0.5 * result.t_eff * (k * (1.0 + LOG_2PI) + _logdet(result.s00) + tail)


def normalize_beta(beta: np.ndarray, pivot: int = 0,
                   labels: tuple[str, ...] | None = None
                   ) -> tuple[np.ndarray, list[str]]:
    """Scale each cointegration vector so the pivot row equals one.

    Also renders the solved long-run equations (the pivot variable
    expressed in the remaining rows).  A zero pivot coefficient is an
    error.
    """
    beta = np.atleast_2d(np.asarray(beta, dtype=float))
    if beta.shape[1] > beta.shape[0]:
        raise SpecificationError("beta must have vectors in columns")
    rows, r = beta.shape
    if not 0 <= pivot < rows:
        raise SpecificationError(f"pivot index {pivot} outside 0..{rows - 1}")
    if labels is None:
        labels = tuple(f"y{i + 1}" for i in range(rows))

    normalized = np.empty_like(beta)
    equations = []
    for j in range(r):
        scale = beta[pivot, j]
        if abs(scale) <= 1e-12 * max(1.0, float(np.abs(beta[:, j]).max())):
            raise NumericalError("pivot coefficient is zero; choose another "
                                 "variable")
        normalized[:, j] = beta[:, j] / scale
        terms = []
        for i in range(rows):
            if i == pivot:
                continue
            coef = -normalized[i, j]
            if labels[i] == "C":
                terms.append(f"{coef:+.4f}")
            else:
                terms.append(f"{coef:+.4f}*{labels[i]}")
        equations.append(f"{labels[pivot]} = " + " ".join(terms))
    return normalized, equations


@dataclass(frozen=True)
class VecmModel:
    """An estimated VECM at a given cointegration rank."""

    rank: int
    lags: int                    # number of lagged-difference terms (k - 1)
    case: JohansenCase
    names: tuple[str, ...]
    beta_labels: tuple[str, ...]
    beta: np.ndarray             # (rows, r), pivot-normalized
    beta_t: np.ndarray           # (rows, r); NaN at pivot / reporting rows
    alpha: np.ndarray            # (K, r)
    alpha_t: np.ndarray
    gamma: np.ndarray            # (lags, K, K); gamma[i][eq][var]
    gamma_t: np.ndarray
    det_coefs: np.ndarray        # (ndet, K) unrestricted deterministics
    det_t: np.ndarray
    dummy_names: tuple[str, ...]
    dummy_coefs: np.ndarray      # (ndum, K)
    dummy_t: np.ndarray
    resid: np.ndarray
    sigma_ml: np.ndarray
    sigma_df: np.ndarray
    nobs: int
    nparams_per_eq: int
    loglik: float
    eq_loglik: np.ndarray
    eq_aic: np.ndarray
    eq_sc: np.ndarray
    eq_adj_r2: np.ndarray
    ect: np.ndarray              # (T_eff, r)
    ect_dates: tuple[str, ...]
    pivot: int
    johansen: JohansenResult = field(repr=False)
    design: np.ndarray = field(repr=False)
    xtx_inv: np.ndarray = field(repr=False)

    @property
    def nseries(self) -> int:
        return len(self.names)

    @property
    def var_order(self) -> int:
        return self.lags + 1

    def long_run_matrix(self) -> np.ndarray:
        """Pi = alpha beta' restricted to the price rows."""
        return self.alpha @ self.beta[:self.nseries].T

    def to_var_coefs(self) -> np.ndarray:
        """Rewrite the fitted VECM as levels-VAR coefficient matrices."""
        k, p = self.nseries, self.var_order
        pi = np.zeros((p, k, k))
        gamma_prev = np.zeros((k, k))
        long_run = self.long_run_matrix()
        for i in range(p):
            gamma_i = self.gamma[i] if i < self.lags else np.zeros((k, k))
            pi[i] = gamma_i - gamma_prev
            if i == 0:
                pi[i] += np.eye(k) + long_run
            gamma_prev = gamma_i
        return pi


def _ect_columns(values: np.ndarray, beta: np.ndarray, case: JohansenCase,
                 k: int) -> tuple[np.ndarray, np.ndarray]:
    """ECT regressor columns for estimation rows, plus centering constants.

    ``beta`` is over the RRR rows (prices + restricted term).  Returns the
    (possibly centered) ECT matrix and the centering constants (one per
    vector; zeros when no centering applies).
    """
    t_total, n_series = values.shape
    lagged = values[k - 1:t_total - 1]
    positions = np.arange(k, t_total, dtype=float)
    if case.restricted_term == "const":
        z1 = np.column_stack([lagged, np.ones(len(lagged))])
    elif case.restricted_term == "trend":
        z1 = np.column_stack([lagged, positions])
    else:
        z1 = lagged
    raw = z1 @ beta
    if case.unrestricted_const:
        centers = -raw.mean(axis=0)
        return raw + centers, centers
    return raw, np.zeros(beta.shape[1])


def fit_vecm(panel: PricePanel, lags: int, r: int,
             case: JohansenCase = JohansenCase.UNRESTRICTED_CONST,
             dummies: DummyMatrix | None = None,
             pivot: int = 0) -> VecmModel:
    """Estimate a VECM with ``lags`` lagged differences at rank ``r``.

    The long-run vectors come from the leading eigenvectors of the
    reduced-rank regression; adjustment speeds, short-run matrices and
    deterministic/dummy coefficients come from least squares of the
    differences on the error-correction terms and the remaining regressors.
    """
    n_series = panel.nseries
    if not 1 <= r <= n_series - 1:
        raise SpecificationError(f"rank must lie in 1..{n_series - 1}")
    if lags < 1:
        raise SpecificationError("at least one lagged difference is required")
    k = lags + 1
    dummies = dummies if dummies is not None else empty_dummies(panel.nobs)
    rrr = reduced_rank_regression(panel, k, case, dummies)

    beta_raw = rrr.eigenvectors[:, :r]
    beta, _ = normalize_beta(beta_raw, pivot, rrr.row_labels)

    values = panel.values
    t_total = values.shape[0]
    rows = t_total - k
    dy = values[1:] - values[:-1]
    ect, centers = _ect_columns(values, beta, case, k)

    lag_cols = [dy[k - 1 - j:t_total - 1 - j] for j in range(1, k)]
    det_cols = []
    if case.unrestricted_const:
        det_cols.append(np.ones((rows, 1)))
    if case.unrestricted_trend:
        det_cols.append(np.arange(k + 1, t_total + 1, dtype=float).reshape(-1, 1))
    dummy_cols = dummies.rows(k)
    pieces = [ect, *lag_cols, *det_cols]
    if dummy_cols.shape[1]:
        pieces.append(dummy_cols)
    x = np.column_stack(pieces)
    y = dy[k - 1:]
    fit = ols(y, x)

    m = fit.nparams
    ndet = len(det_cols)
    alpha = fit.coef[:r].T
    alpha_t = fit.tstat[:r].T
    gamma = np.stack([fit.coef[r + i * n_series: r + (i + 1) * n_series].T
                      for i in range(lags)])
    gamma_t = np.stack([fit.tstat[r + i * n_series: r + (i + 1) * n_series].T
                        for i in range(lags)])
    det_start = r + lags * n_series
    det_coefs = fit.coef[det_start:det_start + ndet]
    det_t = fit.tstat[det_start:det_start + ndet]
    dummy_coefs = fit.coef[det_start + ndet:]
    dummy_t = fit.tstat[det_start + ndet:]

    sigma_ml = fit.resid.T @ fit.resid / rows
    loglik = -0.5 * rows * (n_series * (1.0 + LOG_2PI) + _logdet(sigma_ml))

    sigma2_ml = fit.rss / rows
    eq_loglik = -0.5 * rows * (1.0 + LOG_2PI + np.log(sigma2_ml))
    eq_aic = -2.0 * eq_loglik / rows + 2.0 * m / rows
    eq_sc = -2.0 * eq_loglik / rows + math.log(rows) * m / rows
    tss = np.sum((y - y.mean(axis=0)) ** 2, axis=0)
    eq_adj_r2 = 1.0 - (fit.rss / (rows - m)) / (tss / (rows - 1))

    # reported beta: append the centering constant row under the convention
    # described in the module docstring
    beta_labels = rrr.row_labels
    beta_rep = beta
    if case.unrestricted_const and case.restricted_term != "const":
        beta_rep = np.vstack([beta, centers])
        beta_labels = beta_labels + ("C",)

    beta_t = _beta_tstats(rrr, beta, alpha, sigma_ml, pivot)
    if beta_rep.shape[0] > beta_t.shape[0]:
        pad = np.full((beta_rep.shape[0] - beta_t.shape[0], r), np.nan)
        beta_t = np.vstack([beta_t, pad])

    est_dates = panel.dates[k:]
    return VecmModel(rank=r, lags=lags, case=case, names=panel.names,
                     beta_labels=beta_labels, beta=beta_rep, beta_t=beta_t,
                     alpha=alpha, alpha_t=alpha_t, gamma=gamma,
                     gamma_t=gamma_t, det_coefs=det_coefs, det_t=det_t,
                     dummy_names=dummies.names, dummy_coefs=dummy_coefs,
                     dummy_t=dummy_t, resid=fit.resid, sigma_ml=sigma_ml,
                     sigma_df=fit.resid.T @ fit.resid / (rows - m),
                     nobs=rows, nparams_per_eq=m, loglik=loglik,
                     eq_loglik=eq_loglik, eq_aic=eq_aic, eq_sc=eq_sc,
                     eq_adj_r2=eq_adj_r2, ect=ect,
                     ect_dates=tuple(est_dates), pivot=pivot,
                     johansen=rrr, design=x, xtx_inv=fit.xtx_inv)


def _beta_tstats(rrr: JohansenResult, beta: np.ndarray, alpha: np.ndarray,
                 sigma: np.ndarray, pivot: int) -> np.ndarray:
    """Likelihood-based asymptotic t-ratios for the normalized vectors."""
    rows, r = beta.shape
    free = [i for i in range(rows) if i != pivot]
    try:
        a_metric = alpha.T @ np.linalg.solve(sigma, alpha)
        info = np.linalg.inv(a_metric)
        s_free = rrr.skk[np.ix_(free, free)] * rrr.t_eff
        s_inv = np.linalg.inv(s_free)
    except np.linalg.LinAlgError as exc:
        raise NumericalError("singular information matrix for beta "
                             "inference") from exc
    out = np.full((rows, r), np.nan)
    for j in range(r):
        variances = info[j, j] * np.diag(s_inv)
        with np.errstate(divide="ignore", invalid="ignore"):
            out[free, j] = beta[free, j] / np.sqrt(variances)
    return out


def ect_series(model: VecmModel) -> tuple[tuple[str, ...], np.ndarray]:
    """(dates, values) of the error-correction terms, for plotting."""
    return model.ect_dates, model.ect


@dataclass(frozen=True)
class GrangerRow:
    dependent: str
    excluded: str               # a series name, or "All"
    statistic: float
    df: int
    p_value: float
    reject: bool


@dataclass(frozen=True)
class GrangerResult:
    level: float
    rows: tuple[GrangerRow, ...]

    def entry(self, dependent: str, excluded: str) -> GrangerRow:
        for row in self.rows:
            if row.dependent == dependent and row.excluded == excluded:
                return row
        raise KeyError((dependent, excluded))


def granger_wald(model: VecmModel, level: float = 0.05) -> GrangerResult:
    """Block-exclusion Wald tests on the lagged differences.

    For each dependent equation and each other variable, tests that all of
    that variable's lagged-difference coefficients are zero, using the
    equation's estimated coefficient covariance; the "All" row excludes
    every other variable's lags jointly.
    """
    k, lags, r = model.nseries, model.lags, model.rank
    if lags < 1:
        raise SpecificationError("Granger tests need at least one lagged "
                                 "difference")
    rows = []
    for eq in range(k):
        sigma2 = float(model.sigma_df[eq, eq])
        all_idx: list[int] = []
        for var in range(k):
            if var == eq:
                continue
            idx = [r + i * k + var for i in range(lags)]
            all_idx.extend(idx)
            stat = _wald(model, eq, idx, sigma2)
            p = float(_stats.chi2.sf(stat, lags))
            rows.append(GrangerRow(model.names[eq], model.names[var],
                                   stat, lags, p, p < level))
        stat = _wald(model, eq, all_idx, sigma2)
        df = (k - 1) * lags
        p = float(_stats.chi2.sf(stat, df))
        rows.append(GrangerRow(model.names[eq], "All", stat, df, p, p < level))
    return GrangerResult(level, tuple(rows))


def _wald(model: VecmModel, eq: int, idx: list[int], sigma2: float) -> float:
    coefs = np.array([model_coef(model)[i, eq] for i in idx])
    cov = sigma2 * model.xtx_inv[np.ix_(idx, idx)]
    try:
        solved = np.linalg.solve(cov, coefs)
    except np.linalg.LinAlgError as exc:
        raise NumericalError("singular coefficient covariance in Wald "
                             "test") from exc
    return float(coefs @ solved)


def model_coef(model: VecmModel) -> np.ndarray:
    """Full (m, K) coefficient matrix in design order."""
    pieces = [model.alpha.T]
    for i in range(model.lags):
        pieces.append(model.gamma[i].T)
    if model.det_coefs.size:
        pieces.append(model.det_coefs)
    if model.dummy_coefs.size:
        pieces.append(model.dummy_coefs)
    return np.vstack(pieces)


# ---------------------------------------------------------------------------
# restricted maximum likelihood


@dataclass(frozen=True)
class RestrictionSpec:
    """Fixed-value / free pattern for the cointegration vectors.

    ``pattern`` has one row per cointegration vector and one entry per RRR
    row (series plus restricted deterministic term); entries are numbers
    (fixed values) or None (free).  Each vector is identified only up to
    scale, so a pattern like (0, 1, 0, -1, None) pins the shape of the
    vector and leaves the deterministic entry free.
    """

    pattern: tuple[tuple[float | None, ...], ...]
    description: str = ""

    def __init__(self, pattern, description: str = ""):
        rows = tuple(tuple(entry) for entry in np.atleast_2d(np.array(pattern, dtype=object)))
        normalized = []
        for row in rows:
            normalized.append(tuple(None if v is None else float(v) for v in row))
        object.__setattr__(self, "pattern", tuple(normalized))
        object.__setattr__(self, "description", description)
        widths = {len(row) for row in self.pattern}
        if len(widths) != 1:
            raise SpecificationError("pattern rows have inconsistent lengths")

    @property
    def n_vectors(self) -> int:
        return len(self.pattern)

    @property
    def n_rows(self) -> int:
        return len(self.pattern[0])

    def spans(self) -> list[np.ndarray]:
        """Per-vector basis of the admissible subspace (span form)."""
        out = []
        for row in self.pattern:
            fixed = np.array([0.0 if v is None else v for v in row])
            columns = []
            if np.any(fixed != 0.0):
                columns.append(fixed)
            for i, v in enumerate(row):
                if v is None:
                    e = np.zeros(len(row))
                    e[i] = 1.0
                    columns.append(e)
            if not columns:
                raise SpecificationError("a restriction row fixes every "
                                         "entry to zero")
            out.append(np.column_stack(columns))
        return out


@dataclass(frozen=True)
class RestrictionResult:
    lr: float
    df: int
    p_value: float
    loglik_restricted: float
    loglik_unrestricted: float
    beta_restricted: np.ndarray
    description: str = ""
    converged: bool = True
    iterations: int = 0

    def reject(self, level: float = 0.05) -> bool:
        return self.p_value < level


def _common_span(spans: list[np.ndarray]) -> np.ndarray | None:
    """The shared basis if all spans have identical column space."""
    first = spans[0]
    q0, _ = np.linalg.qr(first)
    for other in spans[1:]:
        if other.shape != first.shape:
            return None
        q1, _ = np.linalg.qr(other)
        if not np.allclose(q0 @ (q0.T @ q1), q1, atol=1e-10):
            return None
    return first


def _restricted_exact(s00, s01, s11, n, r, h):
    """Restricted log-likelihood with all vectors in span(h): eigenproblem."""
    s11_h = h.T @ s11 @ h
    s01_h = s01 @ h
    try:
        chol = np.linalg.cholesky(s11_h)
        s00_inv_s01 = np.linalg.solve(s00, s01_h)
    except np.linalg.LinAlgError as exc:
        raise NumericalError("singular moment matrix under restriction") from exc
    inner = s01_h.T @ s00_inv_s01
    half = np.linalg.solve(chol, inner)
    sym = np.linalg.solve(chol, half.T).T
    eigvals, eigvecs = np.linalg.eigh(0.5 * (sym + sym.T))
    order = np.argsort(-eigvals)
    lam = np.clip(eigvals[order], 0.0, 1.0 - 1e-12)
    if r > len(lam):
        raise SpecificationError("restricted span too small for the rank")
    k = s00.shape[0]
    tail = float(np.sum(np.log1p(-lam[:r])))
    loglik = -0.5 * n * (k * (1.0 + LOG_2PI) + _logdet(s00) + tail)
    phi = np.linalg.solve(chol.T, eigvecs[:, order])[:, :r]
    return loglik, h @ phi


def _alpha_step(syx, sxx, sigma, zero_rows):
    """GLS update of alpha under zero rows, given beta moments and Sigma."""
    k = syx.shape[0]
    if not zero_rows:
        return np.linalg.solve(sxx.T, syx.T).T
    free = [i for i in range(k) if i not in zero_rows]
    prec = np.linalg.inv(sigma)
    lhs = prec[np.ix_(free, free)]
    rhs = prec[free] @ syx
    alpha_free = np.linalg.solve(lhs, rhs) @ np.linalg.inv(sxx)
    alpha = np.zeros_like(syx)
    alpha[free] = alpha_free
    return alpha


def _beta_step(s01, s11, alpha, sigma, spans):
    """GLS update of the long-run vectors given alpha and Sigma."""
    r = alpha.shape[1]
    prec = np.linalg.solve(sigma, alpha)          # Sigma^-1 alpha, (K, r)
    a_metric = alpha.T @ prec                     # (r, r)
    c = prec.T @ s01                              # (r, rows)
    sizes = [h.shape[1] for h in spans]
    total = sum(sizes)
    g = np.zeros((total, total))
    rhs = np.zeros(total)
    offset_i = 0
    for i in range(r):
        h_i = spans[i]
        rhs[offset_i:offset_i + sizes[i]] = h_i.T @ c[i]
        offset_j = 0
        for j in range(r):
            h_j = spans[j]
            g[offset_i:offset_i + sizes[i], offset_j:offset_j + sizes[j]] = \
                a_metric[i, j] * (h_i.T @ s11 @ h_j)
            offset_j += sizes[j]
        offset_i += sizes[i]
    try:
        phi = np.linalg.solve(g, rhs)
    except np.linalg.LinAlgError as exc:
        raise NumericalError("singular system in the beta step") from exc
    beta = np.zeros((s11.shape[0], r))
    offset = 0
    for i in range(r):
        beta[:, i] = spans[i] @ phi[offset:offset + sizes[i]]
        offset += sizes[i]
    return beta


def _loglik_given_beta(s00, s01, s11, n, beta, zero_rows=()):
    """Concentrated log-likelihood at fixed beta (alpha, Sigma maximized).

    With alpha-row restrictions the maximization over (alpha, Sigma)
    requires iterating the GLS alpha update with the implied covariance.
    """
    k = s00.shape[0]
    sxx = beta.T @ s11 @ beta
    syx = s01 @ beta
    sigma = s00 - syx @ np.linalg.solve(sxx, syx.T)
    if not zero_rows:
        return -0.5 * n * (k * (1.0 + LOG_2PI) + _logdet(sigma)), sigma
    sigma = s00
    prev = -np.inf
    for _ in range(SWITCH_MAX_ITER):
        alpha = _alpha_step(syx, sxx, sigma, zero_rows)
        sigma = (s00 - syx @ alpha.T - alpha @ syx.T
                 + alpha @ sxx @ alpha.T)
        loglik = -0.5 * n * (k * (1.0 + LOG_2PI) + _logdet(sigma))
        if loglik - prev < SWITCH_TOL * max(1.0, abs(loglik)):
            break
        prev = loglik
    return loglik, sigma


def _restricted_ml(s00, s01, s11, n, r, spans=None, alpha_zero_rows=(),
                   beta_start=None, rng_seed=0):
    """Maximize the reduced-rank likelihood under restrictions by switching.

    ``spans`` is a per-vector list of basis matrices (None means
    unrestricted), ``alpha_zero_rows`` the equation indices whose adjustment
    row is pinned to zero.  Multiple perturbed starts guard against local
    maxima; convergence is declared when the log-likelihood improves by
    less than SWITCH_TOL.
    """
    rows = s11.shape[0]
    if spans is None:
        spans = [np.eye(rows) for _ in range(r)]
    alpha_zero = tuple(sorted(set(alpha_zero_rows)))

    if beta_start is None:
        chol = np.linalg.cholesky(s11)
        inner = s01.T @ np.linalg.solve(s00, s01)
        half = np.linalg.solve(chol, inner)
        sym = np.linalg.solve(chol, half.T).T
        eigvals, eigvecs = np.linalg.eigh(0.5 * (sym + sym.T))
        order = np.argsort(-eigvals)
        beta_start = np.linalg.solve(chol.T, eigvecs)[:, order][:, :r]

    rng = np.random.default_rng(rng_seed)
    best = (-np.inf, None, False, 0)
    for start in range(SWITCH_STARTS):
        beta = np.column_stack([
            h @ np.linalg.lstsq(h, beta_start[:, i], rcond=None)[0]
            for i, h in enumerate(spans)])
        if start > 0:
            beta = beta + 0.1 * start * rng.standard_normal(beta.shape)
            beta = np.column_stack([
                h @ np.linalg.lstsq(h, beta[:, i], rcond=None)[0]
                for i, h in enumerate(spans)])
        for i in range(r):
            norm = np.linalg.norm(beta[:, i])
            beta[:, i] = beta[:, i] / norm if norm > 1e-12 else spans[i][:, 0]

        prev = -np.inf
        converged = False
        iterations = 0
        loglik, sigma = _loglik_given_beta(s00, s01, s11, n, beta, alpha_zero)
        for iterations in range(1, SWITCH_MAX_ITER + 1):
            sxx = beta.T @ s11 @ beta
            syx = s01 @ beta
            alpha = _alpha_step(syx, sxx, sigma, alpha_zero)
            beta = _beta_step(s01, s11, alpha, sigma, spans)
            for i in range(r):
                norm = np.linalg.norm(beta[:, i])
                if norm > 1e-12:
                    beta[:, i] /= norm
            loglik, sigma = _loglik_given_beta(s00, s01, s11, n, beta, alpha_zero)
            if abs(loglik - prev) < SWITCH_TOL * max(1.0, abs(loglik)):
                converged = True
                break
            prev = loglik
        if loglik > best[0]:
            best = (loglik, beta, converged, iterations)
    if best[1] is None:
        raise NumericalError("restricted estimation failed to produce a "
                             "candidate")
    return best


def restriction_df(spec: RestrictionSpec, r: int) -> int:
    """Binding constraints beyond normalization: sum of (rows - s_i - r + 1)."""
    spans = spec.spans()
    return int(sum(spec.n_rows - h.shape[1] - r + 1 for h in spans))


def _scale_to_pattern(beta: np.ndarray, spec: RestrictionSpec) -> np.ndarray:
    """Rescale restricted vectors so fixed entries equal the pattern values."""
    out = beta.copy()
    for i, row in enumerate(spec.pattern):
        fixed = np.array([0.0 if v is None else v for v in row])
        denom = fixed @ fixed
        if denom <= 0:
            continue
        a = (fixed @ beta[:, i]) / denom
        if abs(a) > 1e-12:
            out[:, i] = beta[:, i] / a
    return out


def restriction_lr_test(panel: PricePanel, lags: int, r: int,
                        case: JohansenCase, dummies: DummyMatrix | None,
                        spec: RestrictionSpec) -> RestrictionResult:
    """Likelihood-ratio test of fixed entries in the cointegration vectors.

    The restricted likelihood is maximized exactly (eigenproblem) when all
    vectors share one admissible subspace, and by the switching algorithm
    otherwise.  The statistic is 2(logL_u - logL_r) with a chi-square
    p-value at ``restriction_df`` degrees of freedom.
    """
    if spec.n_vectors != r:
        raise SpecificationError(f"restriction has {spec.n_vectors} rows "
                                 f"but rank is {r}")
    rrr = reduced_rank_regression(panel, lags + 1, case, dummies)
    if spec.n_rows != rrr.eigenvectors.shape[0]:
        raise SpecificationError(
            f"restriction rows ({spec.n_rows}) do not match the "
            f"cointegration vector length ({rrr.eigenvectors.shape[0]})")
    df = restriction_df(spec, r)
    if df <= 0:
        raise SpecificationError(f"over-restricted or untestable pattern "
                                 f"(df = {df})")
    loglik_u = rank_loglik(rrr, r)
    spans = spec.spans()
    common = _common_span(spans)
    if common is not None:
        loglik_r, beta = _restricted_exact(rrr.s00, rrr.s0k, rrr.skk,
                                           rrr.t_eff, r, common)
        converged, iterations = True, 0
    else:
        loglik_r, beta, converged, iterations = _restricted_ml(
            rrr.s00, rrr.s0k, rrr.skk, rrr.t_eff, r, spans)
        if not converged:
            raise NumericalError("switching algorithm did not converge")
    lr = 2.0 * (loglik_u - loglik_r)
    if lr < -1e-6 * max(1.0, abs(loglik_u)):
        raise NumericalError("restricted likelihood exceeds unrestricted")
    lr = max(lr, 0.0)
    return RestrictionResult(lr=lr, df=df,
                             p_value=float(_stats.chi2.sf(lr, df)),
                             loglik_restricted=loglik_r,
                             loglik_unrestricted=loglik_u,
                             beta_restricted=_scale_to_pattern(beta, spec),
                             description=spec.description,
                             converged=converged, iterations=iterations)


def weak_exogeneity_test(panel: PricePanel, lags: int, r: int,
                         case: JohansenCase, dummies: DummyMatrix | None,
                         variable: int | str) -> RestrictionResult:
    """LR test that one variable's adjustment row is zero (df = r)."""
    if isinstance(variable, str):
        variable = panel.names.index(variable)
    if not 0 <= variable < panel.nseries:
        raise SpecificationError(f"variable index {variable} out of range")
    rrr = reduced_rank_regression(panel, lags + 1, case, dummies)
    loglik_u = rank_loglik(rrr, r)
    loglik_r, beta, converged, iterations = _restricted_ml(
        rrr.s00, rrr.s0k, rrr.skk, rrr.t_eff, r,
        alpha_zero_rows=(variable,))
    if not converged:
        raise NumericalError("switching algorithm did not converge")
    lr = max(2.0 * (loglik_u - loglik_r), 0.0)
    return RestrictionResult(lr=lr, df=r,
                             p_value=float(_stats.chi2.sf(lr, r)),
                             loglik_restricted=loglik_r,
                             loglik_unrestricted=loglik_u,
                             beta_restricted=beta,
                             description=f"alpha[{panel.names[variable]}] = 0",
                             converged=converged, iterations=iterations)


@dataclass(frozen=True)
class PairwiseLopRow:
    region_i: str
    region_j: str
    lr: float
    df: int
    p_value: float
    reject: bool


@dataclass(frozen=True)
class PairwiseLopTable:
    level: float
    rows: tuple[PairwiseLopRow, ...]

    def entry(self, region_i: str, region_j: str) -> PairwiseLopRow:
        key = {region_i, region_j}
        for row in self.rows:
            if {row.region_i, row.region_j} == key:
                return row
        raise KeyError((region_i, region_j))

    @property
    def holding_pairs(self) -> list[tuple[str, str]]:
        return [(r.region_i, r.region_j) for r in self.rows if not r.reject]


def _pair_pattern(n_rows: int, n_series: int, i: int, j: int) -> list[float | None]:
    pattern: list[float | None] = [0.0] * n_series
    pattern[i] = 1.0
    pattern[j] = -1.0
    pattern += [None] * (n_rows - n_series)
    return pattern


def pairwise_lop(panel: PricePanel, lags: int, r: int, case: JohansenCase,
                 dummies: DummyMatrix | None,
                 level: float = 0.01) -> PairwiseLopTable:
    """Price-parity LR test for every unordered pair of regions.

    Each pair imposes the (1, -1) pattern on the cointegration vector,
    leaving any restricted deterministic entry free; decisions are taken at
    ``level`` (default 1%).
    """
    if r != 1:
        raise SpecificationError("pairwise parity tests are defined for "
                                 "rank 1")
    rrr_rows = panel.nseries + (1 if case.restricted_term else 0)
    rows = []
    for i in range(panel.nseries):
        for j in range(i + 1, panel.nseries):
            spec = RestrictionSpec(
                [_pair_pattern(rrr_rows, panel.nseries, i, j)],
                description=f"{panel.names[i]} = {panel.names[j]}")
            res = restriction_lr_test(panel, lags, r, case, dummies, spec)
            rows.append(PairwiseLopRow(panel.names[i], panel.names[j],
                                       res.lr, res.df, res.p_value,
                                       res.p_value < level))
    return PairwiseLopTable(level, tuple(rows))


def joint_lop_test(panel: PricePanel, lags: int, case: JohansenCase,
                   dummies: DummyMatrix | None,
                   rank_level: float = 0.05) -> RestrictionResult:
    """Joint parity test across all regions (requires rank K-1).

    The hypothesis confines each of the K-1 cointegration vectors to a
    pairwise parity pattern (first region against each other region), which
    is the sum-to-zero structure of the joint law-of-one-price.  The
    cointegration rank is selected by the trace test at ``rank_level``; any
    other rank makes the joint hypothesis untestable and raises.
    """
    k = panel.nseries
    rrr = reduced_rank_regression(panel, lags + 1, case, dummies)
    selection = select_rank(trace_test(rrr, rank_level),
                            max_eigen_test(rrr, rank_level), "trace")
    if selection.rank != k - 1:
        raise SpecificationError(
            f"joint LOP untestable at rank {selection.rank}: "
            f"{k - 1} cointegration relationships are required")
    rrr_rows = rrr.eigenvectors.shape[0]
    pattern = [_pair_pattern(rrr_rows, k, 0, j) for j in range(1, k)]
    spec = RestrictionSpec(pattern, description="joint price parity")
    return restriction_lr_test(panel, lags, k - 1, case, dummies, spec)
