"""Reduced-rank regression and the trace / maximum-eigenvalue rank tests.

The eigenproblem is solved through a Cholesky reduction of S_kk to a
symmetric standard eigenproblem rather than by forming explicit inverses.
Critical values and p-values come from embedded tables simulated from the
asymptotic Brownian-motion functionals (see ``tools/gen_johansen_tables.py``);
p-values use a gamma fit to the first two moments of the asymptotic
distribution, clamped to [0.0001, 0.9999].
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np
from scipy import special as _special
from scipy import stats as _stats

from . import _johansen_tables
from .errors import DataError, NumericalError, SpecificationError
from .ingest import DummyMatrix, PricePanel, Scale, empty_dummies

P_FLOOR = 1e-4
P_CEIL = 0.9999


class JohansenCase(enum.Enum):
    """Deterministic specification of the cointegration test.

    Restricted terms enter the cointegration relation (they augment the
    lagged level); unrestricted terms are partialled out of the whole
    system.
    """

    NONE = 1
    RESTRICTED_CONST = 2
    UNRESTRICTED_CONST = 3
    RESTRICTED_TREND = 4
    UNRESTRICTED_TREND = 5

    @property
    def restricted_term(self) -> str | None:
        if self is JohansenCase.RESTRICTED_CONST:
            return "const"
        if self is JohansenCase.RESTRICTED_TREND:
            return "trend"
        return None

    @property
    def unrestricted_const(self) -> bool:
        return self in (JohansenCase.UNRESTRICTED_CONST,
                        JohansenCase.RESTRICTED_TREND,
                        JohansenCase.UNRESTRICTED_TREND)

    @property
    def unrestricted_trend(self) -> bool:
        return self is JohansenCase.UNRESTRICTED_TREND


def _partial_out(target: np.ndarray, given: np.ndarray) -> np.ndarray:
    if given.shape[1] == 0:
        return target
    coef, *_ = np.linalg.lstsq(given, target, rcond=None)
    return target - given @ coef


@dataclass(frozen=True)
class JohansenResult:
    """Eigen-decomposition underlying the rank tests.

    ``eigenvectors`` columns are normalized so that V' S_kk V = I; rows run
    over the K series plus the restricted deterministic row when the case
    has one (see ``row_labels``).
    """

    case: JohansenCase
    k: int
    names: tuple[str, ...]
    row_labels: tuple[str, ...]
    eigenvalues: np.ndarray      # (K,)
    eigenvectors: np.ndarray     # (rows, K)
    trace_stats: np.ndarray      # (K,) for r = 0..K-1
    maxeig_stats: np.ndarray
    trace_cv5: np.ndarray
    maxeig_cv5: np.ndarray
    trace_p: np.ndarray
    maxeig_p: np.ndarray
    s00: np.ndarray
    s0k: np.ndarray
    skk: np.ndarray
    t_eff: int

    def __post_init__(self):
        self._validate()

    def _validate(self) -> None:
        lam = self.eigenvalues
        if np.any(lam < -1e-10) or np.any(lam >= 1.0):
            raise NumericalError("eigenvalues outside [0, 1)")
        if np.any(np.diff(lam) > 1e-10):
            raise NumericalError("eigenvalues are not sorted descending")
        k = len(lam)
        tails = [-self.t_eff * np.sum(np.log1p(-lam[r:])) for r in range(k + 1)]
        if abs(tails[k]) > 1e-9:
            raise NumericalError("trace statistic at full rank is not zero")
        for r in range(k):
            if abs(self.trace_stats[r] - tails[r]) > 1e-6 * max(1.0, abs(tails[r])):
                raise NumericalError("trace statistics inconsistent with eigenvalues")
            gap = self.trace_stats[r] - (tails[r + 1] if r + 1 < k else 0.0)
            if abs(self.maxeig_stats[r] - gap) > 1e-9 * max(1.0, abs(gap)):
                raise NumericalError("trace/max-eigen identity violated")

    @property
    def nseries(self) -> int:
        return len(self.names)


def _asymptotic_entry(case: JohansenCase, dim: int) -> dict[str, float]:
    if dim > _johansen_tables.MAX_DIM:
        raise SpecificationError(
            f"no embedded critical values for K - r = {dim} (max "
            f"{_johansen_tables.MAX_DIM})")
    return _johansen_tables.MOMENTS[case.value][dim]


def _gamma_pvalue(stat: float, mean: float, var: float) -> float:
    if stat <= 0.0:
        return P_CEIL
    shape = mean * mean / var
    scale = var / mean
    p = float(_special.gammaincc(shape, stat / scale))
    return float(min(max(p, P_FLOOR), P_CEIL))


def _gamma_quantile(level: float, mean: float, var: float) -> float:
    shape = mean * mean / var
    scale = var / mean
    return float(_stats.gamma.ppf(1.0 - level, shape, scale=scale))


def reduced_rank_regression(panel: PricePanel, k: int,
                            case: JohansenCase = JohansenCase.UNRESTRICTED_CONST,
                            dummies: DummyMatrix | None = None) -> JohansenResult:
    """Johansen's reduced-rank regression at VAR order ``k``.

    First differences and the lagged level are partialled on the lagged
    differences, the unrestricted deterministic terms and the dummies; the
    generalized eigenproblem of the resulting product-moment matrices gives
    the eigenvalues and candidate cointegration vectors.  Dummies always
    enter unrestricted.
    """
    if panel.scale is Scale.DIFF:
        raise DataError("cointegration analysis expects a level or log panel")
    if k < 1:
        raise DataError("VAR order k must be at least 1")
    values = panel.values
    t_total, n_series = values.shape
    if t_total - k < n_series + 2:
        raise DataError("sample too short for the requested lag order")
    dummies = dummies if dummies is not None else empty_dummies(t_total)

    dy = values[1:] - values[:-1]
    rows = t_total - k            # t = k+1..T in 1-based terms
    z0 = dy[k - 1:]
    lagged_level = values[k - 1:t_total - 1]
    positions = np.arange(k, t_total, dtype=float) + 0.0  # index of t-1, 1-based

    if case.restricted_term == "const":
        z1 = np.column_stack([lagged_level, np.ones(rows)])
        labels = panel.names + ("C",)
    elif case.restricted_term == "trend":
        z1 = np.column_stack([lagged_level, positions])
        labels = panel.names + ("TREND",)
    else:
        z1 = lagged_level
        labels = panel.names

    z2_cols = [dy[k - 1 - j:t_total - 1 - j] for j in range(1, k)]
    if case.unrestricted_const:
        z2_cols.append(np.ones((rows, 1)))
    if case.unrestricted_trend:
        z2_cols.append((positions + 1.0).reshape(-1, 1))
    if dummies.ncols:
        z2_cols.append(dummies.rows(k))
    z2 = np.column_stack(z2_cols) if z2_cols else np.empty((rows, 0))

    r0 = _partial_out(z0, z2)
    r1 = _partial_out(z1, z2)
    s00 = r0.T @ r0 / rows
    s11 = r1.T @ r1 / rows
    s01 = r0.T @ r1 / rows

    try:
        chol11 = np.linalg.cholesky(s11)
    except np.linalg.LinAlgError as exc:
        raise NumericalError("S_kk is singular: levels are collinear") from exc
    try:
        s00_inv_s01 = np.linalg.solve(s00, s01)
    except np.linalg.LinAlgError as exc:
        raise NumericalError("S_00 is singular: differences are collinear") from exc

    inner = s01.T @ s00_inv_s01
    half = np.linalg.solve(chol11, inner)
    sym = np.linalg.solve(chol11, half.T).T
    sym = 0.5 * (sym + sym.T)
    eigvals, eigvecs = np.linalg.eigh(sym)
    order = np.argsort(-eigvals)
    lam = np.clip(eigvals[order][:n_series], 0.0, 1.0 - 1e-12)
    vectors = np.linalg.solve(chol11.T, eigvecs)[:, order][:, :n_series]

    trace = np.array([-rows * np.sum(np.log1p(-lam[r:]))
                      for r in range(n_series)])
    maxeig = -rows * np.log1p(-lam)

    trace_cv5, maxeig_cv5, trace_p, maxeig_p = [], [], [], []
    for r in range(n_series):
        entry = _asymptotic_entry(case, n_series - r)
        trace_cv5.append(entry["tr_cv5"])
        maxeig_cv5.append(entry["me_cv5"])
        trace_p.append(_gamma_pvalue(trace[r], entry["tr_mean"], entry["tr_var"]))
        maxeig_p.append(_gamma_pvalue(maxeig[r], entry["me_mean"], entry["me_var"]))

    return JohansenResult(case=case, k=k, names=panel.names, row_labels=labels,
                          eigenvalues=lam, eigenvectors=vectors,
                          trace_stats=trace, maxeig_stats=maxeig,
                          trace_cv5=np.array(trace_cv5),
                          maxeig_cv5=np.array(maxeig_cv5),
                          trace_p=np.array(trace_p),
                          maxeig_p=np.array(maxeig_p),
                          s00=s00, s0k=s01, skk=s11, t_eff=rows)


@dataclass(frozen=True)
class RankTestRow:
    rank: int                   # hypothesized rank under the null (r <= rank)
    eigenvalue: float
    statistic: float
    critical_value: float
    p_value: float
    reject: bool


@dataclass(frozen=True)
class RankTestTable:
    kind: str                   # "trace" or "max-eigen"
    level: float
    rows: tuple[RankTestRow, ...]

    @property
    def first_not_rejected(self) -> int | None:
        for row in self.rows:
            if not row.reject:
                return row.rank
        return None


def _rank_table(result: JohansenResult, level: float, kind: str) -> RankTestTable:
    stats = result.trace_stats if kind == "trace" else result.maxeig_stats
    pvals = result.trace_p if kind == "trace" else result.maxeig_p
    moment_keys = ("tr_mean", "tr_var") if kind == "trace" else ("me_mean", "me_var")
    rows = []
    for r in range(result.nseries):
        entry = _asymptotic_entry(result.case, result.nseries - r)
        if abs(level - 0.05) < 1e-12:
            cv = entry["tr_cv5" if kind == "trace" else "me_cv5"]
        else:
            cv = _gamma_quantile(level, entry[moment_keys[0]], entry[moment_keys[1]])
        rows.append(RankTestRow(rank=r,
                                eigenvalue=float(result.eigenvalues[r]),
                                statistic=float(stats[r]),
                                critical_value=float(cv),
                                p_value=float(pvals[r]),
                                reject=bool(pvals[r] < level)))
    return RankTestTable(kind, level, tuple(rows))


def trace_test(result: JohansenResult, level: float = 0.05) -> RankTestTable:
    """Per-rank trace test decisions with critical values and p-values."""
    return _rank_table(result, level, "trace")


def max_eigen_test(result: JohansenResult, level: float = 0.05) -> RankTestTable:
    """Per-rank maximum-eigenvalue test decisions."""
    return _rank_table(result, level, "max-eigen")


@dataclass(frozen=True)
class RankSelection:
    rank: int
    policy: str
    warnings: tuple[str, ...] = ()


def select_rank(trace_table: RankTestTable, maxeig_table: RankTestTable,
                policy: str = "trace") -> RankSelection:
    """Pick the cointegration rank as the first non-rejected hypothesis.

    ``policy`` is one of ``trace``, ``maxeig`` or ``agree``; the last
    requires both tests to give the same rank.  When every hypothesis is
    rejected the selection caps at K-1 and warns that full rank would
    suggest stationary levels.
    """
    if policy not in ("trace", "maxeig", "agree"):
        raise SpecificationError(f"unknown rank policy {policy!r}")
    k = len(trace_table.rows)

    def resolve(table: RankTestTable) -> tuple[int, tuple[str, ...]]:
        first = table.first_not_rejected
        if first is None:
            return k - 1, (f"all {table.kind} hypotheses rejected: full rank "
                           "suggests stationary levels",)
        return first, ()

    r_trace, warn_trace = resolve(trace_table)
    r_max, warn_max = resolve(maxeig_table)
    if policy == "trace":
        return RankSelection(r_trace, policy, warn_trace)
    if policy == "maxeig":
        return RankSelection(r_max, policy, warn_max)
    if r_trace != r_max:
        raise SpecificationError(
            f"trace selects rank {r_trace} but max-eigen selects {r_max}")
    return RankSelection(r_trace, policy, warn_trace + warn_max)
