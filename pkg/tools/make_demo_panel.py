"""Construct the bundled synthetic four-region monthly beef-price panel.

The demo panel is generated, not observed: a rank-1 error-correction system
drives four regional log-price series, and the innovation sequence is
post-processed (projection and moment surgery) so that re-estimating the
published pipeline on the panel reproduces a fixed set of reference values
exactly or near-exactly:

* the normalized long-run vector, adjustment speeds, short-run matrices,
  drift and impulse-dummy coefficients of the rank-1 VECM are recovered
  exactly by construction (innovations orthogonal to the realized design);
* the four cointegration eigenvalues are pinned exactly through a designed
  correlation structure between the innovations and the non-cointegrating
  directions of the lagged levels;
* the information-criterion level at the selected VAR order is pinned by a
  final global scaling, and the error-correction constant by a final level
  shift (both leave every other statistic unchanged);
* remaining stochastic features (lag-order selection pattern, causality
  decisions, parity-test statistics, unit-root statistics) are steered by a
  seed search plus small calibration loops and recorded, target by target,
  in data/fixture_report.json.

Run from the repository root:

    python3 tools/make_demo_panel.py            # full build
    python3 tools/make_demo_panel.py --verify   # re-verify the shipped CSV

The build is deterministic given the seed constants below.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from marketcoint import (Criterion, Deterministic, DetTerms, JohansenCase,
                         PricePanel, Scale, adf_test, build_dummies,
                         fit_var, fit_vecm, granger_wald, jarque_bera_test,
                         lag_order_selection, lm_serial_test, pairwise_lop,
                         pp_test, reduced_rank_regression, stability_roots)
from marketcoint.ingest import DummySpec, format_month, parse_month
from marketcoint.johansen import max_eigen_test, select_rank, trace_test

# ---------------------------------------------------------------------------
# calibration targets (the reference results the panel is built to reproduce)

START_MONTH = "1998-01"
T_TOTAL = 275
K = 4
NAMES = ("MW", "NE", "SO", "WE")
VAR_ORDER = 5                      # final specification; VECM uses 4 lags
DUMMY_DATES = {"D1": "2003-11", "D2": "2016-11", "D3": "2018-01",
               "D4": "2020-07", "D5": "2020-05"}

BETA = np.array([1.0, 1.9085, -1.1484, -1.7319])
CE_CONST = -0.0477
ALPHA = np.array([-0.0293, -0.0665, -0.0436, 0.0482])

# short-run matrices: entry [eq][var] multiplies d(var) at the given lag
_GAMMA_PRINTED = {  # rows: regressor variable, columns: equation MW NE SO WE
    1: [[-0.3070, 0.1947, 0.1698, 0.1061],
        [0.1682, -0.1932, 0.1898, 0.2162],
        [0.1352, 0.0653, -0.2882, 0.2337],
        [0.1070, 0.0857, 0.1340, -0.1578]],
    2: [[-0.1326, 0.0791, 0.1686, 0.0047],
        [0.0662, -0.0996, 0.1085, 0.0007],
        [0.0483, -0.1092, -0.3366, 0.1220],
        [0.0053, -0.0269, 0.0221, -0.1240]],
    3: [[-0.2033, 0.0857, 0.0077, -0.0486],
        [0.0483, 0.0147, 0.0665, -0.1046],
        [0.0703, -0.0139, -0.1587, 0.0941],
        [-0.0143, -0.0170, -0.1271, -0.1628]],
    4: [[-0.0387, 0.0204, 0.0033, -0.0433],
        [0.0245, -0.0662, 0.0953, 0.0616],
        [-0.0983, 0.0724, -0.0490, 0.1515],
        [0.0355, -0.0005, -0.0904, -0.0803]],
}
GAMMA = np.stack([np.array(_GAMMA_PRINTED[i]).T for i in range(1, 5)])

DRIFT = np.array([0.0023, 0.0021, 0.0032, 0.0021])
PHI = np.array([  # [eq][dummy]; columns D1..D5
    [0.1910, 0.0434, -0.0119, -0.0309, -0.0894],
    [0.1263, 0.1080, -0.0741, 0.1149, -0.0977],
    [0.0811, 0.0689, 0.0052, 0.0056, -0.0924],
    [0.0562, 0.0622, -0.0372, -0.0052, -0.1163],
])

EQ_LOGLIK = np.array([634.13, 681.95, 697.55, 645.59])   # per-equation, T=270
EIGENVALUES = np.array([0.099385, 0.057750, 0.018547, 0.002395])
AIC_AT_3 = -19.48544

ADF_LEVEL_TARGETS = np.array([-1.02, -1.19, -1.25, -0.84])
PP_LEVEL_TARGETS = np.array([-1.21, -1.12, -1.16, -0.84])
GRANGER_TARGETS = {  # (dependent, excluded) -> (stat, rejected at 5%)
    ("MW", "NE"): (5.33, False), ("MW", "SO"): (4.63, False),
    ("MW", "WE"): (2.68, False),
    ("NE", "MW"): (12.22, True), ("NE", "SO"): (5.98, False),
    ("NE", "WE"): (2.93, False),
    ("SO", "MW"): (14.73, True), ("SO", "NE"): (13.65, True),
    ("SO", "WE"): (14.23, True),
    ("WE", "MW"): (4.27, False), ("WE", "NE"): (16.99, True),
    ("WE", "SO"): (7.94, False),
}
LOP_TARGETS = {  # unordered pair -> (LR, rejected at 1%)
    ("MW", "NE"): (18.38, True), ("MW", "SO"): (19.73, True),
    ("MW", "WE"): (16.75, True), ("NE", "SO"): (22.44, True),
    ("NE", "WE"): (0.04, False), ("SO", "WE"): (19.74, True),
}
TRACE_R0 = 50.02568
MAXEIG_R0 = 28.26276

BASE_SEED = 188_502_117
P_INIT_BASE = np.array([1.80, 1.86, 1.75, 1.83])

CASE = JohansenCase.UNRESTRICTED_CONST
LOG_2PI = float(np.log(2.0 * np.pi))


def sigma_diagonal() -> np.ndarray:
    """Per-equation residual variances implied by the equation log-likelihoods."""
    return np.exp(-(2.0 * EQ_LOGLIK / 270.0 + 1.0 + LOG_2PI))


def annihilate(matrix: np.ndarray, w: np.ndarray) -> np.ndarray:
    """Remove the w-combination of the equation rows from a coefficient block."""
    return matrix - np.outer(w, w @ matrix) / (w @ w)


@dataclass
class GenParams:
    """Everything needed to generate and surgically adjust one panel."""

    alpha: np.ndarray
    gamma: np.ndarray           # (4, K, K)
    drift: np.ndarray
    phi: np.ndarray             # (K, 5)
    sigma: np.ndarray           # innovation covariance target
    w: np.ndarray               # parity-gap direction (NE = WE residual)
    rotation: np.ndarray        # (3, 3) junk canonical-correlation assignment
    mode_amps: np.ndarray       # (n_directions, n_modes) level-shape knobs
    p_init: np.ndarray


def parity_direction() -> np.ndarray:
    v = np.array([0.0, 1.0, 0.0, -1.0])
    c0 = 1.0 / BETA[1]
    return v - c0 * BETA


SIGMA_SCALE = np.array([1.0, 1.0, 1.0, 1.0])     # per-equation tuning
# lag-wise shrinkage of the short-run matrices so the information criteria
# reproduce the published selection pattern (the marginal lags must sit just
# inside/outside the 5% window of the sequential LR test)
GAMMA_SCALES = np.array([1.0, 0.80, 0.70, 0.75])
# per-block boosts (dependent equation, excluded variable) applied to all
# four lags of one variable in one equation, for the causality calibration
GAMMA_BOOSTS: dict[tuple[int, int], float] = {}
M_HAT_TARGET = 0.0039       # keeps every adjustment t-ratio clear of 1.97


def make_gamma(scales: np.ndarray,
               boosts: dict[tuple[int, int], float]) -> np.ndarray:
    gamma = np.stack([scales[i] * GAMMA[i] for i in range(4)])
    for (eq, var), factor in boosts.items():
        gamma[:, eq, var] *= factor
    return gamma


def base_params() -> GenParams:
    return GenParams(
        alpha=ALPHA.copy(),
        gamma=make_gamma(GAMMA_SCALES, GAMMA_BOOSTS),
        drift=DRIFT.copy(),
        phi=PHI.copy(),
        sigma=np.eye(K),        # replaced by solve_sigma
        w=parity_direction(),
        rotation=np.eye(3),
        mode_amps=np.zeros((4, 3)),
        p_init=P_INIT_BASE.copy(),
    )


# ---------------------------------------------------------------------------
# innovation covariance with pinned diagonal, near-null parity direction and
# targeted alpha precision


def solve_sigma(params: GenParams, q_target: float,
                beta_var_target: float | None = None) -> np.ndarray:
    """Innovation covariance with pinned diagonal and designed quadratics.

    Constraints: per-equation variances (fixed diagonal),
    alpha' Sigma^-1 alpha = q_target (this pins the leading eigenvalue given
    the realized ECT moment), and optionally beta' Sigma beta (which steers
    the ECT moment itself).
    """
    from scipy.optimize import least_squares

    diag = sigma_diagonal() * SIGMA_SCALE ** 2
    alpha = params.alpha

    def build(rho):
        corr = np.eye(K)
        idx = np.triu_indices(K, 1)
        corr[idx] = rho
        corr[(idx[1], idx[0])] = rho
        scale = np.sqrt(diag)
        return corr * np.outer(scale, scale)

    def residuals(rho):
        sigma = build(rho)
        eigs = np.linalg.eigvalsh(sigma)
        if eigs.min() <= 1e-12:
            return np.full(4, 1e3 + abs(eigs.min()) * 1e6)
        q = float(alpha @ np.linalg.solve(sigma, alpha))
        parts = [
            (q - q_target) / q_target,
            0.02 * float(np.mean((rho - 0.35) ** 2)),
        ]
        if beta_var_target is not None:
            parts.append(3.0 * (float(BETA @ sigma @ BETA) / beta_var_target
                                - 1.0))
        return np.array(parts)

    start = np.full(6, 0.35)
    best = least_squares(residuals, start, bounds=(-0.2, 0.9995),
                         xtol=1e-15, ftol=1e-15, gtol=1e-15)
    return build(best.x)


# ---------------------------------------------------------------------------
# generation and surgery


def dummy_positions() -> list[int]:
    base = parse_month(START_MONTH)
    return [parse_month(d) - base for d in DUMMY_DATES.values()]


def dummy_matrix() -> np.ndarray:
    out = np.zeros((T_TOTAL, len(DUMMY_DATES)))
    for j, pos in enumerate(dummy_positions()):
        out[pos, j] = 1.0
    return out


def generate_path(params: GenParams, u: np.ndarray) -> np.ndarray:
    """Iterate the error-correction recursion from the initial five months."""
    k_order = VAR_ORDER
    d = dummy_matrix()
    p = np.zeros((T_TOTAL, K))
    p[:k_order] = params.p_init + DRIFT * np.arange(k_order)[:, None]
    dp = np.zeros((T_TOTAL, K))
    dp[1:k_order] = p[1:k_order] - p[:k_order - 1]
    for t in range(k_order, T_TOTAL):
        ect = BETA @ p[t - 1] + CE_CONST
        acc = params.alpha * ect + params.drift + params.phi @ d[t] \
            + u[t - k_order]
        for i in range(4):
            acc = acc + params.gamma[i] @ dp[t - 1 - i]
        dp[t] = acc
        p[t] = p[t - 1] + acc
    return p


def design_blocks(p: np.ndarray):
    """Estimation-row design pieces: lagged differences, ones, dummies, ECT."""
    k_order = VAR_ORDER
    dp = np.diff(p, axis=0)
    rows = T_TOTAL - k_order
    lags = np.column_stack([dp[k_order - 1 - j:T_TOTAL - 1 - j]
                            for j in range(1, k_order)])
    ones = np.ones((rows, 1))
    dmat = dummy_matrix()[k_order:]
    ect_raw = p[k_order - 1:-1] @ BETA
    return lags, ones, dmat, ect_raw


def surgery(params: GenParams, u: np.ndarray, p: np.ndarray,
            lam_targets: np.ndarray, m_hint: float | None = None):
    """One pass of projection + moment surgery on the innovations.

    Enforces, against the realized design geometry of ``p``:
      * zero innovations at the dummy months;
      * orthogonality to the lagged differences, the constant and the
        error-correction regressor (exact coefficient recovery);
      * designed cross-moments with the non-cointegrating directions of the
        lagged levels (pins the junk eigenvalues and the leading
        eigenvector);
      * an exact innovation covariance.

    Returns the adjusted innovations and the realized ECT moment.
    """
    lags, ones, dmat, ect_raw = design_blocks(p)
    rows = len(ones)
    z2 = np.column_stack([lags, ones, dmat])
    lagged_levels = p[VAR_ORDER - 1:-1]

    coef, *_ = np.linalg.lstsq(z2, lagged_levels, rcond=None)
    r1 = lagged_levels - z2 @ coef
    s11 = r1.T @ r1 / rows
    m_hat = float(BETA @ s11 @ BETA)

    # S11-orthonormal junk basis; the parity-gap direction comes first so it
    # receives the largest junk canonical correlation (keeps the matched-pair
    # restriction cheap while the other pairs reject)
    refs = [params.w, np.array([1.0, -1.0, 0.0, 0.0]),
            np.array([0.0, 0.0, 1.0, -1.0])]
    basis = [BETA / np.sqrt(m_hat)]
    for ref in refs:
        vec = ref.astype(float)
        for prev in basis:
            vec = vec - prev * float(prev @ s11 @ vec)
        norm = float(vec @ s11 @ vec)
        if norm <= 1e-18:
            raise RuntimeError("degenerate junk basis")
        basis.append(vec / np.sqrt(norm))
    junk = np.column_stack(basis[1:])          # (K, 3)
    x_junk = r1 @ junk                         # (rows, 3), unit 1/n norms

    # designed cross moments: junk block carries the target eigenvalues
    m_use = m_hint if m_hint is not None else m_hat
    s00_star = m_use * np.outer(params.alpha, params.alpha) + params.sigma
    eigval, eigvec = np.linalg.eigh(s00_star)
    root = eigvec @ np.diag(np.sqrt(eigval)) @ eigvec.T
    inv_root = eigvec @ np.diag(1.0 / np.sqrt(eigval)) @ eigvec.T
    a_dir = inv_root @ params.alpha
    a_dir /= np.linalg.norm(a_dir)
    # orthonormal complement of the alpha direction
    full = np.linalg.qr(np.column_stack([a_dir, np.eye(K)[:, :3]]))[0]
    u_perp = full[:, 1:]
    w_mat = u_perp @ params.rotation @ np.diag(np.sqrt(lam_targets))
    d_mat = root @ w_mat                       # (K, 3)

    # recompose the innovations
    u_new = u.copy()
    dummy_rows = [pos - VAR_ORDER for pos in dummy_positions()
                  if pos >= VAR_ORDER]
    u_new[dummy_rows] = 0.0
    span = np.column_stack([lags, ones, ect_raw[:, None], x_junk])
    keep = np.ones(rows, dtype=bool)
    keep[dummy_rows] = False
    coef, *_ = np.linalg.lstsq(span[keep], u_new[keep], rcond=None)
    e = np.zeros_like(u_new)
    e[keep] = u_new[keep] - span[keep] @ coef

    sigma_e_target = params.sigma - d_mat @ d_mat.T
    se = e.T @ e / rows
    ev, evec = np.linalg.eigh(se)
    if ev.min() <= 1e-14:
        raise RuntimeError("degenerate innovation covariance")
    se_inv_root = evec @ np.diag(ev ** -0.5) @ evec.T
    se_root = evec @ np.diag(ev ** 0.5) @ evec.T
    inner = se_root @ sigma_e_target @ se_root
    iev, ivec = np.linalg.eigh(inner)
    inner_root = ivec @ np.diag(np.sqrt(np.clip(iev, 1e-18, None))) @ ivec.T
    transform = se_inv_root @ inner_root @ se_inv_root
    e = e @ transform

    u_next = e + x_junk @ d_mat.T
    u_next[dummy_rows] = 0.0
    return u_next, m_hat


def converge_surgery(params: GenParams, u: np.ndarray,
                     max_iters: int = 250, tol: float = 5e-11,
                     damping: float = 0.5):
    """Damped fixed point of the generate/operate loop."""
    lam_junk = EIGENVALUES[1:]
    m_hat = None
    for iteration in range(max_iters):
        p = generate_path(params, u)
        u_new, m_hat = surgery(params, u, p, lam_junk)
        delta = float(np.max(np.abs(u_new - u))) / max(1e-12,
                                                       float(np.std(u_new)))
        u = u + damping * (u_new - u)
        if delta < tol and iteration > 5:
            break
    return generate_path(params, u), u, m_hat, delta


def build_panel(params: GenParams, seed_stream: int = 1,
                q_rounds: int = 8, target_m: float = M_HAT_TARGET):
    """Full construction: draw innovations, converge the surgery, retune the
    covariance so the leading eigenvalue lands exactly and the ECT moment
    matches the published t-ratio scale, repeat to joint convergence."""
    lam1 = EIGENVALUES[0]
    beta_var = target_m * 0.30            # rough AR-accumulation guess
    params.sigma = solve_sigma(params, lam1 / ((1 - lam1) * target_m),
                               beta_var)
    rng = np.random.default_rng(np.random.SeedSequence([BASE_SEED,
                                                        seed_stream]))
    u = rng.standard_normal((T_TOTAL - VAR_ORDER, K)) @ \
        np.linalg.cholesky(params.sigma).T
    u = add_mode_perturbation(params, u)

    p = m_hat = None
    for round_no in range(q_rounds):
        p, u, m_hat, _ = converge_surgery(params, u)
        q_needed = lam1 / ((1 - lam1) * m_hat)
        q_now = float(params.alpha @ np.linalg.solve(params.sigma,
                                                     params.alpha))
        m_ok = abs(m_hat / target_m - 1.0) < 0.02
        if abs(q_needed / q_now - 1.0) < 1e-9 and (m_ok or round_no >= 5):
            break
        beta_var = beta_var * np.clip(target_m / m_hat, 0.5, 2.0)
        params.sigma = solve_sigma(params, q_needed, beta_var)
    return p, u, m_hat


MODE_DIRECTIONS = np.array([
    [1.0, 1.0, 1.0, 1.0],        # common trend
    [-0.524, 0.0, 0.602, -0.093],  # parity-gap direction (w)
    [1.0, -1.0, 0.0, 0.0],
    [0.0, 0.0, 1.0, -1.0],
])


def add_mode_perturbation(params: GenParams, u: np.ndarray) -> np.ndarray:
    """Low-frequency innovation shaping along fixed level directions.

    Slow cosine components injected into the innovations integrate into
    smooth level shapes; they steer the unit-root statistics and the
    realized variances of the non-cointegrating gap paths without touching
    the moment surgery (which only pins cross moments and the
    contemporaneous covariance).
    """
    rows = u.shape[0]
    t_grid = np.arange(rows) / rows
    out = u.copy()
    n_modes = params.mode_amps.shape[1]
    for d in range(MODE_DIRECTIONS.shape[0]):
        direction = MODE_DIRECTIONS[d]
        for m in range(n_modes):
            profile = np.cos(np.pi * (m + 1) * t_grid)
            out += params.mode_amps[d, m] * np.outer(profile, direction)
    return out


# ---------------------------------------------------------------------------
# evaluation


def panel_from_values(values: np.ndarray) -> PricePanel:
    base = parse_month(START_MONTH)
    dates = [format_month(base + i) for i in range(len(values))]
    return PricePanel(dates, NAMES, values, Scale.LOG)


def dummies_for(panel: PricePanel):
    spec = DummySpec([(name, [month]) for name, month in DUMMY_DATES.items()])
    return build_dummies(spec, panel.dates)


def evaluate(p: np.ndarray) -> dict:
    """Run the full battery on a candidate log-price panel."""
    panel = panel_from_values(p)
    dummies = dummies_for(panel)
    det = DetTerms(constant=True, trend=True)
    out: dict = {}

    rrr = reduced_rank_regression(panel, VAR_ORDER, CASE, dummies)
    out["eigenvalues"] = rrr.eigenvalues.tolist()
    out["trace0"] = float(rrr.trace_stats[0])
    out["maxeig0"] = float(rrr.maxeig_stats[0])
    selection = select_rank(trace_test(rrr), max_eigen_test(rrr), "trace")
    out["rank_trace"] = selection.rank
    out["rank_maxeig"] = select_rank(trace_test(rrr), max_eigen_test(rrr),
                                     "maxeig").rank

    model = fit_vecm(panel, VAR_ORDER - 1, 1, CASE, dummies)
    out["beta"] = model.beta[:, 0].tolist()
    out["alpha"] = model.alpha[:, 0].tolist()
    out["alpha_t"] = model.alpha_t[:, 0].tolist()
    out["ce_const"] = float(model.beta[K, 0])

    table = lag_order_selection(panel, VAR_ORDER, det, dummies)
    out["lag_selected"] = dict(table.selected)
    out["aic3"] = float(table.rows[3].aic)

    granger = granger_wald(model)
    out["granger"] = {f"{r.dependent}|{r.excluded}":
                      (round(r.statistic, 4), bool(r.reject))
                      for r in granger.rows if r.excluded != "All"}
    out["granger_all_p"] = {r.dependent: round(r.p_value, 4)
                            for r in granger.rows if r.excluded == "All"}

    lop = pairwise_lop(panel, VAR_ORDER - 1, 1, CASE, dummies, 0.01)
    out["lop"] = {f"{r.region_i}|{r.region_j}": (round(r.lr, 4), bool(r.reject))
                  for r in lop.rows}

    unit = {}
    for j, name in enumerate(NAMES):
        y = p[:, j]
        adf_l = adf_test(y, Deterministic.CONSTANT, 15, Criterion.AIC)
        pp_l = pp_test(y, Deterministic.CONSTANT)
        adf_d = adf_test(np.diff(y), Deterministic.CONSTANT, 15, Criterion.AIC)
        pp_d = pp_test(np.diff(y), Deterministic.CONSTANT)
        unit[name] = {"adf": adf_l.statistic, "pp": pp_l.statistic,
                      "adf_p": adf_l.p_value, "pp_p": pp_l.p_value,
                      "adf_diff_p": adf_d.p_value, "pp_diff_p": pp_d.p_value}
    out["unit_root"] = unit

    var3 = fit_var(panel, 3, det)
    var5 = fit_var(panel, VAR_ORDER, det, dummies)
    out["var3_lm_p"] = [r.p for r in lm_serial_test(var3, 4)]
    out["var5_lm_p"] = [r.p for r in lm_serial_test(var5, 4)]
    out["var3_jb_joint_p"] = jarque_bera_test(var3).joint_p
    out["var5_jb_joint_p"] = jarque_bera_test(var5).joint_p
    stability = stability_roots(var5)
    out["max_root"] = stability.moduli[0]
    out["stable"] = stability.stable

    ect = model.ect[:, 0]
    out["ect_adf_p"] = adf_test(ect, Deterministic.CONSTANT, 12).p_value
    return out


def discrete_score(ev: dict) -> tuple[int, list[str]]:
    """Count of failed binding decisions, with a description of each."""
    failures = []
    sel = ev["lag_selected"]
    if not (sel["aic"] == 3 and sel["fpe"] == 3 and sel["sc"] == 2
            and sel["hq"] == 2 and sel["lr"] == 4):
        failures.append(f"lag pattern {sel}")
    if ev["rank_trace"] != 1 or ev["rank_maxeig"] != 1:
        failures.append(f"rank {ev['rank_trace']}/{ev['rank_maxeig']}")
    for (dep, exc), (_, reject)in GRANGER_TARGETS.items():
        got = ev["granger"][f"{dep}|{exc}"][1]
        if got != reject:
            failures.append(f"granger {dep}|{exc} reject={got}")
    for (a, b), (_, reject) in LOP_TARGETS.items():
        got = ev["lop"][f"{a}|{b}"][1]
        if got != reject:
            failures.append(f"lop {a}|{b} reject={got}")
    t_alpha = ev["alpha_t"]
    signs = [v < 0 for v in ev["alpha"]]
    if signs != [True, True, True, False]:
        failures.append(f"alpha signs {np.round(ev['alpha'], 4)}")
    if abs(t_alpha[0]) >= 1.969:
        failures.append(f"alpha MW significant (t={t_alpha[0]:.2f})")
    for i, name in enumerate(NAMES[1:], start=1):
        if abs(t_alpha[i]) < 1.969:
            failures.append(f"alpha {name} insignificant (t={t_alpha[i]:.2f})")
    for name, stats in ev["unit_root"].items():
        if stats["adf_p"] < 0.05 or stats["pp_p"] < 0.05:
            failures.append(f"{name} level rejects unit root")
        if stats["adf_diff_p"] > 0.01 or stats["pp_diff_p"] > 0.01:
            failures.append(f"{name} difference fails to reject")
    if any(pv < 0.05 for pv in ev["var5_lm_p"]):
        failures.append("VAR(5) serial correlation")
    if not any(pv < 0.05 for pv in ev["var3_lm_p"]):
        failures.append("VAR(3) shows no serial correlation")
    if ev["var5_jb_joint_p"] < 0.05:
        failures.append("VAR(5) residuals non-normal")
    if ev["var3_jb_joint_p"] > 0.05:
        failures.append("VAR(3) residuals look normal")
    if not ev["stable"]:
        failures.append("VAR(5) unstable")
    if ev["ect_adf_p"] > 0.05:
        failures.append("ECT not stationary")
    return len(failures), failures


# ---------------------------------------------------------------------------
# targeted metrics for the calibration loops


def ladder_metrics(p: np.ndarray) -> dict[str, float]:
    panel = panel_from_values(p)
    table = lag_order_selection(panel, VAR_ORDER,
                                DetTerms(constant=True, trend=True),
                                dummies_for(panel))
    rows = table.rows
    return {
        "d12": 2.0 * (rows[2].loglik - rows[1].loglik),
        "d23": 2.0 * (rows[3].loglik - rows[2].loglik),
        "lr4": float(rows[4].lr),
        "lr5": float(rows[5].lr),
        "selected": table.selected,
        "aic3": rows[3].aic,
    }


def granger_metrics(p: np.ndarray) -> dict[tuple[str, str], float]:
    panel = panel_from_values(p)
    model = fit_vecm(panel, VAR_ORDER - 1, 1, CASE, dummies_for(panel))
    result = granger_wald(model)
    return {(r.dependent, r.excluded): r.statistic for r in result.rows
            if r.excluded != "All"}


def lop_metrics(p: np.ndarray) -> dict[tuple[str, str], float]:
    panel = panel_from_values(p)
    table = pairwise_lop(panel, VAR_ORDER - 1, 1, CASE, dummies_for(panel))
    return {(r.region_i, r.region_j): r.lr for r in table.rows}


def unit_metrics(p: np.ndarray) -> np.ndarray:
    stats = []
    for j in range(K):
        adf = adf_test(p[:, j], Deterministic.CONSTANT, 15, Criterion.AIC)
        pp = pp_test(p[:, j], Deterministic.CONSTANT)
        stats.extend([adf.statistic, pp.statistic])
    return np.array(stats)


# ---------------------------------------------------------------------------
# calibration stages (all deterministic given the base seed)

LADDER_TARGETS = {"d23": 43.0, "lr4": 27.8, "lr5": 20.0}
GRANGER_STAT_TARGETS = {("NE", "MW"): 12.22, ("SO", "MW"): 14.73,
                        ("SO", "NE"): 13.65, ("SO", "WE"): 14.23,
                        ("WE", "NE"): 16.99}
NAME_INDEX = {name: i for i, name in enumerate(NAMES)}


def _rebuild(params: GenParams, u: np.ndarray, rounds: int = 2):
    """Cheap retune (q and ECT moment) followed by surgery convergence."""
    lam1 = EIGENVALUES[0]
    p = m_hat = None
    for _ in range(rounds):
        p, u, m_hat, _ = converge_surgery(params, u, max_iters=120, tol=1e-9)
        q_needed = lam1 / ((1 - lam1) * m_hat)
        beta_var = float(BETA @ params.sigma @ BETA) \
            * np.clip(M_HAT_TARGET / m_hat, 0.7, 1.4)
        params.sigma = solve_sigma(params, q_needed, beta_var)
    p, u, m_hat, _ = converge_surgery(params, u, max_iters=150, tol=1e-10)
    return p, u, m_hat


def calibrate_gamma(params: GenParams, u: np.ndarray, iterations: int = 4):
    """Newton loop on the lag-ladder and causality-block targets.

    Unknowns: the per-lag scales (lags 2..4) and the per-block boosts for
    the causality pairs that must reject.  Targets are seed-specific: the
    loop steers this seed's realized statistics to the published windows.
    """
    scale_keys = [1, 2, 3]
    boost_keys = list(GRANGER_STAT_TARGETS)
    x = np.concatenate([GAMMA_SCALES[1:].copy(), np.ones(len(boost_keys))])

    def apply(x_vec):
        scales = np.array([1.0, *x_vec[:3]])
        boosts = {(NAME_INDEX[dep], NAME_INDEX[exc]): x_vec[3 + i]
                  for i, (dep, exc) in enumerate(boost_keys)}
        params.gamma = make_gamma(scales, boosts)

    def measure(u_in):
        p, u_out, _ = _rebuild(params, u_in.copy(), rounds=1)
        ladder = ladder_metrics(p)
        granger = granger_metrics(p)
        vec = [ladder["d23"], ladder["lr4"], ladder["lr5"]]
        vec += [granger[key] for key in boost_keys]
        return np.array(vec), u_out

    targets = np.array([LADDER_TARGETS["d23"], LADDER_TARGETS["lr4"],
                        LADDER_TARGETS["lr5"]]
                       + [GRANGER_STAT_TARGETS[k] for k in boost_keys])
    apply(x)
    value, u = measure(u)
    for _ in range(iterations):
        resid = value - targets
        if np.max(np.abs(resid) / np.maximum(targets, 10.0)) < 0.03:
            break
        jac = np.zeros((len(targets), len(x)))
        h = 0.08
        for i in range(len(x)):
            x_try = x.copy()
            x_try[i] += h
            apply(x_try)
            bumped, _ = measure(u)
            jac[:, i] = (bumped - value) / h
        step, *_ = np.linalg.lstsq(jac, -resid, rcond=None)
        x = np.clip(x + 0.8 * step, 0.2, 2.2)
        apply(x)
        value, u = measure(u)
    apply(x)
    return x, u


LOP_ORDER = [("MW", "NE"), ("MW", "SO"), ("MW", "WE"), ("NE", "SO"),
             ("SO", "WE"), ("NE", "WE")]
LOP_STAT_TARGETS = np.array([18.38, 19.73, 16.75, 22.44, 19.74, 4.0])
LOP_WEIGHTS = np.array([1.0, 1.0, 1.0, 1.0, 1.0, 0.4])
UNIT_TARGETS = np.array([-1.02, -1.21, -1.19, -1.12,
                         -1.25, -1.16, -0.84, -0.84])


def rotation_matrix(angles: np.ndarray) -> np.ndarray:
    t1, t2, t3 = angles
    r1 = np.array([[np.cos(t1), -np.sin(t1), 0.0],
                   [np.sin(t1), np.cos(t1), 0.0], [0.0, 0.0, 1.0]])
    r2 = np.array([[np.cos(t2), 0.0, -np.sin(t2)], [0.0, 1.0, 0.0],
                   [np.sin(t2), 0.0, np.cos(t2)]])
    r3 = np.array([[1.0, 0.0, 0.0], [0.0, np.cos(t3), -np.sin(t3)],
                   [0.0, np.sin(t3), np.cos(t3)]])
    return r1 @ r2 @ r3


def calibrate_shapes(params: GenParams, u: np.ndarray, iterations: int = 5):
    """Joint Gauss-Newton on the parity statistics and unit-root statistics.

    Unknowns: the three junk rotation angles plus the low-frequency mode
    amplitudes; targets: the five rejecting parity statistics (the matched
    pair only needs to stay small) and the eight level unit-root
    statistics.
    """
    n_modes = params.mode_amps.shape[1]
    x = np.concatenate([np.zeros(3), params.mode_amps.ravel()])
    mode_scale = 0.004

    def apply(x_vec):
        params.rotation = rotation_matrix(x_vec[:3])
        params.mode_amps = x_vec[3:].reshape(4, n_modes) * 1.0

    def measure(u_in):
        p, u_out, _ = _rebuild(params, u_in.copy(), rounds=1)
        lop = lop_metrics(p)
        lop_vec = np.array([lop[pair] for pair in LOP_ORDER])
        unit_vec = unit_metrics(p)
        return np.concatenate([lop_vec * LOP_WEIGHTS / 5.0, unit_vec]), \
            p, u_out

    targets = np.concatenate([LOP_STAT_TARGETS * LOP_WEIGHTS / 5.0,
                              UNIT_TARGETS])
    apply(x)
    value, p, u = measure(u)
    best = (float(np.sum((value - targets) ** 2)), x.copy(), u.copy())
    for _ in range(iterations):
        resid = value - targets
        jac = np.zeros((len(targets), len(x)))
        for i in range(len(x)):
            x_try = x.copy()
            x_try[i] += 0.15 if i < 3 else mode_scale
            apply(x_try)
            bumped, _, _ = measure(u)
            jac[:, i] = (bumped - value) / (0.15 if i < 3 else mode_scale)
        step, *_ = np.linalg.lstsq(jac, -resid, rcond=None)
        limit = np.concatenate([np.full(3, 0.8), np.full(4 * n_modes, 0.02)])
        x = x + np.clip(0.7 * step, -limit, limit)
        apply(x)
        value, p, u = measure(u)
        score = float(np.sum((value - targets) ** 2))
        if score < best[0]:
            best = (score, x.copy(), u.copy())
    apply(best[1])
    p, u, m_hat = _rebuild(params, best[2], rounds=2)
    return p, u


# ---------------------------------------------------------------------------
# finalization: exact criteria pinning, CSV output, verification report


def finalize(params: GenParams, p: np.ndarray, u: np.ndarray):
    """Exact passes: eigenvalue retune, criterion scaling, level shift."""
    lam1 = EIGENVALUES[0]
    for _ in range(4):
        p, u, m_hat, _ = converge_surgery(params, u, max_iters=250, tol=5e-11)
        q_needed = lam1 / ((1 - lam1) * m_hat)
        q_now = float(params.alpha @ np.linalg.solve(params.sigma,
                                                     params.alpha))
        if abs(q_needed / q_now - 1.0) < 1e-10:
            break
        params.sigma = solve_sigma(params, q_needed,
                                   float(BETA @ params.sigma @ BETA))

    # global scaling pins the information-criterion level exactly; every
    # scale-invariant statistic (t-ratios, eigenvalues, unit-root and LR
    # statistics) is untouched
    ladder = ladder_metrics(p)
    scale = float(np.exp((AIC_AT_3 - ladder["aic3"]) / (2.0 * K)))
    p = p * scale

    # global level shift pins the reported error-correction constant; all
    # regressions include an intercept, so nothing else moves
    k_order = VAR_ORDER
    mean_ect = float(np.mean(p[k_order - 1:-1] @ BETA))
    shift = (-CE_CONST - mean_ect) / float(BETA @ np.ones(K))
    p = p + shift
    return p


def write_csv(p: np.ndarray, path: Path) -> None:
    base = parse_month(START_MONTH)
    lines = ["date,midwest,northeast,south,west"]
    prices = np.exp(p)
    for i in range(len(p)):
        cells = ",".join(f"{v:.10f}" for v in prices[i])
        lines.append(f"{format_month(base + i)},{cells}")
    path.write_text("\n".join(lines) + "\n")


def verification_report(p: np.ndarray) -> dict:
    """Target-by-target comparison used by the acceptance suite."""
    ev = evaluate(p)
    n_fail, failures = discrete_score(ev)

    def item(name, achieved, target, tol, kind="statistic"):
        ok = bool(abs(achieved - target) <= tol)
        return {"name": name, "achieved": round(float(achieved), 6),
                "target": float(target), "tolerance": float(tol),
                "within_tolerance": ok, "kind": kind}

    items = [
        item("trace_r0", ev["trace0"], TRACE_R0, 1.0),
        item("maxeig_r0", ev["maxeig0"], MAXEIG_R0, 1.0),
        item("aic_lag3", ev["aic3"], AIC_AT_3, 0.01),
        item("beta_ne", ev["beta"][1], BETA[1], 0.02),
        item("beta_so", ev["beta"][2], BETA[2], 0.02),
        item("beta_we", ev["beta"][3], BETA[3], 0.02),
        item("ce_const", ev["ce_const"], CE_CONST, 0.001),
    ]
    for i, name in enumerate(NAMES):
        items.append(item(f"adf_level_{name}", ev["unit_root"][name]["adf"],
                          ADF_LEVEL_TARGETS[i], 0.10))
        items.append(item(f"pp_level_{name}", ev["unit_root"][name]["pp"],
                          PP_LEVEL_TARGETS[i], 0.10))
    for idx, lam in enumerate(EIGENVALUES):
        items.append(item(f"eigenvalue_{idx + 1}", ev["eigenvalues"][idx],
                          lam, 5e-4))
    for (a, b), (target, _) in LOP_TARGETS.items():
        if (a, b) != ("NE", "WE"):
            items.append(item(f"lop_lr_{a}_{b}", ev["lop"][f"{a}|{b}"][0],
                              target, 2.0))
    for (dep, exc), (target, _) in GRANGER_TARGETS.items():
        items.append(item(f"granger_{dep}_{exc}",
                          ev["granger"][f"{dep}|{exc}"][0], target, 100.0,
                          kind="reference"))
    return {
        "decision_failures": failures,
        "items": items,
        "within": sum(1 for i in items if i["within_tolerance"]),
        "total": len(items),
        "evaluation": {k: v for k, v in ev.items()},
    }


def main(argv: list[str]) -> int:
    out_csv = ROOT / "data" / "demo_beef_panel.csv"
    out_report = ROOT / "data" / "fixture_report.json"
    if "--verify" in argv:
        import csv as _csv
        with out_csv.open() as handle:
            rows = list(_csv.DictReader(handle))
        values = np.log(np.array([[float(r[c]) for c in
                                   ("midwest", "northeast", "south", "west")]
                                  for r in rows]))
        report = verification_report(values)
    else:
        params = base_params()
        print("stage 1: base build", file=sys.stderr)
        p, u, m_hat = build_panel(params)
        print("stage 2: short-run calibration", file=sys.stderr)
        _, u = calibrate_gamma(params, u)
        print("stage 3: parity / unit-root calibration", file=sys.stderr)
        p, u = calibrate_shapes(params, u)
        print("stage 4: finalization", file=sys.stderr)
        p = finalize(params, p, u)
        write_csv(p, out_csv)
        # verify through the CSV round trip so the report reflects the file
        import csv as _csv
        with out_csv.open() as handle:
            rows = list(_csv.DictReader(handle))
        values = np.log(np.array([[float(r[c]) for c in
                                   ("midwest", "northeast", "south", "west")]
                                  for r in rows]))
        report = verification_report(values)
        out_report.write_text(json.dumps(report, indent=2, sort_keys=True)
                              + "\n")
        print(f"wrote {out_csv}", file=sys.stderr)

    print(json.dumps({"decision_failures": report["decision_failures"],
                      "within": report["within"], "total": report["total"]},
                     indent=2))
    for entry in report["items"]:
        status = "ok   " if entry["within_tolerance"] else "DRIFT"
        print(f"  {status} {entry['name']}: {entry['achieved']} "
              f"(target {entry['target']} +/- {entry['tolerance']})")
    if "--verify" not in argv:
        out_report.write_text(json.dumps(report, indent=2, sort_keys=True)
                              + "\n")
    return 0


if __name__ == "__main__":
    raise SystemExit(main(sys.argv[1:]))
