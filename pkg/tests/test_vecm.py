import numpy as np
import pytest

from marketcoint import (DgpKind, DgpSpec, JohansenCase, NumericalError,
                         PricePanel, RestrictionSpec, SpecificationError,
                         adf_test, fit_var, fit_vecm, generate, granger_wald,
                         joint_lop_test, normalize_beta, pairwise_lop,
                         restriction_lr_test, weak_exogeneity_test)
from marketcoint.johansen import reduced_rank_regression
from marketcoint.var import DetTerms
from marketcoint.vecm import (_ect_columns, _restricted_ml, ect_series,
                              rank_loglik, restriction_df)

UC = JohansenCase.UNRESTRICTED_CONST


def test_normalize_beta_basics():
    beta = np.array([[2.0], [3.817], [-2.2968], [-3.4638]])
    normalized, equations = normalize_beta(beta, 0, ("MW", "NE", "SO", "WE"))
    np.testing.assert_allclose(normalized[:, 0],
                               [1.0, 1.9085, -1.1484, -1.7319])
    assert equations[0].startswith("MW = -1.9085*NE")
    # idempotent on an already-normalized vector
    again, _ = normalize_beta(normalized, 0)
    np.testing.assert_array_equal(again, normalized)


def test_normalize_beta_zero_pivot():
    with pytest.raises(NumericalError,
                       match="pivot coefficient is zero; choose another"):
        normalize_beta(np.array([[0.0], [1.0]]), 0)


def test_normalize_beta_scaling_invariance():
    rng = np.random.default_rng(4)
    beta = rng.standard_normal((5, 2)) + 0.5
    scaled = beta * np.array([3.0, -0.25])
    a, _ = normalize_beta(beta, 1)
    b, _ = normalize_beta(scaled, 1)
    np.testing.assert_allclose(a, b, atol=1e-9)


def test_vecm_beta_recovery_known_dgp():
    alpha = np.array([-0.35, 0.15, 0.1])
    beta = np.array([1.0, -0.5, -0.5])
    spec = DgpSpec(kind=DgpKind.VECM, k=3, t=2000, seed=300_100,
                   alpha=alpha, beta=beta, sigma=np.eye(3) * 1e-4)
    model = fit_vecm(generate(spec), lags=1, r=1)
    estimate = model.beta[:3, 0]
    np.testing.assert_allclose(estimate, beta, atol=0.05)


def test_vecm_var_rewrite_identity(trivariate_panel):
    model = fit_vecm(trivariate_panel, lags=2, r=1)
    pi = model.to_var_coefs()
    implied = -(np.eye(model.nseries) - pi.sum(axis=0))
    np.testing.assert_allclose(implied, model.long_run_matrix(), atol=1e-8)
    # long-run matrix has numerical rank <= r
    svals = np.linalg.svd(model.long_run_matrix(), compute_uv=False)
    assert svals[model.rank] < 1e-8 * svals[0]


def test_full_rank_vecm_loglik_equals_levels_var(trivariate_panel):
    k = 3
    rrr = reduced_rank_regression(trivariate_panel, 2, UC)
    var_model = fit_var(trivariate_panel, 2, DetTerms(constant=True))
    assert rank_loglik(rrr, k) == pytest.approx(var_model.loglik, abs=1e-6)


def test_ect_projection_and_recompute(trivariate_panel):
    k = 3
    beta = np.zeros((3, 1))
    beta[0, 0] = 1.0
    ect, centers = _ect_columns(trivariate_panel.values, beta,
                                JohansenCase.NONE, k)
    np.testing.assert_allclose(ect[:, 0],
                               trivariate_panel.values[k - 1:-1, 0],
                               atol=1e-12)
    assert centers[0] == 0.0

    model = fit_vecm(trivariate_panel, lags=2, r=1)
    dates, stored = ect_series(model)
    beta_prices = model.beta[:3]
    recomputed = trivariate_panel.values[2:-1] @ beta_prices + model.beta[3]
    np.testing.assert_allclose(stored, recomputed, atol=1e-12)
    assert len(dates) == model.nobs


def test_ect_is_stationary_under_cointegration(trivariate_panel):
    model = fit_vecm(trivariate_panel, lags=2, r=1)
    _, ect = ect_series(model)
    res = adf_test(ect[:, 0], max_lag=6)
    assert res.p_value < 0.05


def test_granger_df_identities(trivariate_panel):
    model = fit_vecm(trivariate_panel, lags=2, r=1)
    result = granger_wald(model)
    for row in result.rows:
        assert row.statistic >= 0.0
        if row.excluded == "All":
            assert row.df == (model.nseries - 1) * model.lags
        else:
            assert row.df == model.lags
    names = set(trivariate_panel.names)
    per_eq = [r for r in result.rows if r.dependent == "y1"]
    assert {r.excluded for r in per_eq} == (names - {"y1"}) | {"All"}


def test_granger_monte_carlo_size():
    """Exclusion test size when variable 2 truly does not enter equation 1."""
    alpha = np.array([-0.4, 0.3])
    beta = np.array([1.0, -1.0])
    gamma = np.array([[[0.3, 0.0], [0.1, 0.2]]])  # y2 lags absent from eq 1
    rejections = 0
    reps = 500
    for rep in range(reps):
        panel = generate(DgpSpec(kind=DgpKind.VECM, k=2, t=300, seed=88_200,
                                 alpha=alpha, beta=beta, gamma=gamma,
                                 sigma=np.eye(2) * 1e-4), substream=rep)
        model = fit_vecm(panel, lags=1, r=1)
        row = granger_wald(model).entry("y1", "y2")
        rejections += row.reject
    rate = rejections / reps
    assert 0.03 <= rate <= 0.07, f"Granger size {rate:.4f} outside [0.03, 0.07]"


def test_weak_exogeneity_nested_optimum_is_zero():
    """Zero restriction on an adjustment row that is exactly zero: LR = 0."""
    rng = np.random.default_rng(17)
    k = 3
    basis = rng.standard_normal((k, k))
    s11 = basis @ basis.T + k * np.eye(k)
    beta = np.array([[1.0], [-1.0], [0.5]])
    alpha = np.array([[-0.4], [0.0], [0.2]])  # second row exactly zero
    sigma = 0.5 * np.eye(k)
    s01 = alpha @ beta.T @ s11
    sxx = float((beta.T @ s11 @ beta)[0, 0])
    s00 = alpha @ alpha.T * sxx + sigma
    n = 400

    loglik_r, _, converged, _ = _restricted_ml(s00, s01, s11, n, 1,
                                               alpha_zero_rows=(1,))
    loglik_u, _, _, _ = _restricted_ml(s00, s01, s11, n, 1)
    assert converged
    assert abs(loglik_u - loglik_r) < 1e-6


def test_weak_exogeneity_monte_carlo_nonrejection():
    alpha = np.array([-0.4, 0.0, 0.15])       # variable 2 weakly exogenous
    beta = np.array([1.0, -0.7, -0.3])
    keep = 0
    reps = 200
    for rep in range(reps):
        panel = generate(DgpSpec(kind=DgpKind.VECM, k=3, t=400, seed=31_400,
                                 alpha=alpha, beta=beta,
                                 sigma=np.eye(3) * 1e-4), substream=rep)
        res = weak_exogeneity_test(panel, 1, 1, UC, None, 1)
        assert res.df == 1
        keep += not res.reject(0.05)
    rate = keep / reps
    assert 0.90 <= rate <= 0.98, f"non-rejection rate {rate:.3f}"


def test_weak_exogeneity_detects_strong_adjustment(rank1_panel):
    res = weak_exogeneity_test(rank1_panel, 1, 1, UC, None, 0)
    assert res.reject(0.05)
    assert res.lr > 10


def test_restriction_nested_optimum(trivariate_panel):
    model = fit_vecm(trivariate_panel, lags=2, r=1)
    fixed = [float(v) for v in model.beta[:3, 0]]
    res = restriction_lr_test(trivariate_panel, 2, 1, UC, None,
                              RestrictionSpec([fixed]))
    assert res.lr == pytest.approx(0.0, abs=1e-6)
    assert res.loglik_restricted <= res.loglik_unrestricted + 1e-8


def test_restriction_df_accounting():
    # pairwise pattern with a free deterministic row: 5 rows, span dim 2
    spec = RestrictionSpec([[0.0, 1.0, 0.0, -1.0, None]])
    assert restriction_df(spec, 1) == 3
    # same pattern without the deterministic row
    spec4 = RestrictionSpec([[0.0, 1.0, 0.0, -1.0]])
    assert restriction_df(spec4, 1) == 3
    # joint parity at K = 4, r = 3: one binding constraint per vector
    joint = RestrictionSpec([[1.0, -1.0, 0.0, 0.0],
                             [1.0, 0.0, -1.0, 0.0],
                             [1.0, 0.0, 0.0, -1.0]])
    assert restriction_df(joint, 3) == 3


def test_restriction_over_restricted_error(trivariate_panel):
    # all entries free: zero binding constraints
    spec = RestrictionSpec([[None, None, None]])
    with pytest.raises(SpecificationError, match="df = 0"):
        restriction_lr_test(trivariate_panel, 2, 1, UC, None, spec)


def test_switching_matches_exact_solver(trivariate_panel):
    rrr = reduced_rank_regression(trivariate_panel, 3, UC)
    spans = [np.array([[1.0, 0.0], [-1.0, 0.0], [0.0, 1.0]])]
    from marketcoint.vecm import _restricted_exact
    exact_loglik, _ = _restricted_exact(rrr.s00, rrr.s0k, rrr.skk,
                                        rrr.t_eff, 1, spans[0])
    switch_loglik, _, converged, _ = _restricted_ml(
        rrr.s00, rrr.s0k, rrr.skk, rrr.t_eff, 1, spans=spans)
    assert converged
    assert switch_loglik == pytest.approx(exact_loglik, abs=1e-6)


def test_restriction_scale_invariance(trivariate_panel):
    """Scaling one series rescales beta but not the LR statistic."""
    spec = RestrictionSpec([[1.0, -1.0, 0.0]])
    base = restriction_lr_test(trivariate_panel, 2, 1, UC, None, spec)
    scaled_values = trivariate_panel.values.copy()
    scaled_values[:, 2] *= 4.0
    scaled_panel = PricePanel(trivariate_panel.dates, trivariate_panel.names,
                              scaled_values, trivariate_panel.scale)
    rescaled = restriction_lr_test(scaled_panel, 2, 1, UC, None, spec)
    assert rescaled.lr == pytest.approx(base.lr, abs=1e-9 * max(1.0, base.lr))


def test_pairwise_lop_near_identical_columns():
    """A pair of (numerically) equal series: tiny LR, parity clearly holds.

    Exactly equal columns make the level moments singular, so the panel
    carries a vanishing measurement wobble; the pair's statistic is then a
    small-chi-square draw while every other pair rejects by two orders of
    magnitude.
    """
    rng = np.random.default_rng(7)
    walk = np.cumsum(0.02 * rng.standard_normal(300))
    third = np.cumsum(0.02 * rng.standard_normal(300)) + 0.3 * walk
    values = np.column_stack([walk, walk + 1e-3 * rng.standard_normal(300),
                              third])
    from marketcoint.ingest import format_month
    dates = [format_month(24000 + i) for i in range(300)]
    panel = PricePanel(dates, ("a", "b", "c"), values)
    table = pairwise_lop(panel, 1, 1, UC, None)
    matched = table.entry("a", "b")
    assert matched.lr < 1.0
    assert not matched.reject
    assert table.entry("a", "c").lr > 50 * matched.lr
    assert table.entry("a", "c").reject and table.entry("b", "c").reject


def test_pairwise_lop_monte_carlo_nonrejection():
    """True parity pair: non-rejection rate at 5% within [90%, 98%]."""
    alpha = np.array([-0.4, 0.25])
    beta = np.array([1.0, -1.0])
    keep = 0
    reps = 200
    for rep in range(reps):
        panel = generate(DgpSpec(kind=DgpKind.VECM, k=2, t=400, seed=52_900,
                                 alpha=alpha, beta=beta,
                                 sigma=np.eye(2) * 1e-4), substream=rep)
        table = pairwise_lop(panel, 1, 1, UC, None, level=0.05)
        keep += not table.rows[0].reject
    rate = keep / reps
    assert 0.90 <= rate <= 0.98, f"parity non-rejection rate {rate:.3f}"


def test_pairwise_lop_requires_rank_one(trivariate_panel):
    with pytest.raises(SpecificationError, match="rank 1"):
        pairwise_lop(trivariate_panel, 2, 2, UC, None)


def test_joint_lop_refuses_wrong_rank(trivariate_panel):
    with pytest.raises(SpecificationError, match="joint LOP untestable at rank 1"):
        joint_lop_test(trivariate_panel, 2, UC, None)


def _parity_k3_panel(substream: int):
    # two cointegration vectors, each a pairwise parity relation
    alpha = np.array([[-0.4, 0.0], [0.3, -0.2], [0.1, 0.3]])
    beta = np.array([[1.0, 1.0], [-1.0, 0.0], [0.0, -1.0]])
    return generate(DgpSpec(kind=DgpKind.VECM, k=3, t=500, seed=66_001,
                            alpha=alpha, beta=beta, sigma=np.eye(3) * 1e-4),
                    substream=substream)


def test_joint_lop_true_parity_mostly_not_rejected():
    keep = tried = 0
    for rep in range(100):
        panel = _parity_k3_panel(rep)
        try:
            res = joint_lop_test(panel, 1, UC, None)
        except SpecificationError:
            continue  # rank not selected as K-1 in this draw
        tried += 1
        keep += not res.reject(0.05)
    assert tried >= 70
    assert keep / tried >= 0.90


def test_joint_lop_k2_equals_pairwise():
    alpha = np.array([-0.4, 0.25])
    beta = np.array([1.0, -1.0])
    panel = generate(DgpSpec(kind=DgpKind.VECM, k=2, t=500, seed=88,
                             alpha=alpha, beta=beta, sigma=np.eye(2) * 1e-4))
    joint = joint_lop_test(panel, 1, UC, None)
    pair = pairwise_lop(panel, 1, 1, UC, None).rows[0]
    assert joint.lr == pytest.approx(pair.lr, abs=1e-9 * max(1.0, pair.lr))


def test_restriction_result_properties(trivariate_panel):
    spec = RestrictionSpec([[1.0, -1.0, 0.0]], description="y1 = y2")
    res = restriction_lr_test(trivariate_panel, 2, 1, UC, None, spec)
    assert res.lr >= 0.0
    assert 0.0 <= res.p_value <= 1.0
    assert res.description == "y1 = y2"
    # restricted beta rescaled so fixed entries match the pattern
    np.testing.assert_allclose(res.beta_restricted[:2, 0], [1.0, -1.0],
                               atol=1e-9)


def test_fit_vecm_validations(trivariate_panel):
    with pytest.raises(SpecificationError, match="rank must lie"):
        fit_vecm(trivariate_panel, lags=2, r=3)
    with pytest.raises(SpecificationError, match="lagged difference"):
        fit_vecm(trivariate_panel, lags=0, r=1)
