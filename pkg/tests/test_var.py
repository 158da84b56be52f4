import numpy as np
import pytest

from marketcoint import (DetTerms, DgpKind, DgpSpec, PricePanel, fit_var,
                         generate, jarque_bera_test, lag_order_selection,
                         lm_serial_test, stability_roots)
from marketcoint.ingest import format_month, parse_month
from marketcoint.var import companion_matrix, jb_from_orthogonalized, system_ic


def make_panel(values: np.ndarray, start: str = "2000-01") -> PricePanel:
    base = parse_month(start)
    dates = [format_month(base + i) for i in range(len(values))]
    names = tuple(f"y{i + 1}" for i in range(values.shape[1]))
    return PricePanel(dates, names, values)


def test_noiseless_recursion_recovers_coefficients():
    a = np.array([[0.55, 0.20], [0.10, 0.40]])
    y = np.zeros((40, 2))
    y[0] = [1.0, 2.0]
    for t in range(1, 40):
        y[t] = a @ y[t - 1]
    model = fit_var(make_panel(y), p=1, det=DetTerms(constant=False))
    np.testing.assert_allclose(model.lag_coefs[0], a, atol=1e-8)


def test_var_matches_stacked_normal_equations_oracle():
    spec = DgpSpec(kind=DgpKind.VAR, k=2, t=400, seed=88_011,
                   coefs=np.array([[[0.5, 0.1], [0.05, 0.4]],
                                   [[0.2, 0.0], [0.0, 0.15]]]),
                   const=np.array([0.3, -0.2]))
    panel = generate(spec)
    model = fit_var(panel, p=2, det=DetTerms(constant=True))

    # independent stacked-regression oracle via explicit normal equations
    y = panel.values
    t = len(y)
    lhs = y[2:]
    x = np.column_stack([y[1:t - 1], y[0:t - 2], np.ones(t - 2)])
    coef = np.linalg.solve(x.T @ x, x.T @ lhs)
    np.testing.assert_allclose(model.coef, coef, atol=1e-10)


def test_system_criteria_formula():
    # AIC from a known log-likelihood and parameter count
    aic, _, _ = system_ic(1797.025, 28, 270)
    assert abs(aic - (-13.10389)) < 1e-4
    aic3, _, _ = system_ic(2706.535, 76, 270)
    assert abs(aic3 - (-19.48544)) < 1e-4


def test_lag_selection_prefers_true_order_majority():
    coefs = np.array([[[0.5, 0.1], [0.1, 0.4]],
                      [[0.3, 0.0], [0.0, 0.25]]])
    wins_sc = wins_hq = 0
    reps = 100
    for rep in range(reps):
        panel = generate(DgpSpec(kind=DgpKind.VAR, k=2, t=500, seed=61_500,
                                 coefs=coefs, require_stable=True),
                         substream=rep)
        table = lag_order_selection(panel, max_lag=4,
                                    det=DetTerms(constant=True))
        wins_sc += table.selected["sc"] == 2
        wins_hq += table.selected["hq"] == 2
    assert wins_sc > reps / 2
    assert wins_hq > reps / 2


def test_lag_selection_attains_optimum_and_loglik_monotone(rank1_panel):
    table = lag_order_selection(rank1_panel, max_lag=5,
                                det=DetTerms(constant=True))
    logliks = [row.loglik for row in table.rows]
    assert all(b - a > -1e-9 for a, b in zip(logliks, logliks[1:]))
    for crit in ("aic", "sc", "hq", "fpe"):
        values = [getattr(row, crit) for row in table.rows]
        chosen = table.selected[crit]
        assert values[chosen] <= min(values) + 1e-12
        # ties break toward the smaller lag
        assert all(values[i] > values[chosen] - 1e-12 for i in range(chosen))


def test_criteria_recompute_from_loglik(rank1_panel):
    model = fit_var(rank1_panel, p=2, det=DetTerms(constant=True))
    k = model.nseries
    n_total = k * model.nparams_per_eq
    aic, sc, hq = system_ic(model.loglik, n_total, model.nobs)
    assert abs(aic - model.aic) < 1e-6
    assert abs(sc - model.sc) < 1e-6
    assert abs(hq - model.hq) < 1e-6


def test_residuals_orthogonal_to_regressors(rank1_panel):
    model = fit_var(rank1_panel, p=3, det=DetTerms(constant=True, trend=True))
    cross = model.design.T @ model.resid
    assert np.abs(cross).max() < 1e-8 * max(1.0, np.abs(model.design).max()
                                            * len(model.design))


def test_lm_serial_df_is_k_squared():
    spec = DgpSpec(kind=DgpKind.VAR, k=4, t=300, seed=3,
                   coefs=0.4 * np.eye(4)[None])
    model = fit_var(generate(spec), p=1, det=DetTerms(constant=True))
    rows = lm_serial_test(model, 3)
    assert all(row.df == 16 for row in rows)
    assert all(0.0 <= row.p <= 1.0 and 0.0 <= row.p_f <= 1.0 for row in rows)


def test_lm_serial_monte_carlo_size():
    """LM size at h=1 on white-noise VAR data: 5% within 2pp."""
    reps = 500
    rejections = 0
    for rep in range(reps):
        panel = generate(DgpSpec(kind=DgpKind.WHITE_NOISE, k=2, t=200,
                                 seed=77_200), substream=rep)
        model = fit_var(panel, p=1, det=DetTerms(constant=True))
        rows = lm_serial_test(model, 1)
        rejections += rows[0].p < 0.05
    rate = rejections / reps
    assert 0.03 <= rate <= 0.07, f"LM size {rate:.4f} outside [0.03, 0.07]"


def test_jarque_bera_against_direct_moment_oracle():
    rng = np.random.default_rng(1_000_003)
    v = rng.standard_normal((100_000, 3))
    report = jb_from_orthogonalized(v)
    n = len(v)
    for comp in report.components:
        x = v[:, comp.component - 1]
        x = x - x.mean()
        m2 = np.mean(x ** 2)
        skew = np.mean(x ** 3) / m2 ** 1.5
        kurt = np.mean(x ** 4) / m2 ** 2 - 3.0
        oracle = n * (skew ** 2 / 6.0 + kurt ** 2 / 24.0)
        assert abs(comp.jarque_bera - oracle) < 1e-8
        assert comp.p > 0.01
    assert abs(report.joint - sum(c.jarque_bera for c in report.components)) < 1e-10


def test_jarque_bera_joint_equals_component_sum(rank1_panel):
    model = fit_var(rank1_panel, p=2, det=DetTerms(constant=True))
    report = jarque_bera_test(model)
    assert report.joint == pytest.approx(
        sum(c.jarque_bera for c in report.components), abs=1e-10)
    assert report.joint_df == 2 * model.nseries


def test_companion_diagonal_case():
    comp = companion_matrix(np.array([0.5 * np.eye(4)]))
    roots = np.linalg.eigvals(comp)
    np.testing.assert_allclose(sorted(np.abs(roots)), [0.5] * 4, atol=1e-12)


def det_poly_roots_oracle(pi: np.ndarray) -> np.ndarray:
    """Roots of det(I - pi_1 z - ... - pi_p z^p) for a bivariate VAR.

    Builds the determinant as an explicit scalar polynomial from the 2x2
    cofactor expansion, independent of the companion construction.
    """
    p = pi.shape[0]
    # matrix polynomial A(z) = I - sum pi_i z^i, entries as coefficient lists
    entry = np.zeros((2, 2, p + 1))
    entry[0, 0, 0] = entry[1, 1, 0] = 1.0
    for i in range(p):
        entry[:, :, i + 1] -= pi[i]
    det = (np.polynomial.polynomial.polymul(entry[0, 0], entry[1, 1])
           - np.polynomial.polynomial.polymul(entry[0, 1], entry[1, 0]))
    return np.polynomial.polynomial.polyroots(det)


def test_companion_roots_match_polynomial_oracle():
    rng = np.random.default_rng(440_017)
    for _ in range(20):
        pi = 0.35 * rng.standard_normal((2, 2, 2)).transpose(0, 1, 2)
        pi = rng.uniform(0.2, 0.45) * rng.standard_normal((2, 2, 2))
        comp_eigs = np.linalg.eigvals(companion_matrix(pi))
        poly_roots = det_poly_roots_oracle(pi)
        mapped = np.sort_complex(1.0 / poly_roots)
        mine = np.sort_complex(comp_eigs[np.abs(comp_eigs) > 1e-12])
        np.testing.assert_allclose(np.sort(np.abs(mine)),
                                   np.sort(np.abs(mapped)), atol=1e-8)


def test_stability_report_counts_and_conjugates(rank1_panel):
    model = fit_var(rank1_panel, p=3, det=DetTerms(constant=True))
    report = stability_roots(model)
    assert len(report.roots) == model.nseries * model.order
    moduli = np.array(report.moduli)
    assert np.all(np.diff(moduli) <= 1e-12)
    complex_roots = [z for z in report.roots if abs(z.imag) > 1e-10]
    for z in complex_roots:
        partner = min(complex_roots, key=lambda w: abs(w - z.conjugate()))
        assert abs(abs(partner) - abs(z)) < 1e-12
