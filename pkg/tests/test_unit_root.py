import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from marketcoint import (Criterion, DataError, Deterministic, DgpKind,
                         DgpSpec, NumericalError, adf_test, generate,
                         integration_order, mackinnon_pvalue, pp_test)
from marketcoint.unit_root import (bartlett_long_run_variance,
                                   newey_west_bandwidth)


def random_walk(t: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return np.cumsum(rng.standard_normal(t))


def dickey_fuller_oracle(y: np.ndarray, constant: bool = True) -> float:
    """Normal-equations t-ratio of the lagged level, written independently."""
    dy = np.diff(y)
    level = y[:-1]
    x = np.column_stack([level, np.ones_like(level)]) if constant \
        else level[:, None]
    xtx = x.T @ x
    coef = np.linalg.solve(xtx, x.T @ dy)
    resid = dy - x @ coef
    s2 = resid @ resid / (len(dy) - x.shape[1])
    cov = s2 * np.linalg.inv(xtx)
    return float(coef[0] / np.sqrt(cov[0, 0]))


def test_adf_matches_normal_equations_oracle():
    y = random_walk(200, 20_240_115)
    result = adf_test(y, Deterministic.CONSTANT, max_lag=0,
                      criterion=Criterion.FIXED)
    oracle = dickey_fuller_oracle(y)
    assert abs(result.statistic - oracle) < 1e-8
    assert result.lags_or_bandwidth == 0
    assert result.n_effective == 199


def test_adf_scale_and_shift_invariance():
    y = random_walk(150, 7) + 10.0
    base = adf_test(y, Deterministic.CONSTANT, max_lag=6)
    scaled = adf_test(3.0 * y, Deterministic.CONSTANT, max_lag=6)
    shifted = adf_test(y + 5.0, Deterministic.CONSTANT, max_lag=6)
    assert abs(base.statistic - scaled.statistic) < 1e-9
    assert abs(base.statistic - shifted.statistic) < 1e-9
    assert base.lags_or_bandwidth == scaled.lags_or_bandwidth


def test_adf_lag_never_exceeds_max():
    y = random_walk(120, 99)
    for max_lag in (0, 3, 8):
        res = adf_test(y, Deterministic.CONSTANT, max_lag=max_lag)
        assert res.lags_or_bandwidth <= max_lag


def test_adf_fixed_criterion_uses_max_lag():
    y = random_walk(120, 5)
    res = adf_test(y, Deterministic.CONSTANT, max_lag=4,
                   criterion=Criterion.FIXED)
    assert res.lags_or_bandwidth == 4


def test_adf_insufficient_observations():
    with pytest.raises(DataError, match="too short"):
        adf_test(np.arange(10.0), Deterministic.CONSTANT, max_lag=15)


def test_adf_constant_series_degenerate():
    with pytest.raises(NumericalError, match="zero-variance"):
        adf_test(np.full(50, 3.0))


def test_pp_zero_bandwidth_equals_adf_k0():
    y = random_walk(180, 11)
    pp = pp_test(y, Deterministic.CONSTANT, bandwidth=0)
    adf = adf_test(y, Deterministic.CONSTANT, max_lag=0,
                   criterion=Criterion.FIXED)
    assert abs(pp.statistic - adf.statistic) < 1e-10


def test_pp_bandwidth_rule():
    # floor(4 (T/100)^(2/9)) at the regression sample size
    assert newey_west_bandwidth(274) == 5
    assert newey_west_bandwidth(100) == 4
    y = random_walk(275, 3)
    assert pp_test(y).lags_or_bandwidth == 5


def test_bartlett_long_run_variance_matches_direct_sum():
    rng = np.random.default_rng(314_159)
    e = rng.standard_normal(301)
    u = np.empty(300)
    u[0] = e[0]
    for t in range(1, 300):
        u[t] = 0.5 * u[t - 1] + e[t + 1]
    bandwidth = 8
    mine = bartlett_long_run_variance(u, bandwidth)
    n = len(u)
    oracle = (u @ u) / n
    for j in range(1, bandwidth + 1):
        gamma = sum(u[t] * u[t - j] for t in range(j, n)) / n
        oracle += 2.0 * (1.0 - j / (bandwidth + 1.0)) * gamma
    assert abs(mine - oracle) < 1e-10


def test_mackinnon_anchor_values():
    # large-sample calibration at the conventional 5% and 1% points
    assert abs(mackinnon_pvalue(-2.87, Deterministic.CONSTANT, 10_000) - 0.05) < 0.005
    assert abs(mackinnon_pvalue(-3.45, Deterministic.CONSTANT, 10_000) - 0.01) < 0.003


def test_mackinnon_monotone_for_each_spec():
    for spec in Deterministic:
        p_strong = mackinnon_pvalue(-4.0, spec, 500)
        p_mid = mackinnon_pvalue(-3.0, spec, 500)
        p_weak = mackinnon_pvalue(-1.0, spec, 500)
        assert p_strong < p_mid < p_weak


@settings(max_examples=60, deadline=None)
@given(st.floats(min_value=-10.0, max_value=4.0, allow_nan=False),
       st.floats(min_value=0.0, max_value=2.0, allow_nan=False))
def test_mackinnon_monotone_and_continuous(stat, delta):
    spec = Deterministic.CONSTANT
    p_low = mackinnon_pvalue(stat, spec, 300)
    p_high = mackinnon_pvalue(stat + delta, spec, 300)
    assert 0.0 < p_low <= 1.0
    assert p_low <= p_high + 1e-12
    # small steps move the p-value by a bounded amount (continuity)
    step = mackinnon_pvalue(stat + 1e-6, spec, 300)
    assert abs(step - p_low) < 1e-3


def test_mackinnon_saturates():
    assert mackinnon_pvalue(-50.0, Deterministic.CONSTANT, 300) == pytest.approx(1e-4)
    assert mackinnon_pvalue(50.0, Deterministic.CONSTANT, 300) == pytest.approx(0.9999)
    with pytest.raises(DataError):
        mackinnon_pvalue(float("nan"), Deterministic.CONSTANT, 300)


def test_integration_order_white_noise_and_random_walk():
    noise_spec = DgpSpec(kind=DgpKind.WHITE_NOISE, k=1, t=1000, seed=1234)
    noise_panel = generate(noise_spec)
    report = integration_order(noise_panel, max_lag=10)
    assert report[0].order == "I(0)"

    walk_spec = DgpSpec(kind=DgpKind.RANDOM_WALK, k=1, t=1000, seed=4321)
    walk_panel = generate(walk_spec)
    report = integration_order(walk_panel, max_lag=10)
    assert report[0].order == "I(1)"


def test_adf_monte_carlo_size():
    """5%-level rejection rate on driftless random walks, T = 250."""
    reps = 2000
    rejections = 0
    for rep in range(reps):
        panel = generate(DgpSpec(kind=DgpKind.RANDOM_WALK, k=1, t=250,
                                 seed=55_001), substream=rep)
        res = adf_test(panel.values[:, 0], Deterministic.CONSTANT,
                       max_lag=0, criterion=Criterion.FIXED)
        rejections += res.p_value < 0.05
    rate = rejections / reps
    assert 0.035 <= rate <= 0.065, f"size {rate:.4f} outside [0.035, 0.065]"
