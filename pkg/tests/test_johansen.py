import numpy as np
import pytest
from scipy import linalg as sla

from marketcoint import (DgpKind, DgpSpec, JohansenCase, NumericalError,
                         PricePanel, SpecificationError, generate,
                         max_eigen_test, reduced_rank_regression, select_rank,
                         trace_test)
from marketcoint._johansen_tables import MOMENTS
from marketcoint.ingest import format_month
from marketcoint.johansen import JohansenResult, RankTestRow, RankTestTable


def test_embedded_tables_match_published_anchors():
    """Case-3 critical values against the standard published table."""
    known_trace = {1: 3.841466, 2: 15.49471, 3: 29.79707, 4: 47.85613}
    known_maxeig = {1: 3.841466, 2: 14.26460, 3: 21.13162, 4: 27.58434}
    for n, value in known_trace.items():
        assert abs(MOMENTS[3][n]["tr_cv5"] - value) < 0.25
    for n, value in known_maxeig.items():
        assert abs(MOMENTS[3][n]["me_cv5"] - value) < 0.25
    # case 3, dimension 1 is exactly chi-square(1)
    assert abs(MOMENTS[3][1]["tr_mean"] - 1.0) < 0.02
    assert abs(MOMENTS[3][1]["tr_var"] - 2.0) < 0.1


def test_identities_and_invariants(rank1_panel):
    res = reduced_rank_regression(rank1_panel, 2)
    lam = res.eigenvalues
    n = res.t_eff
    k = res.nseries
    for r in range(k):
        tail = -n * np.sum(np.log1p(-lam[r:]))
        assert res.trace_stats[r] == pytest.approx(tail, rel=1e-12)
        nxt = -n * np.sum(np.log1p(-lam[r + 1:])) if r + 1 < k else 0.0
        assert res.maxeig_stats[r] == pytest.approx(
            res.trace_stats[r] - nxt, abs=1e-9)
    assert np.sum(res.maxeig_stats) == pytest.approx(res.trace_stats[0],
                                                     abs=1e-9)
    # beta' S_kk beta = I normalization
    gram = res.eigenvectors.T @ res.skk @ res.eigenvectors
    np.testing.assert_allclose(gram, np.eye(k), atol=1e-8)


def test_rank_reconstruction_identity(rank1_panel):
    res = reduced_rank_regression(rank1_panel, 2)
    lhs = res.s0k.T @ np.linalg.solve(res.s00, res.s0k)
    v = res.eigenvectors
    rhs = res.skk @ v @ np.diag(res.eigenvalues) @ v.T @ res.skk
    np.testing.assert_allclose(lhs, rhs, atol=1e-8 * max(1.0, np.abs(lhs).max()))


def test_column_scaling_invariance(rank1_panel):
    res = reduced_rank_regression(rank1_panel, 2)
    scaled_values = rank1_panel.values.copy()
    scaled_values[:, 0] *= 7.5
    scaled = PricePanel(rank1_panel.dates, rank1_panel.names, scaled_values,
                        rank1_panel.scale)
    res_scaled = reduced_rank_regression(scaled, 2)
    np.testing.assert_allclose(res.eigenvalues, res_scaled.eigenvalues,
                               atol=1e-9)


def test_dense_generalized_eigenproblem_oracle(rank1_panel):
    """Eigenvalues agree with a direct dense solver on the moment matrices."""
    res = reduced_rank_regression(rank1_panel, 2)
    product = res.s0k.T @ np.linalg.solve(res.s00, res.s0k)
    oracle = sla.eig(product, res.skk)[0]
    oracle = np.sort(np.real(oracle))[::-1][:res.nseries]
    np.testing.assert_allclose(res.eigenvalues, oracle, atol=1e-9)


def test_identical_series_error():
    values = np.cumsum(np.random.default_rng(5).standard_normal((120, 1)))
    doubled = np.column_stack([values, values])
    dates = [format_month(24000 + i) for i in range(120)]
    panel = PricePanel(dates, ("a", "b"), doubled)
    with pytest.raises(NumericalError, match="collinear"):
        reduced_rank_regression(panel, 2)


def test_known_direction_recovered(rank1_panel):
    res = reduced_rank_regression(rank1_panel, 2)
    lead = res.eigenvectors[:, 0]
    normalized = lead / lead[0]
    assert abs(normalized[1] + 1.0) < 0.05  # close to (1, -1)


def test_rank_recovery_monte_carlo():
    """Trace and max-eigen select rank 1 in at least 90% of 200 draws."""
    alpha = np.array([-0.5, 0.2])
    beta = np.array([1.0, -1.0])
    hits = 0
    reps = 200
    for rep in range(reps):
        panel = generate(DgpSpec(kind=DgpKind.VECM, k=2, t=1000, seed=140_082,
                                 alpha=alpha, beta=beta,
                                 const=np.array([0.002, 0.002]),
                                 sigma=np.eye(2) * 1e-4), substream=rep)
        res = reduced_rank_regression(panel, 2)
        selection = select_rank(trace_test(res), max_eigen_test(res), "trace")
        hits += selection.rank == 1
    rate = hits / reps
    assert rate >= 0.90, f"rank-1 recovery rate {rate:.3f} below 0.90"


def _manual_table(kind: str, rejects: list[bool]) -> RankTestTable:
    rows = tuple(RankTestRow(rank=r, eigenvalue=0.1, statistic=1.0,
                             critical_value=2.0,
                             p_value=0.01 if reject else 0.5, reject=reject)
                 for r, reject in enumerate(rejects))
    return RankTestTable(kind, 0.05, rows)


def test_select_rank_policies():
    trace = _manual_table("trace", [True, False, False, False])
    maxeig = _manual_table("max-eigen", [True, False, False, False])
    assert select_rank(trace, maxeig, "trace").rank == 1
    assert select_rank(trace, maxeig, "maxeig").rank == 1
    assert select_rank(trace, maxeig, "agree").rank == 1

    nothing = _manual_table("trace", [False, False, False, False])
    assert select_rank(nothing, nothing, "trace").rank == 0

    everything = _manual_table("trace", [True, True, True, True])
    picked = select_rank(everything, everything, "trace")
    assert picked.rank == 3
    assert any("full rank" in w for w in picked.warnings)

    with pytest.raises(SpecificationError, match="trace selects"):
        select_rank(_manual_table("trace", [False] * 4),
                    _manual_table("max-eigen", [True, False, False, False]),
                    "agree")
    with pytest.raises(SpecificationError, match="unknown rank policy"):
        select_rank(trace, maxeig, "coin-flip")


def test_zero_eigenvalues_reject_nothing():
    k = 3
    res = JohansenResult(
        case=JohansenCase.UNRESTRICTED_CONST, k=2, names=("a", "b", "c"),
        row_labels=("a", "b", "c"), eigenvalues=np.zeros(k),
        eigenvectors=np.eye(k), trace_stats=np.zeros(k),
        maxeig_stats=np.zeros(k),
        trace_cv5=np.array([MOMENTS[3][k - r]["tr_cv5"] for r in range(k)]),
        maxeig_cv5=np.array([MOMENTS[3][k - r]["me_cv5"] for r in range(k)]),
        trace_p=np.full(k, 0.9999), maxeig_p=np.full(k, 0.9999),
        s00=np.eye(k), s0k=np.zeros((k, k)), skk=np.eye(k), t_eff=100)
    table = trace_test(res)
    assert all(not row.reject for row in table.rows)
    assert all(row.statistic == 0.0 for row in table.rows)


def test_pvalues_clamped_and_monotone(rank1_panel):
    res = reduced_rank_regression(rank1_panel, 2)
    assert np.all(res.trace_p >= 1e-4) and np.all(res.trace_p <= 0.9999)
    table = trace_test(res, 0.01)
    assert all(0 < row.p_value <= 0.9999 for row in table.rows)


def test_dimension_cap():
    rng = np.random.default_rng(8)
    values = np.cumsum(rng.standard_normal((80, 13)), axis=0)
    dates = [format_month(24000 + i) for i in range(80)]
    panel = PricePanel(dates, tuple(f"s{i}" for i in range(13)), values)
    with pytest.raises(SpecificationError, match="K - r = 13"):
        reduced_rank_regression(panel, 1)


def test_dummies_enter_unrestricted(rank1_panel):
    from marketcoint import DummySpec, build_dummies
    dummies = build_dummies(DummySpec([("D", [rank1_panel.dates[100]])]),
                            rank1_panel.dates)
    res = reduced_rank_regression(rank1_panel, 2, dummies=dummies)
    assert res.eigenvectors.shape[0] == 2  # no extra restricted row
    assert np.all(np.isfinite(res.eigenvalues))
