import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from marketcoint import (DataError, DummySpec, PricePanel, Scale,
                         build_dummies, difference, load_panel, log_transform)
from marketcoint.ingest import (dummy_spec_from_config, format_month,
                                parse_month, parse_region_mapping, read_config)

from conftest import write_panel_csv


def month_range(start: str, n: int) -> list[str]:
    base = parse_month(start)
    return [format_month(base + i) for i in range(n)]


def test_load_panel_sorts_and_counts_rows(tmp_path):
    dates = month_range("1998-01", 24)
    values = {"a": list(np.linspace(4.0, 5.0, 24)), "b": [6.0] * 24}
    csv_path = tmp_path / "panel.csv"
    write_panel_csv(csv_path, list(reversed(dates)),
                    {k: list(reversed(v)) for k, v in values.items()})
    panel = load_panel(csv_path, {"a": "A", "b": "B"})
    assert panel.nobs == 24
    assert panel.dates[0] == "1998-01" and panel.dates[-1] == "1999-12"
    assert panel.scale is Scale.LEVEL
    assert panel.names == ("A", "B")


def test_load_panel_duplicate_month_rejected(tmp_path):
    dates = month_range("2005-01", 5)
    dates[3] = "2005-03"  # duplicates the third month
    csv_path = tmp_path / "dup.csv"
    write_panel_csv(csv_path, dates, {"a": [1.0, 2.0, 3.0, 4.0, 5.0]})
    with pytest.raises(DataError, match="non-contiguous or duplicated dates"):
        load_panel(csv_path, {"a": "A"})


def test_load_panel_gap_rejected(tmp_path):
    dates = ["2005-01", "2005-02", "2005-04"]
    csv_path = tmp_path / "gap.csv"
    write_panel_csv(csv_path, dates, {"a": [1.0, 2.0, 3.0]})
    with pytest.raises(DataError, match="non-contiguous or duplicated dates"):
        load_panel(csv_path, {"a": "A"})


def test_load_panel_single_region(tmp_path):
    csv_path = tmp_path / "single.csv"
    write_panel_csv(csv_path, month_range("2010-06", 10),
                    {"only": list(range(1, 11))})
    panel = load_panel(csv_path, {"only": "ONLY"})
    assert panel.shape == (10, 1)


def test_load_panel_unparseable_row_reports_line(tmp_path):
    csv_path = tmp_path / "bad.csv"
    csv_path.write_text("date,a\n2010-01,1.0\n2010-02,oops\n")
    with pytest.raises(DataError, match="bad.csv:3"):
        load_panel(csv_path, {"a": "A"})


def test_load_panel_missing_file():
    with pytest.raises(DataError, match="not found"):
        load_panel("/nonexistent/panel.csv", {"a": "A"})


def test_load_panel_deterministic(tmp_path):
    csv_path = tmp_path / "det.csv"
    write_panel_csv(csv_path, month_range("1999-01", 12),
                    {"a": list(np.linspace(1.0, 2.0, 12))})
    first = load_panel(csv_path, {"a": "A"})
    second = load_panel(csv_path, {"a": "A"})
    assert first.dates == second.dates
    np.testing.assert_array_equal(first.values, second.values)


def test_log_transform_identities():
    panel = PricePanel(month_range("2000-01", 3), ("a",),
                       np.array([[1.0], [math.e], [math.e ** 2]]))
    logged = log_transform(panel)
    assert logged.scale is Scale.LOG
    np.testing.assert_allclose(logged.values[:, 0], [0.0, 1.0, 2.0],
                               atol=1e-12)


def test_log_transform_rejects_nonpositive():
    panel = PricePanel(month_range("2000-01", 2), ("a",),
                       np.array([[1.0], [0.0]]))
    with pytest.raises(DataError, match="2000-02.*a"):
        log_transform(panel)


def test_difference_examples():
    panel = PricePanel(month_range("2000-01", 3), ("a",),
                       np.array([[1.0], [3.0], [6.0]]))
    diffed = difference(panel)
    np.testing.assert_allclose(diffed.values[:, 0], [2.0, 3.0])
    assert diffed.scale is Scale.DIFF
    assert diffed.dates == ("2000-02", "2000-03")

    constant = PricePanel(month_range("2000-01", 5), ("a",),
                          np.full((5, 1), 2.5))
    np.testing.assert_array_equal(difference(constant).values, 0.0)


def test_difference_requires_two_rows():
    panel = PricePanel(["2000-01"], ("a",), np.array([[1.0]]))
    with pytest.raises(DataError):
        difference(panel)
    with pytest.raises(DataError):
        difference(panel, d=2)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.floats(min_value=-1e6, max_value=1e6,
                          allow_nan=False), min_size=2, max_size=40))
def test_difference_roundtrip(values):
    panel = PricePanel(month_range("1990-01", len(values)), ("a",),
                       np.array(values)[:, None])
    diffed = difference(panel)
    rebuilt = np.concatenate([[values[0]],
                              values[0] + np.cumsum(diffed.values[:, 0])])
    np.testing.assert_allclose(rebuilt, values, atol=1e-12 * max(
        1.0, float(np.max(np.abs(values)))))


def test_build_dummies_impulse_position():
    dates = month_range("1998-01", 275)
    assert len(dates) == 275 and dates[-1] == "2020-11"
    dummies = build_dummies(DummySpec([("D1", ["2003-11"])]), dates)
    column = dummies.values[:, 0]
    assert column.sum() == 1.0
    assert column[dates.index("2003-11")] == 1.0


def test_build_dummies_empty_and_orthogonal():
    dates = month_range("1998-01", 275)
    empty = build_dummies(DummySpec(), dates)
    assert empty.values.shape == (275, 0)

    two = build_dummies(DummySpec([("D4", ["2020-07"]), ("D5", ["2020-05"])]),
                        dates)
    assert two.values.sum(axis=0).tolist() == [1.0, 1.0]
    assert float(two.values[:, 0] @ two.values[:, 1]) == 0.0


def test_build_dummies_out_of_range():
    with pytest.raises(DataError, match="outside panel range"):
        build_dummies(DummySpec([("D", ["2030-01"])]),
                      month_range("1998-01", 12))


@settings(max_examples=30, deadline=None)
@given(st.sets(st.integers(min_value=0, max_value=59), min_size=0, max_size=10))
def test_dummy_column_sum_matches_cardinality(offsets):
    dates = month_range("2001-01", 60)
    months = [dates[i] for i in sorted(offsets)]
    spec = DummySpec([("D", months)])
    dummies = build_dummies(spec, dates)
    assert dummies.values[:, 0].sum() == len(months)


def test_duplicate_dummy_names_rejected():
    with pytest.raises(DataError, match="unique"):
        DummySpec([("D", ["2000-01"]), ("D", ["2000-02"])])


def test_read_config_and_helpers(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("""
# demo config
data.path = panel.csv
data.regions = midwest:MW, northeast:NE
dummies.D1 = 2003-11
dummies.D2 = 2016-11, 2017-01
""")
    config = read_config(cfg)
    assert config["data.path"] == "panel.csv"
    mapping = parse_region_mapping(config["data.regions"])
    assert mapping == {"midwest": "MW", "northeast": "NE"}
    spec = dummy_spec_from_config(config)
    assert dict(spec.entries)["D2"] == frozenset({"2016-11", "2017-01"})


def test_panel_values_immutable():
    panel = PricePanel(month_range("2000-01", 2), ("a",),
                       np.array([[1.0], [2.0]]))
    with pytest.raises(ValueError):
        panel.values[0, 0] = 9.0
