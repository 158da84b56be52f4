"""Result tables as text, CSV or JSON with stable numeric formatting.

Statistics print with 6 significant digits and p-values with 4 decimal
places so emitted files are byte-stable across platforms and suitable for
golden-file comparison.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Any, Sequence

from .errors import DataError

FORMATS = ("text", "csv", "json")


def fmt_stat(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (int,)):
        return str(value)
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def fmt_p(value: float | None) -> str:
    return "" if value is None else f"{value:.4f}"


@dataclass(frozen=True)
class Table:
    """A titled rectangular table; cells are already formatted strings."""

    name: str
    title: str
    columns: tuple[str, ...]
    rows: tuple[tuple[str, ...], ...]
    notes: tuple[str, ...] = ()

    def to_text(self) -> str:
        widths = [len(c) for c in self.columns]
        for row in self.rows:
            for i, cell in enumerate(row):
                widths[i] = max(widths[i], len(cell))
        lines = [self.title, "=" * len(self.title)]
        header = "  ".join(c.ljust(widths[i]) for i, c in enumerate(self.columns))
        lines.append(header)
        lines.append("-" * len(header))
        for row in self.rows:
            lines.append("  ".join(cell.ljust(widths[i])
                                   for i, cell in enumerate(row)).rstrip())
        for note in self.notes:
            lines.append(f"note: {note}")
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow(row)
        return buffer.getvalue()

    def to_json(self) -> str:
        payload = {
            "name": self.name,
            "title": self.title,
            "columns": list(self.columns),
            "rows": [list(row) for row in self.rows],
            "notes": list(self.notes),
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "text":
            return self.to_text()
        if fmt == "csv":
            return self.to_csv()
        if fmt == "json":
            return self.to_json()
        raise DataError(f"unknown output format {fmt!r}; choose from {FORMATS}")


def emit_table(table: Table, path, fmt: str = "text") -> None:
    """Write a finalized table to ``path`` in the requested format."""
    content = table.render(fmt)
    try:
        with open(path, "w") as handle:
            handle.write(content)
    except OSError as exc:
        raise DataError(f"cannot write table to {path}: {exc}") from exc


def unit_root_table(reports) -> Table:
    rows = []
    for rep in reports:
        rows.append((
            rep.name,
            f"{fmt_stat(rep.adf_level.statistic)} ({fmt_p(rep.adf_level.p_value)})",
            f"{fmt_stat(rep.pp_level.statistic)} ({fmt_p(rep.pp_level.p_value)})",
            f"{fmt_stat(rep.adf_diff.statistic)} ({fmt_p(rep.adf_diff.p_value)})",
            f"{fmt_stat(rep.pp_diff.statistic)} ({fmt_p(rep.pp_diff.p_value)})",
            rep.order,
        ))
    return Table(
        name="unit_root",
        title="Unit-root tests (p-values in parentheses)",
        columns=("series", "adf_level", "pp_level", "adf_diff", "pp_diff",
                 "order"),
        rows=tuple(rows))


def lag_selection_table(table) -> Table:
    star = {crit: lag for crit, lag in table.selected.items()}
    rows = []
    for row in table.rows:
        def mark(value, crit, lag=row.lag):
            text = fmt_stat(value)
            return text + "*" if star.get(crit) == lag and text else text
        rows.append((
            str(row.lag),
            fmt_stat(row.loglik),
            mark(row.lr, "lr"),
            mark(row.fpe, "fpe"),
            mark(row.aic, "aic"),
            mark(row.sc, "sc"),
            mark(row.hq, "hq"),
        ))
    return Table(
        name="lag_selection",
        title="VAR order selection (* marks each criterion's choice)",
        columns=("lag", "loglik", "lr", "fpe", "aic", "sc", "hq"),
        rows=tuple(rows))


def var_coef_table(model) -> Table:
    labels = []
    for lag in range(1, model.order + 1):
        labels.extend(f"{name}(-{lag})" for name in model.names)
    if model.det.constant:
        labels.append("C")
    if model.det.trend:
        labels.append("TREND")
    labels.extend(model.dummy_names)
    rows = []
    for i, label in enumerate(labels):
        cells = [label]
        for j in range(model.nseries):
            cells.append(f"{fmt_stat(model.coef[i, j])} "
                         f"({fmt_stat(model.tstat[i, j])})")
        rows.append(tuple(cells))
    summary = [
        ("adj_r2", *[fmt_stat(v) for v in model.eq_adj_r2]),
        ("eq_loglik", *[fmt_stat(v) for v in model.eq_loglik]),
        ("eq_aic", *[fmt_stat(v) for v in model.eq_aic]),
        ("eq_sc", *[fmt_stat(v) for v in model.eq_sc]),
    ]
    rows.extend(summary)
    return Table(
        name=f"var{model.order}_estimates",
        title=f"VAR({model.order}) estimates (t-statistics in parentheses)",
        columns=("regressor", *model.names),
        rows=tuple(rows),
        notes=(f"system loglik {fmt_stat(model.loglik)}, "
               f"aic {fmt_stat(model.aic)}, sc {fmt_stat(model.sc)}",))


def serial_table(rows_in, order: int) -> Table:
    rows = [(str(r.h), fmt_stat(r.lre), str(r.df), fmt_p(r.p),
             fmt_stat(r.rao_f), f"({r.df1}, {fmt_stat(r.df2)})", fmt_p(r.p_f))
            for r in rows_in]
    return Table(
        name=f"var{order}_serial",
        title=f"Residual serial-correlation LM tests, VAR({order})",
        columns=("h", "lre", "df", "p", "rao_f", "f_dfs", "p_f"),
        rows=tuple(rows),
        notes=("null hypothesis: no serial correlation at lag h",))


def normality_table(report, order: int) -> Table:
    rows = [(str(c.component), fmt_stat(c.jarque_bera), str(c.df), fmt_p(c.p))
            for c in report.components]
    rows.append(("joint", fmt_stat(report.joint), str(report.joint_df),
                 fmt_p(report.joint_p)))
    return Table(
        name=f"var{order}_normality",
        title=f"Residual normality (Cholesky orthogonalization), VAR({order})",
        columns=("component", "jarque_bera", "df", "p"),
        rows=tuple(rows))


def stability_table(report, order: int) -> Table:
    rows = []
    for root, modulus in zip(report.roots, report.moduli):
        text = f"{root.real:.6f}" + (f" {root.imag:+.6f}i" if abs(root.imag) > 1e-12 else "")
        rows.append((text, f"{modulus:.6f}"))
    return Table(
        name=f"var{order}_stability",
        title=f"Companion roots, VAR({order})",
        columns=("root", "modulus"),
        rows=tuple(rows),
        notes=("stable" if report.stable else "UNSTABLE: root on or outside "
               "the unit circle",))


def rank_test_table(table) -> Table:
    rows = []
    for row in table.rows:
        hypothesis = "r = 0" if row.rank == 0 else f"r <= {row.rank}"
        rows.append((hypothesis, fmt_stat(row.eigenvalue),
                     fmt_stat(row.statistic), fmt_stat(row.critical_value),
                     fmt_p(row.p_value), "reject" if row.reject else ""))
    return Table(
        name=f"coint_{table.kind.replace('-', '_')}",
        title=f"Cointegration rank test ({table.kind}), "
              f"{table.level:.0%} level",
        columns=("hypothesis", "eigenvalue", "statistic", "critical_value",
                 "p", "decision"),
        rows=tuple(rows))


def vecm_table(model) -> Table:
    rows = []
    for i, label in enumerate(model.beta_labels):
        for j in range(model.rank):
            t = model.beta_t[i, j]
            cell = fmt_stat(model.beta[i, j])
            if t == t:  # not NaN
                cell += f" ({fmt_stat(t)})"
            rows.append((f"coint_eq{j + 1}: {label}(-1)", cell, "", "", ""))
    header = ("error_correction", *[f"d({n})" for n in model.names])
    for j in range(model.rank):
        rows.append((f"CointEq{j + 1}",
                     *[f"{fmt_stat(model.alpha[e, j])} "
                       f"({fmt_stat(model.alpha_t[e, j])})"
                       for e in range(model.nseries)]))
    for lag in range(model.lags):
        for var in range(model.nseries):
            rows.append((f"d({model.names[var]}(-{lag + 1}))",
                         *[f"{fmt_stat(model.gamma[lag][e, var])} "
                           f"({fmt_stat(model.gamma_t[lag][e, var])})"
                           for e in range(model.nseries)]))
    det_labels = []
    if model.case.unrestricted_const:
        det_labels.append("C")
    if model.case.unrestricted_trend:
        det_labels.append("TREND")
    for i, label in enumerate(det_labels):
        rows.append((label, *[f"{fmt_stat(model.det_coefs[i, e])} "
                              f"({fmt_stat(model.det_t[i, e])})"
                              for e in range(model.nseries)]))
    for i, label in enumerate(model.dummy_names):
        rows.append((label, *[f"{fmt_stat(model.dummy_coefs[i, e])} "
                              f"({fmt_stat(model.dummy_t[i, e])})"
                              for e in range(model.nseries)]))
    rows.append(("adj_r2", *[fmt_stat(v) for v in model.eq_adj_r2]))
    return Table(
        name="vecm_estimates",
        title=f"VECM estimates, rank {model.rank}, {model.lags} lagged "
              "differences (t-statistics in parentheses)",
        columns=header,
        rows=tuple(rows),
        notes=(f"system loglik {fmt_stat(model.loglik)}",))


def granger_table(result) -> Table:
    rows = [(r.dependent, r.excluded, fmt_stat(r.statistic), str(r.df),
             fmt_p(r.p_value),
             ("rejected" if r.reject else "not rejected"))
            for r in result.rows]
    return Table(
        name="granger",
        title=f"Granger causality (Wald block exclusion), "
              f"{result.level:.0%} level",
        columns=("dependent", "excluded", "chi_sq", "df", "p", "null"),
        rows=tuple(rows))


def lop_table(table) -> Table:
    rows = [(r.region_i, r.region_j, fmt_stat(r.lr), str(r.df),
             fmt_p(r.p_value), "rejected" if r.reject else "not rejected")
            for r in table.rows]
    return Table(
        name="lop_pairwise",
        title=f"Pairwise price-parity LR tests, {table.level:.0%} level",
        columns=("region_i", "region_j", "lr", "df", "p", "parity"),
        rows=tuple(rows))


def ect_table(dates: Sequence[str], values) -> Table:
    rows = [(date, *[fmt_stat(values[i, j]) for j in range(values.shape[1])])
            for i, date in enumerate(dates)]
    return Table(
        name="ect",
        title="Error-correction terms",
        columns=("date", *[f"ect{j + 1}" for j in range(values.shape[1])]),
        rows=tuple(rows))
