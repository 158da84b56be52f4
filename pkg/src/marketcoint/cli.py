"""Command-line interface and full-pipeline orchestration.

The pipeline runs ingest -> unit-root report -> lag selection -> initial
VAR with diagnostics -> final VAR (extra lags + impulse dummies) with
diagnostics -> cointegration rank tests -> VECM -> Granger causality ->
price-parity tables -> error-correction series, then writes one file per
table plus a machine-readable summary.  The respecification step (more lags
plus dummies) is driven by explicit configuration so published results are
reproducible; ``--auto-respec`` instead adds lags until the serial tests
pass and proposes dummies at large residual outliers.

Outputs are written only after every stage succeeds, so a failing run
leaves no partial tables.  Exit codes: 0 success, 2 data/config error,
3 numerical failure.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

import click
import numpy as np

from . import report as rpt
from .errors import DataError, MarketcointError, NumericalError
from .ingest import (DummyMatrix, DummySpec, PricePanel, build_dummies,
                     dummy_spec_from_config, load_panel, log_transform,
                     parse_region_mapping, read_config)
from .johansen import (JohansenCase, max_eigen_test, reduced_rank_regression,
                       select_rank, trace_test)
from .simulate import DgpKind, DgpSpec, generate
from .unit_root import Criterion, Deterministic, integration_order
from .var import DetTerms, fit_var, jarque_bera_test, lag_order_selection, \
    lm_serial_test, stability_roots
from .vecm import (ect_series, fit_vecm, granger_wald, joint_lop_test,
                   normalize_beta, pairwise_lop)

EXIT_DATA_ERROR = 2
EXIT_NUMERICAL_ERROR = 3

_CASE_NAMES = {
    "none": JohansenCase.NONE,
    "restricted_const": JohansenCase.RESTRICTED_CONST,
    "unrestricted_const": JohansenCase.UNRESTRICTED_CONST,
    "restricted_trend": JohansenCase.RESTRICTED_TREND,
    "unrestricted_trend": JohansenCase.UNRESTRICTED_TREND,
}


def parse_case(text: str) -> JohansenCase:
    key = text.strip().lower()
    if key.isdigit():
        return JohansenCase(int(key))
    if key in _CASE_NAMES:
        return _CASE_NAMES[key]
    raise DataError(f"unknown cointegration case {text!r}; use 1-5 or one "
                    f"of {sorted(_CASE_NAMES)}")


def _parse_bool(text: str) -> bool:
    value = text.strip().lower()
    if value in ("1", "true", "yes", "on"):
        return True
    if value in ("0", "false", "no", "off"):
        return False
    raise DataError(f"cannot parse boolean from {text!r}")


@dataclass(frozen=True)
class PipelineConfig:
    """Validated settings for a full pipeline run."""

    data_path: Path
    regions: dict[str, str]
    take_logs: bool = True
    unit_root_max_lag: int = 15
    unit_root_criterion: Criterion = Criterion.AIC
    var_max_lag: int = 5
    var_initial_order: int = 3
    var_order: int = 5
    constant: bool = True
    trend: bool = True
    dummy_spec: DummySpec = field(default_factory=DummySpec)
    case: JohansenCase = JohansenCase.UNRESTRICTED_CONST
    rank_policy: str = "trace"
    rank_level: float = 0.05
    vecm_lags: int = 4
    lop_level: float = 0.01
    granger_level: float = 0.05
    pivot: int = 0

    def __post_init__(self):
        if self.vecm_lags != self.var_order - 1:
            raise DataError(f"vecm lags ({self.vecm_lags}) must equal the "
                            f"VAR order minus one ({self.var_order - 1})")
        if self.var_order < 2:
            raise DataError("the final VAR order must be at least 2")
        if not 0 < self.lop_level < 1 or not 0 < self.rank_level < 1:
            raise DataError("significance levels must lie in (0, 1)")


def load_pipeline_config(path: str | Path) -> PipelineConfig:
    raw = read_config(path)
    missing = [key for key in ("data.path", "data.regions") if key not in raw]
    if missing:
        raise DataError(f"config is missing required keys: {missing}")
    base = Path(path).resolve().parent
    data_path = Path(raw["data.path"])
    if not data_path.is_absolute():
        data_path = base / data_path
    var_order = int(raw.get("var.order", 5))
    return PipelineConfig(
        data_path=data_path,
        regions=parse_region_mapping(raw["data.regions"]),
        take_logs=_parse_bool(raw.get("data.log", "true")),
        unit_root_max_lag=int(raw.get("unit_root.max_lag", 15)),
        unit_root_criterion=Criterion(raw.get("unit_root.criterion", "aic")),
        var_max_lag=int(raw.get("var.max_lag", 5)),
        var_initial_order=int(raw.get("var.initial_order", 3)),
        var_order=var_order,
        constant=_parse_bool(raw.get("var.constant", "true")),
        trend=_parse_bool(raw.get("var.trend", "true")),
        dummy_spec=dummy_spec_from_config(raw),
        case=parse_case(raw.get("johansen.case", "unrestricted_const")),
        rank_policy=raw.get("rank.policy", "trace"),
        rank_level=float(raw.get("rank.level", "0.05")),
        vecm_lags=int(raw.get("vecm.lags", var_order - 1)),
        lop_level=float(raw.get("lop.level", "0.01")),
        granger_level=float(raw.get("granger.level", "0.05")),
        pivot=int(raw.get("vecm.pivot", "0")),
    )


def _load_data(config: PipelineConfig) -> tuple[PricePanel, DummyMatrix]:
    panel = load_panel(config.data_path, config.regions)
    if config.take_logs:
        panel = log_transform(panel)
    dummies = build_dummies(config.dummy_spec, panel.dates)
    return panel, dummies


def _auto_respec(panel, det, dummies, start_order, level=0.05,
                 max_order=8, outlier_threshold=3.5):
    """Add lags until the serial tests pass, then propose impulse dummies.

    Returns (order, dummy_matrix, proposed_dummy_months).
    """
    order = start_order
    proposed: list[str] = []
    current = dummies
    for _ in range(12):
        model = fit_var(panel, order, det, current)
        serial = lm_serial_test(model, 4)
        if any(row.p < level for row in serial) and order < max_order:
            order += 1
            continue
        normality = jarque_bera_test(model)
        if normality.joint_p >= level:
            break
        std = model.resid / np.sqrt(np.diag(model.sigma_df))
        outliers = np.unique(np.argwhere(np.abs(std) > outlier_threshold)[:, 0])
        fresh = [panel.dates[order + int(i)] for i in outliers
                 if panel.dates[order + int(i)] not in proposed]
        if not fresh:
            break
        proposed.extend(fresh)
        spec = DummySpec([(f"DA{i + 1}", [m]) for i, m in enumerate(proposed)])
        extra = build_dummies(spec, panel.dates)
        merged = np.column_stack([dummies.values, extra.values]) \
            if dummies.ncols else extra.values
        current = DummyMatrix(dummies.names + extra.names, merged)
    return order, current, proposed


def run_pipeline(config: PipelineConfig, auto_respec: bool = False) -> dict:
    """Execute every stage and return {filename: content} plus a summary."""
    stage = "ingest"
    try:
        panel, dummies = _load_data(config)
        det = DetTerms(config.constant, config.trend)
        outputs: dict[str, rpt.Table] = {}
        summary: dict = {"stages": []}

        def add(table: rpt.Table):
            outputs[table.name] = table
            summary["stages"].append(table.name)

        stage = "unit-root"
        reports = integration_order(panel, config.unit_root_max_lag)
        add(rpt.unit_root_table(reports))
        summary["integration_orders"] = {r.name: r.order for r in reports}

        stage = "lag-selection"
        lag_table = lag_order_selection(panel, config.var_max_lag, det, dummies)
        add(rpt.lag_selection_table(lag_table))
        summary["lag_selection"] = dict(lag_table.selected)

        stage = "initial-var"
        initial = fit_var(panel, config.var_initial_order, det)
        add(rpt.var_coef_table(initial))
        serial_initial = lm_serial_test(initial, 4)
        add(rpt.serial_table(serial_initial, initial.order))
        add(rpt.normality_table(jarque_bera_test(initial), initial.order))

        stage = "final-var"
        final_order = config.var_order
        if auto_respec:
            final_order, dummies, proposed = _auto_respec(
                panel, det, dummies, config.var_initial_order)
            summary["auto_respec"] = {"order": final_order,
                                      "proposed_dummies": proposed}
        final = fit_var(panel, final_order, det, dummies)
        add(rpt.var_coef_table(final))
        serial_final = lm_serial_test(final, 4)
        add(rpt.serial_table(serial_final, final.order))
        add(rpt.normality_table(jarque_bera_test(final), final.order))
        add(rpt.stability_table(stability_roots(final), final.order))
        summary["final_var_order"] = final_order

        stage = "cointegration"
        rrr = reduced_rank_regression(panel, final_order, config.case, dummies)
        trace = trace_test(rrr, config.rank_level)
        maxeig = max_eigen_test(rrr, config.rank_level)
        add(rpt.rank_test_table(trace))
        add(rpt.rank_test_table(maxeig))

        stage = "rank-selection"
        selection = select_rank(trace, maxeig, config.rank_policy)
        summary["rank"] = selection.rank
        summary["rank_warnings"] = list(selection.warnings)
        if selection.rank == 0:
            raise NumericalError("no cointegration found: the VECM stages "
                                 "require rank >= 1")

        stage = "vecm"
        model = fit_vecm(panel, final_order - 1, selection.rank, config.case,
                         dummies, config.pivot)
        add(rpt.vecm_table(model))
        _, equations = normalize_beta(model.beta, config.pivot,
                                      model.beta_labels)
        summary["long_run_equations"] = equations
        summary["beta"] = [[float(v) for v in col] for col in model.beta.T]
        summary["alpha"] = [[float(v) for v in col] for col in model.alpha.T]

        stage = "granger"
        granger = granger_wald(model, config.granger_level)
        add(rpt.granger_table(granger))
        summary["granger_rejections"] = [
            {"dependent": r.dependent, "excluded": r.excluded,
             "p": round(r.p_value, 4)}
            for r in granger.rows if r.reject and r.excluded != "All"]

        stage = "lop"
        lop = pairwise_lop(panel, model.lags, selection.rank
                           if selection.rank == 1 else 1, config.case,
                           dummies, config.lop_level) \
            if selection.rank == 1 else None
        if lop is not None:
            add(rpt.lop_table(lop))
            summary["lop_pairs_holding"] = [list(p) for p in lop.holding_pairs]
        try:
            joint = joint_lop_test(panel, model.lags, config.case, dummies,
                                   config.rank_level)
            summary["joint_lop"] = {"lr": joint.lr, "df": joint.df,
                                    "p": round(joint.p_value, 4)}
        except MarketcointError as exc:
            summary["joint_lop"] = {"untestable": str(exc)}

        stage = "ect"
        dates, values = ect_series(model)
        add(rpt.ect_table(dates, values))

        return {"tables": outputs, "summary": summary}
    except MarketcointError as exc:
        raise type(exc)(f"pipeline stage '{stage}' failed: {exc}") from exc


def write_outputs(bundle: dict, out_dir: Path, fmt: str) -> list[str]:
    out_dir.mkdir(parents=True, exist_ok=True)
    extension = {"text": "txt", "csv": "csv", "json": "json"}[fmt]
    written = []
    for name, table in bundle["tables"].items():
        ext = "csv" if name == "ect" else extension
        path = out_dir / f"{name}.{ext}"
        path.write_text(table.render("csv" if name == "ect" else fmt))
        written.append(path.name)
    summary = dict(bundle["summary"])
    summary["files"] = sorted(written)
    (out_dir / "summary.json").write_text(
        json.dumps(summary, indent=2, sort_keys=True) + "\n")
    written.append("summary.json")
    return written


def _fail(exc: MarketcointError) -> None:
    click.echo(f"error: {exc}", err=True)
    code = EXIT_DATA_ERROR if isinstance(exc, DataError) else EXIT_NUMERICAL_ERROR
    sys.exit(code)


def _common_options(func):
    func = click.option("--config", "config_path", required=True,
                        type=click.Path(), help="pipeline config file")(func)
    func = click.option("--format", "fmt", default="text",
                        type=click.Choice(rpt.FORMATS))(func)
    return func


@click.group()
def main():
    """Cointegration toolkit for regional price panels."""


@main.command("unit-root")
@_common_options
def cli_unit_root(config_path, fmt):
    """Unit-root summary for every region (levels and differences)."""
    try:
        config = load_pipeline_config(config_path)
        panel, _ = _load_data(config)
        reports = integration_order(panel, config.unit_root_max_lag)
        click.echo(rpt.unit_root_table(reports).render(fmt), nl=False)
    except MarketcointError as exc:
        _fail(exc)


@main.group()
def var():
    """VAR estimation, order selection and diagnostics."""


@var.command("select-lag")
@_common_options
def cli_select_lag(config_path, fmt):
    try:
        config = load_pipeline_config(config_path)
        panel, dummies = _load_data(config)
        table = lag_order_selection(panel, config.var_max_lag,
                                    DetTerms(config.constant, config.trend),
                                    dummies)
        click.echo(rpt.lag_selection_table(table).render(fmt), nl=False)
    except MarketcointError as exc:
        _fail(exc)


@var.command("fit")
@_common_options
@click.option("--order", type=int, default=None,
              help="override the configured VAR order")
@click.option("--with-dummies/--no-dummies", default=True)
def cli_var_fit(config_path, fmt, order, with_dummies):
    try:
        config = load_pipeline_config(config_path)
        panel, dummies = _load_data(config)
        p = order if order is not None else config.var_order
        model = fit_var(panel, p, DetTerms(config.constant, config.trend),
                        dummies if with_dummies else None)
        click.echo(rpt.var_coef_table(model).render(fmt), nl=False)
    except MarketcointError as exc:
        _fail(exc)


@var.command("diagnose")
@_common_options
@click.option("--order", type=int, default=None)
@click.option("--with-dummies/--no-dummies", default=True)
def cli_var_diagnose(config_path, fmt, order, with_dummies):
    try:
        config = load_pipeline_config(config_path)
        panel, dummies = _load_data(config)
        p = order if order is not None else config.var_order
        model = fit_var(panel, p, DetTerms(config.constant, config.trend),
                        dummies if with_dummies else None)
        click.echo(rpt.serial_table(lm_serial_test(model, 4), p).render(fmt),
                   nl=False)
        click.echo(rpt.normality_table(jarque_bera_test(model), p).render(fmt),
                   nl=False)
        click.echo(rpt.stability_table(stability_roots(model), p).render(fmt),
                   nl=False)
    except MarketcointError as exc:
        _fail(exc)


@main.group()
def coint():
    """Cointegration rank tests."""


@coint.command("test")
@_common_options
@click.option("--case", "case_text", default=None,
              help="deterministic case (1-5 or name), overrides config")
@click.option("--level", type=float, default=0.05)
def cli_coint_test(config_path, fmt, case_text, level):
    try:
        config = load_pipeline_config(config_path)
        panel, dummies = _load_data(config)
        case = parse_case(case_text) if case_text else config.case
        rrr = reduced_rank_regression(panel, config.var_order, case, dummies)
        click.echo(rpt.rank_test_table(trace_test(rrr, level)).render(fmt),
                   nl=False)
        click.echo(rpt.rank_test_table(max_eigen_test(rrr, level)).render(fmt),
                   nl=False)
    except MarketcointError as exc:
        _fail(exc)


@main.group("vecm")
def vecm_group():
    """VECM estimation and tests on the long-run structure."""


def _fit_from_config(config, rank):
    panel, dummies = _load_data(config)
    return panel, dummies, fit_vecm(panel, config.vecm_lags, rank,
                                    config.case, dummies, config.pivot)


@vecm_group.command("fit")
@_common_options
@click.option("--rank", type=int, default=1)
@click.option("--ect-out", type=click.Path(), default=None,
              help="also write the error-correction series as CSV")
def cli_vecm_fit(config_path, fmt, rank, ect_out):
    try:
        config = load_pipeline_config(config_path)
        _, _, model = _fit_from_config(config, rank)
        click.echo(rpt.vecm_table(model).render(fmt), nl=False)
        if ect_out:
            dates, values = ect_series(model)
            rpt.emit_table(rpt.ect_table(dates, values), ect_out, "csv")
    except MarketcointError as exc:
        _fail(exc)


@vecm_group.command("granger")
@_common_options
@click.option("--rank", type=int, default=1)
@click.option("--level", type=float, default=0.05)
def cli_vecm_granger(config_path, fmt, rank, level):
    try:
        config = load_pipeline_config(config_path)
        _, _, model = _fit_from_config(config, rank)
        click.echo(rpt.granger_table(granger_wald(model, level)).render(fmt),
                   nl=False)
    except MarketcointError as exc:
        _fail(exc)


@vecm_group.command("lop")
@_common_options
@click.option("--pairs/--joint", default=True)
@click.option("--level", type=float, default=None)
def cli_vecm_lop(config_path, fmt, pairs, level):
    try:
        config = load_pipeline_config(config_path)
        panel, dummies = _load_data(config)
        if pairs:
            table = pairwise_lop(panel, config.vecm_lags, 1, config.case,
                                 dummies, level or config.lop_level)
            click.echo(rpt.lop_table(table).render(fmt), nl=False)
        else:
            res = joint_lop_test(panel, config.vecm_lags, config.case,
                                 dummies, config.rank_level)
            click.echo(f"joint parity LR = {rpt.fmt_stat(res.lr)}, "
                       f"df = {res.df}, p = {rpt.fmt_p(res.p_value)}")
    except MarketcointError as exc:
        _fail(exc)


@main.command("simulate")
@click.option("--kind", type=click.Choice([k.value for k in DgpKind]),
              default="random-walk")
@click.option("--k", type=int, default=1)
@click.option("--t", type=int, default=250)
@click.option("--seed", type=int, default=0)
@click.option("--out", type=click.Path(), required=True)
def cli_simulate(kind, k, t, seed, out):
    """Write a simulated panel to CSV (for fixtures and examples)."""
    try:
        panel = generate(DgpSpec(kind=DgpKind(kind), k=k, t=t, seed=seed))
        lines = ["date," + ",".join(panel.names)]
        for i, date in enumerate(panel.dates):
            cells = ",".join(repr(float(v)) for v in panel.values[i])
            lines.append(f"{date},{cells}")
        Path(out).write_text("\n".join(lines) + "\n")
        click.echo(f"wrote {out}")
    except MarketcointError as exc:
        _fail(exc)


@main.command("pipeline")
@_common_options
@click.option("--out", "out_dir", type=click.Path(), default="out")
@click.option("--auto-respec", is_flag=True, default=False)
def cli_pipeline(config_path, fmt, out_dir, auto_respec):
    """Run the full analysis and write all tables plus summary.json."""
    try:
        config = load_pipeline_config(config_path)
        bundle = run_pipeline(config, auto_respec)
        written = write_outputs(bundle, Path(out_dir), fmt)
        click.echo(f"wrote {len(written)} files to {out_dir}")
    except MarketcointError as exc:
        _fail(exc)


if __name__ == "__main__":
    main()
