"""Price-panel ingestion: load, validate and transform regional monthly series.

A panel is a strictly monthly, gap-free T x K matrix of prices (or log
prices) with named columns.  Impulse-dummy regressors are built from named
sets of calendar months.  Everything here is immutable after construction so
panels can be shared freely across threads.
"""

from __future__ import annotations

import csv
import enum
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import DataError


class Scale(enum.Enum):
    """Measurement scale of a panel's values."""

    LEVEL = "level"
    LOG = "log"
    DIFF = "first-difference"


def parse_month(text: str) -> int:
    """Parse ``YYYY-MM`` into an absolute month number (year*12 + month-1)."""
    parts = text.strip().split("-")
    if len(parts) < 2:
        raise DataError(f"cannot parse year-month from {text!r}")
    try:
        year, month = int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise DataError(f"cannot parse year-month from {text!r}") from exc
    if not 1 <= month <= 12:
        raise DataError(f"month out of range in {text!r}")
    return year * 12 + (month - 1)


def format_month(number: int) -> str:
    """Inverse of :func:`parse_month`."""
    year, month = divmod(number, 12)
    return f"{year:04d}-{month + 1:02d}"


def _readonly(values: np.ndarray) -> np.ndarray:
    out = np.array(values, dtype=float)
    out.flags.writeable = False
    return out


@dataclass(frozen=True)
class PricePanel:
    """Aligned multivariate monthly time series with named columns.

    Parameters
    ----------
    dates : sequence of str
        Calendar months as ``YYYY-MM``, strictly increasing by one month.
    names : sequence of str
        Column (region) labels, unique.
    values : ndarray, shape (T, K)
        Prices, log prices or first differences; no missing values.
    scale : Scale
        What the values measure.
    """

    dates: tuple[str, ...]
    names: tuple[str, ...]
    values: np.ndarray
    scale: Scale = Scale.LEVEL

    def __init__(self, dates: Sequence[str], names: Sequence[str],
                 values: np.ndarray, scale: Scale = Scale.LEVEL):
        object.__setattr__(self, "dates", tuple(dates))
        object.__setattr__(self, "names", tuple(names))
        object.__setattr__(self, "values", _readonly(values))
        object.__setattr__(self, "scale", scale)
        self._validate()

    def _validate(self) -> None:
        t, k = self.shape
        if t < 1:
            raise DataError("panel must contain at least one row")
        if len(self.dates) != t:
            raise DataError("dates length does not match number of rows")
        if len(self.names) != k:
            raise DataError("names length does not match number of columns")
        if len(set(self.names)) != k:
            raise DataError("column names must be unique")
        if not np.all(np.isfinite(self.values)):
            raise DataError("panel contains missing or non-finite values")
        numbers = [parse_month(d) for d in self.dates]
        for prev, cur in zip(numbers, numbers[1:]):
            if cur != prev + 1:
                raise DataError("non-contiguous or duplicated dates")

    @property
    def shape(self) -> tuple[int, int]:
        if self.values.ndim != 2:
            raise DataError("values must be a 2-D array")
        return self.values.shape

    @property
    def nobs(self) -> int:
        return self.shape[0]

    @property
    def nseries(self) -> int:
        return self.shape[1]

    def series(self, name: str) -> np.ndarray:
        """Return one column by label."""
        try:
            j = self.names.index(name)
        except ValueError as exc:
            raise DataError(f"unknown series {name!r}") from exc
        return self.values[:, j]

    def month_position(self, month: str) -> int:
        """Row index of a calendar month, or raise if outside the panel."""
        number = parse_month(month)
        first = parse_month(self.dates[0])
        pos = number - first
        if not 0 <= pos < self.nobs:
            raise DataError(f"month {month} outside panel range "
                            f"{self.dates[0]}..{self.dates[-1]}")
        return pos


@dataclass(frozen=True)
class DummySpec:
    """Named impulse dummies: each entry is (name, set of ``YYYY-MM`` months)."""

    entries: tuple[tuple[str, frozenset[str]], ...] = field(default_factory=tuple)

    def __init__(self, entries: Iterable[tuple[str, Iterable[str]]] = ()):
        normalized = tuple((name, frozenset(months)) for name, months in entries)
        names = [name for name, _ in normalized]
        if len(set(names)) != len(names):
            raise DataError("dummy names must be unique")
        object.__setattr__(self, "entries", normalized)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.entries)


@dataclass(frozen=True)
class DummyMatrix:
    """0/1 impulse regressors aligned with a panel's date index."""

    names: tuple[str, ...]
    values: np.ndarray

    def __init__(self, names: Sequence[str], values: np.ndarray):
        object.__setattr__(self, "names", tuple(names))
        object.__setattr__(self, "values", _readonly(values))
        if self.values.ndim != 2:
            raise DataError("dummy values must be 2-D")
        if self.values.shape[1] != len(self.names):
            raise DataError("dummy names do not match number of columns")
        if self.values.size and not np.isin(self.values, (0.0, 1.0)).all():
            raise DataError("dummy entries must be 0 or 1")

    @property
    def ncols(self) -> int:
        return self.values.shape[1]

    def rows(self, start: int, stop: int | None = None) -> np.ndarray:
        return self.values[start:stop]


def empty_dummies(nobs: int) -> DummyMatrix:
    """A dummy matrix with zero columns (no regressors)."""
    return DummyMatrix((), np.zeros((nobs, 0)))


def load_panel(path: str | Path, columns: Mapping[str, str]) -> PricePanel:
    """Load a level-scale panel from a CSV file.

    The file must contain a ``date`` column (ISO year-month) plus one column
    per region.  ``columns`` maps CSV column names to region labels, in the
    order the panel's columns should appear.  Rows are sorted by date;
    duplicated or non-contiguous months are a hard error, as are missing or
    unparseable values (reported with their line number).
    """
    path = Path(path)
    if not path.exists():
        raise DataError(f"data file not found: {path}")
    if not columns:
        raise DataError("no data columns configured")

    with path.open(newline="") as handle:
        reader = csv.DictReader(handle)
        header = reader.fieldnames or []
        if "date" not in header:
            raise DataError(f"{path}: missing required 'date' column")
        missing = [c for c in columns if c not in header]
        if missing:
            raise DataError(f"{path}: missing configured columns {missing}")

        rows: list[tuple[int, list[float]]] = []
        for lineno, record in enumerate(reader, start=2):
            raw_date = (record.get("date") or "").strip()
            if not raw_date and all(not (record.get(c) or "").strip()
                                    for c in columns):
                continue  # ignore blank trailing lines
            try:
                month = parse_month(raw_date)
                prices = [float(record[c]) for c in columns]
            except (DataError, TypeError, ValueError) as exc:
                raise DataError(f"{path}:{lineno}: unparseable row ({exc})") from exc
            if any(not math.isfinite(p) for p in prices):
                raise DataError(f"{path}:{lineno}: missing or non-finite value")
            rows.append((month, prices))

    if not rows:
        raise DataError(f"{path}: no data rows")
    rows.sort(key=lambda item: item[0])
    months = [m for m, _ in rows]
    if any(b != a + 1 for a, b in zip(months, months[1:])):
        raise DataError("non-contiguous or duplicated dates")

    values = np.array([p for _, p in rows], dtype=float)
    dates = [format_month(m) for m in months]
    return PricePanel(dates, tuple(columns.values()), values, Scale.LEVEL)


def log_transform(panel: PricePanel) -> PricePanel:
    """Element-wise natural log of a level panel."""
    if panel.scale is not Scale.LEVEL:
        raise DataError("log transform requires a level-scale panel")
    bad = np.argwhere(panel.values <= 0)
    if bad.size:
        t, j = bad[0]
        raise DataError(f"non-positive price at {panel.dates[t]} "
                        f"for {panel.names[j]}: cannot take logs")
    return PricePanel(panel.dates, panel.names, np.log(panel.values), Scale.LOG)


def difference(panel: PricePanel, d: int = 1) -> PricePanel:
    """First differences; output has T-1 rows and first-difference scale."""
    if d != 1:
        raise DataError("only first differences (d=1) are supported")
    if panel.nobs < 2:
        raise DataError("differencing requires at least two observations")
    values = panel.values[1:] - panel.values[:-1]
    return PricePanel(panel.dates[1:], panel.names, values, Scale.DIFF)


def build_dummies(spec: DummySpec, dates: Sequence[str]) -> DummyMatrix:
    """Expand an impulse-dummy spec over a panel's date index.

    Column j holds a 1 exactly at the months of entry j.  Months outside the
    index are an error.
    """
    dates = tuple(dates)
    positions = {d: i for i, d in enumerate(dates)}
    values = np.zeros((len(dates), len(spec.entries)))
    for j, (name, months) in enumerate(spec.entries):
        for month in sorted(months):
            canonical = format_month(parse_month(month))
            if canonical not in positions:
                raise DataError(f"dummy {name!r}: month {month} outside "
                                f"panel range {dates[0]}..{dates[-1]}")
            values[positions[canonical], j] = 1.0
    return DummyMatrix(spec.names, values)


def read_config(path: str | Path) -> dict[str, str]:
    """Read a flat ``key = value`` config file.

    Blank lines and ``#`` comments are ignored.  Keys are dotted paths such
    as ``data.path`` or ``dummies.D1``; later duplicates override earlier
    ones.
    """
    path = Path(path)
    if not path.exists():
        raise DataError(f"config file not found: {path}")
    out: dict[str, str] = {}
    for lineno, line in enumerate(path.read_text().splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise DataError(f"{path}:{lineno}: expected 'key = value'")
        key, _, value = stripped.partition("=")
        out[key.strip()] = value.strip()
    return out


def parse_region_mapping(text: str) -> dict[str, str]:
    """Parse ``csv_col:LABEL, csv_col:LABEL`` into an ordered mapping.

    A bare column name maps to itself.
    """
    mapping: dict[str, str] = {}
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        if ":" in item:
            col, _, label = item.partition(":")
            mapping[col.strip()] = label.strip()
        else:
            mapping[item] = item
    if not mapping:
        raise DataError("empty region mapping")
    return mapping


def dummy_spec_from_config(config: Mapping[str, str]) -> DummySpec:
    """Collect ``dummies.<name> = YYYY-MM[, YYYY-MM...]`` keys from a config."""
    entries = []
    for key, value in config.items():
        if key.startswith("dummies."):
            name = key.split(".", 1)[1]
            months = [m.strip() for m in value.split(",") if m.strip()]
            entries.append((name, months))
    return DummySpec(entries)
