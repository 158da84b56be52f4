"""Generate the embedded Dickey-Fuller t-distribution tables.

Simulates the distribution of the unit-root t-ratio for the three
deterministic cases (none / constant / constant+trend) on a grid of sample
sizes, extrapolates the quantiles to the asymptotic limit linearly in 1/T,
and writes the result to ``src/marketcoint/_df_tables.py``.

Run from the repository root:

    python3 tools/gen_df_tables.py

Regeneration is deterministic (fixed seed).  Expect a few minutes.
"""

from __future__ import annotations

import sys
import time
from pathlib import Path

import numpy as np

SEED = 796_214_303
REPS = 400_000
BATCH = 20_000
SIZES = (50, 100, 250, 500, 1000, 2500)
EXTRAP_PAIR = (1000, 2500)  # quantiles extrapolated to 1/T = 0 from these

_LOWER = [0.001, 0.0015, 0.002, 0.003, 0.004, 0.005, 0.006, 0.008, 0.010,
          0.0125, 0.015, 0.0175, 0.020, 0.025, 0.030, 0.035, 0.040, 0.045,
          0.050, 0.055, 0.060, 0.070, 0.080, 0.090, 0.100]
PROBS = np.array(_LOWER + [round(0.125 + 0.025 * i, 4) for i in range(31)]
                 + [round(1 - p, 4) for p in reversed(_LOWER)])


def _tstats_batch(y: np.ndarray) -> dict[str, np.ndarray]:
    """Unit-root t-ratios for all three cases from one batch of paths.

    ``y`` has shape (B, n+1); the regression sample has n rows.
    """
    x = y[:, :-1]
    d = y[:, 1:] - y[:, :-1]
    n = x.shape[1]
    out = {}

    def tstat(xr, dr, nparams):
        sxx = np.einsum("bt,bt->b", xr, xr)
        sxd = np.einsum("bt,bt->b", xr, dr)
        b = sxd / sxx
        rss = np.einsum("bt,bt->b", dr, dr) - b * sxd
        s2 = rss / (n - nparams)
        return b / np.sqrt(s2 / sxx)

    out["n"] = tstat(x, d, 1)

    xc = x - x.mean(axis=1, keepdims=True)
    dc = d - d.mean(axis=1, keepdims=True)
    out["c"] = tstat(xc, dc, 2)

    tau = np.arange(n, dtype=float)
    tau -= tau.mean()
    tau2 = tau @ tau
    xt = xc - np.outer(np.einsum("bt,t->b", xc, tau) / tau2, tau)
    dt = dc - np.outer(np.einsum("bt,t->b", dc, tau) / tau2, tau)
    out["ct"] = tstat(xt, dt, 3)
    return out


def simulate_size(n: int, rng: np.random.Generator) -> dict[str, np.ndarray]:
    stats = {case: np.empty(REPS) for case in ("n", "c", "ct")}
    done = 0
    while done < REPS:
        b = min(BATCH, REPS - done)
        steps = rng.standard_normal((b, n + 1))
        steps[:, 0] = 0.0
        y = np.cumsum(steps, axis=1)
        for case, values in _tstats_batch(y).items():
            stats[case][done:done + b] = values
        done += b
    return {case: np.quantile(values, PROBS) for case, values in stats.items()}


def main() -> None:
    rng = np.random.default_rng(SEED)
    tables: dict[str, dict[int, np.ndarray]] = {"n": {}, "c": {}, "ct": {}}
    for n in SIZES:
        t0 = time.time()
        quantiles = simulate_size(n, rng)
        for case in tables:
            tables[case][n] = quantiles[case]
        print(f"n={n}: {time.time() - t0:.1f}s", file=sys.stderr)

    t1, t2 = EXTRAP_PAIR
    weight = (1.0 / t2) / (1.0 / t1 - 1.0 / t2)
    for case in tables:
        q1, q2 = tables[case][t1], tables[case][t2]
        tables[case][0] = q2 + (q2 - q1) * weight

    dest = Path(__file__).resolve().parent.parent / "src" / "marketcoint" / "_df_tables.py"
    lines = [
        '"""Quantile tables for the Dickey-Fuller t-distribution.',
        "",
        "Generated by tools/gen_df_tables.py (fixed seed); do not edit by hand.",
        "Keys: deterministic case ('n', 'c', 'ct') -> regression sample size",
        "(0 means the asymptotic limit) -> quantiles at PROBS.",
        '"""',
        "",
        "PROBS = " + repr([float(p) for p in PROBS]),
        "",
        "QUANTILES = {",
    ]
    for case, grids in tables.items():
        lines.append(f"    {case!r}: {{")
        for n in sorted(grids):
            values = ", ".join(f"{v:.5f}" for v in grids[n])
            lines.append(f"        {n}: [{values}],")
        lines.append("    },")
    lines.append("}")
    dest.write_text("\n".join(lines) + "\n")
    print(f"wrote {dest}", file=sys.stderr)


if __name__ == "__main__":
    main()
