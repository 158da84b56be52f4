"""Generate the embedded asymptotic tables for the cointegration rank tests.

The trace and maximum-eigenvalue statistics converge to functionals of
vector Brownian motion whose composition depends on the deterministic case:

    case 1 (none)                  F = W
    case 2 (restricted constant)   F = (W', 1)'
    case 3 (unrestricted constant) F = (demeaned W_1..W_{n-1}, demeaned t)'
    case 4 (restricted trend)      F = (demeaned W', demeaned t)'
    case 5 (unrestricted trend)    F = (detrended W_1..W_{n-1}, detrended t^2)'

with the statistic tr[ (int F dW')' (int F F')^{-1} (int F dW') ] (trace) or
its largest eigenvalue (max-eigen).  Each (case, dimension) cell is simulated
at two step counts and the moments/quantiles extrapolated linearly in 1/T.
P-values use a gamma fit to the first two moments; the 5% critical values
are stored directly from the extrapolated quantiles.

Run from the repository root (deterministic, fixed seed; takes a while):

    python3 tools/gen_johansen_tables.py
"""

from __future__ import annotations

import sys
import time
from pathlib import Path

import numpy as np

SEED = 412_905_771
REPS = 100_000
MAX_DIM = 12
STEP_PAIR = (300, 1200)
CASES = (1, 2, 3, 4, 5)


def _build_f(w: np.ndarray, case: int) -> np.ndarray:
    """Deterministic-case functional F_{t-1}, shape (B, T, nF).

    ``w`` holds the Brownian path at t-1 (left endpoints), shape (B, T, n).
    """
    b, t, n = w.shape
    tau = (np.arange(t, dtype=float) / t)
    ones = np.ones((b, t, 1))
    if case == 1:
        return w
    if case == 2:
        return np.concatenate([w, ones], axis=2)
    if case == 3:
        wd = w - w.mean(axis=1, keepdims=True)
        trend = np.broadcast_to((tau - tau.mean())[None, :, None], (b, t, 1))
        return np.concatenate([wd[:, :, :-1], trend], axis=2) if n > 1 \
            else np.asarray(np.broadcast_to(trend, (b, t, 1)))
    if case == 4:
        wd = w - w.mean(axis=1, keepdims=True)
        trend = np.broadcast_to((tau - tau.mean())[None, :, None], (b, t, 1))
        return np.concatenate([wd, trend], axis=2)
    if case == 5:
        basis = np.column_stack([np.ones(t), tau])
        q, _ = np.linalg.qr(basis)
        wdt = w - np.matmul(q[None], np.matmul(q.T[None], w))
        quad = tau ** 2 - q @ (q.T @ tau ** 2)
        trend = np.broadcast_to(quad[None, :, None], (b, t, 1))
        return np.concatenate([wdt[:, :, :-1], trend], axis=2) if n > 1 \
            else np.asarray(np.broadcast_to(trend, (b, t, 1)))
    raise ValueError(f"unknown case {case}")


def simulate_cell(n: int, t: int, rng: np.random.Generator,
                  batch: int) -> dict[int, tuple[np.ndarray, np.ndarray]]:
    """Trace and max-eigen draws for every case at dimension n, T steps."""
    out = {case: (np.empty(REPS), np.empty(REPS)) for case in CASES}
    done = 0
    while done < REPS:
        b = min(batch, REPS - done)
        dw = rng.standard_normal((b, t, n)) / np.sqrt(t)
        w = np.cumsum(dw, axis=1)
        w_left = np.concatenate([np.zeros((b, 1, n)), w[:, :-1, :]], axis=1)
        for case in CASES:
            f = _build_f(w_left, case)
            m = np.matmul(f.transpose(0, 2, 1), f) / t
            a = np.matmul(f.transpose(0, 2, 1), dw)
            solved = np.linalg.solve(m, a)
            quad = np.matmul(a.transpose(0, 2, 1), solved)
            trace = np.trace(quad, axis1=1, axis2=2)
            maxeig = np.linalg.eigvalsh(quad)[:, -1]
            out[case][0][done:done + b] = trace
            out[case][1][done:done + b] = maxeig
        done += b
    return out


def main() -> None:
    rng = np.random.default_rng(SEED)
    # stats[case][n][T] = (trace draws summary, maxeig draws summary)
    summaries: dict[int, dict[int, dict[int, dict[str, float]]]] = \
        {case: {n: {} for n in range(1, MAX_DIM + 1)} for case in CASES}

    for n in range(1, MAX_DIM + 1):
        for t in STEP_PAIR:
            t0 = time.time()
            batch = max(200, int(4e6 / (t * (n + 1))))
            cell = simulate_cell(n, t, rng, batch)
            for case in CASES:
                trace, maxeig = cell[case]
                summaries[case][n][t] = {
                    "tr_mean": float(trace.mean()),
                    "tr_var": float(trace.var()),
                    "tr_cv5": float(np.quantile(trace, 0.95)),
                    "me_mean": float(maxeig.mean()),
                    "me_var": float(maxeig.var()),
                    "me_cv5": float(np.quantile(maxeig, 0.95)),
                }
            print(f"n={n} T={t}: {time.time() - t0:.1f}s", file=sys.stderr)

    t1, t2 = STEP_PAIR
    weight = (1.0 / t2) / (1.0 / t1 - 1.0 / t2)
    table: dict[int, dict[int, dict[str, float]]] = {}
    for case in CASES:
        table[case] = {}
        for n in range(1, MAX_DIM + 1):
            s1, s2 = summaries[case][n][t1], summaries[case][n][t2]
            table[case][n] = {key: s2[key] + (s2[key] - s1[key]) * weight
                              for key in s2}

    dest = Path(__file__).resolve().parent.parent / "src" / "marketcoint" / "_johansen_tables.py"
    lines = [
        '"""Asymptotic moments and 5% critical values for the rank tests.',
        "",
        "Generated by tools/gen_johansen_tables.py (fixed seed); do not edit.",
        "MOMENTS[case][n] with n = K - r holds mean/variance/5%-quantile of",
        "the trace (tr_*) and max-eigen (me_*) asymptotic distributions.",
        '"""',
        "",
        "MAX_DIM = %d" % MAX_DIM,
        "",
        "MOMENTS = {",
    ]
    for case in CASES:
        lines.append(f"    {case}: {{")
        for n in range(1, MAX_DIM + 1):
            entry = table[case][n]
            body = ", ".join(f"{k!r}: {v:.5f}" for k, v in entry.items())
            lines.append(f"        {n}: {{{body}}},")
        lines.append("    },")
    lines.append("}")
    dest.write_text("\n".join(lines) + "\n")
    print(f"wrote {dest}", file=sys.stderr)


if __name__ == "__main__":
    main()
