"""Seeded data-generating processes for oracle tests and Monte Carlo suites.

All draws come from numpy's PCG64 generator seeded with
``SeedSequence([seed, substream])``, so replication fan-out uses
``substream = replication index`` and results are bit-reproducible and
independent of scheduling.  Burn-in applies to the stationary part of a
process; pure random walks start at zero.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .errors import SpecificationError
from .ingest import PricePanel, Scale, format_month, parse_month
from .var import companion_matrix


class DgpKind(enum.Enum):
    WHITE_NOISE = "white-noise"
    RANDOM_WALK = "random-walk"
    VAR = "var"
    VECM = "vecm"


@dataclass(frozen=True)
class DgpSpec:
    """Specification of a simulated process.

    ``coefs`` holds the VAR lag matrices (p, K, K); ``alpha``/``beta``/
    ``gamma`` parameterize a VECM (``gamma`` may be empty for no short-run
    dynamics).  ``sigma`` is the innovation covariance (identity when
    omitted).
    """

    kind: DgpKind
    k: int
    t: int
    seed: int
    coefs: np.ndarray | None = None
    alpha: np.ndarray | None = None
    beta: np.ndarray | None = None
    gamma: np.ndarray | None = None
    ce_const: np.ndarray | None = None
    const: np.ndarray | None = None
    sigma: np.ndarray | None = None
    burn_in: int = 200
    start: np.ndarray | None = None
    require_stable: bool = False
    start_month: str = "2000-01"
    names: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.k < 1 or self.t < 1:
            raise SpecificationError("dimensions and length must be positive")
        if self.kind is DgpKind.VAR:
            coefs = self._coefs()
            if coefs.ndim != 3 or coefs.shape[1:] != (self.k, self.k):
                raise SpecificationError("VAR coefficients must be (p, K, K)")
            if self.require_stable:
                roots = np.abs(np.linalg.eigvals(companion_matrix(coefs)))
                if roots.size and roots.max() >= 1.0:
                    raise SpecificationError("VAR specification is unstable")
        if self.kind is DgpKind.VECM:
            alpha, beta = self._alpha_beta()
            if alpha.shape != beta.shape:
                raise SpecificationError("alpha and beta must both be (K, r)")
            r = beta.shape[1]
            if np.linalg.matrix_rank(alpha @ beta.T, tol=1e-10) != r:
                raise SpecificationError("alpha beta' must have rank r")

    def _coefs(self) -> np.ndarray:
        return np.atleast_3d(np.asarray(self.coefs, dtype=float)) \
            if self.coefs is not None else np.empty((0, self.k, self.k))

    def _alpha_beta(self) -> tuple[np.ndarray, np.ndarray]:
        if self.alpha is None or self.beta is None:
            raise SpecificationError("VECM specs need alpha and beta")
        alpha = np.asarray(self.alpha, dtype=float)
        beta = np.asarray(self.beta, dtype=float)
        if alpha.ndim == 1:
            alpha = alpha[:, None]
        if beta.ndim == 1:
            beta = beta[:, None]
        return alpha, beta


def _noise(spec: DgpSpec, rng: np.random.Generator, rows: int) -> np.ndarray:
    z = rng.standard_normal((rows, spec.k))
    if spec.sigma is None:
        return z
    sigma = np.asarray(spec.sigma, dtype=float)
    try:
        factor = np.linalg.cholesky(sigma)
    except np.linalg.LinAlgError:
        # positive semidefinite (possibly zero) covariance
        eigval, eigvec = np.linalg.eigh(sigma)
        if eigval.min() < -1e-12 * max(1.0, abs(eigval.max())):
            raise SpecificationError("innovation covariance must be PSD")
        factor = eigvec @ np.diag(np.sqrt(np.clip(eigval, 0.0, None)))
    return z @ factor.T


def _panel(spec: DgpSpec, values: np.ndarray) -> PricePanel:
    names = spec.names or tuple(f"y{i + 1}" for i in range(spec.k))
    start = parse_month(spec.start_month)
    dates = [format_month(start + i) for i in range(len(values))]
    return PricePanel(dates, names, values, Scale.LOG)


def generate(spec: DgpSpec, substream: int = 0) -> PricePanel:
    """Simulate a panel from the spec; identical inputs give identical output."""
    rng = np.random.default_rng(np.random.SeedSequence([spec.seed, substream]))
    if spec.kind is DgpKind.WHITE_NOISE:
        return _panel(spec, _noise(spec, rng, spec.t))
    if spec.kind is DgpKind.RANDOM_WALK:
        steps = _noise(spec, rng, spec.t)
        if spec.const is not None:
            steps = steps + np.asarray(spec.const, dtype=float)
        return _panel(spec, np.cumsum(steps, axis=0))
    if spec.kind is DgpKind.VAR:
        return _panel(spec, _generate_var(spec, rng))
    if spec.kind is DgpKind.VECM:
        return _panel(spec, _generate_vecm(spec, rng))
    raise SpecificationError(f"unknown DGP kind {spec.kind}")


def _generate_var(spec: DgpSpec, rng: np.random.Generator) -> np.ndarray:
    coefs = spec._coefs()
    p = coefs.shape[0]
    total = spec.t + spec.burn_in + p
    noise = _noise(spec, rng, total)
    const = np.zeros(spec.k) if spec.const is None \
        else np.asarray(spec.const, dtype=float)
    y = np.zeros((total, spec.k))
    if spec.start is not None:
        y[:p] = np.asarray(spec.start, dtype=float)
    for t in range(p, total):
        acc = const + noise[t]
        for i in range(p):
            acc = acc + coefs[i] @ y[t - 1 - i]
        y[t] = acc
    return y[total - spec.t:]


def _generate_vecm(spec: DgpSpec, rng: np.random.Generator) -> np.ndarray:
    alpha, beta = spec._alpha_beta()
    r = beta.shape[1]
    gamma = np.asarray(spec.gamma, dtype=float) if spec.gamma is not None \
        else np.empty((0, spec.k, spec.k))
    if gamma.ndim == 2:
        gamma = gamma[None]
    lags = gamma.shape[0]
    ce_const = np.zeros(r) if spec.ce_const is None \
        else np.asarray(spec.ce_const, dtype=float)
    const = np.zeros(spec.k) if spec.const is None \
        else np.asarray(spec.const, dtype=float)

    total = spec.t + spec.burn_in + lags + 1
    noise = _noise(spec, rng, total)
    y = np.zeros((total, spec.k))
    if spec.start is not None:
        y[:lags + 1] = np.asarray(spec.start, dtype=float)
    dy = np.zeros((total, spec.k))
    for t in range(lags + 1, total):
        ect = beta.T @ y[t - 1] + ce_const
        acc = alpha @ ect + const + noise[t]
        for i in range(lags):
            acc = acc + gamma[i] @ dy[t - 1 - i]
        dy[t] = acc
        y[t] = y[t - 1] + acc
    return y[total - spec.t:]
