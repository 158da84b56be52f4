from pathlib import Path

import numpy as np
import pytest

from marketcoint import DgpKind, DgpSpec, PricePanel, Scale, generate

REPO_ROOT = Path(__file__).resolve().parent.parent
DATA_DIR = REPO_ROOT / "data"
FIXTURE_CSV = DATA_DIR / "demo_beef_panel.csv"
FIXTURE_CONFIG = DATA_DIR / "demo_config.cfg"


@pytest.fixture(scope="session")
def rank1_panel() -> PricePanel:
    """A bivariate cointegrated panel with known beta = (1, -1)."""
    spec = DgpSpec(kind=DgpKind.VECM, k=2, t=600, seed=424242,
                   alpha=np.array([-0.4, 0.2]), beta=np.array([1.0, -1.0]),
                   gamma=np.array([[[0.2, 0.0], [0.05, 0.1]]]),
                   sigma=np.array([[1.0, 0.3], [0.3, 1.0]]) * 0.01)
    return generate(spec)


@pytest.fixture(scope="session")
def trivariate_panel() -> PricePanel:
    """A K=3 rank-1 panel used by the VECM tests."""
    alpha = np.array([-0.3, 0.1, 0.05])
    beta = np.array([1.0, -0.6, -0.4])
    gamma = np.array([[[0.2, 0.0, 0.1], [0.0, 0.15, 0.0], [0.05, 0.0, 0.1]]])
    spec = DgpSpec(kind=DgpKind.VECM, k=3, t=800, seed=905_113,
                   alpha=alpha, beta=beta, gamma=gamma,
                   sigma=np.eye(3) * 0.02)
    return generate(spec)


def write_panel_csv(path: Path, dates, columns: dict[str, list[float]]) -> None:
    names = list(columns)
    lines = ["date," + ",".join(names)]
    for i, date in enumerate(dates):
        lines.append(date + "," + ",".join(repr(float(columns[c][i]))
                                           for c in names))
    path.write_text("\n".join(lines) + "\n")
