"""Cointegration toolkit for regional price panels.

Library surface: panel ingestion (:mod:`marketcoint.ingest`), unit-root
tests (:mod:`marketcoint.unit_root`), VAR modeling and diagnostics
(:mod:`marketcoint.var`), Johansen rank tests (:mod:`marketcoint.johansen`),
VECM estimation with Granger-causality and price-parity restriction tests
(:mod:`marketcoint.vecm`), seeded simulation (:mod:`marketcoint.simulate`)
and a pipeline CLI (:mod:`marketcoint.cli`).
"""

from .errors import DataError, MarketcointError, NumericalError, SpecificationError
from .ingest import (DummyMatrix, DummySpec, PricePanel, Scale, build_dummies,
                     difference, empty_dummies, load_panel, log_transform)
from .johansen import (JohansenCase, JohansenResult, max_eigen_test,
                       reduced_rank_regression, select_rank, trace_test)
from .simulate import DgpKind, DgpSpec, generate
from .unit_root import (Criterion, Deterministic, UnitRootResult, adf_test,
                        integration_order, mackinnon_pvalue, pp_test)
from .var import (DetTerms, LagSelectionTable, VarModel, fit_var,
                  jarque_bera_test, lag_order_selection, lm_serial_test,
                  stability_roots)
from .vecm import (GrangerResult, PairwiseLopTable, RestrictionResult,
                   RestrictionSpec, VecmModel, ect_series, fit_vecm,
                   granger_wald, joint_lop_test, normalize_beta,
                   pairwise_lop, restriction_lr_test, weak_exogeneity_test)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
