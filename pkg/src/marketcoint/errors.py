"""Exception hierarchy.

Two branches matter to callers: :class:`DataError` for anything wrong with
the input data or configuration, and :class:`NumericalError` for estimation
failures (singular designs, non-convergence).  The CLI maps them to distinct
exit codes.
"""

from __future__ import annotations


class MarketcointError(Exception):
    """Base class for all errors raised by this package."""


class DataError(MarketcointError):
    """Invalid input data, file, or configuration."""


class NumericalError(MarketcointError):
    """Estimation failed: singular matrices, degenerate series, no convergence."""


class SpecificationError(MarketcointError):
    """A test or model was requested with an inconsistent specification."""
