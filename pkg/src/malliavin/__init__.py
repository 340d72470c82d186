"""Exact Hermite-polynomial formulas for the n-th divergence operator.

The one-dimensional operator acts on :class:`~malliavin.poly.Polynomial`
inputs; :mod:`malliavin.isonormal` lifts it to rank-one tensor fields on a
finite-dimensional isonormal Gaussian space.
"""

from .divergence import (
    DivergenceResult,
    DualityReport,
    Method,
    commutator_check,
    delta_alt,
    delta_binomial,
    delta_iterative,
    delta_moment,
    divergence,
    duality_check,
    gauss_hermite_nodes,
    gaussian_expectation,
)
from .exact import ComplexRational, Rational, binomial, normal_moment
from .hermite import (
    HermiteTable,
    generating_series,
    hermite,
    hermite_at_zero,
    hermite_moment,
    hermite_recurrence,
    hermite_rodrigues,
)
from .isonormal import (
    Direction,
    IsonormalSpace,
    MCDualityReport,
    TensorFunctional,
    corollary_derivative,
    divergence_tensor,
    duality_bivariate,
    duality_monte_carlo,
    mehler_expectation,
    sample_fields,
)
from .poly import Polynomial, TruncatedSeries, derivative, eval_exact, eval_float, series_exp, series_mul

__version__ = "0.1.0"
