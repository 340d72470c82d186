"""Divergences of rank-one tensor fields on a finite-dimensional isonormal space.

The Hilbert space is R^d with the dot product, and X(h) = <h, Z> for a
standard Gaussian vector Z. For a unit vector h and polynomial g,

    delta^n( g(X(h)) h^{(x)n} ) = (delta^n g)(X(h)),

so every divergence here reduces to a polynomial evaluated at X(h). Duality
E<D^n F, u> = E[F delta^n(u)] with F = f(X(v)) is checked two ways: exactly,
through the Hermite covariance identity for the bivariate normal pair
(X(v), X(h)), and statistically by Monte Carlo.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .divergence import DualityReport, delta_binomial
from .exact import as_rational, format_rational
from .hermite import HermiteTable, hermite_recurrence, to_hermite_basis
from .poly import Polynomial, derivative, eval_float_array

UNIT_TOL = 1e-12
RHO_TOL = 1e-9
DEFAULT_DIM = 4


@dataclass(frozen=True)
class IsonormalSpace:
    dim: int = DEFAULT_DIM

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError(f"dimension must be >= 1, got {self.dim}")

    def direction(self, vec) -> "Direction":
        return Direction(self, vec)

    def inner(self, h, v) -> float:
        return float(np.dot(_vec(h), _vec(v)))

    def correlated_pair(self, rho, seed: int = 0) -> tuple["Direction", "Direction"]:
        """Random unit vectors (h, v) with <h, v> = rho up to rounding."""
        rho = float(as_rational(rho))
        if abs(rho) > 1:
            raise ValueError(f"|rho| must be <= 1, got {rho}")
        if self.dim == 1 and abs(rho) != 1:
            raise ValueError("in dimension 1 only rho = +-1 is attainable")
        rng = np.random.Generator(np.random.PCG64(seed))
        h = rng.standard_normal(self.dim)
        h /= np.linalg.norm(h)
        if self.dim == 1:
            return Direction(self, h), Direction(self, rho * h)
        w = rng.standard_normal(self.dim)
        w -= np.dot(w, h) * h
        w /= np.linalg.norm(w)
        v = rho * h + math.sqrt(max(0.0, 1.0 - rho * rho)) * w
        return Direction(self, h), Direction(self, v / np.linalg.norm(v))


def _vec(d) -> np.ndarray:
    return d.vec if isinstance(d, Direction) else np.asarray(d, dtype=np.float64)


@dataclass(frozen=True, eq=False)
class Direction:
    space: IsonormalSpace
    vec: np.ndarray

    def __post_init__(self):
        vec = np.array(self.vec, dtype=np.float64).reshape(-1)
        if vec.shape != (self.space.dim,):
            raise ValueError(f"direction has length {vec.size}, space has dimension {self.space.dim}")
        vec.setflags(write=False)
        object.__setattr__(self, "vec", vec)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.vec))

    def is_unit(self, tol: float = UNIT_TOL) -> bool:
        return abs(self.norm - 1.0) <= tol

    def require_unit(self, what: str = "direction") -> None:
        # Not renormalised: the divergence formula is not scale invariant.
        if not self.is_unit():
            raise ValueError(f"{what} must have unit norm, got |h| = {self.norm!r}")

    def dot(self, other: "Direction") -> float:
        return float(np.dot(self.vec, other.vec))

    def field(self, samples: np.ndarray) -> np.ndarray:
        """X(h) at each row of a (count x d) sample matrix."""
        return samples @ self.vec


@dataclass(frozen=True)
class TensorFunctional:
    """u = g(X(h)) h^{(x)order}."""

    g: Polynomial
    h: Direction
    order: int

    def __post_init__(self):
        if self.order < 0:
            raise ValueError(f"tensor order must be >= 0, got {self.order}")


def sample_fields(space: IsonormalSpace, count: int, seed: int) -> np.ndarray:
    """``count`` i.i.d. standard Gaussian d-vectors from PCG64 seeded with ``seed``."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    rng = np.random.Generator(np.random.PCG64(seed))
    return rng.standard_normal((count, space.dim))


def divergence_tensor(u: TensorFunctional, table: HermiteTable | None = None) -> Polynomial:
    """The polynomial p with delta^n(u) = p(X(u.h))."""
    u.h.require_unit("u.h")
    return delta_binomial(u.g, u.order, table)


def corollary_derivative(u: TensorFunctional, table: HermiteTable | None = None) -> tuple[Polynomial, Direction]:
    """(q, h) with D delta^n(u) = q(X(h)) h, q = n delta^(n-1) g + delta^n g'."""
    u.h.require_unit("u.h")
    n = u.order
    if n < 1:
        raise ValueError("corollary_derivative needs order >= 1")
    table = table or hermite_recurrence(n)
    q = delta_binomial(u.g, n - 1, table).scale(n) + delta_binomial(derivative(u.g, 1), n, table)
    direct = derivative(divergence_tensor(u, table), 1)
    if q != direct:
        raise AssertionError(f"derivative of the divergence disagrees: {q!r} vs {direct!r}")
    return q, u.h


def _check_rho(rho) -> Fraction:
    rho = as_rational(rho)
    if abs(rho) > 1:
        raise ValueError(f"|rho| must be <= 1, got {rho}")
    return rho


def mehler_expectation(p: Polynomial, q: Polynomial, rho) -> Fraction:
    """E[p(X) q(Y)] for standard normals X, Y with correlation rho.

    With p = sum a_j H_j and q = sum b_j H_j, this is sum_j a_j b_j j! rho^j.
    """
    rho = _check_rho(rho)
    a = to_hermite_basis(p)
    b = to_hermite_basis(q)
    total = Fraction(0)
    for j in range(min(len(a), len(b))):
        if a[j] and b[j]:
            total += a[j] * b[j] * math.factorial(j) * rho**j
    return total


def _check_pair(u: TensorFunctional, v: Direction, rho: Fraction) -> None:
    u.h.require_unit("u.h")
    v.require_unit("v")
    if u.h.space.dim != v.space.dim:
        raise ValueError("u.h and v live in spaces of different dimension")
    actual = u.h.dot(v)
    if abs(actual - float(rho)) > RHO_TOL:
        raise ValueError(f"rho = {rho} does not match <v, h> = {actual!r}")


def duality_bivariate(f: Polynomial, u: TensorFunctional, v: Direction, rho) -> DualityReport:
    """Exact E<D^n F, u> versus E[F delta^n(u)] for F = f(X(v)).

    D^n F = f^(n)(X(v)) v^{(x)n}, whose pairing with h^{(x)n} is rho^n, so the
    tensors never need to be formed.
    """
    rho = _check_rho(rho)
    _check_pair(u, v, rho)
    n = u.order
    lhs = rho**n * mehler_expectation(derivative(f, n), u.g, rho)
    rhs = mehler_expectation(f, divergence_tensor(u), rho)
    return DualityReport(f, u.g, n, lhs, rhs, rho=rho)


@dataclass(frozen=True)
class MCDualityReport:
    lhs_estimate: float
    rhs_estimate: float
    lhs_se: float
    rhs_se: float
    samples: int
    seed: int
    exact_value: Fraction | None = None
    z_limit: float = field(default=4.0, repr=False)

    @property
    def passed(self) -> bool:
        # rounding slack only matters for zero-variance estimators
        slack = 1e-12 * max(1.0, abs(self.lhs_estimate), abs(self.rhs_estimate))
        gap = abs(self.lhs_estimate - self.rhs_estimate)
        if not gap <= self.z_limit * math.hypot(self.lhs_se, self.rhs_se) + slack:
            return False
        if self.exact_value is not None:
            e = float(self.exact_value)
            if not abs(self.lhs_estimate - e) <= self.z_limit * self.lhs_se + slack:
                return False
            if not abs(self.rhs_estimate - e) <= self.z_limit * self.rhs_se + slack:
                return False
        return True

    def to_dict(self) -> dict:
        return {
            "lhs": self.lhs_estimate,
            "rhs": self.rhs_estimate,
            "lhs_se": self.lhs_se,
            "rhs_se": self.rhs_se,
            "samples": self.samples,
            "seed": self.seed,
            "exact": None if self.exact_value is None else format_rational(self.exact_value),
            "pass": self.passed,
        }


def _mean_se(values: np.ndarray) -> tuple[float, float]:
    mean = float(np.mean(values))
    se = float(np.std(values, ddof=1) / math.sqrt(values.size))
    return mean, se


def duality_monte_carlo(
    f: Polynomial, u: TensorFunctional, v: Direction, rho, samples: int = 100_000, seed: int = 0
) -> MCDualityReport:
    rho = _check_rho(rho)
    _check_pair(u, v, rho)
    if samples < 1000:
        raise ValueError(f"Monte Carlo duality needs at least 1000 samples, got {samples}")
    n = u.order
    z = sample_fields(u.h.space, samples, seed)
    xv = v.field(z)
    xh = u.h.field(z)
    lhs_vals = float(rho) ** n * eval_float_array(derivative(f, n), xv) * eval_float_array(u.g, xh)
    rhs_vals = eval_float_array(f, xv) * eval_float_array(divergence_tensor(u), xh)
    lhs, lhs_se = _mean_se(lhs_vals)
    rhs, rhs_se = _mean_se(rhs_vals)
    exact = duality_bivariate(f, u, v, rho)
    return MCDualityReport(lhs, rhs, lhs_se, rhs_se, samples, seed, exact.lhs)
