"""The n-th divergence operator on polynomials of a standard Gaussian variable.

delta^n g is characterised by E[f^(n)(N) g(N)] = E[f(N) (delta^n g)(N)] for
every smooth f. Four constructions are provided:

* :func:`delta_binomial` -- the binomial expansion of ``(H - g)^n`` where
  ``H^k`` means ``H_k`` and ``g^k`` means the k-th derivative of g, with
  ``g^0 = g`` (not 1). This is the production implementation.
* :func:`delta_iterative` -- n applications of ``g -> x g - g'``.
* :func:`delta_alt` -- the shifted sum over ``H_{k+1} g^(n-k) - H_k g^(n-k+1)``.
* :func:`delta_moment` -- ``E(K - g)^n`` with ``K = x + iN``, expanded in
  complex rational arithmetic.

:func:`duality_check` evaluates both sides of the defining identity exactly.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .exact import binomial, format_rational, normal_moment
from .hermite import HermiteTable, hermite_recurrence, moment_expansion
from .poly import Polynomial, derivative, eval_float, float_coeffs, to_json


class Method(str, enum.Enum):
    BINOMIAL = "binomial"
    ITERATIVE = "iterative"
    ALT = "alt"
    MOMENT = "moment"


@dataclass(frozen=True)
class DivergenceResult:
    n: int
    input: Polynomial
    output: Polynomial
    method: Method


@dataclass(frozen=True)
class DualityReport:
    f: Polynomial
    g: Polynomial
    n: int
    lhs: Fraction
    rhs: Fraction
    rho: Fraction | None = None

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    def to_dict(self) -> dict:
        out = {
            "f": to_json(self.f),
            "g": to_json(self.g),
            "n": self.n,
            "lhs": format_rational(self.lhs),
            "rhs": format_rational(self.rhs),
            "pass": self.passed,
        }
        if self.rho is not None:
            out["rho"] = format_rational(self.rho)
        return out


def _check_order(n: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"divergence order must be a non-negative integer, got {n!r}")


def _table_for(table: HermiteTable | None, n: int) -> HermiteTable:
    if table is None:
        return hermite_recurrence(n)
    table.require(n)
    return table


def expand_rule(factors: Sequence[Polynomial], g: Polynomial, n: int) -> Polynomial:
    """sum_{k=0}^{n} (-1)^(n-k) C(n,k) factors[k] * g^(n-k), with g^(0) = g.

    This is the one place the g^0 = g convention lives. ``factors[k]`` plays
    the role of ``H^k`` in the formal binomial expansion of ``(H - g)^n``.
    """
    acc = Polynomial.zero()
    for k in range(n + 1):
        gk = derivative(g, n - k)
        if gk.is_zero() or factors[k].is_zero():
            continue
        c = binomial(n, k) if (n - k) % 2 == 0 else -binomial(n, k)
        acc = acc + (factors[k] * gk).scale(c)
    return acc


def delta_binomial(g: Polynomial, n: int, table: HermiteTable | None = None) -> Polynomial:
    _check_order(n)
    if n == 0:
        return g
    table = _table_for(table, n)
    return expand_rule(table.polys, g, n)


def delta_once(g: Polynomial) -> Polynomial:
    """delta g = x g - g'."""
    return g.shift(1) - derivative(g, 1)


def delta_iterative(g: Polynomial, n: int) -> Polynomial:
    _check_order(n)
    for _ in range(n):
        g = delta_once(g)
    return g


def _alt_sum(g: Polynomial, m: int, table: HermiteTable) -> Polynomial:
    # Returns the order-(m+1) divergence.
    shifted = table.polys[1 : m + 2]
    return expand_rule(shifted, g, m) - expand_rule(table.polys, derivative(g, 1), m)


def delta_alt(g: Polynomial, n: int, table: HermiteTable | None = None) -> Polynomial:
    """delta^n g via the shifted Hermite sum; ``n`` is the divergence order."""
    _check_order(n)
    if n == 0:
        return g
    table = _table_for(table, n)
    return _alt_sum(g, n - 1, table)


def moment_expansion_delta(g: Polynomial, n: int) -> tuple[Polynomial, Polynomial]:
    """Real and imaginary parts of E(K - g)^n, K = x + iN.

    E[K^r] is expanded from Gaussian moments, never taken from a Hermite table.
    """
    _check_order(n)
    re_f, im_f = zip(*(moment_expansion(r) for r in range(n + 1)))
    return expand_rule(re_f, g, n), expand_rule(im_f, g, n)


def delta_moment(g: Polynomial, n: int) -> Polynomial:
    _check_order(n)
    if n == 0:
        return g
    re, im = moment_expansion_delta(g, n)
    if not im.is_zero():
        raise AssertionError(f"E(K - g)^{n} has nonzero imaginary part {im!r}")
    return re


_METHODS = {
    Method.BINOMIAL: lambda g, n, t: delta_binomial(g, n, t),
    Method.ITERATIVE: lambda g, n, t: delta_iterative(g, n),
    Method.ALT: lambda g, n, t: delta_alt(g, n, t),
    Method.MOMENT: lambda g, n, t: delta_moment(g, n),
}


def divergence(
    g: Polynomial, n: int, method: Method | str = Method.BINOMIAL, table: HermiteTable | None = None
) -> DivergenceResult:
    method = Method(method)
    return DivergenceResult(n, g, _METHODS[method](g, n, table), method)


def commutator_check(g: Polynomial, n: int, table: HermiteTable | None = None) -> bool:
    """D delta^n g == n delta^(n-1) g + delta^n g'."""
    if n < 1:
        raise ValueError(f"commutation needs n >= 1, got {n}")
    table = _table_for(table, n)
    lhs = derivative(delta_binomial(g, n, table), 1)
    rhs = delta_binomial(g, n - 1, table).scale(n) + delta_binomial(derivative(g, 1), n, table)
    return lhs == rhs


def gaussian_expectation(p: Polynomial) -> Fraction:
    """E[p(N)] for N standard normal, exactly."""
    return sum((c * normal_moment(k) for k, c in enumerate(p.coeffs)), Fraction(0))


def duality_check(f: Polynomial, g: Polynomial, n: int, table: HermiteTable | None = None) -> DualityReport:
    _check_order(n)
    lhs = gaussian_expectation(derivative(f, n) * g)
    rhs = gaussian_expectation(f * delta_binomial(g, n, table))
    return DualityReport(f, g, n, lhs, rhs)


# -- Gauss-Hermite quadrature against the standard normal weight -------


class QuadratureError(RuntimeError):
    pass


def _hermite_roots(m: int, brackets: np.ndarray, table: HermiteTable, max_iter: int = 200) -> np.ndarray:
    hm = table[m]
    dhm = derivative(hm, 1)
    abs_hm = Polynomial([abs(c) for c in hm.coeffs])
    roots = np.empty(len(brackets) - 1)
    for i in range(len(brackets) - 1):
        lo, hi = float(brackets[i]), float(brackets[i + 1])
        flo = eval_float(hm, lo)
        x = 0.5 * (lo + hi)
        for _ in range(max_iter):
            fx = eval_float(hm, x)
            scale = eval_float(abs_hm, abs(x))
            if abs(fx) <= 1e-14 * scale:
                dfx = eval_float(dhm, x)
                if dfx != 0:
                    x -= fx / dfx
                break
            # keep the root bracketed
            if (fx < 0) == (flo < 0):
                lo, flo = x, fx
            else:
                hi = x
            dfx = eval_float(dhm, x)
            step = fx / dfx if dfx != 0 else math.inf
            x_new = x - step
            if not (lo < x_new < hi):
                x_new = 0.5 * (lo + hi)
            if abs(x_new - x) <= 4e-16 * max(1.0, abs(x)):
                x = x_new
                break
            x = x_new
        else:
            raise QuadratureError(f"Newton iteration for root {i} of H_{m} did not converge")
        roots[i] = x
    return roots


def gauss_hermite_nodes(m: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights of the m-point rule for E[p(N)], N ~ N(0, 1).

    Nodes are the roots of H_m, found by bracketed Newton iteration; the
    brackets come from the interlacing roots of H_{m-1}, built up from m = 1.
    Weights are m! / (m^2 H_{m-1}(x_i)^2).
    """
    if m < 1:
        raise ValueError(f"quadrature needs m >= 1, got {m}")
    table = hermite_recurrence(m)
    roots = np.array([0.0])
    for k in range(2, m + 1):
        bound = math.sqrt(4 * k + 2) + 1.0
        brackets = np.concatenate(([-bound], roots, [bound]))
        roots = _hermite_roots(k, brackets, table)
    # H_m is even/odd in x; symmetrise so odd moments cancel pairwise.
    roots = 0.5 * (roots - roots[::-1])
    if m % 2:
        roots[m // 2] = 0.0
    hm1 = table[m - 1]
    vals = np.array([eval_float(hm1, x) for x in roots])
    weights = math.factorial(m) / (m * m * vals**2)
    weights = 0.5 * (weights + weights[::-1])
    return roots, weights


def quadrature_expectation(p: Polynomial, m: int) -> float:
    nodes, weights = gauss_hermite_nodes(m)
    c = float_coeffs(p)
    if c.size == 0:
        return 0.0
    return float(np.dot(weights, np.polynomial.polynomial.polyval(nodes, c)))
