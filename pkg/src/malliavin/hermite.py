"""Probabilists' Hermite polynomials, built three independent ways.

``hermite_recurrence`` is the production path. ``hermite_rodrigues`` and
``hermite_moment`` derive the same polynomials from the Gaussian density and
from moments of ``x + iN`` respectively, and exist to cross-check it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import I, ComplexRational, binomial, normal_moment
from .poly import Polynomial, TruncatedSeries, series_exp

X = Polynomial.x()


@dataclass(frozen=True)
class HermiteTable:
    max_n: int
    polys: tuple[Polynomial, ...]

    def __getitem__(self, n: int) -> Polynomial:
        if n < 0:
            raise IndexError(f"Hermite index must be >= 0, got {n}")
        if n > self.max_n:
            raise IndexError(f"H_{n} requested from a table with max_n={self.max_n}")
        return self.polys[n]

    def __len__(self):
        return len(self.polys)

    def require(self, n: int) -> None:
        if n > self.max_n:
            raise ValueError(f"need Hermite polynomials up to H_{n}; table only reaches H_{self.max_n}")


@lru_cache(maxsize=None)
def hermite_recurrence(max_n: int) -> HermiteTable:
    """H_0 = 1, H_1 = x, H_{n+1} = x H_n - n H_{n-1}."""
    if max_n < 0:
        raise ValueError(f"max_n must be >= 0, got {max_n}")
    polys = [Polynomial.one()]
    if max_n >= 1:
        polys.append(X)
    for n in range(1, max_n):
        polys.append(polys[n].shift(1) - polys[n - 1].scale(n))
    return HermiteTable(max_n, tuple(polys))


hermite_table = hermite_recurrence


def hermite(n: int) -> Polynomial:
    return hermite_recurrence(n)[n]


def density_derivative_factors(n: int) -> list[Polynomial]:
    """``q_0..q_n`` with phi^(k) = q_k * phi, by differentiating q_k * phi directly.

    d/dx (q phi) = (q' - x q) phi, so q_k = q_{k-1}' - x q_{k-1}.
    """
    qs = [Polynomial.one()]
    for _ in range(n):
        q = qs[-1]
        qs.append(q.derivative(1) - q.shift(1))
    return qs


def hermite_rodrigues(n: int) -> Polynomial:
    """H_n = (-1)^n phi^(n) / phi."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    q = density_derivative_factors(n)[n]
    return q if n % 2 == 0 else -q


@lru_cache(maxsize=None)
def moment_expansion(n: int) -> tuple[Polynomial, Polynomial]:
    """Real and imaginary parts of E(x + iN)^n as polynomials in x.

    Expands sum_k C(n, k) x^(n-k) i^k E[N^k] coefficient-by-coefficient in
    complex rational arithmetic.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    coeffs = [ComplexRational()] * (n + 1)
    for k in range(n + 1):
        m = normal_moment(k)
        if m == 0:
            continue
        coeffs[n - k] = coeffs[n - k] + (I**k) * (binomial(n, k) * m)
    return Polynomial(c.re for c in coeffs), Polynomial(c.im for c in coeffs)


def hermite_moment(n: int) -> Polynomial:
    """H_n = E(x + iN)^n; the imaginary part must cancel exactly."""
    re, im = moment_expansion(n)
    if not im.is_zero():
        raise AssertionError(f"E(x+iN)^{n} has nonzero imaginary part {im!r}")
    return re


def hermite_at_zero(n: int) -> Fraction:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n % 2:
        return Fraction(0)
    half = n // 2
    return Fraction((-1) ** half * math.factorial(n), 2**half * math.factorial(half))


def generating_series(order: int) -> TruncatedSeries:
    """exp(t x - t^2/2) truncated at ``t**order``; term n equals H_n / n!."""
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    exponent = [Polynomial.zero(), X, Polynomial.constant(Fraction(-1, 2))]
    return series_exp(TruncatedSeries(order, tuple(exponent[: order + 1])))


def to_hermite_basis(p: Polynomial, table: HermiteTable | None = None) -> list[Fraction]:
    """Coefficients a_j with p = sum_j a_j H_j, by peeling off leading terms."""
    if p.is_zero():
        return []
    d = p.degree
    table = table or hermite_recurrence(d)
    table.require(d)
    out = [Fraction(0)] * (d + 1)
    rest = p
    for j in range(d, -1, -1):
        c = rest[j]
        if c:
            out[j] = c
            rest = rest - table[j].scale(c)
    if not rest.is_zero():
        raise AssertionError(f"Hermite basis conversion left remainder {rest!r}")
    return out


def from_hermite_basis(coeffs, table: HermiteTable | None = None) -> Polynomial:
    table = table or hermite_recurrence(max(len(coeffs) - 1, 0))
    acc = Polynomial.zero()
    for j, c in enumerate(coeffs):
        if c:
            acc = acc + table[j].scale(c)
    return acc
