"""Identity sweeps over a fixed polynomial corpus.

Used by ``malliavin verify-identities``; every check is an exact equality.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .divergence import (
    commutator_check,
    delta_alt,
    delta_binomial,
    delta_iterative,
    delta_moment,
    moment_expansion_delta,
)
from .hermite import (
    generating_series,
    hermite_at_zero,
    hermite_moment,
    hermite_recurrence,
    hermite_rodrigues,
)
from .poly import Polynomial, derivative, eval_exact

CORPUS_SEED = 20190601
MC_SUITE_SEED = 1729


def random_polynomial(rng: random.Random, max_degree: int = 6) -> Polynomial:
    degree = rng.randint(0, max_degree)
    coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(degree)]
    lead = 0
    while lead == 0:
        lead = rng.randint(-9, 9)
    coeffs.append(Fraction(lead, rng.randint(1, 6)))
    return Polynomial(coeffs)


def corpus(n_random: int = 50, seed: int = CORPUS_SEED, max_monomial: int = 8, max_degree: int = 6) -> list[Polynomial]:
    """Monomials x^0..x^max_monomial followed by seeded random rational polynomials."""
    rng = random.Random(seed)
    polys = [Polynomial.monomial(d) for d in range(max_monomial + 1)]
    polys += [random_polynomial(rng, max_degree) for _ in range(n_random)]
    return polys


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    cases: int
    detail: str = ""


def _sweep(name, cases):
    count = 0
    for label, ok in cases:
        count += 1
        if not ok:
            return Check(name, False, count, f"first failure: {label}")
    return Check(name, True, count)


def hermite_checks(max_n: int) -> list[Check]:
    table = hermite_recurrence(max_n + 1)
    H = table.polys
    x = Polynomial.x()
    return [
        _sweep(
            "hermite routes agree",
            ((n, H[n] == hermite_rodrigues(n) == hermite_moment(n)) for n in range(max_n + 1)),
        ),
        _sweep(
            "recurrence H_{n+1} = x H_n - n H_{n-1}",
            ((n, H[n + 1] == x * H[n] - H[n - 1].scale(n)) for n in range(1, max_n + 1)),
        ),
        _sweep(
            "derivative H_n' = n H_{n-1}",
            ((n, derivative(H[n]) == H[n - 1].scale(n)) for n in range(1, max_n + 1)),
        ),
        _sweep(
            "H_n(0) closed form",
            ((n, eval_exact(H[n], 0) == hermite_at_zero(n)) for n in range(max_n + 1)),
        ),
        _sweep(
            "generating series t^n -> H_n / n!",
            (
                (n, term.scale(math.factorial(n)) == H[n])
                for n, term in enumerate(generating_series(max_n).terms)
            ),
        ),
    ]


def divergence_checks(max_n: int, polys: list[Polynomial] | None = None) -> list[Check]:
    polys = corpus() if polys is None else polys
    table = hermite_recurrence(2 * max_n + 2)

    def four_way():
        for i, g in enumerate(polys):
            for n in range(max_n + 1):
                b = delta_binomial(g, n, table)
                yield (i, n), b == delta_iterative(g, n) == delta_alt(g, n, table) == delta_moment(g, n)

    def imaginary():
        for i, g in enumerate(polys):
            for n in range(max_n + 1):
                yield (i, n), moment_expansion_delta(g, n)[1].is_zero()

    def composition():
        for i, g in enumerate(polys):
            for n in range(max_n + 1):
                inner = delta_binomial(g, n, table)
                for m in range(max_n + 1 - n):
                    yield (i, n, m), delta_binomial(inner, m, table) == delta_binomial(g, n + m, table)

    def commutation():
        for i, g in enumerate(polys):
            for n in range(1, max_n + 1):
                yield (i, n), commutator_check(g, n, table)

    def special():
        x = Polynomial.x()
        for n in range(max_n + 1):
            yield ("1", n), delta_binomial(Polynomial.one(), n, table) == table[n]
            yield ("x", n), delta_binomial(x, n, table) == table[n + 1]
            yield ("0", n), delta_binomial(Polynomial.zero(), n, table).is_zero()

    return [
        _sweep("four divergence constructions agree", four_way()),
        _sweep("E(K - g)^n has zero imaginary part", imaginary()),
        _sweep("composition delta^m delta^n = delta^(n+m)", composition()),
        _sweep("commutation D delta^n = n delta^(n-1) + delta^n D", commutation()),
        _sweep("special values delta^n 1, delta^n x, delta^n 0", special()),
    ]


def identity_checks(max_n: int = 12) -> list[Check]:
    return hermite_checks(max_n) + divergence_checks(max_n)


def monte_carlo_suite(count: int = 40, seed: int = MC_SUITE_SEED, dim: int = 4):
    """Seeded random duality cases ``(f, u, v, rho, case_seed)`` for the Monte Carlo check."""
    from .isonormal import IsonormalSpace, TensorFunctional

    rng = random.Random(seed)
    space = IsonormalSpace(dim)
    rhos = [Fraction(k, 4) for k in range(-4, 5)]
    cases = []
    for i in range(count):
        rho = rng.choice(rhos)
        n = rng.randint(1, 3)
        f = Polynomial([rng.randint(-3, 3) for _ in range(rng.randint(1, 4))] + [rng.choice([-1, 1])])
        g = Polynomial([rng.randint(-3, 3) for _ in range(rng.randint(0, 2))] + [rng.choice([-1, 1])])
        h, v = space.correlated_pair(rho, seed=seed * 1000 + i)
        cases.append((f, TensorFunctional(g, h, n), v, rho, seed * 1000 + i))
    return cases
