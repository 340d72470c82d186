"""Independent reference computations used to derive expected values.

Nothing here calls into the code paths it is used to check.
"""

from fractions import Fraction

import sympy


def binomial_multiplicative(n, k):
    if k > n:
        return 0
    num = den = 1
    for j in range(1, k + 1):
        num *= n - k + j
        den *= j
    return Fraction(num, den)


def normal_moment_double_factorial(k):
    if k % 2:
        return Fraction(0)
    out = 1
    for j in range(k - 1, 0, -2):
        out *= j
    return Fraction(out)


_x = sympy.Symbol("x")


def sympy_to_coeffs(expr):
    poly = sympy.Poly(sympy.expand(expr), _x)
    coeffs = poly.all_coeffs()[::-1]
    return [Fraction(int(c.p), int(c.q)) for c in coeffs]


def hermite_sympy(n):
    """(-1)^n e^{x^2/2} d^n/dx^n e^{-x^2/2}, differentiated symbolically."""
    w = sympy.exp(-_x**2 / 2)
    expr = sympy.simplify((-1) ** n * sympy.diff(w, _x, n) / w)
    return sympy_to_coeffs(expr)


def gaussian_integral_sympy(coeffs):
    """E[p(N)] by symbolic integration against the standard normal density."""
    p = sum(sympy.Rational(c.numerator, c.denominator) * _x**k for k, c in enumerate(coeffs))
    val = sympy.integrate(p * sympy.exp(-_x**2 / 2), (_x, -sympy.oo, sympy.oo)) / sympy.sqrt(2 * sympy.pi)
    val = sympy.nsimplify(sympy.simplify(val))
    return Fraction(int(val.p), int(val.q))


def _pairings(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for i in range(len(rest)):
        for tail in _pairings(rest[:i] + rest[i + 1:]):
            yield [(first, rest[i])] + tail


def isserlis_moment(a, b, rho):
    """E[X^a Y^b] for unit-variance jointly normal (X, Y), corr rho, as a sum over Wick pairings."""
    rho = Fraction(rho)
    labels = ["x"] * a + ["y"] * b
    if len(labels) % 2:
        return Fraction(0)
    total = Fraction(0)
    for pairing in _pairings(list(range(len(labels)))):
        term = Fraction(1)
        for i, j in pairing:
            if labels[i] != labels[j]:
                term *= rho
        total += term
    return total


def isserlis_expectation(p_coeffs, q_coeffs, rho):
    total = Fraction(0)
    for a, pa in enumerate(p_coeffs):
        if not pa:
            continue
        for b, qb in enumerate(q_coeffs):
            if qb:
                total += pa * qb * isserlis_moment(a, b, rho)
    return total
