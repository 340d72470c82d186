"""Dense univariate polynomials over the rationals and truncated power series.

A :class:`Polynomial` stores ``coeffs[k]`` = coefficient of ``x**k`` with
trailing zeros trimmed, so two polynomials are equal exactly when their
coefficient tuples are. The zero polynomial has no coefficients.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import as_rational


def _trim(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


class Polynomial:
    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable = ()):
        self._c = _trim([as_rational(c) for c in coeffs])

    @classmethod
    def _raw(cls, coeffs: Sequence[Fraction]) -> "Polynomial":
        p = cls.__new__(cls)
        p._c = _trim(coeffs)
        return p

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls._raw(())

    @classmethod
    def one(cls) -> "Polynomial":
        return cls._raw((Fraction(1),))

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls._raw((as_rational(c),))

    @classmethod
    def x(cls) -> "Polynomial":
        return cls._raw((Fraction(0), Fraction(1)))

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "Polynomial":
        if degree < 0:
            raise ValueError("monomial degree must be >= 0")
        return cls._raw((Fraction(0),) * degree + (as_rational(coeff),))

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int:
        """Degree, with -1 standing in for the zero polynomial's -infinity."""
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def leading(self) -> Fraction:
        return self._c[-1] if self._c else Fraction(0)

    def __getitem__(self, k: int) -> Fraction:
        return self._c[k] if 0 <= k < len(self._c) else Fraction(0)

    def __len__(self):
        return len(self._c)

    # -- ring operations -------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        return Polynomial.constant(as_rational(other))

    def __add__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self._c, o._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw([-c for c in self._c])

    def __sub__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Polynomial":
        c = as_rational(c)
        if c == 0:
            return Polynomial.zero()
        return Polynomial._raw([c * a for a in self._c])

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return Polynomial.zero()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Polynomial._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = Polynomial.one()
        for _ in range(k):
            result = result * self
        return result

    def shift(self, k: int = 1) -> "Polynomial":
        """Multiply by ``x**k``."""
        if not self._c:
            return self
        return Polynomial._raw((Fraction(0),) * k + self._c)

    def derivative(self, k: int = 1) -> "Polynomial":
        return derivative(self, k)

    # -- evaluation ------------------------------------------------------

    def __call__(self, x):
        if isinstance(x, float):
            return eval_float(self, x)
        return eval_exact(self, x)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._c == other._c
        try:
            return self._c == Polynomial.constant(as_rational(other))._c
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self._c)

    def __repr__(self):
        return f"Polynomial([{', '.join(str(c) for c in self._c)}])"

    def __str__(self):
        return format_poly(self)


def add(p: Polynomial, q) -> Polynomial:
    return p + q


def sub(p: Polynomial, q) -> Polynomial:
    return p - q


def scale(p: Polynomial, c) -> Polynomial:
    return p.scale(c)


def mul(p: Polynomial, q) -> Polynomial:
    return p * q


def derivative(p: Polynomial, k: int = 1) -> Polynomial:
    """k-th formal derivative; ``k == 0`` returns ``p`` unchanged."""
    if k < 0:
        raise ValueError(f"derivative order must be >= 0, got {k}")
    c = p.coeffs
    if k == 0:
        return p
    if k >= len(c):
        return Polynomial.zero()
    out = []
    for j in range(k, len(c)):
        falling = 1
        for t in range(j - k + 1, j + 1):
            falling *= t
        out.append(c[j] * falling)
    return Polynomial._raw(out)


def eval_exact(p: Polynomial, x) -> Fraction:
    x = as_rational(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def eval_float(p: Polynomial, x: float) -> float:
    acc = 0.0
    for c in reversed(p.coeffs):
        acc = acc * x + float(c)
    return acc


def float_coeffs(p: Polynomial):
    """Coefficients as float64, lowest power first (for vectorised Horner)."""
    import numpy as np

    return np.array([float(c) for c in p.coeffs], dtype=np.float64)


def eval_float_array(p: Polynomial, xs):
    """Horner evaluation over an array of float64 points."""
    import numpy as np

    xs = np.asarray(xs, dtype=np.float64)
    acc = np.zeros_like(xs)
    for c in reversed(p.coeffs):
        acc = acc * xs + float(c)
    return acc


def format_poly(p: Polynomial, var: str = "x") -> str:
    """Human-readable form, highest power first: ``x^4 - 6x^2 + 3``."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            if a == 1:
                body = mono
            elif a.denominator == 1:
                body = f"{a}{mono}"
            else:
                body = f"({a}){mono}"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


# -- JSON encoding ------------------------------------------------------


class PolynomialParseError(ValueError):
    """Raised for a malformed polynomial encoding; ``token`` names the culprit."""

    def __init__(self, message: str, token=None):
        super().__init__(message)
        self.token = token


def to_json(p: Polynomial) -> list[str]:
    """Ascending coefficient strings, e.g. ``x^2 - 1`` -> ``["-1", "0", "1"]``."""
    return [str(c) for c in p.coeffs]


def from_json(data) -> Polynomial:
    """Decode a coefficient array; accepts a JSON string or a parsed list.

    Entries may be integers or strings such as ``"3"``, ``"-1/2"``. Floats are
    refused so that exactness is always explicit.
    """
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise PolynomialParseError(f"not valid JSON: {exc.msg} at position {exc.pos}", data) from None
    if not isinstance(data, list):
        raise PolynomialParseError(f"expected a JSON array of coefficients, got {data!r}", data)
    out = []
    for k, tok in enumerate(data):
        if isinstance(tok, bool) or isinstance(tok, float) or not isinstance(tok, (int, str)):
            raise PolynomialParseError(
                f"coefficient {k} has unsupported token {tok!r}; use an integer or a 'p/q' string", tok
            )
        try:
            c = Fraction(tok.strip()) if isinstance(tok, str) else Fraction(tok)
        except (ValueError, ZeroDivisionError):
            raise PolynomialParseError(f"coefficient {k} has unparseable token {tok!r}", tok) from None
        out.append(c)
    return Polynomial(out)


# -- truncated power series in t with polynomial-in-x coefficients -----


@dataclass(frozen=True)
class TruncatedSeries:
    """``sum_{n <= order} terms[n](x) * t**n``."""

    order: int
    terms: tuple[Polynomial, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("series order must be >= 0")
        terms = tuple(self.terms)[: self.order + 1]
        terms = terms + (Polynomial.zero(),) * (self.order + 1 - len(terms))
        object.__setattr__(self, "terms", terms)

    @classmethod
    def from_terms(cls, terms: Sequence, order: int | None = None) -> "TruncatedSeries":
        terms = [t if isinstance(t, Polynomial) else Polynomial(t) for t in terms]
        return cls(len(terms) - 1 if order is None else order, tuple(terms))

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order = min(self.order, other.order)
        return TruncatedSeries(order, tuple(a + b for a, b in zip(self.terms, other.terms)))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_mul(self, other)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    order = min(a.order, b.order)
    out = []
    for n in range(order + 1):
        acc = Polynomial.zero()
        for k in range(n + 1):
            acc = acc + a.terms[k] * b.terms[n - k]
        out.append(acc)
    return TruncatedSeries(order, tuple(out))


def series_exp(s: TruncatedSeries) -> TruncatedSeries:
    """exp(s) for a series with vanishing constant term.

    Uses E' = s' E, i.e. ``n E_n = sum_{k=1}^{n} k s_k E_{n-k}``.
    """
    if not s.terms[0].is_zero():
        raise ValueError("series_exp needs a zero constant term; exp of a nonzero constant is not rational")
    e = [Polynomial.one()]
    for n in range(1, s.order + 1):
        acc = Polynomial.zero()
        for k in range(1, n + 1):
            if not s.terms[k].is_zero():
                acc = acc + (s.terms[k] * e[n - k]).scale(k)
        e.append(acc.scale(Fraction(1, n)))
    return TruncatedSeries(s.order, tuple(e))
