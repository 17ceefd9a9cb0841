"""Truncated power series with exact coefficients.

A series carries its own truncation order; arithmetic on two series truncates
at the smaller of the two orders, and operands with different formal
parameters are rejected.  Coefficients are Fractions (or any exact ring
element supporting + and *, e.g. LaurentPolynomial) — never floats.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Sequence

from .laurent import LaurentPolynomial, Rational


class ParameterMismatchError(ValueError):
    """Raised when combining series in different formal parameters."""


class SeriesDomainError(ValueError):
    """Raised when a constant-term precondition (invert/exp/log) is violated."""


def _is_zero(c) -> bool:
    if isinstance(c, LaurentPolynomial):
        return c.is_zero()
    return c == 0


class TruncatedSeries:
    """Power series in one formal parameter, truncated at a fixed order."""

    __slots__ = ("parameter", "order", "coeffs")

    def __init__(self, parameter: str, order: int, coeffs: Sequence):
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        coeffs = list(coeffs)
        if len(coeffs) > order + 1:
            coeffs = coeffs[: order + 1]
        while len(coeffs) < order + 1:
            coeffs.append(Fraction(0))
        norm = []
        for c in coeffs:
            if isinstance(c, int):
                c = Fraction(c)
            norm.append(c)
        object.__setattr__(self, "parameter", parameter)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(norm))

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def constant(cls, value, parameter: str, order: int) -> "TruncatedSeries":
        return cls(parameter, order, [value])

    @classmethod
    def variable(cls, parameter: str, order: int) -> "TruncatedSeries":
        return cls(parameter, order, [0, 1])

    @classmethod
    def exponential(cls, rate, parameter: str, order: int) -> "TruncatedSeries":
        """exp(rate * parameter) expanded exactly."""
        rate = rate if isinstance(rate, Fraction) else Fraction(rate)
        return cls(parameter, order,
                   [rate ** k / factorial(k) for k in range(order + 1)])

    # -- helpers -------------------------------------------------------------

    def _check(self, other: "TruncatedSeries") -> int:
        if self.parameter != other.parameter:
            raise ParameterMismatchError(
                f"parameter mismatch: {self.parameter!r} vs {other.parameter!r}")
        return min(self.order, other.order)

    def coefficient(self, k: int):
        if k > self.order:
            raise IndexError(f"order {k} beyond truncation {self.order}")
        return self.coeffs[k]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.parameter, order, self.coeffs[: order + 1])

    def is_zero(self) -> bool:
        return all(_is_zero(c) for c in self.coeffs)

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncatedSeries.constant(other, self.parameter, self.order)
        n = self._check(other)
        return TruncatedSeries(self.parameter, n,
                               [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.parameter, self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncatedSeries.constant(other, self.parameter, self.order)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, LaurentPolynomial)):
            return TruncatedSeries(self.parameter, self.order,
                                   [c * other for c in self.coeffs])
        n = self._check(other)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            acc = a[0] * b[k]
            for j in range(1, k + 1):
                acc = acc + a[j] * b[k - j]
            out.append(acc)
        return TruncatedSeries(self.parameter, n, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers")
        result = TruncatedSeries.constant(1, self.parameter, self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            if n > 1:
                base = base * base
            n >>= 1
        return result

    def invert(self) -> "TruncatedSeries":
        c0 = self.coeffs[0]
        if isinstance(c0, LaurentPolynomial) or c0 == 0:
            raise SeriesDomainError("invert requires a nonzero rational constant term")
        inv = [Fraction(1) / c0]
        for k in range(1, self.order + 1):
            acc = Fraction(0)
            for j in range(1, k + 1):
                acc += self.coeffs[j] * inv[k - j]
            inv.append(-acc / c0)
        return TruncatedSeries(self.parameter, self.order, inv)

    def exp(self) -> "TruncatedSeries":
        if not _is_zero(self.coeffs[0]):
            raise SeriesDomainError("exp requires zero constant term")
        # e' = a' e, so (k+1) e_{k+1} = sum_{j} (j+1) a_{j+1} e_{k-j}
        e = [Fraction(1)]
        for k in range(self.order):
            acc = Fraction(0)
            for j in range(k + 1):
                acc += (j + 1) * self.coeffs[j + 1] * e[k - j]
            e.append(acc / (k + 1))
        return TruncatedSeries(self.parameter, self.order, e)

    def log(self) -> "TruncatedSeries":
        if self.coeffs[0] != 1:
            raise SeriesDomainError("log requires constant term 1")
        # l' = a'/a: k l_k = k a_k - sum_{j=1}^{k-1} j l_j a_{k-j}
        l = [Fraction(0)]
        for k in range(1, self.order + 1):
            acc = k * self.coeffs[k]
            for j in range(1, k):
                acc -= j * l[j] * self.coeffs[k - j]
            l.append(acc / k)
        return TruncatedSeries(self.parameter, self.order, l)

    def rescale(self, factor, new_parameter: str) -> "TruncatedSeries":
        """Substitute parameter -> factor * new_parameter."""
        factor = factor if isinstance(factor, Fraction) else Fraction(factor)
        return TruncatedSeries(new_parameter, self.order,
                               [c * factor ** k for k, c in enumerate(self.coeffs)])

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.parameter == other.parameter and self.order == other.order
                and all(a == b for a, b in zip(self.coeffs, other.coeffs)))

    def __hash__(self):
        return hash((self.parameter, self.order, self.coeffs))

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if _is_zero(c):
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append(f"({c})*{self.parameter}")
            else:
                parts.append(f"({c})*{self.parameter}^{k}")
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O({self.parameter}^{self.order + 1})"

    __repr__ = __str__


def series_arith(a: TruncatedSeries, b: TruncatedSeries | None, kind: str) -> TruncatedSeries:
    """Dispatch helper: add / mul take two operands, invert / exp / log one."""
    if kind == "add":
        return a + b
    if kind == "mul":
        return a * b
    if kind == "invert":
        return a.invert()
    if kind == "exp":
        return a.exp()
    if kind == "log":
        return a.log()
    raise ValueError(f"unknown operation {kind!r}")


def substitute_exponential(poly: LaurentPolynomial, assignments, order: int,
                           parameter: str = "x") -> TruncatedSeries:
    """Evaluate a Laurent polynomial at exponentials of a common parameter.

    `assignments` maps each variable name to an integer slope m, standing for
    the substitution  variable -> exp(m * x).  The result is the exact
    truncated series in x; at x = 0 it reduces to the all-ones evaluation.
    """
    missing = [v for v in poly.variables if v not in assignments]
    if missing:
        raise ValueError(f"unassigned variables: {missing}")
    slopes = [assignments[v] for v in poly.variables]
    if any(not isinstance(m, int) for m in slopes):
        raise TypeError("exponential slopes must be integers")
    coeffs = [Fraction(0)] * (order + 1)
    for exps, c in poly.terms.items():
        rate = sum(e * m for e, m in zip(exps, slopes))
        power = Fraction(1)
        for k in range(order + 1):
            coeffs[k] += c * power
            power = power * rate / (k + 1)
    return TruncatedSeries(parameter, order, coeffs)
