"""Exact Laurent polynomials in one or two variables over the rationals.

Coefficients are `fractions.Fraction`; exponents are (tuples of) integers and
may be negative.  Polynomials are immutable, zero terms are never stored, and
variable lists are kept in a canonical order so that equality is structural.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

Rational = Fraction

#: variable names accepted for canonical rendering / ordering
_KNOWN_ORDER = {"t": 0, "u": 0, "t1": 0, "t2": 1, "u1": 0, "u2": 1, "x": 0}


class VariableMismatchError(ValueError):
    """Raised when combining Laurent polynomials over different variables."""


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class LaurentPolynomial:
    """A Laurent polynomial with exact rational coefficients.

    `variables` is a tuple of 1 or 2 symbol names; `terms` maps exponent
    tuples (one integer per variable) to nonzero Fraction coefficients.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Iterable[str], terms: Mapping[tuple, object] | None = None):
        variables = tuple(variables)
        if not 1 <= len(variables) <= 2:
            raise ValueError("only 1- or 2-variable Laurent polynomials are supported")
        if len(set(variables)) != len(variables):
            raise ValueError("duplicate variable names")
        order = sorted(range(len(variables)), key=lambda i: variables[i])
        permuted = tuple(variables[i] for i in order)
        clean: dict[tuple, Fraction] = {}
        for exps, coeff in (terms or {}).items():
            if isinstance(exps, int):
                exps = (exps,)
            exps = tuple(exps)
            if len(exps) != len(variables):
                raise ValueError(f"exponent tuple {exps} has wrong arity for {variables}")
            if any(not isinstance(e, int) for e in exps):
                raise TypeError("exponents must be integers")
            coeff = _as_fraction(coeff)
            if coeff == 0:
                continue
            key = tuple(exps[i] for i in order)
            new = clean.get(key, Fraction(0)) + coeff
            if new == 0:
                clean.pop(key, None)
            else:
                clean[key] = new
        object.__setattr__(self, "variables", permuted)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPolynomial is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, value, variables: Iterable[str] = ("t",)) -> "LaurentPolynomial":
        variables = tuple(variables)
        zero = (0,) * len(variables)
        return cls(variables, {zero: _as_fraction(value)})

    @classmethod
    def monomial(cls, variables: Iterable[str], exponents, coeff=1) -> "LaurentPolynomial":
        return cls(variables, {tuple(exponents) if not isinstance(exponents, int) else (exponents,): coeff})

    @classmethod
    def var(cls, name: str) -> "LaurentPolynomial":
        return cls((name,), {(1,): 1})

    # -- basic queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        zero = (0,) * len(self.variables)
        return not self.terms or set(self.terms) == {zero}

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.variables), Fraction(0))

    def coefficient(self, exponents) -> Fraction:
        if isinstance(exponents, int):
            exponents = (exponents,)
        return self.terms.get(tuple(exponents), Fraction(0))

    def support(self):
        return set(self.terms)

    def degree_range(self, index: int = 0) -> tuple[int, int]:
        """(min, max) exponent of the index-th variable; (0, 0) for zero."""
        if not self.terms:
            return (0, 0)
        exps = [e[index] for e in self.terms]
        return (min(exps), max(exps))

    # -- ring operations ----------------------------------------------------

    def _check_compatible(self, other: "LaurentPolynomial"):
        if self.variables != other.variables:
            raise VariableMismatchError(
                f"variable lists differ: {self.variables} vs {other.variables}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPolynomial.constant(other, self.variables)
        self._check_compatible(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            new = terms.get(exps, Fraction(0)) + coeff
            if new == 0:
                terms.pop(exps, None)
            else:
                terms[exps] = new
        return LaurentPolynomial(self.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPolynomial.constant(other, self.variables)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _as_fraction(other)
            return LaurentPolynomial(self.variables,
                                     {e: c * other for e, c in self.terms.items()})
        self._check_compatible(other)
        terms: dict[tuple, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                new = terms.get(key, Fraction(0)) + c1 * c2
                if new == 0:
                    terms.pop(key, None)
                else:
                    terms[key] = new
        return LaurentPolynomial(self.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers")
        result = LaurentPolynomial.constant(1, self.variables)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPolynomial.constant(other, self.variables)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    # -- substitutions ------------------------------------------------------

    def map_exponents(self, matrix) -> "LaurentPolynomial":
        """Monomial substitution: variable i maps to the monomial with
        exponent vector `matrix[i]` (a row of integers, one per variable).
        """
        terms: dict[tuple, Fraction] = {}
        n = len(self.variables)
        for exps, coeff in self.terms.items():
            key = tuple(sum(exps[i] * matrix[i][j] for i in range(n)) for j in range(n))
            new = terms.get(key, Fraction(0)) + coeff
            if new == 0:
                terms.pop(key, None)
            else:
                terms[key] = new
        return LaurentPolynomial(self.variables, terms)

    def evaluate(self, values: Mapping[str, object]) -> Fraction:
        """Evaluate at exact rational values (all nonzero for negative powers)."""
        total = Fraction(0)
        vals = [_as_fraction(values[v]) for v in self.variables]
        for exps, coeff in self.terms.items():
            term = coeff
            for v, e in zip(vals, exps):
                term *= v ** e
            total += term
        return total

    def substitute_var(self, name: str, value) -> "LaurentPolynomial":
        """Set one variable of a 2-variable polynomial to an exact constant."""
        if len(self.variables) != 2 or name not in self.variables:
            raise ValueError(f"cannot eliminate {name!r} from {self.variables}")
        keep = 1 - self.variables.index(name)
        drop = self.variables.index(name)
        value = _as_fraction(value)
        terms: dict[tuple, Fraction] = {}
        for exps, coeff in self.terms.items():
            c = coeff * value ** exps[drop]
            key = (exps[keep],)
            new = terms.get(key, Fraction(0)) + c
            if new == 0:
                terms.pop(key, None)
            else:
                terms[key] = new
        return LaurentPolynomial((self.variables[keep],), terms)

    def rename(self, mapping: Mapping[str, str]) -> "LaurentPolynomial":
        new_vars = tuple(mapping.get(v, v) for v in self.variables)
        return LaurentPolynomial(new_vars, dict(self.terms))

    def divide_exact(self, divisor: "LaurentPolynomial") -> "LaurentPolynomial":
        """Exact division in the Laurent ring (1-variable); raises if inexact."""
        self._check_compatible(divisor)
        if len(self.variables) != 1:
            raise ValueError("exact division implemented for one variable only")
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return self
        rem = dict(self.terms)
        dlo, dhi = divisor.degree_range()
        dlead = divisor.terms[(dhi,)]
        quot: dict[tuple, Fraction] = {}
        while rem:
            hi = max(e[0] for e in rem)
            lo = min(e[0] for e in rem)
            if hi - lo < dhi - dlo:
                raise ArithmeticError("inexact Laurent division")
            k = hi - dhi
            c = rem[(hi,)] / dlead
            quot[(k,)] = c
            for (e,), dc in divisor.terms.items():
                key = (e + k,)
                new = rem.get(key, Fraction(0)) - c * dc
                if new == 0:
                    rem.pop(key, None)
                else:
                    rem[key] = new
        return LaurentPolynomial(self.variables, quot)

    # -- rendering ----------------------------------------------------------

    def render(self) -> str:
        """Canonical text form: terms in descending lexicographic exponent
        order, coefficients as num or num/den."""
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, reverse=True):
            coeff = self.terms[exps]
            mono = "*".join(
                v if e == 1 else f"{v}^{e}"
                for v, e in zip(self.variables, exps) if e != 0)
            mag = abs(coeff)
            if mono:
                body = mono if mag == 1 else f"{_frac_str(mag)}*{mono}"
            else:
                body = _frac_str(mag)
            parts.append(("- " if coeff < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else text[0] + text[2:]

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"LaurentPolynomial({self.render()!r})"


def _frac_str(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def laurent_arith(a: LaurentPolynomial, b: LaurentPolynomial, kind: str) -> LaurentPolynomial:
    """Dispatch helper for add / sub / mul with variable-list checking."""
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    raise ValueError(f"unknown operation {kind!r}")
