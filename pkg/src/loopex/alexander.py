"""Alexander polynomial of a braid closure via the reduced Burau representation.

The determinant route needs no unknot recognition: for a braid b on s strands
whose closure is a knot,

    det(I - burau_reduced(b)) * (1 - t) / (1 - t^s)

equals the Alexander polynomial up to a unit +-t^k, and the unique unit making
the result symmetric under t <-> 1/t with value 1 at t = 1 normalizes it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .braid import BraidWord, closure_component_count
from .exactalg import LaurentPolynomial

_T = ("t",)


def _poly(terms) -> LaurentPolynomial:
    return LaurentPolynomial(_T, terms)


class NotAKnotError(ValueError):
    """Raised when an operation requires a one-component closure."""


class NormalizationError(ArithmeticError):
    """No unit +-t^k symmetrizes the Burau determinant; indicates a bug."""


@dataclass(frozen=True)
class AlexanderPolynomial:
    """Normalized Alexander polynomial: poly(1) = 1 and poly(t) = poly(1/t)."""
    poly: LaurentPolynomial

    def __post_init__(self):
        if self.poly.evaluate({"t": 1}) != 1:
            raise ValueError("Alexander normalization poly(1) = 1 violated")
        if self.poly != _invert_t(self.poly):
            raise ValueError("Alexander symmetry poly(t) = poly(1/t) violated")

    def __eq__(self, other):
        if isinstance(other, AlexanderPolynomial):
            return self.poly == other.poly
        return self.poly == other

    def __hash__(self):
        return hash(self.poly)


def _invert_t(p: LaurentPolynomial) -> LaurentPolynomial:
    return p.map_exponents([[-1]])


def burau_reduced(b: BraidWord, inverse: bool = False) -> list[list[LaurentPolynomial]]:
    """Image of the braid word under the reduced Burau representation.

    Returns an (s-1) x (s-1) matrix over Z[t, 1/t]; the empty word gives the
    identity and concatenation multiplies.  With inverse=True the generator
    images are inverted letterwise (used only for tests).
    """
    n = b.strands - 1
    one = _poly({(0,): 1})
    zero = _poly({})
    matrix = [[one if i == j else zero for j in range(n)] for i in range(n)]
    for letter in b.letters:
        sign = -1 if inverse else 1
        matrix = _mat_mul(matrix, _generator_matrix(letter * sign, b.strands))
    return matrix


def _generator_matrix(letter: int, strands: int) -> list[list[LaurentPolynomial]]:
    """Reduced Burau image of one letter, acting on the basis
    f_j = e_j - e_{j+1} (row j holds the image of f_j)."""
    n = strands - 1
    i = abs(letter)
    one = _poly({(0,): 1})
    zero = _poly({})
    m = [[one if r == c else zero for c in range(n)] for r in range(n)]
    t = _poly({(1,): 1})
    tinv = _poly({(-1,): 1})
    j = i - 1  # matrix index of f_i
    if letter > 0:
        m[j][j] = -t
        if j - 1 >= 0:
            m[j - 1][j] = t
        if j + 1 < n:
            m[j + 1][j] = one
    else:
        m[j][j] = -tinv
        if j - 1 >= 0:
            m[j - 1][j] = one
        if j + 1 < n:
            m[j + 1][j] = tinv
    return m


def _mat_mul(a, b):
    n = len(a)
    zero = _poly({})
    out = [[zero for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for k in range(n):
            if a[i][k].is_zero():
                continue
            aik = a[i][k]
            for j in range(n):
                if not b[k][j].is_zero():
                    out[i][j] = out[i][j] + aik * b[k][j]
    return out


def _det(matrix) -> LaurentPolynomial:
    n = len(matrix)
    if n == 0:
        return _poly({(0,): 1})
    if n == 1:
        return matrix[0][0]
    total = _poly({})
    for j in range(n):
        if matrix[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = matrix[0][j] * _det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def alexander_poly(b: BraidWord) -> AlexanderPolynomial:
    """Normalized Alexander polynomial of the closure of b (a knot)."""
    if closure_component_count(b) != 1:
        raise NotAKnotError("closure has more than one component")
    raw = _burau_determinant_form(b)
    return AlexanderPolynomial(_normalize_symmetric(raw))


def _burau_determinant_form(b: BraidWord) -> LaurentPolynomial:
    """det(I - burau_reduced(b)) * (1-t)/(1-t^s), as exact Laurent division."""
    n = b.strands - 1
    burau = burau_reduced(b)
    one = _poly({(0,): 1})
    delta = [[(one if i == j else _poly({})) - burau[i][j] for j in range(n)]
             for i in range(n)]
    det = _det(delta)
    # (1-t)/(1-t^s) = 1/(1 + t + ... + t^{s-1})
    cyclo = _poly({(k,): 1 for k in range(b.strands)})
    return det.divide_exact(cyclo)


def _normalize_symmetric(raw: LaurentPolynomial) -> LaurentPolynomial:
    """Multiply by the unique unit +-t^k giving symmetry and value 1 at t=1."""
    if raw.is_zero():
        raise NormalizationError("Burau determinant vanished for a knot closure")
    lo, hi = raw.degree_range()
    if (lo + hi) % 2 != 0:
        raise NormalizationError("no integer-power unit centers the support")
    shift = -(lo + hi) // 2
    centered = raw.map_exponents([[1]]) if shift == 0 else \
        LaurentPolynomial(_T, {(e + shift,): c for (e,), c in raw.terms.items()})
    if centered != _invert_t(centered):
        raise NormalizationError("centered Burau determinant is not symmetric")
    at_one = centered.evaluate({"t": 1})
    if at_one == 1:
        return centered
    if at_one == -1:
        return -centered
    raise NormalizationError(f"value at t=1 is {at_one}, expected a unit")


def alexander_in_u(a: AlexanderPolynomial) -> LaurentPolynomial:
    """Rewrite a symmetric polynomial exactly in u = t + 1/t."""
    rem = dict(a.poly.terms)
    out: dict[tuple, Fraction] = {}
    u_pows: dict[int, LaurentPolynomial] = {0: _poly({(0,): 1})}
    u = _poly({(1,): 1, (-1,): 1})

    def u_power(k: int) -> LaurentPolynomial:
        if k not in u_pows:
            u_pows[k] = u_power(k - 1) * u
        return u_pows[k]

    while rem:
        k = max(e[0] for e in rem)
        if k < 0:
            raise ValueError("input is not symmetric under t <-> 1/t")
        coeff = rem[(k,)]
        out[(k,)] = out.get((k,), Fraction(0)) + coeff
        for (e,), c in u_power(k).terms.items():
            key = (e,)
            new = rem.get(key, Fraction(0)) - coeff * c
            if new == 0:
                rem.pop(key, None)
            else:
                rem[key] = new
    return LaurentPolynomial(("u",), out)


def u_back_substitute(q: LaurentPolynomial) -> LaurentPolynomial:
    """Evaluate a polynomial in u at u = t + 1/t (round-trip check helper)."""
    u = _poly({(1,): 1, (-1,): 1})
    total = _poly({})
    for (e,), c in q.terms.items():
        if e < 0:
            raise ValueError("polynomials in u have non-negative degrees")
        total = total + u ** e * c
    return total
