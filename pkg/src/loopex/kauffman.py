"""Kauffman bracket state sum for braid closures.

This is the independent Jones-polynomial oracle: a 2^n resolution sum with
loop counting, normalized so that

    J(unknot) = q^(1/2) + q^(-1/2)
    q*J(L+) - (1/q)*J(L-) = (q^(1/2) - q^(-1/2)) * J(L0)

where replacing one positive braid letter by its inverse (resp. deleting it)
produces the L- (resp. L0) member of a skein triple of closures.  Values are
exact Laurent polynomials in the quarter power a = q^(1/4).
"""

from __future__ import annotations

from fractions import Fraction

from .braid import BraidWord, closure_component_count, writhe
from .exactalg import LaurentPolynomial, TruncatedSeries

#: variable of the oracle output: a = q^(1/4)
QUARTER_VAR = "a"

STATE_SUM_CAP = 20


class StateSumTooLarge(ValueError):
    """Raised when the 2^n resolution sum would exceed the letter-count cap."""


def _bracket_closure(b: BraidWord) -> LaurentPolynomial:
    """Kauffman bracket <closure(b)> in the variable A, <unknot> = 1."""
    n = len(b.letters)
    if n > STATE_SUM_CAP:
        raise StateSumTooLarge(f"{n} letters exceeds the {STATE_SUM_CAP}-letter cap")
    s = b.strands

    # For each state, count circles of the resolved closure via union-find.
    counts: dict[int, int] = {}  # (a-count minus b-count) -> multiplicity per circle count
    acc: dict[tuple[int, int], int] = {}  # (exponent delta, circles) -> states
    for state in range(1 << n):
        parent = list(range(s))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry

        wires = list(range(s))
        next_wire = s
        delta = 0
        for pos, letter in enumerate(b.letters):
            i = abs(letter) - 1
            # bit 0 picks the A-smoothing, bit 1 the B-smoothing
            smooth_b = (state >> pos) & 1
            delta += -1 if smooth_b else 1
            # positive letter: A-smoothing is the identity; negative: cup-cap
            cupcap = (letter > 0) == smooth_b
            if cupcap:
                parent.append(next_wire)
                union(wires[i], wires[i + 1])
                wires[i] = wires[i + 1] = next_wire
                next_wire += 1
        for k in range(s):
            union(wires[k], k)
        circles = len({find(x) for x in range(next_wire)})
        key = (delta, circles)
        acc[key] = acc.get(key, 0) + 1

    # <L> = sum_states A^delta * (-A^2 - A^-2)^(circles - 1)
    total = LaurentPolynomial((QUARTER_VAR,), {})
    loop = LaurentPolynomial((QUARTER_VAR,), {(2,): -1, (-2,): -1})
    for (delta, circles), mult in acc.items():
        term = LaurentPolynomial((QUARTER_VAR,), {(delta,): mult}) * loop ** (circles - 1)
        total = total + term
    return total


def bracket_jones(b: BraidWord) -> LaurentPolynomial:
    """Jones polynomial of the closure of b (knot or link), in a = q^(1/4).

    Writhe-corrected and scaled to the normalization J(unknot) = a^2 + a^-2.
    """
    w = writhe(b)
    bracket = _bracket_closure(b)
    # (-A^3)^(-w) frame correction; A is the quarter power of q directly.
    sign = -1 if w % 2 else 1
    corrected = LaurentPolynomial((QUARTER_VAR,), {(-3 * w,): sign}) * bracket
    # scale from <unknot> = 1 to J(unknot) = q^(1/2) + q^(-1/2); the extra
    # (-1)^(components-1) realizes the skein relation with these q powers.
    comps = closure_component_count(b)
    unknot = LaurentPolynomial((QUARTER_VAR,),
                               {(2,): 1, (-2,): 1}) * (-1 if comps % 2 == 0 else 1)
    return corrected * unknot


def jones_kauffman_oracle(b: BraidWord) -> LaurentPolynomial:
    """Jones oracle for knots (one-component closures)."""
    if closure_component_count(b) != 1:
        raise ValueError("oracle requires a one-component closure")
    return bracket_jones(b)


def jones_span(p: LaurentPolynomial) -> Fraction:
    """Breadth of the Jones polynomial in whole powers of q."""
    if p.is_zero():
        return Fraction(0)
    lo, hi = p.degree_range()
    return Fraction(hi - lo, 4)


def jones_to_hbar(p: LaurentPolynomial, order: int) -> TruncatedSeries:
    """Expand an oracle value at q = exp(hbar), i.e. a = exp(hbar/4).

    Quarter powers of q expand with rate k/4; the result has exact rational
    coefficients in hbar."""
    coeffs = [Fraction(0)] * (order + 1)
    for (e,), c in p.terms.items():
        rate = Fraction(e, 4)
        power = Fraction(1)
        for k in range(order + 1):
            coeffs[k] += c * power
            power = power * rate / (k + 1)
    return TruncatedSeries("hbar", order, coeffs)
