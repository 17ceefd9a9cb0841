"""The two-loop polynomial layer: symmetric bivariate Laurent algebra.

The invariant p(t1, t2) attached to the theta graph is fixed by an order-12
symmetry group G generated by

    (t1, t2) -> (t2, t1)
    (t1, t2) -> ((t1 t2)^-1, t2)
    (t1, t2) -> (1/t1, 1/t2)

(the symmetry group of the hexagonal exponent lattice).  The fundamental
domain m1 >= 2*m2 >= 0 meets every exponent orbit in exactly one point, so
tables list one monomial per orbit; orbit expansion treats the orbit as a set
(monomials fixed by part of the group are not multiply counted).

This module provides the expansion/extraction round trip, the symmetry check,
the exact rewriting into the invariant-ring generators u1, u2, the rational
form with the triple Alexander denominator, and the transform pair linking it
to the first-order term of the su(3) channel, plus the structural checks the
whole corpus must satisfy.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .braid import KnotRecord
from .exactalg import LaurentPolynomial

_T12 = ("t1", "t2")
_U12 = ("u1", "u2")

#: the order-12 symmetry group as exponent-lattice matrices (row i = image of e_i)
_GEN_SWAP = ((0, 1), (1, 0))
_GEN_FOLD = ((-1, -1), (0, 1))   # (t1,t2) -> ((t1 t2)^-1, t2)
_GEN_INV = ((-1, 0), (0, -1))


def _mat_mul2(a, b):
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2))
                 for i in range(2))


def _group_elements():
    gens = [_GEN_SWAP, _GEN_FOLD, _GEN_INV]
    identity = ((1, 0), (0, 1))
    elements = {identity}
    frontier = [identity]
    while frontier:
        new = []
        for m in frontier:
            for g in gens:
                prod = _mat_mul2(m, g)
                if prod not in elements:
                    elements.add(prod)
                    new.append(prod)
        frontier = new
    return tuple(sorted(elements))


GAMMA_GROUP = _group_elements()
assert len(GAMMA_GROUP) == 12


def gamma_orbit(pair: tuple[int, int]) -> frozenset:
    """Orbit of an exponent pair under the order-12 group, as a set."""
    a, b = pair
    return frozenset((a * m[0][0] + b * m[1][0], a * m[0][1] + b * m[1][1])
                     for m in GAMMA_GROUP)


def in_fundamental_domain(pair: tuple[int, int]) -> bool:
    m1, m2 = pair
    return m1 >= 2 * m2 >= 0


def fundamental_representative(pair: tuple[int, int]) -> tuple[int, int]:
    reps = [p for p in gamma_orbit(pair) if in_fundamental_domain(p)]
    if len(reps) != 1:
        raise AssertionError(f"orbit of {pair} has {len(reps)} domain points")
    return reps[0]


class DomainError(ValueError):
    """Raised for entries outside the fundamental domain, or duplicates."""


@dataclass(frozen=True)
class ThetaPolynomial:
    """A group-invariant bivariate Laurent polynomial, stored both ways:
    by fundamental-domain monomials and fully expanded."""
    fundamental: tuple            # ((m1, m2, Fraction), ...)
    expanded: LaurentPolynomial   # in t1, t2

    def scaled(self, factor) -> "ThetaPolynomial":
        factor = Fraction(factor)
        return ThetaPolynomial(
            tuple((m1, m2, c * factor) for m1, m2, c in self.fundamental),
            self.expanded * factor)

    def is_zero(self) -> bool:
        return self.expanded.is_zero()


def symmetrize_from_fundamental(entries: Iterable[tuple]) -> ThetaPolynomial:
    """Expand fundamental-domain monomial data into the full invariant.

    Each (m1, m2, coeff) contributes coeff once per element of the orbit of
    (m1, m2), with the orbit taken as a set.
    """
    seen = set()
    fundamental = []
    terms: dict[tuple, Fraction] = {}
    for m1, m2, coeff in entries:
        if not in_fundamental_domain((m1, m2)):
            raise DomainError(f"({m1},{m2}) violates m1 >= 2*m2 >= 0")
        if (m1, m2) in seen:
            raise DomainError(f"duplicate exponent pair ({m1},{m2})")
        seen.add((m1, m2))
        coeff = Fraction(coeff)
        if coeff == 0:
            continue
        fundamental.append((m1, m2, coeff))
        for pair in gamma_orbit((m1, m2)):
            new = terms.get(pair, Fraction(0)) + coeff
            if new == 0:
                terms.pop(pair, None)
            else:
                terms[pair] = new
    return ThetaPolynomial(tuple(fundamental), LaurentPolynomial(_T12, terms))


def extract_fundamental(p: LaurentPolynomial) -> ThetaPolynomial:
    """Inverse of orbit expansion; requires a group-invariant input."""
    if not check_symmetries(p):
        raise DomainError("input is not invariant under the symmetry group")
    fundamental = []
    for exps in sorted(p.terms, reverse=True):
        if in_fundamental_domain(exps):
            fundamental.append((exps[0], exps[1], p.terms[exps]))
    rebuilt = symmetrize_from_fundamental(fundamental)
    if rebuilt.expanded != p:
        raise DomainError("fundamental-domain extraction was lossy")
    return ThetaPolynomial(tuple(fundamental), p)


def apply_group_element(p: LaurentPolynomial, matrix) -> LaurentPolynomial:
    return p.map_exponents([list(matrix[0]), list(matrix[1])])


def check_symmetries(p: LaurentPolynomial) -> bool:
    """Exact invariance under the three group generators."""
    return all(apply_group_element(p, g) == p
               for g in (_GEN_SWAP, _GEN_FOLD, _GEN_INV))


# -- invariant-ring generators ------------------------------------------------

U1_EXPANDED = symmetrize_from_fundamental([(1, 0, 1)]).expanded
U2_EXPANDED = symmetrize_from_fundamental([(2, 1, 1)]).expanded


def u_monomial_expanded(a: int, b: int) -> LaurentPolynomial:
    return U1_EXPANDED ** a * U2_EXPANDED ** b


def to_u_basis(p: LaurentPolynomial) -> LaurentPolynomial:
    """Exact rewriting of a group-invariant polynomial in u1, u2.

    Repeatedly kills the lexicographically leading orbit: the leading exponent
    (M1, M2) of an invariant polynomial satisfies M1 >= M2 >= M1 - M2 >= 0 and
    is the leading exponent of u1^(2*M2-M1) * u2^(M1-M2) with coefficient 1.
    """
    if not check_symmetries(p):
        raise DomainError("u-basis rewriting requires a group-invariant input")
    rem = dict(p.terms)
    out: dict[tuple, Fraction] = {}
    guard = 0
    while rem:
        guard += 1
        if guard > 10000:
            raise AssertionError("u-basis rewriting failed to terminate")
        m1, m2 = max(rem)
        if not (m1 >= m2 >= m1 - m2 >= 0):
            raise DomainError(f"leading exponent {(m1, m2)} is not of invariant shape")
        a, b = 2 * m2 - m1, m1 - m2
        coeff = rem[(m1, m2)]
        out[(a, b)] = coeff
        for exps, c in u_monomial_expanded(a, b).terms.items():
            new = rem.get(exps, Fraction(0)) - coeff * c
            if new == 0:
                rem.pop(exps, None)
            else:
                rem[exps] = new
    return LaurentPolynomial(_U12, out)


def u_back_substitute(q: LaurentPolynomial) -> LaurentPolynomial:
    """Evaluate a polynomial in u1, u2 back into t1, t2."""
    total = LaurentPolynomial(_T12, {})
    for (a, b), c in q.terms.items():
        if a < 0 or b < 0:
            raise ValueError("u-basis polynomials have non-negative exponents")
        total = total + u_monomial_expanded(a, b) * c
    return total


# -- rational form with the triple Alexander denominator ----------------------

#: denominator factor arguments, as exponent maps t -> (t1, t2)
_ARGS = {"t1": (1, 0), "t2": (0, 1), "t1t2": (1, 1)}


def _promote(delta_t: LaurentPolynomial, arg: str) -> LaurentPolynomial:
    """Promote a 1-variable polynomial to two variables at argument t1, t2 or t1*t2."""
    e1, e2 = _ARGS[arg]
    return LaurentPolynomial(_T12, {(e * e1, e * e2): c
                                    for (e,), c in delta_t.terms.items()})


@dataclass(frozen=True)
class RationalData:
    """numerator / (Delta(t1)^a * Delta(t2)^b * Delta(t1 t2)^c), exact.

    The denominator is held symbolically as exponents of the three factors;
    nothing is ever series-expanded inside the transforms.
    """
    numerator: LaurentPolynomial     # in t1, t2
    delta: LaurentPolynomial         # in t, with delta(1) = 1
    exponents: tuple[int, int, int]  # of Delta(t1), Delta(t2), Delta(t1 t2)

    def denominator_expanded(self) -> LaurentPolynomial:
        a, b, c = self.exponents
        return (_promote(self.delta, "t1") ** a * _promote(self.delta, "t2") ** b
                * _promote(self.delta, "t1t2") ** c)

    def same_value(self, other: "RationalData") -> bool:
        """Exact equality as rational functions (cross multiplication)."""
        if self.delta != other.delta:
            return False
        return (self.numerator * other.denominator_expanded()
                == other.numerator * self.denominator_expanded())

    def scaled(self, factor) -> "RationalData":
        return RationalData(self.numerator * Fraction(factor), self.delta, self.exponents)

    def plus(self, other: "RationalData") -> "RationalData":
        if self.delta != other.delta:
            raise ValueError("cannot add rational data over different Alexander polynomials")
        a = tuple(max(x, y) for x, y in zip(self.exponents, other.exponents))
        def lift(r: RationalData) -> LaurentPolynomial:
            da, db, dc = (a[0] - r.exponents[0], a[1] - r.exponents[1],
                          a[2] - r.exponents[2])
            return (r.numerator * _promote(r.delta, "t1") ** da
                    * _promote(r.delta, "t2") ** db * _promote(r.delta, "t1t2") ** dc)
        return RationalData(lift(self) + lift(other), self.delta, tuple(a))

    def substitute_fold(self) -> "RationalData":
        """(t1, t2) -> ((t1 t2)^-1, t2); the factor family is closed under this."""
        num = self.numerator.map_exponents([[-1, -1], [0, 1]])
        a, b, c = self.exponents
        # Delta(t1) -> Delta((t1 t2)^-1) = Delta(t1 t2); Delta(t1 t2) -> Delta(t1)
        return RationalData(num, self.delta, (c, b, a))

    def substitute_swap(self) -> "RationalData":
        num = self.numerator.map_exponents([[0, 1], [1, 0]])
        a, b, c = self.exponents
        return RationalData(num, self.delta, (b, a, c))

    def specialize_t2_to_1(self) -> "RationalData":
        """Set t2 = 1 exactly; Delta(1) = 1 degenerates the denominator."""
        num1 = self.numerator.substitute_var("t2", 1)
        num = LaurentPolynomial(_T12, {(e, 0): c for (e,), c in num1.terms.items()})
        a, b, c = self.exponents
        return RationalData(num, self.delta, (a + c, 0, 0))

    def value_at_ones(self) -> Fraction:
        """Value at (1, 1); the denominator is 1 there."""
        return self.numerator.evaluate({"t1": 1, "t2": 1})

    def is_symmetric(self) -> bool:
        """Group invariance as a rational function."""
        swapped = self.substitute_swap()
        folded = self.substitute_fold()
        inv = RationalData(self.numerator.map_exponents([[-1, 0], [0, -1]]),
                           self.delta, self.exponents)
        return (self.same_value(swapped) and self.same_value(folded)
                and self.same_value(inv))


def ztheta(record: KnotRecord) -> RationalData:
    """The rational two-loop invariant p(t1,t2) / (D(t1) D(t2) D(t1 t2)),
    assembled from a corpus record's golden data (p = stored table value / 12)."""
    twelve_p = symmetrize_from_fundamental(record.theta12_fundamental)
    return RationalData(twelve_p.expanded * Fraction(1, 12),
                        record.alexander_golden, (1, 1, 1))


def f1_from_ztheta(z: RationalData) -> RationalData:
    """First-order su(3) combination:
    F(t1,t2) = 12 (z(t1,1) + z(t2,1) + z((t1 t2)^-1, 1) + z(t1,t2))."""
    z1 = z.specialize_t2_to_1()                      # z(t1, 1)
    z2 = z1.substitute_swap()                        # z(t2, 1)
    z3 = z1.substitute_fold()                        # z((t1 t2)^-1, 1)
    total = z1.plus(z2).plus(z3).plus(z)
    return total.scaled(12)


def ztheta_from_f1(F: RationalData) -> RationalData:
    """Inverse transform:
    z(t1,t2) = (1/36) (3 F(t1,t2) - F(t1,1) - F(t2,1) - F((t1 t2)^-1, 1))."""
    if F.value_at_ones() != 0:
        raise ValueError("transform requires F(1,1) = 0")
    if not F.is_symmetric():
        raise ValueError("transform requires a group-invariant input")
    F1 = F.specialize_t2_to_1()
    F2 = F1.substitute_swap()
    F3 = F1.substitute_fold()
    total = F.scaled(3).plus(F1.scaled(-1)).plus(F2.scaled(-1)).plus(F3.scaled(-1))
    return total.scaled(Fraction(1, 36))


# -- structural checks ---------------------------------------------------------

@dataclass(frozen=True)
class StructuralReport:
    knot: str
    gamma_invariant: bool
    vanishes_at_ones: bool
    integer_coefficients: bool
    degree_within_genus_bound: bool
    amphichiral_zero: bool | None  # None when the knot is not flagged amphichiral

    @property
    def ok(self) -> bool:
        checks = [self.gamma_invariant, self.vanishes_at_ones,
                  self.integer_coefficients, self.degree_within_genus_bound]
        if self.amphichiral_zero is not None:
            checks.append(self.amphichiral_zero)
        return all(checks)


AMPHICHIRAL = ("4_1", "6_3")


def structural_checks(record: KnotRecord) -> StructuralReport:
    twelve_p = symmetrize_from_fundamental(record.theta12_fundamental)
    expanded = twelve_p.expanded
    degree = max((m1 for m1, _, _ in record.theta12_fundamental), default=0)
    return StructuralReport(
        knot=record.name,
        gamma_invariant=check_symmetries(expanded),
        vanishes_at_ones=expanded.evaluate({"t1": 1, "t2": 1}) == 0,
        integer_coefficients=all(c.denominator == 1 for c in expanded.terms.values()),
        degree_within_genus_bound=degree <= 2 * record.genus,
        amphichiral_zero=(expanded.is_zero() if record.name in AMPHICHIRAL else None),
    )


def sl2_reduction_constant(record: KnotRecord,
                           extracted_p1: LaurentPolynomial) -> Fraction | None:
    """The constant c with extracted_p1(t) = c * p(t, 1), if one fits exactly.

    Returns None when no single constant works; for records with p = 0 the
    extracted polynomial must vanish, and any calibration constant fits (the
    caller treats that as compatible)."""
    twelve_p = symmetrize_from_fundamental(record.theta12_fundamental)
    shadow = twelve_p.expanded.substitute_var("t2", 1).rename({"t1": "t"}) * Fraction(1, 12)
    if shadow.is_zero():
        return None if not extracted_p1.is_zero() else Fraction(0)
    if extracted_p1.is_zero():
        return None
    exps = min(shadow.terms)
    c = extracted_p1.coefficient(exps) / shadow.terms[exps]
    if extracted_p1 == shadow * c:
        return c
    return None
