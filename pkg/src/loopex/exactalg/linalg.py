"""Exact polynomial interpolation and linear solving over the rationals.

Both entry points return structured results instead of raising on the
expected failure modes (degree-bound violations, inconsistent or
underdetermined systems), so callers can branch without try/except.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence


@dataclass(frozen=True)
class InterpolationResult:
    """Interpolant through the first degree_bound+1 nodes plus the outcome of
    checking it against every surplus node."""
    coefficients: tuple  # low -> high degree, length degree_bound + 1
    stable: bool
    failures: tuple = ()  # (node, expected, actual) for surplus mismatches

    def value_at(self, x) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc


def interpolate_polynomial(nodes: Sequence, values: Sequence,
                           degree_bound: int) -> InterpolationResult:
    """Interpolate a polynomial of degree <= degree_bound through exact data.

    Uses the first degree_bound+1 points; every remaining point is evaluated
    exactly and any mismatch is reported as a degree-bound violation via
    `stable=False` (not an exception).
    """
    nodes = [Fraction(x) for x in nodes]
    values = [Fraction(y) for y in values]
    if len(nodes) != len(values):
        raise ValueError("nodes and values differ in length")
    if len(set(nodes)) != len(nodes):
        raise ValueError("interpolation nodes must be pairwise distinct")
    d = degree_bound
    if len(nodes) < d + 1:
        raise ValueError(f"need at least {d + 1} nodes for degree bound {d}")

    # Newton divided differences on the first d+1 points.
    xs = nodes[: d + 1]
    table = list(values[: d + 1])
    newton = [table[0]]
    for level in range(1, d + 1):
        for i in range(d - level + 1):
            table[i] = (table[i + 1] - table[i]) / (xs[i + level] - xs[i])
        newton.append(table[0])

    coeffs = _newton_to_power(newton, xs)
    while len(coeffs) < d + 1:
        coeffs.append(Fraction(0))

    result = InterpolationResult(tuple(coeffs), True)
    failures = []
    for x, y in zip(nodes[d + 1:], values[d + 1:]):
        actual = result.value_at(x)
        if actual != y:
            failures.append((x, y, actual))
    if failures:
        return InterpolationResult(tuple(coeffs), False, tuple(failures))
    return result


def _newton_to_power(newton, xs):
    """Expand sum_k newton[k] * prod_{j<k}(x - xs[j]) into power-basis coefficients."""
    d = len(newton) - 1
    coeffs = [newton[d]]
    for level in range(d - 1, -1, -1):
        # coeffs(x) * (x - xs[level]) + newton[level]
        new = [Fraction(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            new[i + 1] += c
            new[i] -= xs[level] * c
        new[0] += newton[level]
        coeffs = new
    return coeffs


@dataclass(frozen=True)
class LinearSolveResult:
    """Outcome of exact Gaussian elimination.

    status is one of "unique", "inconsistent", "underdetermined"; solution is
    populated only for "unique".
    """
    status: str
    solution: tuple | None = None
    rank: int = 0

    @property
    def ok(self) -> bool:
        return self.status == "unique"


def solve_linear_exact(matrix: Sequence[Sequence], rhs: Sequence) -> LinearSolveResult:
    """Solve matrix @ z = rhs exactly; over- and under-determination allowed."""
    rows = [[Fraction(x) for x in row] for row in matrix]
    b = [Fraction(y) for y in rhs]
    if len(rows) != len(b):
        raise ValueError("matrix and rhs differ in row count")
    m = len(rows)
    n = len(rows[0]) if m else 0
    if any(len(r) != n for r in rows):
        raise ValueError("ragged matrix")

    pivots = []  # (row, col)
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        b[r], b[pivot] = b[pivot], b[r]
        inv = Fraction(1) / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        b[r] *= inv
        for i in range(m):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
                b[i] -= f * b[r]
        pivots.append((r, c))
        r += 1
        if r == m:
            break
    rank = len(pivots)
    for i in range(rank, m):
        if b[i] != 0:
            return LinearSolveResult("inconsistent", rank=rank)
    if rank < n:
        return LinearSolveResult("underdetermined", rank=rank)
    solution = [Fraction(0)] * n
    for row, col in pivots:
        solution[col] = b[row]
    return LinearSolveResult("unique", tuple(solution), rank)
