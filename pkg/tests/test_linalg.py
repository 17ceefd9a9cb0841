import random
from fractions import Fraction

from loopex.exactalg import interpolate_polynomial, solve_linear_exact


def test_interpolate_quadratic():
    res = interpolate_polynomial([1, 2, 3], [1, 4, 9], 2)
    assert res.stable
    assert res.coefficients == (0, 0, 1)


def test_interpolate_degree_bound_violation():
    res = interpolate_polynomial([1, 2, 3, 4], [1, 4, 9, 17], 2)
    assert not res.stable
    assert res.failures and res.failures[0][0] == 4


def test_interpolate_constant_data():
    res = interpolate_polynomial([1, 2, 3, 4, 5], [7, 7, 7, 7, 7], 0)
    assert res.stable
    assert res.coefficients == (7,)


def test_interpolate_evaluate_roundtrip_random():
    rng = random.Random(99)
    for _ in range(30):
        deg = rng.randint(0, 8)
        coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(deg + 1)]
        nodes = list(range(1, deg + 5))
        values = [sum(c * Fraction(x) ** k for k, c in enumerate(coeffs)) for x in nodes]
        res = interpolate_polynomial(nodes, values, deg)
        assert res.stable
        got = list(res.coefficients)
        while len(got) < deg + 1:
            got.append(Fraction(0))
        assert got == coeffs


def test_solve_identity():
    res = solve_linear_exact([[1, 0], [0, 1]], [3, Fraction(1, 2)])
    assert res.ok and res.solution == (3, Fraction(1, 2))


def test_solve_inconsistent():
    res = solve_linear_exact([[0]], [1])
    assert res.status == "inconsistent"


def test_solve_two_by_two():
    res = solve_linear_exact([[1, 1], [1, -1]], [2, 0])
    assert res.ok and res.solution == (1, 1)


def test_solve_underdetermined():
    res = solve_linear_exact([[1, 1]], [2])
    assert res.status == "underdetermined"


def test_solve_overdetermined_consistent():
    res = solve_linear_exact([[1, 0], [0, 1], [1, 1]], [1, 2, 3])
    assert res.ok and res.solution == (1, 2)


def test_solve_overdetermined_inconsistent():
    res = solve_linear_exact([[1, 0], [0, 1], [1, 1]], [1, 2, 4])
    assert res.status == "inconsistent"
