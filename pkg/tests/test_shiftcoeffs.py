import json
from fractions import Fraction
from itertools import product as iter_product

import pytest

from dmzv.multipoly import LaurentPolynomial
from dmzv.shiftcoeffs import (
    ShiftedZetaExpression,
    check_contraction,
    check_merge_substitution,
    check_reindexing,
    check_trailing_shift,
    coefficient_polynomial,
    shift_coefficients,
    shifted_zeta_expression,
)


# ---------------------------------------------------------------------------
# independent brute-force oracle: expand the product with bare dicts
# ---------------------------------------------------------------------------

def brute_force_expansion(depth):
    """Expand the defining product over exponent dicts keyed by
    (u-exponents, v-exponents); written without the polynomial class."""

    def multiply(p, q):
        out = {}
        for (eu1, ev1), c1 in p.items():
            for (eu2, ev2), c2 in q.items():
                key = (
                    tuple(a + b for a, b in zip(eu1, eu2)),
                    tuple(a + b for a, b in zip(ev1, ev2)),
                )
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return {k: v for k, v in out.items() if v}

    zero_u = (0,) * depth
    zero_v = (0,) * depth

    def unit_u(i):
        return tuple(1 if j == i else 0 for j in range(depth))

    def unit_v(j, power=1):
        return tuple(power if i == j else 0 for i in range(depth))

    poly = {(zero_u, zero_v): Fraction(1)}
    for j in range(depth):
        factor = {(zero_u, zero_v): Fraction(1)}
        for i in range(j, depth):
            # -(u_i v_i) * v_j^{-1}
            key = (unit_u(i), tuple(a + b for a, b in zip(unit_v(i), unit_v(j, -1))))
            factor[key] = factor.get(key, Fraction(0)) - 1
            if j > 0:
                key2 = (
                    unit_u(i),
                    tuple(a + b for a, b in zip(unit_v(i), unit_v(j - 1, -1))),
                )
                factor[key2] = factor.get(key2, Fraction(0)) + 1
        poly = multiply(poly, factor)
    return poly


def family_from_brute_force(depth):
    return {
        (eu, ev): int(c) for (eu, ev), c in brute_force_expansion(depth).items()
    }


def test_depth1_polynomial():
    variables = ("u1", "v1")
    expected = LaurentPolynomial.constant(1, variables) - LaurentPolynomial.monomial(
        variables, {"u1": 1}
    )
    assert coefficient_polynomial(1) == expected
    assert shift_coefficients(1).entries == {((0,), (0,)): 1, ((1,), (0,)): -1}


@pytest.mark.parametrize("depth", [1, 2, 3, 4])
def test_expansion_matches_brute_force(depth):
    assert dict(shift_coefficients(depth).entries) == family_from_brute_force(depth)


def test_depth2_specific_entries():
    coeffs = shift_coefficients(2)
    assert coeffs.get((0, 1), (0, 0)) == -1
    assert coeffs.get((0, 0), (0, 0)) == 1
    oracle = family_from_brute_force(2)
    assert len(coeffs.entries) == len(oracle) == 7


def test_depth2_vanishing_pattern():
    # entries with last shift outside {l2 - 1, l2} are absent
    coeffs = shift_coefficients(2)
    for (l, m) in coeffs.entries:
        assert m[-1] in (l[-1] - 1, l[-1])
        assert m[-1] >= 0


@pytest.mark.parametrize("depth", [1, 2, 3, 4])
def test_trailing_shift_vanishing(depth):
    checks = check_trailing_shift(depth)
    assert all(c.status == "pass" for c in checks)


@pytest.mark.parametrize("depth", [2, 3])
def test_contraction_identity(depth):
    checks = check_contraction(depth)
    assert all(c.status == "pass" for c in checks)


def test_contraction_specific_entries_depth2():
    from dmzv.rationals import binomial

    cur = shift_coefficients(2)
    prev = shift_coefficients(1)
    for l in ((0, 0), (1, 1)):
        lr = l[-1]
        m = (0,)
        left = cur.get(l, (m[-1] - lr, lr)) + cur.get(l, (m[-1] - lr + 1, lr - 1))
        mid = binomial(l[0] + l[1], l[0]) * prev.get((l[0] + l[1],), m)
        right = -cur.get((l[0], lr + 1), (m[-1] - lr, lr))
        assert left == mid == right


@pytest.mark.parametrize("depth", [2, 3, 4])
def test_merge_substitution(depth):
    checks = check_merge_substitution(depth)
    assert all(c.status == "pass" for c in checks)


def test_merge_substitution_grid_oracle_depth2():
    """Evaluate the defining product numerically on a grid; fully
    independent of the polynomial expansion and substitution machinery."""

    def product_eval(depth, u, v):
        total = Fraction(1)
        for j in range(depth):
            inner = sum(u[i] * v[i] for i in range(j, depth))
            bracket = 1 / v[j] - (1 / v[j - 1] if j > 0 else Fraction(0))
            total *= 1 - inner * bracket
        return total

    points = [Fraction(n) for n in (1, 2, 3, 4, 5)]
    for u1, u2, v1, z in iter_product(points, repeat=4):
        lhs = product_eval(2, (u1, u2), (v1, (u2 + z) / u2 * v1))
        rhs = (z + 1) * product_eval(1, (u1 + u2 + z,), (v1,))
        assert lhs == rhs


@pytest.mark.parametrize("depth", [2, 3])
def test_reindexing(depth):
    checks = check_reindexing(depth)
    assert all(c.status == "pass" for c in checks)


def test_expression_depth1():
    expr = shifted_zeta_expression(1)
    assert expr.terms == ((1, (0,), (0,)), (-1, (1,), (0,)))
    # reads as: value(s) = (1 - s) * zeta(s)
    text = expr.render_text()
    assert "zeta(s1)" in text


def test_expression_round_trip_and_bijection():
    expr = shifted_zeta_expression(2)
    data = expr.to_json_dict()
    assert ShiftedZetaExpression.from_json_dict(data) == expr
    assert len(expr.terms) == len(shift_coefficients(2).entries)
    blob = json.dumps(data, sort_keys=True)
    assert json.dumps(json.loads(blob), sort_keys=True) == blob


def test_zero_sum_constraint_enforced():
    for depth in (1, 2, 3, 4):
        for (_, m) in shift_coefficients(depth).entries:
            assert sum(m) == 0
