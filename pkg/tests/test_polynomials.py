import random

from hypothesis import given, settings
from hypothesis import strategies as st

from graphzeta.exact.polynomials import (
    IntPoly,
    cyclotomic_polynomial,
    poly_matrix_det,
    taylor_at_one,
)

U = IntPoly.x()


def test_poly_basics():
    p = IntPoly.of((1, 2, 0, 0))
    assert p.coeffs == (1, 2)
    assert p.degree() == 1
    assert p(3) == 7
    assert (p * p).coeffs == (1, 4, 4)
    assert (p - p).is_zero()
    assert (IntPoly.of((1, 0, -1)) ** 2).coeffs == (1, 0, -2, 0, 1)


def test_poly_matrix_det_examples():
    one_cell = [[IntPoly.of((1, -2, 1))]]
    assert poly_matrix_det(one_cell) == IntPoly.of((1, -2, 1))

    # three-term matrix of C3 has determinant (1 - u^3)^2
    a = [[0, 1, 1], [1, 0, 1], [1, 1, 0]]
    entries = [[IntPoly.of((int(i == j), -a[i][j], int(i == j)))
                for j in range(3)] for i in range(3)]
    assert poly_matrix_det(entries) == IntPoly.of((1, 0, 0, -2, 0, 0, 1))

    diag = [[IntPoly.of((1, 0, 1)) if i == j else IntPoly.zero() for j in range(2)]
            for i in range(2)]
    assert poly_matrix_det(diag) == IntPoly.of((1, 0, 2, 0, 1))


def _cofactor_poly_det(entries):
    n = len(entries)
    if n == 1:
        return entries[0][0]
    total = IntPoly.zero()
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in entries[1:]]
        term = entries[0][j] * _cofactor_poly_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def test_poly_matrix_det_against_cofactor_oracle():
    rng = random.Random(31337)
    for _ in range(40):
        n = rng.randint(1, 4)
        entries = [[IntPoly.of((rng.randint(-3, 3), rng.randint(-3, 3), rng.randint(-3, 3)))
                    for _ in range(n)] for _ in range(n)]
        assert poly_matrix_det(entries) == _cofactor_poly_det(entries)


def test_cyclotomic_polynomial_examples():
    assert cyclotomic_polynomial(1) == IntPoly.of((-1, 1))
    assert cyclotomic_polynomial(4) == IntPoly.of((1, 0, 1))
    assert cyclotomic_polynomial(6) == IntPoly.of((1, -1, 1))


def test_cyclotomic_product_reconstructs_x_m_minus_one():
    for m in range(1, 31):
        prod = IntPoly.one()
        for d in range(1, m + 1):
            if m % d == 0:
                prod = prod * cyclotomic_polynomial(d)
        assert prod == IntPoly.of([-1] + [0] * (m - 1) + [1])


def test_taylor_at_one_examples():
    assert taylor_at_one((U - IntPoly.one()) ** 2) == (2, 1)
    one_minus_u3_sq = IntPoly.of((1, 0, 0, -1)) ** 2
    assert taylor_at_one(one_minus_u3_sq) == (2, 9)
    one_plus_u3_sq = IntPoly.of((1, 0, 0, 1)) ** 2
    assert taylor_at_one(one_plus_u3_sq) == (0, 4)


def test_taylor_zero_polynomial_rejected():
    try:
        taylor_at_one(IntPoly.zero())
    except ValueError:
        pass
    else:
        raise AssertionError("expected an error")


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(min_value=-9, max_value=9), min_size=1, max_size=8))
def test_taylor_expansion_reconstructs_polynomial(coeffs):
    p = IntPoly.of(coeffs)
    if p.is_zero():
        return
    # peel off Taylor coefficients at u = 1 and rebuild the polynomial
    shifted = []
    cur = p
    u_minus_one = U - IntPoly.one()
    while not cur.is_zero():
        shifted.append(cur(1))
        cur = (cur - IntPoly.constant(cur(1))).divexact(u_minus_one)
    rebuilt = IntPoly.zero()
    for k in reversed(range(len(shifted))):
        rebuilt = rebuilt * u_minus_one + IntPoly.constant(shifted[k])
    assert rebuilt == p
