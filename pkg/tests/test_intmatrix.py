import random

from graphzeta import cycle_graph, matrices
from graphzeta.exact.intmatrix import (
    IntMatrix,
    adjugate,
    int_det,
    kernel_basis,
    lattice_contains,
    smith_normal_form,
)

C3_LAPLACIAN = IntMatrix.from_rows([[2, -1, -1], [-1, 2, -1], [-1, -1, 2]])


def test_snf_forced_examples():
    assert smith_normal_form(IntMatrix.from_rows([[2, 0], [0, 3]])).diagonal == (1, 6)
    snf = smith_normal_form(IntMatrix.zeros(2, 2))
    assert snf.diagonal == (0, 0)
    assert snf.U == IntMatrix.identity(2)
    assert snf.V == IntMatrix.identity(2)


def test_snf_c3_laplacian():
    # Jac(C3) = Z/3: three spanning trees
    assert smith_normal_form(C3_LAPLACIAN).diagonal == (1, 3, 0)


def test_snf_random_matrices():
    rng = random.Random(424242)
    for _ in range(100):
        r = rng.randint(1, 6)
        c = rng.randint(1, 6)
        m = IntMatrix.from_rows([[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)])
        snf = smith_normal_form(m)
        assert snf.U @ m @ snf.V == snf.diagonal_matrix(r, c)
        assert int_det(snf.U) in (1, -1)
        assert int_det(snf.V) in (1, -1)
        diag = snf.diagonal
        assert all(d >= 0 for d in diag)
        for a, b in zip(diag, diag[1:]):
            assert b % a == 0 if a else b == 0


def test_lattice_contains_examples():
    assert not lattice_contains(C3_LAPLACIAN, (1, -1, 0))
    assert lattice_contains(C3_LAPLACIAN, (3, -3, 0))
    assert lattice_contains(C3_LAPLACIAN, (0, 0, 0))


def test_lattice_contains_dimension_mismatch():
    try:
        lattice_contains(C3_LAPLACIAN, (1, 2))
    except ValueError:
        pass
    else:
        raise AssertionError("expected a dimension error")


def test_int_det_examples():
    assert int_det(IntMatrix.identity(3)) == 1
    assert int_det(IntMatrix.from_rows([[3, -1], [-1, 3]])) == 8
    reduced = C3_LAPLACIAN.delete_row_col(0, 0)
    assert int_det(reduced) == 3


def test_int_det_rejects_non_square():
    try:
        int_det(IntMatrix.zeros(2, 3))
    except ValueError:
        pass
    else:
        raise AssertionError("expected an error")


def test_int_det_matches_cofactor_expansion():
    def cofactor_det(m: IntMatrix) -> int:
        if m.rows == 0:
            return 1
        if m.rows == 1:
            return m.data[0][0]
        total = 0
        for j in range(m.cols):
            c = m.data[0][j]
            if c:
                minor = cofactor_det(m.delete_row_col(0, j))
                total += c * minor if j % 2 == 0 else -c * minor
        return total

    rng = random.Random(5150)
    for _ in range(60):
        n = rng.randint(1, 5)
        m = IntMatrix.from_rows([[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)])
        assert int_det(m) == cofactor_det(m)


def test_adjugate_times_matrix_is_det_times_identity():
    rng = random.Random(99)
    for _ in range(40):
        n = rng.randint(1, 5)
        m = IntMatrix.from_rows([[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)])
        d = int_det(m)
        assert m @ adjugate(m) == IntMatrix.identity(n).scale(d)


def test_kernel_basis_spans_kernel():
    rng = random.Random(7)
    for _ in range(40):
        r = rng.randint(1, 5)
        c = rng.randint(1, 5)
        m = IntMatrix.from_rows([[rng.randint(-4, 4) for _ in range(c)] for _ in range(r)])
        basis = kernel_basis(m)
        for vec in basis:
            assert m.mat_vec(vec) == (0,) * r
        # rank-nullity against a Smith form rank count
        rank = sum(1 for d in smith_normal_form(m).diagonal if d != 0)
        assert len(basis) == c - rank


def test_snf_membership_matches_bruteforce_small():
    # exhaustive double-check of column-span membership on a tiny lattice
    m = IntMatrix.from_rows([[2, 0], [0, 4]])
    for a in range(-4, 5):
        for b in range(-8, 9):
            expected = a % 2 == 0 and b % 4 == 0
            assert lattice_contains(m, (a, b)) == expected


def test_laplacian_lattice_is_degree_zero():
    q = matrices(cycle_graph(4)).laplacian
    assert not lattice_contains(q, (1, 0, 0, 0))
    assert lattice_contains(q, tuple(q.data[0][j] for j in range(4)))
