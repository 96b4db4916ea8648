import pytest

from graphzeta import (
    GraphFormatError,
    GraphValidationError,
    IntMatrix,
    Multigraph,
    adjugate,
    betti,
    complete_graph,
    cycle_graph,
    graph_from_json,
    graph_to_json,
    jacobian,
    kappa,
    kappa_bruteforce,
    matrices,
    validate,
)

THETA = Multigraph(2, ((0, 1), (0, 1), (0, 1)))


def test_validate_examples():
    assert validate(cycle_graph(3), connected=True, no_degree_one=True) == ()
    path2 = Multigraph(2, ((0, 1),))
    bad = validate(path2, no_degree_one=True)
    assert {v.vertex for v in bad} == {0, 1}
    assert all(v.requirement == "no_degree_one" for v in bad)
    two_triangles = Multigraph(6, ((0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)))
    assert any(v.requirement == "connected" for v in validate(two_triangles))


def test_matrices_examples():
    gm = matrices(cycle_graph(3))
    assert gm.adjacency == IntMatrix.from_rows([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
    assert gm.degree == IntMatrix.identity(3).scale(2)

    loop = Multigraph(1, ((0, 0),))
    gm = matrices(loop)
    assert gm.adjacency.data == ((2,),)
    assert gm.degree.data == ((2,),)
    assert gm.laplacian.data == ((0,),)

    gm = matrices(THETA)
    assert gm.adjacency == IntMatrix.from_rows([[0, 3], [3, 0]])
    assert gm.degree == IntMatrix.identity(2).scale(3)


def test_betti_examples():
    for n in range(3, 8):
        assert betti(cycle_graph(n)) == 1
    assert betti(THETA) == 2
    assert betti(complete_graph(4)) == 3


def test_betti_rejects_disconnected():
    with pytest.raises(GraphValidationError):
        betti(Multigraph(2, ()))


def test_kappa_examples():
    assert kappa(cycle_graph(6)) == 6
    assert kappa(complete_graph(4)) == 16
    assert kappa(THETA) == 3


def test_kappa_bruteforce_examples():
    assert kappa_bruteforce(cycle_graph(3)) == 3
    assert kappa_bruteforce(complete_graph(4)) == 16
    assert kappa_bruteforce(Multigraph(1, ((0, 0), (0, 0)))) == 1


def test_kappa_bruteforce_size_guard():
    big = Multigraph(2, tuple((0, 1) for _ in range(21)))
    with pytest.raises(ValueError):
        kappa_bruteforce(big)


def test_jacobian_examples():
    assert jacobian(cycle_graph(3)).invariant_factors == (1, 3)
    j6 = jacobian(cycle_graph(6))
    assert j6.invariant_factors == (1, 1, 1, 1, 6)
    assert j6.order == 6
    jk4 = jacobian(complete_graph(4))
    assert jk4.order == 16 == kappa(complete_graph(4))


def test_single_vertex_degenerate_case():
    one = Multigraph(1, ())
    assert kappa(one) == 1
    assert jacobian(one).invariant_factors == ()
    assert jacobian(one).order == 1
    assert matrices(one).laplacian.data == ((0,),)


def test_kappa_independent_of_deleted_index():
    from graphzeta.exact.intmatrix import int_det
    for g in (cycle_graph(5), THETA, complete_graph(4)):
        q = matrices(g).laplacian
        dets = {int_det(q.delete_row_col(i, i)) for i in range(g.n)}
        assert dets == {kappa(g)}


def test_corpus_kappa_matches_bruteforce(core_graph_corpus):
    for g in core_graph_corpus:
        assert kappa(g) == kappa_bruteforce(g)


def test_corpus_kirchhoff_adjugate(core_graph_corpus):
    for g in core_graph_corpus:
        q = matrices(g).laplacian
        k = kappa(g)
        expected = IntMatrix.from_rows([[k] * g.n for _ in range(g.n)])
        assert adjugate(q) == expected


def test_corpus_jacobian_order_is_kappa(core_graph_corpus):
    for g in core_graph_corpus:
        assert jacobian(g).order == kappa(g)


def test_corpus_laplacian_row_col_sums_vanish(core_graph_corpus):
    for g in core_graph_corpus:
        q = matrices(g).laplacian
        for row in q.data:
            assert sum(row) == 0
        for j in range(g.n):
            assert sum(q.data[i][j] for i in range(g.n)) == 0


def test_adjacency_symmetric_under_relabeling(core_graph_corpus):
    import random
    rng = random.Random(3)
    for g in core_graph_corpus[:50]:
        perm = list(range(g.n))
        rng.shuffle(perm)
        relabeled = Multigraph(g.n, tuple((perm[t], perm[h]) for t, h in g.edges))
        a = matrices(g).adjacency
        b = matrices(relabeled).adjacency
        assert b == b.transpose()
        for i in range(g.n):
            for j in range(g.n):
                assert b.data[perm[i]][perm[j]] == a.data[i][j]


def test_graph_json_roundtrip():
    g = Multigraph(3, ((0, 1), (1, 2), (2, 0), (1, 1)))
    assert graph_from_json(graph_to_json(g)) == g


@pytest.mark.parametrize("payload", [
    [],
    {"vertices": 0, "edges": []},
    {"vertices": 2},
    {"edges": []},
    {"vertices": 2, "edges": [[0]]},
    {"vertices": 2, "edges": [[0, 2]]},
    {"vertices": 2, "edges": [[0, "1"]]},
    {"vertices": True, "edges": []},
])
def test_graph_json_rejects_malformed(payload):
    with pytest.raises(GraphFormatError):
        graph_from_json(payload)
