import numpy as np
import pytest

from halg.algebra import (
    AlgebraAutomorphism, GroupAction, Quiver, automorphism_from_matrix, cyclic_table,
    from_structure_constants, gabriel_quiver, jacobson_radical, matrix_algebra, nilpotency_index,
    path_algebra, permutation_group_table, primitive_idempotents, skew_group_algebra,
)
from halg.corpus import a2, corpus, dual_numbers, swap_action, swap_algebra
from halg.errors import (
    CyclicQuiver, DimensionCapExceeded, NotAGroup, NotAHomomorphism, NotAssociative,
    NotInvertible, NotMultiplicative, NotUnital, OrderNotInvertible, UnitNotFixed,
)
from halg.exactlin import GF, QQ


def matrix_units(F, n):
    labels = [f"E{i}{j}" for i in range(n) for j in range(n)]
    mul = []
    for i in range(n):
        for j in range(n):
            row = []
            for k in range(n):
                for l in range(n):
                    row.append({i * n + l: 1} if j == k else {})
            mul.append(row)
    unit = {i * n + i: 1 for i in range(n)}
    return from_structure_constants(F, labels, mul, unit)


def group_algebra(F, elems, table):
    n = len(elems)
    mul = [[{table[i][j]: 1} for j in range(n)] for i in range(n)]
    e = next(i for i in range(n) if all(table[i][j] == j for j in range(n)))
    return from_structure_constants(F, [str(x) for x in elems], mul, {e: 1})


def test_dual_numbers_valid():
    a = dual_numbers()
    assert a.dim == 2 and a.is_commutative()


def test_wrong_unit_rejected():
    mul = [[{0: 1}, {1: 1}], [{1: 1}, {0: 1}]]  # k[Z/2], with x * x = 1
    with pytest.raises(NotUnital):
        from_structure_constants(QQ, ["1", "x"], mul, {1: 1})


def test_non_associative_rejected():
    # e * e = e, e * x = x, x * e = 0, x * x = e : (x x) x = x but x (x x) = x e = 0
    mul = [[{0: 1}, {1: 1}], [{}, {0: 1}]]
    with pytest.raises((NotAssociative, NotUnital)):
        from_structure_constants(QQ, ["e", "x"], mul, {0: 1})


def test_matrix_units():
    m = matrix_units(QQ, 2)
    assert m.dim == 4 and m.radical.dim == 0


def test_path_algebra_dims():
    assert swap_algebra().dim == 5
    assert a2().dim == 3
    point = path_algebra(QQ, Quiver(["v"], []))
    assert point.dim == 1 and point.radical.dim == 0


def test_cyclic_quiver_rejected():
    with pytest.raises(CyclicQuiver):
        path_algebra(QQ, Quiver(["1", "2"], [("a", "1", "2"), ("b", "2", "1")]))


def test_path_composition_right_to_left():
    a = a2()
    idx = {lab: i for i, lab in enumerate(a.labels)}
    e1, e2, al = (a.basis_vector(idx[x]) for x in ("e_1", "e_2", "alpha"))
    assert (a.mul(al, e1) == al).all()        # first e_1 then alpha
    assert not a.mul(e1, al).any()
    assert (a.mul(e2, al) == al).all()


def test_matrix_algebra():
    k = dual_numbers()
    m1 = matrix_algebra(k, 1)
    assert m1.same_table(k)
    m2 = matrix_algebra(k, 2)
    assert m2.dim == 8 and m2.radical.dim == 4
    mq = matrix_algebra(path_algebra(QQ, Quiver(["v"], [])), 2)
    assert mq.dim == 4 and mq.radical.dim == 0


def test_skew_group_algebra_examples():
    lam = swap_algebra()
    g = swap_action(lam)
    assert g.skew.dim == 10
    k = dual_numbers()
    sign = corpus("dual-numbers").action
    s = sign.skew
    assert s.dim == 4 and s.radical.dim == 2
    trivial = GroupAction(k, ["1"], [[0]], [QQ.identity(2)])
    assert skew_group_algebra(k, trivial).same_table(k)


def test_opposite():
    k = dual_numbers()
    assert k.opposite().same_table(k)
    a = a2()
    assert a.opposite().opposite() is a
    rev = path_algebra(QQ, a.quiver.reversed())
    assert a.opposite().radical.dim == rev.radical.dim == 1
    g1, g2 = gabriel_quiver(a.opposite()), gabriel_quiver(rev)
    assert sorted(g1.arrow_counts.values()) == sorted(g2.arrow_counts.values())


def test_radical_examples():
    assert jacobson_radical(matrix_units(QQ, 2)).dim == 0
    rad = jacobson_radical(dual_numbers())
    assert rad.dim == 1 and QQ.vector([0, 1]) in rad
    lam = swap_algebra()
    rad = lam.radical
    arrows = [lam.labels.index(x) for x in ("alpha", "beta")]
    assert rad.dim == 2 and all(lam.basis_vector(i) in rad for i in arrows)
    assert nilpotency_index(lam) == 2


@pytest.mark.parametrize("p,dim", [(2, 1), (3, 4), (5, 0), (7, 0)])
def test_radical_small_characteristic_symmetric_group(p, dim):
    elems, table = permutation_group_table([(1, 0, 2), (1, 2, 0)])
    assert group_algebra(GF(p), elems, table).radical.dim == dim


def test_radical_small_characteristic_cyclic():
    assert group_algebra(GF(2), list(range(4)), cyclic_table(4)).radical.dim == 3
    assert group_algebra(GF(3), list(range(4)), cyclic_table(4)).radical.dim == 0
    assert dual_numbers(GF(2)).radical.dim == 1


def _check_idempotents(a, idem):
    one = a.unit
    total = sum(idem[1:], idem[0].copy())
    assert (total == one).all()
    for i, e in enumerate(idem):
        assert (a.mul(e, e) == e).all()
        for j, f in enumerate(idem):
            if i != j:
                assert not a.mul(e, f).any()


def test_primitive_idempotents():
    point = path_algebra(QQ, Quiver(["v"], []))
    idem = primitive_idempotents(point)
    assert len(idem) == 1 and (idem[0] == point.unit).all()
    a = a2()
    basis = {tuple(e) for e in primitive_idempotents(a)}
    assert basis == {tuple(a.basis_vector(a.labels.index(x))) for x in ("e_1", "e_2")}
    lg = swap_action(swap_algebra()).skew
    dec = lg.decomposition
    assert len(dec.idempotents) == 4 and dec.n_classes == 3
    _check_idempotents(lg, dec.idempotents)
    _check_idempotents(lg, primitive_idempotents(lg, seed=7))


def test_idempotents_matrix_and_prime_field():
    m = matrix_algebra(a2(), 3)
    _check_idempotents(m, m.decomposition.idempotents)
    assert len(m.decomposition.idempotents) == 6 and m.decomposition.n_classes == 2
    e = corpus("star3-z3")
    s = e.action.skew
    _check_idempotents(s, s.decomposition.idempotents)


def test_gabriel_quiver_examples():
    semi = matrix_units(QQ, 2)
    assert gabriel_quiver(semi).n_arrows == 0
    lam = swap_algebra()
    gq = gabriel_quiver(lam)
    assert gq.arrow_counts == {("1", "2"): 1, ("1", "2'"): 1}
    gq = gabriel_quiver(swap_action(lam).skew)
    assert len(gq.quiver.vertices) == 3 and gq.n_arrows == 2
    targets = {t for (_, t) in gq.arrow_counts}
    sources = {s for (s, _) in gq.arrow_counts}
    assert len(targets) == 1 and len(sources) == 2
    assert sorted(gq.simple_dims.values()) == [1, 1, 2]


def test_automorphisms():
    k = dual_numbers()
    ident = automorphism_from_matrix(k, QQ.identity(2))
    assert (ident(QQ.vector([3, 4])) == QQ.vector([3, 4])).all()
    lam = swap_algebra()
    sw = swap_action(lam).image(1)
    assert sw.compose(sw) == automorphism_from_matrix(lam, QQ.identity(5))
    with pytest.raises((UnitNotFixed, NotMultiplicative)):
        automorphism_from_matrix(k, QQ.matrix([[1, 1], [0, 1]]))    # x -> 1 + x
    with pytest.raises(UnitNotFixed):
        automorphism_from_matrix(k, QQ.matrix([[1, 0], [1, 1]]))    # 1 -> 1 + x
    with pytest.raises(NotInvertible):
        automorphism_from_matrix(k, QQ.matrix([[1, 0], [0, 0]]))


def test_group_action_errors():
    k = dual_numbers()
    neg = QQ.matrix([[1, 0], [0, -1]])
    GroupAction(k, ["1", "s"], cyclic_table(2), [QQ.identity(2), neg])
    with pytest.raises(NotAHomomorphism):
        GroupAction(k, ["1", "s"], cyclic_table(2), [QQ.identity(2), QQ.matrix([[1, 0], [0, 2]])])
    with pytest.raises(NotAGroup):
        GroupAction(k, ["1", "s"], [[0, 1], [1, 1]], [QQ.identity(2), neg])
    k2 = dual_numbers(GF(2))
    with pytest.raises(OrderNotInvertible):
        GroupAction(k2, ["1", "s"], cyclic_table(2), [GF(2).identity(2), GF(2).identity(2)])


def test_dimension_cap(monkeypatch):
    monkeypatch.setenv("HALG_MAX_DIM", "20")
    with pytest.raises(DimensionCapExceeded):
        matrix_algebra(swap_algebra(), 3)


def test_skew_multiplication_rule():
    lam = swap_algebra()
    g = swap_action(lam)
    s = g.skew
    d = lam.dim
    alpha = lam.basis_vector(lam.labels.index("alpha"))
    beta = lam.basis_vector(lam.labels.index("beta"))
    sigma = s.zero()
    sigma[1 * d:2 * d] = lam.unit
    a_id = s.zero()
    a_id[0:d] = alpha
    # sigma * alpha = sigma(alpha) sigma = beta sigma
    expect = s.zero()
    expect[d:2 * d] = beta
    assert (s.mul(sigma, a_id) == expect).all()
    assert np.all(s.mul(sigma, sigma) == s.unit)
