import numpy as np
import pytest

from halg.algebra import matrix_algebra
from halg.corpus import a2, corpus, dual_numbers, swap_action, swap_algebra
from halg.errors import AlgebraMismatch, InvalidModule
from halg.exactlin import QQ, rank
from halg.modules import (
    HomDim, Module, ModuleMap, direct_sum, dual, ext_dim, ext_dim_via_injective, find_retraction,
    find_section, hom_dim, hom_space, indecomposable_injectives, indecomposable_projectives, induce,
    induction_counit, induction_unit, injective_dimension, is_isomorphic, is_projective,
    minimal_resolution, projective_dimension, regular_module, restrict, simples,
    summand_multiplicities, top_multiplicities, twist, verify_iso_certificate, zero_module,
)


@pytest.fixture(scope="module")
def lam():
    return swap_algebra()


@pytest.fixture(scope="module")
def swap(lam):
    return swap_action(lam)


def test_projective_and_injective_dimensions_a2():
    a = a2()
    s1, s2 = simples(a)
    assert projective_dimension(s1) == HomDim.exact(1)
    assert projective_dimension(s2) == HomDim.exact(0)
    assert injective_dimension(s1) == HomDim.exact(0)
    assert injective_dimension(s2) == HomDim.exact(1)
    assert [p.dim for p in indecomposable_projectives(a)] == [2, 1]
    assert [i.dim for i in indecomposable_injectives(a)] == [1, 2]


def test_dual_numbers_self_injective():
    k = dual_numbers()
    (p,) = indecomposable_projectives(k)
    (i,) = indecomposable_injectives(k)
    reg = regular_module(k)
    assert is_isomorphic(p, reg) and is_isomorphic(i, reg)
    (s,) = simples(k)
    assert projective_dimension(s, cutoff=10) == HomDim.at_least(11)
    assert str(projective_dimension(s, cutoff=3)) == "AtLeast(4)"
    assert all(ext_dim(s, s, i) == 1 for i in range(6))


def test_hom_examples():
    a = a2()
    s1, s2 = simples(a)
    p1, p2 = indecomposable_projectives(a)
    assert hom_dim(s1, s2) == 0 and hom_dim(s1, s1) == 1
    assert hom_dim(p1, s1) == 1 and hom_dim(p1, s2) == 0
    assert hom_dim(p2, p1) == 1 and hom_dim(p1, p2) == 0
    for h in hom_space(p2, p1):
        assert ModuleMap(p2, p1, h).is_homomorphism()
    assert hom_dim(regular_module(a), regular_module(a)) == a.dim


def test_ext_examples(lam):
    a = a2()
    s1, s2 = simples(a)
    assert ext_dim(s1, s2, 1) == 1
    assert ext_dim(s2, s1, 1) == 0
    assert ext_dim(s1, s2, 2) == 0
    assert ext_dim(s1, s1, 0) == 1
    S = simples(lam)
    assert [[ext_dim(x, y, 1) for y in S] for x in S] == [[0, 1, 1], [0, 0, 0], [0, 0, 0]]


def test_ext_two_routes_agree(lam, swap):
    gamma = swap.skew
    for alg in (a2(), lam, dual_numbers(), gamma):
        mods = simples(alg) + indecomposable_projectives(alg)
        for m in mods:
            for n in simples(alg):
                for i in range(3):
                    assert ext_dim(m, n, i) == ext_dim_via_injective(m, n, i)


def test_resolution_exactness(lam, swap):
    for alg in (a2(), lam, swap.skew, dual_numbers()):
        for s in simples(alg):
            for direction in ("projective", "injective"):
                res = minimal_resolution(s, direction=direction, cutoff=4)
                assert res.is_exact()
    res = minimal_resolution(simples(lam)[0])
    assert res.terminated and res.multiplicities == [(1, 0, 0), (0, 1, 1)]


def test_pd_matches_top_ext_degree(lam, swap):
    for alg in (a2(), lam, swap.skew):
        S = simples(alg)
        for m in S + indecomposable_injectives(alg):
            pd = projective_dimension(m)
            assert pd.finite
            nonzero = [i for i in range(pd.value + 3) if any(ext_dim(m, s, i) for s in S)]
            assert max(nonzero) == pd.value


def test_twist_swaps_vertices(lam, swap):
    s = simples(lam)
    labels = lam.decomposition.class_labels
    i2, i2p = labels.index("2"), labels.index("2'")
    sigma = swap.image(1)
    assert is_isomorphic(twist(s[i2], sigma), s[i2p])
    assert not is_isomorphic(twist(s[i2], sigma), s[i2])
    assert is_isomorphic(twist(s[0], sigma), s[0])
    m = direct_sum(indecomposable_projectives(lam))
    assert twist(twist(m, sigma), sigma).same_action(m)


def test_iso_certificate(lam):
    p = indecomposable_projectives(lam)[0]
    res = is_isomorphic(p, p)
    assert res.kind == "certified" and verify_iso_certificate(p, p, res.certificate)
    s = simples(lam)
    res = is_isomorphic(s[1], s[2])
    assert not res and res.kind == "invariant-mismatch"


def test_double_dual(lam):
    for m in simples(lam) + indecomposable_projectives(lam) + [regular_module(lam)]:
        assert is_isomorphic(dual(dual(m)), m)
        assert dual(m).algebra is lam.opposite()


def test_restrict_regular(lam, swap):
    gamma = swap.skew
    r = restrict(regular_module(gamma))
    assert is_isomorphic(r, direct_sum([regular_module(lam)] * swap.order))


def test_induction_preserves_projectives(lam, swap):
    gamma = swap.skew
    for p in indecomposable_projectives(lam):
        assert is_projective(induce(p, swap))
    for q in indecomposable_projectives(gamma):
        assert is_projective(restrict(q))
    ind = induce(regular_module(lam), swap)
    assert is_isomorphic(ind, regular_module(gamma))


def test_induction_exact_on_short_exact_sequence(lam, swap):
    # 0 -> rad P1 -> P1 -> S1 -> 0
    p1 = indecomposable_projectives(lam)[0]
    s1 = simples(lam)[0]
    assert p1.dim == 3 and s1.dim == 1
    fp, fs = induce(p1, swap), induce(s1, swap)
    assert fp.dim == 2 * p1.dim and fs.dim == 2 * s1.dim
    homs = hom_space(fp, fs)
    assert any(rank(h, QQ) == fs.dim for h in homs)


def test_unit_and_counit(lam, swap):
    s = simples(lam)[1]
    eta = induction_unit(s, swap)
    hf = restrict(induce(s, swap))
    assert ModuleMap(s, hf, eta).is_homomorphism()
    assert find_retraction(eta, s, hf) is not None
    q = indecomposable_projectives(swap.skew)[0]
    eps = induction_counit(q)
    fh = induce(restrict(q), swap)
    assert ModuleMap(fh, q, eps).is_homomorphism()
    assert find_section(eps, fh, q) is not None


def test_direct_sum_and_multiplicities(lam):
    z = direct_sum([], algebra=lam)
    assert z.dim == 0 and zero_module(lam).dim == 0
    ps = indecomposable_projectives(lam)
    m = direct_sum([ps[0], ps[0], ps[2]])
    assert summand_multiplicities(m, ps) == (2, 0, 1)
    assert top_multiplicities(m) == (2, 0, 1)
    inj = indecomposable_injectives(lam)
    assert summand_multiplicities(direct_sum(inj), inj) == (1, 1, 1)


def test_matrix_extension_modules():
    m2 = matrix_algebra(a2(), 2)
    assert [s.dim for s in simples(m2)] == [2, 2]
    assert sorted(str(injective_dimension(s)) for s in simples(m2)) == ["Finite(0)", "Finite(1)"]


def test_invalid_module_rejected():
    k = dual_numbers()
    bad = [QQ.identity(1), QQ.matrix([[1]])]     # x acting by 1 but x^2 = 0
    with pytest.raises(InvalidModule):
        Module(k, bad)
    with pytest.raises(AlgebraMismatch):
        hom_space(simples(k)[0], simples(a2())[0])


def test_group_stable_twist_of_regular():
    e = corpus("dual-numbers")
    reg = regular_module(e.algebra)
    for s in range(e.action.order):
        assert is_isomorphic(twist(reg, e.action.image(s)), reg)
    assert np.all(twist(reg, e.action.image(0)).action[1] == reg.action[1])


@pytest.mark.parametrize("name", ["swap-quiver-skew", "dual-numbers-gf7-skew", "star3", "m2-a2"])
def test_presented_hom_matches_kronecker(name):
    from halg import modules as M
    a = corpus(name).algebra
    mods = simples(a) + indecomposable_projectives(a) + indecomposable_injectives(a)
    for m in mods:
        for n in mods:
            fast = M._hom_space_presented(m, n)
            assert len(fast) == len(M._hom_space_kron(m, n))
            assert all(ModuleMap(m, n, h).is_homomorphism() for h in fast)
            if fast:
                assert rank(np.column_stack([h.reshape(-1) for h in fast]), a.field) == len(fast)
