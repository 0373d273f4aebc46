import pytest

from abpair import bilinear as bil
from abpair.bilinear import BilinearMap
from abpair.groups import FinAbGroup, Homomorphism
from abpair.limits import EnumerationLimitError
from abpair.oracle import abelian_groups
from abpair.tensor import canonical_map

Z = FinAbGroup.of


def test_grid_order_constraint():
    with pytest.raises(ValueError, match="not killed"):
        BilinearMap(Z(2), Z(4), Z(4), (((1,),),))
    BilinearMap(Z(2), Z(4), Z(4), (((2,),),))
    with pytest.raises(ValueError):
        BilinearMap(Z(2, 2), Z(4), Z(4), (((2,),),))


def test_eval_examples():
    assert canonical_map(Z(6), Z(4))((1,), (1,)) == (1,)
    f = canonical_map(Z(6, 4), Z(6, 2))
    assert all(f((0, 0), y) == f.target.zero for y in Z(6, 2).elements())
    sq = bil.power(canonical_map(Z(3), Z(3)), 2)
    assert bil.evaluate(sq, (1,), (1,)) == (2,)


def test_compose_with_hom_examples():
    f = canonical_map(Z(6, 4), Z(4))
    assert bil.compose_with_hom(f, Homomorphism.identity(f.target)) == f
    assert bil.compose_with_hom(f, Homomorphism.zero_map(f.target, Z(3))).is_zero()
    can = canonical_map(Z(4), Z(4))
    double = Homomorphism(Z(4), Z(4), ((2,),))
    assert bil.compose_with_hom(can, double) == bil.power(can, 2)
    with pytest.raises(ValueError):
        bil.compose_with_hom(can, Homomorphism.identity(Z(2)))


def test_group_ops_examples():
    f = canonical_map(Z(6, 4), Z(12))
    assert bil.product(f, bil.inverse(f)).is_zero()
    five = canonical_map(Z(5), Z(5))
    assert bil.power(five, 3)((1,), (1,)) == (3,)
    assert bil.power(f, 0).is_zero()
    with pytest.raises(ValueError):
        bil.product(f, canonical_map(Z(6), Z(12)))


def test_group_ops_are_pointwise():
    A, B, C = Z(4, 2), Z(8), Z(4, 2)
    maps = list(bil.enumerate_bilinear(A, B, C))
    f, g = maps[5], maps[11]
    fg = bil.product(f, g)
    for x in A.elements():
        for y in B.elements():
            assert fg(x, y) == C.add(f(x, y), g(x, y))
            assert bil.inverse(f)(x, y) == C.neg(f(x, y))
            assert bil.power(g, 3)(x, y) == C.scale(3, g(x, y))


def test_kernels_examples():
    kp = bil.kernels(canonical_map(Z(4), Z(2)))
    assert kp.left_kernel == ((0,), (2,))
    assert kp.right_kernel == ((0,),)
    five = canonical_map(Z(5), Z(5))
    assert bil.kernels(five) == bil.KernelPair(((0,),), ((0,),))
    A, B = Z(6, 2), Z(4)
    zero = BilinearMap.zero(A, B, Z(3))
    kp = bil.kernels(zero)
    assert len(kp.left_kernel) == A.order and len(kp.right_kernel) == B.order


def test_kernels_are_subgroups():
    for A in abelian_groups(8):
        for B in abelian_groups(8):
            for f in list(bil.enumerate_bilinear(A, B, Z(4)))[:16]:
                kp = bil.kernels(f)
                for G, K in ((A, kp.left_kernel), (B, kp.right_kernel)):
                    Ks = set(K)
                    assert G.zero in Ks
                    assert all(G.add(x, y) in Ks for x in K for y in K)
                    assert G.order % len(K) == 0


def test_nondeg_examples():
    assert bil.is_pairing(canonical_map(Z(5), Z(5)))
    f = canonical_map(Z(4), Z(2))
    assert not bil.is_left_nondegenerate(f)
    assert bil.is_right_nondegenerate(f)
    p, m = 3, 3
    g = canonical_map(FinAbGroup((p,) * m), Z(p))
    assert bil.is_pairing(g)


def test_nondegeneracy_methods():
    v = bil.nondegeneracy(canonical_map(Z(8, 2), Z(8, 2)))
    assert (v.left, v.right, v.pairing) == (True, True, True)
    assert v.method.startswith("fastpath")
    v = bil.nondegeneracy(canonical_map(Z(4), Z(2)))
    assert (v.left, v.right) == (False, True)
    assert "exponent mismatch" in v.method
    v = bil.nondegeneracy(canonical_map(Z(9, 3), Z(9)))
    assert v.method == "enumeration" and v.pairing is True
    v = bil.nondegeneracy(bil.power(canonical_map(Z(6), Z(6)), 2))
    assert v.method == "enumeration" and v.pairing is False


def test_fastpath_examples():
    assert bil.canonical_nondeg_fastpath(Z(8, 2), Z(8, 2)) is True
    assert bil.canonical_nondeg_fastpath(Z(4), Z(2, 2)) is False
    assert bil.canonical_nondeg_fastpath(Z(9, 3), Z(9)) is None
    assert bil.canonical_nondeg_fastpath(Z(7), Z(7)) is True
    assert bil.canonical_nondeg_fastpath(Z(6), Z(2, 3)) is True


def test_fastpath_agrees_with_enumeration():
    groups = abelian_groups(48)
    for A in groups:
        for B in groups:
            fp = bil.canonical_nondeg_fastpath(A, B)
            if fp is None:
                continue
            f = canonical_map(A, B)
            truth = len(bil.left_kernel(f)) == 1 and len(bil.right_kernel(f)) == 1
            assert fp == truth, (A, B)


def test_nondeg_limit_without_fastpath():
    f = bil.power(canonical_map(Z(64, 64), Z(64, 64)), 3)
    with pytest.raises(EnumerationLimitError):
        bil.is_pairing(f, limit=1000)
    # the fast path needs no enumeration at all
    assert bil.is_pairing(canonical_map(Z(64, 64), Z(64, 64)), limit=1)


def test_pairing_exists_examples():
    for A in abelian_groups(30):
        assert bil.pairing_exists(A, A)
    assert not bil.pairing_exists(Z(4), Z(2))
    assert not bil.pairing_exists(Z(6), Z(35))
    assert bil.pairing_exists(Z(9, 3), Z(9))


def test_quotient_pairing_examples():
    qp = bil.quotient_pairing(canonical_map(Z(4), Z(2)))
    assert qp.quotient_left.group == Z(2)
    assert qp.quotient_right.group == Z(2)
    assert qp.induced.grid == (((1,),),)
    assert bil.is_pairing(qp.induced)
    five = canonical_map(Z(5), Z(5))
    qp = bil.quotient_pairing(five)
    assert qp.quotient_left.group == Z(5) and qp.induced == five
    zero = BilinearMap.zero(Z(6), Z(4), Z(2))
    qp = bil.quotient_pairing(zero)
    assert qp.quotient_left.group.is_trivial() and qp.quotient_right.group.is_trivial()
    assert bil.is_pairing(qp.induced)


def test_quotient_pairing_eq1():
    A, B, C = Z(6, 2), Z(4, 2), Z(2, 2)
    for f in bil.enumerate_bilinear(A, B, C):
        qp = bil.quotient_pairing(f)
        for a in A.elements():
            for b in B.elements():
                assert qp(a, b) == f(a, b)
        assert bil.is_pairing(qp.induced)


def test_quotient_structure():
    G = Z(4, 2)
    q = bil.quotient(G, [(0, 0), (2, 0)])
    assert q.group == Z(2, 2)
    q = bil.quotient(G, [(0, 0), (2, 1)])
    assert q.group == Z(4)
    assert q.lift(q.project((3, 1))) == min(x for x in G.elements() if q.project(x) == q.project((3, 1)))
    with pytest.raises(ValueError):
        bil.quotient(G, [(0, 0), (1, 0)])
    with pytest.raises(ValueError):
        bil.quotient(G, [(2, 0)])


def test_direct_product_combine_examples():
    f = canonical_map(Z(5), Z(5))
    zero = BilinearMap.zero(Z(5), Z(5), Z(4))
    g = bil.direct_product_combine([f, zero])
    assert g.target == Z(5, 4)
    assert bil.is_pairing(g)
    z2 = bil.direct_product_combine([zero, BilinearMap.zero(Z(5), Z(5), Z(3))])
    assert not bil.is_pairing(z2)
    single = bil.direct_product_combine([f])
    assert single.grid == f.grid and single.target == f.target
    with pytest.raises(ValueError):
        bil.direct_product_combine([f, canonical_map(Z(5), Z(10))])
    x, y = (2,), (3,)
    assert g(x, y) == f(x, y) + zero(x, y)


def test_count_pairings_cyclic_examples():
    assert bil.count_pairings_cyclic(6) == 2
    assert bil.count_pairings_cyclic(1) == 1
    assert bil.count_pairings_cyclic(7) == 6
    Z7 = Z(7)
    pairings = [f for f in bil.enumerate_bilinear(Z7, Z7, Z7) if bil.is_pairing(f)]
    assert all(bil.cellwise_product(f, g) in pairings for f in pairings for g in pairings)


def test_pairing_group_is_unit_group_of_z7():
    ks = sorted(k for k, _ in bil.cyclic_pairings(7))
    assert ks == [1, 2, 3, 4, 5, 6]
    # 3 generates (Z/7)^*, so the pairing 3*(x)y generates the pairing group
    f3 = dict(bil.cyclic_pairings(7))[3]
    seen, g = set(), f3
    for _ in range(6):
        seen.add(g)
        g = bil.cellwise_product(g, f3)
    assert len(seen) == 6


def test_cellwise_inverse():
    f = dict(bil.cyclic_pairings(9))[2]
    inv = bil.cellwise_inverse(f)
    assert bil.cellwise_product(f, inv) == dict(bil.cyclic_pairings(9))[1]
    with pytest.raises(ValueError):
        bil.cellwise_inverse(bil.power(canonical_map(Z(9), Z(9)), 3))


def test_enumerate_bilinear_examples():
    assert len(list(bil.enumerate_bilinear(Z(6), Z(4), Z(2)))) == 2
    only = list(bil.enumerate_bilinear(Z(2), Z(3), Z(5)))
    assert len(only) == 1 and only[0].is_zero()
    maps = list(bil.enumerate_bilinear(Z(6), Z(6), Z(6)))
    assert len(maps) == 6
    assert sum(bil.is_pairing(f) for f in maps) == 2


def test_enumeration_is_lexicographic():
    maps = list(bil.enumerate_bilinear(Z(4, 2), Z(2), Z(4)))
    keys = [tuple(c for row in f.grid for cell in row for c in cell) for f in maps]
    assert keys == sorted(keys)
    assert len(keys) == bil.count_bilinear(Z(4, 2), Z(2), Z(4))


def test_enumeration_limit():
    with pytest.raises(EnumerationLimitError):
        list(bil.enumerate_bilinear(Z(8, 8), Z(8, 8), Z(8, 8), limit=100))


def test_transpose_and_dict_roundtrip():
    f = canonical_map(Z(6, 4), Z(4, 2))
    t = f.transpose()
    for x in f.left.elements():
        for y in f.right.elements():
            assert t(y, x) == f(x, y)
    assert BilinearMap.from_dict(f.to_dict()) == f
    bad = f.to_dict()
    bad["grid"][0][0] = [5, 0]
    with pytest.raises(ValueError):
        BilinearMap.from_dict(bad)
    with pytest.raises(ValueError):
        BilinearMap.from_dict({"left": [2]})


def test_trivial_groups():
    T = FinAbGroup.trivial()
    f = BilinearMap.zero(T, T, Z(5))
    assert bil.is_pairing(f)
    assert bil.count_bilinear(T, Z(4), Z(4)) == 1
    assert bil.count_bilinear(Z(4), T, Z(4)) == 1
