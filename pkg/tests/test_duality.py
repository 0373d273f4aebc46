import pytest

from abpair import bilinear as bil
from abpair.duality import (
    Character,
    CyclicTarget,
    DivisibilityError,
    PrimeFieldRealization,
    character_eval,
    dual_group,
    duality_pairing,
    find_primitive_root,
    realize_in_prime_field,
)
from abpair.groups import FinAbGroup
from abpair.oracle import factor_lists
from abpair.tensor import canonical_map

Z = FinAbGroup.of


def test_character_eval_examples():
    assert character_eval(Character(Z(4), CyclicTarget(4), (1,)), (3,)) == 3
    chi0 = Character(Z(6, 2), CyclicTarget(6), (0, 0))
    assert all(chi0(x) == 0 for x in Z(6, 2).elements())
    assert character_eval(Character(Z(2, 2), CyclicTarget(2), (1, 1)), (1, 1)) == 0


def test_character_terms_lie_in_order_d_subgroup():
    A, N = Z(2, 3, 6), 12
    for chi in dual_group(A, N).characters():
        for x in A.elements():
            for i, d in enumerate(A.factors):
                e = [0] * A.rank
                e[i] = x[i]
                assert chi(tuple(e)) % (N // d) == 0


def test_character_requires_divisibility():
    with pytest.raises(DivisibilityError):
        Character(Z(4), CyclicTarget(6), (1,))
    with pytest.raises(DivisibilityError):
        dual_group(Z(4, 3), 4)
    with pytest.raises(DivisibilityError):
        duality_pairing(Z(5), 6)
    with pytest.raises(ValueError):
        CyclicTarget(0)


def test_character_is_homomorphism():
    A = Z(4, 6)
    for chi in dual_group(A, 12).characters():
        h = chi.as_homomorphism()
        for x in A.elements():
            assert h(x) == (chi(x),)


def test_dual_group_examples():
    D = dual_group(Z(6), 6)
    assert D.group == Z(6)
    assert len(list(D.characters())) == 6
    assert dual_group(FinAbGroup.trivial()).group.is_trivial()
    A = Z(2, 3)
    chars = list(dual_group(A, 6).characters())
    tables = {tuple(chi(x) for x in A.elements()) for chi in chars}
    assert len(chars) == len(tables) == 6


def test_dual_group_isomorphism_is_additive():
    A = Z(2, 4)
    D = dual_group(A, 8)
    for a in A.elements():
        for b in A.elements():
            s = A.add(a, b)
            for x in A.elements():
                assert D.character(s)(x) == (D.character(a)(x) + D.character(b)(x)) % 8


def test_duality_pairing_examples():
    f = duality_pairing(Z(2, 2), 2)
    assert f((1, 0), (1, 0)) == (1,)
    assert f((1, 0), (0, 1)) == (0,)
    g = duality_pairing(Z(6, 4))
    assert g.target == Z(12)
    assert all(g((0, 0), y) == (0,) for y in Z(6, 4).elements())
    A = Z(5, 5, 5)
    h = duality_pairing(A, 5)
    for x in A.elements():
        for y in [(1, 2, 3), (4, 4, 0)]:
            assert h(x, y) == (sum(a * b for a, b in zip(x, y)) % 5,)


def test_duality_pairing_grid_is_diagonal():
    A = Z(2, 3, 6)
    f = duality_pairing(A, 12)
    for i in range(A.rank):
        for j in range(A.rank):
            assert f.grid[i][j] == ((12 // A.factors[i],) if i == j else (0,))


def test_duality_pairing_symmetric_and_nondegenerate():
    for A in factor_lists(60):
        f = duality_pairing(A)
        assert f.transpose() == f
        assert bil.is_pairing(f)


def test_duality_pairing_with_larger_n():
    for A in factor_lists(24)[:40]:
        N = 2 * A.exponent
        assert bil.is_pairing(duality_pairing(A, N))


def test_separation_of_points_small():
    A = Z(2, 6)
    chars = list(dual_group(A).characters())
    for a in A.elements():
        if any(a):
            assert any(chi(a) != 0 for chi in chars)


def test_primitive_root_examples():
    assert find_primitive_root(7) == 3
    assert find_primitive_root(2) == 1
    assert find_primitive_root(5) == 2
    assert find_primitive_root(23) == 5
    with pytest.raises(ValueError):
        find_primitive_root(9)
    with pytest.raises(ValueError):
        find_primitive_root(101, max_prime=100)


def test_primitive_root_is_smallest():
    for p in [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]:
        g = find_primitive_root(p)
        for c in range(2, g + 1):
            order = next(k for k in range(1, p) if pow(c, k, p) == 1)
            assert (order == p - 1) == (c == g)


def test_prime_field_realization_validation():
    PrimeFieldRealization(7, 3)
    with pytest.raises(ValueError):
        PrimeFieldRealization(7, 2)
    with pytest.raises(ValueError):
        PrimeFieldRealization(8, 3)


def test_realization_examples():
    f = duality_pairing(Z(6), 6)
    real = PrimeFieldRealization(7, 3)
    t = realize_in_prime_field(f, real)
    assert t((1,), (1,)) == 3
    assert all(t((0,), y) == 1 for y in Z(6).elements())
    assert t((2,), (3,)) == 1


def test_realization_requires_divisibility():
    with pytest.raises(DivisibilityError):
        realize_in_prime_field(duality_pairing(Z(4)), PrimeFieldRealization.for_prime(7))


def test_realization_is_multiplicative_and_keeps_kernels():
    cases = [
        (duality_pairing(Z(6), 6), 7),
        (duality_pairing(Z(2, 4), 4), 13),
        (canonical_map(Z(4), Z(12)), 5),
        (bil.power(canonical_map(Z(6), Z(6)), 2), 13),
    ]
    for f, p in cases:
        t = realize_in_prime_field(f, PrimeFieldRealization.for_prime(p))
        A, B = f.left, f.right
        for x in A.elements():
            for x2 in A.elements():
                for y in B.elements():
                    assert t(A.add(x, x2), y) == t(x, y) * t(x2, y) % p
        kp = bil.kernels(f)
        assert tuple(t.left_kernel()) == kp.left_kernel
        assert tuple(t.right_kernel()) == kp.right_kernel
