"""Finitely generated abelian groups, maps and the quadratic functors."""

import random

import pytest

from secgroups import intlinalg as la
from secgroups.abelian import (AbMap, FinAbGroup, direct_sum, gamma,
                               gamma_map, identity_map, reduced_tensor_square,
                               tensor_square, tensor_square_map, tensor_z2,
                               zero_map)


def test_invariant_factors_and_rank():
    g = FinAbGroup(3, [[2, 0, 0], [0, 12, 0]])
    assert g.free_rank == 1
    assert list(g.invariant_factors) == [2, 12]
    assert g.is_isomorphic_to(FinAbGroup(3, [[0, 12, 0], [2, 0, 0]]))
    assert not g.is_isomorphic_to(FinAbGroup(3, [[3, 0, 0], [0, 8, 0]]))


def test_element_equality_mod_relations():
    g = FinAbGroup(2, [[3, 0]])
    assert g.element([4, 1]) == g.element([1, 1])
    assert g.element([1, 1]) != g.element([1, 2])


def test_elements_enumeration():
    g = FinAbGroup(2, [[2, 0], [0, 3]])
    els = list(g.elements())
    assert len(els) == 6
    assert g.order() == 6


def test_map_validation_rejects_bad_matrix():
    src = FinAbGroup(1, [[2]])
    tgt = FinAbGroup(1, [[3]])
    with pytest.raises(ValueError):
        AbMap(src, tgt, [[1]])
    ok = AbMap(src, tgt, [[0]])
    assert ok(src.element([1])) == tgt.zero()


def test_kernel_and_cokernel():
    # multiplication by 2 on Z/4: kernel and cokernel are both Z/2
    g = FinAbGroup(1, [[4]])
    f = AbMap(g, g, [[2]])
    ker, inc = f.kernel()
    assert ker.is_isomorphic_to(FinAbGroup(1, [[2]]))
    assert f(inc(ker.element([1]))) == g.zero()
    cok, proj = f.cokernel()
    assert cok.is_isomorphic_to(FinAbGroup(1, [[2]]))
    assert proj(f(g.element([1]))) == cok.zero()


def test_direct_sum_projections():
    a = FinAbGroup(1, [[2]])
    b = FinAbGroup(1)
    g, ia, ib, pa, pb = direct_sum(a, b)
    x = a.element([1])
    assert pa(ia(x)) == x
    assert pb(ia(x)) == b.zero()


def test_tensor_square_swap_is_involution():
    a = FinAbGroup(2, [[2, 0]])
    ts = tensor_square(a)
    assert ts.swap.compose(ts.swap) == identity_map(ts.group)


def test_tensor_square_functorial():
    a, b = FinAbGroup(2), FinAbGroup(2)
    f = AbMap(a, b, [[1, 1], [0, 1]])
    tf = tensor_square_map(f, tensor_square(a), tensor_square(b))
    rng = random.Random(0)
    ta = tensor_square(a)
    for _ in range(20):
        u = [rng.randint(-3, 3) for _ in range(2)]
        v = [rng.randint(-3, 3) for _ in range(2)]
        lhs = tf(ta.pure(u, v))
        rhs = tensor_square(b).pure(la.mat_vec(f.matrix, u),
                                    la.mat_vec(f.matrix, v))
        assert lhs == rhs


@pytest.mark.parametrize("n,expected", [
    (2, [[4]]),     # cyclic of even order doubles
    (3, [[3]]),     # odd order is unchanged
    (5, [[5]]),
    (6, [[12]]),
])
def test_gamma_of_cyclic_groups(n, expected):
    g = gamma(FinAbGroup(1, [[n]]))
    assert g.group.is_isomorphic_to(FinAbGroup(1, expected))


def test_gamma_of_free_group():
    # rank k free group gives rank k(k+1)/2
    g = gamma(FinAbGroup(3))
    assert g.group.is_isomorphic_to(FinAbGroup(6))


def test_gamma_quadratic_identity():
    """gamma(a + b) - gamma(a) - gamma(b) equals the cross term."""
    a = FinAbGroup(2, [[4, 0]])
    gm = gamma(a)
    rng = random.Random(1)
    for _ in range(25):
        u = [rng.randint(-3, 3) for _ in range(2)]
        v = [rng.randint(-3, 3) for _ in range(2)]
        lhs = gm.gamma_of(la.vec_add(u, v)) - gm.gamma_of(u) - gm.gamma_of(v)
        assert lhs == gm.cross_of(u, v)


def test_gamma_map_functoriality():
    a = FinAbGroup(2)
    b = FinAbGroup(2, [[2, 0]])
    f = AbMap(a, b, [[1, 2], [0, 1]])
    gf = gamma_map(f, gamma(a), gamma(b))
    rng = random.Random(2)
    for _ in range(25):
        u = [rng.randint(-3, 3) for _ in range(2)]
        assert gf(gamma(a).gamma_of(u)) == gamma(b).gamma_of(
            la.mat_vec(f.matrix, u))


def test_reduced_tensor_square_kills_symmetry():
    a = FinAbGroup(2)
    grp, proj, ts = reduced_tensor_square(a)
    x = ts.pure([1, 0], [0, 1])
    y = ts.pure([0, 1], [1, 0])
    assert proj(x + y) == grp.zero()
    # exterior square Z plus 2-torsion coming from the diagonal classes
    assert grp.is_isomorphic_to(FinAbGroup(3, [[2, 0, 0], [0, 2, 0]]))


def test_tensor_z2():
    g, p = tensor_z2(FinAbGroup(2, [[3, 0]]))
    # the 3-torsion part dies, the free part becomes 2-torsion
    assert g.is_isomorphic_to(FinAbGroup(1, [[2]]))


def test_zero_and_identity_maps_compose():
    a = FinAbGroup(2, [[2, 0]])
    z = zero_map(a, a)
    i = identity_map(a)
    assert i.compose(z) == z
    assert z.compose(i) == z
