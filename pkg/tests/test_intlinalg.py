"""Exact integer linear algebra, cross-checked against sympy."""

import random

import pytest
from hypothesis import given, settings, strategies as st

import sympy
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from secgroups import intlinalg as la


def _random_matrix(rng, rows, cols, bound=6):
    return [[rng.randint(-bound, bound) for _ in range(cols)]
            for _ in range(rows)]


@pytest.mark.parametrize("seed", range(8))
def test_smith_normal_form_properties(seed):
    rng = random.Random(seed)
    for _ in range(25):
        m, n = rng.randint(0, 4), rng.randint(0, 4)
        a = _random_matrix(rng, m, n)
        u, d, v, ui, vi = la.smith_normal_form(a, n)
        assert la.mat_mul(la.mat_mul(u, a), v) == d
        assert la.mat_mul(u, ui) == la.identity(m)
        assert la.mat_mul(v, vi) == la.identity(n)
        diag = [d[i][i] for i in range(min(m, n))]
        for i in range(m):
            for j in range(n):
                if i != j:
                    assert d[i][j] == 0
        nz = [x for x in diag if x]
        for p, q in zip(nz, nz[1:]):
            assert q % p == 0


@pytest.mark.parametrize("seed", range(4))
def test_invariant_factors_match_sympy(seed):
    rng = random.Random(100 + seed)
    for _ in range(10):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        a = _random_matrix(rng, m, n)
        _, d, _, _, _ = la.smith_normal_form(a, n)
        mine = sorted(abs(d[i][i]) for i in range(min(m, n)) if d[i][i])
        sd = sympy_snf(sympy.Matrix(a) if a else sympy.zeros(m, n))
        theirs = sorted(abs(int(sd[i, i])) for i in range(min(m, n))
                        if sd[i, i])
        assert mine == theirs


def test_solve_and_kernel():
    rng = random.Random(5)
    for _ in range(40):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        a = _random_matrix(rng, m, n)
        x = [rng.randint(-4, 4) for _ in range(n)]
        b = la.mat_vec(a, x)
        sol = la.solve(a, n, b)
        assert sol is not None
        assert la.mat_vec(a, sol) == b
        for k in la.kernel_basis(a, n):
            assert la.mat_vec(a, k) == [0] * m


def test_solve_reports_unsolvable():
    a = [[2, 0], [0, 2]]
    assert la.solve(a, 2, [1, 0]) is None
    assert la.solve_mod(a, 2, [1, 0], [[1, 0]]) is not None


def test_lattice_membership_and_equality():
    rows = [[2, 0], [0, 3]]
    assert la.in_lattice(rows, 2, [4, 3])
    assert not la.in_lattice(rows, 2, [1, 0])
    other = [[2, 3], [0, 3], [2, 0]]
    assert la.lattices_equal(la.row_basis(rows, 2),
                             la.row_basis(other, 2), 2)


def test_preimage_lattice():
    a = [[2, 0], [0, 1]]
    target = [[4, 0], [0, 5]]
    pre = la.preimage_lattice(a, 2, target)
    for row in pre:
        img = la.mat_vec(a, row)
        assert la.in_lattice(target, 2, img)


@given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3),
                min_size=0, max_size=4))
@settings(max_examples=60, deadline=None)
def test_row_basis_is_idempotent(rows):
    b1 = la.row_basis(rows, 3)
    b2 = la.row_basis(b1, 3)
    assert la.lattices_equal(b1, b2, 3)


def test_kron_matches_definition():
    u = [1, -2]
    v = [3, 0, 1]
    assert la.kron(u, v) == [3, 0, 1, -6, 0, -2]


def test_empty_dimensions():
    u, d, v, ui, vi = la.smith_normal_form([], 3)
    assert d == [] and v == la.identity(3)
    assert la.mat_mul([], []) == []
    assert la.row_basis([], 2) == []
