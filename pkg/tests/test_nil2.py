"""Class-2 nilpotent groups: group law, homs, kernels, quotients."""

import random

import pytest

from secgroups.words import PointedSet, Word, commutator_word
from secgroups.abelian import FinAbGroup
from secgroups.nil2 import (
    Class2Group, Class2Hom, QuotientError, Subgroup,
    free_nil, nilize, element_to_word, hom_from_words,
    hom_kernel, hom_cokernel, identity_hom, trivial_hom, product_group,
    boundary_map, level_tensor_square, level_gamma, exact_sequence_report,
)
from secgroups.selftest import oracle_element, _random_word


POINTS = PointedSet(["a", "b", "c"])


def test_free_nil_shape():
    g = free_nil(POINTS)
    assert g.q.free_rank == 3
    assert g.c.free_rank == 3  # one commutator per unordered pair
    assert set(g.wedge_index) == {(0, 1), (0, 2), (1, 2)}


def test_group_axioms_fuzz():
    g = free_nil(POINTS)
    rng = random.Random(0)
    elems = [nilize(_random_word(rng, POINTS.nonbase(), 5), g)
             for _ in range(30)]
    e = g.identity()
    for i in range(0, 30, 3):
        x, y, z = elems[i], elems[i + 1], elems[i + 2]
        assert (x * y) * z == x * (y * z)
        assert x * e == x and e * x == x
        assert (x * x.inverse()).is_identity()
        assert x ** 3 == x * x * x
        assert x ** -2 == (x.inverse()) ** 2


def test_commutators_are_central():
    g = free_nil(POINTS)
    rng = random.Random(1)
    for _ in range(20):
        x = nilize(_random_word(rng, POINTS.nonbase(), 4), g)
        y = nilize(_random_word(rng, POINTS.nonbase(), 4), g)
        c = x.commutator(y)
        assert c.is_central()
        z = nilize(_random_word(rng, POINTS.nonbase(), 4), g)
        assert c * z == z * c


def test_nilize_matches_transposition_oracle():
    g = free_nil(POINTS)
    rng = random.Random(2)
    for _ in range(200):
        w = _random_word(rng, POINTS.nonbase(), 7)
        assert nilize(w, g) == oracle_element(w, g)


def test_element_to_word_is_a_section():
    g = free_nil(POINTS)
    rng = random.Random(3)
    for _ in range(50):
        x = nilize(_random_word(rng, POINTS.nonbase(), 6), g)
        assert nilize(element_to_word(x), g) == x


def test_hom_from_words_respects_multiplication():
    g = free_nil(POINTS)
    words = {"a": Word.parse("b a"), "b": Word.parse("a^-1"),
             "c": Word.parse("c b^2")}
    f = hom_from_words(g, g, words)
    f.validate()
    rng = random.Random(4)
    for _ in range(40):
        x = nilize(_random_word(rng, POINTS.nonbase(), 4), g)
        y = nilize(_random_word(rng, POINTS.nonbase(), 4), g)
        assert f.eval(x * y) == f.eval(x) * f.eval(y)


def test_identity_and_trivial_homs():
    g = free_nil(POINTS)
    i = identity_hom(g)
    t = trivial_hom(g, g)
    x = g.generator(0) * g.generator(1)
    assert i.eval(x) == x
    assert t.eval(x).is_identity()
    assert i.compose(i) == i


def test_kernel_of_collapse_hom():
    # send b -> a, c -> 1; kernel of the q-layer is rank 2
    g = free_nil(POINTS)
    h = free_nil(PointedSet(["a"]))
    f = hom_from_words(g, h, {"a": Word.parse("a"), "b": Word.parse("a"),
                              "c": Word()})
    k, incl = hom_kernel(f)
    for gen in k.generators():
        assert f.eval(incl.eval(gen)).is_identity()
    assert k.abelianization().free_rank >= 2


def test_cokernel_of_doubling():
    g = free_nil(PointedSet(["a"]))
    f = hom_from_words(g, g, {"a": Word.parse("a^2")})
    cok, proj = hom_cokernel(f)
    assert cok.order() == 2
    assert proj.eval(g.generator(0) ** 2).is_identity()


def test_subgroup_quotient():
    g = free_nil(PointedSet(["a", "b"]))
    sub = Subgroup(g, [g.generator(0) ** 2], normal=True)
    q, proj = sub.quotient()
    assert proj.eval(g.generator(0) ** 2).is_identity()
    assert not proj.eval(g.generator(0)).is_identity()


def test_product_group_embeddings_commute():
    g = free_nil(PointedSet(["a"]))
    h = free_nil(PointedSet(["b"]))
    p, embed = product_group(g, h)
    x = embed(g.generator(0), h.identity())
    y = embed(g.identity(), h.generator(0))
    assert x * y == y * x


def test_abelianization_and_underlying():
    g = free_nil(POINTS)
    ab = g.abelianization()
    assert ab.free_rank == 3
    flat = free_nil(PointedSet(["a"]))  # no commutators, so abelian
    assert flat.underlying_ab().free_rank == 1


def test_boundary_map_levels():
    g = free_nil(PointedSet(["a", "b"]))
    for n in (2, 3):
        lts, bnd, from_plain, ts = boundary_map(n, g)
        kb, _ = bnd.kernel()
        if n == 2:
            # kernel of Z^2 tensor-square boundary has rank 3
            assert kb.free_rank == 3 and not kb.invariant_factors
        else:
            # at this level the kernel is the mod-2 reduction (Z/2)^2
            assert kb.free_rank == 0
            assert kb.invariant_factors == (2, 2)


def test_level_gamma_and_tensor_shapes():
    a = FinAbGroup(2)
    for n in (2, 3):
        gam, inc, _ = level_gamma(n, a)
        lts, _, _ = level_tensor_square(n, a)
        kin, _ = inc.kernel()
        assert kin.is_trivial()


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_exact_sequence(n, k):
    rep = exact_sequence_report(n, PointedSet([chr(97 + i) for i in range(k)]))
    assert rep["exact"], rep
