"""Track calculus: homotopies between maps of free class-2 groups, and
2-morphisms between morphisms of crossed / quadratic modules.

A `HopfTrack` at level n is a homotopy between two homomorphisms of free
class-2 groups whose difference is measured by a linear map `alpha` from
the free abelian group on the source letters into the level-n tensor-square
group on the target letters:

    tgt(x) = src(x) * boundary(alpha({x}))    for every generator x.

`alpha` plays the role of a Hopf invariant; the classical Hopf invariant of
a sphere map carries the opposite sign, recorded once in
`CLASSICAL_HOPF_SIGN`.

Track operations: vertical composition adds the measures; whiskering on the
right acts through the abelianization of the precomposed map, whiskering on
the left through the tensor-square of the postcomposed map; suspension out
of level two projects through the symmetrized quotient and is the identity
above.  `tracks_between` decides whether two maps are connected by a track
and returns the kernel of the level boundary, under which the set of tracks
is a torsor generator by generator.

`TwoMorphism` is the corresponding notion for morphisms of crossed (level
one) or quadratic (level two and up) modules, evaluated by the crossed or
quadratic derivation rule respectively.
"""

from __future__ import annotations

from . import intlinalg as la
from .abelian import (AbMap, FinAbGroup, tensor_square, tensor_square_map,
                      zero_map)
from .crossed import CrossMorphism, FreeGroupBase
from .nil2 import Class2Elem, Class2Group, Class2Hom, boundary_map, \
    element_to_word, nilize
from .words import Word

CLASSICAL_HOPF_SIGN = -1


class HopfTrack:
    """A track src => tgt between maps of free class-2 groups, with its
    measure `alpha` into the level tensor-square group on the target letters."""

    def __init__(self, n: int, src: Class2Hom, tgt: Class2Hom,
                 alpha: AbMap, check: bool = True):
        if n < 2:
            raise ValueError("tracks carry a measure at level >= 2 only")
        self.n = n
        self.src = src
        self.tgt = tgt
        self.alpha = alpha
        self.lts, self.bmap, self.from_plain, self.ts = boundary_map(
            n, src.target)
        if check:
            self.validate()

    def validate(self):
        s, t = self.src, self.tgt
        if s.source is not t.source or s.target is not t.target:
            raise ValueError("track endpoints have different ends")
        g = s.source
        if len(self.alpha.matrix) != self.lts.ngens or (
                self.alpha.matrix and len(self.alpha.matrix[0]) != g.q.ngens):
            raise ValueError("measure has the wrong shape")
        for i in range(g.q.ngens):
            x = g.generator(i)
            av = [self.alpha.matrix[r][i] for r in range(self.lts.ngens)]
            defect = s.target.central(la.mat_vec(self.bmap.matrix, av))
            if not t.eval(x) == s.eval(x) * defect:
                raise ValueError(
                    "measure does not witness the difference at generator %d"
                    % i)

    def __eq__(self, other):
        if not isinstance(other, HopfTrack):
            return NotImplemented
        return (self.n == other.n and self.src == other.src
                and self.tgt == other.tgt and self.alpha == other.alpha)

    def __hash__(self):
        raise TypeError("HopfTrack is unhashable")


def hopf(track: HopfTrack) -> AbMap:
    """The measure of a track (negate for the classical sphere-map sign)."""
    return track.alpha


def nil_track(n: int, phi: Class2Hom) -> HopfTrack:
    """The identity track on phi: the unique track with zero measure."""
    lts, _, _, _ = boundary_map(n, phi.target)
    zero = zero_map(FinAbGroup(phi.source.q.ngens), lts)
    return HopfTrack(n, phi, phi, zero)


def tracks_between(n: int, phi: Class2Hom, psi: Class2Hom):
    """(a track phi => psi, or None) and the kernel group of the level
    boundary, which acts simply transitively on the tracks at each source
    generator."""
    lts, bmap, _, _ = boundary_map(n, phi.target)
    kernel_group, _ = bmap.kernel()
    g = phi.source
    cols = []
    for i in range(g.q.ngens):
        x = g.generator(i)
        diff = phi.eval(x).inverse() * psi.eval(x)
        if not phi.target.q.contains_in_lattice(diff.qvec):
            return None, kernel_group
        v = la.solve_mod(bmap.matrix, lts.ngens, diff.cvec,
                         phi.target.c.relations)
        if v is None:
            return None, kernel_group
        cols.append(v)
    alpha = AbMap(FinAbGroup(g.q.ngens), lts,
                  la.transpose(cols, lts.ngens), check=False)
    return HopfTrack(n, phi, psi, alpha), kernel_group


def vcomp(second: HopfTrack, first: HopfTrack) -> HopfTrack:
    """Vertical pasting (phi => psi) then (psi => chi); measures add."""
    if first.n != second.n or not second.src == first.tgt:
        raise ValueError("tracks are not pasteable")
    return HopfTrack(first.n, first.src, second.tgt,
                     first.alpha + second.alpha)


def whisker_right(track: HopfTrack, k: Class2Hom) -> HopfTrack:
    """Precompose a track with a map k into its source letters: the measure
    is pulled back along the abelianization of k."""
    kab = k.q_map()
    alpha = AbMap(FinAbGroup(k.source.q.ngens), track.lts,
                  la.mat_mul(track.alpha.matrix, kab.matrix), check=False)
    return HopfTrack(track.n, track.src.compose(k), track.tgt.compose(k),
                     alpha)


def whisker_left(h: Class2Hom, track: HopfTrack) -> HopfTrack:
    """Postcompose a track with a map h out of its target letters: the
    measure is pushed forward along the tensor square of h."""
    hab = h.q_map()
    tmap = tensor_square_map(hab, tensor_square(h.source.q),
                             tensor_square(h.target.q))
    n = track.n
    # the same matrix drives the symmetrized quotient at levels >= 3
    alpha = AbMap(track.alpha.source, boundary_map(n, h.target)[0],
                  la.mat_mul(tmap.matrix, track.alpha.matrix), check=False)
    return HopfTrack(n, h.compose(track.src), h.compose(track.tgt), alpha)


def suspend_track(track: HopfTrack) -> HopfTrack:
    """Suspension: out of level 2 the measure projects through the
    symmetrized quotient; at level >= 3 it is unchanged."""
    n = track.n
    if n == 2:
        lts3, _, from_plain, _ = boundary_map(3, track.src.target)
        alpha = AbMap(track.alpha.source, lts3,
                      la.mat_mul(from_plain.matrix, track.alpha.matrix),
                      check=False)
        return HopfTrack(3, track.src, track.tgt, alpha)
    return HopfTrack(n + 1, track.src, track.tgt, track.alpha)


# ---------------------------------------------------------------------------
# 2-morphisms between morphisms of crossed / quadratic modules
# ---------------------------------------------------------------------------

def _forced_base_cmap(source: Class2Group, gen_images, target: Class2Group,
                      fallback: AbMap) -> AbMap:
    """Central-layer matrix forced by commutators when the source central
    layer has the wedge basis; otherwise the caller's fallback."""
    if not hasattr(source, "wedge_index"):
        return fallback
    cols = []
    for (i, j), _ in sorted(source.wedge_index.items(), key=lambda t: t[1]):
        cols.append(gen_images[i].commutator(gen_images[j]).cvec)
    return AbMap(source.c, target.c, la.transpose(cols, target.c.ngens),
                 check=False)


class TwoMorphism:
    """A 2-morphism f => g between morphisms x -> y of the same level,
    given by its values on the base generators of x.

    Level one obeys the crossed derivation rule
        alpha(a b) = alpha(a) ^ f0(b) * alpha(b),
    level two and up the quadratic rule
        alpha(a b) = alpha(a) * alpha(b) * omega'({d' alpha(a)} (x) {f0 b}).
    The companion morphism g, with g0 = f0 * (d' alpha) and
    g1 = f1 * (alpha d), is derived and validated on construction.

    The base of x must be a free class-2 group so that elements can be
    rewritten as words for evaluation.
    """

    def __init__(self, f: CrossMorphism, values, check: bool = True):
        self.f = f
        self.x = f.src
        self.y = f.tgt
        self.level = self.x.level
        self.values = list(values)
        base = self._base(self.x)
        if isinstance(base, FreeGroupBase) or not hasattr(base, "wedge_index"):
            raise NotImplementedError(
                "2-morphisms need a free class-2 base for word evaluation")
        if len(self.values) != base.q.ngens:
            raise ValueError("need one value per base generator")
        self.g = self._derive_companion()
        if check:
            self.validate()

    @staticmethod
    def _base(obj):
        return obj.base if obj.level == 1 else obj.n

    # -- evaluation ---------------------------------------------------------

    def _f0(self, word: Word):
        return self.f.f0.eval(nilize(word, self._base(self.x)))

    def _letter_value(self, i: int, exp: int) -> Class2Elem:
        v = self.values[i]
        if exp == 1:
            return v
        base = self._base(self.x)
        letter = Word([(base.gen_names[i], 1)])
        if self.level == 1:
            # from 1 = alpha(e)^{f0(e^-1)} alpha(e^-1)
            return self.y.act(v, self._f0(letter).inverse()).inverse()
        # from 1 = alpha(e) alpha(e^-1) omega'({d' alpha(e)} (x) -{f0 e})
        corr = self.y.omega.pair_elems(self.y.bnd.eval(v), self._f0(letter))
        return v.inverse() * corr

    def eval_word(self, word: Word) -> Class2Elem:
        base = self._base(self.x)
        index = {s: i for i, s in enumerate(base.gen_names)}
        out = self.y.m.identity()
        for sym, e in word.letters:
            step = 1 if e > 0 else -1
            for _ in range(abs(e)):
                letter = Word([(sym, step)])
                val = self._letter_value(index[sym], step)
                if self.level == 1:
                    out = self.y.act(out, self._f0(letter)) * val
                else:
                    corr = self.y.omega.pair_elems(
                        self.y.bnd.eval(out), self._f0(letter))
                    out = out * val * corr
        return out

    def eval(self, elem: Class2Elem) -> Class2Elem:
        return self.eval_word(element_to_word(elem))

    # -- the companion morphism ----------------------------------------------

    def _derive_companion(self) -> CrossMorphism:
        x, y, f = self.x, self.y, self.f
        base_x = self._base(x)
        base_y = self._base(y)
        g0_imgs = []
        for i in range(base_x.q.ngens):
            d_alpha = y.bnd.eval(self.values[i])
            g0_imgs.append(f.f0.eval(base_x.generator(i)) * d_alpha)
        g0 = Class2Hom(base_x, base_y, g0_imgs,
                       _forced_base_cmap(base_x, g0_imgs, base_y, f.f0.cmap))
        g1_imgs = []
        for i in range(x.m.q.ngens):
            mg = x.m.generator(i)
            g1_imgs.append(f.f1.eval(mg) * self.eval(x.bnd.eval(mg)))
        ccols = []
        for j in range(x.m.c.ngens):
            cg = x.m.central_generator(j)
            img = f.f1.eval(cg) * self.eval(x.bnd.eval(cg))
            if any(img.qvec):
                raise ValueError("companion breaks the central layer")
            ccols.append(img.cvec)
        g1 = Class2Hom(x.m, y.m, g1_imgs,
                       AbMap(x.m.c, y.m.c,
                             la.transpose(ccols, y.m.c.ngens), check=False))
        return CrossMorphism(x, y, g1, g0)

    # -- validation -----------------------------------------------------------

    def validate(self):
        x, y = self.x, self.y
        base = self._base(x)
        gens = [base.generator(i) for i in range(base.q.ngens)]
        for a in gens:
            for b in gens:
                lhs = self.eval(a * b)
                if self.level == 1:
                    rhs = y.act(self.eval(a), self.f.f0.eval(b)) * self.eval(b)
                else:
                    corr = y.omega.pair_elems(y.bnd.eval(self.eval(a)),
                                              self.f.f0.eval(b))
                    rhs = self.eval(a) * self.eval(b) * corr
                if not lhs == rhs:
                    raise ValueError(
                        "derivation rule fails on a generator pair")

    # -- operations -------------------------------------------------------------

    def inverse(self) -> "TwoMorphism":
        """The reversed 2-morphism g => f, with inverted values."""
        return TwoMorphism(self.g, [v.inverse() for v in self.values])

    def __eq__(self, other):
        if not isinstance(other, TwoMorphism):
            return NotImplemented
        return (self.f.f0 == other.f.f0 and self.f.f1 == other.f.f1
                and all(a == b for a, b in zip(self.values, other.values)))

    def __hash__(self):
        raise TypeError("TwoMorphism is unhashable")


def vcomp2(second: TwoMorphism, first: TwoMorphism) -> TwoMorphism:
    """Vertical pasting (f => g) then (g => h); values multiply."""
    vals = [a * b for a, b in zip(first.values, second.values)]
    return TwoMorphism(first.f, vals)


def whisker_right2(alpha: TwoMorphism, k: CrossMorphism) -> TwoMorphism:
    """alpha whiskered by k: w -> x on the source side."""
    base_w = TwoMorphism._base(k.src)
    vals = [alpha.eval(k.f0.eval(base_w.generator(i)))
            for i in range(base_w.q.ngens)]
    fk = CrossMorphism(k.src, alpha.y, alpha.f.f1.compose(k.f1),
                       alpha.f.f0.compose(k.f0), check=False)
    return TwoMorphism(fk, vals)


def whisker_left2(h: CrossMorphism, alpha: TwoMorphism) -> TwoMorphism:
    """alpha whiskered by h: y -> z on the target side."""
    vals = [h.f1.eval(v) for v in alpha.values]
    hf = CrossMorphism(alpha.x, h.tgt, h.f1.compose(alpha.f.f1),
                       h.f0.compose(alpha.f.f0), check=False)
    return TwoMorphism(hf, vals)


def interchange_holds(alpha: TwoMorphism, alpha2: TwoMorphism) -> bool:
    """For alpha: f => g on x -> y and alpha2: f' => g' on y -> z, both
    pasting orders of the square must agree:
        (g' alpha) (alpha' f)  ==  (alpha' g) (f' alpha)."""
    left = vcomp2(whisker_left2(alpha2.g, alpha),
                  whisker_right2(alpha2, alpha.f))
    right = vcomp2(whisker_right2(alpha2, alpha.g),
                   whisker_left2(alpha2.f, alpha))
    return left == right
