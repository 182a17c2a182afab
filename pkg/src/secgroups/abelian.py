"""Finitely generated abelian groups given by integer presentations.

A `FinAbGroup` is Z^n modulo the row lattice of a relation matrix.  Nothing
is ever reduced to a "nicer" presentation behind the caller's back: elements
keep their coefficient vectors, and equality, membership and isomorphism
questions are answered through Smith normal form.

`AbMap` is a homomorphism given by its matrix on generators (columns are
images).  Construction checks well-definedness: every source relation must
land in the target relation lattice.  Kernels and cokernels come back as
new groups together with the inclusion / projection map.

The quadratic functors live here too: tensor square with its swap
involution, the reduced tensor square (cokernel of 1 + swap), the quadratic
functor built from a presentation (with its natural map into the tensor
square), and the mod-2 variants used at levels three and up.
"""

from __future__ import annotations

import itertools

from . import intlinalg as la


class FinAbGroup:
    """Z^ngens modulo the row lattice of `relations`."""

    def __init__(self, ngens: int, relations=()):
        self.ngens = ngens
        rels = []
        for r in relations:
            r = list(r)
            if len(r) != ngens:
                raise ValueError("relation length %d != ngens %d" % (len(r), ngens))
            rels.append(r)
        self.relations = rels
        _, d, _, _, _ = la.smith_normal_form(rels, ngens)
        diag = la.diagonal(d, ngens)
        rank = sum(1 for x in diag if x)
        self.free_rank = ngens - rank
        self.invariant_factors = tuple(x for x in diag if x > 1)

    # -- structure ---------------------------------------------------------

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    def order(self):
        """Group order, or None when infinite."""
        if self.free_rank:
            return None
        n = 1
        for f in self.invariant_factors:
            n *= f
        return n

    def is_isomorphic_to(self, other: "FinAbGroup") -> bool:
        return (self.free_rank == other.free_rank
                and self.invariant_factors == other.invariant_factors)

    def __repr__(self):
        parts = ["Z/%d" % f for f in self.invariant_factors]
        if self.free_rank:
            parts.append("Z^%d" % self.free_rank)
        return "FinAbGroup(%s)" % (" + ".join(parts) if parts else "0")

    # -- elements ----------------------------------------------------------

    def element(self, coeffs) -> "AbElem":
        return AbElem(self, list(coeffs))

    def zero(self) -> "AbElem":
        return AbElem(self, [0] * self.ngens)

    def basis_element(self, i: int) -> "AbElem":
        v = [0] * self.ngens
        v[i] = 1
        return AbElem(self, v)

    def contains_in_lattice(self, vec) -> bool:
        return la.in_lattice(self.relations, self.ngens, list(vec))

    def elements(self):
        """Iterate over all elements (requires the group to be finite)."""
        if self.free_rank:
            raise ValueError("infinite group")
        rt = la.transpose(self.relations, self.ngens)
        u, d, _, ui, _ = la.smith_normal_form(rt, len(self.relations))
        diag = la.diagonal(d, len(self.relations))
        # in coordinates y = u @ v the relation lattice is diagonal
        mods = []
        for i in range(self.ngens):
            di = diag[i] if i < len(diag) else 0
            mods.append(di)
        assert all(m > 0 for m in mods)
        for ys in itertools.product(*[range(m) for m in mods]):
            yield AbElem(self, la.mat_vec(ui, list(ys)))


class AbElem:
    """An element of a FinAbGroup, kept as a raw coefficient vector."""

    def __init__(self, group: FinAbGroup, vec: list[int]):
        if len(vec) != group.ngens:
            raise ValueError("bad element length")
        self.group = group
        self.vec = list(vec)

    def __add__(self, other):
        assert self.group is other.group or self.group.relations == other.group.relations
        return AbElem(self.group, la.vec_add(self.vec, other.vec))

    def __sub__(self, other):
        return AbElem(self.group, la.vec_sub(self.vec, other.vec))

    def __neg__(self):
        return AbElem(self.group, [-x for x in self.vec])

    def __rmul__(self, k: int):
        return AbElem(self.group, la.vec_scale(k, self.vec))

    def is_zero(self) -> bool:
        return self.group.contains_in_lattice(self.vec)

    def __eq__(self, other):
        if not isinstance(other, AbElem):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        raise TypeError("AbElem is unhashable; equality is modulo relations")

    def __repr__(self):
        return "AbElem(%r)" % (self.vec,)


class AbMap:
    """Homomorphism of FinAbGroups; matrix columns are generator images."""

    def __init__(self, source: FinAbGroup, target: FinAbGroup, matrix,
                 check: bool = True):
        self.source = source
        self.target = target
        self.matrix = [list(r) for r in matrix]
        if len(self.matrix) != target.ngens or any(
                len(r) != source.ngens for r in self.matrix):
            raise ValueError("matrix shape must be target.ngens x source.ngens")
        if check:
            for rel in source.relations:
                img = la.mat_vec(self.matrix, rel)
                if not target.contains_in_lattice(img):
                    raise ValueError("map not well defined: relation %r" % (rel,))

    # -- evaluation and algebra --------------------------------------------

    def __call__(self, x) -> AbElem:
        vec = x.vec if isinstance(x, AbElem) else list(x)
        return AbElem(self.target, la.mat_vec(self.matrix, vec))

    def compose(self, other: "AbMap") -> "AbMap":
        """self after other."""
        return AbMap(other.source, self.target,
                     la.mat_mul(self.matrix, other.matrix), check=False)

    def __add__(self, other: "AbMap") -> "AbMap":
        m = [la.vec_add(a, b) for a, b in zip(self.matrix, other.matrix)]
        return AbMap(self.source, self.target, m, check=False)

    def __sub__(self, other: "AbMap") -> "AbMap":
        m = [la.vec_sub(a, b) for a, b in zip(self.matrix, other.matrix)]
        return AbMap(self.source, self.target, m, check=False)

    def __eq__(self, other):
        if not isinstance(other, AbMap):
            return NotImplemented
        for j in range(self.source.ngens):
            col = [self.matrix[i][j] - other.matrix[i][j]
                   for i in range(self.target.ngens)]
            if not self.target.contains_in_lattice(col):
                return False
        return True

    def __hash__(self):
        raise TypeError("AbMap is unhashable")

    def is_zero(self) -> bool:
        return self == zero_map(self.source, self.target)

    # -- kernel / cokernel ---------------------------------------------------

    def kernel(self):
        """(K, incl) with incl: K -> source an injection onto the kernel."""
        src, tgt = self.source, self.target
        pre = la.preimage_lattice(self.matrix, src.ngens, tgt.relations)
        # pre spans {x : f(x) in relation lattice of target}; contains src rels
        basis = la.row_basis(pre, src.ngens)
        k = len(basis)
        bt = la.transpose(basis, src.ngens)  # src.ngens x k, columns = basis
        rel_rows = []
        for rel in src.relations:
            coeffs = la.solve(bt, k, rel)
            assert coeffs is not None, "source relation escapes kernel lattice"
            rel_rows.append(coeffs)
        kgroup = FinAbGroup(k, rel_rows)
        incl = AbMap(kgroup, src, bt, check=False)
        return kgroup, incl

    def cokernel(self):
        """(C, proj) with proj: target -> C the quotient map."""
        tgt = self.target
        cols = la.transpose(self.matrix, self.source.ngens)
        cgroup = FinAbGroup(tgt.ngens, tgt.relations + cols)
        proj = AbMap(tgt, cgroup, la.identity(tgt.ngens), check=False)
        return cgroup, proj

    def image_lattice(self) -> list[list[int]]:
        cols = la.transpose(self.matrix, self.source.ngens)
        return la.row_basis(cols + self.target.relations, self.target.ngens)

    def is_injective(self) -> bool:
        return self.kernel()[0].is_trivial()

    def is_surjective(self) -> bool:
        return self.cokernel()[0].is_trivial()

    def is_isomorphism(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def preimage(self, y):
        """One x with f(x) == y, or None."""
        vec = y.vec if isinstance(y, AbElem) else list(y)
        sol = la.solve_mod(self.matrix, self.source.ngens, vec,
                           self.target.relations)
        if sol is None:
            return None
        return AbElem(self.source, sol)

    def __repr__(self):
        return "AbMap(%r -> %r, %r)" % (self.source, self.target, self.matrix)


def identity_map(g: FinAbGroup) -> AbMap:
    return AbMap(g, g, la.identity(g.ngens), check=False)


def zero_map(source: FinAbGroup, target: FinAbGroup) -> AbMap:
    return AbMap(source, target, la.zeros(target.ngens, source.ngens), check=False)


def direct_sum(a: FinAbGroup, b: FinAbGroup):
    """(A + B, incl_a, incl_b, proj_a, proj_b)."""
    n = a.ngens + b.ngens
    rels = [r + [0] * b.ngens for r in a.relations]
    rels += [[0] * a.ngens + r for r in b.relations]
    g = FinAbGroup(n, rels)
    ia = la.zeros(n, a.ngens)
    for i in range(a.ngens):
        ia[i][i] = 1
    ib = la.zeros(n, b.ngens)
    for i in range(b.ngens):
        ib[a.ngens + i][i] = 1
    pa = la.zeros(a.ngens, n)
    for i in range(a.ngens):
        pa[i][i] = 1
    pb = la.zeros(b.ngens, n)
    for i in range(b.ngens):
        pb[i][a.ngens + i] = 1
    return (g, AbMap(a, g, ia, check=False), AbMap(b, g, ib, check=False),
            AbMap(g, a, pa, check=False), AbMap(g, b, pb, check=False))


# ---------------------------------------------------------------------------
# tensor square and friends
# ---------------------------------------------------------------------------

class TensorSquare:
    """Tensor square of a presented group, basis (i, j) lexicographic."""

    def __init__(self, base: FinAbGroup):
        n = base.ngens
        self.base = base
        rels = []
        for r in base.relations:
            for j in range(n):
                ej = [0] * n
                ej[j] = 1
                rels.append(la.kron(r, ej))
                rels.append(la.kron(ej, r))
        self.group = FinAbGroup(n * n, rels)
        swap = la.zeros(n * n, n * n)
        for i in range(n):
            for j in range(n):
                swap[j * n + i][i * n + j] = 1
        self.swap = AbMap(self.group, self.group, swap, check=False)

    def pure(self, u, v) -> AbElem:
        """u (x) v for coefficient vectors or AbElems of the base."""
        uv = u.vec if isinstance(u, AbElem) else list(u)
        vv = v.vec if isinstance(v, AbElem) else list(v)
        return self.group.element(la.kron(uv, vv))

    def index(self, i: int, j: int) -> int:
        return i * self.base.ngens + j


def tensor_square(a: FinAbGroup) -> TensorSquare:
    return TensorSquare(a)


def tensor_square_map(f: AbMap, ts_src: TensorSquare, ts_tgt: TensorSquare) -> AbMap:
    n_s, n_t = f.source.ngens, f.target.ngens
    m = la.kron_matrix(f.matrix, n_t, n_s, f.matrix, n_t, n_s)
    return AbMap(ts_src.group, ts_tgt.group, m, check=False)


def reduced_tensor_square(a: FinAbGroup):
    """(group, sigma: tensor square -> reduced, ts) killing x(x)y + y(x)x."""
    ts = tensor_square(a)
    one_plus_t = identity_map(ts.group) + ts.swap
    grp, proj = one_plus_t.cokernel()
    return grp, proj, ts


# ---------------------------------------------------------------------------
# quadratic functor from a presentation
# ---------------------------------------------------------------------------

def _gamma_basis_size(k: int) -> int:
    return k * (k + 1) // 2


def _gamma_pair_index(k: int):
    """Index map for the free quadratic group on k generators.

    Basis: gamma(e_0)..gamma(e_{k-1}) then cross terms [e_i, e_j] for i < j.
    """
    idx = {}
    pos = k
    for i in range(k):
        for j in range(i + 1, k):
            idx[(i, j)] = pos
            pos += 1
    return idx


def _gamma_expand(vec: list[int], k: int, idx) -> list[int]:
    """Coefficients of gamma(sum a_i e_i) in the free quadratic basis."""
    out = [0] * _gamma_basis_size(k)
    for i in range(k):
        out[i] = vec[i] * vec[i]
    for (i, j), p in idx.items():
        out[p] = vec[i] * vec[j]
    return out


def _gamma_cross(u: list[int], v: list[int], k: int, idx) -> list[int]:
    """Coefficients of the bilinear cross term [u, v]."""
    out = [0] * _gamma_basis_size(k)
    for i in range(k):
        out[i] = 2 * u[i] * v[i]
    for (i, j), p in idx.items():
        out[p] = u[i] * v[j] + u[j] * v[i]
    return out


class GammaGroup:
    """Whitehead's quadratic functor computed from a presentation."""

    def __init__(self, base: FinAbGroup):
        k = base.ngens
        idx = _gamma_pair_index(k)
        rels = []
        for r in base.relations:
            rels.append(_gamma_expand(r, k, idx))
            for j in range(k):
                ej = [0] * k
                ej[j] = 1
                rels.append(_gamma_cross(r, ej, k, idx))
        self.base = base
        self.k = k
        self.pair_index = idx
        self.group = FinAbGroup(_gamma_basis_size(k), rels)

    def gamma_of(self, v) -> AbElem:
        vec = v.vec if isinstance(v, AbElem) else list(v)
        return self.group.element(_gamma_expand(vec, self.k, self.pair_index))

    def cross_of(self, u, v) -> AbElem:
        uv = u.vec if isinstance(u, AbElem) else list(u)
        vv = v.vec if isinstance(v, AbElem) else list(v)
        return self.group.element(_gamma_cross(uv, vv, self.k, self.pair_index))

    def into_tensor_square(self, ts: TensorSquare) -> AbMap:
        """Natural injection-candidate gamma(x) -> x (x) x."""
        k = self.k
        m = la.zeros(k * k, self.group.ngens)
        for i in range(k):
            m[ts.index(i, i)][i] = 1
        for (i, j), p in self.pair_index.items():
            m[ts.index(i, j)][p] = 1
            m[ts.index(j, i)][p] = 1
        return AbMap(self.group, ts.group, m)


def gamma(a: FinAbGroup) -> GammaGroup:
    return GammaGroup(a)


def gamma_map(f: AbMap, g_src: GammaGroup, g_tgt: GammaGroup) -> AbMap:
    """Functoriality of the quadratic functor on presented groups."""
    cols = []
    for i in range(g_src.k):
        img = [f.matrix[r][i] for r in range(g_tgt.k)]
        cols.append(_gamma_expand(img, g_tgt.k, g_tgt.pair_index))
    for (i, j), _ in sorted(g_src.pair_index.items(), key=lambda t: t[1]):
        u = [f.matrix[r][i] for r in range(g_tgt.k)]
        v = [f.matrix[r][j] for r in range(g_tgt.k)]
        cols.append(_gamma_cross(u, v, g_tgt.k, g_tgt.pair_index))
    m = la.transpose(cols, g_tgt.group.ngens)
    return AbMap(g_src.group, g_tgt.group, m)


# ---------------------------------------------------------------------------
# mod-2 variants used at level >= 3
# ---------------------------------------------------------------------------

def tensor_z2(a: FinAbGroup):
    """(A tensor Z/2, natural projection from A)."""
    rels = list(a.relations)
    for i in range(a.ngens):
        r = [0] * a.ngens
        r[i] = 2
        rels.append(r)
    g = FinAbGroup(a.ngens, rels)
    return g, AbMap(a, g, la.identity(a.ngens), check=False)
