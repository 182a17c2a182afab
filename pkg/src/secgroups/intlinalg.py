"""Exact integer linear algebra.

Everything here works on lists of lists of Python ints, so coefficients can
grow without bound.  Matrices are row-major; a matrix with zero rows or zero
columns is legal and common (presentations of free groups, trivial groups).
Because the number of rows cannot disambiguate an empty matrix, functions
that need the column count take it explicitly.

The workhorse is `smith_normal_form`, which returns the diagonal form
together with the unimodular transforms and their inverses:

    U * A * V == D      and      Uinv * D * Vinv == A

with D diagonal, each diagonal entry nonnegative and dividing the next.
Lattice membership, integer solving, kernels and preimages are all small
wrappers around it.
"""

from __future__ import annotations


def zeros(rows: int, cols: int) -> list[list[int]]:
    return [[0] * cols for _ in range(rows)]


def identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_copy(a: list[list[int]]) -> list[list[int]]:
    return [row[:] for row in a]


def mat_mul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    if not a:
        return []
    if not b:
        return [[] for _ in a]
    rows, inner, cols = len(a), len(b), len(b[0])
    out = zeros(rows, cols)
    for i in range(rows):
        ai = a[i]
        oi = out[i]
        for k in range(inner):
            aik = ai[k]
            if aik:
                bk = b[k]
                for j in range(cols):
                    oi[j] += aik * bk[j]
    return out


def mat_vec(a: list[list[int]], v: list[int]) -> list[int]:
    return [sum(row[j] * v[j] for j in range(len(v))) for row in a]


def transpose(a: list[list[int]], ncols: int) -> list[list[int]]:
    return [[row[j] for row in a] for j in range(ncols)]


def vec_add(u: list[int], v: list[int]) -> list[int]:
    return [x + y for x, y in zip(u, v)]


def vec_sub(u: list[int], v: list[int]) -> list[int]:
    return [x - y for x, y in zip(u, v)]


def vec_scale(k: int, v: list[int]) -> list[int]:
    return [k * x for x in v]


def kron(u: list[int], v: list[int]) -> list[int]:
    """Kronecker product of coefficient vectors, (i, j) ordered with i major."""
    return [a * b for a in u for b in v]


def kron_matrix(a: list[list[int]], arows: int, acols: int,
                b: list[list[int]], brows: int, bcols: int) -> list[list[int]]:
    """Kronecker product of matrices with explicit shapes."""
    out = zeros(arows * brows, acols * bcols)
    for i in range(arows):
        for j in range(acols):
            aij = a[i][j]
            if aij:
                for k in range(brows):
                    for l in range(bcols):
                        out[i * brows + k][j * bcols + l] = aij * b[k][l]
    return out


def smith_normal_form(a: list[list[int]], ncols: int):
    """Return (U, D, V, Uinv, Vinv) with U*a*V == D in Smith normal form."""
    m = len(a)
    n = ncols
    d = mat_copy(a)
    u, ui = identity(m), identity(m)
    v, vi = identity(n), identity(n)

    def row_swap(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]
        for r in ui:
            r[i], r[j] = r[j], r[i]

    def row_add(i, j, k):  # row i += k * row j
        d[i] = [x + k * y for x, y in zip(d[i], d[j])]
        u[i] = [x + k * y for x, y in zip(u[i], u[j])]
        for r in ui:
            r[j] -= k * r[i]

    def row_neg(i):
        d[i] = [-x for x in d[i]]
        u[i] = [-x for x in u[i]]
        for r in ui:
            r[i] = -r[i]

    def col_swap(i, j):
        for r in d:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]
        vi[i], vi[j] = vi[j], vi[i]

    def col_add(i, j, k):  # col i += k * col j
        for r in d:
            r[i] += k * r[j]
        for r in v:
            r[i] += k * r[j]
        vi[j] = [x - k * y for x, y in zip(vi[j], vi[i])]

    t = 0
    while True:
        # find a pivot in the submatrix d[t:, t:]
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if d[i][j]:
                    if pivot is None or abs(d[i][j]) < abs(d[pivot[0]][pivot[1]]):
                        pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        row_swap(t, pi)
        col_swap(t, pj)
        # clear row and column t
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, m):
                if d[i][t]:
                    q = d[i][t] // d[t][t]
                    row_add(i, t, -q)
                    if d[i][t]:
                        row_swap(t, i)
                        dirty = True
            for j in range(t + 1, n):
                if d[t][j]:
                    q = d[t][j] // d[t][t]
                    col_add(j, t, -q)
                    if d[t][j]:
                        col_swap(t, j)
                        dirty = True
        if d[t][t] < 0:
            row_neg(t)
        # enforce divisibility of the rest of the submatrix by d[t][t]
        offender = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if d[i][j] % d[t][t]:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            row_add(t, offender, 1)
            continue
        t += 1
    return u, d, v, ui, vi


def diagonal(d: list[list[int]], ncols: int) -> list[int]:
    return [d[i][i] for i in range(min(len(d), ncols))]


def solve(a: list[list[int]], ncols: int, b: list[int]):
    """One integer solution x of a @ x == b, or None."""
    m = len(a)
    u, d, v, _, _ = smith_normal_form(a, ncols)
    ub = mat_vec(u, b)
    y = [0] * ncols
    diag = diagonal(d, ncols)
    for i in range(m):
        di = diag[i] if i < len(diag) else 0
        if di:
            if ub[i] % di:
                return None
            y[i] = ub[i] // di
        elif ub[i]:
            return None
    return mat_vec(v, y)


def kernel_basis(a: list[list[int]], ncols: int) -> list[list[int]]:
    """Basis (as column vectors, returned as lists) of {x : a @ x == 0}."""
    _, d, v, _, _ = smith_normal_form(a, ncols)
    diag = diagonal(d, ncols)
    basis = []
    for j in range(ncols):
        dj = diag[j] if j < len(diag) else 0
        if dj == 0:
            basis.append([v[i][j] for i in range(ncols)])
    return basis


def row_basis(rows: list[list[int]], ncols: int) -> list[list[int]]:
    """Independent rows spanning the same lattice (via SNF row reduction)."""
    if not rows:
        return []
    u, d, v, _, vi = smith_normal_form(rows, ncols)
    diag = diagonal(d, ncols)
    out = []
    for i, di in enumerate(diag):
        if di:
            out.append([di * vi[i][j] for j in range(ncols)])
    return out


def in_lattice(rows: list[list[int]], ncols: int, vec: list[int]) -> bool:
    """Is vec an integer combination of the given rows?"""
    if all(x == 0 for x in vec):
        return True
    if not rows:
        return False
    at = transpose(rows, ncols)  # columns are the lattice generators
    return solve(at, len(rows), vec) is not None


def solve_mod(a: list[list[int]], ncols: int, b: list[int],
              lattice_rows: list[list[int]]):
    """One x with a @ x == b modulo the lattice spanned by lattice_rows."""
    nrows = len(b)
    ext = [a[i][:] + [lattice_rows[k][i] for k in range(len(lattice_rows))]
           for i in range(nrows)]
    sol = solve(ext, ncols + len(lattice_rows), b)
    if sol is None:
        return None
    return sol[:ncols]


def preimage_lattice(a: list[list[int]], ncols: int,
                     lattice_rows: list[list[int]]) -> list[list[int]]:
    """Basis of the lattice {x : a @ x lies in the row lattice}."""
    nrows = len(a)
    ext = [a[i][:] + [-lattice_rows[k][i] for k in range(len(lattice_rows))]
           for i in range(nrows)]
    ker = kernel_basis(ext, ncols + len(lattice_rows))
    xs = [k[:ncols] for k in ker]
    return row_basis(xs, ncols)


def lattices_equal(rows_a: list[list[int]], rows_b: list[list[int]],
                   ncols: int) -> bool:
    return (all(in_lattice(rows_b, ncols, r) for r in rows_a)
            and all(in_lattice(rows_a, ncols, r) for r in rows_b))
