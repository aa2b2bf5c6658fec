"""Dense exact linear algebra over an exact field.

Matrices are lists of row lists.  Row vectors act on the left: a module
element x at the source vertex maps to x @ mat at the target vertex, so
kernels of module maps are row nullspaces.
"""

from __future__ import annotations

from .fields import Field


def zeros(rows: int, cols: int, field: Field):
    z = field.zero
    return [[z] * cols for _ in range(rows)]


def identity(n: int, field: Field):
    m = zeros(n, n, field)
    for i in range(n):
        m[i][i] = field.one
    return m


def mat_mul(a, b, field: Field, cols: int | None = None):
    """a @ b; pass cols when b may have zero rows (shape (0, cols))."""
    if not a:
        return []
    n, k = len(a), len(a[0])
    if cols is None:
        cols = len(b[0]) if b else 0
    if k == 0 or not b:
        return zeros(n, cols, field)
    out = zeros(n, cols, field)
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            c = ai[t]
            if c == field.zero:
                continue
            bt = b[t]
            for j in range(cols):
                if bt[j] != field.zero:
                    oi[j] = field.add(oi[j], field.mul(c, bt[j]))
    return out


def mat_add(a, b, field: Field):
    return [[field.add(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, c, field: Field):
    return [[field.mul(c, x) for x in row] for row in a]


def transpose(a):
    if not a:
        return []
    return [list(col) for col in zip(*a)]


def is_zero_matrix(a, field: Field) -> bool:
    return all(x == field.zero for row in a for x in row)


def row_vec_mul(v, a, field: Field, cols: int | None = None):
    """v @ a; pass cols when a may have zero rows (shape (0, cols))."""
    if cols is None:
        cols = len(a[0]) if a else 0
    out = [field.zero] * cols
    for t, c in enumerate(v):
        if c == field.zero:
            continue
        at = a[t]
        for j in range(cols):
            if at[j] != field.zero:
                out[j] = field.add(out[j], field.mul(c, at[j]))
    return out


def rref(a, field: Field):
    """Reduced row echelon form. Returns (rows, pivot column indices)."""
    m = [list(row) for row in a]
    n_rows = len(m)
    n_cols = len(m[0]) if n_rows else 0
    pivots = []
    r = 0
    for c in range(n_cols):
        pivot_row = None
        for i in range(r, n_rows):
            if m[i][c] != field.zero:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = field.inv(m[r][c])
        m[r] = [field.mul(inv, x) for x in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c] != field.zero:
                f = m[i][c]
                m[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return m[:r], pivots


def rank(a, field: Field) -> int:
    return len(rref(a, field)[0])


def row_nullspace(a, field: Field):
    """Basis of {x : x @ a == 0} as row vectors of length len(a)."""
    n = len(a)
    if n == 0:
        return []
    reduced, pivots = rref(transpose(a), field)
    pivot_set = set(pivots)
    free = [j for j in range(n) if j not in pivot_set]
    basis = []
    for j in free:
        v = [field.zero] * n
        v[j] = field.one
        for i, p in enumerate(pivots):
            v[p] = field.neg(reduced[i][j])
        basis.append(v)
    return basis


def solve_row(v, a, field: Field):
    """Solve x @ a == v for a row vector x, or return None."""
    n = len(a)
    cols = len(a[0]) if a else len(v)
    aug = transpose(a) if a else [[] for _ in range(cols)]
    for i in range(cols):
        aug[i] = list(aug[i]) + [v[i]]
    reduced, pivots = rref(aug, field)
    x = [field.zero] * n
    for i, p in enumerate(pivots):
        if p == n:
            return None
        x[p] = reduced[i][n]
    return x


def det(a, field: Field):
    n = len(a)
    m = [list(row) for row in a]
    result = field.one
    for c in range(n):
        pivot_row = None
        for i in range(c, n):
            if m[i][c] != field.zero:
                pivot_row = i
                break
        if pivot_row is None:
            return field.zero
        if pivot_row != c:
            m[c], m[pivot_row] = m[pivot_row], m[c]
            result = field.neg(result)
        result = field.mul(result, m[c][c])
        inv = field.inv(m[c][c])
        for i in range(c + 1, n):
            if m[i][c] != field.zero:
                f = field.mul(m[i][c], inv)
                m[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(m[i], m[c])]
    return result


def inverse(a, field: Field):
    """Inverse of a square matrix, or None if singular."""
    n = len(a)
    if n == 0:
        return []
    aug = [list(row) + [field.one if i == j else field.zero for j in range(n)]
           for i, row in enumerate(a)]
    reduced, pivots = rref(aug, field)
    if pivots[:n] != list(range(n)) or len(reduced) < n:
        return None
    return [row[n:] for row in reduced]


def is_invertible(a, field: Field) -> bool:
    n = len(a)
    if n == 0:
        return True
    if len(a[0]) != n:
        return False
    return rank(a, field) == n


def sparse_nullspace(equations, n_vars: int, field: Field):
    """Nullspace basis of a sparse homogeneous system.

    Equations are {var index: coeff} dicts; sparse Gauss-Jordan keeps the
    pivot rows fully reduced, so free columns read off directly.  Returns
    dense solution vectors in free-variable order.
    """
    f = field
    pivots = {}        # pivot var -> normalized row dict
    containing = {}    # var -> set of pivot vars whose rows touch it

    def subtract(row, coeff, other):
        for v, c in other.items():
            s = f.sub(row.get(v, f.zero), f.mul(coeff, c))
            if s == f.zero:
                row.pop(v, None)
            else:
                row[v] = s

    for eq in equations:
        r = {v: c for v, c in eq.items() if c != f.zero}
        while True:
            hit = None
            for v in r:
                if v in pivots:
                    hit = v if hit is None or v < hit else hit
            if hit is None:
                break
            subtract(r, r[hit], pivots[hit])
        if not r:
            continue
        p = min(r)
        inv = f.inv(r[p])
        r = {v: f.mul(inv, c) for v, c in r.items()}
        for q in list(containing.get(p, ())):
            row_q = pivots[q]
            c = row_q.get(p)
            if c is None:
                continue
            before = set(row_q)
            subtract(row_q, c, r)
            for v in before - set(row_q):
                containing.get(v, set()).discard(q)
            for v in set(row_q) - before:
                containing.setdefault(v, set()).add(q)
        pivots[p] = r
        for v in r:
            containing.setdefault(v, set()).add(p)
    free = [v for v in range(n_vars) if v not in pivots]
    basis = []
    for fv in free:
        vec = [f.zero] * n_vars
        vec[fv] = f.one
        for p, row in pivots.items():
            c = row.get(fv)
            if c is not None:
                vec[p] = f.neg(c)
        basis.append(vec)
    return basis


class RowSpace:
    """A subspace of k^n kept in reduced row echelon form."""

    def __init__(self, rows, n: int, field: Field):
        self.field = field
        self.n = n
        self.rows, self.pivots = rref(rows, field) if rows else ([], [])

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, v):
        """Reduce v modulo the subspace; zero iff v is a member."""
        v = list(v)
        f = self.field
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if c != f.zero:
                v = [f.sub(x, f.mul(c, y)) for x, y in zip(v, row)]
        return v

    def contains(self, v) -> bool:
        return all(x == self.field.zero for x in self.reduce(v))

    def quotient_coords(self, v):
        """Coordinates of v + W in the complement spanned by non-pivot axes."""
        red = self.reduce(v)
        return [red[j] for j in range(self.n) if j not in set(self.pivots)]

    @property
    def quotient_dim(self) -> int:
        return self.n - self.dim


def span_rank(vectors, field: Field) -> int:
    if not vectors:
        return 0
    return rank(vectors, field)


def express_in_basis(v, basis_rows, field: Field):
    """Coefficients c with sum(c_i * basis_rows[i]) == v, or None."""
    if not basis_rows:
        return [] if all(x == field.zero for x in v) else None
    return solve_row(v, basis_rows, field)


class BasisExpander:
    """Repeated coordinate computations against one fixed row basis."""

    def __init__(self, basis_rows, field: Field):
        self.field = field
        self.k = len(basis_rows)
        self.n = len(basis_rows[0]) if basis_rows else 0
        # row-reduce [B | I] so each reduced row remembers its recipe
        aug = [list(row) + [field.one if i == j else field.zero
                            for j in range(self.k)]
               for i, row in enumerate(basis_rows)]
        self.reduced, pivots = rref(aug, field)
        self.pivots = [p for p in pivots if p < self.n]
        if len(self.reduced) != self.k:
            raise ValueError("basis rows are dependent")

    def coords(self, v):
        """Coefficients over the basis, or None if v lies outside the span."""
        f = self.field
        v = list(v)
        out = [f.zero] * self.k
        for row, p in zip(self.reduced, self.pivots):
            c = v[p]
            if c == f.zero:
                continue
            for j in range(self.n):
                v[j] = f.sub(v[j], f.mul(c, row[j]))
            for j in range(self.k):
                out[j] = f.add(out[j], f.mul(c, row[self.n + j]))
        if any(x != f.zero for x in v):
            return None
        return out
