"""Dense exact linear algebra over the tower fields.

All matrices here are tiny (tens of rows), so everything is plain
Gauss-Jordan over lists of field elements.  Functions take the field
descriptor explicitly so empty matrices are unambiguous.
"""

from __future__ import annotations


def rref(rows, width, field):
    """Reduced row echelon form.

    Returns (reduced_rows, pivot_columns); zero rows are dropped.
    """
    mat = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for col in range(width):
        pivot = None
        for i in range(r, len(mat)):
            if mat[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = mat[r][col].inverse()
        mat[r] = [v * inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col]:
                c = mat[i][col]
                row_r = mat[r]
                mat[i] = [x - c * y for x, y in zip(mat[i], row_r)]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank(rows, width, field) -> int:
    return len(rref(rows, width, field)[0])


def reduce_vector(rref_rows, pivots, vec):
    """Residual of vec after elimination against an RREF basis."""
    v = list(vec)
    for r, col in enumerate(pivots):
        c = v[col]
        if c:
            row = rref_rows[r]
            v = [x - c * y for x, y in zip(v, row)]
    return v


def in_row_space(rref_rows, pivots, vec) -> bool:
    return not any(reduce_vector(rref_rows, pivots, vec))


def right_kernel(rows, width, field):
    """Basis of {x : M x = 0} for the matrix M given by rows."""
    red, pivots = rref(rows, width, field)
    pivot_set = set(pivots)
    basis = []
    zero, one = field.zero(), field.one()
    for free in range(width):
        if free in pivot_set:
            continue
        v = [zero] * width
        v[free] = one
        for r, col in enumerate(pivots):
            v[col] = -red[r][free]
        basis.append(v)
    return basis


def left_kernel(rows, width, field):
    """Basis of coefficient vectors c with sum_i c_i * rows[i] = 0."""
    transpose = [[row[j] for row in rows] for j in range(width)]
    return right_kernel(transpose, len(rows), field)


def solve(rows, rhs, field):
    """One solution x of M x = rhs, or None if inconsistent.

    Free variables are set to zero, so the solution is deterministic.
    """
    width = len(rows[0]) if rows else 0
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    red, pivots = rref(aug, width + 1, field)
    if width in pivots:
        return None
    x = [field.zero()] * width
    for r, col in enumerate(pivots):
        x[col] = red[r][width]
    return x


def row_space_equal(rows_a, rows_b, width, field) -> bool:
    red_a, _ = rref(rows_a, width, field)
    red_b, _ = rref(rows_b, width, field)
    return red_a == red_b


def intersect_row_spaces(rows_a, rows_b, width, field):
    """RREF basis of rowspace(A) ∩ rowspace(B)."""
    rows_a = [list(r) for r in rows_a]
    rows_b = [list(r) for r in rows_b]
    if not rows_a or not rows_b:
        return []
    stacked = rows_a + rows_b
    vectors = []
    for combo in left_kernel(stacked, width, field):
        u = combo[: len(rows_a)]
        vec = [field.zero()] * width
        for c, row in zip(u, rows_a):
            if c:
                vec = [x + c * y for x, y in zip(vec, row)]
        if any(vec):
            vectors.append(vec)
    red, _ = rref(vectors, width, field)
    return red
