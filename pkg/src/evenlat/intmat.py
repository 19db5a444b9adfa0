"""Exact integer and rational matrix kernels.

Everything here works on tuples of tuples of Python ints (or Fractions),
so all arithmetic is arbitrary precision.  Rows of a matrix are vectors;
a lattice given by a matrix is the Z-span of its rows.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Matrix = tuple[tuple[int, ...], ...]


def as_matrix(rows) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(m):
    return tuple(zip(*m)) if m else ()


def mat_mul(a, b):
    """Matrix product; works for int and Fraction entries alike."""
    bt = list(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_vec(m, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in m)


def vec_mat(v, m):
    return tuple(sum(v[i] * m[i][j] for i in range(len(v))) for j in range(len(m[0])))


def is_symmetric(m) -> bool:
    n = len(m)
    return all(len(row) == n for row in m) and all(
        m[i][j] == m[j][i] for i in range(n) for j in range(n)
    )


def det(m: Matrix) -> int:
    """Determinant of an integer matrix by fraction-free (Bareiss) elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def hnf(m: Matrix) -> Matrix:
    """Row-style Hermite normal form; zero rows dropped.

    Pivots are positive, entries above a pivot are reduced into [0, pivot).
    The result is the canonical basis of the row lattice of ``m``.
    """
    rows = [list(r) for r in m]
    nrows = len(rows)
    ncols = len(m[0]) if nrows else 0
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        # gcd-eliminate column c below row r
        while True:
            piv, best = -1, 0
            for i in range(r, nrows):
                v = abs(rows[i][c])
                if v and (piv < 0 or v < best):
                    piv, best = i, v
            if piv < 0:
                break
            rows[r], rows[piv] = rows[piv], rows[r]
            done = True
            for i in range(r + 1, nrows):
                if rows[i][c]:
                    q = rows[i][c] // rows[r][c]
                    rows[i] = [x - q * y for x, y in zip(rows[i], rows[r])]
                    if rows[i][c]:
                        done = False
            if done:
                break
        if rows[r][c] == 0:
            continue
        if rows[r][c] < 0:
            rows[r] = [-x for x in rows[r]]
        for i in range(r):
            q = rows[i][c] // rows[r][c]
            if q:
                rows[i] = [x - q * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return tuple(tuple(row) for row in rows[:r])


def smith_normal_form(m: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """Smith normal form with transforms: returns (d, p, q) with p*m*q = d.

    d is diagonal with nonnegative entries d_1 | d_2 | ..., and p, q are
    unimodular.  Pivoting is on the smallest nonzero entry to keep
    intermediate growth down.
    """
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    a = [list(r) for r in m]
    p = [list(r) for r in identity(nrows)]
    q = [list(r) for r in identity(ncols)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        p[i], p[j] = p[j], p[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in q:
            row[i], row[j] = row[j], row[i]

    def add_row(i, j, c):
        # row_i += c * row_j
        a[i] = [x + c * y for x, y in zip(a[i], a[j])]
        p[i] = [x + c * y for x, y in zip(p[i], p[j])]

    def add_col(i, j, c):
        # col_i += c * col_j
        for row in a:
            row[i] += c * row[j]
        for row in q:
            row[i] += c * row[j]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        p[i] = [-x for x in p[i]]

    t = 0
    while t < min(nrows, ncols):
        # locate smallest nonzero pivot in the trailing block
        piv = None
        best = 0
        for i in range(t, nrows):
            for j in range(t, ncols):
                v = abs(a[i][j])
                if v and (piv is None or v < best):
                    piv, best = (i, j), v
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            # clear column t, then row t; restart if a smaller pivot shows up
            changed = False
            for i in range(t + 1, nrows):
                if a[i][t]:
                    c = a[i][t] // a[t][t]
                    add_row(i, t, -c)
                    if a[i][t]:
                        swap_rows(t, i)
                        changed = True
            for j in range(t + 1, ncols):
                if a[t][j]:
                    c = a[t][j] // a[t][t]
                    add_col(j, t, -c)
                    if a[t][j]:
                        swap_cols(t, j)
                        changed = True
            if not changed:
                break
        if a[t][t] < 0:
            negate_row(t)
        t += 1

    # enforce the divisibility chain d_i | d_{i+1}
    r = t
    for i in range(r):
        for j in range(i + 1, r):
            if a[i][i] and a[j][j] % a[i][i] != 0:
                add_col(i, j, 1)  # puts a[j][j] into column i at row j
                # re-reduce the 2x2 block (i,j) to diagonal via Euclid
                while a[j][i] != 0:
                    c = a[i][i] // a[j][i]
                    add_row(i, j, -c) if abs(a[i][i]) >= abs(a[j][i]) else None
                    if a[i][i] and abs(a[i][i]) < abs(a[j][i]):
                        c = a[j][i] // a[i][i]
                        add_row(j, i, -c)
                    elif a[i][i] == 0:
                        swap_rows(i, j)
                # clear the fill-in at (i, j) and (j, j)-column interactions
                if a[i][j]:
                    add_col(j, i, -(a[i][j] // a[i][i]))
                if a[i][i] < 0:
                    negate_row(i)
                if a[j][j] < 0:
                    negate_row(j)
    # a second pass is enough for the small ranks used here; verify instead
    d = tuple(tuple(row) for row in a)
    pm = tuple(tuple(row) for row in p)
    qm = tuple(tuple(row) for row in q)
    return d, pm, qm


def snf_diagonal(m: Matrix) -> tuple[int, ...]:
    """Elementary divisors of ``m`` (the nonzero diagonal of its SNF)."""
    d, _, _ = smith_normal_form(m)
    out = []
    for i in range(min(len(d), len(d[0]) if d else 0)):
        if d[i][i]:
            out.append(d[i][i])
    return tuple(out)


def mat_rank(m: Matrix) -> int:
    return len(snf_diagonal(m)) if m else 0


def kernel(m: Matrix) -> Matrix:
    """Basis of {x : x*m = 0} as rows of a matrix (primitive sublattice of Z^n)."""
    nrows = len(m)
    if nrows == 0:
        return ()
    d, p, _ = smith_normal_form(m)
    rank = sum(1 for i in range(min(nrows, len(m[0]))) if d[i][i])
    return tuple(p[i] for i in range(rank, nrows))


def frac_inverse(m):
    """Exact inverse of a nonsingular square matrix, entries as Fractions."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for i in range(n):
            if i != col and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return tuple(tuple(row[n:]) for row in a)


def solve_right(a, b):
    """Solve x * a = b for a row vector x (a square nonsingular)."""
    return vec_mat(b, frac_inverse(a))


def lcm(a: int, b: int) -> int:
    return abs(a * b) // gcd(a, b) if a and b else 0


def common_denominator(rows) -> int:
    d = 1
    for row in rows:
        for x in row:
            d = lcm(d, Fraction(x).denominator)
    return d


def in_row_span(h: Matrix, v) -> bool:
    """Membership of integer vector v in the row lattice with HNF basis h."""
    v = list(v)
    for row in h:
        c = next((j for j, x in enumerate(row) if x), None)
        if c is None:
            continue
        if v[c] % row[c] == 0:
            f = v[c] // row[c]
            if f:
                v = [x - f * y for x, y in zip(v, row)]
    return not any(v)


def row_span_coords(h: Matrix, v):
    """Coordinates of v in the HNF basis h, or None if v is not in the span."""
    v = list(v)
    coords = []
    for row in h:
        c = next((j for j, x in enumerate(row) if x), None)
        if c is None:
            coords.append(0)
            continue
        if v[c] % row[c] != 0:
            return None
        f = v[c] // row[c]
        coords.append(f)
        if f:
            v = [x - f * y for x, y in zip(v, row)]
    return tuple(coords) if not any(v) else None
