"""Small exact linear algebra helpers: rational matrices and integer HNF.

Everything here works on plain lists of ints or Fractions; matrices are
lists of rows. Sizes stay tiny (rank at most 4 plus stacked generator
matrices), so straightforward fraction arithmetic is fine.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm


def frows(rows) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in rows]


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(m):
    return [list(col) for col in zip(*m)]


def mat_mul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def vec_mat(v, m):
    return [sum(v[i] * m[i][j] for i in range(len(v))) for j in range(len(m[0]))]


def det(m) -> Fraction:
    a = frows(m)
    n = len(a)
    result = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            result = -result
        result *= a[c][c]
        inv = 1 / a[c][c]
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return result


def inverse(m) -> list[list[Fraction]]:
    n = len(m)
    a = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(frows(m))]
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[c], a[piv] = a[piv], a[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return [row[n:] for row in a]


def solve_left(v, rows):
    """Exact solution x of x * rows = v, where rows has full row rank.

    Raises ValueError if v is not in the row span. Works for k x m rows
    with k <= m (the overdetermined columns act as consistency checks).
    """
    a = frows(rows)
    k = len(a)
    m = len(a[0])
    target = [Fraction(x) for x in v]
    # Gaussian elimination on the transposed system rows^T * x^T = v^T.
    aug = [[a[i][j] for i in range(k)] + [target[j]] for j in range(m)]
    pivots = []
    r = 0
    for c in range(k):
        piv = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    if r < k:
        raise ValueError("rows are not linearly independent")
    for i in range(r, m):
        if aug[i][k] != 0:
            raise ValueError("vector is not in the row span")
    x = [Fraction(0)] * k
    for i, c in enumerate(pivots):
        x[c] = aug[i][k]
    return x


def _row_sub(a, i, j, q):
    a[i] = [x - q * y for x, y in zip(a[i], a[j])]


def hnf_with_transform(rows):
    """Row Hermite normal form of an integer matrix.

    Returns (h, u, rank) where u is unimodular, u * rows equals h padded
    with zero rows, pivots are positive, and entries above each pivot are
    reduced into [0, pivot).
    """
    a = [list(map(int, r)) for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    u = identity(m)
    r = 0
    for c in range(n):
        while True:
            nz = [i for i in range(r, m) if a[i][c]]
            if not nz:
                piv = None
                break
            if len(nz) == 1:
                piv = nz[0]
                break
            i0 = min(nz, key=lambda i: abs(a[i][c]))
            for i in nz:
                if i != i0:
                    q = a[i][c] // a[i0][c]
                    if q:
                        _row_sub(a, i, i0, q)
                        _row_sub(u, i, i0, q)
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
            u[r], u[piv] = u[piv], u[r]
        if a[r][c] < 0:
            a[r] = [-x for x in a[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            q = a[i][c] // a[r][c]
            if q:
                _row_sub(a, i, r, q)
                _row_sub(u, i, r, q)
        r += 1
    return a[:r], u, r


def hnf(rows):
    h, _, _ = hnf_with_transform(rows)
    return h


def left_kernel(rows):
    """Basis of the integer left kernel {z : z * rows = 0}."""
    _, u, r = hnf_with_transform(rows)
    return u[r:]


def clear_denominators(rows):
    """Scale rational rows to integers; returns (int_rows, denominator)."""
    rows = frows(rows)
    d = 1
    for row in rows:
        for x in row:
            d = lcm(d, x.denominator)
    return [[int(x * d) for x in row] for row in rows], d
