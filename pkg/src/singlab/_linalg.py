"""Exact linear algebra over the integers and rationals.

Everything here is fraction-free Gaussian elimination in the style of
Bareiss: integer determinants and leading principal minors, linear solves
with rational back substitution, and ranks of rational matrices after
clearing denominators.  No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm


def _exact_div(num: int, den: int) -> int:
    # Bareiss guarantees exact divisibility; a nonzero remainder means a bug.
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError("fraction-free elimination lost exactness")
    return q


def det(matrix) -> int:
    """Determinant of a square integer matrix, fraction-free."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i, row_k = a[i], a[k]
            factor = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = _exact_div(row_i[j] * pivot - factor * row_k[j], prev)
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def leading_principal_minors(matrix) -> list[int]:
    """[det M_1, ..., det M_n] over the leading k-by-k corners."""
    n = len(matrix)
    return [det([row[:k] for row in matrix[:k]]) for k in range(1, n + 1)]


def solve(matrix, rhs) -> list[Fraction]:
    """Solve M x = b exactly for square integer M and integer b.

    Fraction-free forward elimination, rational back substitution.
    Raises ValueError when M is singular.
    """
    n = len(matrix)
    a = [list(matrix[i]) + [rhs[i]] for i in range(n)]
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    break
            else:
                raise ValueError("singular matrix")
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i, row_k = a[i], a[k]
            factor = row_i[k]
            for j in range(k + 1, n + 1):
                row_i[j] = _exact_div(row_i[j] * pivot - factor * row_k[j], prev)
            row_i[k] = 0
        prev = pivot
    if a[n - 1][n - 1] == 0:
        raise ValueError("singular matrix")
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(a[i][n])
        for j in range(i + 1, n):
            acc -= a[i][j] * x[j]
        x[i] = acc / a[i][i]
    return x


def rank(rows) -> int:
    """Rank over the rationals of a matrix with int or Fraction entries."""
    if not rows or not rows[0]:
        return 0
    cleared = []
    for row in rows:
        fracs = [Fraction(x) for x in row]
        mult = lcm(*(f.denominator for f in fracs))
        cleared.append([int(f * mult) for f in fracs])
    return _rank_int(cleared)


def _rank_int(a) -> int:
    a = [row[:] for row in a]
    nrows = len(a)
    ncols = len(a[0])
    r = 0
    prev = 1
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if a[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        pivot = a[r][c]
        for i in range(r + 1, nrows):
            row_i, row_r = a[i], a[r]
            factor = row_i[c]
            for j in range(c + 1, ncols):
                row_i[j] = _exact_div(row_i[j] * pivot - factor * row_r[j], prev)
            row_i[c] = 0
        prev = pivot
        r += 1
        if r == nrows:
            break
    return r
