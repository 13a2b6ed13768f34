"""Exact dense linear algebra over the rationals and quadratic extensions.

Matrices are lists of rows; entries are Fraction or QuadExt (any exact field
element supporting +,-,*,/ and truthiness).  Everything here is plain Gaussian
elimination — sizes in this package stay small enough (<= a few hundred) that
exact pivoting beats anything clever.
"""
from __future__ import annotations

from fractions import Fraction


def zeros(nrows: int, ncols: int) -> list[list[Fraction]]:
    return [[Fraction(0)] * ncols for _ in range(nrows)]


def identity(n: int) -> list[list[Fraction]]:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def transpose(m):
    return [list(col) for col in zip(*m)]


def mat_mul(a, b):
    bt = transpose(b)
    return [[_dot(row, col) for col in bt] for row in a]


def _dot(u, v):
    acc = u[0] * v[0]
    for x, y in zip(u[1:], v[1:]):
        acc = acc + x * y
    return acc


def mat_vec(a, v):
    return [_dot(row, v) for row in a]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, c):
    return [[c * x for x in row] for row in a]


def mat_eq(a, b) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def rref(matrix) -> tuple[list[list], list[int]]:
    """Reduced row echelon form; returns (rref_rows, pivot_columns)."""
    m = [list(row) for row in matrix]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c] if isinstance(m[r][c], Fraction) else m[r][c] ** 0 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank(matrix) -> int:
    if not matrix:
        return 0
    return len(rref(matrix)[1])


def nullspace(matrix) -> list[list]:
    """Basis of the right kernel, one vector per free column."""
    if not matrix:
        return []
    ncols = len(matrix[0])
    red, pivots = rref(matrix)
    free = [c for c in range(ncols) if c not in pivots]
    zero = matrix[0][0] * 0
    one = zero + 1
    basis = []
    for fc in free:
        v = [zero] * ncols
        v[fc] = one
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def solve(matrix, rhs) -> list:
    """One exact solution of matrix @ x = rhs; raises ValueError if none."""
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    ncols = len(matrix[0])
    red, pivots = rref(aug)
    if ncols in pivots:
        raise ValueError("inconsistent linear system")
    zero = matrix[0][0] * 0
    x = [zero] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][ncols]
    return x


def det(matrix):
    """Determinant by fraction-free-ish Gaussian elimination (exact field)."""
    m = [list(row) for row in matrix]
    n = len(m)
    sign = 1
    acc = None
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c]), None)
        if pivot is None:
            return matrix[0][0] * 0 if n else Fraction(1)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            sign = -sign
        p = m[c][c]
        acc = p if acc is None else acc * p
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] / p
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    if acc is None:
        return Fraction(1)
    return acc if sign == 1 else -acc


def inverse(matrix) -> list[list]:
    n = len(matrix)
    aug = [list(row) + irow for row, irow in zip(matrix, identity(n))]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("singular matrix")
    return [row[n:] for row in red]


class Solver:
    """Reusable exact solver: factor once, solve many right-hand sides."""

    def __init__(self, matrix):
        self._inv = inverse(matrix)

    def solve(self, rhs):
        return mat_vec(self._inv, rhs)


def signature(gram) -> tuple[int, int, int]:
    """(n_plus, n_minus, n_zero) of a symmetric matrix over Q.

    Symmetric Lagrange reduction: split off diagonal squares; when the whole
    active diagonal vanishes, the basis change x_i -> x_i + x_j turns a nonzero
    off-diagonal entry into a usable diagonal pivot.
    """
    m = [[Fraction(x) if not isinstance(x, Fraction) else x for x in row] for row in gram]
    idx = list(range(len(m)))
    plus = minus = zero = 0
    while idx:
        pivot = next((i for i in idx if m[i][i]), None)
        if pivot is not None:
            a = m[pivot][pivot]
            if a > 0:
                plus += 1
            else:
                minus += 1
            idx.remove(pivot)
            others = [i for i in idx if m[i][pivot]]
            for i in others:
                f = m[i][pivot] / a
                for j in idx:
                    m[i][j] -= f * m[pivot][j]
            for i in others:
                for j in idx:
                    m[j][i] = m[i][j]
            continue
        off = next(((i, j) for i in idx for j in idx if i < j and m[i][j]), None)
        if off is None:
            zero += len(idx)
            break
        i, j = off
        for k in range(len(m)):
            m[i][k] += m[j][k]
        for k in range(len(m)):
            m[k][i] += m[k][j]
        # now m[i][i] = 2 * old m[i][j] != 0; loop continues with a diagonal pivot
    return plus, minus, zero
