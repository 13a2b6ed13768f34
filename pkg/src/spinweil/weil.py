"""CM structures on the lattice from oriented secants, and their forms.

An imaginary-quadratic field K = ℚ(√−d) acts on V once a secant with
conjugate pure lines fixes the eigenspace splitting V⊗K = W₁ ⊕ W₂: the
generator f = η(√−d) acts by +√−d on W₁ and −√−d on W₂ and is rational on V.
From f come the alternating form Ξ(x, y) = (f x, y), the hermitian form
H = d(x, y) + √−d(f x, y), its discriminant and signature, and — for split
tori with an integral complex structure I — the symmetric form g = Ξ(I·, ·)
whose definiteness is decided by exact inertia.  No square root is ever
evaluated numerically: every claim reduces to rational linear algebra.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd

from ._linalg import (det, identity, inverse, mat_mul, mat_vec, nullspace,
                      rank, signature, transpose, zeros)
from .exterior import Ext
from .lattice import gram, pairing, two_form_to_bivector
from .scalars import QuadExt, as_rat
from .spinors import SecantData, Subspace

_ZERO = Fraction(0)


def _as_coords(n: int, v) -> list:
    if isinstance(v, Ext):
        if v.n_gen != 4 * n:
            raise ValueError("vector lives on the wrong lattice rank")
        return v.vector_coords()
    v = list(v)
    if len(v) != 4 * n:
        raise ValueError("vector lives on the wrong lattice rank")
    return v


class CMStructure:
    """The rational action of √−d attached to an oriented CM secant.

    Fields: ``secant`` (orientation = its stored first line), ``d`` (exact
    positive field parameter), ``field_d`` (squarefree integer for the same
    field), and ``f`` — the 4n×4n rational matrix of the generator.  The
    defining identities f² = −d, (f x, f y) = d(x, y) and
    (f x, y) = −(x, f y) are verified at construction.
    """

    __slots__ = ("secant", "d", "field_d", "f", "n")

    def __init__(self, secant: SecantData, f: list[list]):
        object.__setattr__(self, "secant", secant)
        object.__setattr__(self, "d", secant.d)
        object.__setattr__(self, "field_d", secant.field_d())
        object.__setattr__(self, "f", [list(r) for r in f])
        object.__setattr__(self, "n", secant.n)
        self._validate()

    def __setattr__(self, name, value):
        raise AttributeError("CMStructure is immutable")

    def _validate(self):
        n, F = self.n, self.f
        N = 4 * n
        minus_d = [[-self.d if r == c else _ZERO for c in range(N)] for r in range(N)]
        if mat_mul(F, F) != minus_d:
            raise ValueError("f² ≠ −d·id")
        G = gram(n)
        FtG = mat_mul(transpose(F), G)
        if FtG != [[-x for x in row] for row in mat_mul(G, F)]:
            raise ValueError("f is not anti-self-dual for the pairing")
        if mat_mul(FtG, F) != [[self.d * x for x in row] for row in G]:
            raise ValueError("f is not a d-similarity of the pairing")


def cm_from_secant(secant: SecantData) -> CMStructure:
    """Solve for the rational matrix acting by +√−d on W₁ and −√−d on W₂."""
    if not secant.is_cm:
        raise ValueError("split secant carries no CM structure")
    n = secant.n
    N = 4 * n
    field_d = secant.field_d()
    num, den = secant.d.numerator, secant.d.denominator
    # √−d = (s/den)·√−field_d where num·den = s²·field_d
    from .scalars import squarefree_part
    _, s = squarefree_part(num * den)
    lam = QuadExt(field_d, 0, Fraction(s, den))
    rows = secant.w1.basis() + secant.w2.basis()
    if len(rows) != N:
        raise ValueError("eigenspaces do not span the lattice")
    P = transpose([[QuadExt(field_d, x) if not isinstance(x, QuadExt) else x
                    for x in row] for row in rows])
    D = [[lam if r == c and r < 2 * n else (-lam if r == c else QuadExt(field_d, 0))
          for c in range(N)] for r in range(N)]
    F_ext = mat_mul(mat_mul(P, D), inverse(P))
    try:
        F = [[as_rat(x) for x in row] for row in F_ext]
    except ValueError as exc:
        raise ValueError(f"CM action is not rational: {exc}") from exc
    return CMStructure(secant, F)


# -- the attached forms -----------------------------------------------------------


def xi_form(C: CMStructure, x, y):
    """The alternating form Ξ(x, y) = (f x, y)."""
    n = C.n
    return pairing(n, mat_vec(C.f, _as_coords(n, x)), _as_coords(n, y))


def xi_gram(C: CMStructure) -> list[list]:
    """Gram matrix of Ξ on the standard basis."""
    return mat_mul(transpose(C.f), gram(C.n))


def hermitian_H(C: CMStructure, x, y) -> QuadExt:
    """H(x, y) = d(x, y) + √−d(f x, y), valued in ℚ(√−d)."""
    n = C.n
    xc, yc = _as_coords(n, x), _as_coords(n, y)
    re = C.d * pairing(n, xc, yc)
    from .scalars import squarefree_part
    _, s = squarefree_part(C.d.numerator * C.d.denominator)
    scale = Fraction(s, C.d.denominator)
    return QuadExt(C.field_d, re, scale * pairing(n, mat_vec(C.f, xc), yc))


def hermitian_gram(C: CMStructure, basis=None) -> list[list]:
    """Gram matrix of H, on the standard basis or on given vectors."""
    n = C.n
    if basis is None:
        basis = [[Fraction(r == c) for r in range(4 * n)] for c in range(4 * n)]
    else:
        basis = [_as_coords(n, b) for b in basis]
    return [[hermitian_H(C, a, b) for b in basis] for a in basis]


def real_gram(matrix: list[list]) -> list[list]:
    """Entrywise real part of a quadratic-extension matrix."""
    return [[x.re if isinstance(x, QuadExt) else Fraction(x) for x in row]
            for row in matrix]


def gram_signature(matrix: list[list]) -> tuple[int, int]:
    """Exact inertia (p, q) of a symmetric rational matrix; degenerate input
    is an error."""
    m = len(matrix)
    for i in range(m):
        for j in range(m):
            if matrix[i][j] != matrix[j][i]:
                raise ValueError("matrix is not symmetric")
    plus, minus, zero = signature(matrix)
    if zero:
        raise ValueError("form is degenerate")
    return plus, minus


def discriminant_H(C: CMStructure, basis) -> Fraction:
    """Determinant of the hermitian Gram matrix on a K-basis of V_ℚ (2n
    vectors whose f-span is everything); always rational."""
    n = C.n
    vecs = [_as_coords(n, b) for b in basis]
    if len(vecs) != 2 * n:
        raise ValueError(f"a K-basis has {2 * n} vectors")
    stacked = vecs + [mat_vec(C.f, v) for v in vecs]
    if rank(stacked) != 4 * n:
        raise ValueError("vectors do not span the lattice over the field")
    return as_rat(det(hermitian_gram(C, vecs)))


# -- complex structures -------------------------------------------------------------


class ComplexStructureI:
    """An integral complex structure on V: I² = −id and I an isometry of the
    pairing, both verified at construction."""

    __slots__ = ("n", "matrix")

    def __init__(self, n: int, matrix: list[list]):
        N = 4 * n
        M = [list(r) for r in matrix]
        if len(M) != N or any(len(r) != N for r in M):
            raise ValueError("matrix has the wrong shape")
        minus_id = [[Fraction(-(r == c)) for c in range(N)] for r in range(N)]
        if mat_mul(M, M) != minus_id:
            raise ValueError("I² ≠ −id")
        G = gram(n)
        if mat_mul(transpose(M), mat_mul(G, M)) != G:
            raise ValueError("I is not an isometry of the pairing")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "matrix", M)

    def __setattr__(self, name, value):
        raise AttributeError("ComplexStructureI is immutable")

    def commutes_with(self, C: CMStructure) -> bool:
        return mat_mul(self.matrix, C.f) == mat_mul(C.f, self.matrix)

    def __neg__(self) -> "ComplexStructureI":
        return ComplexStructureI(self.n, [[-x for x in row] for row in self.matrix])


def standard_complex_structure(n: int) -> ComplexStructureI:
    """The split-torus structure rotating each adjacent generator pair, the
    same pattern on both blocks (the dual block inherits minus the transpose
    twice, which lands back on the rotation)."""
    N = 4 * n
    M = zeros(N, N)
    for base in range(0, N, 2):
        M[base + 1][base] = Fraction(1)
        M[base][base + 1] = Fraction(-1)
    return ComplexStructureI(n, M)


def g_form(C: CMStructure, I: ComplexStructureI, x, y):
    """The symmetric form g(x, y) = Ξ(I x, y); needs I commuting with f."""
    if not I.commutes_with(C):
        raise ValueError("complex structure does not commute with the CM action")
    n = C.n
    return xi_form(C, mat_vec(I.matrix, _as_coords(n, x)), y)


def g_gram(C: CMStructure, I: ComplexStructureI) -> list[list]:
    if not I.commutes_with(C):
        raise ValueError("complex structure does not commute with the CM action")
    return mat_mul(transpose(I.matrix), xi_gram(C))


def g_definiteness(C: CMStructure, I: ComplexStructureI) -> str:
    """'negative', 'positive', or 'indefinite', by exact inertia of g."""
    p, q = gram_signature(g_gram(C, I))
    if q == 4 * C.n:
        return "negative"
    if p == 4 * C.n:
        return "positive"
    return "indefinite"


# -- centralizer dimensions -----------------------------------------------------------


def _flat(M: list[list]) -> list:
    return [x for row in M for x in row]


def centralizer_dims(C: CMStructure, I: ComplexStructureI) -> tuple[int, int]:
    """Dimensions of {ξ ∈ so(V) : ξf = fξ, tr(fξ) = 0} and of its
    I-commutant: the Lie algebras of the special unitary centralizer of the
    CM action and of its subgroup commuting with the complex structure."""
    n = C.n
    N = 4 * n
    G = gram(n)
    F = C.f

    def unknowns_to_matrix(vec):
        return [vec[r * N:(r + 1) * N] for r in range(N)]

    rows = []
    # so(V): Mᵀ G + G M = 0 — one linear row per (i ≤ j)
    for i in range(N):
        for j in range(i, N):
            row = [_ZERO] * (N * N)
            for k in range(N):
                row[k * N + j] += G[k][i]
                row[k * N + i] += G[k][j]
            rows.append(row)
    # [M, F] = 0
    for i in range(N):
        for j in range(N):
            row = [_ZERO] * (N * N)
            for k in range(N):
                row[i * N + k] += F[k][j]
                row[k * N + j] -= F[i][k]
            rows.append(row)
    # unit-determinant linearization: tr(F M) = 0
    trace_row = [_ZERO] * (N * N)
    for i in range(N):
        for k in range(N):
            trace_row[k * N + i] += F[i][k]
    rows.append(trace_row)

    kernel = nullspace(rows)
    dim_f = len(kernel)

    rows_i = list(rows)
    Im = I.matrix
    for i in range(N):
        for j in range(N):
            row = [_ZERO] * (N * N)
            for k in range(N):
                row[i * N + k] += Im[k][j]
                row[k * N + j] -= Im[i][k]
            rows_i.append(row)
    dim_i = len(nullspace(rows_i))
    return dim_f, dim_i


def ample_class(C: CMStructure) -> Ext:
    """The primitive integral bivector inducing the polarization form Ξ,
    through the pairing identification ∧²V ≅ ∧²V*."""
    biv = two_form_to_bivector(C.n, xi_gram(C))
    nums, dens = [], []
    for _, c in biv.items():
        nums.append(c.numerator)
        dens.append(c.denominator)
    scale = Fraction(_lcm_all(dens), _gcd_all(nums))
    out = biv * scale
    lead = out.coeff(min(out.support()))
    return out * -1 if lead and lead < 0 else out


def _gcd_all(values) -> int:
    g = 0
    for v in values:
        g = gcd(g, abs(v))
    return g or 1


def _lcm_all(values) -> int:
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out
