"""Pure spinors, isotropic subspaces, stabilizers, and secant planes.

A parity-homogeneous spinor w determines the isotropic subspace of lattice
vectors annihilating it; w is pure when that kernel is maximal (dimension 2n).
For a rank-six even spinor with nonvanishing quartic invariant there is a
unique plane of spinors through w meeting the pure cone in two lines: the
plane is the joint kernel of the stabilizer Lie algebra of w, and the lines
come from factoring the quartic restricted to the plane, which is a perfect
square of a quadratic.  A negative discriminant yields conjugate lines over an
imaginary quadratic field; the split rational case is kept, marked by a
negative field parameter, so later constructions can refuse it explicitly.
"""
from __future__ import annotations

import math
from fractions import Fraction

from ._linalg import nullspace, rank, rref
from .clifford import lie_action_pair, mukai_pairing
from .exterior import (Ext, bits_ascending, contract_gen, endo_derivation,
                       endo_wedge_extend, ext_exp, top_wedge, wedge_gen)
from .lattice import pairing, theta_adjacent
from .scalars import QuadExt, quad_conj, squarefree_part

_ZERO = Fraction(0)


# -- subspaces over an exact field ---------------------------------------------


class Subspace:
    """A subspace of coordinate space held in reduced row-echelon basis.

    Vectors are coordinate lists over Fraction or one quadratic extension;
    equality is basis equality after reduction, so different presentations of
    the same subspace compare equal.
    """

    __slots__ = ("ambient", "rows")

    def __init__(self, ambient: int, vectors):
        mat = [list(v) for v in vectors]
        for v in mat:
            if len(v) != ambient:
                raise ValueError("vector length does not match ambient dimension")
        if mat:
            reduced, pivots = rref(mat)
            rows = reduced[: len(pivots)]
        else:
            rows = []
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @property
    def dim(self) -> int:
        return len(self.rows)

    def basis(self) -> list[list]:
        return [list(r) for r in self.rows]

    def contains(self, v) -> bool:
        v = list(v)
        if len(v) != self.ambient:
            return False
        if not any(v):
            return True
        return rank(self.rows + [v]) == self.dim

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.ambient == other.ambient
                and self.rows == other.rows)

    def __le__(self, other):
        return all(other.contains(r) for r in self.rows)

    def intersect(self, other: "Subspace") -> "Subspace":
        if self.ambient != other.ambient:
            raise ValueError("subspaces live in different ambient spaces")
        if not self.rows or not other.rows:
            return Subspace(self.ambient, [])
        k1 = len(self.rows)
        matrix = [[row[j] for row in self.rows] + [-row[j] for row in other.rows]
                  for j in range(self.ambient)]
        vectors = []
        for c in nullspace(matrix):
            vectors.append([sum((c[i] * self.rows[i][j] for i in range(k1)
                                 if c[i]), _ZERO) for j in range(self.ambient)])
        return Subspace(self.ambient, vectors)

    def map_coords(self, f) -> "Subspace":
        return Subspace(self.ambient, [[f(x) for x in row] for row in self.rows])

    def conj(self) -> "Subspace":
        return self.map_coords(quad_conj)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"


def _gen_action(n: int, j: int, s: Ext) -> Ext:
    return wedge_gen(j, s) if j < 2 * n else contract_gen(j - 2 * n, s)


def _spinor_coords(s: Ext) -> list:
    return [s.coeff(m) for m in range(1 << s.n_gen)]


# -- purity and the isotropic correspondence ------------------------------------


def isotropic_of_spinor(n: int, w: Ext) -> Subspace:
    """The kernel of v ↦ m_v(w): all lattice vectors annihilating the spinor."""
    if w.n_gen != 2 * n:
        raise ValueError("spinor lives on the wrong rank")
    if len({k % 2 for k in w.degrees()}) > 1:
        raise ValueError("spinor is not parity-homogeneous")
    dim_s = 1 << (2 * n)
    columns = [_spinor_coords(_gen_action(n, j, w)) for j in range(4 * n)]
    matrix = [[columns[j][m] for j in range(4 * n)] for m in range(dim_s)]
    return Subspace(4 * n, nullspace(matrix))


def is_pure(n: int, w: Ext) -> bool:
    """True when the annihilating subspace is maximal isotropic."""
    if w.is_zero():
        return False
    return isotropic_of_spinor(n, w).dim == 2 * n


def _check_maximal_isotropic(n: int, W: Subspace):
    if W.ambient != 4 * n or W.dim != 2 * n:
        raise ValueError("subspace is not maximal isotropic: wrong dimension")
    basis = W.basis()
    for i in range(len(basis)):
        for j in range(i, len(basis)):
            if pairing(n, basis[i], basis[j]):
                raise ValueError("subspace is not isotropic")


def spinor_of_isotropic(n: int, W: Subspace) -> Ext:
    """The spinor line annihilated by a maximal isotropic subspace, as a
    parity-homogeneous representative.  Inverse to ``isotropic_of_spinor``."""
    _check_maximal_isotropic(n, W)
    dim_s = 1 << (2 * n)
    rows = []
    for v in W.basis():
        images = []
        for m in range(dim_s):
            img = Ext.zero(2 * n)
            s = Ext.basis(2 * n, m)
            for j, c in enumerate(v):
                if c:
                    img = img + _gen_action(n, j, s) * c
            images.append(img)
        for target in range(dim_s):
            row = [images[m].coeff(target) for m in range(dim_s)]
            if any(row):
                rows.append(row)
    kernel = nullspace(rows)
    if len(kernel) != 1:
        raise ValueError("annihilated space is not a line: subspace is not maximal isotropic")
    s = Ext(2 * n, {m: c for m, c in enumerate(kernel[0]) if c})
    if len({k % 2 for k in s.degrees()}) != 1:
        raise ValueError("annihilated line is not parity-homogeneous")
    return s


# -- stabilizer Lie algebras ------------------------------------------------------


def bivector_pairs(n: int) -> list[tuple[int, int]]:
    """Index pairs (i, j), i < j, of the standard bivector basis of ∧²V."""
    return [(i, j) for i in range(4 * n) for j in range(i + 1, 4 * n)]


def plane_stabilizer(n: int, spinors: list[Ext]) -> list[Ext]:
    """Echelon basis of the bivectors whose spin action kills every listed
    spinor: the pointwise stabilizer Lie algebra of their span."""
    pairs = bivector_pairs(n)
    dim_s = 1 << (2 * n)
    rows = []
    for w in spinors:
        if w.n_gen != 2 * n:
            raise ValueError("spinor lives on the wrong rank")
        images = [_spinor_coords(lie_action_pair(n, i, j, w)) for (i, j) in pairs]
        for m in range(dim_s):
            row = [images[p][m] for p in range(len(pairs))]
            if any(row):
                rows.append(row)
    if rows:
        coeff_vectors = [r for r in rref(nullspace(rows))[0] if any(r)]
    else:
        coeff_vectors = [[Fraction(i == p) for i in range(len(pairs))]
                         for p in range(len(pairs))]
    return [Ext(4 * n, {(1 << i) | (1 << j): cv[p]
                        for p, (i, j) in enumerate(pairs) if cv[p]})
            for cv in coeff_vectors]


def stabilizer_lie(n: int, w: Ext) -> list[Ext]:
    """Echelon basis of {ξ ∈ ∧²V : the spin action of ξ kills w}."""
    return plane_stabilizer(n, [w])


def so_matrix_of_bivector(n: int, xi: Ext) -> list[list]:
    """The orthogonal Lie algebra matrix of a bivector: a ∧ b sends x to
    (b, x)a − (a, x)b, which matches the Clifford commutator action."""
    if xi.n_gen != 4 * n:
        raise ValueError("bivector lives on the wrong rank")
    N = 4 * n
    mat = [[_ZERO] * N for _ in range(N)]
    for mask, c in xi.items():
        if mask.bit_count() != 2:
            raise ValueError("element is not a bivector")
        i, j = bits_ascending(mask)
        # the pairing is supported on partner slots at distance 2n
        mat[i][(j + 2 * n) % N] += c
        mat[j][(i + 2 * n) % N] -= c
    return mat


def fixed_space_dims(n: int, bivectors: list[Ext]) -> list[int]:
    """Dimensions of the joint fixed space of the bivector derivations on
    each ∧^k V, for k = 0 .. 4n."""
    N = 4 * n
    mats = [so_matrix_of_bivector(n, xi) for xi in bivectors]
    dims = []
    for k in range(N + 1):
        masks = [m for m in range(1 << N) if m.bit_count() == k]
        if not mats:
            dims.append(len(masks))
            continue
        images = []
        for mat in mats:
            images.append([endo_derivation(mat, Ext.basis(N, m)) for m in masks])
        stacked = []
        for per_mat in images:
            for t, mt in enumerate(masks):
                row = [per_mat[c].coeff(mt) for c in range(len(masks))]
                if any(row):
                    stacked.append(row)
        dims.append(len(nullspace(stacked)) if stacked else len(masks))
    return dims


# -- secant planes -----------------------------------------------------------------


def _is_rational_square(q: Fraction) -> bool:
    if q < 0:
        return False
    rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
    return rn * rn == q.numerator and rd * rd == q.denominator


def _rational_sqrt(q: Fraction) -> Fraction:
    return Fraction(math.isqrt(q.numerator), math.isqrt(q.denominator))


class SecantData:
    """A plane of spinors meeting the pure cone in two lines.

    Fields: the rank parameter ``n``; ``plane`` — two rational generators;
    ``d`` — the exact field parameter (positive for conjugate lines over an
    imaginary quadratic field, negative in the split cases); ``line1`` and
    ``line2`` — the pure spinors; ``w1`` and ``w2`` — their annihilators.
    """

    __slots__ = ("n", "plane", "d", "line1", "line2", "w1", "w2")

    def __init__(self, n, plane, d, line1, line2, w1, w2):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "plane", tuple(plane))
        object.__setattr__(self, "d", Fraction(d))
        object.__setattr__(self, "line1", line1)
        object.__setattr__(self, "line2", line2)
        object.__setattr__(self, "w1", w1)
        object.__setattr__(self, "w2", w2)
        self._validate()

    def __setattr__(self, name, value):
        raise AttributeError("SecantData is immutable")

    @property
    def is_cm(self) -> bool:
        """True when the pure lines are conjugate over ℚ(√−d), d > 0."""
        return self.d > 0

    def field_d(self) -> int:
        """The squarefree integer generating the same field as √−d."""
        if self.d <= 0:
            raise ValueError("split secant: the pure lines are already rational")
        q, _ = squarefree_part(self.d.numerator * self.d.denominator)
        return q

    def mukai_gram(self):
        """The Mukai pairing Gram matrix on the plane generators."""
        p1, p2 = self.plane
        return [[mukai_pairing(a, b) for b in (p1, p2)] for a in (p1, p2)]

    def _validate(self):
        n = self.n
        p1, p2 = self.plane
        span = Subspace(1 << (2 * n), [_spinor_coords(p1), _spinor_coords(p2)])
        if span.dim != 2:
            raise ValueError("plane generators are dependent")
        for line, W in ((self.line1, self.w1), (self.line2, self.w2)):
            if not is_pure(n, line):
                raise ValueError("plane line is not a pure spinor")
            if isotropic_of_spinor(n, line) != W:
                raise ValueError("stored subspace does not match its spinor")
            if not span.contains(_spinor_coords(line)):
                raise ValueError("pure line does not lie on the plane")
        if self.w1.intersect(self.w2).dim != 0:
            raise ValueError("the two isotropic subspaces overlap")
        if self.is_cm:
            if self.line2 != self.line1.map_coeffs(quad_conj):
                raise ValueError("pure lines are not conjugate")
            if self.w2 != self.w1.conj():
                raise ValueError("isotropic subspaces are not conjugate")


def _quartic_coeffs(f, p1: Ext, p2: Ext) -> list[Fraction]:
    """Coefficients [q0..q4] of t ↦ f(p1 + t·p2), by exact interpolation."""
    from ._linalg import solve

    samples = [Fraction(t) for t in (-2, -1, 0, 1, 2)]
    values = [f(p1 + p2 * t) for t in samples]
    vander = [[t ** k for k in range(5)] for t in samples]
    return solve(vander, values)


def _lines_from_quadratic(p1: Ext, p2: Ext, r1: Fraction, r0: Fraction):
    """Pure lines p1 + t·p2 at the roots of t² + r1·t + r0, plus the field
    parameter d = −disc (negative marks the split case)."""
    disc = r1 * r1 - 4 * r0
    if disc == 0:
        raise ValueError("pure lines coincide: tangential plane")
    d = -disc
    if disc > 0:
        if not _is_rational_square(disc):
            raise ValueError(
                "pure lines live in a real quadratic field; only rational and "
                "imaginary-quadratic secants are represented")
        root = _rational_sqrt(disc)
        line1 = p1 + p2 * ((-r1 + root) / 2)
        line2 = p1 + p2 * ((-r1 - root) / 2)
        return d, line1, line2
    num, den = (-disc).numerator, (-disc).denominator
    field_d, s = squarefree_part(num * den)
    # √disc = (s/den)·√−field_d exactly
    t1 = QuadExt(field_d, -r1 / 2, Fraction(s, 2 * den))
    lift = lambda x: QuadExt(field_d, x)
    line1 = p1.map_coeffs(lift) + p2.map_coeffs(lift) * t1
    return d, line1, line1.map_coeffs(quad_conj)


def secant_plane(w: Ext) -> SecantData:
    """The unique spinor plane through a rank-six even spinor with nonzero
    quartic invariant, with its two pure lines and their annihilators."""
    from .igusa import igusa_J

    n = 3
    if w.n_gen != 2 * n:
        raise ValueError("secant extraction is implemented on the rank-six module")
    if igusa_J(w) == 0:
        raise ValueError("quartic invariant vanishes: the plane is not unique")

    stab = stabilizer_lie(n, w)
    even_masks = [m for m in range(1 << (2 * n)) if m.bit_count() % 2 == 0]
    index = {m: i for i, m in enumerate(even_masks)}
    stacked = []
    for xi in stab:
        terms = [(tuple(bits_ascending(mask)), c) for mask, c in xi.items()]
        cols = []
        for m in even_masks:
            s = Ext.basis(2 * n, m)
            img = Ext.zero(2 * n)
            for (i, j), c in terms:
                img = img + lie_action_pair(n, i, j, s) * c
            cols.append(img)
        for t, mt in enumerate(even_masks):
            row = [cols[c].coeff(mt) for c in range(len(even_masks))]
            if any(row):
                stacked.append(row)
    kernel = nullspace(stacked)
    if len(kernel) != 2:
        raise ValueError(
            f"stabilizer joint kernel has dimension {len(kernel)}, expected a plane")
    p1, p2 = (Ext(2 * n, {even_masks[i]: c for i, c in enumerate(vec) if c})
              for vec in kernel)
    if not Subspace(1 << (2 * n),
                    [_spinor_coords(p1), _spinor_coords(p2)]).contains(_spinor_coords(w)):
        raise ValueError("spinor does not lie on its stabilizer plane")

    # make the direction spinor non-pure so the restricted quartic has degree 4
    shift = 0
    while igusa_J(p2 + p1 * shift) == 0:
        shift += 1
        if shift > 8:
            raise ValueError("could not normalize the plane basis")
    p2 = p2 + p1 * shift

    q0, q1, q2, q3, q4 = _quartic_coeffs(igusa_J, p1, p2)
    c = q4
    r1 = q3 / (2 * c)
    r0 = (q2 / c - r1 * r1) / 2
    if q1 != c * 2 * r1 * r0 or q0 != c * r0 * r0:
        raise ValueError("restricted quartic is not the square of a quadratic")

    d, line1, line2 = _lines_from_quadratic(p1, p2, r1, r0)
    w1 = isotropic_of_spinor(n, line1)
    w2 = isotropic_of_spinor(n, line2)
    return SecantData(n, (p1, p2), d, line1, line2, w1, w2)


def secant_from_polarization(n: int, d, theta: Ext | None = None) -> SecantData:
    """The explicit secant through exp(±√−d Θ) for a polarization pattern Θ,
    available in every rank (no quartic needed)."""
    d = Fraction(d)
    if d <= 0 or d.denominator != 1:
        raise ValueError("the field parameter must be a positive integer")
    if theta is None:
        theta = theta_adjacent(n)
    if theta.n_gen != 2 * n:
        raise ValueError("polarization lives on the wrong rank")
    field_d, s = squarefree_part(d.numerator)
    lift = lambda x: QuadExt(field_d, x)
    sqrt_minus_d = QuadExt(field_d, 0, s)  # √−d = s·√−field_d exactly
    line1 = ext_exp(theta.map_coeffs(lift) * sqrt_minus_d)
    line2 = line1.map_coeffs(quad_conj)
    # line1 = α + √−field_d·β̃ with α, β̃ rational: they span the plane
    alpha = line1.map_coeffs(lambda q: q.re if isinstance(q, QuadExt) else Fraction(q))
    beta = line1.map_coeffs(lambda q: q.im if isinstance(q, QuadExt) else _ZERO)
    w1 = isotropic_of_spinor(n, line1)
    w2 = isotropic_of_spinor(n, line2)
    return SecantData(n, (alpha, beta), d, line1, line2, w1, w2)


# -- Hodge-Weil planes ---------------------------------------------------------------


def hodge_weil_plane(secant: SecantData, I: list[list]) -> list[Ext]:
    """The rational plane underlying the top wedges of the two isotropic
    subspaces of a secant, for a complex structure I preserving both.  Every
    returned generator is fixed by the wedge extension of I."""
    n = secant.n
    N = 4 * n
    for W in (secant.w1, secant.w2):
        image = Subspace(N, [[sum((I[r][k] * v[k] for k in range(N) if v[k]), _ZERO)
                              for r in range(N)] for v in W.basis()])
        if image != W:
            raise ValueError("complex structure does not preserve the isotropic subspaces")
    omega1 = top_wedge([Ext.vector(v) for v in secant.w1.basis()])
    if secant.is_cm:
        re = omega1.map_coeffs(lambda q: q.re if isinstance(q, QuadExt) else Fraction(q))
        im = omega1.map_coeffs(lambda q: q.im if isinstance(q, QuadExt) else _ZERO)
        gens = [g for g in (re, im) if not g.is_zero()]
    else:
        omega2 = top_wedge([Ext.vector(v) for v in secant.w2.basis()])
        gens = [omega1, omega2]
    span = Subspace(1 << N, [[g.coeff(m) for m in range(1 << N)] for g in gens])
    if span.dim != 2:
        raise ValueError("top wedges span less than a plane")
    for g in gens:
        if endo_wedge_extend(I, g) != g:
            raise ValueError("plane generator is not fixed by the complex structure")
    return gens
