"""The rank-4n hyperbolic lattice V = W ⊕ W* and its duality maps.

Generators are ordered e_1 < ... < e_{2n} < f_1 < ... < f_{2n}: bits 0..2n-1
carry the e-block (degree-one classes on X), bits 2n..4n-1 the f-block (their
duals, degree-one classes on the dual torus).  The symmetric pairing is
(u, v) = Σ_i u_e[i] v_f[i] + u_f[i] v_e[i], i.e. Gram [[0, I], [I, 0]].
"""
from __future__ import annotations

from fractions import Fraction

from ._linalg import zeros
from .exterior import Ext, bits_ascending, complement_sign


def vrank(n: int) -> int:
    return 4 * n


def e_bit(n: int, i: int) -> int:
    """Bit position of e_i (1-based i in 1..2n)."""
    if not 1 <= i <= 2 * n:
        raise ValueError(f"e-index {i} out of range for n={n}")
    return i - 1


def f_bit(n: int, i: int) -> int:
    if not 1 <= i <= 2 * n:
        raise ValueError(f"f-index {i} out of range for n={n}")
    return 2 * n + i - 1


def emask(n: int, *indices: int) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << e_bit(n, i)
    return mask


def fmask(n: int, *indices: int) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << f_bit(n, i)
    return mask


def e_vec(n: int, i: int) -> Ext:
    return Ext.basis(4 * n, 1 << e_bit(n, i))


def f_vec(n: int, i: int) -> Ext:
    return Ext.basis(4 * n, 1 << f_bit(n, i))


def full_mask(n: int) -> int:
    return (1 << (4 * n)) - 1


def e_full_mask(n: int) -> int:
    return (1 << (2 * n)) - 1


def f_full_mask(n: int) -> int:
    return full_mask(n) ^ e_full_mask(n)


def _coords(n: int, v) -> list:
    if isinstance(v, Ext):
        if v != v.degree_part(1):
            raise ValueError("expected a degree-one element")
        return v.vector_coords()
    return list(v)


def pairing(n: int, u, v):
    """The hyperbolic pairing (u, v) on V."""
    uc, vc = _coords(n, u), _coords(n, v)
    acc = Fraction(0)
    for i in range(2 * n):
        acc = acc + uc[i] * vc[2 * n + i] + uc[2 * n + i] * vc[i]
    return acc


def b0(n: int, u, v):
    """The half-pairing picking the f-block of the second argument:
    b0(u, v) + b0(v, u) = (u, v), with b0(e_i, f_j) = δ_ij and b0(f_i, e_j) = 0.
    """
    uc, vc = _coords(n, u), _coords(n, v)
    acc = Fraction(0)
    for i in range(2 * n):
        acc = acc + uc[i] * vc[2 * n + i]
    return acc


def gram(n: int) -> list[list[Fraction]]:
    g = zeros(4 * n, 4 * n)
    for i in range(2 * n):
        g[i][2 * n + i] = Fraction(1)
        g[2 * n + i][i] = Fraction(1)
    return g


def pairing_covector(n: int, v) -> list:
    """The covector (v, ·) as a coordinate list."""
    vc = _coords(n, v)
    return [vc[(j + 2 * n) % (4 * n)] for j in range(4 * n)]


# -- Poincaré duality ----------------------------------------------------------


def _pd_block(x: Ext, block_bits: list[int], target_bits: list[int]) -> Ext:
    """e_K ↦ ε_{K,K^c} (dual basis)_{K^c} within a 2n-index block."""
    m2 = len(block_bits)
    pos = {b: i for i, b in enumerate(block_bits)}
    out = Ext.zero(x.n_gen)
    for mask, c in x.items():
        k = 0
        for b in bits_ascending(mask):
            if b not in pos:
                raise ValueError("element not supported on the expected block")
            k |= 1 << pos[b]
        sign = complement_sign(k, (1 << m2) - 1)
        image = 0
        for j in bits_ascending(((1 << m2) - 1) ^ k):
            image |= 1 << target_bits[j]
        out = out + Ext(x.n_gen, {image: sign * c})
    return out


def pd_e_block(n: int, x: Ext) -> Ext:
    """Duality on X: degree k on the e-block to degree 2n-k on the f-block."""
    ebits = list(range(2 * n))
    fbits = list(range(2 * n, 4 * n))
    return _pd_block(x, ebits, fbits)


def pd_f_block(n: int, x: Ext) -> Ext:
    """Duality on the dual torus: f-block to e-block."""
    ebits = list(range(2 * n))
    fbits = list(range(2 * n, 4 * n))
    return _pd_block(x, fbits, ebits)


def pd_full(n: int, x: Ext) -> Ext:
    """g_M ↦ ε_{M,M^c} g_{M^c} on all 4n generators at once."""
    full = full_mask(n)
    out = Ext.zero(x.n_gen)
    for mask, c in x.items():
        sign = complement_sign(mask, full)
        out = out + Ext(x.n_gen, {full ^ mask: sign * c})
    return out


def point_class_dual(n: int) -> Ext:
    """f_1 ∧ ... ∧ f_{2n}, the point class of the dual torus inside ∧*V."""
    return Ext.basis(4 * n, f_full_mask(n))


def point_class(n: int) -> Ext:
    """e_1 ∧ ... ∧ e_{2n}, the point class of X inside ∧*V."""
    return Ext.basis(4 * n, e_full_mask(n))


def spinor_point_class(n: int) -> Ext:
    """The top class e_1 ∧ ... ∧ e_{2n} inside the spinor module itself."""
    return Ext.basis(2 * n, (1 << (2 * n)) - 1)


def two_form_to_bivector(n: int, form: list[list]) -> Ext:
    """The bivector whose induced alternating form (x, y) ↦ (a,x)(b,y)−(a,y)(b,x)
    summed over terms a∧b reproduces the given Gram matrix.  Inverse to the
    pairing-induced identification ∧²V ≅ ∧²V*."""
    N = 4 * n
    if len(form) != N or any(len(r) != N for r in form):
        raise ValueError("form has the wrong shape")
    for a in range(N):
        for b in range(a, N):
            if form[a][b] != -form[b][a]:
                raise ValueError("form is not alternating")
    out = Ext.zero(N)
    for a in range(N):
        for b in range(a + 1, N):
            c = form[a][b]
            if not c:
                continue
            pa, pb = (a + 2 * n) % N, (b + 2 * n) % N
            mask = (1 << pa) | (1 << pb)
            out = out + Ext(N, {mask: c if pa < pb else -c})
    return out


def bivector_form_gram(n: int, xi: Ext) -> list[list]:
    """Gram matrix of the alternating form induced by a bivector."""
    N = 4 * n
    out = [[Fraction(0)] * N for _ in range(N)]
    for mask, c in xi.items():
        if mask.bit_count() != 2:
            raise ValueError("element is not a bivector")
        i, j = bits_ascending(mask)
        pi, pj = (i + 2 * n) % N, (j + 2 * n) % N
        out[pi][pj] += c
        out[pj][pi] -= c
    return out


# -- standard polarization patterns ---------------------------------------------


def theta_adjacent(n: int) -> Ext:
    """Σ e_{2i-1} ∧ e_{2i}: the polarization pairing adjacent generators."""
    return Ext(2 * n, {(1 << (2 * i)) | (1 << (2 * i + 1)): Fraction(1)
                       for i in range(n)})


def theta_split(n: int) -> Ext:
    """Σ e_i ∧ e_{n+i}: the polarization pairing the two halves of the block."""
    return Ext(2 * n, {(1 << i) | (1 << (i + n)): Fraction(1) for i in range(n)})
