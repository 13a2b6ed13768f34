"""Bigraded Dolbeault model of H*(X, ℂ) for a split principally polarized
abelian n-fold, with the degree-two polyvector algebra acting by contraction.

Cohomology is the exterior algebra on holomorphic generators w₁..wₙ (bits
0..n−1) and antiholomorphic generators w̄₁..w̄ₙ (bits n..2n−1), so H^{p,q}
has dimension C(n,p)·C(n,q) and the polarization class is Θ = Σ wᵢ∧w̄ᵢ.
The degree-two polyvectors HT² = H²(𝒪) ⊕ H¹(T) ⊕ H⁰(∧²T) act on a class by
wedging two antiholomorphic generators, trading a holomorphic generator for
an antiholomorphic one, and contracting two holomorphic generators; the rank
and kernel of this action against a fixed Chern character are computed
exactly, on one factor or on a product of two factors assembled by Künneth.

Everything here is basis-dependent plumbing for rank data that is not:
only split coordinates are modeled, and every exported quantity is a
dimension, a rank, or an exact kernel basis.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb

from ._linalg import nullspace, rank
from .exterior import Ext, contract_gen
from .thetaring import ThetaPoly

_SCALARS = (int, Fraction)


# -- the Dolbeault algebra -------------------------------------------------------


def dolbeault_theta(n: int) -> Ext:
    """The polarization class Σ wᵢ ∧ w̄ᵢ."""
    return Ext(2 * n, {(1 << i) | (1 << (n + i)): Fraction(1) for i in range(n)})


def bidegree_part(n: int, x: Ext, p: int, q: int) -> Ext:
    """The H^{p,q} component: monomials with p holomorphic and q
    antiholomorphic generators."""
    if x.n_gen != 2 * n:
        raise ValueError("class lives on the wrong rank")
    wmask = (1 << n) - 1
    return Ext(2 * n, {m: c for m, c in x.items()
                       if (m & wmask).bit_count() == p
                       and (m >> n).bit_count() == q})


def bidegree_dim(n: int, p: int, q: int) -> int:
    return comb(n, p) * comb(n, q)


def hodge_of_theta(p: ThetaPoly) -> Ext:
    """Substitute Θ = Σ wᵢ∧w̄ᵢ into a theta polynomial and expand."""
    return _substitute(p.n, p.coeffs, [(i, i) for i in range(p.n)], p.n)


def _substitute(n: int, coeffs, pairs, rank_n: int) -> Ext:
    """Expand Σ cₖ(Σ w_a ∧ w̄_b)ᵏ in the rank-2·rank_n model."""
    theta = Ext(2 * rank_n, {(1 << a) | (1 << (rank_n + b)): Fraction(1)
                             for a, b in pairs})
    out = Ext.zero(2 * rank_n)
    power = Ext.one(2 * rank_n)
    for k, c in enumerate(coeffs):
        if c:
            out = out + power * c
        if k < len(coeffs) - 1:
            power = power.wedge(theta)
    return out


# -- degree-two polyvectors ------------------------------------------------------


class HTClass:
    """An element of HT² = H²(𝒪) ⊕ H¹(T) ⊕ H⁰(∧²T).

    Components are sparse coefficient dicts: ``c`` on pairs i<j for
    w̄ᵢ∧w̄ⱼ, ``xi`` on all (i, j) for ∂wᵢ⊗w̄ⱼ, and ``pi`` on pairs i<j for
    ∂wᵢ∧∂wⱼ, so the component dimensions are (C(n,2), n², C(n,2)).
    """

    __slots__ = ("n", "c", "xi", "pi")

    def __init__(self, n: int, c=None, xi=None, pi=None):
        def clean(part, strict):
            out = {}
            for (i, j), v in (part or {}).items():
                if not 0 <= i < n or not 0 <= j < n or (strict and i >= j):
                    raise ValueError(f"component index ({i}, {j}) out of range")
                if v:
                    out[(i, j)] = Fraction(v) if isinstance(v, int) else v
            return out

        object.__setattr__(self, "n", n)
        object.__setattr__(self, "c", clean(c, True))
        object.__setattr__(self, "xi", clean(xi, False))
        object.__setattr__(self, "pi", clean(pi, True))

    def __setattr__(self, name, value):
        raise AttributeError("HTClass is immutable")

    def is_zero(self) -> bool:
        return not (self.c or self.xi or self.pi)

    def __eq__(self, other):
        return (isinstance(other, HTClass) and self.n == other.n
                and self.c == other.c and self.xi == other.xi
                and self.pi == other.pi)

    def __repr__(self):
        return f"HTClass({self.n}, c={self.c!r}, xi={self.xi!r}, pi={self.pi!r})"


def ht2_dim(n: int) -> int:
    return 2 * comb(n, 2) + n * n


def ht2_basis(n: int) -> list[HTClass]:
    """Unit classes in the fixed order: 𝒪-part pairs, then the n² tensor
    slots, then the polyvector pairs."""
    out = [HTClass(n, c={(i, j): 1}) for i in range(n) for j in range(i + 1, n)]
    out += [HTClass(n, xi={(i, j): 1}) for i in range(n) for j in range(n)]
    out += [HTClass(n, pi={(i, j): 1}) for i in range(n) for j in range(i + 1, n)]
    return out


def ht_contract(h: HTClass, a: Ext) -> Ext:
    """The module action c∧a + Σ ξᵢⱼ w̄ⱼ∧(∂wᵢ⌟a) + Σ πᵢⱼ ∂wᵢ⌟∂wⱼ⌟a."""
    n = h.n
    if a.n_gen != 2 * n:
        raise ValueError("class lives on the wrong rank")
    out = Ext.zero(2 * n)
    for (i, j), v in h.c.items():
        wedge = Ext(2 * n, {(1 << (n + i)) | (1 << (n + j)): Fraction(1)})
        out = out + wedge.wedge(a) * v
    for (i, j), v in h.xi.items():
        wbar = Ext(2 * n, {1 << (n + j): Fraction(1)})
        out = out + wbar.wedge(contract_gen(i, a)) * v
    for (i, j), v in h.pi.items():
        out = out + contract_gen(i, contract_gen(j, a)) * v
    return out


# -- annihilator kernels ---------------------------------------------------------


def _rank_and_kernel(basis: list[HTClass], a: Ext):
    images = [ht_contract(h, a) for h in basis]
    support = sorted(set().union(*[set(im.support()) for im in images]) or {0})
    rows = [[im.coeff(m) for im in images] for m in support]
    return rank(rows), nullspace(rows)


def _combine(basis: list[HTClass], vec) -> HTClass:
    n = basis[0].n
    c, xi, pi = {}, {}, {}
    for coeff, h in zip(vec, basis):
        if not coeff:
            continue
        for part, src in ((c, h.c), (xi, h.xi), (pi, h.pi)):
            for key, v in src.items():
                part[key] = part.get(key, Fraction(0)) + coeff * v
    return HTClass(n, c, xi, pi)


def annihilator_kernel(ch: ThetaPoly) -> tuple[int, int, list[HTClass]]:
    """Rank, kernel dimension, and an exact kernel basis of HT² acting on
    the Dolbeault expansion of a Chern character."""
    n = ch.n
    if n > 4:
        raise ValueError("kernel computation is kept to fourfolds and below")
    basis = ht2_basis(n)
    r, null = _rank_and_kernel(basis, hodge_of_theta(ch))
    return r, len(null), [_combine(basis, vec) for vec in null]


class ProductKernel:
    """Annihilator data for a box product of two characters.

    Fields: the HT² dimension of the product model, the exact rank and
    kernel dimension of contraction, the two factor kernel dimensions,
    ``splits`` — whether the kernel is exactly the two lifted factor
    kernels — and ``degenerate``, set when a factor character vanishes.
    """

    __slots__ = ("total_dim", "rank", "kernel_dim", "factor_dims", "splits",
                 "degenerate")

    def __init__(self, total_dim, rank_, kernel_dim, factor_dims, splits,
                 degenerate):
        object.__setattr__(self, "total_dim", total_dim)
        object.__setattr__(self, "rank", rank_)
        object.__setattr__(self, "kernel_dim", kernel_dim)
        object.__setattr__(self, "factor_dims", factor_dims)
        object.__setattr__(self, "splits", splits)
        object.__setattr__(self, "degenerate", degenerate)

    def __setattr__(self, name, value):
        raise AttributeError("ProductKernel is immutable")

    def __repr__(self):
        return (f"ProductKernel(total_dim={self.total_dim}, rank={self.rank}, "
                f"kernel_dim={self.kernel_dim}, factor_dims={self.factor_dims}, "
                f"splits={self.splits}, degenerate={self.degenerate})")


def _lift_factor(h: HTClass, which: int, n: int) -> HTClass:
    off = which * n
    shift = lambda part: {(i + off, j + off): v for (i, j), v in part.items()}
    return HTClass(2 * n, shift(h.c), shift(h.xi), shift(h.pi))


def product_annihilator(ch1: ThetaPoly, ch2: ThetaPoly) -> ProductKernel:
    """The annihilator of ch₁ ⊠ ch₂ inside HT² of the product, compared
    against the direct sum of the lifted factor annihilators."""
    if ch1.n != ch2.n:
        raise ValueError("characters live on different factors")
    n = ch1.n
    if n > 3:
        raise ValueError("product kernels are kept to threefolds and below")
    big = 2 * n
    emb1 = _substitute(n, ch1.coeffs, [(i, i) for i in range(n)], big)
    emb2 = _substitute(n, ch2.coeffs, [(n + i, n + i) for i in range(n)], big)
    box = emb1.wedge(emb2)

    basis = ht2_basis(big)
    r, null = _rank_and_kernel(basis, box)
    kdim = len(null)

    degenerate = ch1.is_zero() or ch2.is_zero()
    factor_dims = []
    lifted_annihilate = True
    for which, ch in enumerate((ch1, ch2)):
        _, k, kernel = annihilator_kernel(ch)
        factor_dims.append(k)
        for h in kernel:
            if not ht_contract(_lift_factor(h, which, n), box).is_zero():
                lifted_annihilate = False
    splits = (not degenerate and lifted_annihilate
              and kdim == factor_dims[0] + factor_dims[1])
    return ProductKernel(len(basis), r, kdim, tuple(factor_dims), splits,
                         degenerate)
