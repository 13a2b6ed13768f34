"""Transport between the spinor square S⊗S and the exterior algebra of V.

The bridge has three stages.  ``varphi`` embeds S⊗S into the Clifford algebra
by sandwiching the dual point word between an e-word and a reversed e-word;
``psi`` flattens a Clifford element to ∧*V by normal-ordering symbols; the
signed block dualities then shear the result into product-degree position.
The composite ``orlov_phi`` intertwines the two-sided spinor action m†⊗m of a
Spin element with its wedge representation on ∧*V up to wedging by the
exponential of an integral two-form — the twist class.  ``twist_identity_check``
verifies that identity exactly, basis vector by basis vector.

Everything here is exact: the composite is inverted structurally (the duality
stage is a signed permutation, ``psi`` is triangular for the degree filtration,
and ``varphi`` is undone through the rank-one action identity), so no matrix
inversion is ever performed.
"""
from __future__ import annotations

from fractions import Fraction

from .clifford import CliffordElement, SpinElement, integral_pairing
from .exterior import (
    Ext,
    bits_ascending,
    contract_gen,
    endo_wedge_extend,
    ext_exp,
    merge_sign,
    wedge_gen,
)
from .lattice import two_form_to_bivector


def _bits_desc(mask: int):
    while mask:
        b = mask.bit_length() - 1
        yield b
        mask ^= 1 << b


def _tau_sign(mask: int) -> int:
    k = mask.bit_count()
    return -1 if (k * (k - 1) // 2) % 2 else 1


def _index_sum(mask: int) -> int:
    """Sum of the 1-based positions of the set bits."""
    return sum(b + 1 for b in bits_ascending(mask))


# -- the symbol maps --------------------------------------------------------------


def varphi(s: Ext, t: Ext) -> CliffordElement:
    """Embed s⊗t into the Clifford algebra: e-word(s) · f₁⋯f_{2n} · τ(e-word(t))."""
    if s.n_gen != t.n_gen:
        raise ValueError("arguments live over different lattices")
    twon = s.n_gen
    if twon % 2:
        raise ValueError("spinor elements must have an even number of generators")
    n = twon // 2
    pt_dual = CliffordElement.word(n, ((1 << twon) - 1) << twon)
    left = CliffordElement.from_words(n, s)
    right = CliffordElement.from_words(n, t).tau()
    return left * pt_dual * right


def _psi_prime_gen(n: int, j: int, x: Ext) -> Ext:
    """One normal-ordering step: wedge by g_j plus, for e-generators, the
    contraction that pairs the matching f-slot."""
    out = wedge_gen(j, x)
    if j < 2 * n:
        out = out + contract_gen(2 * n + j, x)
    return out


def psi(a: CliffordElement) -> Ext:
    """Flatten a Clifford element to ∧*V.

    Each word is expanded letter by letter — rightmost letter applied first —
    through the wedge-plus-contraction operator, evaluated at 1.  The top
    graded piece of ψ(word) is the plain exterior monomial on the same
    index set, so ψ is a filtered isomorphism.
    """
    n = a.n
    out = Ext.zero(4 * n)
    for mask, c in a.items():
        cur = Ext.one(4 * n)
        for j in _bits_desc(mask):
            cur = _psi_prime_gen(n, j, cur)
        out = out + cur * c
    return out


def psi_inverse(x: Ext) -> CliffordElement:
    """Invert ψ by peeling top degrees: the degree-k part of the remainder
    lifts verbatim to Clifford words, whose ψ-image cancels it."""
    if x.n_gen % 4:
        raise ValueError("element does not live over the full lattice")
    n = x.n_gen // 4
    out = CliffordElement.zero(n)
    rem = x
    while rem:
        top = rem.degree_part(rem.max_degree())
        w = CliffordElement(n, dict(top.items()))
        out = out + w
        rem = rem - psi(w)
    return out


def tilde_varphi(s: Ext, t: Ext) -> Ext:
    """The flattened embedding ψ(φ(s⊗t)) — the operator route."""
    return psi(varphi(s, t))


def tilde_varphi_closed(n: int, kmask: int, lmask: int) -> Ext:
    """The flattened embedding of e_K⊗e_L by the closed combinatorial sum.

    Independent of :func:`tilde_varphi`; the two routes agreeing on all basis
    pairs is one of the package's structural checks, so neither may be
    expressed through the other.
    """
    full = (1 << (2 * n)) - 1
    if kmask & ~full or lmask & ~full:
        raise ValueError("multi-index out of range")
    ell = lmask.bit_count()
    base = -1 if (ell * (ell - 1) // 2) % 2 else 1
    coeffs: dict[int, Fraction] = {}
    sub = kmask
    while True:
        i_set, i_prime = sub, kmask ^ sub
        s = base * merge_sign(i_prime, i_set)
        if (_index_sum(i_prime) - i_prime.bit_count()) % 2:
            s = -s
        sil = merge_sign(i_set, lmask)
        if sil:
            s *= sil
            fblock = full ^ i_prime
            emask = i_set | lmask
            # normal form is e-first: f_A ∧ e_B = (-1)^{|A||B|} e_B ∧ f_A
            if (fblock.bit_count() * emask.bit_count()) % 2:
                s = -s
            m = emask | (fblock << (2 * n))
            coeffs[m] = coeffs.get(m, Fraction(0)) + s
        if sub == 0:
            break
        sub = (sub - 1) & kmask
    return Ext(4 * n, coeffs)


# -- signed block dualities -------------------------------------------------------


def _f_dual_monomial(n: int, amask: int) -> tuple[int, int]:
    """Signed complement of the f-monomial with block mask A: the sign and the
    e-mask of the image, per (-1)^{l(l+1)/2+n} ε_{A,A^c}."""
    full = (1 << (2 * n)) - 1
    ell = amask.bit_count()
    s = merge_sign(amask, full ^ amask)
    if (ell * (ell + 1) // 2 + n) % 2:
        s = -s
    return s, full ^ amask


def _e_dual_monomial(n: int, bmask: int, shifted: bool) -> tuple[int, int]:
    """Signed complement of the e-monomial e_B: the sign and the (already
    shifted) f-mask.  The shifted variant carries (-1)^{k(k+3)/2}, the plain
    one (-1)^{k(k+1)/2+n}; they differ by (-1)^{k+n} degreewise."""
    full = (1 << (2 * n)) - 1
    k = bmask.bit_count()
    s = merge_sign(bmask, full ^ bmask)
    exp = (k * (k + 3) // 2) if shifted else (k * (k + 1) // 2 + n)
    if exp % 2:
        s = -s
    return s, (full ^ bmask) << (2 * n)


def phi_P_component(s: Ext) -> Ext:
    """Signed duality on a homogeneous dual-side (f-block) element."""
    n = _full_rank(s)
    if len(s.degrees()) > 1:
        raise ValueError("element is not homogeneous")
    full = (1 << (2 * n)) - 1
    out: dict[int, Fraction] = {}
    for mask, c in s.items():
        if mask & full:
            raise ValueError("element is not supported on the dual-side block")
        sgn, em = _f_dual_monomial(n, mask >> (2 * n))
        out[em] = out.get(em, Fraction(0)) + c * sgn
    return Ext(4 * n, out)


def psi_Pinv_component(s: Ext, shifted: bool = True) -> Ext:
    """Signed duality on a homogeneous e-block element (shifted by default)."""
    n = _full_rank(s)
    if len(s.degrees()) > 1:
        raise ValueError("element is not homogeneous")
    full = (1 << (2 * n)) - 1
    out: dict[int, Fraction] = {}
    for mask, c in s.items():
        if mask >> (2 * n):
            raise ValueError("element is not supported on the e-block")
        sgn, fm = _e_dual_monomial(n, mask, shifted)
        out[fm] = out.get(fm, Fraction(0)) + c * sgn
    return Ext(4 * n, out)


def duality_transport(x: Ext, shifted: bool = True) -> Ext:
    """Apply both block dualities componentwise to a mixed element: each
    monomial e_B ∧ f_A goes to ±e_{A^c} ∧ f_{B^c}."""
    n = _full_rank(x)
    full = (1 << (2 * n)) - 1
    out: dict[int, Fraction] = {}
    for mask, c in x.items():
        s1, em = _f_dual_monomial(n, mask >> (2 * n))
        s2, fm = _e_dual_monomial(n, mask & full, shifted)
        m = em | fm
        out[m] = out.get(m, Fraction(0)) + c * s1 * s2
    return Ext(4 * n, out)


def _full_rank(x: Ext) -> int:
    if x.n_gen % 4:
        raise ValueError("element does not live over the full lattice")
    return x.n_gen // 4


# -- the degree-shearing correspondence map ---------------------------------------

_PAIR_CACHE: dict[tuple[int, int, int], tuple] = {}


def _orlov_pair(n: int, u: int, v: int) -> tuple:
    """Image of the basis kernel e_u⊗e_v under the composite WITHOUT the
    τ-twist of the second slot, as a tuple of (mask, coeff) pairs.

    Per monomial e_B ∧ f_A of the closed-formula symbol, the product-order
    reinterpretation costs (-1)^{|A||B|}; then both block dualities apply.
    """
    key = (n, u, v)
    hit = _PAIR_CACHE.get(key)
    if hit is None:
        full = (1 << (2 * n)) - 1
        acc: dict[int, Fraction] = {}
        for mask, c in tilde_varphi_closed(n, u, v).items():
            amask = mask >> (2 * n)
            bmask = mask & full
            if (amask.bit_count() * bmask.bit_count()) % 2:
                c = -c
            s1, em = _f_dual_monomial(n, amask)
            s2, fm = _e_dual_monomial(n, bmask, shifted=True)
            m = em | fm
            acc[m] = acc.get(m, Fraction(0)) + c * s1 * s2
        hit = tuple((m, c) for m, c in acc.items() if c)
        _PAIR_CACHE[key] = hit
    return hit


def orlov_phi(s: Ext, t: Ext) -> Ext:
    """The full correspondence map on s⊗t: τ-twist the second slot, flatten
    through the closed-formula symbol, reinterpret monomials in product order,
    and apply the signed block dualities."""
    if s.n_gen != t.n_gen or s.n_gen % 2:
        raise ValueError("arguments must be spinor elements over the same lattice")
    n = s.n_gen // 2
    out: dict[int, object] = {}
    for v, cv in t.tau().items():
        for u, cu in s.items():
            c = cu * cv
            for m, w in _orlov_pair(n, u, v):
                prev = out.get(m)
                out[m] = c * w if prev is None else prev + c * w
    return Ext(4 * n, out)


def _orlov_apply_kernel(n: int, kern: dict) -> Ext:
    out: dict[int, object] = {}
    for (u, v), c in kern.items():
        if _tau_sign(v) < 0:
            c = -c
        for m, w in _orlov_pair(n, u, v):
            prev = out.get(m)
            out[m] = c * w if prev is None else prev + c * w
    return Ext(4 * n, out)


def _mukai_basis_sign(n: int, v: int) -> int:
    """(e_v, e_{v^c})_S — the only nonzero spinor pairing against e_v."""
    full = (1 << (2 * n)) - 1
    return _tau_sign(v) * merge_sign(v, full ^ v)


def _phi_inverse(cl: CliffordElement) -> dict:
    """Recover the kernel from a Clifford element through its S-action:
    m_{φ(u⊗v)} = (-1)ⁿ (e_v, ·)_S e_u forces each matrix column."""
    n = cl.n
    dim_s = 1 << (2 * n)
    full = dim_s - 1
    neg = n % 2 == 1
    kern: dict[tuple[int, int], object] = {}
    for xmask in range(dim_s):
        img = cl.act(Ext.basis(2 * n, xmask))
        if not img:
            continue
        v = full ^ xmask
        s = _mukai_basis_sign(n, v)
        if neg:
            s = -s
        for u, cu in img.items():
            kern[(u, v)] = cu * s if s != 1 else cu
    return kern


def orlov_inverse(x: Ext) -> dict:
    """Exact inverse of :func:`orlov_phi` on a general element, returned as a
    kernel {(u, v): coeff}.

    The duality stage is a signed permutation of monomials, ψ is inverted by
    degree peeling, φ by the rank-one action identity, and the τ-twist is its
    own inverse.
    """
    n = _full_rank(x)
    full = (1 << (2 * n)) - 1
    symb: dict[int, object] = {}
    for mask, c in x.items():
        amask = full ^ (mask & full)
        bmask = full ^ (mask >> (2 * n))
        s1, _ = _f_dual_monomial(n, amask)
        s2, _ = _e_dual_monomial(n, bmask, shifted=True)
        s = s1 * s2
        if (amask.bit_count() * bmask.bit_count()) % 2:
            s = -s
        symb[bmask | (amask << (2 * n))] = c * s if s != 1 else c
    kern = _phi_inverse(psi_inverse(Ext(4 * n, symb)))
    return {(u, v): c if _tau_sign(v) == 1 else -c for (u, v), c in kern.items()}


def tensor_kernel(s: Ext, t: Ext) -> dict:
    """The kernel dictionary of the rank-one correspondence s⊗t."""
    if s.n_gen != t.n_gen:
        raise ValueError("arguments live over different lattices")
    return {(u, v): cu * cv for u, cu in s.items() for v, cv in t.items()}


def kernel_action(kern: dict, x: Ext) -> Ext:
    """The push-pull action of a correspondence kernel:
    γ_*(x) = Σ c_{uv} (∫ e_u ∧ x) e_v, integrating the first slot."""
    twon = x.n_gen
    out = Ext.zero(twon)
    for (u, v), c in kern.items():
        p = integral_pairing(Ext.basis(twon, u), x)
        if p:
            out = out + Ext(twon, {v: c * p})
    return out


# -- the twisted equivariance -----------------------------------------------------

_C1_CACHE: dict[int, Ext] = {}


def twist_class_c1(n: int) -> Ext:
    """The two-form whose alternating form is (v₁,v₂) ↦ θ₂(w₁) − θ₁(w₂),
    transported through the pairing identification ∧²V ≅ ∧²V*.

    Comes out as −Σᵢ eᵢ∧fᵢ; the sign is also pinned independently by the
    rank-4 conjugation experiment behind :func:`twist_identity_check`.
    """
    out = _C1_CACHE.get(n)
    if out is None:
        ngen = 4 * n
        form = [[Fraction(0)] * ngen for _ in range(ngen)]
        for i in range(2 * n):
            form[i][2 * n + i] = Fraction(1)
            form[2 * n + i][i] = Fraction(-1)
        out = two_form_to_bivector(n, form)
        _C1_CACHE[n] = out
    return out


def rho_wedge(g: SpinElement, x: Ext) -> Ext:
    """The multiplicative extension of the vector representation of g."""
    return endo_wedge_extend(g.matrix, x)


def rho_prime(g: SpinElement, x: Ext) -> Ext:
    """Conjugate the two-sided spinor action m†_g⊗m_g through the
    correspondence map: the twisted wedge action on ∧*V."""
    n = g.n
    if x.n_gen != 4 * n:
        raise ValueError("element does not match the group element's lattice")
    twon = 2 * n
    adj: dict[int, Ext] = {}
    img: dict[int, Ext] = {}
    out: dict[tuple[int, int], object] = {}
    for (u, v), c in orlov_inverse(x).items():
        au = adj.get(u)
        if au is None:
            au = adj[u] = g.act_adjoint(Ext.basis(twon, u))
        iv = img.get(v)
        if iv is None:
            iv = img[v] = g.act(Ext.basis(twon, v))
        for mu, cu in au.items():
            ccu = c * cu
            for mv, cv in iv.items():
                key = (mu, mv)
                prev = out.get(key)
                term = ccu * cv
                out[key] = term if prev is None else prev + term
    return _orlov_apply_kernel(n, out)


def twist_of(g: SpinElement) -> Ext:
    """The twist class ½(c₁ − ρ_g^∧ c₁) of a Spin element."""
    c1 = twist_class_c1(g.n)
    return (c1 - rho_wedge(g, c1)) / 2


def twist_identity_check(g: SpinElement) -> tuple[bool, Ext, Ext | None]:
    """Compare ρ′_g with exp(twist)∧ρ_g^∧ on every basis vector of ∧*V.

    Returns (verdict, twist class, counterexample basis vector or None).
    """
    n = g.n
    tw = twist_of(g)
    etw = ext_exp(tw)
    for mask in range(1 << (4 * n)):
        x = Ext.basis(4 * n, mask)
        if rho_prime(g, x) != etw.wedge(rho_wedge(g, x)):
            return False, tw, x
    return True, tw, None


# -- normalized classes -----------------------------------------------------------


def kappa(ch: Ext) -> Ext:
    """Normalize away the degree-2 part: exp(−ch₂/r)∧ch with r the degree-0
    coefficient.  Idempotent, and insensitive to wedging by exp of any
    two-form beforehand."""
    r = ch.scalar_part()
    if not r:
        raise ValueError("degree-0 part must be nonzero")
    lam = ch.degree_part(2) * (Fraction(-1) / r)
    return ext_exp(lam).wedge(ch)
