"""Named verification battery behind ``spinweil verify``.

Each check exercises one identity or fixture family from the library with
exact arithmetic and reports a single pass/fail verdict plus a short detail
string.  Checks are deterministic for a fixed seed: every check draws from its
own ``random.Random(f"{seed}:{name}")`` stream, so the battery's output is
byte-identical across runs and independent of execution order or thread
count.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Callable, NamedTuple

from .chevalley import (duality_transport, kappa, orlov_inverse, orlov_phi,
                        psi, rho_wedge, tensor_kernel, tilde_varphi,
                        tilde_varphi_closed, twist_identity_check, twist_of,
                        varphi)
from .clifford import (CliffordElement, SpinElement, bivector_lift, m_matrix,
                       mukai_pairing, spin_exp_even_nilpotent, spin_from_pair)
from .exterior import Ext, ext_exp, endo_derivation, merge_sign, top_wedge
from .hodgemodel import (annihilator_kernel, hodge_of_theta, ht_contract,
                         product_annihilator)
from .igusa import e_star, igusa_J
from .lattice import e_bit, spinor_point_class, theta_adjacent, theta_split
from ._linalg import rank
from .scalars import quad_conj, sqrt_minus, squarefree_part
from .spinors import (plane_stabilizer, secant_from_polarization,
                      secant_plane, so_matrix_of_bivector)
from .thetaring import (ThetaPoly, alpha_beta, ch_secant_ideal_threefold,
                        embed_theta_into_spinor, euler_pairing,
                        solve_genus4_coeffs, texp)
from .weil import (ample_class, cm_from_secant, centralizer_dims,
                   discriminant_H, g_definiteness, gram_signature,
                   hermitian_gram, real_gram, standard_complex_structure)


class Check(NamedTuple):
    name: str
    group: str
    quick: bool
    run: Callable[[random.Random, bool], tuple[bool, str]]


class CheckResult(NamedTuple):
    name: str
    group: str
    passed: bool
    detail: str
    seconds: float


# -- shared generators --------------------------------------------------------------


def _rand_spinor(rng: random.Random, n: int, terms: int = 6) -> Ext:
    dim = 1 << (2 * n)
    out = Ext.zero(2 * n)
    for _ in range(terms):
        c = rng.randint(-3, 3)
        if c:
            out = out + Ext.basis(2 * n, rng.randrange(dim)) * Fraction(c)
    return out


def _reflection_vector(rng: random.Random, n: int, sign: int) -> list:
    """A vector with self-pairing exactly 2*sign, sparse by construction."""
    v = [Fraction(0)] * (4 * n)
    i = rng.randrange(2 * n)
    v[i] = Fraction(1)
    v[2 * n + i] = Fraction(sign)
    j = rng.randrange(2 * n)
    if j != i and rng.randrange(2):
        slot = j if rng.randrange(2) else 2 * n + j
        v[slot] = Fraction(rng.choice((-1, 1)))
    return v


def _random_spin(rng: random.Random, n: int) -> SpinElement:
    """A seeded Spin element: a short product of exponentials of nilpotent
    bivector lifts and reflection pairs, kept sparse so certification stays
    cheap."""
    g = None
    for _ in range(rng.randint(1, 3)):
        kind = rng.randrange(3)
        if kind == 0:
            # one or two terms inside a single isotropic block
            shift = 0 if rng.randrange(2) else 2 * n
            xi = Ext.zero(4 * n)
            for _ in range(rng.randint(1, 2)):
                i, j = rng.sample(range(2 * n), 2)
                c = rng.choice((-2, -1, 1, 2))
                xi = xi + Ext.basis(4 * n, (1 << (i + shift)) | (1 << (j + shift))) * Fraction(c)
            if xi.is_zero():
                continue
            factor = spin_exp_even_nilpotent(bivector_lift(n, xi))
        elif kind == 1:
            # a single cross term e_i ∧ f_j with i != j is nilpotent
            i, j = rng.sample(range(2 * n), 2)
            c = rng.choice((-2, -1, 1, 2))
            xi = Ext.basis(4 * n, (1 << i) | (1 << (2 * n + j))) * Fraction(c)
            factor = spin_exp_even_nilpotent(bivector_lift(n, xi))
        else:
            sign = rng.choice((1, -1))
            factor = spin_from_pair(n, _reflection_vector(rng, n, sign),
                                    _reflection_vector(rng, n, sign))
        g = factor if g is None else g * factor
    if g is None:
        g = spin_from_pair(n, _reflection_vector(rng, n, 1),
                           _reflection_vector(rng, n, 1))
    return g


def _proportional(x: Ext, y: Ext) -> bool:
    """True when x = λ·y for a single nonzero scalar λ."""
    ratio = None
    for m in set(x.support()) | set(y.support()):
        xc, yc = x.coeff(m), y.coeff(m)
        if (not xc) != (not yc):
            return False
        if yc:
            r = xc / yc
            if ratio is None:
                ratio = r
            elif r != ratio:
                return False
    return ratio is not None


def _exp_line(n: int, d: int, sign: int = 1) -> Ext:
    """The pure spinor exp(±√-d·Θ) over the adjacent-pairs polarization."""
    return ext_exp(theta_adjacent(n) * (sqrt_minus(d) * sign))


def _is_square(q: Fraction) -> bool:
    if q < 0:
        return False
    num, den = q.numerator, q.denominator
    rn, rd = int(num ** 0.5), int(den ** 0.5)
    for a in (rn - 1, rn, rn + 1):
        for b in (rd - 1, rd, rd + 1):
            if a >= 0 and b > 0 and a * a == num and b * b == den:
                return True
    return False


# -- igusa ---------------------------------------------------------------------------


def _check_igusa_quartic_fixtures(rng, full):
    one = Ext.one(6)
    pt = spinor_point_class(3)
    for d in range(1, 11):
        if igusa_J(one + pt * Fraction(d)) != Fraction(-d * d, 4):
            return False, f"J(1+{d}[pt]) != -{d}^2/4"
        w = one + e_star(1, 4) + e_star(2, 5) + e_star(3, 6) * Fraction(d)
        if igusa_J(w) != d:
            return False, f"dual quartic fixture failed at d={d}"
        two_a = ThetaPoly.one(3).scale(2) - ThetaPoly.monomial(3, 2, d)
        for pattern in (theta_adjacent(3), theta_split(3)):
            if igusa_J(embed_theta_into_spinor(two_a, pattern)) != 16 * d ** 3:
                return False, f"J(2-{d}Θ²) != 16d³"
        j2 = igusa_J(embed_theta_into_spinor(ch_secant_ideal_threefold(d)))
        if j2 != d * (d + 1) ** 2:
            return False, f"J(α+β) != d(d+1)² at d={d}"
        if not _is_square(Fraction(16 * d ** 3) * j2):
            return False, f"J values disagree on the quadratic field at d={d}"
    return True, "quartic fixtures for d = 1..10 (50 exact values)"


def _check_igusa_spin_invariance(rng, full):
    refs = [embed_theta_into_spinor(ch_secant_ideal_threefold(2)),
            Ext.one(6) + e_star(1, 4) + e_star(2, 5) + e_star(3, 6) * Fraction(3)]
    base = [igusa_J(w) for w in refs]
    count = 100 if full else 20
    for k in range(count):
        g = _random_spin(rng, 3)
        for w, j0 in zip(refs, base):
            if igusa_J(g.act(w)) != j0:
                return False, f"J moved under seeded Spin element #{k}"
    return True, f"J fixed by {count} seeded Spin elements on 2 reference spinors"


# -- clifford ------------------------------------------------------------------------


def _check_defining_relation(rng, full):
    for n in (1, 2, 3):
        for a in range(4 * n):
            va = CliffordElement.word(n, 1 << a)
            for b in range(4 * n):
                vb = CliffordElement.word(n, 1 << b)
                pair = Fraction(1) if a != b and a % (2 * n) == b % (2 * n) else Fraction(0)
                for m in range(1 << (2 * n)):
                    s = Ext.basis(2 * n, m)
                    lhs = va.act(vb.act(s)) + vb.act(va.act(s))
                    if lhs != s * pair:
                        return False, f"anticommutator off at n={n}, pair ({a},{b})"
    return True, "anticommutators on all generator pairs, n = 1..3 exhaustive"


def _check_module_rank(rng, full):
    for n in (1, 2):
        dim = 1 << (2 * n)
        rows = []
        for wmask in range(1 << (4 * n)):
            mat = m_matrix(CliffordElement.word(n, wmask))
            rows.append([mat[i][j] for i in range(dim) for j in range(dim)])
        if rank(rows) != 1 << (4 * n):
            return False, f"word-action matrix rank deficient at n={n}"
    return True, "algebra-to-endomorphism map has full rank 2^(4n), n = 1, 2"


def _check_wedge_adjoint(rng, full):
    count = 1000 if full else 200
    for k in range(count):
        n = rng.choice((1, 2, 3))
        coords = [Fraction(rng.randint(-2, 2)) for _ in range(4 * n)]
        v = CliffordElement.vector(n, coords)
        s = _rand_spinor(rng, n)
        t = _rand_spinor(rng, n)
        if mukai_pairing(v.act(s), t) != mukai_pairing(s, v.act(t)):
            return False, f"self-adjointness failed on sample #{k} (n={n})"
    return True, f"(m_v s, t) = (s, m_v t) on {count} seeded samples, n <= 3"


# -- chevalley -----------------------------------------------------------------------


def _check_two_path(rng, full):
    for n in (1, 2):
        for kmask in range(1 << (2 * n)):
            for lmask in range(1 << (2 * n)):
                closed = tilde_varphi_closed(n, kmask, lmask)
                composite = psi(varphi(Ext.basis(2 * n, kmask), Ext.basis(2 * n, lmask)))
                if closed != composite:
                    return False, f"paths disagree at n={n}, ({kmask},{lmask})"
    extra = ""
    if full:
        n = 3
        for _ in range(200):
            kmask = rng.randrange(1 << (2 * n))
            lmask = rng.randrange(1 << (2 * n))
            if tilde_varphi_closed(n, kmask, lmask) != psi(varphi(Ext.basis(2 * n, kmask), Ext.basis(2 * n, lmask))):
                return False, f"paths disagree at n=3, ({kmask},{lmask})"
        extra = " + 200 seeded pairs at n = 3"
    return True, "closed form equals the composite on all basis pairs, n <= 2" + extra


def _check_filtration(rng, full):
    for n in (1, 2, 3):
        pt, one = spinor_point_class(n), Ext.one(2 * n)
        a, b = tilde_varphi(pt, one), tilde_varphi(one, pt)
        low = a - b * Fraction((-1) ** n)
        high = a + b * Fraction((-1) ** n)
        if low.max_degree() != 4 * n - 2:
            return False, f"low combination misses degree 4n-2 at n={n}"
        if high.max_degree() != 4 * n:
            return False, f"high combination misses degree 4n at n={n}"
    return True, "filtration degrees 4n-2 / 4n realized exactly, n = 1..3"


def _check_rank_one(rng, full):
    for n in (1, 2):
        dim = 1 << (2 * n)
        sign = Fraction((-1) ** n)
        for sm in range(dim):
            s = Ext.basis(2 * n, sm)
            for tm in range(dim):
                t = Ext.basis(2 * n, tm)
                c = varphi(s, t)
                for xm in range(dim):
                    x = Ext.basis(2 * n, xm)
                    if c.act(x) != s * (sign * mukai_pairing(t, x)):
                        return False, f"rank-one action off at n={n}, ({sm},{tm},{xm})"
    return True, "rank-one endomorphism identity exhaustive, n <= 2"


def _check_duality_sign(rng, full):
    for n in (1, 2):
        full_mask = (1 << (2 * n)) - 1
        for kmask in range(full_mask + 1):
            for lmask in range(full_mask + 1):
                x = Ext.basis(4 * n, kmask | (lmask << (2 * n)))
                k, l = kmask.bit_count(), lmask.bit_count()
                d = k + l
                sgn = merge_sign(lmask, full_mask ^ lmask) * merge_sign(kmask, full_mask ^ kmask)
                if (k * l) % 2:
                    sgn = -sgn
                if (d * (d + 1) // 2) % 2:
                    sgn = -sgn
                target = (full_mask ^ lmask) | ((full_mask ^ kmask) << (2 * n))
                if duality_transport(x, shifted=False) != Ext.basis(4 * n, target) * Fraction(sgn):
                    return False, f"signed duality off at n={n}, ({kmask},{lmask})"
    return True, "block duality = signed complement on all monomials, n <= 2"


def _check_orlov_round_trip(rng, full):
    for n in (1, 2):
        dim = 1 << (2 * n)
        for sm in range(dim):
            s = Ext.basis(2 * n, sm)
            for tm in range(dim):
                t = Ext.basis(2 * n, tm)
                if orlov_inverse(orlov_phi(s, t)) != tensor_kernel(s, t):
                    return False, f"round trip broke at n={n}, ({sm},{tm})"
        for _ in range(3):
            s, t = _rand_spinor(rng, n), _rand_spinor(rng, n)
            if orlov_inverse(orlov_phi(s, t)) != tensor_kernel(s, t):
                return False, f"round trip broke on a dense sample at n={n}"
    return True, "kernel recovery inverts the correspondence map, n <= 2"


# -- twists --------------------------------------------------------------------------


def _reflection_pairs_n1():
    pools: dict[int, list] = {2: [], -2: []}
    for code in range(3 ** 4):
        c, v = code, []
        for _ in range(4):
            v.append(Fraction(c % 3 - 1))
            c //= 3
        p = 2 * (v[0] * v[2] + v[1] * v[3])
        if p in (2, -2):
            pools[int(p)].append(v)
    for sign in (2, -2):
        for v1 in pools[sign]:
            for v2 in pools[sign]:
                yield v1, v2


def _check_twist_reflections(rng, full):
    pairs = list(_reflection_pairs_n1())
    chosen = pairs if full else pairs[::8]
    for v1, v2 in chosen:
        if not twist_identity_check(spin_from_pair(1, v1, v2))[0]:
            return False, f"twist identity failed for reflection pair {v1}, {v2}"
    return True, f"twist identity on {len(chosen)} reflection pairs at n = 1"


def _check_twist_families(rng, full):
    for n in (1, 2):
        for c in (1, -1, 2):
            xi = Ext.zero(4 * n)
            for i in range(1, n + 1):
                m = (1 << e_bit(n, 2 * i - 1)) | (1 << e_bit(n, 2 * i))
                xi = xi + Ext.basis(4 * n, m) * Fraction(c)
            g = spin_exp_even_nilpotent(bivector_lift(n, xi))
            if not twist_identity_check(g)[0]:
                return False, f"twist identity failed for exp({c}Θ) at n={n}"
    count = 50 if full else 8
    for k in range(count):
        if not twist_identity_check(_random_spin(rng, 2))[0]:
            return False, f"twist identity failed on seeded element #{k} at n=2"
    return True, f"polarization exponentials (n <= 2) and {count} seeded elements at n = 2"


def _check_twist_cocycle(rng, full):
    for n, count in ((1, 20), (2, 6)):
        for k in range(count):
            g1, g2 = _random_spin(rng, n), _random_spin(rng, n)
            if twist_of(g1 * g2) != twist_of(g1) + rho_wedge(g1, twist_of(g2)):
                return False, f"cocycle rule failed on pair #{k} at n={n}"
    return True, "twist of a product follows the cocycle rule, n = 1, 2"


# -- weil ----------------------------------------------------------------------------


def _weil_grid(full):
    grid = [(n, d) for n in (1, 2) for d in (1, 2, 3)]
    if full:
        grid += [(3, d) for d in (1, 2, 3, 5)]
    return grid


def _check_cm_certificates(rng, full):
    grid = _weil_grid(full)
    for n, d in grid:
        C = cm_from_secant(secant_from_polarization(n, d))
        sig = gram_signature(real_gram(hermitian_gram(C)))
        if sig != (2 * n, 2 * n):
            return False, f"hermitian signature {sig} at n={n}, d={d}"
    return True, f"multiplier certificates and split signature on {len(grid)} (n, d) pairs"


def _f_block_basis(n: int) -> list[list[Fraction]]:
    """The dual half of the standard basis, which spans V over the field."""
    return [[Fraction(1 if i == 2 * n + j else 0) for i in range(4 * n)]
            for j in range(2 * n)]


def _check_hermitian_det(rng, full):
    for n, d in _weil_grid(full):
        C = cm_from_secant(secant_from_polarization(n, d))
        if discriminant_H(C, _f_block_basis(n)) != Fraction((-1) ** n * d ** (3 * n)):
            return False, f"hermitian determinant off at n={n}, d={d}"
    return True, "det H = (-1)^n d^(3n) on the dual half basis"


def _check_metric_definite(rng, full):
    ns = (2, 3) if full else (2,)
    for n in ns:
        for d in (1, 2, 3):
            C = cm_from_secant(secant_from_polarization(n, d))
            I = standard_complex_structure(n)
            if g_definiteness(C, I) != "negative":
                return False, f"polarization metric not negative definite at n={n}, d={d}"
    return True, f"-g positive definite for n in {ns}, d = 1..3"


def _check_centralizer_dims(rng, full):
    ns = (1, 2, 3) if full else (1, 2)
    for n in ns:
        C = cm_from_secant(secant_from_polarization(n, 1))
        I = standard_complex_structure(n)
        dims = centralizer_dims(C, I)
        if dims != (4 * n * n - 1, 2 * n * n - 1):
            return False, f"centralizer dimensions {dims} at n={n}"
    return True, f"centralizer dimensions (4n²-1, 2n²-1) for n in {ns}"


# -- thetaring -----------------------------------------------------------------------


def _chi_closed(n, d, a, b, q, tau):
    if n == 2:
        return -2 * q * q * (a * a * tau * tau * d + b * b)
    if n == 3:
        return 0
    return 8 * d * q ** 4 * tau * tau * (a * a * tau * tau * d + b * b)


def _check_euler_table(rng, full):
    checked = 0
    for n in (2, 3, 4):
        for d in (1, 2, 3):
            for q in (1, 2):
                for tau in (1, 2):
                    al, be = alpha_beta(n, d, 0, tau, q)
                    for a in (0, 1, 2):
                        for b in (0, 1, 2):
                            v = al.scale(a) + be.scale(b)
                            if euler_pairing(v, v) != _chi_closed(n, d, a, b, q, tau):
                                return False, f"pairing table off at n={n}, d={d}, (a,b)=({a},{b})"
                            checked += 1
    return True, f"self-pairing closed forms on {checked} parameter tuples, n = 2..4"


def _check_exp_identity(rng, full):
    for k in range(20):
        n = rng.choice((1, 2, 3, 4))
        d = rng.choice((1, 2, 3, 5))
        rho_v = rng.randint(-3, 3)
        tau_v = rng.choice((1, 2, 3))
        q = rng.choice((1, 2, 3))
        al, be = alpha_beta(n, d, rho_v, tau_v, q)
        kval = (Fraction(rho_v) + sqrt_minus(d) * tau_v) / q
        lhs = texp(n, kval).scale(Fraction(q) ** n)
        rhs = al + be.scale(sqrt_minus(d) * tau_v)
        if lhs != rhs:
            return False, f"exponential identity failed on tuple #{k}"
    return True, "q^n exp(kΘ) = α + τ√-d·β on 20 seeded parameter tuples"


def _check_genus4_forms(rng, full):
    for d in range(1, 11):
        for a3 in range(-3, 2):
            a0, a1, a2 = solve_genus4_coeffs(d, a3)
            if a2 != d + a3 * a3:
                return False, f"a2 closed form off at (d,a3)=({d},{a3})"
            if a1 != 2 * (d + a3 * a3) * (1 - a3):
                return False, f"a1 closed form off at (d,a3)=({d},{a3})"
            if a0 != (a3 * a3 + d) * (6 * a3 * a3 - 6 * a3 + 2 * d):
                return False, f"a0 closed form off at (d,a3)=({d},{a3})"
    if solve_genus4_coeffs(1, 0) != (2, 2, 1):
        return False, "point fixture (d,a3)=(1,0) failed"
    for d in (1, 2, 3):
        if solve_genus4_coeffs(d, 1) != (2 * d * (d + 1), 0, d + 1):
            return False, f"point fixture (d,1) failed at d={d}"
    return True, "curve-count solver matches its closed forms, d = 1..10, a3 = -3..1"


def _check_secant_membership(rng, full):
    for d in (1, 2, 3):
        root = sqrt_minus(d)
        cp = (1 + 1 / root) / 2
        cm = (1 - 1 / root) / 2
        target = _exp_line(3, d) * cp + _exp_line(3, d, -1) * cm
        if embed_theta_into_spinor(ch_secant_ideal_threefold(d)) != target:
            return False, f"α+β left the secant lines at d={d}"
    return True, "α+β is an exact combination of exp(±√-d·Θ), d = 1..3"


# -- hodgemodel ----------------------------------------------------------------------


def _check_kernel_ranks(rng, full):
    for d in (1, 2, 3, 4, 5):
        ch = ch_secant_ideal_threefold(d)
        r, k, basis = annihilator_kernel(ch)
        if (r, k) != (6, 9):
            return False, f"secant kernel ({r},{k}) at d={d}"
        target = hodge_of_theta(ch)
        if any(not ht_contract(h, target).is_zero() for h in basis):
            return False, f"reported kernel fails to annihilate at d={d}"
    for tag, ch, want in (("unit", ThetaPoly.one(3), (3, 12)),
                          ("point", ThetaPoly.point(3), (3, 12)),
                          ("line bundle", texp(3, 1), (3, 12)),
                          ("surface ideal", ThetaPoly.one(2) - ThetaPoly.point(2).scale(2), (1, 5))):
        r, k, _ = annihilator_kernel(ch)
        if (r, k) != want:
            return False, f"{tag} kernel ({r},{k}) != {want}"
    return True, "contraction ranks (6,9), (3,12), (1,5) across the fixture family"


def _check_product_splits(rng, full):
    ds = (1, 2, 3) if full else (1,)
    for d in ds:
        ch = ch_secant_ideal_threefold(d)
        pk = product_annihilator(ch, ch)
        if (pk.total_dim, pk.rank, pk.kernel_dim) != (66, 48, 18):
            return False, f"product kernel dims off at d={d}"
        if pk.factor_dims != (9, 9) or not pk.splits or pk.degenerate:
            return False, f"product kernel does not split as 9+9 at d={d}"
    unit = product_annihilator(ThetaPoly.one(3), ThetaPoly.one(3))
    if (unit.total_dim, unit.rank, unit.kernel_dim, unit.splits) != (66, 15, 51, False):
        return False, "unit product kernel dims off"
    if not product_annihilator(ThetaPoly.one(3), ThetaPoly.zero(3)).degenerate:
        return False, "zero factor not flagged degenerate"
    return True, f"product kernel 18 = 9 + 9 inside dim 66 for d in {ds}"


# -- spinors -------------------------------------------------------------------------


def _check_secant_construction(rng, full):
    for n in (1, 2, 3):
        for d in (1, 2, 3):
            sec = secant_from_polarization(n, d)
            if not sec.is_cm or sec.field_d() != squarefree_part(d)[0]:
                return False, f"field mismatch at n={n}, d={d}"
            if sec.line1.map_coeffs(quad_conj) != sec.line2:
                return False, f"lines not conjugate at n={n}, d={d}"
    for d in (1, 2, 3):
        al, be = alpha_beta(3, d, 0, 1, 1)
        ea, eb = embed_theta_into_spinor(al), embed_theta_into_spinor(be)
        if (mukai_pairing(ea, ea), mukai_pairing(ea, eb), mukai_pairing(eb, eb)) != (0, -4 * d, 0):
            return False, f"plane pairing matrix off at d={d}"
    return True, "secant bundles for n <= 3, d <= 3; plane Gram (0, -4d; -4d, 0)"


def _check_secant_extraction(rng, full):
    ds = (1, 2) if full else (1,)
    for d in ds:
        two_a = ThetaPoly.one(3).scale(2) - ThetaPoly.monomial(3, 2, d)
        sec = secant_plane(embed_theta_into_spinor(two_a))
        df = sec.field_d()
        plus, minus = _exp_line(3, df), _exp_line(3, df, -1)
        hit_plus = _proportional(sec.line1, plus) or _proportional(sec.line2, plus)
        hit_minus = _proportional(sec.line1, minus) or _proportional(sec.line2, minus)
        if not (hit_plus and hit_minus and df == squarefree_part(d)[0]):
            return False, f"extracted lines are not exp(±√-d·Θ) at d={d}"
        if len(plane_stabilizer(3, list(sec.plane))) != 35:
            return False, f"plane stabilizer dimension off at d={d}"
        other = secant_plane(embed_theta_into_spinor(ch_secant_ideal_threefold(d)))
        if not (_proportional(other.line1, plus) or _proportional(other.line1, minus)):
            return False, f"α+β extraction found different lines at d={d}"
    return True, f"extraction recovers exp(±√-d·Θ) with stabilizer dim 35, d in {ds}"


def _check_hodge_weil_projection(rng, full):
    grid = [(1, 1), (2, 1), (2, 2), (2, 3)]
    if full:
        grid += [(3, 1), (3, 2), (3, 3)]
    for n, d in grid:
        sec = secant_from_polarization(n, d)
        for line, other in ((sec.line1, sec.w2), (sec.line2, sec.w1)):
            y = orlov_phi(line, line.tau())
            if min(y.degrees()) != 2 * n:
                return False, f"projection misses weight 2n at n={n}, d={d}"
            t = top_wedge([Ext.vector(row) for row in other.basis()])
            if not _proportional(y.degree_part(2 * n), t):
                return False, f"projection not on the partner top wedge at n={n}, d={d}"
    return True, f"pure-spinor squares project onto partner top wedges on {len(grid)} (n, d) pairs"


def _check_kappa_invariance(rng, full):
    cases = []
    al1, be1 = alpha_beta(1, 1, 0, 1, 1)
    cases.append((1, embed_theta_into_spinor(al1 + be1), 1))
    for d in (1, 2):
        al2, _ = alpha_beta(2, d, 0, 1, 1)
        cases.append((2, embed_theta_into_spinor(al2), d))
    for n, ch, d in cases:
        k = kappa(orlov_phi(ch, ch))
        sec = secant_from_polarization(n, d)
        for xi in plane_stabilizer(n, list(sec.plane)):
            if not endo_derivation(so_matrix_of_bivector(n, xi), k).is_zero():
                return False, f"κ class moved under the stabilizer at n={n}, d={d}"
    return True, "κ classes are stabilizer-invariant at n = 1 and n = 2, d <= 2"


def _check_kappa_rank_independence(rng, full):
    ds = (1, 2, 3) if full else (1,)
    for d in ds:
        al, be = alpha_beta(3, d, 0, 1, 1)
        ch = embed_theta_into_spinor(al + be)
        E = orlov_phi(ch, ch)
        if E.scalar_part() != 8 * d:
            return False, f"kernel rank {E.scalar_part()} != 8d at d={d}"
        k6 = kappa(E).degree_part(6)
        h = ample_class(cm_from_secant(secant_from_polarization(3, d)))
        h3 = h.wedge(h).wedge(h)
        sup = sorted(set(k6.support()) | set(h3.support()))
        if rank([[k6.coeff(m) for m in sup], [h3.coeff(m) for m in sup]]) != 2:
            return False, f"κ₃ proportional to h³ at d={d}"
    return True, f"kernel rank 8d and κ₃ independent of h³ for d in {ds}"


# -- the battery ---------------------------------------------------------------------


BATTERY: list[Check] = [
    Check("igusa-quartic-fixtures", "igusa", True, _check_igusa_quartic_fixtures),
    Check("igusa-spin-invariance", "igusa", True, _check_igusa_spin_invariance),
    Check("clifford-defining-relation", "clifford", True, _check_defining_relation),
    Check("clifford-module-rank", "clifford", True, _check_module_rank),
    Check("clifford-wedge-adjoint", "clifford", True, _check_wedge_adjoint),
    Check("transport-two-path", "chevalley", True, _check_two_path),
    Check("transport-filtration", "chevalley", True, _check_filtration),
    Check("transport-rank-one", "chevalley", True, _check_rank_one),
    Check("duality-sign-lemma", "chevalley", True, _check_duality_sign),
    Check("orlov-round-trip", "chevalley", True, _check_orlov_round_trip),
    Check("twist-reflection-identity", "chevalley", True, _check_twist_reflections),
    Check("twist-exp-families", "chevalley", True, _check_twist_families),
    Check("twist-cocycle", "chevalley", True, _check_twist_cocycle),
    Check("weil-cm-certificates", "weil", True, _check_cm_certificates),
    Check("weil-hermitian-det", "weil", True, _check_hermitian_det),
    Check("weil-metric-definite", "weil", True, _check_metric_definite),
    Check("weil-centralizer-dims", "weil", True, _check_centralizer_dims),
    Check("theta-euler-table", "thetaring", True, _check_euler_table),
    Check("theta-exp-identity", "thetaring", True, _check_exp_identity),
    Check("theta-genus4-forms", "thetaring", True, _check_genus4_forms),
    Check("theta-secant-membership", "thetaring", True, _check_secant_membership),
    Check("contraction-kernel-ranks", "hodgemodel", True, _check_kernel_ranks),
    Check("contraction-product-splits", "hodgemodel", True, _check_product_splits),
    Check("secant-construction", "spinors", True, _check_secant_construction),
    Check("secant-extraction", "spinors", True, _check_secant_extraction),
    Check("hodge-weil-projection", "spinors", True, _check_hodge_weil_projection),
    Check("kappa-invariance", "chevalley", True, _check_kappa_invariance),
    Check("kappa-rank-independence", "chevalley", True, _check_kappa_rank_independence),
]


def run_battery(level: str, seed: int, max_workers: int = 1) -> list[CheckResult]:
    """Run the battery at the requested level ('quick' or 'full').

    The result order always follows the battery order, and each check's random
    stream depends only on (seed, name), so the outcome is reproducible for
    any worker count.
    """
    full = level == "full"
    selected = [c for c in BATTERY if full or c.quick]

    def run_one(check: Check) -> CheckResult:
        rng = random.Random(f"{seed}:{check.name}")
        start = time.perf_counter()
        try:
            passed, detail = check.run(rng, full)
        except Exception as exc:  # a crash is a failure, not an abort
            passed, detail = False, f"raised {type(exc).__name__}: {exc}"
        return CheckResult(check.name, check.group, passed, detail,
                           time.perf_counter() - start)

    if max_workers <= 1:
        return [run_one(c) for c in selected]
    with ThreadPoolExecutor(max_workers=max_workers) as pool:
        return list(pool.map(run_one, selected))
