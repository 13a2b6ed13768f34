"""The Clifford algebra of the hyperbolic lattice and its spinor module.

Elements are stored as normal-ordered words in the 4n generators (e-block
before f-block, each generator at most once), encoded by the same bitmasks the
lattice module uses.  The defining relation is vw + wv = (v, w); since every
basis generator is isotropic and pairs only with its partner at bit distance
2n, left-multiplying a generator onto a word produces at most one crossing
term, which keeps products exact and fast.

The spinor module S is the exterior algebra on the e-block (an ``Ext`` on 2n
generators): e-generators act by wedging, f-generators by contraction.
"""
from __future__ import annotations

from fractions import Fraction

from .exterior import Ext, bits_ascending, contract_gen, wedge_gen
from .lattice import pairing
from .scalars import QuadExt

_SCALARS = (int, Fraction, QuadExt)


def _as_coords(n: int, v) -> list:
    if isinstance(v, Ext):
        if v.n_gen != 4 * n:
            raise ValueError("vector lives on the wrong lattice rank")
        if v != v.degree_part(1):
            raise ValueError("expected a degree-one element")
        return v.vector_coords()
    v = list(v)
    if len(v) != 4 * n:
        raise ValueError("vector lives on the wrong lattice rank")
    return v


def _gen_times_word(n: int, j: int, mask: int) -> list[tuple[int, int]]:
    """g_j · g_M as (mask, sign) terms: one crossing term when the partner of
    an f-generator sits inside the word, one insertion term when j is free."""
    terms = []
    if j >= 2 * n:
        partner = j - 2 * n
        if (mask >> partner) & 1:
            pre = (mask & ((1 << partner) - 1)).bit_count()
            terms.append((mask ^ (1 << partner), -1 if pre & 1 else 1))
    if not (mask >> j) & 1:
        below = (mask & ((1 << j) - 1)).bit_count()
        terms.append((mask | (1 << j), -1 if below & 1 else 1))
    return terms


class CliffordElement:
    """A finite sum of normal-ordered generator words with exact coefficients."""

    __slots__ = ("n", "_c")

    def __init__(self, n: int, coeffs: dict | None = None):
        self.n = n
        self._c = {}
        if coeffs:
            limit = 1 << (4 * n)
            for mask, c in coeffs.items():
                if not 0 <= mask < limit:
                    raise ValueError(f"word mask {mask} out of range for n={n}")
                if c:
                    acc = self._c.get(mask, 0) + c
                    if acc:
                        self._c[mask] = acc
                    elif mask in self._c:
                        del self._c[mask]

    # -- constructors ----------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "CliffordElement":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "CliffordElement":
        return cls(n, {0: Fraction(1)})

    @classmethod
    def scalar(cls, n: int, c) -> "CliffordElement":
        return cls(n, {0: c})

    @classmethod
    def word(cls, n: int, mask: int) -> "CliffordElement":
        return cls(n, {mask: Fraction(1)})

    @classmethod
    def vector(cls, n: int, v) -> "CliffordElement":
        coords = _as_coords(n, v)
        return cls(n, {1 << j: c for j, c in enumerate(coords) if c})

    @classmethod
    def from_words(cls, n: int, ext: Ext) -> "CliffordElement":
        """Reinterpret an exterior element's monomials as normal-ordered words.

        Canonical (independent of the word basis) exactly when the support
        stays inside one isotropic block, which is the only way it is used:
        embedding e-block forms like the polarization into the algebra.
        """
        if ext.n_gen == 2 * n:
            return cls(n, dict(ext.items()))
        if ext.n_gen == 4 * n:
            return cls(n, dict(ext.items()))
        raise ValueError("exterior element is on neither the spinor nor the lattice rank")

    # -- inspection ------------------------------------------------------------

    def items(self):
        return self._c.items()

    def coeff(self, mask: int):
        return self._c.get(mask, Fraction(0))

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def scalar_part(self):
        return self.coeff(0)

    def is_scalar(self) -> bool:
        return set(self._c) <= {0}

    def is_even(self) -> bool:
        return all(m.bit_count() % 2 == 0 for m in self._c)

    def is_odd(self) -> bool:
        return all(m.bit_count() % 2 == 1 for m in self._c)

    def is_vector(self) -> bool:
        return all(m.bit_count() == 1 for m in self._c)

    def vector_coords(self) -> list:
        if not self.is_vector():
            raise ValueError("element is not a vector")
        return [self.coeff(1 << j) for j in range(4 * self.n)]

    # -- linear structure --------------------------------------------------------

    def _check(self, other: "CliffordElement"):
        if self.n != other.n:
            raise ValueError("elements live over different lattices")

    def __add__(self, other):
        if isinstance(other, _SCALARS):
            other = CliffordElement.scalar(self.n, other)
        if not isinstance(other, CliffordElement):
            return NotImplemented
        self._check(other)
        out = dict(self._c)
        for m, c in other._c.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            elif m in out:
                del out[m]
        r = CliffordElement(self.n)
        r._c = out
        return r

    __radd__ = __add__

    def __neg__(self):
        r = CliffordElement(self.n)
        r._c = {m: -c for m, c in self._c.items()}
        return r

    def __sub__(self, other):
        if isinstance(other, (CliffordElement, *_SCALARS)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "CliffordElement":
        if not c:
            return CliffordElement(self.n)
        r = CliffordElement(self.n)
        r._c = {m: v * c for m, v in self._c.items()}
        return r

    def __eq__(self, other):
        if isinstance(other, _SCALARS):
            return (self - other).is_zero()
        if isinstance(other, CliffordElement):
            return self.n == other.n and (self - other).is_zero()
        return NotImplemented

    def __hash__(self):
        return hash((self.n, tuple(sorted(self._c.items(), key=lambda t: t[0]))))

    # -- products ----------------------------------------------------------------

    def _gen_mul(self, j: int) -> "CliffordElement":
        out: dict[int, object] = {}
        for mask, c in self._c.items():
            for m2, s in _gen_times_word(self.n, j, mask):
                term = c if s > 0 else -c
                acc = out.get(m2, 0) + term
                if acc:
                    out[m2] = acc
                elif m2 in out:
                    del out[m2]
        r = CliffordElement(self.n)
        r._c = out
        return r

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            return self.scale(other)
        if not isinstance(other, CliffordElement):
            return NotImplemented
        self._check(other)
        out = CliffordElement(self.n)
        for mask, c in self._c.items():
            term = other
            for j in _bits_descending(mask):
                term = term._gen_mul(j)
            out = out + term.scale(c)
        return out

    def __rmul__(self, other):
        if isinstance(other, _SCALARS):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> "CliffordElement":
        if not isinstance(k, int) or k < 0:
            raise ValueError("powers must be non-negative integers")
        out = CliffordElement.one(self.n)
        base = self
        for _ in range(k):
            out = out * base
        return out

    def tau(self) -> "CliffordElement":
        """The reversal anti-automorphism: each word multiplied back together
        in the opposite order (re-normal-ordering may create crossing terms)."""
        out = CliffordElement(self.n)
        for mask, c in self._c.items():
            acc = CliffordElement.one(self.n)
            for j in bits_ascending(mask):
                acc = acc._gen_mul(j)
            out = out + acc.scale(c)
        return out

    def alpha(self) -> "CliffordElement":
        """The parity involution (odd words negated)."""
        r = CliffordElement(self.n)
        r._c = {m: (-c if m.bit_count() & 1 else c) for m, c in self._c.items()}
        return r

    def star(self) -> "CliffordElement":
        """Clifford conjugation x* = alpha(tau(x)); inverts Spin elements."""
        return self.tau().alpha()

    # -- the spinor representation -------------------------------------------------

    def act(self, s: Ext) -> Ext:
        """The module action on S = exterior algebra of the e-block."""
        n = self.n
        if s.n_gen != 2 * n:
            raise ValueError("spinor lives on the wrong rank")
        out = Ext.zero(2 * n)
        for mask, c in self._c.items():
            term = s
            for j in _bits_descending(mask):
                if j < 2 * n:
                    term = wedge_gen(j, term)
                else:
                    term = contract_gen(j - 2 * n, term)
                if term.is_zero():
                    break
            out = out + term * c
        return out

    def act_adjoint(self, s: Ext) -> Ext:
        """The action conjugated by the degreewise sign tau of S — the adjoint
        of ``act`` for the integral cup-product pairing."""
        return self.act(s.tau()).tau()

    def __repr__(self):
        if not self._c:
            return "0"
        n2 = 2 * self.n
        parts = []
        for m in sorted(self._c):
            word = "".join(
                (f"e{j + 1}" if j < n2 else f"f{j - n2 + 1}") for j in bits_ascending(m)
            ) or "1"
            parts.append(f"{self._c[m]}*{word}")
        return " + ".join(parts)


def _bits_descending(mask: int):
    while mask:
        j = mask.bit_length() - 1
        yield j
        mask ^= 1 << j


# -- algebra-level maps -----------------------------------------------------------


def norm_char(g: CliffordElement):
    """The norm g·tau(g); scalar exactly on the Clifford group."""
    prod = g * g.tau()
    if not prod.is_scalar():
        raise ValueError("norm is not scalar: element is outside the Clifford group")
    return prod.scalar_part()


def mukai_pairing(s: Ext, t: Ext):
    """(s, t) = top coefficient of tau(s) ∧ t on the spinor module."""
    return s.tau().wedge(t).top_coeff()


def integral_pairing(s: Ext, t: Ext):
    """∫ s ∧ t: the plain cup-product integral on the spinor module."""
    return s.wedge(t).top_coeff()


def lie_action(n: int, x, y, s: Ext) -> Ext:
    """½(m_x m_y − m_y m_x)(s) for vectors x, y — the spin Lie algebra action
    of the bivector x ∧ y."""
    a = CliffordElement.vector(n, x)
    b = CliffordElement.vector(n, y)
    return (a.act(b.act(s)) - b.act(a.act(s))) / 2


def lie_action_pair(n: int, i: int, j: int, s: Ext) -> Ext:
    """lie_action for the basis bivector g_i ∧ g_j, applied without building
    algebra elements (the stabilizer solves call this tens of thousands of times)."""
    def gen(k: int, x: Ext) -> Ext:
        return wedge_gen(k, x) if k < 2 * n else contract_gen(k - 2 * n, x)

    return (gen(i, gen(j, s)) - gen(j, gen(i, s))) / 2


def bivector_lift(n: int, xi: Ext) -> CliffordElement:
    """The spin-algebra lift of a bivector: a ∧ b ↦ ½[a, b] = ab − ½(a, b).

    Its ``act`` equals the Lie action of the bivector, and its Clifford
    commutator with a vector is the infinitesimal rotation (b,x)a − (a,x)b.
    """
    if xi.n_gen != 4 * n:
        raise ValueError("bivector does not live over the full lattice")
    out = CliffordElement.zero(n)
    for mask, c in xi.items():
        if mask.bit_count() != 2:
            raise ValueError("element is not a bivector")
        out = out + CliffordElement(n, {mask: c})
        i = (mask & -mask).bit_length() - 1
        j = mask.bit_length() - 1
        if j == i + 2 * n:
            out = out - CliffordElement.scalar(n, c / 2)
    return out


def m_matrix(a: CliffordElement) -> list[list]:
    """The matrix of ``act`` on the 2^{2n} spinor basis (columns = images)."""
    n = a.n
    dim = 1 << (2 * n)
    cols = []
    for u in range(dim):
        img = a.act(Ext.basis(2 * n, u))
        cols.append([img.coeff(v) for v in range(dim)])
    return [[cols[u][v] for u in range(dim)] for v in range(dim)]


# -- Spin elements ------------------------------------------------------------------


class SpinElement:
    """A certified element of Spin(V): even, g·g* = 1, and conjugation
    preserves V.  Certification is eager and exact; the inverse (= g*) and the
    4n×4n conjugation matrix are cached at construction."""

    __slots__ = ("g", "inverse", "matrix")

    def __init__(self, g: CliffordElement):
        if not g.is_even():
            raise ValueError("Spin elements must be even")
        gstar = g.star()
        if g * gstar != CliffordElement.one(g.n):
            raise ValueError("g·g* ≠ 1: element is not in Spin")
        n = g.n
        cols = []
        for j in range(4 * n):
            image = g * CliffordElement.word(n, 1 << j) * gstar
            if not (image.is_vector() or image.is_zero()):
                raise ValueError("conjugation does not preserve V: element is not in Spin")
            cols.append([image.coeff(1 << k) for k in range(4 * n)])
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "inverse", gstar)
        object.__setattr__(self, "matrix", [[cols[j][k] for j in range(4 * n)]
                                            for k in range(4 * n)])

    def __setattr__(self, name, value):
        raise AttributeError("SpinElement is immutable")

    @property
    def n(self) -> int:
        return self.g.n

    def rho(self, v) -> list:
        """The vector representation: coordinates of g·v·g⁻¹."""
        coords = _as_coords(self.g.n, v)
        return [sum((row[j] * coords[j] for j in range(len(coords))
                     if coords[j]), Fraction(0)) for row in self.matrix]

    def act(self, s: Ext) -> Ext:
        return self.g.act(s)

    def act_adjoint(self, s: Ext) -> Ext:
        return self.g.act_adjoint(s)

    def __mul__(self, other):
        if isinstance(other, SpinElement):
            return SpinElement(self.g * other.g)
        return NotImplemented

    def __repr__(self):
        return f"SpinElement({self.g!r})"


def spin_from_pair(n: int, v1, v2) -> SpinElement:
    """The Spin element v₁·v₂ for two vectors of equal self-pairing ±2."""
    q1 = pairing(n, v1, v1)
    q2 = pairing(n, v2, v2)
    if q1 != q2 or q1 not in (2, -2):
        raise ValueError(
            f"spin_from_pair needs equal self-pairings in {{2, -2}}, got {q1} and {q2}"
        )
    return SpinElement(CliffordElement.vector(n, v1) * CliffordElement.vector(n, v2))


def spin_exp_even_nilpotent(u: CliffordElement) -> SpinElement:
    """exp(u) for an even nilpotent u, certified as a Spin element."""
    if not u.is_even():
        raise ValueError("exponent must be even")
    out = CliffordElement.one(u.n)
    term = CliffordElement.one(u.n)
    for k in range(1, 4 * u.n + 3):
        term = (term * u).scale(Fraction(1, k))
        if term.is_zero():
            return SpinElement(out)
        out = out + term
    raise ValueError("element is not nilpotent: exponential series does not terminate")
