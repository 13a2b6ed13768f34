"""The truncated ring ℚ[Θ]/(Θⁿ⁺¹) of powers of a principal polarization.

Elements model the even-diagonal part ⊕ H^{k,k} of an abelian n-fold whose
rational Hodge classes are generated by one theta divisor: the integral of
Σ cₖΘᵏ is n!·cₙ, so the point class is Θⁿ/n!.  The module provides the
exponential, the standard two-parameter family of eigenclass pairs (α, β),
the Euler pairing, an exact solver for the genus-four coefficient system,
and the substitution homomorphism into the spinor module that identifies a
theta polynomial with an even exterior form.

Coefficients are Fraction or one imaginary quadratic extension; everything
is exact.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial

from .exterior import Ext
from .lattice import theta_adjacent
from .scalars import QuadExt, as_rat

_SCALARS = (int, Fraction, QuadExt)


class ThetaPoly:
    """A polynomial Σ cₖΘᵏ with k ≤ n, held as the coefficient tuple c₀..cₙ.

    Multiplication truncates at Θⁿ⁺¹.  Scalars act through ``*`` as well;
    ``p * q`` with another ThetaPoly is the ring product.
    """

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs):
        coeffs = [Fraction(c) if isinstance(c, int) else c for c in coeffs]
        if len(coeffs) != n + 1:
            raise ValueError(f"need {n + 1} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("ThetaPoly is immutable")

    @classmethod
    def zero(cls, n: int) -> "ThetaPoly":
        return cls(n, [Fraction(0)] * (n + 1))

    @classmethod
    def one(cls, n: int) -> "ThetaPoly":
        return cls(n, [Fraction(1)] + [Fraction(0)] * n)

    @classmethod
    def theta(cls, n: int) -> "ThetaPoly":
        return cls.monomial(n, 1)

    @classmethod
    def monomial(cls, n: int, k: int, c=1) -> "ThetaPoly":
        if not 0 <= k <= n:
            raise ValueError("exponent out of range")
        coeffs = [Fraction(0)] * (n + 1)
        coeffs[k] = c
        return cls(n, coeffs)

    @classmethod
    def point(cls, n: int) -> "ThetaPoly":
        """The point class Θⁿ/n!, the unit of integration."""
        return cls.monomial(n, n, Fraction(1, factorial(n)))

    def _check(self, other: "ThetaPoly"):
        if self.n != other.n:
            raise ValueError("theta polynomials truncated at different degrees")

    def __add__(self, other):
        if isinstance(other, _SCALARS):
            other = ThetaPoly.monomial(self.n, 0, other)
        if not isinstance(other, ThetaPoly):
            return NotImplemented
        self._check(other)
        return ThetaPoly(self.n, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return ThetaPoly(self.n, [-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (ThetaPoly, *_SCALARS)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "ThetaPoly":
        return ThetaPoly(self.n, [c * x for x in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            return self.scale(other)
        if not isinstance(other, ThetaPoly):
            return NotImplemented
        self._check(other)
        n = self.n
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if i + j > n:
                    break
                if b:
                    out[i + j] = out[i + j] + a * b
        return ThetaPoly(n, out)

    def __rmul__(self, other):
        if isinstance(other, _SCALARS):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> "ThetaPoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("powers must be non-negative integers")
        out = ThetaPoly.one(self.n)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, _SCALARS):
            other = ThetaPoly.monomial(self.n, 0, other)
        if not isinstance(other, ThetaPoly):
            return NotImplemented
        return self.n == other.n and not any(
            a - b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((self.n, self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def tau(self) -> "ThetaPoly":
        """The Mukai reversal: Θᵏ is a degree-2k class, so cₖ ↦ (−1)ᵏ cₖ."""
        return ThetaPoly(self.n, [c if k % 2 == 0 else -c
                                  for k, c in enumerate(self.coeffs)])

    def integral(self):
        """∫ Σ cₖΘᵏ = n!·cₙ, normalized so the point class integrates to 1."""
        return factorial(self.n) * self.coeffs[self.n]

    def __repr__(self):
        return f"ThetaPoly({self.n}, {list(self.coeffs)!r})"

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            base = "1" if k == 0 else ("Th" if k == 1 else f"Th^{k}")
            terms.append(f"({c})*{base}" if k else f"({c})")
        return " + ".join(terms) if terms else "0"


def texp(n: int, c) -> ThetaPoly:
    """exp(cΘ) = Σ cᵏΘᵏ/k!, truncated at Θⁿ⁺¹."""
    return ThetaPoly(n, [c ** k * Fraction(1, factorial(k)) for k in range(n + 1)])


def alpha_beta(n: int, d, rho, tau, q) -> tuple[ThetaPoly, ThetaPoly]:
    """The rational class pair with qⁿ·exp(kΘ) = α + τ√−d·β at k = (ρ+τ√−d)/q.

    Splitting exp(kΘ) into its rational and √−d parts gives, in degree m,

        αₘ = Σⱼ (ρ/q)^{m−2j}/(m−2j)! · (−1)ʲ qⁿ⁻²ʲ (τ²d)ʲ / (2j)!
        βₘ = Σⱼ (ρ/q)^{m−1−2j}/(m−1−2j)! · (−1)ʲ qⁿ⁻¹⁻²ʲ (τ²d)ʲ / (2j+1)!
    """
    d, rho, tau, q = as_rat(d), as_rat(rho), as_rat(tau), as_rat(q)
    if q <= 0:
        raise ValueError("the denominator parameter must be positive")
    if not tau:
        raise ValueError("the imaginary parameter must be nonzero")
    r = rho / q
    t2d = tau * tau * d
    alpha, beta = [], []
    for m in range(n + 1):
        a = Fraction(0)
        for j in range(m // 2 + 1):
            a += (r ** (m - 2 * j) / factorial(m - 2 * j)
                  * (-1) ** j * q ** (n - 2 * j) * t2d ** j
                  / factorial(2 * j))
        alpha.append(a)
        b = Fraction(0)
        for j in range((m - 1) // 2 + 1) if m >= 1 else ():
            b += (r ** (m - 1 - 2 * j) / factorial(m - 1 - 2 * j)
                  * (-1) ** j * q ** (n - 1 - 2 * j) * t2d ** j
                  / factorial(2 * j + 1))
        beta.append(b)
    return ThetaPoly(n, alpha), ThetaPoly(n, beta)


def euler_pairing(v: ThetaPoly, w: ThetaPoly):
    """∫ τ(v)·w = n! Σᵢ (−1)ⁱ vᵢ w_{n−i}: the coefficient-level Euler form."""
    v._check(w)
    n = v.n
    total = Fraction(0)
    for i in range(n + 1):
        if v.coeffs[i] and w.coeffs[n - i]:
            total = total + (-1) ** i * v.coeffs[i] * w.coeffs[n - i]
    return factorial(n) * total


def ch_secant_ideal_threefold(d) -> ThetaPoly:
    """The Chern character 1 + Θ − (d/2)Θ² − d[pt] on a threefold, built as
    (1 − (d+1)(Θ²/2 − 2[pt]))·exp(Θ)."""
    d = as_rat(d)
    if d <= 0 or d.denominator != 1:
        raise ValueError("the pairing parameter must be a positive integer")
    n = 3
    half_sq = ThetaPoly.monomial(n, 2, Fraction(1, 2))
    core = ThetaPoly.one(n) - (half_sq - ThetaPoly.point(n) * 2) * (d + 1)
    return core * texp(n, 1)


# -- the genus-four coefficient system ------------------------------------------


def _subscheme_ch(a0, a1, a2) -> ThetaPoly:
    """ch of the structure sheaf of a0 points, a1 minimal curves, and a2
    minimal surfaces on an abelian fourfold, with the six-point pairwise
    surface intersection correction."""
    n = 4
    pt = ThetaPoly.point(n)
    curve = ThetaPoly.monomial(n, 3, Fraction(1, 6)) - pt * 3
    surface = (ThetaPoly.monomial(n, 2, Fraction(1, 2))
               - ThetaPoly.monomial(n, 3, Fraction(1, 3)) + pt * 3)
    pair_correction = pt * (-3 * a2 * (a2 - 1))
    return pt * a0 + curve * a1 + surface * a2 + pair_correction


def _twisted_ideal_ch(a0, a1, a2, a3) -> ThetaPoly:
    return (ThetaPoly.one(4) - _subscheme_ch(a0, a1, a2)) * texp(4, a3)


def solve_genus4_coeffs(d, a3) -> tuple[Fraction, Fraction, Fraction]:
    """The counts (a0, a1, a2) with ch(I_Z(a3Θ)) = α + a3·β on a fourfold.

    Each unknown enters its lowest coefficient equation affinely once the
    earlier ones are fixed, so the system is solved one degree at a time;
    the assembled character is then checked against the target in every
    degree.
    """
    d, a3 = as_rat(d), as_rat(a3)
    al, be = alpha_beta(4, d, 0, 1, 1)
    target = al + be * a3

    def affine_solve(k, f):
        c0 = f(Fraction(0)).coeffs[k]
        slope = f(Fraction(1)).coeffs[k] - c0
        if not slope:
            raise ValueError("inconsistent system: no unknown in this degree")
        return (target.coeffs[k] - c0) / slope

    a2 = affine_solve(2, lambda u: _twisted_ideal_ch(0, 0, u, a3))
    a1 = affine_solve(3, lambda u: _twisted_ideal_ch(0, u, a2, a3))
    a0 = affine_solve(4, lambda u: _twisted_ideal_ch(u, a1, a2, a3))
    if _twisted_ideal_ch(a0, a1, a2, a3) != target:
        raise ValueError("inconsistent system: solved counts do not reproduce "
                         "the target character")
    return a0, a1, a2


# -- substitution into the spinor module -----------------------------------------


def embed_theta_into_spinor(p: ThetaPoly, theta: Ext | None = None) -> Ext:
    """Substitute an even two-form for Θ and expand in the spinor module.

    The default pattern pairs adjacent generators, the one whose top power
    is +(2n)!/2ⁿ times the orientation class, so that the substitution
    intertwines ``integral`` with the top-coefficient functional.  Any other
    principal pattern (e.g. pairing the two halves of the block) can be
    passed explicitly.
    """
    n = p.n
    if n > 3:
        raise ValueError("substitution is kept to rank-six modules and below")
    if theta is None:
        theta = theta_adjacent(n)
    if theta.n_gen != 2 * n:
        raise ValueError("two-form lives on the wrong rank")
    out = Ext.zero(2 * n)
    power = Ext.one(2 * n)
    for k, c in enumerate(p.coeffs):
        if c:
            out = out + power * c
        if k < n:
            power = power.wedge(theta)
    return out


def spinor_integral(x: Ext):
    """The top-degree coefficient, matching ``ThetaPoly.integral`` under the
    default substitution."""
    return x.coeff((1 << x.n_gen) - 1)
