"""Exterior algebras over exact scalars.

Elements of ∧*F for a free module F with ordered basis g_0 < ... < g_{N-1} are
stored sparsely as {bitmask: coefficient}; bit j of a mask means g_j is present,
and a monomial's generators are always implicitly in increasing order.
Coefficients are Fraction or QuadExt.
"""
from __future__ import annotations

from fractions import Fraction

from .scalars import QuadExt

_SCALARS = (int, Fraction, QuadExt)


def merge_sign(k: int, l: int) -> int:
    """Sign of sorting the concatenation g_K g_L; 0 when the masks overlap."""
    if k & l:
        return 0
    inversions = 0
    m = l
    while m:
        j = (m & -m).bit_length() - 1
        inversions += (k >> (j + 1)).bit_count()
        m &= m - 1
    return -1 if inversions & 1 else 1


def complement_sign(k: int, full: int) -> int:
    """merge_sign(k, full ^ k): orientation of splitting the top cell at k."""
    return merge_sign(k, full ^ k)


def bits_ascending(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Ext:
    """An element of the exterior algebra on n_gen generators."""

    __slots__ = ("n_gen", "_c")

    def __init__(self, n_gen: int, coeffs: dict | None = None):
        self.n_gen = n_gen
        self._c = {}
        if coeffs:
            for mask, c in coeffs.items():
                if c:
                    self._c[mask] = self._c.get(mask, 0) + c
                    if not self._c[mask]:
                        del self._c[mask]

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, n_gen: int) -> "Ext":
        return cls(n_gen)

    @classmethod
    def one(cls, n_gen: int) -> "Ext":
        return cls(n_gen, {0: Fraction(1)})

    @classmethod
    def scalar(cls, n_gen: int, c) -> "Ext":
        return cls(n_gen, {0: c})

    @classmethod
    def basis(cls, n_gen: int, mask: int) -> "Ext":
        return cls(n_gen, {mask: Fraction(1)})

    @classmethod
    def vector(cls, coords) -> "Ext":
        coords = list(coords)
        return cls(len(coords), {1 << j: c for j, c in enumerate(coords) if c})

    # -- inspection -------------------------------------------------------------

    def coeff(self, mask: int):
        return self._c.get(mask, Fraction(0))

    def items(self):
        return self._c.items()

    def support(self) -> list[int]:
        return sorted(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def degree_part(self, k: int) -> "Ext":
        return Ext(self.n_gen, {m: c for m, c in self._c.items() if m.bit_count() == k})

    def degrees(self) -> list[int]:
        return sorted({m.bit_count() for m in self._c})

    def max_degree(self) -> int:
        return max((m.bit_count() for m in self._c), default=0)

    def truncate_above(self, k: int) -> "Ext":
        """Drop all parts of degree > k."""
        return Ext(self.n_gen, {m: c for m, c in self._c.items() if m.bit_count() <= k})

    def scalar_part(self):
        return self.coeff(0)

    def top_coeff(self):
        return self.coeff((1 << self.n_gen) - 1)

    def vector_coords(self) -> list:
        """Coordinates of the degree-1 part."""
        return [self.coeff(1 << j) for j in range(self.n_gen)]

    # -- linear structure -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, _SCALARS):
            other = Ext.scalar(self.n_gen, other)
        if not isinstance(other, Ext):
            return NotImplemented
        out = dict(self._c)
        for m, c in other._c.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            elif m in out:
                del out[m]
        r = Ext(self.n_gen)
        r._c = out
        return r

    __radd__ = __add__

    def __neg__(self):
        r = Ext(self.n_gen)
        r._c = {m: -c for m, c in self._c.items()}
        return r

    def __sub__(self, other):
        if isinstance(other, (Ext, *_SCALARS)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            if not other:
                return Ext(self.n_gen)
            r = Ext(self.n_gen)
            r._c = {m: c * other for m, c in self._c.items()}
            return r
        if isinstance(other, Ext):
            return self.wedge(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, _SCALARS):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, _SCALARS):
            r = Ext(self.n_gen)
            r._c = {m: c / other for m, c in self._c.items()}
            return r
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, _SCALARS):
            return (self - Ext.scalar(self.n_gen, other)).is_zero()
        if isinstance(other, Ext):
            return self.n_gen == other.n_gen and (self - other).is_zero()
        return NotImplemented

    def __hash__(self):
        return hash((self.n_gen, tuple(sorted(self._c.items(), key=lambda t: t[0]))))

    def map_coeffs(self, f) -> "Ext":
        return Ext(self.n_gen, {m: f(c) for m, c in self._c.items()})

    # -- multiplicative structure -------------------------------------------------

    def wedge(self, other: "Ext") -> "Ext":
        if self.n_gen != other.n_gen:
            raise ValueError("wedge of elements over different modules")
        out: dict[int, object] = {}
        for k, a in self._c.items():
            for l, b in other._c.items():
                s = merge_sign(k, l)
                if not s:
                    continue
                term = a * b if s > 0 else -(a * b)
                m = k | l
                acc = out.get(m, 0) + term
                if acc:
                    out[m] = acc
                elif m in out:
                    del out[m]
        r = Ext(self.n_gen)
        r._c = out
        return r

    def __pow__(self, k: int) -> "Ext":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exterior powers must be non-negative integers")
        out = Ext.one(self.n_gen)
        for _ in range(k):
            out = out.wedge(self)
        return out

    def tau(self) -> "Ext":
        """Degree-k part scaled by (-1)^{k(k-1)/2}."""
        out = {}
        for m, c in self._c.items():
            k = m.bit_count()
            out[m] = -c if (k * (k - 1) // 2) & 1 else c
        r = Ext(self.n_gen)
        r._c = out
        return r

    def alpha(self) -> "Ext":
        """Parity involution: degree-k part scaled by (-1)^k."""
        out = {}
        for m, c in self._c.items():
            out[m] = -c if m.bit_count() & 1 else c
        r = Ext(self.n_gen)
        r._c = out
        return r

    def __repr__(self):
        if not self._c:
            return "0"
        parts = []
        for m in self.support():
            name = "".join(f"g{j}" for j in bits_ascending(m)) or "1"
            parts.append(f"{self._c[m]}*{name}")
        return " + ".join(parts)


def wedge_gen(j: int, x: Ext) -> Ext:
    """g_j ∧ x."""
    bit = 1 << j
    out = {}
    for m, c in x._c.items():
        if m & bit:
            continue
        below = (m & (bit - 1)).bit_count()
        out[m | bit] = -c if below & 1 else c
    r = Ext(x.n_gen)
    r._c = out
    return r


def contract_gen(j: int, x: Ext) -> Ext:
    """Interior product by the covector dual to g_j (odd derivation)."""
    bit = 1 << j
    out = {}
    for m, c in x._c.items():
        if not (m & bit):
            continue
        below = (m & (bit - 1)).bit_count()
        out[m ^ bit] = -c if below & 1 else c
    r = Ext(x.n_gen)
    r._c = out
    return r


def contract_covector(cov, x: Ext) -> Ext:
    """Interior product by the covector with values cov[j] on g_j."""
    out = Ext.zero(x.n_gen)
    for j, cj in enumerate(cov):
        if cj:
            out = out + contract_gen(j, x) * cj
    return out


def ext_exp(x: Ext) -> Ext:
    """exp of a nilpotent element (scalar part must vanish)."""
    if x.scalar_part():
        raise ValueError("ext_exp needs a vanishing scalar part")
    out = Ext.one(x.n_gen)
    term = Ext.one(x.n_gen)
    k = 0
    while True:
        k += 1
        term = term.wedge(x) / k
        if term.is_zero():
            return out
        out = out + term


def endo_wedge_extend(matrix, x: Ext) -> Ext:
    """Extend a linear map on generators multiplicatively: g_M ↦ ∧_j A(g_j).

    matrix[k][j] is the g_k-coefficient of the image of g_j.
    """
    n = x.n_gen
    cols = [Ext.vector([matrix[k][j] for k in range(n)]) for j in range(n)]
    out = Ext.zero(n)
    for m, c in x.items():
        term = Ext.scalar(n, c)
        for j in bits_ascending(m):
            term = term.wedge(cols[j])
        out = out + term
    return out


def endo_derivation(matrix, x: Ext) -> Ext:
    """Extend a linear map on generators as an even derivation of ∧*F."""
    n = x.n_gen
    out = Ext.zero(n)
    for j in range(n):
        col = [matrix[k][j] for k in range(n)]
        if any(col):
            out = out + Ext.vector(col).wedge(contract_gen(j, x))
    return out


def top_wedge(vectors: list[Ext]) -> Ext:
    """Wedge of a list of degree-1 elements (their span's top form)."""
    if not vectors:
        raise ValueError("top_wedge of nothing")
    out = vectors[0]
    for v in vectors[1:]:
        out = out.wedge(v)
    return out
