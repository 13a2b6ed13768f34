"""Exact scalars: rationals and imaginary-quadratic extensions Q(sqrt(-d))."""
from __future__ import annotations

from fractions import Fraction

Rat = Fraction

_RATIONAL_TYPES = (int, Fraction)


def as_rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, QuadExt):
        if x.im:
            raise ValueError(f"not rational: {x}")
        return x.re
    raise TypeError(f"cannot coerce {type(x).__name__} to a rational")


class QuadExt:
    """An element re + im*w of Q(w), w = sqrt(-d) for a fixed positive integer d.

    Each value carries its own d; mixing values from different fields is a hard
    error rather than a silent coercion.  Rationals and ints mix freely with any d.
    """

    __slots__ = ("d", "re", "im")

    def __init__(self, d: int, re=0, im=0):
        if not isinstance(d, int) or d <= 0:
            raise ValueError(f"QuadExt needs a positive integer d, got {d!r}")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("QuadExt is immutable")

    # -- field arithmetic ----------------------------------------------------

    def _coerce(self, other) -> "QuadExt | None":
        if isinstance(other, QuadExt):
            if other.d != self.d and self.im == 0 and other.im == 0:
                # both actually rational; adopt either field
                return QuadExt(self.d, other.re)
            if other.d != self.d:
                raise ValueError(
                    f"mixed quadratic fields: sqrt(-{self.d}) vs sqrt(-{other.d})"
                )
            return other
        if isinstance(other, _RATIONAL_TYPES):
            return QuadExt(self.d, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.d, self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.d, self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.d, o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(
            self.d,
            self.re * o.re - self.d * self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in quadratic field")
        c = o.conj()
        return (self * c) * QuadExt(self.d, Fraction(1, 1) / n)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return QuadExt(self.d, -self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("QuadExt powers must be non-negative integers")
        out = QuadExt(self.d, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- structure -----------------------------------------------------------

    def conj(self) -> "QuadExt":
        return QuadExt(self.d, self.re, -self.im)

    def norm(self) -> Fraction:
        """Field norm re^2 + d*im^2 (multiplicative, >= 0, = 0 only at 0)."""
        return self.re * self.re + self.d * self.im * self.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            if other.d != self.d:
                return self.im == 0 and other.im == 0 and self.re == other.re
            return self.re == other.re and self.im == other.im
        if isinstance(other, _RATIONAL_TYPES):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.d, self.re, self.im))

    def __repr__(self):
        if not self.im:
            return f"QuadExt({self.d}, {self.re})"
        return f"QuadExt({self.d}, {self.re}, {self.im})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        im = f"{self.im}w" if abs(self.im) != 1 else ("w" if self.im > 0 else "-w")
        if not self.re:
            return im
        sign = "+" if self.im > 0 else ""
        return f"{self.re}{sign}{im}"


def quad_conj(x):
    """Galois conjugate; identity on rationals."""
    if isinstance(x, QuadExt):
        return x.conj()
    return as_rat(x)


def quad_norm(x) -> Fraction:
    if isinstance(x, QuadExt):
        return x.norm()
    r = as_rat(x)
    return r * r


def scalar_field_d(x) -> int | None:
    """The d of a genuinely imaginary scalar, else None for rationals."""
    if isinstance(x, QuadExt) and x.im:
        return x.d
    return None


def sqrt_minus(d: int) -> QuadExt:
    return QuadExt(d, 0, 1)


def squarefree_part(m: int) -> tuple[int, int]:
    """m = s^2 * q with q squarefree (m > 0); returns (q, s)."""
    if m <= 0:
        raise ValueError("squarefree_part needs a positive integer")
    q, s = 1, 1
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            s *= p ** (e // 2)
            if e % 2:
                q *= p
        p += 1 if p == 2 else 2
    return q * m, s


# -- JSON forms ---------------------------------------------------------------


def rat_to_json(x: Fraction) -> dict:
    x = as_rat(x)
    return {"num": str(x.numerator), "den": str(x.denominator)}


def rat_from_json(obj) -> Fraction:
    if isinstance(obj, str):
        return Fraction(obj)
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, dict) and "num" in obj:
        return Fraction(int(obj["num"]), int(obj["den"]))
    raise ValueError(f"not a rational: {obj!r}")


def scalar_to_json(x) -> dict:
    if isinstance(x, QuadExt) and x.im:
        return {"d": x.d, "re": rat_to_json(x.re), "im": rat_to_json(x.im)}
    return rat_to_json(as_rat(x))


def scalar_from_json(obj):
    if isinstance(obj, dict) and "d" in obj:
        return QuadExt(int(obj["d"]), rat_from_json(obj["re"]), rat_from_json(obj["im"]))
    return rat_from_json(obj)


def scalar_to_string(x) -> str:
    """Compact canonical form: "-1", "3/4", "1/2+3w" (w = sqrt(-d))."""
    if isinstance(x, QuadExt) and x.im:
        return str(x)
    return str(as_rat(x))
