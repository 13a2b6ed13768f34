"""The Igusa quartic form on even spinors of the rank-twelve lattice.

An even element of the rank-six spinor module decomposes into a scalar, a
6×6 alternating two-form block x, a dual block y read off through the signed
complement basis, and a top coefficient.  The quartic combines Pfaffians of
those blocks; it is the invariant of the spin representation whose nonvanishing
detects pure-spinor secants.

Pfaffians are normalized so that the block matrix (0, I; -I, 0) has value +1.
"""
from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .exterior import Ext, bits_ascending


def _pf_plain(a, idx: tuple[int, ...], memo: dict):
    """Textbook Pfaffian (sum over matchings) by first-row expansion."""
    if not idx:
        return Fraction(1)
    if idx in memo:
        return memo[idx]
    first, rest = idx[0], idx[1:]
    total = 0
    for k, j in enumerate(rest):
        coeff = a[first][j]
        if coeff:
            sub = rest[:k] + rest[k + 1:]
            sign = -1 if k % 2 else 1
            total += sign * coeff * _pf_plain(a, sub, memo)
    memo[idx] = total
    return total


def pfaffian(a: list[list]):
    """Pfaffian of an alternating matrix, +1 on the standard hyperbolic block."""
    m = len(a)
    if any(len(row) != m for row in a):
        raise ValueError("matrix is not square")
    if m % 2:
        return Fraction(0)
    for i in range(m):
        if a[i][i]:
            raise ValueError("matrix is not alternating")
        for j in range(i + 1, m):
            if a[i][j] != -a[j][i]:
                raise ValueError("matrix is not alternating")
    r = m // 2
    value = _pf_plain(a, tuple(range(m)), {})
    return -value if (r * (r - 1) // 2) % 2 else value


class SpinorCoords(NamedTuple):
    """Coordinates of an even rank-six spinor: scalar, two-form block,
    dual two-form block, top coefficient."""

    x0: object
    x: list[list]
    y: list[list]
    y0: object


def e_star(i: int, j: int) -> Ext:
    """The degree-four basis element dual to e_i ∧ e_j (1-based, i < j):
    the signed complement (-1)^{i+j-1} e_{K^c}."""
    if not 1 <= i < j <= 6:
        raise ValueError("indices must satisfy 1 <= i < j <= 6")
    mask = 0
    for b in range(6):
        if b + 1 not in (i, j):
            mask |= 1 << b
    sign = -1 if (i + j - 1) % 2 else 1
    return Ext(6, {mask: Fraction(sign)})


def igusa_coords(w: Ext) -> SpinorCoords:
    """Split an even spinor over six generators into quartic coordinates."""
    if w.n_gen != 6:
        raise ValueError("the quartic is defined on the rank-six spinor module")
    x0 = w.coeff(0)
    y0 = w.coeff((1 << 6) - 1)
    x = [[Fraction(0)] * 6 for _ in range(6)]
    y = [[Fraction(0)] * 6 for _ in range(6)]
    for mask, c in w.items():
        k = mask.bit_count()
        if k == 2:
            i, j = bits_ascending(mask)
            x[i][j] = c
            x[j][i] = -c
        elif k == 4:
            i, j = ((b + 1) for b in range(6) if not (mask >> b) & 1)
            sign = -1 if (i + j - 1) % 2 else 1
            y[i - 1][j - 1] = sign * c
            y[j - 1][i - 1] = -sign * c
        elif k not in (0, 6):
            raise ValueError("spinor has an odd-degree part")
    return SpinorCoords(x0, x, y, y0)


def igusa_J(w: Ext):
    """The degree-four invariant of an even rank-six spinor."""
    x0, x, y, y0 = igusa_coords(w)
    total = x0 * pfaffian(y) + y0 * pfaffian(x)
    for i in range(6):
        for j in range(i + 1, 6):
            keep = [k for k in range(6) if k not in (i, j)]
            xm = [[x[a][b] for b in keep] for a in keep]
            ym = [[y[a][b] for b in keep] for a in keep]
            total += pfaffian(xm) * pfaffian(ym)
    cross = sum(x[i][j] * y[i][j] for i in range(6) for j in range(i + 1, 6))
    total -= Fraction(1, 4) * (x0 * y0 - cross) ** 2
    return total
