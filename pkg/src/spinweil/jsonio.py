"""JSON forms for the package's value types.

Every encoder is deterministic (terms sorted by basis position, integers as
decimal strings) and every decoder revalidates, so parse ∘ emit is the
identity and malformed documents raise ValueError with a usable message.
Spinor-module elements list 1-based generator indices; full-lattice forms
label generators "e1".."e2n", "f1".."f2n"; Clifford elements are lists of
normal-ordered words.
"""
from __future__ import annotations

from fractions import Fraction

from .clifford import CliffordElement
from .exterior import Ext, bits_ascending
from .scalars import rat_from_json, rat_to_json, scalar_from_json, scalar_to_json
from .spinors import SecantData, Subspace
from .thetaring import ThetaPoly


def _expect(cond: bool, message: str):
    if not cond:
        raise ValueError(message)


def _sorted_items(x: Ext):
    return sorted(x.items(), key=lambda t: t[0])


def _rank_of(obj, per_n: int) -> int:
    _expect(isinstance(obj, dict), "element document must be an object")
    n = obj.get("n")
    _expect(isinstance(n, int) and n >= 1, "field 'n' must be a positive integer")
    return per_n * n


def _terms_of(obj) -> list:
    terms = obj.get("terms")
    _expect(isinstance(terms, list), "field 'terms' must be a list")
    return terms


# -- spinor-module elements (rank 2n, plain indices) -------------------------------


def spinor_to_json(x: Ext) -> dict:
    _expect(x.n_gen % 2 == 0, "spinor rank must be even")
    return {"basis": "spinor", "n": x.n_gen // 2,
            "terms": [{"idx": [b + 1 for b in bits_ascending(m)],
                       "coeff": scalar_to_json(c)} for m, c in _sorted_items(x)]}


def spinor_from_json(obj) -> Ext:
    rank = _rank_of(obj, 2)
    _expect(obj.get("basis", "spinor") == "spinor", "not a spinor-basis element")
    data = {}
    for term in _terms_of(obj):
        _expect(isinstance(term, dict) and "idx" in term and "coeff" in term,
                "each term needs 'idx' and 'coeff'")
        idx = term["idx"]
        _expect(isinstance(idx, list) and all(isinstance(i, int) for i in idx),
                "'idx' must be a list of integers")
        _expect(all(1 <= i <= rank for i in idx), f"indices must lie in 1..{rank}")
        _expect(sorted(idx) == idx and len(set(idx)) == len(idx),
                "indices must be strictly increasing")
        mask = sum(1 << (i - 1) for i in idx)
        _expect(mask not in data, "duplicate monomial")
        data[mask] = scalar_from_json(term["coeff"])
    return Ext(rank, data)


# -- full-lattice forms (rank 4n, labeled generators) ------------------------------


def _label(n: int, bit: int) -> str:
    return f"e{bit + 1}" if bit < 2 * n else f"f{bit - 2 * n + 1}"


def _bit_of_label(n: int, lab) -> int:
    _expect(isinstance(lab, str) and len(lab) >= 2 and lab[0] in "ef"
            and lab[1:].isdigit(), f"bad generator label {lab!r}")
    i = int(lab[1:])
    _expect(1 <= i <= 2 * n, f"generator index out of range in {lab!r}")
    return i - 1 if lab[0] == "e" else 2 * n + i - 1


def vform_to_json(x: Ext) -> dict:
    _expect(x.n_gen % 4 == 0, "lattice form rank must be a multiple of four")
    n = x.n_gen // 4
    return {"basis": "vector", "n": n,
            "terms": [{"idx": [_label(n, b) for b in bits_ascending(m)],
                       "coeff": scalar_to_json(c)} for m, c in _sorted_items(x)]}


def vform_from_json(obj) -> Ext:
    _expect(isinstance(obj, dict) and obj.get("basis") == "vector",
            "not a vector-basis form")
    n = obj.get("n")
    _expect(isinstance(n, int) and n >= 1, "field 'n' must be a positive integer")
    data = {}
    for term in _terms_of(obj):
        _expect(isinstance(term, dict) and "idx" in term and "coeff" in term,
                "each term needs 'idx' and 'coeff'")
        bits = [_bit_of_label(n, lab) for lab in term["idx"]]
        _expect(sorted(bits) == bits and len(set(bits)) == len(bits),
                "generators must be strictly increasing e1..e2n, f1..f2n")
        mask = sum(1 << b for b in bits)
        _expect(mask not in data, "duplicate monomial")
        data[mask] = scalar_from_json(term["coeff"])
    return Ext(4 * n, data)


# -- Clifford elements as word lists -----------------------------------------------


def clifford_to_json(a: CliffordElement) -> dict:
    return {"basis": "word", "n": a.n,
            "terms": [{"word": [_label(a.n, b) for b in bits_ascending(m)],
                       "coeff": scalar_to_json(c)}
                      for m, c in sorted(a.items(), key=lambda t: t[0])]}


def clifford_from_json(obj) -> CliffordElement:
    _expect(isinstance(obj, dict) and obj.get("basis") == "word",
            "not a word-basis element")
    n = obj.get("n")
    _expect(isinstance(n, int) and n >= 1, "field 'n' must be a positive integer")
    out = CliffordElement.zero(n)
    for term in _terms_of(obj):
        _expect(isinstance(term, dict) and "word" in term and "coeff" in term,
                "each term needs 'word' and 'coeff'")
        bits = [_bit_of_label(n, lab) for lab in term["word"]]
        _expect(sorted(bits) == bits and len(set(bits)) == len(bits),
                "words must be normal ordered and squarefree")
        mask = sum(1 << b for b in bits)
        out = out + CliffordElement(n, {mask: scalar_from_json(term["coeff"])})
    return out


# -- subspaces, theta polynomials, secants -----------------------------------------


def subspace_to_json(W: Subspace) -> dict:
    return {"ambient": W.ambient,
            "rows": [[scalar_to_json(x) for x in row] for row in W.basis()]}


def subspace_from_json(obj) -> Subspace:
    _expect(isinstance(obj, dict) and "ambient" in obj and "rows" in obj,
            "subspace document needs 'ambient' and 'rows'")
    ambient = obj["ambient"]
    _expect(isinstance(ambient, int) and ambient >= 1, "bad ambient dimension")
    rows = obj["rows"]
    _expect(isinstance(rows, list), "'rows' must be a list of vectors")
    return Subspace(ambient, [[scalar_from_json(x) for x in row] for row in rows])


def theta_to_json(p: ThetaPoly) -> dict:
    return {"basis": "theta", "n": p.n,
            "coeffs": [scalar_to_json(c) for c in p.coeffs]}


def theta_from_json(obj) -> ThetaPoly:
    _expect(isinstance(obj, dict) and obj.get("basis", "theta") == "theta",
            "not a theta polynomial")
    n = obj.get("n")
    _expect(isinstance(n, int) and n >= 0, "field 'n' must be a non-negative integer")
    coeffs = obj.get("coeffs")
    _expect(isinstance(coeffs, list) and len(coeffs) == n + 1,
            f"'coeffs' must list the {n + 1} coefficients c0..c{n}")
    return ThetaPoly(n, [scalar_from_json(c) for c in coeffs])


def secant_to_json(s: SecantData) -> dict:
    return {"n": s.n, "d": rat_to_json(s.d),
            "plane": [spinor_to_json(p) for p in s.plane],
            "line1": spinor_to_json(s.line1),
            "line2": spinor_to_json(s.line2),
            "w1": subspace_to_json(s.w1),
            "w2": subspace_to_json(s.w2)}


def secant_from_json(obj) -> SecantData:
    _expect(isinstance(obj, dict), "secant document must be an object")
    for key in ("n", "d", "plane", "line1", "line2", "w1", "w2"):
        _expect(key in obj, f"secant document is missing {key!r}")
    plane = obj["plane"]
    _expect(isinstance(plane, list) and len(plane) == 2,
            "'plane' must list the two generators")
    return SecantData(obj["n"], [spinor_from_json(p) for p in plane],
                      rat_from_json(obj["d"]),
                      spinor_from_json(obj["line1"]),
                      spinor_from_json(obj["line2"]),
                      subspace_from_json(obj["w1"]),
                      subspace_from_json(obj["w2"]))
