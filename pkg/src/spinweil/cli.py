"""Command-line interface.

Subcommands::

    igusa               quartic invariant and coordinates of a rank-six spinor
    secant              construct or extract a secant plane of pure spinors
    hermitian           signature, determinant, and Gram matrix of the hermitian form
    chevalley-check     identity suites for the transport isomorphisms
    theta               closed-form computations in the truncated theta ring
    contraction-kernel  annihilator ranks of contraction with a character
    verify              named verification battery with an optional report
    fixture             canned example documents for the other subcommands

Documents are JSON, passed inline, as a file path, or as ``-`` for stdin.
Exit codes: 0 on success, 1 when a check fails or the requested operation is
mathematically undefined for the (well-formed) input, 2 on malformed input.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import random
import sys
from fractions import Fraction
from pathlib import Path

from .chevalley import (duality_transport, orlov_inverse, orlov_phi, psi,
                        tensor_kernel, tilde_varphi_closed, twist_class_c1,
                        varphi)
from .checks import run_battery
from .clifford import mukai_pairing
from .exterior import Ext, merge_sign
from .hodgemodel import annihilator_kernel, ht2_dim, product_annihilator
from .igusa import igusa_coords, igusa_J
from .jsonio import (secant_to_json, spinor_from_json, spinor_to_json,
                     subspace_to_json, theta_from_json, theta_to_json,
                     vform_to_json)
from .lattice import spinor_point_class, theta_adjacent, theta_split
from .scalars import scalar_to_string
from .spinors import plane_stabilizer, secant_from_polarization, secant_plane
from .thetaring import (ThetaPoly, alpha_beta, ch_secant_ideal_threefold,
                        embed_theta_into_spinor, solve_genus4_coeffs, texp)
from .weil import (cm_from_secant, discriminant_H, gram_signature,
                   hermitian_gram, real_gram)


class _Malformed(Exception):
    """Raised for inputs that do not parse or validate (exit code 2)."""


# -- plumbing ------------------------------------------------------------------------


def _read_doc(source: str):
    if source == "-":
        text = sys.stdin.read()
    elif source.lstrip().startswith(("{", "[")):
        text = source
    else:
        try:
            text = Path(source).read_text()
        except OSError as exc:
            raise _Malformed(f"cannot read {source}: {exc}")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise _Malformed(f"invalid JSON: {exc}")


def _decode(decoder, obj):
    try:
        return decoder(obj)
    except ValueError as exc:
        raise _Malformed(str(exc))


def _emit(payload: dict, output: str | None):
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError("value must be at least 1")
    return value


def _pattern_form(name: str, n: int) -> Ext:
    return theta_split(n) if name == "split" else theta_adjacent(n)


def _f_block_basis(n: int) -> list[list[Fraction]]:
    return [[Fraction(1 if i == 2 * n + j else 0) for i in range(4 * n)]
            for j in range(2 * n)]


def _worker_count() -> int:
    limit = min(8, os.cpu_count() or 1)
    raw = os.environ.get("SPINWEIL_THREADS")
    if raw is None:
        return limit
    try:
        cap = int(raw)
    except ValueError:
        raise _Malformed(f"SPINWEIL_THREADS must be an integer, got {raw!r}")
    if cap < 1:
        raise _Malformed("SPINWEIL_THREADS must be at least 1")
    return min(cap, limit)


# -- igusa ---------------------------------------------------------------------------


def _cmd_igusa(args):
    w = _decode(spinor_from_json, _read_doc(args.input))
    coords = igusa_coords(w)
    payload = {
        "J": scalar_to_string(igusa_J(w)),
        "coords": {
            "x0": scalar_to_string(coords.x0),
            "y0": scalar_to_string(coords.y0),
            "x": [[scalar_to_string(c) for c in row] for row in coords.x],
            "y": [[scalar_to_string(c) for c in row] for row in coords.y],
        },
    }
    return payload, 0


# -- secant --------------------------------------------------------------------------


def _secant_payload(sec) -> dict:
    payload = secant_to_json(sec)
    payload["is_cm"] = sec.is_cm
    if sec.is_cm:
        payload["field_d"] = sec.field_d()
    if sec.n <= 3:
        payload["stabilizer_dim"] = len(plane_stabilizer(sec.n, list(sec.plane)))
    return payload


def _cmd_secant(args):
    if args.input is not None:
        if args.n is not None or args.d is not None:
            raise _Malformed("--input replaces --n/--d; pass one or the other")
        w = _decode(spinor_from_json, _read_doc(args.input))
        sec = secant_plane(w)
    else:
        if args.n is None or args.d is None:
            raise _Malformed("construction needs both --n and --d")
        if args.d <= 0:
            raise _Malformed("--d must be positive")
        sec = secant_from_polarization(args.n, args.d, _pattern_form(args.pattern, args.n))
    return _secant_payload(sec), 0


# -- hermitian -----------------------------------------------------------------------


def _cmd_hermitian(args):
    if args.d <= 0:
        raise _Malformed("--d must be positive")
    sec = secant_from_polarization(args.n, args.d, _pattern_form(args.pattern, args.n))
    C = cm_from_secant(sec)
    basis = _f_block_basis(args.n)
    gram = hermitian_gram(C, basis)
    payload = {
        "n": args.n,
        "d": str(args.d),
        # inertia of the real part on the full rational basis
        "signature": list(gram_signature(real_gram(hermitian_gram(C)))),
        # determinant and Gram matrix on the dual half K-basis
        "det": scalar_to_string(discriminant_H(C, basis)),
        "gram": [[scalar_to_string(c) for c in row] for row in gram],
    }
    return payload, 0


# -- chevalley-check -----------------------------------------------------------------


def _suite_two_path(n, rng, samples):
    dim = 1 << (2 * n)
    if n <= 2:
        pairs = [(k, l) for k in range(dim) for l in range(dim)]
        mode = "exhaustive"
    else:
        pairs = [(rng.randrange(dim), rng.randrange(dim)) for _ in range(samples)]
        mode = "sampled"
    bad = []
    for k, l in pairs:
        if tilde_varphi_closed(n, k, l) != psi(varphi(Ext.basis(2 * n, k), Ext.basis(2 * n, l))):
            bad.append(f"basis pair ({k},{l})")
    return mode, len(pairs), bad


def _suite_rank_one(n, rng, samples):
    dim = 1 << (2 * n)
    sign = Fraction((-1) ** n)
    if n <= 2:
        triples = [(s, t, x) for s in range(dim) for t in range(dim) for x in range(dim)]
        mode = "exhaustive"
    else:
        triples = [tuple(rng.randrange(dim) for _ in range(3)) for _ in range(samples)]
        mode = "sampled"
    bad = []
    for sm, tm, xm in triples:
        s, t, x = (Ext.basis(2 * n, m) for m in (sm, tm, xm))
        if varphi(s, t).act(x) != s * (sign * mukai_pairing(t, x)):
            bad.append(f"triple ({sm},{tm},{xm})")
    return mode, len(triples), bad


def _suite_duality_sign(n, rng, samples):
    full_mask = (1 << (2 * n)) - 1
    bad = []
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
                bad.append(f"monomial pair ({kmask},{lmask})")
    return "exhaustive", (full_mask + 1) ** 2, bad


def _suite_round_trip(n, rng, samples):
    dim = 1 << (2 * n)
    if n <= 2:
        pairs = [(s, t) for s in range(dim) for t in range(dim)]
        mode = "exhaustive"
    else:
        pairs = [(rng.randrange(dim), rng.randrange(dim)) for _ in range(samples)]
        mode = "sampled"
    bad = []
    for sm, tm in pairs:
        s, t = Ext.basis(2 * n, sm), Ext.basis(2 * n, tm)
        if orlov_inverse(orlov_phi(s, t)) != tensor_kernel(s, t):
            bad.append(f"basis pair ({sm},{tm})")
    return mode, len(pairs), bad


def _cmd_chevalley_check(args):
    rng = random.Random(args.seed)
    suites = (("two-path", _suite_two_path),
              ("rank-one", _suite_rank_one),
              ("duality-sign", _suite_duality_sign),
              ("round-trip", _suite_round_trip))
    checks = []
    for name, suite in suites:
        mode, checked, bad = suite(args.n, rng, args.samples)
        checks.append({"name": name, "mode": mode, "checked": checked,
                       "pass": not bad, "counterexamples": bad[:3]})
    all_pass = all(c["pass"] for c in checks)
    payload = {"n": args.n, "seed": args.seed, "samples": args.samples,
               "checks": checks, "pass": all_pass}
    return payload, 0 if all_pass else 1


# -- theta ---------------------------------------------------------------------------


def _cmd_theta(args):
    if args.formula == "exp":
        if args.n is None or args.c is None:
            raise _Malformed("exp needs --n and --c")
        return theta_to_json(texp(args.n, args.c)), 0
    if args.formula == "alpha-beta":
        if args.n is None or args.d is None:
            raise _Malformed("alpha-beta needs --n and --d")
        al, be = alpha_beta(args.n, args.d, args.rho, args.tau, args.q)
        return {"alpha": theta_to_json(al), "beta": theta_to_json(be)}, 0
    if args.formula == "ch-secant-ideal":
        if args.d is None:
            raise _Malformed("ch-secant-ideal needs --d")
        return theta_to_json(ch_secant_ideal_threefold(args.d)), 0
    # genus4
    if args.d is None or args.a3 is None:
        raise _Malformed("genus4 needs --d and --a3")
    a0, a1, a2 = solve_genus4_coeffs(args.d, args.a3)
    return {"a0": str(a0), "a1": str(a1), "a2": str(a2)}, 0


# -- contraction-kernel --------------------------------------------------------------


def _cmd_contraction_kernel(args):
    if (args.input is None) == (args.d is None):
        raise _Malformed("pass exactly one of --input or --d")
    if args.input is not None:
        ch = _decode(theta_from_json, _read_doc(args.input))
    else:
        ch = ch_secant_ideal_threefold(args.d)
    if args.second is not None:
        ch2 = _decode(theta_from_json, _read_doc(args.second))
        pk = product_annihilator(ch, ch2)
        payload = {"total_dim": pk.total_dim, "rank": pk.rank,
                   "kernel_dim": pk.kernel_dim,
                   "factor_dims": list(pk.factor_dims),
                   "splits": pk.splits, "degenerate": pk.degenerate}
        return payload, 0
    r, k, _ = annihilator_kernel(ch)
    return {"n": ch.n, "ht2_dim": ht2_dim(ch.n), "rank": r, "kernel_dim": k}, 0


# -- verify --------------------------------------------------------------------------


def _write_report(report_dir: str, payload: dict, results):
    out = Path(report_dir)
    out.mkdir(parents=True, exist_ok=True)

    report = dict(payload)
    report["timings"] = {r.name: round(r.seconds, 3) for r in results}
    (out / "report.json").write_text(json.dumps(report, indent=2, sort_keys=True) + "\n")

    with (out / "checks.csv").open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["name", "group", "pass", "seconds"])
        for r in results:
            writer.writerow([r.name, r.group, "pass" if r.passed else "fail",
                             f"{r.seconds:.3f}"])

    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    groups: dict[str, list] = {}
    for r in results:
        groups.setdefault(r.group, []).append(r)
    names = list(groups)
    passed = [sum(r.passed for r in groups[g]) for g in names]
    failed = [sum(not r.passed for r in groups[g]) for g in names]

    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(11, 4.5))
    pos = range(len(names))
    ax1.barh(pos, passed, color="#2a9d8f", label="pass")
    ax1.barh(pos, failed, left=passed, color="#e76f51", label="fail")
    ax1.set_yticks(pos, names)
    ax1.invert_yaxis()
    ax1.set_xlabel("checks")
    ax1.set_title(f"battery by module ({payload['level']}, seed {payload['seed']})")
    ax1.legend(loc="lower right")

    slowest = sorted(results, key=lambda r: r.seconds, reverse=True)[:8]
    ax2.barh(range(len(slowest)), [r.seconds for r in slowest],
             color=["#2a9d8f" if r.passed else "#e76f51" for r in slowest])
    ax2.set_yticks(range(len(slowest)), [r.name for r in slowest])
    ax2.invert_yaxis()
    ax2.set_xlabel("seconds")
    ax2.set_title("slowest checks")

    fig.tight_layout()
    fig.savefig(out / "summary.png", dpi=150)
    plt.close(fig)


def _cmd_verify(args):
    results = run_battery(args.level, args.seed, _worker_count())
    failed = sum(1 for r in results if not r.passed)
    payload = {
        "level": args.level,
        "seed": args.seed,
        "checks": [{"name": r.name, "group": r.group, "pass": r.passed,
                    "detail": r.detail} for r in results],
        "counts": {"total": len(results), "passed": len(results) - failed,
                   "failed": failed},
        "pass": failed == 0,
    }
    if args.report_dir:
        _write_report(args.report_dir, payload, results)
    return payload, 0 if failed == 0 else 1


# -- fixture -------------------------------------------------------------------------


_FIXTURES = [
    ("theta-n3", "split polarization form at n = 3 (vector-form document)"),
    ("c1-n{1|2|3}", "first twist class (vector-form document)"),
    ("alpha-n3-d{D}", "alpha plane generator (theta document)"),
    ("beta-n3-d{D}", "beta plane generator (theta document)"),
    ("secant-ch-n3-d{D}", "character of the secant ideal family (theta document)"),
    ("w1-n3-d{D}", "first isotropic subspace of the standard secant (subspace document)"),
    ("spinor-unit-point-n3-d{D}", "1 + d[pt] (spinor document)"),
    ("spinor-secant-n3-d{D}", "embedded 2 - d Theta^2 (spinor document)"),
]


def _fixture_doc(name: str):
    if name == "theta-n3":
        return vform_to_json(theta_split(3))
    head, _, tail = name.rpartition("-")
    if name.startswith("c1-n") and name[4:].isdigit() and name[4:] in ("1", "2", "3"):
        return vform_to_json(twist_class_c1(int(name[4:])))
    if tail.startswith("d") and tail[1:].isdigit() and int(tail[1:]) >= 1:
        d = int(tail[1:])
        if head == "alpha-n3":
            return theta_to_json(alpha_beta(3, d, 0, 1, 1)[0])
        if head == "beta-n3":
            return theta_to_json(alpha_beta(3, d, 0, 1, 1)[1])
        if head == "secant-ch-n3":
            return theta_to_json(ch_secant_ideal_threefold(d))
        if head == "w1-n3":
            return subspace_to_json(secant_from_polarization(3, d).w1)
        if head == "spinor-unit-point-n3":
            return spinor_to_json(Ext.one(6) + spinor_point_class(3) * Fraction(d))
        if head == "spinor-secant-n3":
            two_a = ThetaPoly.one(3).scale(2) - ThetaPoly.monomial(3, 2, d)
            return spinor_to_json(embed_theta_into_spinor(two_a))
    raise _Malformed(f"unknown fixture {name!r}; try --list")


def _cmd_fixture(args):
    if args.list:
        return {"fixtures": [{"name": n, "describes": d} for n, d in _FIXTURES]}, 0
    if not args.name:
        raise _Malformed("pass --name or --list")
    return _fixture_doc(args.name), 0


# -- parser --------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinweil",
        description="Exact spinor geometry toolkit: quartic invariants, secant "
                    "planes, hermitian forms, and verification batteries.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", metavar="FILE",
                        help="write the JSON result to FILE instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("igusa", parents=[common],
                       help="quartic invariant of a rank-six spinor document")
    p.add_argument("--input", required=True, metavar="DOC",
                   help="spinor document (JSON text, file path, or - for stdin)")
    p.set_defaults(handler=_cmd_igusa)

    p = sub.add_parser("secant", parents=[common],
                       help="construct (--n/--d) or extract (--input) a secant plane")
    p.add_argument("--n", type=_positive_int, help="half rank of the polarization")
    p.add_argument("--d", type=_rational, help="polarization parameter (positive)")
    p.add_argument("--pattern", choices=("adjacent", "split"), default="adjacent",
                   help="polarization pairing pattern (default: adjacent)")
    p.add_argument("--input", metavar="DOC", help="spinor document to extract from")
    p.set_defaults(handler=_cmd_secant)

    p = sub.add_parser("hermitian", parents=[common],
                       help="hermitian form data of the standard construction")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--d", type=_rational, required=True)
    p.add_argument("--pattern", choices=("adjacent", "split"), default="adjacent")
    p.set_defaults(handler=_cmd_hermitian)

    p = sub.add_parser("chevalley-check", parents=[common],
                       help="identity suites for the transport isomorphisms")
    p.add_argument("--n", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=_positive_int, default=200,
                   help="sample count where exhaustive sweeps are infeasible")
    p.set_defaults(handler=_cmd_chevalley_check)

    p = sub.add_parser("theta", parents=[common],
                       help="closed-form computations in the truncated theta ring")
    p.add_argument("--formula", required=True,
                   choices=("exp", "alpha-beta", "ch-secant-ideal", "genus4"))
    p.add_argument("--n", type=_positive_int, help="truncation rank")
    p.add_argument("--c", type=_rational, help="exponent for the exp formula")
    p.add_argument("--d", type=_positive_int, help="field / degree parameter")
    p.add_argument("--rho", type=_rational, default=Fraction(0))
    p.add_argument("--tau", type=_rational, default=Fraction(1))
    p.add_argument("--q", type=_rational, default=Fraction(1))
    p.add_argument("--a3", type=int, help="leading coefficient for genus4")
    p.set_defaults(handler=_cmd_theta)

    p = sub.add_parser("contraction-kernel", parents=[common],
                       help="annihilator rank of contraction with a character")
    p.add_argument("--input", metavar="DOC", help="theta document")
    p.add_argument("--d", type=_positive_int,
                   help="use the standard secant ideal character at this d")
    p.add_argument("--second", metavar="DOC",
                   help="second theta document: compute the product kernel")
    p.set_defaults(handler=_cmd_contraction_kernel)

    p = sub.add_parser("verify", parents=[common],
                       help="run the named verification battery")
    p.add_argument("--level", choices=("quick", "full"), default="quick")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--report-dir", metavar="DIR",
                   help="also write report.json, checks.csv, and summary.png here")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("fixture", parents=[common],
                       help="emit a canned example document")
    p.add_argument("--name", help="fixture name, e.g. alpha-n3-d2")
    p.add_argument("--list", action="store_true", help="list available fixtures")
    p.set_defaults(handler=_cmd_fixture)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        payload, code = args.handler(args)
    except _Malformed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        payload, code = {"error": str(exc)}, 1
    _emit(payload, args.output)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
