"""Command-line front end.

Exit codes: 0 success, 1 a check failed (the report is still printed),
2 usage error.  Results go to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import numpy as np

from . import algebras, hopf, oprep, pullback
from .expr import ExprError, ExprSyntaxError, parse_poly
from .kconn import (
    LiftInversionError, NotIdempotent, SingularSystem, bass_idempotent, check_strong_connection,
    circle_connection, combine_connections, corrupted_connection, explicit_connection,
    index_pairing, projection_EN, projection_pN, snap, trivial_connection,
)
from .ncpoly import NON_HOMOGENEOUS, PresentationMismatch, to_text, weight, weight_decomposition

REP_KIND = {
    "suq2": "rho_suq2", "sphere": "rho_plus_sphere", "disc": "mu_disc",
    "discext": "mu_disc_ext", "isometry": "shift",
}
ALGEBRAS = ["suq2", "sphere", "disc", "discext", "circle", "isometry"]


class UsageError(Exception):
    pass


def _q_value(text):
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"invalid q {text!r}") from None
    if not 0 < value < 1:
        raise argparse.ArgumentTypeError("q must satisfy 0 < q < 1")
    return value


def _dim(text):
    try:
        d = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid dimension {text!r}") from None
    if d < 4:
        raise argparse.ArgumentTypeError("dimension must be at least 4")
    return d


def _proj_arg(text):
    kind, _, n = text.partition(":")
    if kind not in ("pN", "EN"):
        raise argparse.ArgumentTypeError("projection must be pN:k or EN:k")
    try:
        return kind, int(n)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid index in {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--algebra", choices=ALGEBRAS, default="suq2")
    common.add_argument("--q", type=_q_value, default=Fraction(1, 2),
                        help="deformation parameter, decimal or fraction")
    common.add_argument("--dim", type=_dim, default=128, help="truncation dimension D")
    common.add_argument("--tol", type=float, default=1e-6, help="integer snapping tolerance")
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--range", type=int, default=8, dest="rng")
    common.add_argument("--dump", metavar="PATH", help="write a matrix dump")

    parser = argparse.ArgumentParser(prog="qhopf", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        return sub.add_parser(name, parents=[common], help=help_text)

    add("normalize", "PBW normal form").add_argument("expr")
    add("weight", "U(1)-weight").add_argument("expr")
    add("hopf-check", "Hopf axioms on generators")
    add("rep", "truncated representation").add_argument("expr")
    add("symbol", "symbol map to the circle").add_argument("expr")
    p = add("elem-matrix", "matrix unit from functional calculus")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p = add("fibre-check", "image under iota and L_N membership")
    p.add_argument("expr")
    p.add_argument("--N", type=int, dest="ln")
    p = add("conn-check", "strong-connection axioms")
    p.add_argument("--which", choices=["explicit", "combined", "corrupted"], default="explicit")
    add("conn-combine", "glue connections and compare with the explicit one")
    p = add("bass", "Bass idempotent")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--N", type=int, dest="bass_n")
    g.add_argument("--matrix", metavar="FILE")
    p = add("proj", "line-bundle projections")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--pN", type=int, dest="pn")
    g.add_argument("--EN", type=int, dest="en")
    p = add("pair", "index pairing")
    p.add_argument("--class", choices=["id-eps", "eps-eps0"], required=True, dest="kclass")
    p.add_argument("--proj", type=_proj_arg, required=True)
    return parser


def _emit(args, payload, text=None):
    if args.json or text is None:
        print(json.dumps(payload, indent=None, sort_keys=False))
    else:
        print(text)


def _poly(args, algebra=None):
    return parse_poly(args.expr, algebra or args.algebra)


def cmd_normalize(args):
    x = _poly(args)
    _emit(args, {"algebra": args.algebra, "input": args.expr, "normal_form": to_text(x)}, to_text(x))
    return 0


def cmd_weight(args):
    x = _poly(args)
    w = weight(x)
    wtext = "NonHomogeneous" if w is NON_HOMOGENEOUS else str(w)
    parts = {str(n): to_text(p) for n, p in weight_decomposition(x).items()}
    _emit(args, {"weight": wtext, "decomposition": parts}, wtext)
    return 0


def cmd_hopf_check(args):
    target = {"suq2": hopf.SUQ2_HOPF, "circle": hopf.CIRCLE_HOPF}.get(args.algebra)
    if target is None:
        raise UsageError("hopf-check supports --algebra suq2 or circle")
    report = hopf.hopf_axiom_report(target)
    payload = {"algebra": report.algebra, "passed": report.passed,
               "checks": [{"name": c.name, "generator": c.generator, "passed": c.passed,
                           "residual": c.residual} for c in report.checks]}
    lines = [f"{c.name:16s} {c.generator:3s} {'ok' if c.passed else 'FAIL ' + c.residual}"
             for c in report.checks]
    _emit(args, payload, "\n".join(lines))
    return 0 if report.passed else 1


def cmd_rep(args):
    if args.algebra not in REP_KIND:
        raise UsageError(f"no representation for {args.algebra}")
    x = _poly(args)
    op = oprep.represent(x, oprep.RepConfig(REP_KIND[args.algebra], float(args.q), args.dim))
    if args.dump:
        with open(args.dump, "w") as fh:
            fh.write(op.dump())
    stats = op.stats()
    _emit(args, {"kind": REP_KIND[args.algebra], **stats},
          f"dim {stats['dim']}  trace {stats['trace']:.17g}  norm {stats['norm']:.17g}")
    return 0


def cmd_symbol(args):
    x = _poly(args)
    s = to_text(oprep.symbol(x))
    _emit(args, {"input": args.expr, "symbol": s}, s)
    return 0


def cmd_elem_matrix(args):
    try:
        e = oprep.elementary_matrix(args.n, args.m, args.q, args.dim)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    err = float(np.abs(e.matrix - oprep.matrix_unit(args.n + args.m, args.n, args.dim)).max())
    if args.dump:
        with open(args.dump, "w") as fh:
            fh.write(e.dump())
    _emit(args, {"n": args.n, "m": args.m, "max_error": err}, f"max error {err:.3e}")
    return 0 if err <= 1e-9 else 1


def cmd_fibre_check(args):
    x = parse_poly(args.expr, "suq2")
    image = pullback.embed_iota(x)
    payload = {"image": image.to_json(), "support": sorted(image.support),
               "compatible": image.is_compatible()}
    if args.ln is not None:
        payload["in_L"] = {"N": args.ln, "member": pullback.ln_membership(image, args.ln)}
    _emit(args, payload, image.text() + (
        f"\nin L_{args.ln}: {payload['in_L']['member']}" if args.ln is not None else ""))
    member = payload.get("in_L", {}).get("member", True)
    return 0 if payload["compatible"] and member else 1


def _conn(which):
    if which == "explicit":
        return explicit_connection()
    if which == "corrupted":
        return corrupted_connection()
    return combine_connections(trivial_connection(), circle_connection())


def cmd_conn_check(args):
    if args.rng < 1:
        raise UsageError("--range must be at least 1")
    report = check_strong_connection(_conn(args.which), args.rng)
    lines = [f"{c.family:15s} N={c.n:+d} {'ok' if c.passed else 'FAIL ' + c.residual}"
             for c in report.failures()] or [f"all checks pass for |N| <= {args.rng}"]
    _emit(args, report.to_json(), "\n".join(lines))
    return 0 if report.passed else 1


def cmd_conn_combine(args):
    combined = _conn("combined")
    explicit = explicit_connection()
    report = check_strong_connection(combined, args.rng)
    diff = [n for n in range(-args.rng, args.rng + 1) if combined(n) != explicit(n)]
    payload = {**report.to_json(), "differs_from_explicit_at": diff}
    _emit(args, payload, f"axioms {'pass' if report.passed else 'FAIL'}; "
                         f"differs from explicit at {diff or 'no N'}")
    return 0 if report.passed else 1


def cmd_bass(args):
    if args.bass_n is not None:
        n = args.bass_n
        pres = algebras.ISOMETRY
        s = algebras.gens(pres)
        c, d = (s["S"] ** n, s["S*"] ** n) if n >= 0 else (s["S*"] ** -n, s["S"] ** -n)
    else:
        with open(args.matrix) as fh:
            lifts = json.load(fh)
        alg = lifts.get("algebra", "isometry")
        pres = algebras.get(alg)
        c = [[parse_poly(e, alg) for e in row] for row in lifts["c"]]
        d = [[parse_poly(e, alg) for e in row] for row in lifts["d"]]
    try:
        p = bass_idempotent(c, d, pres)
    except LiftInversionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    payload = {"matrix": p.to_json(), "idempotent": p.is_idempotent()}
    if args.bass_n is not None and args.bass_n >= 0:
        payload["equals_p_minus_N"] = p == projection_pN(-args.bass_n).padded(p.shape[0])
    _emit(args, payload, p.text() + f"\nidempotent: {payload['idempotent']}")
    return 0 if payload["idempotent"] and payload.get("equals_p_minus_N", True) else 1


def cmd_proj(args):
    if args.pn is not None:
        p = projection_pN(args.pn)
        payload = {"matrix": p.to_json(), "idempotent": p.is_idempotent(),
                   "selfadjoint": p.is_selfadjoint()}
        _emit(args, payload, p.text())
        return 0 if payload["idempotent"] and payload["selfadjoint"] else 1
    try:
        e = projection_EN(args.en)
    except (SingularSystem, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    weights = set(e.entry_weights().values())
    payload = {"N": e.n, "monomials": [to_text(m) for m in e.monomials],
               "lambda2": [l.text() for l in e.lambda2],
               "normalization": to_text(e.normalization()), "entry_weights": sorted(weights, key=str)}
    text = "\n".join(f"lambda_{k}^2 = {l.text()}   m_{k} = {to_text(m)}"
                     for k, (l, m) in enumerate(zip(e.lambda2, e.monomials)))
    _emit(args, payload, text)
    return 0 if payload["normalization"] == "1" and weights == {0} else 1


def cmd_pair(args):
    kind, n = args.proj
    p = projection_pN(n) if kind == "pN" else projection_EN(n)
    try:
        raw = index_pairing(args.kclass, p, float(args.q), args.dim)
    except NotIdempotent as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    snapped = snap(raw, args.tol)
    print(json.dumps({"raw": raw, "snapped": snapped}))
    return 0 if snapped is not None else 1


COMMANDS = {
    "normalize": cmd_normalize, "weight": cmd_weight, "hopf-check": cmd_hopf_check,
    "rep": cmd_rep, "symbol": cmd_symbol, "elem-matrix": cmd_elem_matrix,
    "fibre-check": cmd_fibre_check, "conn-check": cmd_conn_check,
    "conn-combine": cmd_conn_combine, "bass": cmd_bass, "proj": cmd_proj, "pair": cmd_pair,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except ExprSyntaxError as exc:
        print(f"syntax error: {exc}", file=sys.stderr)
        return 2
    except (ExprError, UsageError, PresentationMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
