"""Command-line entry point: ``qylag poly|moments|linearize|verify``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .errors import QylagError
from .laguerre import laguerre_rec, laguerre_signless
from .moments import laguerre_moments, laguerre_scoeffs, linearization_formula, linearization_via_moments, moments_sfrac
from .mpoly import MPoly
from .verify import IDENTITIES, run_identity


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(2)


def _render(p: MPoly, fmt: str) -> str:
    if fmt == "latex":
        return p.to_latex()
    return p.to_plain()


def _emit_json(meta: dict, poly) -> None:
    print(json.dumps({"meta": meta, "poly": poly}, separators=(",", ":"), sort_keys=True))


def cmd_poly(args) -> int:
    if args.n < 0 or args.alpha < -1:
        print("need --n >= 0 and --alpha >= -1", file=sys.stderr)
        return 2
    lp = (laguerre_signless if args.signless else laguerre_rec)(args.n, args.alpha)
    if args.format == "json":
        meta = {"kind": "laguerre", "n": args.n, "alpha": args.alpha, "signless": args.signless}
        _emit_json(meta, lp.poly.to_json_terms())
    else:
        print(_render(lp.poly, args.format))
    return 0


def cmd_moments(args) -> int:
    if args.N < 0:
        print("need --N >= 0", file=sys.stderr)
        return 2
    if args.symbolic_beta:
        table = moments_sfrac(args.N, laguerre_scoeffs(args.N))
    else:
        if args.alpha < 0:
            print("need --alpha >= 0 (or --symbolic-beta)", file=sys.stderr)
            return 2
        table = laguerre_moments(args.N, args.alpha)
    if args.format == "json":
        meta = {"kind": "moments", "N": args.N, "alpha": None if args.symbolic_beta else args.alpha}
        _emit_json(meta, [m.to_json_terms() for m in table.mu])
    else:
        for i, m in enumerate(table.mu):
            print(f"mu_{i} = {_render(m, args.format)}")
    return 0


def cmd_linearize(args) -> int:
    if args.alpha < 0 or min(args.n1, args.n2, args.n3) < 0:
        print("need alpha >= 0 and non-negative degrees", file=sys.stderr)
        return 2
    value = linearization_formula(args.n1, args.n2, args.n3, args.alpha)
    if args.format == "json":
        meta = {"kind": "linearization", "n": [args.n1, args.n2, args.n3], "alpha": args.alpha}
        _emit_json(meta, value.to_json_terms())
    else:
        print(_render(value, args.format))
    if args.check and value != linearization_via_moments(args.n1, args.n2, args.n3, args.alpha):
        print("mismatch between closed form and moment functional", file=sys.stderr)
        return 1
    return 0


def _param_text(params: dict) -> str:
    return " ".join(f"{k}={v}" for k, v in params.items())


def cmd_verify(args) -> int:
    if args.identity not in IDENTITIES:
        print(f"unknown identity {args.identity!r}; known: {', '.join(IDENTITIES)}", file=sys.stderr)
        return 2
    if args.n_max is not None and args.n_max < 0:
        print("need --n-max >= 0", file=sys.stderr)
        return 2
    reports = run_identity(args.identity, args.n_max, args.seed)
    if args.format == "json":
        print(json.dumps([r.to_dict(args.timings) for r in reports], sort_keys=True))
    else:
        for r in reports:
            line = f"{r.status.upper()} {r.identity} {_param_text(r.parameters)}".rstrip()
            if args.timings:
                line += f" ({r.elapsed:.1f} ms)"
            if r.witness:
                line += f" :: {r.witness}"
            print(line)
        passed = sum(r.status == "pass" for r in reports)
        print(f"{passed}/{len(reports)} passed")
    return 0 if all(r.status == "pass" for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qylag", description="(q,y)-Laguerre polynomials and their combinatorics")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    fmt = dict(choices=["plain", "latex", "json"], default="plain")

    p = sub.add_parser("poly", help="print L_n^(alpha)(x;y;q)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=int, default=0)
    p.add_argument("--signless", action="store_true", help="print (-1)^n L_n(-x)")
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_poly)

    m = sub.add_parser("moments", help="print mu_0..mu_N")
    m.add_argument("--N", type=int, required=True)
    m.add_argument("--alpha", type=int, default=0)
    m.add_argument("--symbolic-beta", action="store_true", help="keep beta free instead of [alpha+1]_q")
    m.add_argument("--format", **fmt)
    m.set_defaults(func=cmd_moments)

    lin = sub.add_parser("linearize", help="functional of L_n1 L_n2 L_n3")
    for name in ("n1", "n2", "n3"):
        lin.add_argument(name, type=int)
    lin.add_argument("--alpha", type=int, default=0)
    lin.add_argument("--check", action="store_true", help="cross-check against the moment functional")
    lin.add_argument("--format", **fmt)
    lin.set_defaults(func=cmd_linearize)

    v = sub.add_parser("verify", help="check a named identity over a parameter range")
    v.add_argument("identity", help=", ".join(IDENTITIES))
    v.add_argument("--n-max", type=int, default=None)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--format", choices=["plain", "json"], default="plain")
    v.add_argument("--timings", action="store_true", help="include elapsed time (output is no longer reproducible)")
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except QylagError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
