"""``solver`` command line.

    solver search --max-n 500 [--json]
    solver cf --target tau (--count K | --until-q BOUND)
    solver bound [--mode fidelity|audit]
    solver reduce --stage 1|2 [--d1 D] [--d2 D] [--ell L]
    solver pipeline [--precision DIGITS] [--mode MODE] [--out FILE]
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .baker import MODES, bound_chain
from .contfrac import expand, tau
from .pipeline import emit_report, run_pipeline, stage1_reduction, stage2_reduction
from .realfield import DEFAULT_PRECISION, format_decimal
from .search import brute_search


def _big_int(text: str) -> int:
    # accepts 3.6e48 style bounds without going through float
    return int(Fraction(text))


def _cmd_search(args) -> int:
    for rec in brute_search(args.min_n, args.max_n):
        if args.json:
            print(json.dumps(rec.as_dict()))
        else:
            p = rec.pattern
            print(f"P_{rec.n} = {rec.value}  d1={p.d1} d2={p.d2} ell={p.ell} m={p.m}")
    return 0


def _cmd_cf(args) -> int:
    if args.target != "tau":
        raise SystemExit("only --target tau is supported")
    if args.until_q is not None:
        cf = expand(tau, until_q=_big_int(args.until_q), precision=args.precision)
    else:
        cf = expand(tau, count=args.count, precision=args.precision)
    if args.json:
        print(json.dumps({
            "target": args.target,
            "quotients": [str(a) for a in cf.quotients],
            "convergents": [[str(p), str(q)] for p, q in cf.convergents],
        }))
    else:
        for k, (a, (p, q)) in enumerate(zip(cf.quotients, cf.convergents)):
            print(k, a, p, q)
    return 0


def _chain_dict(chain) -> dict:
    return {
        "mode": chain.mode,
        "steps": [
            {
                "name": s.name,
                "statement": s.statement,
                "computed_upper": format_decimal(s.computed, 8, "up"),
                "envelope": format_decimal(s.envelope, 8),
                "used": format_decimal(s.used, 8, "up"),
            }
            for s in chain.steps.values()
        ],
        "n_bound": str(chain.n_bound),
        "ell_plus_m_bound": str(chain.ell_plus_m_bound),
        "sound_n_bound_upper": format_decimal(chain.sound_n_bound, 8, "up"),
    }


def _cmd_bound(args) -> int:
    modes = [args.mode] if args.mode else list(MODES)
    out = {m: _chain_dict(bound_chain(m, args.precision)) for m in modes}
    print(json.dumps(out, indent=1))
    return 0


def _cmd_reduce(args) -> int:
    M = bound_chain(args.mode, args.precision).ell_plus_m_bound
    if args.stage == 1:
        d1s = [args.d1] if args.d1 else range(1, 10)
        result = stage1_reduction(M, args.precision, d1s)
    else:
        ell_bound = args.ell_bound or stage1_reduction(M, args.precision).bound
        result = stage2_reduction(M, ell_bound, args.precision, args.d1, args.d2, args.ell)
    for o in result.outcomes:
        print(json.dumps(o.as_dict()))
    return 0


def _cmd_pipeline(args) -> int:
    cert = run_pipeline(args.precision, args.mode)
    text = emit_report(cert, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if cert.consistency else 1


def _digit(lo):
    def parse(text):
        v = int(text)
        if not lo <= v <= 9:
            raise argparse.ArgumentTypeError(f"digit must be in {lo}..9")
        return v
    return parse


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="solver", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def precision_opt(p):
        p.add_argument("--precision", type=int, default=DEFAULT_PRECISION, help="working decimal digits")

    p = sub.add_parser("search", help="brute-force search over a range of n")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--min-n", type=int, default=0)
    p.add_argument("--json", action="store_true", help="one JSON object per line")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("cf", help="continued fraction of tau = log 10 / log alpha")
    p.add_argument("--target", default="tau")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--count", type=int)
    g.add_argument("--until-q", help="stop at the first convergent denominator above this")
    p.add_argument("--json", action="store_true")
    precision_opt(p)
    p.set_defaults(func=_cmd_cf)

    p = sub.add_parser("bound", help="initial bounds from linear forms in logarithms")
    p.add_argument("--mode", choices=MODES)
    precision_opt(p)
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("reduce", help="continued-fraction reduction instances")
    p.add_argument("--stage", type=int, choices=(1, 2), required=True)
    p.add_argument("--d1", type=_digit(1))
    p.add_argument("--d2", type=_digit(0))
    p.add_argument("--ell", type=int)
    p.add_argument("--ell-bound", type=int, help="stage 2 only; default comes from stage 1")
    p.add_argument("--mode", choices=MODES, default="fidelity")
    precision_opt(p)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("pipeline", help="replay the full argument and emit a certificate")
    p.add_argument("--mode", choices=MODES, default="fidelity")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out")
    precision_opt(p)
    p.set_defaults(func=_cmd_pipeline)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
