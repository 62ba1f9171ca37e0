"""Command line interface: ``bsgrowth <command> -n N ...``.

Exit codes: 0 success, 1 a verification check failed, 2 bad usage,
3 the BFS node budget ran out (set it with ``--budget`` or ``BSG_NODE_BUDGET``).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import automata, growth, verify
from .geodesic import geodesic, minimal_vector, pretty_word
from .group import BudgetExceeded, GroupElement, GroupParams, bfs_spheres, normalize

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _n_arg(text):
    try:
        n = int(text)
        GroupParams(n)
    except ValueError:
        raise argparse.ArgumentTypeError(f"n must be an integer >= 2, got {text!r}") from None
    return n


def _nonneg(text):
    try:
        value = int(text)
    except ValueError:
        value = -1
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    return value


def _positive(text):
    value = _nonneg(text)
    if value == 0:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return value


def _n_range(text):
    lo, sep, hi = text.partition("..")
    if not sep:
        return [_n_arg(text)]
    lo, hi = _n_arg(lo), _n_arg(hi)
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


def _fmt(x):
    return format(x, ".15g") if isinstance(x, float) else str(x)


def cmd_geodesic(args, out):
    if args.u < 0 or args.w < 0:
        raise UsageError("u and w must be non-negative")
    g = normalize(args.u, args.v, args.w, args.n)
    if g != GroupElement(args.u, args.v, args.w):
        sys.stderr.write(f"bsgrowth: warning: ({args.u}, {args.v}, {args.w}) normalized to {g.as_tuple()}\n")
    x = minimal_vector(g, args.n)
    path = geodesic(g, args.n)
    record = {
        "n": args.n,
        "normal_form": list(g.as_tuple()),
        "minimal_vector": list(x.digits),
        "shape": int(path.shape),
        "strict_shape1": path.strict1,
        "length": len(path.word),
        "word": path.word,
    }
    if args.format == "json":
        out.write(json.dumps(record) + "\n")
    else:
        out.write(f"word    {pretty_word(path.word)}\n")
        out.write(f"length  {len(path.word)}\n")
        out.write(f"shape   {int(path.shape)}{' (strict)' if path.strict1 else ''}\n")
        out.write(f"vector  {list(x.digits)}\n")
    return EXIT_OK


def _write_spheres(args, out, sizes):
    if args.format == "json":
        out.write(json.dumps({"n": args.n, "spheres": sizes}) + "\n")
    elif args.format == "csv":
        out.write("radius,size\n")
        out.writelines(f"{r},{s}\n" for r, s in enumerate(sizes))
    else:
        out.write(" ".join(map(str, sizes)) + "\n")


def cmd_spheres(args, out):
    try:
        sizes = bfs_spheres(args.n, args.radius, args.budget)
    except BudgetExceeded as exc:
        _write_spheres(args, out, exc.spheres)
        sys.stderr.write(f"bsgrowth: {exc}\n")
        return EXIT_BUDGET
    _write_spheres(args, out, sizes)
    return EXIT_OK


AUTOMATON_KINDS = {"dn": automata.build_Dn, "dnprime": automata.build_Dn_prime, "on": automata.expand_to_On}


def cmd_automaton(args, out):
    a = AUTOMATON_KINDS[args.kind](args.n)
    if args.format == "dot":
        out.write(automata.to_dot(a))
    elif args.format == "json":
        out.write(json.dumps(automata.to_json(a), indent=2) + "\n")
    elif args.format == "csv":
        raise UsageError("csv output is not available for automata")
    else:
        out.write(f"{a.name}: {len(a.states)} states, start {a.start}\n")
        for s in a.states:
            mark = "*" if s in a.accepts else " "
            moves = "  ".join(f"{sym}->{dst}" for sym, dst in a.out(s).items())
            out.write(f"{mark} {s:<10} {moves}\n")
        sg = automata.scc_growth(a)
        out.write(f"growth rate {_fmt(sg.rate)}\n")
    return EXIT_OK


def cmd_growth(args, out):
    if args.table is not None:
        ns = args.table
    elif args.n is not None:
        ns = [args.n]
    else:
        raise UsageError("growth needs -n or --table")
    length = args.empirical if args.empirical is not None else growth.EMPIRICAL_LENGTH
    reports = [growth.growth_rate(n, length) for n in ns]
    if args.format == "json":
        out.write(growth.reports_to_json(reports) + "\n")
    elif args.format == "csv":
        out.write(growth.reports_to_csv(reports))
    elif args.format == "dot":
        raise UsageError("dot output is only available for automata")
    else:
        for r in reports:
            line = f"n={r.n}  root {_fmt(r.root)}  rate {_fmt(r.rate)}"
            if args.empirical is not None:
                line += f"  f({r.empirical_length})/f({r.empirical_length - 1}) {_fmt(r.empirical_rate)}"
            out.write(line + "\n")
    return EXIT_OK


def cmd_verify(args, out):
    checks = [
        lambda: verify.check_geodesics(args.n, args.radius, args.budget),
        lambda: verify.check_language(args.n, args.radius),
        lambda: verify.check_sandwich(args.n, args.radius, budget=args.budget),
        lambda: verify.check_clamp_degree(args.n, min(args.radius, 6)),
    ]
    ok = True
    for check in checks:
        try:
            result = check()
        except BudgetExceeded as exc:
            out.write(f"ABORT {exc}\n")
            return EXIT_BUDGET
        out.write(result.line() + "\n")
        for example in result.failures:
            out.write(f"    {example}\n")
        ok = ok and result.passed
    return EXIT_OK if ok else EXIT_VERIFY


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=_positive, default=None, help="BFS node budget")
    common.add_argument("--output", "-o", default=None, help="write to this file instead of stdout")

    def fmt_flags(p, choices, default="text"):
        p.add_argument("--format", choices=choices, default=default)
        if "json" in choices:
            p.add_argument("--json", dest="format", action="store_const", const="json")
        if "dot" in choices:
            p.add_argument("--dot", dest="format", action="store_const", const="dot")

    parser = argparse.ArgumentParser(prog="bsgrowth", description="Geodesics and growth in BS(1,n).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("geodesic", parents=[common], help="geodesic word for t^-u a^v t^w")
    p.add_argument("-n", type=_n_arg, required=True)
    p.add_argument("u", type=int)
    p.add_argument("v", type=int)
    p.add_argument("w", type=int)
    fmt_flags(p, ("text", "json"))
    p.set_defaults(func=cmd_geodesic)

    p = sub.add_parser("spheres", parents=[common], help="sphere sizes |S_n(0..R)|")
    p.add_argument("-n", type=_n_arg, required=True)
    p.add_argument("radius", type=_nonneg)
    fmt_flags(p, ("text", "json", "csv"))
    p.set_defaults(func=cmd_spheres)

    p = sub.add_parser("automaton", parents=[common], help="export D_n, D'_n or O_n")
    p.add_argument("-n", type=_n_arg, required=True)
    p.add_argument("kind", choices=sorted(AUTOMATON_KINDS))
    fmt_flags(p, ("text", "json", "csv", "dot"))
    p.set_defaults(func=cmd_automaton)

    p = sub.add_parser("growth", parents=[common], help="growth rate from the rational series")
    p.add_argument("-n", type=_n_arg, default=None)
    p.add_argument("--table", type=_n_range, nargs="?", const=list(range(2, 9)), default=None,
                   help="a range such as 2..8 (the default)")
    p.add_argument("--empirical", type=_positive, nargs="?", const=growth.EMPIRICAL_LENGTH, default=None,
                   metavar="N", help="also report f(N)/f(N-1) from O_n")
    fmt_flags(p, ("text", "json", "csv", "dot"))
    p.set_defaults(func=cmd_growth)

    p = sub.add_parser("verify", parents=[common], help="run the brute-force oracle checks")
    p.add_argument("-n", type=_n_arg, required=True)
    p.add_argument("--radius", "-R", type=_nonneg, default=8)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    handle = None
    if out is None:
        out = handle = open(args.output, "w") if args.output else sys.stdout
    try:
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write(f"bsgrowth: {exc}\n")
        return EXIT_USAGE
    except BudgetExceeded as exc:
        sys.stderr.write(f"bsgrowth: {exc}\n")
        return EXIT_BUDGET
    finally:
        if handle is not None and handle is not sys.stdout:
            handle.close()


if __name__ == "__main__":
    sys.exit(main())
