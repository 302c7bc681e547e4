"""``ratseries``: evaluate one expression and print the result."""

from __future__ import annotations

import argparse
import sys

from .evaluator import evaluate
from .oracle import DEFAULT_DEPTH
from .parser import ExpressionError, ParseSyntaxError, SemanticError, parse
from .printing import FORMATS, render
from .series import MODES, POWER

EXIT_OK = 0
EXIT_SYNTAX = 1
EXIT_SEMANTIC = 2

EPILOG = """\
operators: + - (sum), * (Cauchy product), # (Hadamard product), / (by a scalar
or by (1-c*z)^m), ^ (integer power)
functions: d(e) x(e) diag(k, e) dilate(c, e) coeff(e, n) expand(e[, N])
           no("word") apply(op, e)   -- words use a (lower) and A (raise)
"""


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ratseries",
        description="Exact calculator for rational series, Hadamard products and "
                    "Heisenberg-Weyl normal ordering.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("expression", nargs="?",
                   help="expression to evaluate (read from stdin when omitted)")
    p.add_argument("--mode", choices=MODES, default=POWER,
                   help="power series or Laurent series algebra (default: %(default)s)")
    p.add_argument("--format", choices=FORMATS, default="text", dest="fmt",
                   help="output format (default: %(default)s)")
    p.add_argument("--truncate", type=int, default=DEFAULT_DEPTH, metavar="N",
                   help="window length for expand(e) (default: %(default)s)")
    return p


def _report(err: ExpressionError, source: str, stream) -> None:
    kind = "syntax error" if isinstance(err, ParseSyntaxError) else "error"
    print(f"ratseries: {kind}: {err}", file=stream)
    if err.pos is not None and "\n" not in source:
        print(f"  {source}", file=stream)
        print("  " + " " * err.pos + "^", file=stream)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.truncate < 1:
        print("ratseries: error: --truncate must be positive", file=sys.stderr)
        return EXIT_SEMANTIC
    source = args.expression if args.expression is not None else sys.stdin.read()
    source = source.strip()
    try:
        result = evaluate(parse(source), mode=args.mode, depth=args.truncate)
    except ParseSyntaxError as err:
        _report(err, source, sys.stderr)
        return EXIT_SYNTAX
    except SemanticError as err:
        _report(err, source, sys.stderr)
        return EXIT_SEMANTIC
    print(render(result, args.fmt))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
