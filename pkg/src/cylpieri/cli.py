"""Command-line front end.

Exit codes: 0 on success, 1 on bad input or a domain error, 2 when a
cross-check finds a disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .expansion import Expansion
from .localization import huangli_column_pieri, xi
from .oracle import CONSISTENCY_MODES, QUANTUM_CAP, crosscheck_pieri, eq_quantum_product
from .pieri import InvalidK, InvalidP, pieri
from .polyring import TPoly
from .shapes import InvalidPartition, Rect, TooLarge, make_partition

EXIT_OK, EXIT_DOMAIN, EXIT_CHECK = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_parts(text: str) -> list[int]:
    """``"2,1"`` -> ``[2, 1]``; ``""``, ``"0"`` and ``"()"`` mean the empty partition."""
    text = text.strip().strip("()")
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(f"cannot parse partition {text!r}") from exc


def _add_rect(p: argparse.ArgumentParser) -> None:
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)


def _add_format(p: argparse.ArgumentParser, default: str = "latex") -> None:
    p.add_argument("--format", choices=("json", "latex", "text"), default=default)
    p.add_argument("--expand", action="store_true", help="expand factored coefficients")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cylpieri", description="Equivariant quantum Pieri products on cylindric shapes")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("pieri", help="multiply sigma_mu by a column or row class")
    _add_rect(p)
    p.add_argument("--mu", required=True)
    p.add_argument("--shape", choices=("column", "row"), default="column")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--classical", action="store_true", help="drop quantum (q) terms")
    _add_format(p)

    p = sub.add_parser("localize", help="restrict sigma_gamma to the fixed point eta")
    _add_rect(p)
    p.add_argument("--gamma", required=True)
    p.add_argument("--eta", required=True)
    p.add_argument("--format", choices=("json", "latex", "text"), default="text")

    p = sub.add_parser("product", help="sigma_lambda * sigma_mu by fixed-point localization")
    _add_rect(p)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--classical", action="store_true", help="drop quantum (q) terms")
    p.add_argument("--max-fixed-points", type=int, default=QUANTUM_CAP)
    _add_format(p)

    p = sub.add_parser("huangli", help="classical column product over the rectangle one column wider")
    _add_rect(p)
    p.add_argument("--mu", required=True)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--format", choices=("json", "latex", "text"), default="latex")

    p = sub.add_parser("crosscheck", help="compare every Pieri product three ways")
    _add_rect(p)
    p.add_argument("--max-fixed-points", type=int, default=QUANTUM_CAP)
    p.add_argument("--parallel", type=int, default=None, metavar="WORKERS")
    p.add_argument("--consistency", choices=CONSISTENCY_MODES, default="auto")
    p.add_argument("--format", choices=("json", "text"), default="text")
    return parser


def _classical(e: Expansion) -> Expansion:
    return Expansion(e.rect, {k: v for k, v in e.terms.items() if k[1] == 0},
                     {k: v for k, v in e.factored.items() if k[1] == 0})


def _emit_expansion(e: Expansion, args, operation: str) -> None:
    if args.format == "json":
        print(json.dumps(e.to_json(operation)))
    else:
        print(e.render(args.format, expand=args.expand))


def _emit_poly(poly: TPoly, rect: Rect, fmt: str, operation: str, extra: dict) -> None:
    if fmt == "json":
        print(json.dumps({"grassmannian": rect.to_json(), "operation": operation, **extra,
                          "coefficient": poly.to_json()}))
    else:
        print(poly.to_str(latex=fmt == "latex"))


def _cmd_pieri(args) -> int:
    rect = Rect(args.m, args.n)
    mu = make_partition(rect, parse_parts(args.mu))
    e = pieri(args.size, mu, args.shape)
    if args.classical:
        e = _classical(e)
    _emit_expansion(e, args, f"pieri-{args.shape}")
    return EXIT_OK


def _cmd_localize(args) -> int:
    rect = Rect(args.m, args.n)
    gamma = make_partition(rect, parse_parts(args.gamma))
    eta = make_partition(rect, parse_parts(args.eta))
    extra = {"gamma": gamma.to_json(), "eta": eta.to_json()}
    _emit_poly(xi(gamma, eta), rect, args.format, "localize", extra)
    return EXIT_OK


def _cmd_product(args) -> int:
    rect = Rect(args.m, args.n)
    lam = make_partition(rect, parse_parts(args.lam))
    mu = make_partition(rect, parse_parts(args.mu))
    e = eq_quantum_product(lam, mu, cap=args.max_fixed_points)
    if args.classical:
        e = _classical(e)
    _emit_expansion(e, args, "product")
    return EXIT_OK


def _cmd_huangli(args) -> int:
    rect = Rect(args.m, args.n)
    mu = make_partition(rect, parse_parts(args.mu))
    classical = huangli_column_pieri(args.size, mu)
    wide = Rect(args.m, args.n + 1)
    e = Expansion(wide, {(lam, 0): c for lam, c in classical.items()})
    args.expand = True
    _emit_expansion(e, args, "huangli")
    return EXIT_OK


def _cmd_crosscheck(args) -> int:
    rect = Rect(args.m, args.n)
    report = crosscheck_pieri(rect, max_fixed_points=args.max_fixed_points, workers=args.parallel,
                              consistency=args.consistency)
    if args.format == "json":
        print(json.dumps(report.to_json()))
    else:
        print(report.message)
        print(f"checked {report.checked}, oracle skipped {report.skipped}")
        for f in report.failures:
            print(json.dumps(f))
    return EXIT_OK if report.ok else EXIT_CHECK


COMMANDS = {
    "pieri": _cmd_pieri,
    "localize": _cmd_localize,
    "product": _cmd_product,
    "huangli": _cmd_huangli,
    "crosscheck": _cmd_crosscheck,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (InvalidPartition, InvalidP, InvalidK, TooLarge, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
