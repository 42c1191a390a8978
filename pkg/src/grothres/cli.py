"""Command-line front end. Results go to stdout, traces and oracle reports to stderr.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import oracle
from .core import IntSeq, Partition, SExpansion, straighten_groth, straighten_schur
from .errors import InvariantViolation
from .pieri import pieri_expand
from .products import comultiply_g, comultiply_via_rectangle, multiply_g
from .schurexp import g_to_schur
from .symfunc import g_poly


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(f"{self.prog}: error: {message}")


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad partition {text!r}: {exc}") from None


def _seq(text: str) -> IntSeq:
    try:
        return IntSeq.parse(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer sequence {text!r}") from None


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        n = 0
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=None, help="accepted and ignored; every command is deterministic")

    parser = _Parser(prog="grothres", description="Stable Grothendieck polynomial structure constants.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("straighten-g", parents=[common], help="expand G_I for an integer sequence I")
    p.add_argument("seq", type=_seq)
    p = sub.add_parser("straighten-s", parents=[common], help="straighten s_I for an integer sequence I")
    p.add_argument("seq", type=_seq)

    p = sub.add_parser("mult", parents=[common], help="G_lam * G_mu")
    p.add_argument("lam", type=_partition)
    p.add_argument("mu", type=_partition)
    p.add_argument("--verify", action="store_true")

    p = sub.add_parser("pieri", parents=[common], help="G_lam * G_n by canceling segments")
    p.add_argument("lam", type=_partition)
    p.add_argument("n", type=_positive)
    p.add_argument("--trace", action="store_true")
    p.add_argument("--verify", action="store_true")

    p = sub.add_parser("comult", parents=[common], help="coproduct of G_nu")
    p.add_argument("nu", type=_partition)
    p.add_argument("--method", choices=("kernel", "rectangle"), default="kernel")
    p.add_argument("--verify", action="store_true")

    p = sub.add_parser("schur-expand", parents=[common], help="Schur expansion of G_lam(x_1..x_M)")
    p.add_argument("lam", type=_partition)
    p.add_argument("--vars", type=_positive, required=True)
    p.add_argument("--trace", action="store_true")
    p.add_argument("--verify", action="store_true")

    p = sub.add_parser("gpoly", parents=[common], help="G_lam(x_1..x_M) as an explicit polynomial")
    p.add_argument("lam", type=_partition)
    p.add_argument("--vars", type=_positive, required=True)
    return parser


def _err(line: str) -> None:
    print(line, file=sys.stderr)


def _execute(args) -> tuple[dict, object, Optional[oracle.Report]]:
    trace = _err if getattr(args, "trace", False) else None
    verify = getattr(args, "verify", False)
    cmd = args.command
    if cmd == "straighten-g":
        return {"seq": list(args.seq)}, straighten_groth(args.seq), None
    if cmd == "straighten-s":
        hit = straighten_schur(args.seq)
        return {"seq": list(args.seq)}, SExpansion({hit[1]: hit[0]} if hit else {}), None
    if cmd == "mult":
        e = multiply_g(args.lam, args.mu)
        rep = oracle.verify_mult(args.lam, args.mu, e) if verify else None
        return {"lam": list(args.lam), "mu": list(args.mu)}, e, rep
    if cmd == "pieri":
        e = pieri_expand(args.lam, args.n, trace=trace)
        rep = oracle.verify_mult(args.lam, Partition([args.n]), e) if verify else None
        return {"lam": list(args.lam), "n": args.n}, e, rep
    if cmd == "comult":
        e = comultiply_g(args.nu) if args.method == "kernel" else comultiply_via_rectangle(args.nu)
        rep = oracle.verify_comult(args.nu, e) if verify else None
        return {"nu": list(args.nu), "method": args.method}, e, rep
    if cmd == "schur-expand":
        e = g_to_schur(args.lam, args.vars, trace=trace)
        rep = oracle.verify_schur_expansion(args.lam, args.vars, e) if verify else None
        return {"lam": list(args.lam), "vars": args.vars}, e, rep
    if cmd == "gpoly":
        return {"lam": list(args.lam), "vars": args.vars}, g_poly(args.lam, args.vars), None
    raise _Usage(f"unknown command {cmd}")  # pragma: no cover


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        inputs, result, report = _execute(args)
    except _Usage as exc:
        _err(parser.format_usage().rstrip())
        _err(str(exc))
        return 2
    except InvariantViolation as exc:
        _err(f"invariant violation ({type(exc).__name__}): {exc}")
        return 3
    except ValueError as exc:
        _err(f"error: {exc}")
        return 2

    if args.format == "json":
        envelope = {
            "command": args.command,
            "inputs": inputs,
            "result": result.to_json(),
            "verified": report.to_json() if report is not None else None,
        }
        print(json.dumps(envelope))
    else:
        print(result.render())
    if report is not None:
        _err(f"verify: {'ok' if report.ok else 'FAILED'} {json.dumps(report.witness, sort_keys=True)}")
        if not report.ok:
            return 1
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
