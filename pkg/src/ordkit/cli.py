"""Command-line front end.

Exit codes: 0 success, 1 domain error, 2 syntax or usage error,
3 self-test failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import core
from .bij import cnf_head, format_point, pairing
from .errors import OrdinalError, OrdinalSyntaxError
from .finsupp import FinSuppFn, cnf_eval, cnf_inv
from .oracle import CORE_OPS, MUTANTS, SampleConfig, run_property_suite
from .seqinj import OrdSequence, seq_decode, seq_encode
from .syntax import parse_ordinal, to_data

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_SYNTAX = 2
EXIT_SELFTEST = 3


class _Output:
    def __init__(self, as_json: bool, trace: bool):
        self.as_json = as_json
        self.trace = self._trace if trace else None

    @staticmethod
    def _trace(name, x, y):
        print(f"{name}\t{format_point(x)}\t{format_point(y)}", file=sys.stderr)

    def data(self, x):
        if isinstance(x, core.Ordinal):
            return to_data(x)
        if isinstance(x, (tuple, list)):
            return [self.data(p) for p in x]
        if isinstance(x, FinSuppFn):
            return [[to_data(i), to_data(v)] for i, v in x.entries]
        if isinstance(x, int) and not isinstance(x, bool):
            return str(x)
        return x

    def emit(self, x):
        if self.as_json:
            print(json.dumps(self.data(x), separators=(",", ":")))
        elif isinstance(x, FinSuppFn):
            for i, v in x.entries:
                print(f"{i}: {v}")
        else:
            print(format_point(x) if isinstance(x, tuple) else str(x))


def _ord(text: str) -> core.Ordinal:
    return parse_ordinal(text)


def _cmd_norm(args, out):
    out.emit(_ord(args.expr))


def _cmd_cmp(args, out):
    out.emit(str(core.compare(_ord(args.a), _ord(args.b))))


def _cmd_binary(args, out):
    fn = {"add": core.add, "mul": core.mul, "pow": core.power, "sub": core.sub_left}[args.command]
    out.emit(fn(_ord(args.a), _ord(args.b)))


def _cmd_div(args, out):
    out.emit(core.div_mod(_ord(args.z), _ord(args.a)))


def _cmd_leading(args, out):
    out.emit(core.leading(_ord(args.expr)))


def _cmd_classify(args, out):
    kind, finite = core.classify(_ord(args.expr))
    if out.as_json:
        out.emit({"kind": str(kind), "finite": finite})
    else:
        out.emit(f"{kind} {'finite' if finite else 'infinite'}")


def _cmd_pair(args, out):
    beta = _ord(args.beta)
    x, y = _ord(args.x), _ord(args.y)
    out.emit(pairing(beta).forward((x, y), trace=out.trace))


def _cmd_unpair(args, out):
    beta = _ord(args.beta)
    out.emit(pairing(beta).backward(_ord(args.z), trace=out.trace))


def _cmd_cnfhead(args, out):
    e = cnf_head(_ord(args.beta))
    z = _ord(args.z)
    out.emit(e.backward(z, trace=out.trace) if args.inverse else e.forward(z, trace=out.trace))


def _cmd_cnfmap(args, out):
    alpha, beta = _ord(args.alpha), _ord(args.beta)
    rest = [_ord(t) for t in args.args]
    if args.mode == "eval":
        if len(rest) % 2:
            raise OrdinalError("cnfmap eval expects INDEX VALUE pairs")
        mapping = {}
        for i in range(0, len(rest), 2):
            if rest[i] in mapping:
                raise OrdinalError(f"index {rest[i]} given twice")
            mapping[rest[i]] = rest[i + 1]
        out.emit(cnf_eval(FinSuppFn.from_mapping(alpha, beta, mapping)))
    else:
        if len(rest) != 1:
            raise OrdinalError("cnfmap inv expects exactly one ordinal Z")
        out.emit(cnf_inv(alpha, beta, rest[0]))


def _cmd_seq(args, out):
    beta = _ord(args.beta)
    if args.mode == "encode":
        s = OrdSequence(beta, tuple(_ord(t) for t in args.items))
        out.emit(seq_encode(beta, s))
        return
    if len(args.items) != 1:
        raise OrdinalError("seq decode expects exactly one ordinal Z")
    s = seq_decode(beta, _ord(args.items[0]))
    if s is None:
        out.emit(None if out.as_json else "NotInImage")
    else:
        out.emit(list(s.items) if out.as_json else str(s))


def _cmd_selftest(args, out):
    cfg = SampleConfig(seed=args.seed, count=args.samples, exponent_pool=(0, 1, 2, 3), max_coefficient=9, max_terms=3)
    ops = MUTANTS[args.mutant] if args.mutant else CORE_OPS
    report = run_property_suite(cfg, ops)
    if out.as_json:
        print(report.to_json())
    else:
        print(report.to_text())
    return EXIT_OK if report.passed else EXIT_SELFTEST


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
    common.add_argument("--trace", action="store_true", default=argparse.SUPPRESS, help="bijection step trace on stderr")

    parser = argparse.ArgumentParser(prog="ordkit", description="Ordinal arithmetic below epsilon-zero and canonical bijections.")
    parser.add_argument("--json", action="store_true", help="emit JSON")
    parser.add_argument("--trace", action="store_true", help="bijection step trace on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("norm", parents=[common], help="print the normal form of EXPR")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_norm)

    p = sub.add_parser("cmp", parents=[common], help="compare two ordinals (LT, EQ, GT)")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=_cmd_cmp)

    for name, helptext in [
        ("add", "A + B"),
        ("mul", "A * B"),
        ("pow", "A ^ B"),
        ("sub", "the G with A + G = B"),
    ]:
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("a")
        p.add_argument("b")
        p.set_defaults(func=_cmd_binary)

    p = sub.add_parser("div", parents=[common], help="(Q, R) with Z = A*Q + R and R < A")
    p.add_argument("z")
    p.add_argument("a")
    p.set_defaults(func=_cmd_div)

    p = sub.add_parser("leading", parents=[common], help="(exponent, coefficient, tail) of the head term")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_leading)

    p = sub.add_parser("classify", parents=[common], help="zero / successor / limit")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("pair", parents=[common], help="canonical pairing of X, Y below BETA")
    p.add_argument("beta")
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(func=_cmd_pair)

    p = sub.add_parser("unpair", parents=[common], help="inverse of pair")
    p.add_argument("beta")
    p.add_argument("z")
    p.set_defaults(func=_cmd_unpair)

    p = sub.add_parser("cnfhead", parents=[common], help="bijection BETA -> w^g onto the leading power")
    p.add_argument("beta")
    p.add_argument("z")
    p.add_argument("--inverse", action="store_true")
    p.set_defaults(func=_cmd_cnfhead)

    p = sub.add_parser("cnfmap", parents=[common], help="Cantor normal form map ALPHA^BETA <-> finite-support functions")
    p.add_argument("mode", choices=["eval", "inv"])
    p.add_argument("alpha")
    p.add_argument("beta")
    p.add_argument("args", nargs="*", help="eval: INDEX VALUE ...; inv: Z")
    p.set_defaults(func=_cmd_cnfmap)

    p = sub.add_parser("seq", parents=[common], help="finite sequence coding below BETA")
    p.add_argument("mode", choices=["encode", "decode"])
    p.add_argument("beta")
    p.add_argument("items", nargs="*", help="encode: E1 E2 ...; decode: Z")
    p.set_defaults(func=_cmd_seq)

    p = sub.add_parser("selftest", parents=[common], help="run the property and differential suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--mutant", choices=sorted(MUTANTS), help=argparse.SUPPRESS)
    p.set_defaults(func=_cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = _Output(args.json, args.trace)
    try:
        code = args.func(args, out)
    except OrdinalSyntaxError as exc:
        print(f"ordkit: syntax error {exc}", file=sys.stderr)
        return EXIT_SYNTAX
    except (OrdinalError, ValueError) as exc:
        print(f"ordkit: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK if code is None else code


if __name__ == "__main__":
    sys.exit(main())
