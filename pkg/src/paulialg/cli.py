"""File-format command-line tool over the operator and circuit formats.

Every subcommand reads and writes the package's text formats (operator
files, circuit files, word lists, structure-constant CSV), so foreign
wrappers can delegate algebra to this process without re-implementing
any of it. Results go to --out or stdout.

Exit codes: 0 success, 1 runtime error (bad file contents, mismatched
operands), 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from . import coeff as cf
from .cliques import format_partition, partition_commuting
from .dla import lie_closure, structure_constants
from .operator import PauliOperator
from .pauli import PauliString
from .transforms import Circuit, fold_circuit


def _emit(text: str, out: Optional[str]) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as f:
            f.write(text)


def _load_words(path: str, num_qubits: int) -> list[PauliString]:
    with open(path, "r", encoding="utf-8") as f:
        lines = [ln.strip() for ln in f if ln.strip()]
    return [PauliString.from_word(ln, num_qubits) for ln in lines]


def _cmd_add(args) -> str:
    return (PauliOperator.load(args.a) + PauliOperator.load(args.b)).dumps()


def _cmd_mul(args) -> str:
    return (PauliOperator.load(args.a) * PauliOperator.load(args.b)).dumps()


def _cmd_scalar_mul(args) -> str:
    scalar = cf.parse_coefficient(args.coeff)
    return PauliOperator.load(args.a).scalar_mul(scalar).dumps()


def _cmd_dagger(args) -> str:
    return PauliOperator.load(args.a).dagger().dumps()


def _cmd_normalize(args) -> str:
    return PauliOperator.load(args.a).dumps()


def _cmd_commutator(args) -> str:
    return PauliOperator.load(args.a).commutator(PauliOperator.load(args.b)).dumps()


def _cmd_substitute(args) -> str:
    bindings = {}
    for item in args.bind or []:
        name, sep, value = item.partition("=")
        if not sep:
            raise ValueError(f"bad binding {item!r} (expected name=value)")
        bindings[name.strip()] = complex(float(value))
    return PauliOperator.load(args.a).substitute(bindings).dumps()


def _cmd_differentiate(args) -> str:
    return PauliOperator.load(args.a).differentiate(args.param).dumps()


def _cmd_fold(args) -> str:
    h = PauliOperator.load(args.operator)
    circuit = Circuit.load(args.circuit)
    split_at = args.split_at if args.split_at is not None else 0
    folded, remainder = fold_circuit(h, circuit, split_at)
    if args.remainder:
        with open(args.remainder, "w", encoding="utf-8") as f:
            f.write(remainder.dumps())
    return folded.dumps()


def _cmd_lie_closure(args) -> str:
    gens = _load_words(args.generators, args.qubits)
    return lie_closure(gens).dumps()


def _cmd_struct_const(args) -> str:
    gens = _load_words(args.generators, args.qubits)
    return structure_constants(lie_closure(gens)).dumps_csv()


def _cmd_cliques(args) -> str:
    return format_partition(partition_commuting(PauliOperator.load(args.a)))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pauli-tool",
        description="Operate on Pauli-operator and circuit text files.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def op2(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("a")
        p.add_argument("b")
        p.add_argument("-o", "--out", default=None)
        p.set_defaults(fn=fn)
        return p

    def op1(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("a")
        p.add_argument("-o", "--out", default=None)
        p.set_defaults(fn=fn)
        return p

    op2("add", _cmd_add, "sum of two operator files")
    op2("mul", _cmd_mul, "product of two operator files")
    op2("commutator", _cmd_commutator, "commutator of two operator files")
    op1("dagger", _cmd_dagger, "Hermitian conjugate of an operator file")
    op1("normalize", _cmd_normalize, "re-emit an operator file in canonical form")
    op1("cliques", _cmd_cliques, "greedy commuting-clique partition of an operator file")

    p = op1("scalar-mul", _cmd_scalar_mul, "scale an operator file by a coefficient")
    p.add_argument("--coeff", required=True, help="coefficient text, e.g. '(2.0,0.0)' or '(param a)'")

    p = op1("substitute", _cmd_substitute, "bind named parameters to values")
    p.add_argument("--bind", action="append", metavar="NAME=VALUE")

    p = op1("differentiate", _cmd_differentiate, "differentiate coefficients by a parameter")
    p.add_argument("--param", required=True)

    p = sub.add_parser("fold", help="fold a circuit tail into an operator")
    p.add_argument("operator")
    p.add_argument("circuit")
    p.add_argument("--split-at", type=int, default=None, dest="split_at")
    p.add_argument("--remainder", default=None, help="write the circuit prefix here")
    p.add_argument("-o", "--out", default=None)
    p.set_defaults(fn=_cmd_fold)

    p = sub.add_parser("lie-closure", help="Lie closure of a word-list file")
    p.add_argument("generators", help="file with one Pauli word per line")
    p.add_argument("--qubits", type=int, required=True)
    p.add_argument("-o", "--out", default=None)
    p.set_defaults(fn=_cmd_lie_closure)

    p = sub.add_parser("struct-const", help="structure constants CSV for a generator set")
    p.add_argument("generators", help="file with one Pauli word per line")
    p.add_argument("--qubits", type=int, required=True)
    p.add_argument("-o", "--out", default=None)
    p.set_defaults(fn=_cmd_struct_const)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text = args.fn(args)
        _emit(text, args.out)
    except (ValueError, TypeError, IndexError, OSError, KeyError) as exc:
        print(f"pauli-tool: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
