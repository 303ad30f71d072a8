"""Command-line front end.

Every verb is a thin adapter: load tensor documents, call one library
function, write the result back through the canonical serializer.  Exit
status 0 means success, 1 means a check-style verb answered false/absent,
2 means a usage or data error (bad files, shape violations, resource caps,
failed weight hypotheses).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import core, decomposition, ginverse, oracle, residuation
from ._backend import backend_name
from .core import BooleanTensor, Shape
from .errors import EinboolError
from .io import dump_tensor, dumps, load_tensor

__all__ = ["main", "main_entry"]


def _emit_tensor(t: BooleanTensor, out: Optional[str]) -> None:
    if out:
        dump_tensor(t, out)
    else:
        print(dumps(t))


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "absent"
    if isinstance(v, BooleanTensor):
        return dumps(v)
    return str(v)


def _emit_report(pairs: list[tuple[str, object]], as_json: bool) -> None:
    if as_json:
        doc = {}
        for k, v in pairs:
            doc[k] = json.loads(dumps(v)) if isinstance(v, BooleanTensor) else v
        print(json.dumps(doc, separators=(", ", ": ")))
    else:
        for k, v in pairs:
            print(f"{k}: {_fmt(v)}")


def _parse_shape(text: str) -> Shape:
    parts = text.split("x")
    if len(parts) != 2:
        raise EinboolError(f"shape must look like 2,2x3 (rows x cols), got {text!r}")
    try:
        row_dims = tuple(int(d) for d in parts[0].split(",") if d)
        col_dims = tuple(int(d) for d in parts[1].split(",") if d)
    except ValueError:
        raise EinboolError(f"shape dimensions must be integers, got {text!r}") from None
    return Shape(row_dims, col_dims)


def _optional_tensor_result(t: Optional[BooleanTensor], args) -> int:
    if t is None:
        _emit_report([("result", None)], args.json)
        return 1
    _emit_tensor(t, args.output)
    return 0


def _cmd_einsum(args) -> int:
    _emit_tensor(core.einstein_product(load_tensor(args.a), load_tensor(args.b)), args.output)
    return 0


def _cmd_add(args) -> int:
    _emit_tensor(core.add(load_tensor(args.a), load_tensor(args.b)), args.output)
    return 0


def _cmd_transpose(args) -> int:
    _emit_tensor(core.transpose(load_tensor(args.a)), args.output)
    return 0


def _cmd_complement(args) -> int:
    _emit_tensor(core.complement(load_tensor(args.a)), args.output)
    return 0


def _cmd_closure(args) -> int:
    _emit_tensor(core.closure(load_tensor(args.a)), args.output)
    return 0


def _cmd_trace(args) -> int:
    _emit_report([("result", core.trace(load_tensor(args.a)))], args.json)
    return 0


def _cmd_weight(args) -> int:
    _emit_report([("result", core.weight(load_tensor(args.a)))], args.json)
    return 0


def _cmd_classify(args) -> int:
    flags = core.classify(load_tensor(args.a))
    _emit_report(
        [
            ("result", flags.permutation),
            ("symmetric", flags.symmetric),
            ("idempotent", flags.idempotent),
            ("orthogonal", flags.orthogonal),
            ("diagonal", flags.diagonal),
            ("permutation", flags.permutation),
        ],
        args.json,
    )
    return 0 if flags.permutation else 1


def _cmd_leq(args) -> int:
    ok = core.leq(load_tensor(args.a), load_tensor(args.b))
    _emit_report([("result", ok)], args.json)
    return 0 if ok else 1


def _cmd_solve(args) -> int:
    solver = residuation.solve_left if args.side == "left" else residuation.solve_right
    report = solver(load_tensor(args.a), load_tensor(args.b))
    pairs: list[tuple[str, object]] = [
        ("result", report.solvable),
        ("max_solution", report.max_solution),
        ("witness", report.exact_witness),
    ]
    _emit_report(pairs, args.json)
    return 0 if report.solvable else 1


def _cmd_max_solution(args) -> int:
    fn = residuation.max_left_solution if args.side == "left" else residuation.max_right_solution
    _emit_tensor(fn(load_tensor(args.a), load_tensor(args.b)), args.output)
    return 0


def _cmd_range_subset(args) -> int:
    ok = residuation.range_subset(load_tensor(args.b), load_tensor(args.a))
    _emit_report([("result", ok)], args.json)
    return 0 if ok else 1


def _cmd_check_axioms(args) -> int:
    a = load_tensor(args.a)
    x = load_tensor(args.x)
    if args.weighted:
        weights = ginverse.WeightPair(load_tensor(args.weighted[0]), load_tensor(args.weighted[1]))
        report = ginverse.check_wmp_axioms(a, weights, x)
    else:
        report = ginverse.check_g_axioms(a, x)
    pairs = [("result", report.all_four)]
    pairs += [(k, v) for k, v in report.as_dict().items()]
    _emit_report(pairs, args.json)
    return 0 if report.all_four else 1


def _cmd_ginv_max(args) -> int:
    _emit_tensor(ginverse.max_g_inverse(load_tensor(args.a)), args.output)
    return 0


def _cmd_ginv_reflexive(args) -> int:
    _emit_tensor(ginverse.max_reflexive_g_inverse(load_tensor(args.a)), args.output)
    return 0


def _cmd_ginv_13(args) -> int:
    return _optional_tensor_result(ginverse.one_three_inverse(load_tensor(args.a)), args)


def _cmd_ginv_14(args) -> int:
    return _optional_tensor_result(ginverse.one_four_inverse(load_tensor(args.a)), args)


def _cmd_mp(args) -> int:
    return _optional_tensor_result(ginverse.mp_inverse(load_tensor(args.a)), args)


def _cmd_inverse(args) -> int:
    return _optional_tensor_result(ginverse.inverse(load_tensor(args.a)), args)


def _cmd_wmp(args) -> int:
    weights = ginverse.WeightPair(load_tensor(args.m), load_tensor(args.n))
    return _optional_tensor_result(ginverse.wmp_inverse(load_tensor(args.a), weights), args)


def _cmd_rank(args) -> int:
    cert = decomposition.boolean_rank(load_tensor(args.a))
    pairs: list[tuple[str, object]] = [("result", cert.rank)]
    if cert.witness is not None:
        pairs.append(("witness_left", cert.witness[0]))
        pairs.append(("witness_right", cert.witness[1]))
    _emit_report(pairs, args.json)
    return 0


def _cmd_decompose(args) -> int:
    try:
        middle = tuple(int(d) for d in args.middle.split(","))
    except ValueError:
        raise EinboolError(f"--middle must be comma-separated integers, got {args.middle!r}") from None
    found = decomposition.search_space_decomposition(load_tensor(args.a), middle)
    if found is None:
        _emit_report([("result", None)], args.json)
        return 1
    _emit_report(
        [
            ("result", True),
            ("left", found.left),
            ("right", found.right),
            ("middle", ",".join(map(str, found.middle_dims))),
        ],
        args.json,
    )
    return 0


def _cmd_regular(args) -> int:
    a = load_tensor(args.a)
    shortcut = decomposition.is_regular_by_rank(a)
    ok = shortcut if shortcut is not None else ginverse.is_regular(a)
    _emit_report([("result", ok)], args.json)
    return 0 if ok else 1


EXPERIMENT_CELL_CAP = 16


def _cmd_experiment(args) -> int:
    if args.topic != "rank-regularity":
        raise EinboolError(f"unknown experiment {args.topic!r}; available: rank-regularity")
    shape = _parse_shape(args.shape)
    if shape.cells > EXPERIMENT_CELL_CAP or shape.row_count > decomposition.RANK_SEARCH_CAP \
            or shape.col_count > decomposition.RANK_SEARCH_CAP:
        raise EinboolError(
            f"experiment shape {shape} too large: at most {EXPERIMENT_CELL_CAP} cells and "
            f"{decomposition.RANK_SEARCH_CAP} flattened rows/columns"
        )
    table: dict[int, list[int]] = {}
    for t in oracle.enumerate_tensors(shape):
        r = decomposition.boolean_rank(t).rank
        regular = ginverse.is_regular(t)
        total, reg = table.get(r, [0, 0])
        table[r] = [total + 1, reg + (1 if regular else 0)]
    pairs: list[tuple[str, object]] = [("result", 1 << shape.cells)]
    for r in sorted(table):
        total, reg = table[r]
        pairs.append((f"rank_{r}", f"total={total} regular={reg} singular={total - reg}"))
    _emit_report(pairs, args.json)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="einbool",
        description="Boolean tensor algebra under the Einstein product "
                    f"(kernel backend: {backend_name()})",
    )
    sub = parser.add_subparsers(dest="verb", required=True, metavar="verb")

    def add(name, handler, inputs, help_text, tensor_out=False, extra=None):
        sp = sub.add_parser(name, help=help_text)
        for arg in inputs:
            sp.add_argument(arg, help=f"tensor document ({arg})")
        if extra:
            extra(sp)
        if tensor_out:
            sp.add_argument("-o", "--output", default=None, help="write result here instead of stdout")
        sp.add_argument("--json", action="store_true", help="emit reports as JSON")
        sp.set_defaults(handler=handler)
        return sp

    def side_flag(sp):
        sp.add_argument("--side", choices=("left", "right"), required=True,
                        help="left solves x * a, right solves a * x")

    add("einsum", _cmd_einsum, ["a", "b"], "Einstein product a * b", tensor_out=True)
    add("add", _cmd_add, ["a", "b"], "entrywise OR", tensor_out=True)
    add("transpose", _cmd_transpose, ["a"], "swap row and column groups", tensor_out=True)
    add("complement", _cmd_complement, ["a"], "entrywise bit flip", tensor_out=True)
    add("closure", _cmd_closure, ["a"], "sum of all positive powers", tensor_out=True)
    add("trace", _cmd_trace, ["a"], "count of diagonal ones")
    add("weight", _cmd_weight, ["a"], "count of ones")
    add("classify", _cmd_classify, ["a"], "structural flags; summary answers: is it a permutation?")
    add("leq", _cmd_leq, ["a", "b"], "entrywise order a <= b")
    add("solve", _cmd_solve, ["a", "b"], "solve x * a = b (left) or a * x = b (right)",
        extra=side_flag)
    add("max-solution", _cmd_max_solution, ["a", "b"],
        "largest x with x * a <= b (left) or a * x <= b (right)", tensor_out=True,
        extra=side_flag)
    add("range-subset", _cmd_range_subset, ["b", "a"], "is range(b) contained in range(a)?")
    add("check-axioms", _cmd_check_axioms, ["a", "x"],
        "evaluate the four inverse axioms for candidate x",
        extra=lambda sp: sp.add_argument("--weighted", nargs=2, metavar=("M", "N"),
                                         help="weight tensors for the weighted axioms"))
    add("ginv-max", _cmd_ginv_max, ["a"], "maximum generalized-inverse candidate", tensor_out=True)
    add("ginv-reflexive", _cmd_ginv_reflexive, ["a"],
        "maximum reflexive generalized inverse (regular tensors only)", tensor_out=True)
    add("ginv-13", _cmd_ginv_13, ["a"], "a {1,3}-inverse if one exists", tensor_out=True)
    add("ginv-14", _cmd_ginv_14, ["a"], "a {1,4}-inverse if one exists", tensor_out=True)
    add("mp", _cmd_mp, ["a"], "Moore-Penrose inverse if it exists", tensor_out=True)
    add("inverse", _cmd_inverse, ["a"], "two-sided inverse if it exists", tensor_out=True)
    add("wmp", _cmd_wmp, ["a", "m", "n"], "weighted Moore-Penrose inverse", tensor_out=True)
    add("rank", _cmd_rank, ["a"], "exact Boolean rank with witness factors")
    add("decompose", _cmd_decompose, ["a"], "search a space decomposition",
        extra=lambda sp: sp.add_argument("--middle", required=True,
                                         help="middle dimensions, comma separated"))
    add("regular", _cmd_regular, ["a"], "does a generalized inverse exist?")
    add("experiment", _cmd_experiment, [], "exhaustive tabulations over a small shape",
        extra=lambda sp: (
            sp.add_argument("topic", help="experiment name (rank-regularity)"),
            sp.add_argument("--shape", required=True, help="shape as rows x cols, e.g. 2,2x2"),
        ))
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except EinboolError as exc:
        print(f"einbool {args.verb}: {exc}", file=sys.stderr)
        return 2


def main_entry() -> None:
    sys.exit(main())
