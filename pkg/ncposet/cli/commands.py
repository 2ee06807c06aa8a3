"""
Handlers behind every subcommand.

Each handler reads a resolved :code:`argparse.Namespace`, writes its artifact
through :code:`emit` and returns whether every comparison it made held.
"""
import argparse
import json
from typing import Any, Callable, Dict, List

import attr
import pandas as pd
from loguru import logger

import ncposet.constants as const
from ncposet.antipode import antipode_hypertrees, antipode_schmitt
from ncposet.chains import chain_labels, chains_of, enumerate_parking, parking_to_chain
from ncposet.errors import EmptyPosetFamilyError
from ncposet.formulas import closed_form
from ncposet.parking_trees import expansion, parking_to_tree, tree_to_parking
from ncposet.plane_trees import (
    ShapeConstraint,
    enumerate_shapes,
    partition_to_tree,
    reconstruct_labels,
    tree_to_partition,
)
from ncposet.poset import build_poset, mobius
from ncposet.render import render_circle, render_parking_tree, render_plane_tree
from ncposet.series import solve_cc_star
from ncposet.types.parking import DParkingFunction
from ncposet.types.partition import NoncrossingPartition
from ncposet.types.series import TruncatedSeries
from ncposet.utils.file_handler import emit
from ncposet.utils.misc import parse_int_list
from ncposet.verify import brute_force_count, run_suite

CONSTRAINTS = {
    const.ALL: lambda d: ShapeConstraint.unconstrained(),
    const.DEGREE_1_MOD_D: ShapeConstraint.degree_1_mod_d,
    const.D_DIVISIBLE: ShapeConstraint.d_divisible,
    const.D_ARY: ShapeConstraint.d_ary,
}


def resolve_k(args: argparse.Namespace) -> int:
    """
    The rank k from --k, or from --n = dk + 1.

    :raises EmptyPosetFamilyError: If --n is not 1 modulo d.
    :raises ValueError: If neither is given.
    """
    if args.k is not None:
        if args.k < 0:
            raise ValueError(f"--k should be nonnegative, got {args.k}.")
        return int(args.k)
    if args.n is not None:
        if args.n < 1 or (args.n - 1) % args.d:
            raise EmptyPosetFamilyError(args.n, args.d)
        return int((args.n - 1) // args.d)
    raise ValueError(f"{args.command} needs --k or --n.")


def _require_format(args: argparse.Namespace, *allowed: str) -> str:
    if args.format not in allowed:
        raise ValueError(f"{args.command} writes {', '.join(allowed)}, not {args.format}.")
    return str(args.format)


def _dump(content: Any) -> str:
    return json.dumps(content, indent=2)


def _frame_text(frame: pd.DataFrame, fmt: str) -> str:
    if fmt == const.CSV:
        return str(frame.to_csv())
    return str(frame.to_string())


def count_command(args: argparse.Namespace) -> bool:
    fmt = _require_format(args, const.TEXT, const.JSON)
    if args.kind in const.RANK_KINDS and args.k is None and args.n is None:
        k = None
    else:
        k = resolve_k(args)
    formula = closed_form(args.kind, args.d, k=k, i=args.i, j=args.j)
    result: Dict[str, Any] = {"kind": args.kind, const.D: args.d, "formula": formula}
    ok = True
    if args.brute:
        brute = brute_force_count(args.kind, args.d, k=k, i=args.i, j=args.j, budget=args.budget)
        ok = brute == formula
        result.update({"brute": brute, "ok": ok})
    if fmt == const.JSON:
        emit(_dump(result), args.out)
    elif args.brute:
        emit(f"formula={formula} brute={result['brute']} {'OK' if ok else 'MISMATCH'}", args.out)
    else:
        emit(f"formula={formula}", args.out)
    return ok


def table_command(args: argparse.Namespace) -> bool:
    """
    Rank-count triangle: row k, column j holds the count at corank k − j and rank j.
    """
    fmt = _require_format(args, const.TEXT, const.JSON, const.CSV)
    kind = args.kind if args.kind in const.RANK_KINDS else const.RANK_COUNT
    top = resolve_k(args)
    rows = [{j: closed_form(kind, args.d, i=k - j, j=j) for j in range(k + 1)} for k in range(top + 1)]
    ok = True
    if args.brute:
        brute = [
            {j: brute_force_count(kind, args.d, i=k - j, j=j, budget=args.budget) for j in range(k + 1)}
            for k in range(top + 1)
        ]
        ok = brute == rows
        if not ok:
            logger.error(f"Brute-force {kind} rows {brute} differ from the formula.")
    frame = pd.DataFrame(rows, index=pd.Index(range(top + 1), name=const.K))
    frame.columns.name = "j"
    frame = frame.astype("Int64")
    if fmt == const.JSON:
        emit(_dump([[int(value) for value in row.values()] for row in rows]), args.out)
    else:
        emit(_frame_text(frame, fmt), args.out)
    return ok


def poset_command(args: argparse.Namespace) -> bool:
    fmt = _require_format(args, const.TEXT, const.JSON, const.CSV)
    k = resolve_k(args)
    poset = build_poset(args.d * k + 1, args.d, budget=args.budget, generator=args.generator)
    if fmt == const.JSON:
        emit(poset.to_schema().json(indent=2), args.out)
        return True
    frame = pd.DataFrame(
        {
            "partition": [str(pi) for pi in poset.elements],
            "rank": list(poset.rank_of),
            "covers": [len(row) for row in poset.covers],
        }
    )
    emit(_frame_text(frame, fmt), args.out)
    return True


def mobius_command(args: argparse.Namespace) -> bool:
    fmt = _require_format(args, const.TEXT, const.JSON)
    k = resolve_k(args)
    value = mobius(build_poset(args.d * k + 1, args.d, budget=args.budget))
    formula = closed_form(const.MOBIUS, args.d, k=k)
    if value != formula:
        logger.error(f"mu(NC^{args.d}_{args.d * k + 1}) = {value} but the formula gives {formula}.")
    if fmt == const.JSON:
        emit(_dump({const.MOBIUS: value, "formula": formula}), args.out)
    else:
        emit(str(value), args.out)
    return bool(value == formula)


def chains_command(args: argparse.Namespace) -> bool:
    fmt = _require_format(args, const.TEXT, const.JSON)
    k = resolve_k(args)
    poset = build_poset(args.d * k + 1, args.d, budget=args.budget)
    chains = chains_of(poset, budget=args.chain_budget)
    if args.emit == const.EMIT_COUNT:
        emit(_dump({const.EMIT_COUNT: len(chains)}) if fmt == const.JSON else str(len(chains)), args.out)
    elif args.emit == const.EMIT_CHAINS:
        if fmt == const.JSON:
            emit(_dump([[pi.to_schema().dict() for pi in chain] for chain in chains]), args.out)
        else:
            emit("\n".join(" < ".join(str(pi) for pi in chain) for chain in chains), args.out)
    else:
        labels = [chain_labels(chain) for chain in chains]
        if fmt == const.JSON:
            emit(_dump([list(row) for row in labels]), args.out)
        else:
            emit("\n".join(",".join(str(value) for value in row) for row in labels), args.out)
    return True


def parking_command(args: argparse.Namespace) -> bool:
    """
    With --values, the chain, tree or expansion of one parking function, else every
    d-parking function of length k.
    """
    fmt = _require_format(args, const.TEXT, const.JSON)
    if args.values is None:
        functions = list(enumerate_parking(args.d, resolve_k(args)))
        if args.emit == const.EMIT_COUNT:
            count = len(functions)
            emit(_dump({const.EMIT_COUNT: count}) if fmt == const.JSON else str(count), args.out)
        elif fmt == const.JSON:
            emit(_dump([list(pf.values) for pf in functions]), args.out)
        else:
            emit("\n".join(str(pf) for pf in functions), args.out)
        return True

    pf = DParkingFunction(args.d, parse_int_list(args.values))
    if args.emit == const.EMIT_TREE:
        tree = parking_to_tree(pf)
        emit(tree.to_schema().json() if fmt == const.JSON else repr(tree.root), args.out)
    elif args.emit == const.EMIT_EXPANSION:
        expanded = tree_to_parking(expansion(parking_to_tree(pf)))
        emit(expanded.to_schema().json() if fmt == const.JSON else str(expanded), args.out)
    else:
        chain = parking_to_chain(pf)
        if fmt == const.JSON:
            emit(_dump([pi.to_schema().dict() for pi in chain]), args.out)
        else:
            emit("\n".join(str(pi) for pi in chain), args.out)
    return True


def trees_command(args: argparse.Namespace) -> bool:
    """
    Plane trees on n + 1 vertices under a degree constraint.
    """
    fmt = _require_format(args, const.TEXT, const.JSON)
    n = args.n if args.n is not None else args.d * resolve_k(args) + 1
    shapes = list(enumerate_shapes(n + 1, CONSTRAINTS[args.constraint](args.d)))
    if args.emit == const.EMIT_COUNT:
        emit(_dump({const.EMIT_COUNT: len(shapes)}) if fmt == const.JSON else str(len(shapes)), args.out)
    elif args.emit == const.EMIT_SHAPES:
        nested = [shape.to_nested() for shape in shapes]
        emit(_dump(nested) if fmt == const.JSON else "\n".join(json.dumps(row) for row in nested), args.out)
    else:
        partitions = [tree_to_partition(reconstruct_labels(shape)) for shape in shapes]
        if fmt == const.JSON:
            emit(_dump([pi.to_schema().dict() for pi in partitions]), args.out)
        else:
            emit("\n".join(str(pi) for pi in partitions), args.out)
    return True


def antipode_command(args: argparse.Namespace) -> bool:
    fmt = _require_format(args, const.TEXT, const.JSON)
    k = resolve_k(args)
    n = args.d * k + 1
    values = {}
    if args.method in (const.SCHMITT, const.BOTH):
        values[const.SCHMITT] = antipode_schmitt(build_poset(n, args.d, budget=args.budget), args.chain_budget)
    if args.method in (const.HYPERTREE, const.BOTH):
        values[const.HYPERTREE] = antipode_hypertrees(n, args.d)
    answers = list(values.values())
    ok = all(value == answers[0] for value in answers)
    if not ok:
        logger.error(f"Antipode methods disagree on NC^{args.d}_{n}: {values}.")
    if fmt == const.JSON:
        emit(_dump({name: [term.dict() for term in value.to_schema()] for name, value in values.items()}), args.out)
    else:
        emit("\n".join(f"{name}: {value!r}" for name, value in values.items()) if not ok else repr(answers[0]), args.out)
    return ok


def verify_command(args: argparse.Namespace) -> bool:
    fmt = _require_format(args, const.TEXT, const.JSON)
    k = resolve_k(args)
    results = run_suite(
        args.d,
        args.d * k + 1,
        seed=args.seed,
        budget=args.budget,
        chain_budget=args.chain_budget,
        progress=True,
    )
    if fmt == const.JSON:
        emit(_dump([attr.asdict(result) for result in results]), args.out)
    else:
        emit("\n".join(str(result) for result in results), args.out)
    skipped = [result.name for result in results if result.skipped]
    if skipped:
        logger.warning(f"Checks skipped over budget count as failures: {skipped}.")
    return all(result.ok for result in results)


def render_command(args: argparse.Namespace) -> bool:
    _require_format(args, const.SVG)
    if args.what == const.PARKING_TREE:
        if args.values is None:
            raise ValueError("render --what parking-tree needs --values.")
        svg = render_parking_tree(parking_to_tree(DParkingFunction(args.d, parse_int_list(args.values))))
    else:
        if args.partition is None:
            raise ValueError(f"render --what {args.what} needs --partition.")
        pi = NoncrossingPartition.parse(args.partition)
        svg = render_circle(pi) if args.what == const.CIRCLE else render_plane_tree(partition_to_tree(pi))
    emit(svg, args.out)
    return True


def series_command(args: argparse.Namespace) -> bool:
    """
    [x^k s^i t^j] C·C* for a = a* = 1, rows k and columns j as in :code:`table`.
    """
    fmt = _require_format(args, const.TEXT, const.JSON, const.CSV)
    order = resolve_k(args)
    geometric = (1 - TruncatedSeries.variable(const.X, order)).reciprocal()
    c, c_star = solve_cc_star(geometric, geometric, args.d, order)
    product = c * c_star
    if fmt == const.JSON:
        emit(product.to_schema().json(indent=2), args.out)
        return True
    rows: List[Dict[int, int]] = []
    for k in range(order + 1):
        coefficients = product.x_coefficient(k)
        rows.append({j: int(coefficients.get((k - j, j), 0)) for j in range(k + 1)})
    frame = pd.DataFrame(rows, index=pd.Index(range(order + 1), name=const.K)).astype("Int64")
    frame.columns.name = "j"
    emit(_frame_text(frame, fmt), args.out)
    return True


HANDLERS: Dict[str, Callable[[argparse.Namespace], bool]] = {
    const.COUNT: count_command,
    const.TABLE: table_command,
    const.POSET: poset_command,
    const.MOBIUS_COMMAND: mobius_command,
    const.CHAINS: chains_command,
    const.PARKING: parking_command,
    const.TREES_COMMAND: trees_command,
    const.ANTIPODE: antipode_command,
    const.VERIFY: verify_command,
    const.RENDER: render_command,
    const.SERIES: series_command,
}
