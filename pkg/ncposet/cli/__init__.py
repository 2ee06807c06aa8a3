"""
This module exposes the :code:`ncposet` command line utility. Every computation of the
package is a subcommand writing text, JSON, CSV or SVG to stdout or :code:`--out`:

.. code-block:: bash
    :linenos:
    :emphasize-lines: 1

    ncposet count --d 2 --k 2 --brute
    ncposet mobius --d 1 --k 3
    ncposet parking --d 2 --values 2,1,3,1,3 --emit chain --format json
    ncposet render --what circle --partition "1|2,9,10|3|4,5,6,7,8|11" --out figure.svg
    ncposet verify --d 2 --n 7 --seed 3

usage: ncposet [-h] {count,table,poset,mobius,chains,parking,trees,antipode,verify,render,series} ...

Exit status is 2 on a usage error, 1 when a verification fails or a check of
:code:`verify` is skipped over budget, and 0 otherwise.
Logs go to stderr, :code:`--verbose` switches them to DEBUG.
"""
import argparse
from typing import Optional

from loguru import logger

import ncposet.constants as const
from ncposet.cli.commands import CONSTRAINTS, HANDLERS
from ncposet.errors import BudgetExceededError, VerificationError
from ncposet.formulas import KINDS
from ncposet.utils.config import load_config
from ncposet.utils.logger import configure


def add_common_arguments(parser: argparse.ArgumentParser) -> argparse.ArgumentParser:
    parser.add_argument(
        "--format",
        help="Output format, the configured default when absent.",
        choices=const.FORMATS,
        default=None,
    )
    parser.add_argument("--out", help="Write the artifact to this file instead of stdout.")
    parser.add_argument(
        "--budget",
        help=f"Largest number of poset elements to build, overrides {const.ENV_ELEMENT_BUDGET}.",
        type=int,
        default=None,
    )
    parser.add_argument("--seed", help="Seed for randomized checks.", type=int, default=None)
    parser.add_argument(
        "--verbose", help="Log at DEBUG level.", action="store_true", default=False
    )
    parser.add_argument("--config", help="A YAML configuration file.", default=None)
    return parser


def add_size_arguments(parser: argparse.ArgumentParser) -> argparse.ArgumentParser:
    parser.add_argument("--d", help="Block sizes are 1 modulo d.", type=int, default=1)
    size = parser.add_mutually_exclusive_group()
    size.add_argument("--k", help="Rank of the poset, n = dk + 1.", type=int)
    size.add_argument("--n", help="Ground set size.", type=int)
    return parser


def command_parser(command_string: Optional[str]) -> argparse.Namespace:
    argument_parser = argparse.ArgumentParser(prog="ncposet")
    parser = argument_parser.add_subparsers(
        help="Computations on d-indivisible noncrossing partitions.", dest="command"
    )
    parser.required = True

    def subcommand(name: str, summary: str) -> argparse.ArgumentParser:
        return add_common_arguments(add_size_arguments(parser.add_parser(name, help=summary)))

    count_parser = subcommand(const.COUNT, "Evaluate a closed-form count.")
    count_parser.add_argument("--kind", choices=KINDS, default=const.CARDINALITY)
    count_parser.add_argument("--i", help="Corank, for rank kinds.", type=int)
    count_parser.add_argument("--j", help="Rank, for rank kinds.", type=int)
    count_parser.add_argument(
        "--brute", help="Also count by building the poset.", action="store_true"
    )

    table_parser = subcommand(const.TABLE, "Print a rank-count triangle up to k.")
    table_parser.add_argument("--kind", choices=const.RANK_KINDS, default=const.RANK_COUNT)
    table_parser.add_argument(
        "--brute", help="Check every entry by building the posets.", action="store_true"
    )

    poset_parser = subcommand(const.POSET, "List the elements of NC^d_n.")
    poset_parser.add_argument(
        "--generator", choices=(const.TREES, const.FILTER), default=const.TREES
    )

    subcommand(const.MOBIUS_COMMAND, "Print the Möbius value of NC^d_n.")

    chains_parser = subcommand(const.CHAINS, "Maximal chains of NC^d_n.")
    chains_parser.add_argument(
        "--emit",
        choices=(const.EMIT_LABELS, const.EMIT_CHAINS, const.EMIT_COUNT),
        default=const.EMIT_LABELS,
    )

    parking_parser = subcommand(const.PARKING, "d-parking functions and their chains and trees.")
    parking_parser.add_argument("--values", help="A parking function such as 2,1,3,1,3.")
    parking_parser.add_argument(
        "--emit",
        choices=(const.EMIT_CHAIN, const.EMIT_TREE, const.EMIT_EXPANSION, const.EMIT_COUNT),
        default=const.EMIT_CHAIN,
    )

    trees_parser = subcommand(const.TREES_COMMAND, "Plane trees on n + 1 vertices.")
    trees_parser.add_argument("--constraint", choices=tuple(CONSTRAINTS), default=const.DEGREE_1_MOD_D)
    trees_parser.add_argument(
        "--emit",
        choices=(const.EMIT_COUNT, const.EMIT_SHAPES, const.EMIT_PARTITIONS),
        default=const.EMIT_COUNT,
    )

    antipode_parser = subcommand(const.ANTIPODE, "The antipode of NC^d_n.")
    antipode_parser.add_argument(
        "--method", choices=(const.SCHMITT, const.HYPERTREE, const.BOTH), default=const.BOTH
    )

    subcommand(const.VERIFY, "Run every invariant check on NC^d_n.")

    render_parser = subcommand(const.RENDER, "Draw a partition, its plane tree or a parking tree.")
    render_parser.add_argument(
        "--what", choices=(const.CIRCLE, const.PLANE_TREE, const.PARKING_TREE), default=const.CIRCLE
    )
    render_parser.add_argument("--partition", help='A partition such as "1|2,9,10|3".')
    render_parser.add_argument("--values", help="A parking function such as 2,1,3,1,3.")

    subcommand(const.SERIES, "Coefficients of C·C* by corank and rank up to x^k.")

    command = command_string.split() if command_string else None
    return argument_parser.parse_args(args=command)


def resolve(args: argparse.Namespace) -> argparse.Namespace:
    """
    Fill unset flags from the configuration: defaults < YAML < environment < flags.
    """
    config = load_config(args.config)
    configure(const.DEBUG if args.verbose else config.log_level, config.log_file)
    if args.budget is not None and args.budget < 1:
        raise ValueError(f"--budget should be positive, got {args.budget}.")
    if args.budget is not None and args.budget != config.element_budget:
        logger.warning(f"Element budget set to {args.budget} from the command line.")
    args.budget = args.budget if args.budget is not None else config.element_budget
    args.chain_budget = config.chain_budget
    args.seed = args.seed if args.seed is not None else config.seed
    if args.format is None:
        args.format = const.SVG if args.command == const.RENDER else config.default_format
    if args.d < 1:
        raise ValueError(f"--d should be positive, got {args.d}.")
    return args


def main(command_string: Optional[str] = None) -> int:
    """
    Run one subcommand.

    :param command_string: Arguments as one string, sys.argv when None.
    :return: 2 on a usage error, 1 when a verification fails, 0 otherwise.
    :rtype: int
    """
    args = command_parser(command_string=command_string)
    try:
        ok = HANDLERS[args.command](resolve(args))
    except VerificationError as error:
        logger.error(f"Verification failed: {error}")
        return const.EXIT_FAILURE
    except (ValueError, TypeError, BudgetExceededError, OSError) as error:
        logger.error(str(error))
        return const.EXIT_USAGE
    return const.EXIT_OK if ok else const.EXIT_FAILURE
