"""
Inbound adapter: turns argv into a validated CommandPlan.

Every usage problem raises UsageError (an input error, exit code 2) whose
message names the offending argument.
"""

import argparse
from typing import Literal, NoReturn

from pydantic import BaseModel, Field, ValidationError

from galois_covers.domain.exceptions import InputError

Command = Literal[
    "pi1",
    "order",
    "cosets",
    "subgroups",
    "cover",
    "universal",
    "deck",
    "lens-classify",
    "lens-compose",
    "lens-verify",
    "verify-galois",
    "cover-subgroup",
    "abelianize",
    "component",
    "catalog",
    "serialize",
]


class UsageError(InputError):
    """Raised when the command line cannot be turned into a plan."""

    pass


class CommandPlan(BaseModel):
    """One command with its parsed inputs and options."""

    command: Command
    inputs: list[str] = Field(default_factory=list)
    max_cosets: int | None = Field(default=None, ge=1)
    max_index: int | None = Field(default=None, ge=1)
    window: int | None = Field(default=None, ge=1)
    output: str | None = None
    workers: int | None = Field(default=None, ge=1)
    quiet: bool = False
    conjugacy: bool = False
    generators: bool = False
    n: int | None = Field(default=None, ge=1)
    params: list[int] = Field(default_factory=list)
    m: int | None = Field(default=None, ge=1)
    outer: int | None = Field(default=None, ge=1)
    inner: int | None = Field(default=None, ge=1)
    param: int | None = None
    sweep: int | None = Field(default=None, ge=1)


# Positional inputs per command: (dest, label used in "missing <label>", required)
COMMAND_INPUTS: dict[str, list[tuple[str, str, bool]]] = {
    "pi1": [("complex", "complex file", True)],
    "order": [("presentation", "presentation", True)],
    "cosets": [
        ("presentation", "presentation", True),
        ("subgroup", "subgroup file", True),
    ],
    "subgroups": [("presentation", "presentation", True)],
    "cover": [("complex", "complex file", True), ("subgroup", "subgroup file", True)],
    "universal": [("complex", "complex file", True)],
    "deck": [("complex", "complex file", True), ("subgroup", "subgroup file", False)],
    "verify-galois": [("complex", "complex file", True)],
    "cover-subgroup": [
        ("complex", "complex file", True),
        ("total", "total complex file", True),
        ("projection", "projection file", True),
    ],
    "abelianize": [("presentation", "presentation", True)],
    "component": [("complex", "complex file", True)],
    "catalog": [],
    "serialize": [("object", "object", True)],
}

COMMAND_HELP = {
    "pi1": "presentation of the fundamental group of a complex",
    "order": "order of a finitely presented group",
    "cosets": "coset table of a subgroup",
    "subgroups": "all subgroups up to an index",
    "cover": "covering complex attached to a subgroup",
    "universal": "universal cover of a complex",
    "deck": "order of the deck group of a cover",
    "lens-classify": "connected covers of a lens space",
    "lens-compose": "a cover of a cover of a lens space, as a cover of the base",
    "lens-verify": "brute-force check of the lens pullback group",
    "verify-galois": "round trips of the subgroup/cover correspondence",
    "cover-subgroup": "subgroup of a cover read back from its files",
    "abelianize": "invariant factors and free rank of H1",
    "component": "basepoint component of a complex",
    "catalog": "list named objects usable as @name",
    "serialize": "print an object in its text format",
}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise UsageError(message)


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        ) from None


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--max-cosets", type=int, help="live coset cap")
    common.add_argument("--workers", type=int, help="worker processes")
    common.add_argument("--output", help="output file (or prefix for covers)")
    common.add_argument("--quiet", action="store_true", help="warnings only")

    parser = _Parser(prog="galois-covers", description="Coverings of 2-complexes")
    sub = parser.add_subparsers(dest="command", metavar="command")

    for name, inputs in COMMAND_INPUTS.items():
        command = sub.add_parser(name, parents=[common], help=COMMAND_HELP[name])
        for dest, label, _ in inputs:
            command.add_argument(dest, nargs="?", help=label)
        if name in ("subgroups", "verify-galois"):
            command.add_argument("--max-index", type=int, help="largest subgroup index")
        if name == "subgroups":
            command.add_argument(
                "--conjugacy", action="store_true", help="group by conjugacy class"
            )
        if name in ("cosets", "cover-subgroup"):
            command.add_argument(
                "--generators", action="store_true", help="print subgroup generators"
            )

    classify = sub.add_parser(
        "lens-classify", parents=[common], help=COMMAND_HELP["lens-classify"]
    )
    classify.add_argument("n", nargs="?", type=int, help="lens order")
    classify.add_argument("params", nargs="?", type=_int_list, help="l1,...,lk")

    compose = sub.add_parser(
        "lens-compose", parents=[common], help=COMMAND_HELP["lens-compose"]
    )
    compose.add_argument("n", nargs="?", type=int, help="lens order")
    compose.add_argument("params", nargs="?", type=_int_list, help="l1,...,lk")
    compose.add_argument("outer", nargs="?", type=int, help="m of the first cover")
    compose.add_argument("inner", nargs="?", type=int, help="m of the second cover")

    verify = sub.add_parser(
        "lens-verify", parents=[common], help=COMMAND_HELP["lens-verify"]
    )
    verify.add_argument("n", nargs="?", type=int, help="lens order")
    verify.add_argument("m", nargs="?", type=int, help="divisor of n")
    verify.add_argument("param", nargs="?", type=int, help="parameter l prime to n")
    verify.add_argument("--window", type=int, help="|a| bound, default 10n")
    verify.add_argument("--sweep", type=int, help="check every case with n <= SWEEP")
    return parser


def _require(namespace: argparse.Namespace, dest: str, label: str) -> None:
    if getattr(namespace, dest, None) is None:
        raise UsageError(f"missing {label}")


def parse_cli(argv: list[str]) -> CommandPlan:
    """
    Raises:
        UsageError: unknown command, missing argument or malformed number.
    """
    namespace = build_parser().parse_args(argv)
    command = namespace.command
    if command is None:
        raise UsageError("missing command")

    inputs: list[str] = []
    for dest, label, required in COMMAND_INPUTS.get(command, []):
        if required:
            _require(namespace, dest, label)
        value = getattr(namespace, dest)
        if value is not None:
            inputs.append(value)

    if command in ("subgroups", "verify-galois"):
        _require(namespace, "max_index", "--max-index")
    if command in ("lens-classify", "lens-compose"):
        _require(namespace, "n", "lens order")
        _require(namespace, "params", "lens parameters")
    if command == "lens-compose":
        _require(namespace, "outer", "outer divisor")
        _require(namespace, "inner", "inner divisor")
    if command == "lens-verify" and namespace.sweep is None:
        _require(namespace, "n", "lens order")
        _require(namespace, "m", "divisor m")
        _require(namespace, "param", "parameter l")

    fields = {
        key: value
        for key, value in vars(namespace).items()
        if key in CommandPlan.model_fields and value is not None
    }
    try:
        return CommandPlan(**{**fields, "command": command, "inputs": inputs})
    except ValidationError as e:
        error = e.errors()[0]
        location = ".".join(str(part) for part in error["loc"])
        raise UsageError(f"argument {location}: {error['msg']}") from e
