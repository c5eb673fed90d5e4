"""Command-line interface: compute, list and verify, with machine-readable output.

Subcommands
-----------
exponents  compute E(V_lambda) for a partition or first-layer dominant weight
fourier    print the Fourier coefficient of a first-layer weight
syt        list the standard tableaux of a partition with their statistics
verify     run the identity suite at a given rank

Exit codes: 0 success, 1 mathematical disagreement or verification failure,
2 usage error.  The one environment knob is GENEXP_HP_CAP, the default rank
cap of the permutation-sum oracle.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time
from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Any

from . import exponents as exponents_mod
from . import quasisym, tableaux
from .exponents import ALL_METHODS, DEFAULT_HP_CAP, full_report
from .fourier import c_closed_form, solve_system
from .laurent import LaurentPolynomial
from .quasisym import CrossCheckError
from .weights import Weight, dominant_first_layer_weights, first_layer_weights, weight_from_partition

# Lets bare weight arguments like "-1,1" parse as positionals instead of flags.
_WEIGHT_LIKE = re.compile(r"^-\d+(?:,-?\d+)*$")


@dataclass
class OutputRecord:
    """One invocation's result: echo, parameters, payload, provenance, timing."""

    command: str
    params: dict[str, Any]
    result: dict[str, Any]
    methods: list[str] = field(default_factory=list)
    elapsed_s: float = 0.0

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "OutputRecord":
        return cls(
            command=data["command"],
            params=data["params"],
            result=data["result"],
            methods=list(data["methods"]),
            elapsed_s=data["elapsed_s"],
        )


class UsageError(Exception):
    pass


def _parse_input(text: str, rank_flag: int | None) -> Weight:
    """Accept a partition of rank+1 ("4,3,1") or a raw dominant weight ("1,0,-1")."""
    try:
        values = tuple(int(piece) for piece in text.split(","))
    except ValueError:
        raise UsageError(f"cannot parse {text!r} as comma-separated integers") from None
    if sum(values) == 0:
        weight = Weight(values)
        if rank_flag is not None and rank_flag != weight.n:
            raise UsageError(f"--n {rank_flag} conflicts with weight of rank {weight.n}")
        return weight
    if tableaux.is_partition(values):
        if rank_flag is not None and rank_flag + 1 != sum(values):
            raise UsageError(
                f"--n {rank_flag} conflicts with partition of {sum(values)}"
            )
        if sum(values) < 2:
            raise UsageError("partition must sum to at least 2 (rank >= 1)")
        return weight_from_partition(values)
    raise UsageError(
        f"{text!r} is neither a partition (weakly decreasing positive) "
        "nor a sum-zero weight"
    )


def _polynomial_payload(poly: LaurentPolynomial) -> dict[str, int]:
    return poly.to_json_dict()


def _emit(record: OutputRecord, fmt: str, text_lines: list[str]) -> None:
    if fmt == "json":
        print(json.dumps(record.to_dict(), indent=2, sort_keys=True))
    elif fmt == "csv":
        poly = record.result.get("polynomial")
        if poly is None:
            raise UsageError(f"--format csv requires a polynomial payload ({record.command})")
        print("exponent,coefficient")
        for exponent in sorted(poly, key=int):
            print(f"{exponent},{poly[exponent]}")
    else:
        for line in text_lines:
            print(line)


# -- exponents ----------------------------------------------------------------


def _cmd_exponents(args: argparse.Namespace) -> int:
    weight = _parse_input(args.input, args.n)
    if not weight.is_first_layer() or not weight.is_dominant():
        raise UsageError(f"{weight} is not a first-layer dominant weight")
    started = time.perf_counter()
    if args.method == "all":
        methods = tuple(
            m for m in ALL_METHODS if m != "hp" or weight.n <= args.hp_cap
        )
        report = full_report(weight, methods=methods, hp_cap=args.hp_cap)
        elapsed = time.perf_counter() - started
        result: dict[str, Any] = {
            "weight": str(weight),
            "rank": weight.n,
            "agreement": report.agreement,
            "disagreement": report.disagreement,
            "polynomials": {
                name: _polynomial_payload(poly)
                for name, poly in report.polynomials.items()
            },
        }
        if report.agreement:
            result["polynomial"] = _polynomial_payload(report.value)
            result["exponents"] = list(report.exponents)
        record = OutputRecord(
            "exponents",
            {"input": args.input, "method": args.method, "n": weight.n, "hp_cap": args.hp_cap},
            result,
            list(methods),
            elapsed,
        )
        if report.agreement:
            lines = [
                f"E(V_{weight}) = {report.value}",
                f"exponents: {', '.join(map(str, report.exponents))}",
                f"agreement: ok ({', '.join(methods)})",
            ]
            _emit(record, args.format, lines)
            return 0
        lines = [f"disagreement: {report.disagreement}"]
        lines += [f"  {name}: {poly}" for name, poly in report.polynomials.items()]
        _emit(record, args.format, lines)
        return 1
    poly = exponents_mod.compute(weight, args.method, hp_cap=args.hp_cap)
    elapsed = time.perf_counter() - started
    record = OutputRecord(
        "exponents",
        {"input": args.input, "method": args.method, "n": weight.n, "hp_cap": args.hp_cap},
        {
            "weight": str(weight),
            "rank": weight.n,
            "polynomial": _polynomial_payload(poly),
        },
        [args.method],
        elapsed,
    )
    _emit(record, args.format, [f"E(V_{weight}) = {poly}"])
    return 0


# -- fourier ------------------------------------------------------------------


def _cmd_fourier(args: argparse.Namespace) -> int:
    try:
        weight = Weight.parse(args.weight)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not weight.is_first_layer():
        raise UsageError(f"{weight} is not a first-layer weight")
    started = time.perf_counter()
    poly = c_closed_form(weight)
    result: dict[str, Any] = {
        "weight": str(weight),
        "rank": weight.n,
        "polynomial": _polynomial_payload(poly),
    }
    lines = [f"c_{{{weight}}} = {poly}"]
    status = 0
    if args.verify:
        table = solve_system(weight.n, rank_cap=max(weight.n, 7))
        mismatches = [
            mu for mu in first_layer_weights(weight.n) if table[mu] != c_closed_form(mu)
        ]
        result["solver_checked"] = len(table)
        result["solver_agrees"] = not mismatches
        if mismatches:
            lines.append(f"solver check at rank {weight.n}: FAILED at {mismatches[0]}")
            status = 1
        else:
            lines.append(f"solver check at rank {weight.n}: ok ({len(table)} weights)")
    elapsed = time.perf_counter() - started
    record = OutputRecord(
        "fourier",
        {"weight": args.weight, "verify": bool(args.verify)},
        result,
        ["closed-form"] + (["solver"] if args.verify else []),
        elapsed,
    )
    _emit(record, args.format, lines)
    return status


# -- syt ----------------------------------------------------------------------


def _cmd_syt(args: argparse.Namespace) -> int:
    try:
        shape = tableaux.parse_partition(args.partition)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    started = time.perf_counter()
    size = sum(shape)
    listing = []
    lines = [f"shape {','.join(map(str, shape))}: standard tableaux of size {size}"]
    for t in tableaux.syt_enumerate(shape):
        descents = sorted(t.descent_set())
        non_descents = sorted(set(range(1, size)) - set(descents))
        entry = {
            "rows": t.to_rows(),
            "descents": descents,
            "non_descents": non_descents,
            "height": t.height(),
            "reading_word": list(t.reading_word()),
            "charge": t.charge(),
        }
        listing.append(entry)
        lines.append(
            f"{t.to_rows()} Des={descents} coDes={non_descents} "
            f"ht={entry['height']} word={','.join(map(str, entry['reading_word']))} "
            f"ch={entry['charge']}"
        )
    lines.append(f"total: {len(listing)}")
    elapsed = time.perf_counter() - started
    record = OutputRecord(
        "syt",
        {"partition": args.partition},
        {"partition": list(shape), "count": len(listing), "tableaux": listing},
        ["enumeration"],
        elapsed,
    )
    _emit(record, args.format, lines)
    return 0


# -- verify ---------------------------------------------------------------------


def _check_fourier(rank: int) -> tuple[bool, str, str | None]:
    table = solve_system(rank, rank_cap=max(rank, 7))
    for mu in first_layer_weights(rank):
        if table[mu] != c_closed_form(mu):
            return False, f"{len(table)} weights", f"{mu}: solver {table[mu]} vs closed {c_closed_form(mu)}"
    return True, f"{len(table)} weights", None

def _check_bijection(rank: int) -> tuple[bool, str, str | None]:
    seen = set()
    for r in range(rank + 1):
        for subset in combinations(range(1, rank + 1), r):
            weight = quasisym.height_set_inverse(subset, rank)
            if not quasisym.is_quasi_dominant(weight):
                return False, "", f"Ht^-1({set(subset)}) = {weight} not quasi-dominant"
            if quasisym.height_set(weight) != frozenset(subset):
                return False, "", f"round trip failed at {set(subset)} -> {weight}"
            seen.add(weight)
    if len(seen) != 2**rank:
        return False, "", "height_set_inverse is not injective"
    return True, f"{2**rank} subsets", None


def _check_commutation(rank: int) -> tuple[bool, str, str | None]:
    for r in range(rank + 1):
        for subset in combinations(range(1, rank + 1), r):
            weight = quasisym.height_set_inverse(tableaux.phi_set(subset, rank), rank)
            if tableaux.phi_weight(weight) != tableaux.co(subset, rank):
                return False, "", f"commutation failed at {set(subset)}"
    return True, f"{2**rank} subsets", None


def _check_pairings(rank: int) -> tuple[bool, str, str | None]:
    for r in range(rank + 1):
        for subset in combinations(range(1, rank + 1), r):
            weight = quasisym.height_set_inverse(subset, rank)
            try:
                quasisym.pair_monomial(weight)
                quasisym.pair_fundamental(weight)
            except CrossCheckError as exc:
                return False, "", str(exc)
    return True, f"{2**rank} quasi-dominant weights", None


def _check_charge(rank: int) -> tuple[bool, str, str | None]:
    shapes = tableaux.partitions(rank + 1)
    total = 0
    for shape in shapes:
        for t in tableaux.syt_enumerate(shape):
            total += 1
            if t.height() != t.charge():
                return False, "", f"ht {t.height()} != ch {t.charge()} at {t.to_rows()}"
    return True, f"{len(shapes)} shapes, {total} tableaux", None


def _check_methods(rank: int, methods: tuple[str, ...], hp_cap: int) -> tuple[bool, str, str | None]:
    for weight in dominant_first_layer_weights(rank):
        report = full_report(weight, methods=methods, hp_cap=hp_cap)
        if not report.agreement:
            return False, "", f"{weight}: {report.disagreement}"
    count = len(dominant_first_layer_weights(rank))
    return True, f"{count} weights, methods: {', '.join(methods)}", None


def _cmd_verify(args: argparse.Namespace) -> int:
    rank = args.n
    if rank is None:
        raise UsageError("verify requires --n")
    if rank < 1:
        raise UsageError("--n must be at least 1")
    skip = set(args.skip or [])
    methods = tuple(
        m
        for m in ALL_METHODS
        if m not in skip and (m != "hp" or rank <= args.hp_cap)
    )
    started = time.perf_counter()
    checks = [
        ("fourier-closed-form-vs-solver", lambda: _check_fourier(rank)),
        ("height-set-bijection", lambda: _check_bijection(rank)),
        ("commutation-with-co", lambda: _check_commutation(rank)),
        ("pairing-identities", lambda: _check_pairings(rank)),
        ("height-equals-charge", lambda: _check_charge(rank)),
        ("method-agreement", lambda: _check_methods(rank, methods, args.hp_cap)),
    ]
    lines = [f"verify rank {rank} (hp cap {args.hp_cap})"]
    results = []
    all_pass = True
    first_counterexample = None
    for name, runner in checks:
        passed, detail, counterexample = runner()
        results.append(
            {"name": name, "pass": passed, "detail": detail, "counterexample": counterexample}
        )
        lines.append(f"{name:34s} {'pass' if passed else 'FAIL'}  ({detail})")
        if not passed:
            all_pass = False
            if first_counterexample is None:
                first_counterexample = f"{name}: {counterexample}"
    if all_pass:
        lines.append("all checks passed")
    else:
        lines.append(f"first counterexample: {first_counterexample}")
    elapsed = time.perf_counter() - started
    record = OutputRecord(
        "verify",
        {"n": rank, "skip": sorted(skip), "hp_cap": args.hp_cap},
        {"rank": rank, "checks": results, "all_pass": all_pass},
        list(methods),
        elapsed,
    )
    _emit(record, args.format, lines)
    return 0 if all_pass else 1


# -- parser ----------------------------------------------------------------------


def _allow_weight_arguments(parser: argparse.ArgumentParser) -> None:
    # argparse treats "-1,1" as an option; widen its negative-number matcher so
    # bare weights parse as positionals.  "--" before the weight always works.
    try:
        parser._negative_number_matcher = _WEIGHT_LIKE
    except AttributeError:
        pass


def build_parser(default_hp_cap: int) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genexp",
        description="Generalized exponents of first-layer representations in type A.",
        epilog='Weights with a leading minus can be passed after "--", '
        'e.g. "genexp fourier -- -1,1".',
    )
    _allow_weight_arguments(parser)
    sub = parser.add_subparsers(dest="command", required=True)

    p_exp = sub.add_parser("exponents", help="compute E(V_lambda)")
    p_exp.add_argument("input", help='partition of n+1 ("4,3,1") or dominant weight ("1,0,-1")')
    p_exp.add_argument(
        "--method",
        choices=ALL_METHODS + ("all",),
        default="tableaux",
        help="single method, or 'all' to cross-check every applicable method",
    )
    p_exp.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_exp.add_argument("--n", type=int, default=None, help="expected rank (consistency check)")
    p_exp.add_argument("--hp-cap", type=int, default=default_hp_cap)
    p_exp.set_defaults(handler=_cmd_exponents)
    _allow_weight_arguments(p_exp)

    p_fourier = sub.add_parser("fourier", help="Fourier coefficient of a first-layer weight")
    p_fourier.add_argument("weight", help='comma-separated coordinates, e.g. "1,0,-1"')
    p_fourier.add_argument("--verify", action="store_true", help="cross-check with the system solver")
    p_fourier.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_fourier.set_defaults(handler=_cmd_fourier)
    _allow_weight_arguments(p_fourier)

    p_syt = sub.add_parser("syt", help="list standard tableaux with statistics")
    p_syt.add_argument("partition", help='comma-separated partition, e.g. "4,3,1"')
    p_syt.add_argument("--format", choices=("text", "json"), default="text")
    p_syt.set_defaults(handler=_cmd_syt)

    p_verify = sub.add_parser("verify", help="run the identity suite at a rank")
    p_verify.add_argument("--n", type=int, required=True)
    p_verify.add_argument(
        "--skip", action="append", choices=ALL_METHODS, default=None,
        help="exclude a method from the agreement check (repeatable)",
    )
    p_verify.add_argument("--hp-cap", type=int, default=default_hp_cap)
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    env_cap = os.environ.get("GENEXP_HP_CAP")
    try:
        default_hp_cap = int(env_cap) if env_cap else DEFAULT_HP_CAP
    except ValueError:
        print(f"GENEXP_HP_CAP must be an integer, got {env_cap!r}", file=sys.stderr)
        return 2
    parser = build_parser(default_hp_cap)
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
