from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Any, Callable, Sequence

import pydantic

from ..common.config import Settings, load_settings
from ..common.exceptions import BudgetExceededError, ValidationError
from ..common.logging import get_logger
from ..constructions.extremal import (
    bound_values,
    build_baseline_family,
    build_family_main,
    layer_scales,
    rounding_slack,
)
from ..lcs.engine import family_lcs, lcs_witness, pairwise_lcs_matrix
from ..matcher.params import MatcherParams
from ..matcher.pipeline import run_matcher
from ..matcher.reduction import reduce_family_to_binary
from ..oracle.enumeration import FamilySpace, min_family_lcs
from ..words.core import SubsequenceWitness, Word, serialize_word
from ..words.word_file import read_word_file, write_word_file
from .gamma import estimate_gamma
from .reports import build_envelope, render_report, write_report, write_table

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_BUDGET = 3

Handler = Callable[[argparse.Namespace, Settings], tuple[Any, list[dict[str, Any]]]]


def _output_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--csv", type=Path, help="Optional path for a flat CSV table.")
    common.add_argument(
        "--config",
        type=Path,
        help="Settings YAML (defaults to config/lcsw.yaml).",
    )
    return common


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lcsw",
        description="Longest common subsequences in families of words.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = _output_options()

    construct = sub.add_parser("construct", parents=[common], help="Build an extremal family.")
    construct.add_argument("--n", type=int, required=True)
    construct.add_argument("--k", type=int, required=True)
    construct.add_argument("--r", type=int, help="Number of layers (main mode).")
    construct.add_argument("--mode", choices=["main", "unary", "kplus1"], default="main")
    construct.add_argument("--t", type=int, help="Family size for unary mode (default k).")
    construct.add_argument("--out", type=Path, required=True, help="Word file to write.")
    construct.add_argument("--report", type=Path, help="Optional path for the JSON report.")
    construct.set_defaults(handler=_run_construct)

    lcs = sub.add_parser("lcs", parents=[common], help="Pairwise and family LCS.")
    source = lcs.add_mutually_exclusive_group(required=True)
    source.add_argument("--family", type=Path, help="Word file with the family.")
    source.add_argument("--a", type=Path, help="Word file holding the first word.")
    lcs.add_argument("--b", type=Path, help="Word file holding the second word.")
    lcs.add_argument("--k", type=int, help="Alphabet size override.")
    lcs.add_argument("--witness", action="store_true", help="Include a witness.")
    lcs.add_argument("--out", type=Path, help="Optional path for the JSON report.")
    lcs.set_defaults(handler=_run_lcs)

    match = sub.add_parser("match", parents=[common], help="Run the binary matcher.")
    match.add_argument("--family", type=Path, required=True)
    match.add_argument("--r", type=int, required=True)
    match.add_argument("--alpha", type=float, help="Effective deviation multiplier.")
    match.add_argument("--beta", type=float, help="Effective block multiplier.")
    match.add_argument("--shift", choices=["exhaustive", "sampled"])
    match.add_argument("--samples", type=int, help="Shift samples for the sampled strategy.")
    match.add_argument("--seed", type=int)
    match.add_argument("--out", type=Path, help="Optional path for the JSON report.")
    match.set_defaults(handler=_run_match)

    scan = sub.add_parser("scan", parents=[common], help="Exhaustive minimum family LCS.")
    scan.add_argument("--mode", choices=["balanced", "all"], required=True)
    scan.add_argument("--n", type=int, required=True)
    scan.add_argument("--k", type=int, required=True)
    scan.add_argument("--t", type=int, required=True)
    scan.add_argument("--multiset", action="store_true")
    scan.add_argument("--out", type=Path, help="Optional path for the JSON report.")
    scan.set_defaults(handler=_run_scan)

    gamma = sub.add_parser("gamma", parents=[common], help="Monte Carlo LCS of random words.")
    gamma.add_argument("--k", type=int, required=True)
    gamma.add_argument("--n", type=int, required=True)
    gamma.add_argument("--samples", type=int, required=True)
    gamma.add_argument("--seed", type=int, required=True)
    gamma.add_argument("--out", type=Path, help="Optional path for the JSON report.")
    gamma.set_defaults(handler=_run_gamma)
    return parser


def _witness_document(witness: SubsequenceWitness) -> dict[str, Any]:
    return {
        "length": len(witness),
        "common": serialize_word(witness.common),
        "indices_a": list(witness.idx_a),
        "indices_b": list(witness.idx_b),
    }


def _header_int(header: dict[str, str], key: str) -> int | None:
    value = header.get(key)
    return int(value) if value is not None and value.isdigit() else None


def _run_construct(
    args: argparse.Namespace, settings: Settings
) -> tuple[Any, list[dict[str, Any]]]:
    n, k = args.n, args.k
    header: dict[str, Any] = {"n": n, "k": k, "mode": args.mode}
    result: dict[str, Any] = {"n": n, "k": k, "mode": args.mode, "path": str(args.out)}
    if args.mode == "main":
        if args.r is None:
            raise ValidationError("construct --mode main needs --r")
        words = build_family_main(n, k, args.r)
        scales = layer_scales(n, k, args.r)
        bound = bound_values(n, k, args.r)
        header.update(r=args.r, m=scales)
        result.update(
            r=args.r,
            scales=scales,
            upper_bound=bound.upper.rounded(),
            rounding_slack=rounding_slack(n, k, args.r),
        )
    else:
        words = build_baseline_family(n, k, args.mode, args.t)
        result["formula_value"] = 0 if args.mode == "unary" else n / k
    write_word_file(args.out, words, header)
    result["words"] = len(words)
    rows = [{"index": i, "word": serialize_word(w)} for i, w in enumerate(words)]
    return result, rows


def _load_pair(args: argparse.Namespace) -> list[Word]:
    if args.b is None:
        raise ValidationError("lcs --a needs --b")
    first_file = read_word_file(args.a, args.k)
    second_file = read_word_file(args.b, args.k)
    if args.k is None and first_file.alphabet_size != second_file.alphabet_size:
        shared = max(first_file.alphabet_size, second_file.alphabet_size)
        logger.info("Reading --a and --b over a shared alphabet of size %s", shared)
        first_file = read_word_file(args.a, shared)
        second_file = read_word_file(args.b, shared)
    first, second = first_file.words, second_file.words
    if not first or not second:
        raise ValidationError("word files for --a and --b must each hold a word")
    return [first[0], second[0]]


def _run_lcs(args: argparse.Namespace, settings: Settings) -> tuple[Any, list[dict[str, Any]]]:
    header: dict[str, str] = {}
    if args.family is not None:
        loaded = read_word_file(args.family, args.k)
        words, header = list(loaded.words), loaded.header
    else:
        words = _load_pair(args)

    matrix = pairwise_lcs_matrix(words)
    best = family_lcs(words, full_table_cells=settings.full_table_cells)
    result: dict[str, Any] = {
        "words": len(words),
        "matrix": matrix,
        "max": best.length,
        "pair": list(best.pair),
    }
    if args.witness:
        if args.family is None:
            witness = lcs_witness(words[0], words[1], full_table_cells=settings.full_table_cells)
        else:
            witness = best.witness
        result["witness"] = _witness_document(witness)

    n, k, r = (_header_int(header, key) for key in ("n", "k", "r"))
    if header.get("mode") == "main" and n and k and r:
        result["formula"] = {
            "upper_bound": bound_values(n, k, r).upper.rounded(),
            "rounding_slack": rounding_slack(n, k, r),
        }
    rows = [
        {"i": i, "j": j, "lcs": matrix[i][j]}
        for i in range(len(words))
        for j in range(i + 1, len(words))
    ]
    return result, rows


def _run_match(args: argparse.Namespace, settings: Settings) -> tuple[Any, list[dict[str, Any]]]:
    family = read_word_file(args.family).words
    reduced = reduce_family_to_binary(family)
    params = MatcherParams(
        r=args.r,
        alpha_eff=args.alpha,
        beta_eff=args.beta,
        shift_strategy=args.shift or settings.shift_strategy,
        sample_count=args.samples if args.samples is not None else settings.sample_count,
        seed=args.seed if args.seed is not None else settings.seed,
    )
    report = run_matcher(reduced.words, params)
    first, second = report.pair
    result = {
        "matcher": report.to_document(),
        "diagnostics": report.diagnostics(),
        "reduction": {
            "mode": reduced.mode,
            "letters": list(reduced.letters),
            "length": len(reduced.words[0]),
        },
        "source_witness": {
            "indices_a": list(reduced.lift_indices(first, report.witness.idx_a)),
            "indices_b": list(reduced.lift_indices(second, report.witness.idx_b)),
        },
    }
    return result, list(result["diagnostics"]["blocks"])


def _run_scan(args: argparse.Namespace, settings: Settings) -> tuple[Any, list[dict[str, Any]]]:
    space = FamilySpace(n=args.n, k=args.k, universe=args.mode, t=args.t, multiset=args.multiset)
    minimum = min_family_lcs(space, budget=settings.oracle_budget)
    family = [serialize_word(w) for w in minimum.family]
    result = {
        "min": minimum.value,
        "family": family,
        "selections_checked": minimum.selections_checked,
        "space": space.model_dump(),
    }
    return result, [{"index": i, "word": w} for i, w in enumerate(family)]


def _run_gamma(args: argparse.Namespace, settings: Settings) -> tuple[Any, list[dict[str, Any]]]:
    estimate = estimate_gamma(
        args.k,
        args.n,
        args.samples,
        args.seed,
        confidence_z=settings.confidence_z,
        cell_budget=settings.gamma_cell_budget,
    )
    result = estimate.model_dump(mode="json")
    row = dict(result)
    row["ci95_lower"], row["ci95_upper"] = row.pop("ci95")
    return result, [row]


def _params_of(args: argparse.Namespace) -> dict[str, Any]:
    params: dict[str, Any] = {}
    for key, value in sorted(vars(args).items()):
        if key in {"handler", "command"}:
            continue
        params[key] = str(value) if isinstance(value, Path) else value
    return params


def run_command(argv: Sequence[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_VALIDATION

    try:
        settings = load_settings(args.config)
        handler: Handler = args.handler
        result, rows = handler(args, settings)
    except BudgetExceededError as exc:
        logger.error("Budget exceeded: %s", exc)
        return EXIT_BUDGET
    except (ValidationError, pydantic.ValidationError) as exc:
        logger.error("Invalid input: %s", exc)
        return EXIT_VALIDATION

    document = build_envelope(args.command, settings.version, _params_of(args), result)
    destination = args.report if args.command == "construct" else args.out
    if destination is not None:
        write_report(destination, document)
    else:
        sys.stdout.write(render_report(document))
    if args.csv is not None:
        write_table(args.csv, rows)
    return EXIT_OK


def main() -> None:
    raise SystemExit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
