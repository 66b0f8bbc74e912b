"""Command-line front end.

Subcommands: `eval` (eta values with tail bounds), `dedekind` (exact Dedekind
sums), `decompose` (generator words), and `verify` (identity campaigns with
human or JSON reports).

Exit codes: 0 all good, 1 verification failure, 2 usage or domain error.
Complex arguments use the shell-safe literal RE+IMi, e.g. 0.5+0.001i.
The environment variable ETAFORGE_SEED supplies a default campaign seed.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from .campaigns import JSON_SCHEMA_VERSION, CliConfig, run_campaign
from .dedekind import dedekind_sum_fast, dedekind_sum_naive
from .evaluate import (
    DEFAULT_TOL,
    SMALL_IM,
    ConvergenceBudgetError,
    eta_char_eval,
    eta_pentagonal_eval,
    eta_product_eval,
    eta_transformed_eval,
)
from .modgroup import (
    ModularMatrix,
    NumericDegeneracyError,
    decompose,
    evaluate_word,
)

SEED_ENV_VAR = "ETAFORGE_SEED"

_COMPLEX_RE = re.compile(
    r"^(?P<re>[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)"
    r"(?P<im>[+-](?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)i$"
)


def parse_complex_literal(text: str) -> complex:
    """Parse RE+IMi (both parts required, sign on IM required), e.g. 0+1i."""
    match = _COMPLEX_RE.match(text.strip())
    if not match:
        raise ValueError(
            f"cannot parse {text!r} as a complex literal; expected RE+IMi, e.g. 0.5+0.001i"
        )
    return complex(float(match.group("re")), float(match.group("im")))


_EVALUATORS = {
    "product": eta_product_eval,
    "pentagonal": eta_pentagonal_eval,
    "character": eta_char_eval,
    "transformed": eta_transformed_eval,
}


def _cmd_eval(args: argparse.Namespace) -> int:
    tau = parse_complex_literal(args.tau)
    method = args.method
    if method == "auto":
        method = "transformed" if tau.imag < SMALL_IM else "pentagonal"
    result = _EVALUATORS[method](tau, args.tol)
    if args.format == "json":
        payload = {
            "schema": JSON_SCHEMA_VERSION,
            "tau": args.tau,
            "method": method,
            "value_re": result.value.real,
            "value_im": result.value.imag,
            "tail_bound": result.tail_bound,
            "terms_used": result.terms_used,
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(f"eta({args.tau}) = {result.value.real:.16g} + {result.value.imag:.16g}i")
        print(
            f"method={method} terms_used={result.terms_used} "
            f"tail_bound={result.tail_bound:.3e}"
        )
    return 0


def _cmd_dedekind(args: argparse.Namespace) -> int:
    h, k = args.h, args.k
    if args.mode == "naive":
        print(f"s({h}, {k}) = {dedekind_sum_naive(h, k)}")
        return 0
    if args.mode == "fast":
        print(f"s({h}, {k}) = {dedekind_sum_fast(h, k)}")
        return 0
    naive = dedekind_sum_naive(h, k)
    fast = dedekind_sum_fast(h, k)
    print(f"s({h}, {k}) = {naive} (naive) = {fast} (fast)")
    if naive != fast:
        print("error: naive and fast values disagree", file=sys.stderr)
        return 1
    print("equal: yes")
    return 0


def _cmd_decompose(args: argparse.Namespace) -> int:
    mat = ModularMatrix(args.a, args.b, args.c, args.d)
    word = decompose(mat)
    print(str(word))
    if args.check:
        recomposed = evaluate_word(word)
        if recomposed != mat:
            print(
                f"error: word recomposes to {recomposed}, expected {mat}", file=sys.stderr
            )
            return 1
        print(f"check: OK, word recomposes to {recomposed}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    seed = args.seed
    if seed is None:
        env = os.environ.get(SEED_ENV_VAR)
        seed = int(env) if env else 0
    config = CliConfig(tolerance=args.tol, order=args.order, trials=args.trials, seed=seed)
    reports = run_campaign(args.suite, config)
    all_passed = all(r.passed for r in reports)

    if len(reports) == 1:
        json_payload = reports[0].to_json_dict()
    else:
        json_payload = {
            "schema": JSON_SCHEMA_VERSION,
            "suite": "all",
            "passed": all_passed,
            "reports": [
                {key: val for key, val in r.to_json_dict().items() if key != "schema"}
                for r in reports
            ],
        }
    json_text = json.dumps(json_payload, indent=2, sort_keys=True)

    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(json_text + "\n")
    if args.format == "json" and not args.out:
        print(json_text)
    else:
        for report in reports:
            for line in report.human_lines():
                print(line)
        total = sum(r.trials for r in reports)
        print(f"{'PASS' if all_passed else 'FAIL'}  overall: {total} checks")
    return 0 if all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="etaforge",
        description="Dedekind eta toolkit: evaluation, exact Dedekind sums, "
        "generator words, and identity-verification campaigns.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate eta(tau) with a truncation bound")
    p_eval.add_argument("--tau", required=True, help="point as RE+IMi, e.g. 0+1i")
    p_eval.add_argument(
        "--method",
        choices=["auto", "product", "pentagonal", "character", "transformed"],
        default="auto",
        help="series route; auto picks transformed below im = %s" % SMALL_IM,
    )
    p_eval.add_argument("--tol", type=float, default=DEFAULT_TOL, help="truncation tolerance")
    p_eval.add_argument("--format", choices=["human", "json"], default="human")
    p_eval.set_defaults(func=_cmd_eval)

    p_ded = sub.add_parser("dedekind", help="exact Dedekind sum s(h, k)")
    p_ded.add_argument("h", type=int)
    p_ded.add_argument("k", type=int)
    p_ded.add_argument(
        "--mode",
        choices=["naive", "fast", "both"],
        default="both",
        help="defining sum, logarithmic reciprocity descent, or cross-checked both",
    )
    p_ded.set_defaults(func=_cmd_dedekind)

    p_dec = sub.add_parser("decompose", help="write a matrix as a word in S and T")
    p_dec.add_argument("a", type=int)
    p_dec.add_argument("b", type=int)
    p_dec.add_argument("c", type=int)
    p_dec.add_argument("d", type=int)
    p_dec.add_argument("--check", action="store_true", help="re-multiply the word and confirm")
    p_dec.set_defaults(func=_cmd_decompose)

    p_ver = sub.add_parser("verify", help="run an identity-verification campaign")
    p_ver.add_argument(
        "suite",
        choices=["jtp", "pentagonal", "reciprocity", "functional-eq", "theta", "poisson", "omega", "all"],
    )
    p_ver.add_argument("--tol", type=float, default=None, help="override campaign tolerance")
    p_ver.add_argument("--order", type=int, default=None, help="series truncation order")
    p_ver.add_argument("--trials", type=int, default=None, help="random trial count")
    p_ver.add_argument(
        "--seed", type=int, default=None, help=f"PRNG seed (default ${SEED_ENV_VAR} or 0)"
    )
    p_ver.add_argument("--format", choices=["human", "json"], default="human")
    p_ver.add_argument("--out", default=None, help="write the JSON report to this file")
    p_ver.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ConvergenceBudgetError, NumericDegeneracyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
