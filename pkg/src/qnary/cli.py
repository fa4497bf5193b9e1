"""Command-line front end with deterministic, machine-readable output.

Subcommands: `lyndon list`, `factorize`, `count`, `orbits`, `coeffs`,
`variance`.  Exit codes: 0 success, 1 verification mismatch, 2 argument
error, 3 budget exceeded.  Floats are printed with 12 significant digits so
output is stable across platforms.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .debruijn import primitive_pseudo_orbits
from .quantum import build_instance, char_poly_direct, coeff_from_pseudo_orbits, evolution_operator
from .spectral_stats import variance_report
from .words import (
    DEFAULT_ENUMERATION_BUDGET,
    BudgetExceededError,
    Word,
    count_strictly_decreasing,
    count_strictly_decreasing_bruteforce,
    duval_factorize,
    is_strictly_decreasing,
    lyndon_words,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

COEFF_MATCH_TOL = 1e-9


def _round12(x: float) -> float:
    # 12 significant digits; the +0.0 folds -0.0 into 0.0
    return float(f"{x:.12g}") + 0.0


def _plain(x: float) -> str:
    return f"{_round12(x):.12g}"


def _pair(z: complex) -> str:
    return f"({_plain(z.real)}, {_plain(z.imag)})"


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def _emit_csv(header, rows) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ValueError(message)


def _cmd_lyndon_list(args) -> int:
    _require(args.q >= 1, f"--q must be at least 1, got {args.q}")
    _require(args.l >= 1, f"--l must be at least 1, got {args.l}")
    words = [str(w) for w in lyndon_words(args.q, args.l)]
    if args.format == "json":
        _emit_json(words)
    elif args.format == "csv":
        _emit_csv(["word"], [[w] for w in words])
    else:
        for w in words:
            print(w)
    return EXIT_OK


def _cmd_factorize(args) -> int:
    _require(args.q >= 1, f"--q must be at least 1, got {args.q}")
    word = Word.from_string(args.word, args.q)
    factorization = duval_factorize(word)
    strict = is_strictly_decreasing(factorization)
    factors = [str(f) for f in factorization.factors]
    if args.format == "json":
        _emit_json(
            {
                "word": str(word),
                "q": args.q,
                "factors": factors,
                "strictly_decreasing": strict,
            }
        )
    elif args.format == "csv":
        _emit_csv(
            ["word", "q", "factors", "strictly_decreasing"],
            [[str(word), args.q, str(factorization), str(strict).lower()]],
        )
    else:
        print(f"{factorization} strict={str(strict).lower()}")
    return EXIT_OK


def _cmd_count(args) -> int:
    _require(args.q >= 1, f"--q must be at least 1, got {args.q}")
    _require(args.n >= 0, f"--n must be non-negative, got {args.n}")
    formula = bruteforce = None
    if args.mode in ("formula", "both"):
        formula = count_strictly_decreasing(args.q, args.n)
    if args.mode in ("bruteforce", "both"):
        bruteforce = count_strictly_decreasing_bruteforce(args.q, args.n, budget=args.budget)
    agree = formula == bruteforce if args.mode == "both" else None

    if args.format == "json":
        record = {"q": args.q, "n": args.n, "mode": args.mode}
        if formula is not None:
            record["formula"] = formula
        if bruteforce is not None:
            record["bruteforce"] = bruteforce
        if agree is not None:
            record["agree"] = agree
        _emit_json(record)
    elif args.format == "csv":
        row = [
            args.q,
            args.n,
            args.mode,
            "" if formula is None else formula,
            "" if bruteforce is None else bruteforce,
            "" if agree is None else str(agree).lower(),
        ]
        _emit_csv(["q", "n", "mode", "formula", "bruteforce", "agree"], [row])
    else:
        parts = []
        if formula is not None:
            parts.append(f"formula={formula}")
        if bruteforce is not None:
            parts.append(f"bruteforce={bruteforce}")
        if agree is not None:
            parts.append(f"agree={str(agree).lower()}")
        print(" ".join(parts))
    return EXIT_MISMATCH if agree is False else EXIT_OK


def _cmd_orbits(args) -> int:
    _require(args.q >= 2, f"--q must be at least 2, got {args.q}")
    _require(args.m >= 1, f"--m must be at least 1, got {args.m}")
    _require(args.n >= 0, f"--n must be non-negative, got {args.n}")
    orbits = primitive_pseudo_orbits(args.q, args.n, budget=args.budget)
    if args.format == "json":
        _emit_json(
            {
                "q": args.q,
                "m": args.m,
                "n": args.n,
                "count": len(orbits),
                "pseudo_orbits": [[str(w) for w in po.words] for po in orbits],
            }
        )
    elif args.format == "csv":
        _emit_csv(
            ["pseudo_orbit", "num_orbits", "total_length"],
            [[str(po), po.num_orbits, po.total_length] for po in orbits],
        )
    else:
        for po in orbits:
            print(po)
        print(f"count={len(orbits)}")
    return EXIT_OK


def _cmd_coeffs(args) -> int:
    _require(args.q >= 2, f"--q must be at least 2, got {args.q}")
    _require(args.m >= 1, f"--m must be at least 1, got {args.m}")
    inst = build_instance(args.q, args.m, args.seed, budget=args.budget)
    E = inst.graph.num_edges

    det_coeffs = orbit_coeffs = None
    if args.method in ("det", "both"):
        det_coeffs = list(char_poly_direct(evolution_operator(inst, args.k)).a)
    if args.method in ("orbits", "both"):
        orbit_coeffs = [coeff_from_pseudo_orbits(n, inst, args.k) for n in range(E + 1)]
    shown = det_coeffs if det_coeffs is not None else orbit_coeffs
    max_delta = None
    if args.method == "both":
        max_delta = max(abs(d - o) for d, o in zip(det_coeffs, orbit_coeffs))

    if args.format == "json":
        record = {
            "q": args.q,
            "m": args.m,
            "k": _round12(args.k),
            "seed": args.seed,
            "method": args.method,
            "coefficients": [[_round12(z.real), _round12(z.imag)] for z in shown],
        }
        if max_delta is not None:
            record["max_delta"] = _round12(max_delta)
        _emit_json(record)
    elif args.format == "csv":
        _emit_csv(
            ["q", "m", "k", "seed", "method", "n", "re", "im"],
            [
                [args.q, args.m, _plain(args.k), args.seed, args.method,
                 n, _plain(z.real), _plain(z.imag)]
                for n, z in enumerate(shown)
            ],
        )
    else:
        print(f"q={args.q} m={args.m} k={_plain(args.k)} seed={args.seed} method={args.method}")
        for n, z in enumerate(shown):
            print(f"a_{n} = {_pair(z)}")
        if max_delta is not None:
            print(f"max_delta={_plain(max_delta)}")
    if max_delta is not None and max_delta > COEFF_MATCH_TOL:
        return EXIT_MISMATCH
    return EXIT_OK


def _cmd_variance(args) -> int:
    _require(args.q >= 2, f"--q must be at least 2, got {args.q}")
    _require(args.m >= 1, f"--m must be at least 1, got {args.m}")
    _require(args.n >= 0, f"--n must be non-negative, got {args.n}")
    _require(args.samples >= 0, f"--samples must be non-negative, got {args.samples}")
    report = variance_report(
        args.q, args.m, args.n, seed=args.seed, samples=args.samples, k_max=args.k_max
    )
    record = report.to_dict()
    for key, value in record.items():
        if isinstance(value, float):
            record[key] = _round12(value)
    if args.format == "json":
        _emit_json(record)
    elif args.format == "csv":
        keys = list(record)
        row = [_plain(record[k]) if isinstance(record[k], float) else record[k] for k in keys]
        _emit_csv(keys, [row])
    else:
        for key, value in record.items():
            print(f"{key}={_plain(value) if isinstance(value, float) else value}")
    return EXIT_OK


def _add_format(parser: argparse.ArgumentParser, default: str) -> None:
    parser.add_argument(
        "--format", choices=("json", "csv", "plain"), default=default, help="output format"
    )


def _add_budget(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_ENUMERATION_BUDGET,
        help="enumeration budget override",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qnary",
        description="Lyndon word combinatorics and q-nary quantum graph spectra",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    lyndon = sub.add_parser("lyndon", help="Lyndon word utilities")
    lyndon_sub = lyndon.add_subparsers(dest="lyndon_command", required=True)
    lyndon_list = lyndon_sub.add_parser("list", help="list Lyndon words of one length")
    lyndon_list.add_argument("--q", type=int, required=True, help="alphabet size")
    lyndon_list.add_argument("--l", type=int, required=True, help="word length")
    _add_format(lyndon_list, "plain")
    lyndon_list.set_defaults(func=_cmd_lyndon_list)

    factorize = sub.add_parser("factorize", help="standard decomposition of a word")
    factorize.add_argument("word", help="the word, e.g. 0110 (or comma-separated letters)")
    factorize.add_argument("--q", type=int, required=True, help="alphabet size")
    _add_format(factorize, "plain")
    factorize.set_defaults(func=_cmd_factorize)

    count = sub.add_parser("count", help="count strictly decreasing decompositions")
    count.add_argument("--q", type=int, required=True, help="alphabet size")
    count.add_argument("--n", type=int, required=True, help="word length")
    count.add_argument("--mode", choices=("formula", "bruteforce", "both"), default="both")
    _add_format(count, "plain")
    _add_budget(count)
    count.set_defaults(func=_cmd_count)

    orbits = sub.add_parser("orbits", help="enumerate primitive pseudo orbits")
    orbits.add_argument("--q", type=int, required=True, help="alphabet size")
    orbits.add_argument("--m", type=int, required=True, help="graph order")
    orbits.add_argument("--n", type=int, required=True, help="total topological length")
    _add_format(orbits, "plain")
    _add_budget(orbits)
    orbits.set_defaults(func=_cmd_orbits)

    coeffs = sub.add_parser("coeffs", help="characteristic polynomial coefficients")
    coeffs.add_argument("--q", type=int, required=True, help="alphabet size")
    coeffs.add_argument("--m", type=int, required=True, help="graph order")
    coeffs.add_argument("--k", type=float, required=True, help="wavenumber")
    coeffs.add_argument("--seed", type=int, default=0, help="edge-length seed")
    coeffs.add_argument("--method", choices=("det", "orbits", "both"), default="both")
    _add_format(coeffs, "plain")
    _add_budget(coeffs)
    coeffs.set_defaults(func=_cmd_coeffs)

    variance = sub.add_parser("variance", help="coefficient variance report")
    variance.add_argument("--q", type=int, required=True, help="alphabet size")
    variance.add_argument("--m", type=int, required=True, help="graph order")
    variance.add_argument("--n", type=int, required=True, help="coefficient index")
    variance.add_argument("--seed", type=int, default=0, help="edge-length and sampling seed")
    variance.add_argument("--samples", type=int, default=0, help="Monte-Carlo sample count")
    variance.add_argument("--k-max", dest="k_max", type=float, default=1e4)
    _add_format(variance, "json")
    variance.set_defaults(func=_cmd_variance)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
