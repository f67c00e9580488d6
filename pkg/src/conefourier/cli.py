"""Command line front end: JSON in, JSON out, exact all the way.

Exit codes: 0 on success, 1 for domain errors (reported as a structured
{"code", "message", "context"} object), 2 for malformed input or usage.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from fractions import Fraction

from . import __version__
from .brion import evaluate_transform, per_term_values, polytope_combinatorics, polytope_transform
from .cones import validate_cone
from .errors import ConeFourierError, MalformedInputError
from .interpolation import build_system, pk_via_interpolation, solve_with_details
from .sampling import sample_cone, sample_family
from .serialize import (
    cone_from_json,
    cone_to_json,
    family_from_json,
    format_vector,
    parse_vector,
    polynomial_to_json,
    report_to_json,
    system_to_json,
    vervan_record_to_json,
    vertices_from_json,
)
from .triangulation import pk_via_triangulation, pulling_triangulation
from .vervan import verify_vervan


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conefourier",
        description="Exact Fourier transforms of pointed polyhedral cones and polytopes.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_cone_input(p):
        p.add_argument("input", nargs="?", help="cone JSON: a file path, '-' for stdin, or inline JSON")
        p.add_argument(
            "--sample",
            nargs=2,
            type=int,
            metavar=("D", "N"),
            help="instead of an input, sample a random generic cone with the given dimension and generator count",
        )
        p.add_argument("--seed", type=int, default=0, help="seed for randomized inputs (default 0)")
        p.add_argument("--output", metavar="PATH", help="write the result here instead of stdout")

    p = sub.add_parser("validate", help="check pointedness and report cone degeneracies")
    add_cone_input(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("transform", help="compute the numerator polynomial of the cone transform")
    add_cone_input(p)
    p.add_argument("--method", choices=("triangulation", "interpolation"), default="interpolation")
    p.add_argument("--verbose", action="store_true", help="include the full system or triangulation dump")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("compare", help="run both pipelines and check they agree")
    add_cone_input(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("vervan", help="verify minor identities for diagonal families")
    add_cone_input(p)
    p.add_argument(
        "--family",
        action="append",
        metavar="JSON",
        help="explicit family as a JSON array of 1-based index arrays; repeatable",
    )
    p.add_argument("--random", type=int, metavar="K", help="verify K random families instead")
    p.set_defaults(func=cmd_vervan)

    p = sub.add_parser("brion-eval", help="evaluate a polytope Fourier transform at a point")
    p.add_argument("input", nargs="?", help="polytope JSON with a \"vertices\" key")
    p.add_argument("--xi", metavar="JSON", help='evaluation point as a JSON array of rationals, e.g. \'["1/2","1/2"]\'')
    p.add_argument("--method", choices=("triangulation", "interpolation"), default="interpolation")
    p.add_argument("--allow-nonsimplicial", action="store_true", help="accept facets with more than d vertices")
    p.add_argument("--verbose", action="store_true", help="include the per-vertex breakdown")
    p.add_argument("--output", metavar="PATH")
    p.set_defaults(func=cmd_brion_eval)

    p = sub.add_parser("bench", help="time both pipelines on random cones")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--dims", default="2,3,4", help="comma-separated dimensions (default 2,3,4)")
    p.add_argument("--max-extra", type=int, default=4, help="largest n - d to sweep (default 4)")
    p.add_argument("--trials", type=int, default=1, help="cones per size (default 1)")
    p.add_argument("--csv", action="store_true", help="emit CSV instead of JSON")
    p.add_argument("--output", metavar="PATH")
    p.set_defaults(func=cmd_bench)

    return parser


def _read_json_text(raw: str):
    try:
        return json.loads(raw)
    except json.JSONDecodeError as err:
        raise MalformedInputError(f"invalid JSON: {err}") from None


def _load_input(source: str | None):
    if source is None:
        raise MalformedInputError("an input is required: a file path, '-' for stdin, or inline JSON")
    text = source.strip()
    if text.startswith("{") or text.startswith("["):
        return _read_json_text(text)
    if text == "-":
        return _read_json_text(sys.stdin.read())
    try:
        with open(source, encoding="utf-8") as handle:
            return _read_json_text(handle.read())
    except OSError as err:
        raise MalformedInputError(f"cannot read {source!r}: {err}") from None


def _load_cone(args):
    """Returns (cone, sampled) where sampled says the cone was generated."""
    if args.sample:
        if args.input is not None:
            raise MalformedInputError("give either an input or --sample, not both")
        d, n = args.sample
        if d < 2 or n < d:
            raise MalformedInputError("--sample needs D >= 2 and N >= D")
        return sample_cone(random.Random(args.seed), d, n), True
    return cone_from_json(_load_input(args.input)), False


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (set, frozenset)):
        return sorted(_jsonable(v) for v in value)
    return value


def _write(text: str, output: str | None):
    if output:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def cmd_validate(args) -> str:
    cone, sampled = _load_cone(args)
    report = report_to_json(validate_cone(cone))
    if sampled:
        report = {"cone": cone_to_json(cone), **report}
    return json.dumps(report, indent=2) + "\n"


def cmd_transform(args) -> str:
    cone, sampled = _load_cone(args)
    if args.method == "triangulation":
        poly = pk_via_triangulation(cone)
        extra = {
            "triangulation": {
                "simplices": [[i + 1 for i in s] for s in pulling_triangulation(cone).simplices]
            }
        }
    else:
        system = build_system(cone)
        poly, details = solve_with_details(system)
        extra = {"system": system_to_json(system, details)}
    if not (sampled or args.verbose):
        return json.dumps(polynomial_to_json(poly), indent=2) + "\n"
    out = {}
    if sampled:
        out["cone"] = cone_to_json(cone)
    out["polynomial"] = polynomial_to_json(poly)
    if args.verbose:
        out.update(extra)
    return json.dumps(out, indent=2) + "\n"


def cmd_compare(args) -> str:
    cone, sampled = _load_cone(args)
    by_triangulation = pk_via_triangulation(cone)
    by_interpolation = pk_via_interpolation(cone)
    out = {}
    if sampled:
        out["cone"] = cone_to_json(cone)
    out["triangulation"] = polynomial_to_json(by_triangulation)
    out["interpolation"] = polynomial_to_json(by_interpolation)
    out["equal"] = by_triangulation == by_interpolation
    return json.dumps(out, indent=2) + "\n"


def cmd_vervan(args) -> str:
    cone, _ = _load_cone(args)
    if args.family and args.random:
        raise MalformedInputError("give either --family or --random, not both")
    if args.family:
        families = [family_from_json(_read_json_text(text)) for text in args.family]
    elif args.random:
        rng = random.Random(args.seed)
        families = [sample_family(rng, cone) for _ in range(args.random)]
    else:
        raise MalformedInputError("vervan needs --family or --random")
    lines = [json.dumps(vervan_record_to_json(verify_vervan(cone, fam))) for fam in families]
    return "".join(line + "\n" for line in lines)


def cmd_brion_eval(args) -> str:
    data = _load_input(args.input)
    vertices = vertices_from_json(data)
    if args.xi is not None:
        xi = parse_vector(_read_json_text(args.xi))
    elif isinstance(data, dict) and "xi" in data:
        xi = parse_vector(data["xi"])
    else:
        raise MalformedInputError('an evaluation point is required: --xi or a "xi" key in the input')
    polytope = polytope_combinatorics(vertices, allow_nonsimplicial=args.allow_nonsimplicial)
    transform = polytope_transform(polytope, method=args.method)
    value = evaluate_transform(transform, xi)
    out = {"re": value.real, "im": value.imag}
    if args.verbose:
        out["terms"] = [
            {"vertex": format_vector(term.apex), "re": v.real, "im": v.imag}
            for term, v in zip(transform.terms, per_term_values(transform, xi))
        ]
    return json.dumps(out, indent=2) + "\n"


def cmd_bench(args) -> str:
    try:
        dims = [int(part) for part in args.dims.split(",") if part]
    except ValueError:
        raise MalformedInputError(f"bad --dims value {args.dims!r}") from None
    if not dims or any(d < 2 for d in dims):
        raise MalformedInputError("--dims needs integers >= 2")
    rng = random.Random(args.seed)
    records = []
    for d in dims:
        for extra in range(args.max_extra + 1):
            n = d + extra
            tri_total = 0.0
            interp_total = 0.0
            match = True
            for _ in range(max(1, args.trials)):
                cone = sample_cone(rng, d, n)
                start = time.perf_counter()
                by_triangulation = pk_via_triangulation(cone)
                tri_total += time.perf_counter() - start
                start = time.perf_counter()
                by_interpolation = pk_via_interpolation(cone)
                interp_total += time.perf_counter() - start
                match = match and by_triangulation == by_interpolation
            trials = max(1, args.trials)
            records.append(
                {
                    "n": n,
                    "d": d,
                    "triangulation_seconds": tri_total / trials,
                    "interpolation_seconds": interp_total / trials,
                    "match": match,
                }
            )
    if args.csv:
        lines = ["n,d,triangulation_seconds,interpolation_seconds"]
        lines += [
            f"{r['n']},{r['d']},{r['triangulation_seconds']:.6f},{r['interpolation_seconds']:.6f}"
            for r in records
        ]
        return "".join(line + "\n" for line in lines)
    return json.dumps(records, indent=2) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:  # argparse already printed usage
        return 0 if exit_.code in (0, None) else 2
    try:
        text = args.func(args)
    except MalformedInputError as err:
        _print_error(err)
        return 2
    except ConeFourierError as err:
        _print_error(err)
        return 1
    _write(text, args.output)
    return 0


def _print_error(err: ConeFourierError):
    obj = {"code": err.code, "message": err.message, "context": _jsonable(err.context)}
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


if __name__ == "__main__":
    sys.exit(main())
