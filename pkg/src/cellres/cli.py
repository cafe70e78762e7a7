"""Command-line front end.

Exit codes: 0 resolution / success, 1 not a resolution, 2 theorem and
oracle disagree, 64 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from pathlib import Path

from . import criteria
from .chains import build_visscher, compose_is_zero, is_minimal
from .export import complex_json, complex_text, macaulay2_script
from .graphs import EdgeWeighting, VertexWeighting, labels_of, weighting_from_dict
from .homology import check_characteristic
from .visscher import visscher_complex

EXIT_OK, EXIT_NO, EXIT_DISAGREE, EXIT_USAGE = 0, 1, 2, 64

SURVEY_LIMIT = 2_000_000  # weightings; beyond this we refuse
SECONDS_PER_CASE = 0.005


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_common(p: argparse.ArgumentParser, graph: bool = True) -> None:
    if graph:
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--input", help="path to a graph JSON file")
        src.add_argument("--json", help="inline graph JSON")
    p.add_argument("--char", type=int, default=0, help="coefficient characteristic: 0 or a prime")
    p.add_argument("--format", choices=("text", "json", "m2"), default="text")
    p.add_argument("--out", help="write the main output here instead of stdout")
    p.add_argument("--verbose", "-v", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cellres", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    _add_common(sub.add_parser("check", help="decide whether Visscher's complex is a resolution"))
    _add_common(sub.add_parser("resolve", help="print the cellular complex"))
    _add_common(sub.add_parser("export", help="write matrices and ideal"))

    p = sub.add_parser("betti", help="Betti numbers from the closed formula")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    _add_common(p, graph=False)

    p = sub.add_parser("survey", help="exhaustive theorem-vs-oracle comparison")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("weight", type=int, nargs="?", help="largest weight (same as --max-weight)")
    p.add_argument("--max-weight", type=int, dest="max_weight")
    p.add_argument("--verdicts", action="store_true", help="include every weighting in the JSON")
    _add_common(p, graph=False)
    return parser


def load_weighting(args) -> EdgeWeighting | VertexWeighting:
    try:
        text = Path(args.input).read_text() if args.input else args.json
        data = json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read graph JSON: {exc}") from exc
    if isinstance(data, list):
        data = {"edge_weights": data}
    try:
        return weighting_from_dict(data)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _emit(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def cmd_check(args) -> int:
    w = load_weighting(args)
    labels = labels_of(w)
    verdict = criteria.bs_oracle(visscher_complex(labels), args.char)
    if isinstance(w, EdgeWeighting):
        theorem, trace = criteria.theorem_predicate(w)
        why = trace.describe()
    else:
        theorem, why = True, "vertex-weighted"
    yes = lambda b: "YES" if b else "NO"
    line = f"theorem: {yes(theorem)}"
    if theorem:
        line += f" ({why})"
    line += f", oracle: {yes(verdict.is_resolution)}"
    if verdict.witness is not None:
        line += f", witness: {verdict.witness}"
    if args.format == "json":
        out = {"theorem": theorem, "trace": why, "oracle": verdict.is_resolution,
               "witness": str(verdict.witness) if verdict.witness else None,
               "witness_homology": verdict.witness_profile.to_json() if verdict.witness_profile else None}
        _emit(args, json.dumps(out, sort_keys=True))
    else:
        if args.verbose and not theorem:
            line += f"\ntrace: {why}"
        if args.verbose and verdict.witness_profile is not None:
            line += f"\nwitness homology: {json.dumps(verdict.witness_profile.to_json())}"
        _emit(args, line)
    if theorem != verdict.is_resolution:
        return EXIT_DISAGREE
    return EXIT_OK if verdict.is_resolution else EXIT_NO


def _render(args, F, w) -> str:
    if args.format == "json":
        return json.dumps(complex_json(F), sort_keys=True)
    if args.format == "m2":
        return macaulay2_script(F, labels_of(w).generators(), args.char).rstrip("\n")
    return complex_text(F)


def cmd_resolve(args) -> int:
    w = load_weighting(args)
    F = build_visscher(labels_of(w))
    body = _render(args, F, w)
    minimal, _ = is_minimal(F)
    closed, _ = compose_is_zero(F)
    if args.format == "text":
        body += f"\nminimal: {'yes' if minimal else 'no'}\nd∘d = 0: {'yes' if closed else 'no'}"
    _emit(args, body)
    return EXIT_OK


def cmd_export(args) -> int:
    w = load_weighting(args)
    F = build_visscher(labels_of(w))
    _emit(args, _render(args, F, w))
    return EXIT_OK


def cmd_betti(args) -> int:
    if args.m < 1 or args.n < 1:
        raise UsageError("m and n must be positive")
    values = [criteria.betti_formula(args.m, args.n, k) for k in range(args.m + args.n - 1)]
    if args.format == "json":
        _emit(args, json.dumps({"m": args.m, "n": args.n, "betti": values}))
    else:
        _emit(args, " ".join(str(v) for v in values))
    return EXIT_OK


def cmd_survey(args) -> int:
    max_weight = args.max_weight if args.max_weight is not None else args.weight
    if max_weight is None:
        raise UsageError("survey needs a maximum weight")
    if args.m < 1 or args.n < 1 or max_weight < 1:
        raise UsageError("m, n and the maximum weight must be positive")
    cases = max_weight ** (args.m * args.n)
    if cases > SURVEY_LIMIT:
        raise UsageError(f"refusing {cases} weightings (estimated {cases * SECONDS_PER_CASE:.0f} s "
                         f"single-threaded); the limit is {SURVEY_LIMIT}")
    started = time.perf_counter()
    report = criteria.survey(args.m, args.n, max_weight, args.char, keep_results=args.verdicts)
    logging.getLogger(__name__).info("survey took %.1f s", time.perf_counter() - started)
    if args.format == "json" or args.out:
        data = report.to_json(include_verdicts=args.verdicts)
        if args.out:
            Path(args.out).write_text(json.dumps(data, indent=1, sort_keys=True) + "\n")
            print(report.summary_line())
        else:
            print(json.dumps(data, sort_keys=True))
    else:
        print(report.summary_line())
        if report.disagreements:
            print("disagreements: " + "; ".join(str([list(r) for r in w]) for w in report.disagreements))
        print(f"predicate-true: {report.predicate_true}, betti mismatches: {len(report.betti_mismatches)}, "
              f"torsion sightings: {len(report.torsion_sightings)}")
    return EXIT_DISAGREE if report.disagreements else EXIT_OK


COMMANDS = {"check": cmd_check, "resolve": cmd_resolve, "export": cmd_export,
            "betti": cmd_betti, "survey": cmd_survey}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        args.char = check_characteristic(args.char)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"cellres: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"cellres: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
