"""Command-line entry point: ``starcore {inv,check,gen,suite}``.

Exit codes
  0  success / EquivalenceHolds
  1  usage, I/O, parse or dimension error
  2  HypothesisFailed (check)
  3  VIOLATION (check, suite)
  4  no group inverse (inv --kind group|core)
  5  GenerationExhausted (gen, suite)

Every non-usage path prints one JSON object on stdout.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import geninv
from .errors import GenerationExhausted, NoGroupInverse, StarcoreError
from .lab.checkers import SIGNATURES, run_checker
from .lab.generators import FAMILIES, generate
from .lab.report import TheoremId, Verdict
from .lab.suite import replay, run_suite
from .matrix import load_matrix, save_matrix
from .scalar import parse

EXIT_OK, EXIT_ERROR, EXIT_HYPOTHESIS, EXIT_VIOLATION, EXIT_NO_GROUP, EXIT_EXHAUSTED = range(6)

INVERSES = {
    "group": geninv.group_inverse,
    "drazin": geninv.drazin_inverse,
    "mp": geninv.moore_penrose,
    "one3": geninv.one_three_inverse,
    "core": geninv.core_inverse,
}

VERDICT_EXIT = {
    Verdict.EQUIVALENCE_HOLDS: EXIT_OK,
    Verdict.HYPOTHESIS_FAILED: EXIT_HYPOTHESIS,
    Verdict.VIOLATION: EXIT_VIOLATION,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _emit(obj: dict) -> None:
    print(json.dumps(obj, sort_keys=True))


def _write_json(path, obj) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _default_seed() -> int:
    raw = os.environ.get("STARCORE_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"STARCORE_SEED must be an integer, got {raw!r}") from None


def sidecar_path(out: str) -> Path:
    path = Path(out)
    return path.with_name(path.stem + ".cert.json") if path.suffix else path.with_name(path.name + ".cert.json")


def cmd_inv(args) -> int:
    a = load_matrix(args.inp)
    try:
        result = INVERSES[args.kind](a)
    except NoGroupInverse as exc:
        print(str(exc), file=sys.stderr)
        _emit({"error": str(exc), "kind": args.kind})
        return EXIT_NO_GROUP
    save_matrix(result.inverse, args.out)
    cert = {"kind": result.kind, "index": result.index, "certificate": list(result.certificate),
            "rows": result.inverse.rows, "cols": result.inverse.cols}
    _write_json(sidecar_path(args.out), cert)
    _emit({**cert, "out": str(args.out), "certificate_file": str(sidecar_path(args.out))})
    return EXIT_OK


def cmd_check(args) -> int:
    if args.reproducer:
        report = replay(args.reproducer)
    else:
        if args.theorem is None:
            raise UsageError("--theorem is required unless --reproducer is given")
        theorem = TheoremId.parse(args.theorem)
        provided = {"p": args.p, "a": args.a, "b": args.b, "c": args.c, "d": args.d}
        values = {}
        for slot in SIGNATURES[theorem]:
            name, optional = slot.rstrip("?"), slot.endswith("?")
            if name == "lambda":
                if args.lam is None:
                    raise UsageError(f"{theorem.value} needs --lambda")
                values[name] = parse(args.lam)
            elif provided[name] is not None:
                values[name] = load_matrix(provided[name])
            elif not optional:
                raise UsageError(f"{theorem.value} needs --{name}")
        report = run_checker(theorem, values)
    payload = report.to_dict()
    if args.report:
        _write_json(args.report, payload)
    _emit(payload)
    return VERDICT_EXIT[report.verdict]


def cmd_gen(args) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    try:
        inst = generate(args.family, args.n, seed, args.rank)
    except GenerationExhausted as exc:
        _emit({"error": str(exc)})
        return EXIT_EXHAUSTED
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    stem = f"{args.family}-n{args.n}" + (f"-r{args.rank}" if args.rank is not None else "") + f"-s{seed}"
    files = []
    for name, m in inst.matrices.items():
        path = out / f"{stem}-{name}.json"
        save_matrix(m, path)
        files.append(str(path))
    meta = out / f"{stem}-instance.json"
    _write_json(meta, inst.to_json_obj())
    _emit({"family": args.family, "seed": seed, "files": files, "instance": str(meta),
           "lambda": None if inst.lam is None else str(inst.lam)})
    return EXIT_OK


def cmd_suite(args) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    if args.jobs < 1 or args.size < 1:
        raise UsageError("--jobs and --size must be at least 1")
    try:
        theorem = args.theorem if args.theorem == "all" else TheoremId.parse(args.theorem)
        result = run_suite(theorem, args.trials, args.size, seed, args.jobs, args.reproducer_dir)
    except GenerationExhausted as exc:
        _emit({"error": str(exc)})
        return EXIT_EXHAUSTED
    if args.report:
        _write_json(args.report, result.full_report())
    _emit(result.summary())
    return EXIT_OK if result.ok else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="starcore", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("inv", help="compute a generalized inverse")
    p.add_argument("--kind", required=True, choices=sorted(INVERSES))
    p.add_argument("--in", dest="inp", required=True, metavar="FILE")
    p.add_argument("--out", required=True, metavar="FILE")
    p.set_defaults(func=cmd_inv)

    p = sub.add_parser("check", help="check one theorem on user-supplied matrices")
    p.add_argument("--theorem", metavar="ID", choices=[t.value for t in TheoremId])
    p.add_argument("--p", metavar="FILE", help="projection / idempotent for L2.1-L2.3")
    p.add_argument("--a", metavar="FILE")
    p.add_argument("--b", metavar="FILE")
    p.add_argument("--c", metavar="FILE")
    p.add_argument("--d", metavar="FILE")
    p.add_argument("--lambda", dest="lam", metavar="STR")
    p.add_argument("--report", metavar="FILE")
    p.add_argument("--reproducer", metavar="FILE", help="re-run a suite reproducer bundle")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", help="generate a seeded instance family")
    p.add_argument("--family", required=True, choices=sorted(FAMILIES))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rank", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--out", required=True, metavar="DIR")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("suite", help="run seeded verification trials")
    p.add_argument("--theorem", default="all", metavar="ID|all",
                   choices=["all"] + [t.value for t in TheoremId])
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--size", type=int, default=5)
    p.add_argument("--seed", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--report", metavar="FILE", help="write every trial report here")
    p.add_argument("--reproducer-dir", default=".", metavar="DIR")
    p.set_defaults(func=cmd_suite)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"starcore: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (OSError, StarcoreError, ValueError) as exc:
        _emit({"error": str(exc), "type": type(exc).__name__})
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
