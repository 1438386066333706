"""Command line interface: ``nextclosure <command> ...``.

Exit status is 0 on success, 1 for domain errors (unreadable or malformed
input, failed checks) and 2 for usage errors. Results go to stdout and
diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from typing import Iterator, Optional, Sequence

from . import bits
from .closure import iter_closed, validate_closure_axioms
from .context import (
    FormalContext,
    clarify_reduce_objects,
    closure_operator,
    derive_objects,
    instrumented_next_intent,
    iter_intents,
    object_intent_rows,
)
from .corpus import random_context
from .cxt import CxtError, read_cxt, write_cxt

ALGORITHMS = ("irreducible", "classic")


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _pos_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nextclosure", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def listing(name: str, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("file")
        p.add_argument("--algorithm", choices=ALGORITHMS, default="irreducible")
        p.add_argument("--limit", type=_nonneg_int, default=None, help="stop after N results")
        p.add_argument("--format", choices=("lines", "json"), default="lines")
        p.add_argument("--no-reduce", action="store_true", help="skip object clarification/reduction")
        return p

    listing("intents", "list the intents of a context")
    listing("extents", "list the extents of a context")
    listing("concepts", "list (extent, intent) pairs")

    p = sub.add_parser("reduce", help="write the object clarified and reduced context")
    p.add_argument("file")

    p = sub.add_parser("bench", help="time both intent algorithms on a context")
    p.add_argument("file")
    p.add_argument("--repeat", type=_pos_int, default=3)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("random", help="write a reproducible random context")
    p.add_argument("--objects", type=_nonneg_int, required=True)
    p.add_argument("--attributes", type=_nonneg_int, required=True)
    p.add_argument("--density", type=float, required=True)
    p.add_argument("--seed", type=lambda s: int(s, 0), required=True)

    p = sub.add_parser("check", help="parse a context and test the closure axioms")
    p.add_argument("file")
    return parser


def _intents(K: FormalContext, algorithm: str, reduce: bool) -> Iterator[int]:
    if algorithm == "classic":
        return iter_closed(closure_operator(K))
    return iter_intents(K, reduce=reduce)


def _emit(rows: list, fmt: str, pairs: bool = False) -> None:
    if fmt == "json":
        print(json.dumps(rows))
    elif pairs:
        for extent, intent in rows:
            print(" ".join(extent) + " | " + " ".join(intent))
    else:
        for r in rows:
            print(" ".join(r))


def _listing(args: argparse.Namespace) -> int:
    K = read_cxt(args.file)
    reduce = not args.no_reduce
    if args.command == "extents":
        T = K.transpose()
        out = [T.attribute_names(e) for e in itertools.islice(_intents(T, args.algorithm, reduce), args.limit)]
    elif args.command == "concepts":
        out = []
        for b in itertools.islice(_intents(K, args.algorithm, reduce), args.limit):
            out.append([K.object_names(derive_objects(K, b)), K.attribute_names(b)])
    else:
        out = [K.attribute_names(b) for b in itertools.islice(_intents(K, args.algorithm, reduce), args.limit)]
    _emit(out, args.format, pairs=args.command == "concepts")
    return 0


@dataclass
class RunReport:
    algorithm: str
    intents: int
    seconds: float
    incidence_reads: int
    counters: dict = field(default_factory=dict)


def _run_irreducible(K: FormalContext) -> RunReport:
    K.reads = 0
    start = time.perf_counter()
    R = clarify_reduce_objects(K)
    table = object_intent_rows(R)
    a: Optional[int] = table.full
    count = 0
    tests, inters, worst = 0, 0, 0
    while a is not None:
        count += 1
        a, c = instrumented_next_intent(table, a)
        tests += c.superset_tests
        inters += c.intersections
        worst = max(worst, c.superset_tests)
    elapsed = time.perf_counter() - start
    return RunReport(
        "irreducible",
        count,
        elapsed,
        K.reads + R.reads,
        {
            "calls": count,
            "superset_tests": tests,
            "intersections": inters,
            "max_superset_tests_per_call": worst,
            "bound_per_call": 2 * len(table) ** 2 + len(table),
        },
    )


def _run_classic(K: FormalContext) -> RunReport:
    K.reads = 0
    start = time.perf_counter()
    count = sum(1 for _ in iter_closed(closure_operator(K)))
    elapsed = time.perf_counter() - start
    return RunReport("classic", count, elapsed, K.reads, {"reads_per_intent": K.reads / count})


def _bench(args: argparse.Namespace) -> int:
    K = read_cxt(args.file)
    reports = []
    for run in (_run_irreducible, _run_classic):
        best = min((run(K) for _ in range(args.repeat)), key=lambda r: r.seconds)
        reports.append(best)
    if args.format == "json":
        print(json.dumps([asdict(r) for r in reports], indent=2))
    else:
        print(f"context: {K.n_objects} objects, {K.n_attributes} attributes, best of {args.repeat}")
        for r in reports:
            extra = ", ".join(f"{k}={v:g}" if isinstance(v, float) else f"{k}={v}" for k, v in r.counters.items())
            print(f"{r.algorithm:12s} intents={r.intents} time={r.seconds:.6f}s reads={r.incidence_reads} {extra}")
    if len({r.intents for r in reports}) != 1:
        print("error: algorithms disagree on the number of intents", file=sys.stderr)
        return 1
    return 0


def _check(args: argparse.Namespace) -> int:
    K = read_cxt(args.file)
    found = validate_closure_axioms(closure_operator(K))
    print(f"{K.n_objects} objects, {K.n_attributes} attributes, {len(found)} closure axiom violations")
    for v in found[:10]:
        print(f"  {v.axiom}: {bits.to_indices(v.subset)}", file=sys.stderr)
    return 1 if found else 0


def _dispatch(args: argparse.Namespace) -> int:
    if args.command in ("intents", "extents", "concepts"):
        return _listing(args)
    if args.command == "reduce":
        sys.stdout.write(write_cxt(clarify_reduce_objects(read_cxt(args.file))))
        return 0
    if args.command == "bench":
        return _bench(args)
    if args.command == "random":
        K = random_context(args.objects, args.attributes, args.density, args.seed)
        sys.stdout.write(write_cxt(K))
        return 0
    return _check(args)


def run_command(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return _dispatch(args)
    except (OSError, CxtError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_command())
