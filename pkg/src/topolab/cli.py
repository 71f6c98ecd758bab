"""The ``topolab`` command-line tool.

Exit codes: 0 success, 1 verification failure, 2 unreadable input,
3 input violating an invariant (bad generator, bad topology), 4 over a cap.
"""
from __future__ import annotations

import argparse
import json
import random
import sys

from . import compactify, discretize, ideals
from .classify import classification_report
from .errors import InternalInvariantViolation, InvalidGenerator, InvalidTopology, TooLarge
from .fintop import ENUMERATION_CAP, enumerate_topologies, random_space
from .io import SpaceFormatError, dumps_space, load_space
from .verify import build_corpus, run_suites

EXIT_VERIFY_FAILED = 1
EXIT_PARSE = 2
EXIT_INVARIANT = 3
EXIT_TOO_LARGE = 4

LATTICES = {
    "disc-pw": (discretize.preweak_lattice, discretize.PREWEAK_LATTICE_CAP),
    "disc-w": (discretize.weak_lattice, discretize.DISCRETIZATION_CAP),
    "comp-pw": (compactify.compactification_lattice, None),
    "subalg": (compactify.subalgebra_lattice, compactify.SUBALGEBRA_CAP),
    "ideals": (ideals.ideal_lattice, None),
}


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def cmd_classify(args) -> int:
    loaded = load_space(args.file)
    report = classification_report(loaded.space)
    name = loaded.labels.__getitem__
    report["isolated"] = [name(i) for i in report["isolated"]]
    report["cb_derivatives"] = [[name(i) for i in d] for d in report["cb_derivatives"]]
    report["points"] = list(loaded.labels)
    report["closure_added"] = loaded.closure_added
    _emit(report)
    return 0


def cmd_lattice(args) -> int:
    X = load_space(args.file).space
    build, cap = LATTICES[args.which]
    L = build(X, args.cap) if args.cap is not None and cap is not None else build(X)
    if args.format == "dot":
        sys.stdout.write(L.to_dot(args.which))
    else:
        _emit(L.to_json())
    return 0


def cmd_verify(args) -> int:
    corpus = build_corpus(args.exhaustive, args.random, args.n, args.seed)
    results = run_suites([args.suite], corpus)
    out = sys.stdout
    out.write(
        f"corpus: exhaustive n<={corpus.exhaustive}, random {corpus.random_count} "
        f"(n<={corpus.n_max}, seed {corpus.seed}), {len(corpus.spaces)} spaces\n"
    )
    for res in results:
        out.write(res.summary() + "\n")
        for failure in res.failures:
            out.write("  counterexample: " + json.dumps(failure, sort_keys=True) + "\n")
    ok = all(r.ok for r in results)
    out.write("overall: " + ("PASS" if ok else "FAIL") + "\n")
    return 0 if ok else EXIT_VERIFY_FAILED


def cmd_enumerate(args) -> int:
    if args.n > ENUMERATION_CAP:
        raise TooLarge(f"enumeration capped at {ENUMERATION_CAP} points")
    for X in enumerate_topologies(args.n):
        sys.stdout.write(dumps_space(X) + "\n")
    return 0


def cmd_random(args) -> int:
    rng = random.Random(args.seed)
    for _ in range(args.count):
        sys.stdout.write(dumps_space(random_space(args.n, rng.getrandbits(63))) + "\n")
    return 0


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="topolab", description="Finite topology workbench.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="separation, scatteredness and density report")
    c.add_argument("file")
    c.set_defaults(func=cmd_classify)

    lat = sub.add_parser("lattice", help="export a lattice as a Hasse diagram")
    lat.add_argument("file")
    lat.add_argument("--which", choices=sorted(LATTICES), required=True)
    lat.add_argument("--format", choices=("dot", "json"), default="json")
    lat.add_argument("--cap", type=_nonneg, default=None, help="override the lattice's size cap")
    lat.set_defaults(func=cmd_lattice)

    v = sub.add_parser("verify", help="run property suites")
    v.add_argument("suite", choices=("all", "enumeration", "rose", "density", "thrpre", "ideals", "duality"))
    v.add_argument("--exhaustive", type=_nonneg, default=4, metavar="N")
    v.add_argument("--random", type=_nonneg, default=0, metavar="K")
    v.add_argument("--n", type=_nonneg, default=8, metavar="N")
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("enumerate", help="all topologies on n points as NDJSON")
    e.add_argument("n", type=_nonneg)
    e.set_defaults(func=cmd_enumerate)

    r = sub.add_parser("random", help="seeded random spaces as NDJSON")
    r.add_argument("n", type=_nonneg)
    r.add_argument("count", type=_nonneg)
    r.add_argument("seed", type=int)
    r.set_defaults(func=cmd_random)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SpaceFormatError, OSError) as exc:
        print(f"topolab: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (InvalidGenerator, InvalidTopology, InternalInvariantViolation) as exc:
        print(f"topolab: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except TooLarge as exc:
        print(f"topolab: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE


if __name__ == "__main__":
    sys.exit(main())
