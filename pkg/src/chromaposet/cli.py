"""Command line interface: ``chromaposet csf | poset | verify``.

Graph specs:
  family:ints    complete:4, path:3, cycle:5, star:5, lollipop:4,3, unit:2,3,4
  g6:STRING      a graph6 string
  edges:TEXT     "n; u-v, u-v, ..." with vertices 0..n-1

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 size bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from .chromposet import (
    POSET_MAX_N,
    POSET_MIN_N,
    build_poset,
    csf_classes,
    to_csv,
    to_dot,
    to_json,
)
from .graph import (
    Graph,
    csf_stable_partition,
    make_complete,
    make_cycle,
    make_lollipop,
    make_path,
    make_star,
    make_unit_interval,
    parse_edge_list,
    parse_graph6,
)
from .suites import BOUNDS, LOWER_BOUNDS, SUITES, run_suite
from .symfunc import Basis, SymFunc

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_SIZE = 0, 1, 2, 3
CSF_MAX_N = 10
CACHE_VERSION = 1
CACHE_ENV = "CHROMAPOSET_CACHE"


class UsageError(Exception):
    pass


class SizeError(Exception):
    pass


FAMILIES = {
    "complete": (make_complete, 1),
    "path": (make_path, 1),
    "cycle": (make_cycle, 1),
    "star": (make_star, 1),
    "lollipop": (make_lollipop, 2),
}


def parse_graph_spec(spec: str) -> Graph:
    head, sep, body = spec.partition(":")
    if not sep:
        raise UsageError(f"graph spec {spec!r} needs the form family:ints, g6:..., or edges:...")
    head = head.strip().lower()
    try:
        if head == "g6":
            return parse_graph6(body.strip())
        if head == "edges":
            return parse_edge_list(body)
        ints = [int(x) for x in body.split(",") if x.strip()]
        if head == "unit":
            return make_unit_interval(ints)
        if head not in FAMILIES:
            raise UsageError(f"unknown graph family {head!r}")
        maker, arity = FAMILIES[head]
        if len(ints) != arity:
            raise UsageError(f"family {head!r} takes {arity} integer(s)")
        return maker(*ints)
    except UsageError:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# -- cache --------------------------------------------------------------------

def cache_dir(explicit: str | None) -> Path | None:
    if explicit:
        return Path(explicit)
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "chromaposet"


def _cache_file(root: Path, n: int) -> Path:
    return root / f"csf-n{n}-v{CACHE_VERSION}.json"


def load_csf_table(root: Path | None, n: int) -> dict[str, SymFunc]:
    if root is None:
        return {}
    path = _cache_file(root, n)
    try:
        data = json.loads(path.read_text())
    except (OSError, ValueError):
        return {}
    if data.get("version") != CACHE_VERSION or data.get("n") != n:
        return {}
    return {g6: SymFunc.from_json(d) for g6, d in data.get("table", {}).items()}


def save_csf_table(root: Path | None, n: int, table: dict[str, SymFunc]):
    if root is None:
        return
    root.mkdir(parents=True, exist_ok=True)
    data = {
        "version": CACHE_VERSION,
        "n": n,
        "table": {g6: X.to_json_dict() for g6, X in sorted(table.items())},
    }
    tmp = _cache_file(root, n).with_suffix(".tmp")
    tmp.write_text(json.dumps(data, sort_keys=True))
    tmp.replace(_cache_file(root, n))


# -- commands -----------------------------------------------------------------

def cmd_csf(args) -> int:
    G = parse_graph_spec(args.graph)
    if G.n > CSF_MAX_N:
        raise SizeError(f"CSF computation supports at most {CSF_MAX_N} vertices")
    print(csf_stable_partition(G).to(args.basis).render())
    return EXIT_OK


EXTENSIONS = {"dot": "dot", "csv": "csv", "json": "json"}
WRITERS = {"dot": to_dot, "csv": to_csv, "json": to_json}


def cmd_poset(args) -> int:
    n = args.n
    if not POSET_MIN_N <= n <= POSET_MAX_N:
        raise SizeError(f"posets are supported for {POSET_MIN_N} <= n <= {POSET_MAX_N}")
    root = None if args.no_cache else cache_dir(args.cache_dir)
    table = load_csf_table(root, n)
    before = len(table)
    classes = csf_classes(n, jobs=args.jobs, csf_table=table)
    if len(table) != before:
        save_csf_table(root, n, table)
    P = build_poset(n, args.order, classes=classes)
    formats = args.format or ["dot"]
    if len(formats) == 1 and not args.out:
        sys.stdout.write(WRITERS[formats[0]](P))
        return EXIT_OK
    if len(formats) == 1 and not Path(args.out).is_dir():
        Path(args.out).write_text(WRITERS[formats[0]](P))
        return EXIT_OK
    out = Path(args.out or ".")
    out.mkdir(parents=True, exist_ok=True)
    for fmt in formats:
        (out / f"{P.order.value}{n}.{EXTENSIONS[fmt]}").write_text(WRITERS[fmt](P))
    return EXIT_OK


@dataclass
class VerificationReport:
    suite: str
    parameters: dict
    passed: bool
    counterexamples: list
    duration: float
    checks: list = field(default_factory=list)

    def to_json_dict(self, timing: bool = False) -> dict:
        # timing is opt-in so that stdout stays byte-identical across runs
        data = {
            "suite": self.suite,
            "parameters": self.parameters,
            "passed": self.passed,
            "counterexamples": self.counterexamples,
            "checks": self.checks,
        }
        if timing:
            data["duration_seconds"] = round(self.duration, 3)
        return data


def run_verification(suite: str, n: int | None = None, order: str | None = None) -> VerificationReport:
    start = time.perf_counter()
    reports = run_suite(suite, n, order)
    failing = [r for r in reports if not r.passed]
    return VerificationReport(
        suite=suite,
        parameters={"n": n, "order": order},
        passed=not failing,
        counterexamples=[{"check": r.check, "order": r.order, "n": r.n, "items": r.counterexamples}
                         for r in failing],
        duration=time.perf_counter() - start,
        checks=[r.to_json_dict() for r in reports],
    )


def cmd_verify(args) -> int:
    n = args.n if args.n is not None else args.N
    names = list(SUITES) if args.suite == "all" else [args.suite]
    if n is not None:
        for name in names:
            if not SUITES[name][1]:
                continue
            lo, hi = LOWER_BOUNDS.get(name, 1), BOUNDS[name]
            if not lo <= n <= hi:
                raise SizeError(f"suite {name!r} supports sizes {lo}..{hi}, got {n}")
    results = [run_verification(name, n, args.order) for name in names]
    payload = results[0].to_json_dict() if len(results) == 1 else {
        "suite": "all",
        "passed": all(r.passed for r in results),
        "suites": [r.to_json_dict() for r in results],
    }
    print(json.dumps(payload, indent=2, sort_keys=False))
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status} {r.suite} ({len(r.checks)} checks, {r.duration:.1f}s)", file=sys.stderr)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


# -- argument parsing ---------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="chromaposet", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("csf", help="print the chromatic symmetric function of a graph",
                       description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("graph", help="graph spec, e.g. lollipop:4,3 or g6:C~ or 'edges:3; 0-1, 1-2'")
    p.add_argument("--basis", choices=[b.value for b in Basis], default="m")
    p.set_defaults(func=cmd_csf)

    p = sub.add_parser("poset", help="build the e- or s-poset on n vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--order", choices=["e", "s"], default="e")
    p.add_argument("--format", choices=sorted(WRITERS), action="append",
                   help="output format; repeat for several (then --out is a directory)")
    p.add_argument("--out", help="output file, or directory for several formats")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument("--cache-dir", help=f"CSF cache directory (default ${CACHE_ENV} or ~/.cache)")
    p.add_argument("--no-cache", action="store_true")
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=list(SUITES) + ["all"])
    size = p.add_mutually_exclusive_group()
    size.add_argument("--n", type=int)
    size.add_argument("--N", type=int)
    p.add_argument("--order", choices=["e", "s"])
    p.add_argument("--jobs", type=int, default=1, help="accepted; suites currently run serially")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"chromaposet: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SizeError as exc:
        print(f"chromaposet: size bound: {exc}", file=sys.stderr)
        return EXIT_SIZE


if __name__ == "__main__":
    sys.exit(main())
