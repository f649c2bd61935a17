"""Command-line interface tying the library into reproducible runs.

Exit codes: 0 success with zero violations, 1 violations found, 2 usage or
parse errors, 3 budget exhaustion.  Errors are printed to stderr as
single-line JSON.  With a fixed seed the emitted JSON is byte-identical
across runs and worker counts; timing fields stay null unless --timings is
given, precisely so that reports remain reproducible.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from . import verify
from .count import count_pattern, count_profile
from .d6 import digraph6_decode, digraph6_encode, read_graphs
from .errors import (
    BudgetError,
    CapacityError,
    InvalidInputError,
    OrientTuranError,
    ParseError,
)
from .extremal import Budget, enumerate_oriented, exo_exact
from .graphs import (
    DEFAULT_SEED,
    Pattern,
    antidirected_complete_bipartite,
    blow_up,
    directed_cycle,
    transitive_tournament,
    turan_edge_count,
)
from .homomorphism import compressibility

_WORKERS_ENV = "ORIENT_TURAN_WORKERS"


def parse_pattern(tokens: list[str]) -> Pattern:
    """Pattern specs: ttN | kst S T | d6:<digraph6-string>."""
    if len(tokens) == 1:
        token = tokens[0]
        if token.startswith("tt"):
            try:
                r = int(token[2:])
            except ValueError:
                raise ParseError(f"bad transitive-tournament spec {token!r}") from None
            return Pattern.tt(r)
        if token.startswith("d6:"):
            return Pattern(digraph6_decode(token[3:]))
    if len(tokens) == 3 and tokens[0] == "kst":
        try:
            s, t = int(tokens[1]), int(tokens[2])
        except ValueError:
            raise ParseError(f"bad kst spec {tokens!r}") from None
        return antidirected_complete_bipartite(s, t)
    raise ParseError(f"unrecognised pattern spec {' '.join(tokens)!r}")


def _default_workers() -> int:
    raw = os.environ.get(_WORKERS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orient-turan",
        description="Exact oriented Turan numbers, copy counting and theorem checkers.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--workers", type=int, default=_default_workers())
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--time-budget", type=float, default=None, metavar="SECONDS")
    common.add_argument("--node-budget", type=int, default=None, metavar="NODES")
    common.add_argument("--output", default=None, metavar="PATH")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--timings", action="store_true", help="include elapsed times")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="exact pattern copy counts")
    p.add_argument("--input", required=True)
    p.add_argument("--pattern", nargs="+", required=True)

    p = sub.add_parser("profile", parents=[common], help="TT_r copy profile")
    p.add_argument("--input", required=True)
    p.add_argument("--rmax", type=int, required=True)

    p = sub.add_parser("exo", parents=[common], help="exact oriented Turan number")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pattern", nargs="+", required=True)
    p.add_argument("--witnesses", type=int, default=16)

    p = sub.add_parser("z", parents=[common], help="compressibility with per-k vector")
    p.add_argument("--pattern", nargs="+", required=True)
    p.add_argument("--kmax", type=int, default=7)

    p = sub.add_parser("construct", parents=[common], help="named constructions")
    p.add_argument("what", choices=("tt", "cycle", "blowup", "turan-count"))
    p.add_argument("args", nargs="*")

    p = sub.add_parser("verify", parents=[common], help="per-theorem checkers")
    p.add_argument(
        "which",
        choices=("omm", "t16", "t18", "t19", "p31a", "p21", "ghs", "supersat", "all"),
    )
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--samples", type=int, default=None)

    p = sub.add_parser("gen", parents=[common], help="stream labeled oriented graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--arcs", type=int, default=None)
    p.add_argument("--limit", type=int, default=None)

    return parser


def _emit(args, payload: str) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _budget(args) -> Budget | None:
    if args.node_budget is None and args.time_budget is None:
        return None
    return Budget(node_limit=args.node_budget, time_limit=args.time_budget)


def _cmd_count(args) -> int:
    pattern = parse_pattern(args.pattern)
    graphs = read_graphs(args.input)
    results = [
        {"index": i, "n": g.n, "arcs": g.arc_count, "count": count_pattern(g, pattern)}
        for i, g in enumerate(graphs)
    ]
    if args.format == "text":
        lines = [f"{r['index']}\t{r['count']}" for r in results]
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, _dump({"schema": 1, "command": "count", "results": results}))
    return 0


def _cmd_profile(args) -> int:
    graphs = read_graphs(args.input)
    results = []
    for i, g in enumerate(graphs):
        profile = count_profile(g, args.rmax)
        results.append({"index": i, "n": g.n, "counts": list(profile.counts)})
    if args.format == "text":
        lines = [f"{r['index']}\t{' '.join(map(str, r['counts']))}" for r in results]
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, _dump({"schema": 1, "command": "profile", "results": results}))
    return 0


def _cmd_exo(args) -> int:
    pattern = parse_pattern(args.pattern)
    cert = exo_exact(
        args.n,
        pattern,
        budget=_budget(args),
        witness_cap=args.witnesses,
        workers=args.workers,
    )
    _emit(args, _dump(cert.to_json_dict(include_timing=args.timings)))
    return 0 if cert.exact else 3


def _cmd_z(args) -> int:
    pattern = parse_pattern(args.pattern)
    result = compressibility(pattern, k_max=args.kmax, full_vector=True)
    payload = {
        "schema": 1,
        "command": "z",
        "value": result.value,
        "exceeds_kmax": result.exceeds,
        "k_max": result.k_max,
        "per_k": {str(k): v for k, v in result.per_k.items()},
        "counterexamples": {
            str(k): digraph6_encode(g) for k, g in result.counterexamples.items()
        },
    }
    if args.format == "text":
        value = "exceeds k_max" if result.exceeds else str(result.value)
        vector = " ".join(f"k={k}:{'pass' if v else 'fail'}" for k, v in result.per_k.items())
        _emit(args, f"z = {value}\n{vector}\n")
    else:
        _emit(args, _dump(payload))
    return 0


def _cmd_construct(args) -> int:
    what, rest = args.what, args.args
    if what == "tt":
        if len(rest) != 1:
            raise ParseError("construct tt needs one argument: N")
        out = digraph6_encode(transitive_tournament(int(rest[0])))
    elif what == "cycle":
        if len(rest) != 1:
            raise ParseError("construct cycle needs one argument: K")
        out = digraph6_encode(directed_cycle(int(rest[0])))
    elif what == "blowup":
        if len(rest) < 2:
            raise ParseError("construct blowup needs a base digraph6 and part sizes")
        base = digraph6_decode(rest[0])
        out = digraph6_encode(blow_up(base, [int(x) for x in rest[1:]]))
    else:  # turan-count
        if len(rest) != 2:
            raise ParseError("construct turan-count needs two arguments: N K")
        value = turan_edge_count(int(rest[0]), int(rest[1]))
        if args.format == "text":
            _emit(args, f"{value}\n")
        else:
            _emit(args, _dump({"schema": 1, "command": "turan-count", "value": value}))
        return 0
    if args.format == "text":
        _emit(args, out + "\n")
    else:
        _emit(args, _dump({"schema": 1, "command": "construct", "digraph6": out}))
    return 0


def _cmd_verify(args) -> int:
    which = args.which
    budget = _budget(args)
    reports: list[verify.TheoremReport] = []

    def run(name: str) -> None:
        if name == "omm":
            reports.append(
                verify.run_omm_suite(
                    samples=args.samples or 100_000,
                    n_max=args.n or 32,
                    seed=args.seed,
                    workers=args.workers,
                )
            )
        elif name == "t18":
            reports.append(
                verify.run_tt_density_suite(
                    samples=args.samples or 100_000,
                    n_max=args.n or 32,
                    seed=args.seed,
                    workers=args.workers,
                )
            )
        elif name == "t19":
            reports.append(
                verify.run_kst_suite(
                    samples=args.samples or 100_000,
                    n_max=args.n or 32,
                    seed=args.seed,
                    workers=args.workers,
                )
            )
        elif name == "supersat":
            reports.append(
                verify.run_supersat_suite(
                    samples=args.samples or 10_000,
                    seed=args.seed,
                    workers=args.workers,
                )
            )
        elif name == "t16":
            ns = (args.n,) if args.n else (4, 5, 6)
            reports.extend(
                verify.run_t16(
                    ns=ns,
                    samples=args.samples or 10**6,
                    seed=args.seed,
                    budget=budget,
                )
            )
        elif name == "p31a":
            reports.append(verify.check_prop31a())
        elif name == "p21":
            reports.append(
                verify.run_density_monotone(
                    n_max=args.n or 6, budget=budget, workers=args.workers
                )
            )
        elif name == "ghs":
            reports.append(
                verify.check_ghs_tournament_identity(
                    n_max=args.n or 6, budget=budget, workers=args.workers
                )
            )

    if which == "all":
        for name in ("p21", "p31a", "t16", "ghs", "omm", "t18", "t19", "supersat"):
            run(name)
    else:
        run(which)

    dicts = [r.to_json_dict(include_timing=args.timings) for r in reports]
    if args.format == "text":
        lines = []
        for r in reports:
            status = "OK" if r.ok else f"{len(r.violations)}+ VIOLATIONS"
            lines.append(f"{r.theorem_id}: {status} ({r.instances} instances)")
        _emit(args, "\n".join(lines) + "\n")
    else:
        payload = dicts[0] if len(dicts) == 1 else dicts
        _emit(args, _dump(payload))
    return 0 if all(r.ok for r in reports) else 1


def _cmd_gen(args) -> int:
    n = args.n
    states = 3 ** math.comb(n, 2)
    force = args.limit is not None or (
        args.node_budget is not None and args.node_budget >= states
    )
    stream = enumerate_oriented(n, arc_count=args.arcs, force=force or n <= 6)
    lines = []
    for i, g in enumerate(stream):
        if args.limit is not None and i >= args.limit:
            break
        lines.append(digraph6_encode(g))
    _emit(args, "\n".join(lines) + ("\n" if lines else ""))
    return 0


_HANDLERS = {
    "count": _cmd_count,
    "profile": _cmd_profile,
    "exo": _cmd_exo,
    "z": _cmd_z,
    "construct": _cmd_construct,
    "verify": _cmd_verify,
    "gen": _cmd_gen,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except BudgetError as exc:
        _print_error(exc)
        return 3
    except (ParseError, InvalidInputError, CapacityError, FileNotFoundError) as exc:
        _print_error(exc)
        return 2
    except OrientTuranError as exc:
        _print_error(exc)
        return 2


def _print_error(exc: Exception) -> None:
    record = {"error": type(exc).__name__, "message": str(exc)}
    offset = getattr(exc, "offset", None)
    if offset is not None:
        record["offset"] = offset
    sys.stderr.write(json.dumps(record, sort_keys=True) + "\n")


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
