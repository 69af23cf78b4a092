"""Command-line front end.

    mindeg eval cor1 --n 3
    mindeg simulate knn:4 --delta 1 --target bipartite-matchings --trials 100000 --seed 7
    mindeg distribution --edge-total 4 --h 2 --delta-big 1 --format csv
    mindeg verify --suite small

Reports go to stdout as JSON (or CSV for ``distribution``); diagnostics go to
stderr.  Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 domain
precondition violated.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import formulas as F
from .counting import (
    copies_through_edge,
    count_bipartite_matchings,
    count_hamiltonian_cycles,
    count_perfect_matchings,
    enumerate_spanning_copies,
)
from .model import (
    Graph,
    InvalidParameter,
    MindegError,
    ParseError,
    PreconditionViolation,
    SizeCapExceeded,
    build_complete,
    build_complete_bipartite,
    build_complete_hypergraph,
    build_rpartite_hypergraph,
    parse_ambient,
    parse_graph,
)
from .process import TARGETS, MASK64, monte_carlo_expected_count, monte_carlo_inclusion
from .verify import run_suite

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3


class UsageError(Exception):
    pass


def rational(x: Fraction) -> dict:
    return {"num": str(x.numerator), "den": str(x.denominator)}


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def _need(args, *names):
    missing = [n for n in names if getattr(args, n.replace("-", "_")) is None]
    if missing:
        raise UsageError(f"{args.subtarget} needs " + ", ".join("--" + m for m in missing))
    return [getattr(args, n.replace("-", "_")) for n in names]


def _read_graph(path: str) -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_graph(text)


# --- eval --------------------------------------------------------------------

def cmd_eval(args) -> int:
    t = args.subtarget
    params: dict
    if t == "thm1":
        h, bd = _need(args, "h", "delta-big")
        params, value = {"h": h, "delta_big": bd}, F.thm1_fraction(h, bd)
    elif t == "cor1":
        (n,) = _need(args, "n")
        params, value = {"n": n}, F.cor1_expected_matchings(n)
    elif t == "cor2":
        n, d = _need(args, "n", "d")
        params, value = {"n": n, "d": d}, F.cor2_matching_fraction(n, d)
    elif t == "cor3":
        n, d = _need(args, "n", "d")
        params, value = {"n": n, "d": d}, F.cor3_hamcycle_fraction(n, d)
    elif t in ("thm2", "thm3"):
        n, r = _need(args, "n", "r")
        fn = F.thm2_expected_matchings if t == "thm2" else F.thm3_expected_matchings
        params, value = {"n": n, "r": r}, fn(n, r)
    elif t == "remark":
        gpath, hpath, delta = _need(args, "graph", "pattern", "delta")
        G, H = _read_graph(gpath), _read_graph(hpath)
        if any(x != delta for x in H.degrees()):
            raise PreconditionViolation(F.K3_COUNTEREXAMPLE)
        copies = enumerate_spanning_copies(G, H)
        value = F.remark_nonregular_expectation(G, delta, H.edge_count, copies_through_edge(G, copies), H=H)
        params = {"graph": gpath, "pattern": hpath, "delta": delta, "copies": len(copies)}
    else:  # general
        gpath, jpath, delta = _need(args, "graph", "copy", "delta")
        G, J = _read_graph(gpath), _read_graph(jpath)
        params = {"graph": gpath, "copy": jpath, "delta": delta}
        value = F.general_copy_probability(G, J, delta)
    _emit({"target": t, "params": params, "value": rational(value), "approx": float(value)})
    return EXIT_OK


# --- simulate ----------------------------------------------------------------

def parse_ambient_spec(spec: str):
    """Builder spec (knn:N, kn:N, rpartite:N:R, krn:N:R) or a path to a graph
    or hypergraph file.  Returns (ambient, kind, params)."""
    builders = {
        "knn": (1, build_complete_bipartite),
        "kn": (1, build_complete),
        "rpartite": (2, build_rpartite_hypergraph),
        "krn": (2, build_complete_hypergraph),
    }
    head, *rest = spec.split(":")
    if head in builders and rest:
        arity, fn = builders[head]
        if len(rest) != arity:
            raise UsageError(f"{head} expects {arity} integer parameter(s): {spec!r}")
        try:
            nums = [int(x) for x in rest]
        except ValueError:
            raise UsageError(f"non-integer parameter in {spec!r}") from None
        return fn(*nums), head, nums
    path = Path(spec)
    if not path.is_file():
        raise UsageError(f"{spec!r} is neither a builder spec nor a readable file")
    return parse_ambient(path.read_text()), "file", []


def _count_in(ambient: Graph, target: str) -> int:
    if target == "bipartite-matchings":
        return count_bipartite_matchings(ambient)
    if target == "perfect-matchings":
        return count_perfect_matchings(ambient)
    return count_hamiltonian_cycles(ambient)


def reference_value(ambient, kind, nums, delta, target, J) -> Fraction | None:
    """Closed-form expectation for the simulated quantity, when one applies."""
    if target == "inclusion":
        if not isinstance(ambient, Graph):
            return None
        Jg = ambient.subgraph(J)
        if Jg.min_degree() < delta:
            return None
        return F.general_copy_probability(ambient, Jg, delta)
    if target == "hypergraph-matchings":
        if delta != 1:
            return None
        if kind == "rpartite":
            return F.thm2_expected_matchings(*nums)
        if kind == "krn":
            return F.thm3_expected_matchings(*nums)
        if kind == "kn" and nums[0] % 2 == 0:
            return F.thm3_expected_matchings(nums[0] // 2, 2)
        return None
    # graph targets on a regular ambient: every copy is delta-regular
    if not isinstance(ambient, Graph) or not ambient.is_regular() or ambient.vertex_count == 0:
        return None
    V = ambient.vertex_count
    d = ambient.degrees()[0]
    if target in ("bipartite-matchings", "perfect-matchings"):
        if delta != 1 or V % 2:
            return None
        h = V // 2
    else:
        if delta != 2 or V < 3:
            return None
        h = V
    copies = _count_in(ambient, target)
    if copies == 0:
        return Fraction(0)
    return copies * F.thm1_fraction(h, d - delta)


def _parse_J(raw: str | None, ambient) -> frozenset:
    if raw is None:
        raise UsageError("--target inclusion needs --J (\"all\" or comma-separated edge indices)")
    if raw == "all":
        return frozenset(range(ambient.edge_count))
    try:
        return frozenset(int(x) for x in raw.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"bad --J value {raw!r}") from None


def cmd_simulate(args) -> int:
    ambient, kind, nums = parse_ambient_spec(args.ambient)
    if not 0 <= args.seed <= MASK64:
        raise UsageError("--seed must be a 64-bit unsigned integer")
    J = None
    if args.target == "inclusion":
        J = _parse_J(args.J, ambient)
        est = monte_carlo_inclusion(ambient, args.delta, J, args.trials, args.seed, args.workers)
    else:
        est = monte_carlo_expected_count(ambient, args.delta, args.target, args.trials, args.seed, args.workers)
    ref = reference_value(ambient, kind, nums, args.delta, args.target, J)
    report = {
        "ambient": args.ambient,
        "delta": args.delta,
        "target": args.target,
        **est.as_dict(),
        "reference": rational(ref) if ref is not None else None,
        "reference_approx": float(ref) if ref is not None else None,
        "z": None,
    }
    if ref is not None and est.stderr > 0:
        report["z"] = (est.mean - float(ref)) / est.stderr
    _emit(report)
    return EXIT_OK


# --- distribution ------------------------------------------------------------

def cmd_distribution(args) -> int:
    dist = F.contribution_distribution(args.edge_total, args.h, args.delta_big)
    total = sum(dist.values(), Fraction(0))
    best = F.argmax_contribution(args.edge_total, args.h, args.delta_big)
    if args.format == "json":
        _emit(
            {
                "edge_total": args.edge_total,
                "h": args.h,
                "delta_big": args.delta_big,
                "rows": [{"k": k, "value": rational(v), "approx": float(v)} for k, v in dist.items()],
                "total": rational(total),
                "total_approx": float(total),
                "argmax": best,
            }
        )
        return EXIT_OK
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["k", "numerator", "denominator", "approx"])
    for k, v in dist.items():
        w.writerow([k, v.numerator, v.denominator, repr(float(v))])
    buf.write(f"# total={total.numerator}/{total.denominator} approx={float(total)!r} argmax={best}\n")
    sys.stdout.write(buf.getvalue())
    return EXIT_OK


# --- verify ------------------------------------------------------------------

def cmd_verify(args) -> int:
    def progress(res, seconds):
        flag = "PASS" if res["passed"] else "FAIL"
        print(f"[{flag}] {res['criterion']:>3} {res['name']} ({seconds:.2f}s)", file=sys.stderr)

    results = run_suite(args.suite, threshold_correction=not args.disable_threshold_correction, on_result=progress)
    ok = all(r["passed"] for r in results)
    _emit({"suite": args.suite, "passed": ok, "checks": results})
    if not ok:
        first = next(r for r in results if not r["passed"])
        print(
            f"verification failed: {first['name']} expected {first['expected']}, actual {first['actual']}",
            file=sys.stderr,
        )
        return EXIT_VERIFY
    return EXIT_OK


# --- argument parsing --------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mindeg", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="evaluate a closed form exactly")
    ev.add_argument("subtarget", choices=["thm1", "cor1", "cor2", "cor3", "thm2", "thm3", "remark", "general"])
    for name in ("n", "d", "r", "h", "delta"):
        ev.add_argument(f"--{name}", type=int)
    ev.add_argument("--delta-big", type=int)
    ev.add_argument("--graph", help="ambient graph file")
    ev.add_argument("--pattern", help="pattern graph H (remark)")
    ev.add_argument("--copy", help="copy J of H inside the ambient graph (general)")
    ev.set_defaults(func=cmd_eval)

    sim = sub.add_parser("simulate", help="Monte Carlo estimate on an ambient structure")
    sim.add_argument("ambient", help="knn:N, kn:N, rpartite:N:R, krn:N:R, or a graph/hypergraph file")
    sim.add_argument("--delta", type=int, default=1)
    sim.add_argument("--target", choices=list(TARGETS) + ["inclusion"], required=True)
    sim.add_argument("--J", help='edge indices for --target inclusion, or "all"')
    sim.add_argument("--trials", type=int, default=10_000)
    sim.add_argument("--seed", type=int, default=0)
    sim.add_argument("--workers", type=int, default=1)
    sim.set_defaults(func=cmd_simulate)

    dist = sub.add_parser("distribution", help="tabulate the per-k contributions")
    dist.add_argument("--edge-total", type=int, required=True)
    dist.add_argument("--h", type=int, required=True)
    dist.add_argument("--delta-big", type=int, required=True)
    dist.add_argument("--format", choices=["csv", "json"], default="csv")
    dist.set_defaults(func=cmd_distribution)

    ver = sub.add_parser("verify", help="run the oracle-vs-formula acceptance checks")
    ver.add_argument("--suite", choices=["small", "full"], default="small")
    ver.add_argument("--disable-threshold-correction", action="store_true", help=argparse.SUPPRESS)
    ver.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, InvalidParameter, ParseError, SizeCapExceeded) as exc:
        print(f"mindeg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionViolation as exc:
        print(f"mindeg: precondition violated: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except MindegError as exc:
        print(f"mindeg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
