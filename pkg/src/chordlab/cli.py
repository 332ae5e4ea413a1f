"""Command-line surface: eval, table1, verify, enumerate.

Exit codes: 0 success / no violations, 1 violations or table mismatch,
2 input parse error, 3 invalid parameters or bounds.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import table1 as table1_mod
from . import verify as verify_mod
from .diagrams import (
    DiagramError,
    canonical_code,
    enumerate_diagrams,
    format_diagram,
    parse_diagram,
)
from .fourterm import VerificationReport
from .graphs import (
    GraphError,
    SimpleGraph,
    enumerate_graphs,
    format_graph,
    graph_canonical_mask,
    intersection_graph,
    parse_graph,
)
from .invariants import e_l_parity, r_k, r_k_graph, sl2_projected, w_c
from .polynomials import IntPolynomial
from .sl2 import sl2_oracle, sl2_recursive

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_PARSE = 2
EXIT_PARAMS = 3

MAX_DIAGRAM_ORDER = 8
MAX_GRAPH_ORDER = 6

DIAGRAM_INVARIANTS = ("rk", "el-parity", "wc", "sl2", "sl2-recursive", "sl2-projected")
GRAPH_INVARIANTS = ("wc", "el-parity", "rk-graph")


class ParamError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse usage errors are parameter errors
        raise ParamError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="chordlab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate an invariant on inputs")
    p_eval.add_argument("input", nargs="?", help="diagram word or graph edge list")
    p_eval.add_argument("--file", help="read inputs from file ('-' for stdin)")
    p_eval.add_argument("--graph", action="store_true", help="inputs are graphs")
    p_eval.add_argument("--invariant", required=True)
    p_eval.add_argument("--k", type=int)
    p_eval.add_argument("--l", type=int)
    p_eval.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p_table = sub.add_parser("table1", help="recompute the reference value table")
    p_table.add_argument(
        "--strict-published",
        action="store_true",
        help="require literal equality even for documented sign misprints",
    )

    p_verify = sub.add_parser("verify", help="run a named verification suite")
    p_verify.add_argument("suite", choices=verify_mod.SUITE_NAMES)
    p_verify.add_argument("--invariant")
    p_verify.add_argument("--n", type=int)
    p_verify.add_argument("--k", type=int)
    p_verify.add_argument("--l", type=int)
    p_verify.add_argument("--exhaustive", action="store_true")
    p_verify.add_argument("--sample", type=int, metavar="N")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--jobs", type=int, default=None)

    p_enum = sub.add_parser("enumerate", help="list diagrams or graphs")
    p_enum.add_argument("kind", choices=("diagrams", "graphs"))
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.add_argument("--mode")
    return parser


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except ParamError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    try:
        if args.command == "eval":
            return _cmd_eval(args)
        if args.command == "table1":
            return _cmd_table1(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "enumerate":
            return _cmd_enumerate(args)
    except (DiagramError, GraphError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ParamError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    raise AssertionError("unreachable")


# ---------------------------------------------------------------------------
# eval


def _gather_inputs(args) -> list[str]:
    if (args.input is None) == (args.file is None):
        raise ParamError("provide exactly one of INPUT or --file")
    if args.input is not None:
        return [args.input]
    if args.file == "-":
        ctx = contextlib.nullcontext(sys.stdin)
    else:
        ctx = open(args.file)
    with ctx as fh:
        lines = [ln.split("#", 1)[0].strip() for ln in fh]
    return [ln for ln in lines if ln]


def _graph_code(g: SimpleGraph) -> str:
    canon = SimpleGraph.from_edge_mask(g.n, graph_canonical_mask(g))
    rows = format_graph(canon).splitlines()[1:]
    return f"{g.n}:" + "/".join(rows)


def _cmd_eval(args) -> int:
    name = args.invariant
    valid = GRAPH_INVARIANTS if args.graph else DIAGRAM_INVARIANTS
    if name not in valid:
        raise ParamError(
            f"invariant {name!r} not valid for this input kind (choose from {valid})"
        )
    if name in ("rk", "rk-graph") and not args.k:
        raise ParamError(f"{name} requires --k")
    if name == "el-parity" and not args.l:
        raise ParamError("el-parity requires --l")
    rows = []
    for text in _gather_inputs(args):
        if args.graph:
            g = parse_graph(text)
            if g.n > MAX_DIAGRAM_ORDER:
                raise ParamError(f"graph order {g.n} exceeds ceiling {MAX_DIAGRAM_ORDER}")
            code = _graph_code(g)
            if name == "wc":
                value = w_c(g)
            elif name == "el-parity":
                value = e_l_parity(g, args.l)
            else:
                value = r_k_graph(g, args.k)
        else:
            d = parse_diagram(text)
            if d.n > MAX_DIAGRAM_ORDER:
                raise ParamError(
                    f"diagram order {d.n} exceeds ceiling {MAX_DIAGRAM_ORDER}"
                )
            code = canonical_code(d).decode("ascii")
            if name == "rk":
                value = r_k(d, args.k)
            elif name == "el-parity":
                value = e_l_parity(intersection_graph(d), args.l)
            elif name == "wc":
                value = w_c(intersection_graph(d))
            elif name == "sl2":
                value = sl2_oracle(d)
            elif name == "sl2-recursive":
                value = sl2_recursive(d)
            else:
                value = sl2_projected(d)
        rows.append((text, code, value))
    _print_eval(rows, args)
    return EXIT_OK


def _print_eval(rows, args) -> None:
    if args.format == "text":
        for _, code, value in rows:
            out = value.pretty() if isinstance(value, IntPolynomial) else str(value)
            print(f"{out}\t{code}")
    elif args.format == "json":
        for text, code, value in rows:
            rec = {"input": text, "code": code, "invariant": args.invariant}
            if isinstance(value, IntPolynomial):
                rec["value"] = {"pretty": value.pretty(), "coeffs": list(value.coeffs)}
            else:
                rec["value"] = value
            print(json.dumps(rec, sort_keys=True))
    else:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["input", "code", "invariant", "value"])
        for text, code, value in rows:
            out = value.pretty() if isinstance(value, IntPolynomial) else str(value)
            writer.writerow([text, code, args.invariant, out])


# ---------------------------------------------------------------------------
# table1


def _cmd_table1(args) -> int:
    results = table1_mod.recompute()
    mismatch = False
    for row in results:
        for cell in row.cells:
            status = cell.status
            if status == "MISMATCH" or (
                args.strict_published and status == "sign-misprint"
            ):
                mismatch = True
            print(
                f"row {row.index} k={row.k} {cell.name:<10} "
                f"computed={cell.computed:<40} published={cell.published:<40} {status}"
            )
    print("table1:", "MISMATCH" if mismatch else "ok")
    return EXIT_VIOLATIONS if mismatch else EXIT_OK


# ---------------------------------------------------------------------------
# verify


def _default_jobs(args) -> int:
    if args.jobs is not None:
        jobs = args.jobs
    else:
        jobs = int(os.environ.get("CHORDLAB_JOBS", "1"))
    if jobs < 1:
        raise ParamError("--jobs must be at least 1")
    return jobs


def _verify_params(args) -> dict:
    suite = args.suite
    mode = "sample" if args.sample else "exhaustive"
    params: dict = {}
    def need(flag, value):
        if value is None:
            raise ParamError(f"suite {suite!r} requires --{flag}")
        return value
    if suite == "four-term-diagrams":
        params = dict(
            invariant=args.invariant or "rk",
            order=need("n", args.n),
            k=args.k,
            l=args.l,
            mode=mode,
            count=args.sample or 0,
            seed=args.seed,
        )
        if params["invariant"] == "rk" and params["k"] is None:
            params["k"] = params["order"] // 2
        _check_order(params["order"], MAX_DIAGRAM_ORDER)
        if mode == "exhaustive":
            _check_order(params["order"], 6)
    elif suite == "four-term-graphs":
        params = dict(
            invariant=args.invariant or "rk-graph",
            order=need("n", args.n),
            k=args.k,
            l=args.l,
        )
        if params["invariant"] == "rk-graph" and params["k"] is None:
            params["k"] = params["order"] // 2
        _check_order(params["order"], MAX_GRAPH_ORDER)
    elif suite == "two-term":
        params = dict(invariant=args.invariant or "wc", order=need("n", args.n))
        _check_order(params["order"], MAX_GRAPH_ORDER)
    elif suite == "mutation":
        params = dict(order=need("n", args.n))
        _check_order(params["order"], 6)
    elif suite == "parity":
        params = dict(
            order=need("n", args.n),
            k=need("k", args.k),
            mode=mode,
            count=args.sample or 0,
            seed=args.seed,
        )
        _check_order(params["order"], MAX_DIAGRAM_ORDER)
        if mode == "exhaustive":
            _check_order(params["order"], 6)
    elif suite == "conjecture":
        params = dict(
            k=need("k", args.k), mode=mode, count=args.sample or 0, seed=args.seed
        )
        _check_order(2 * params["k"], MAX_DIAGRAM_ORDER)
        if mode == "exhaustive":
            _check_order(2 * params["k"], 6)
    elif suite == "wc-identity":
        params = dict(k=need("k", args.k))
        _check_order(2 * params["k"], 6)
    elif suite == "oracle-equivalence":
        params = dict(
            order=need("n", args.n), mode=mode, count=args.sample or 0, seed=args.seed
        )
        _check_order(params["order"], MAX_DIAGRAM_ORDER)
        if mode == "exhaustive":
            _check_order(params["order"], 6)
    elif suite == "wheel-prism":
        params = {}
    return params


def _check_order(n: int, ceiling: int) -> None:
    if n < 0 or n > ceiling:
        raise ParamError(f"order {n} outside brute-force ceiling {ceiling}")


_SUITE_FUNCS = {
    "four-term-diagrams": verify_mod.suite_four_term_diagrams,
    "four-term-graphs": verify_mod.suite_four_term_graphs,
    "two-term": verify_mod.suite_two_term,
    "mutation": verify_mod.suite_mutation,
    "parity": verify_mod.suite_parity,
    "conjecture": verify_mod.suite_conjecture,
    "wc-identity": verify_mod.suite_wc_identity,
    "oracle-equivalence": verify_mod.suite_oracle_equivalence,
}

# suites whose principal loop supports sharded workers in exhaustive mode
_SHARDABLE = set(_SUITE_FUNCS)


def _run_shard(suite: str, params: dict, shard: tuple[int, int]):
    report = _SUITE_FUNCS[suite](**params, shard=shard)
    # plain tuple for pickling back to the parent
    return report.invariant, report.order, report.checked, report.violations


def _cmd_verify(args) -> int:
    params = _verify_params(args)
    jobs = _default_jobs(args)
    info: list[dict] = []
    if args.suite == "wheel-prism":
        report, info = verify_mod.suite_wheel_prism()
    elif (
        jobs > 1
        and args.suite in _SHARDABLE
        and params.get("mode", "exhaustive") == "exhaustive"
    ):
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(_run_shard, args.suite, params, (i, jobs))
                for i in range(jobs)
            ]
            parts = [f.result() for f in futures]
        report = verify_mod.merge_reports(
            [
                VerificationReport(
                    invariant=inv, order=order, checked=checked, violations=viol
                )
                for inv, order, checked, viol in parts
            ]
        )
    else:
        report = _SUITE_FUNCS[args.suite](**params)
    for rec in info:
        print(json.dumps(rec, sort_keys=True))
    print(report.json_lines())
    return EXIT_OK if report.ok else EXIT_VIOLATIONS


# ---------------------------------------------------------------------------
# enumerate


def _cmd_enumerate(args) -> int:
    n = args.n
    if args.kind == "diagrams":
        mode = args.mode or "up-to-rotation"
        if mode not in ("basepointed", "up-to-rotation"):
            raise ParamError(f"unknown diagram mode {mode!r}")
        _check_order(n, MAX_DIAGRAM_ORDER)
        lines = sorted(format_diagram(d) for d in enumerate_diagrams(n, mode))
    else:
        mode = args.mode or "up-to-iso"
        if mode not in ("labeled", "up-to-iso"):
            raise ParamError(f"unknown graph mode {mode!r}")
        # labeled mode is kept at 6 so the sorted output stays in memory
        _check_order(n, MAX_GRAPH_ORDER if mode == "labeled" else MAX_DIAGRAM_ORDER)
        lines = sorted(_graph_line(g) for g in enumerate_graphs(n, mode))
    for ln in lines:
        print(ln)
    return EXIT_OK


def _graph_line(g: SimpleGraph) -> str:
    rows = format_graph(g).splitlines()[1:]
    return f"{g.n}:" + "/".join(rows)


if __name__ == "__main__":
    sys.exit(main())
