"""Command-line front end.

Subcommands cover the package's workflows: perfectness screening
(`perfect`), probabilistic defect checking (`defect`), monodromy counting
(`count`), explicit recovery of a decomposition from a serialized vector
(`decompose`), the even-degree pair family (`pair`), and reproduction of
the bundled results table (`table`).

Every run is reproducible from its flags: all randomness flows from
`--seed`, and outputs carry a config header echoing the effective
settings.  Exit codes: 0 success, 2 validation error, 3 numerically
inconclusive, 4 observed/expected mismatch.
"""
from __future__ import annotations

import argparse
import json
import sys

from .apolarity import decompose as apolar_decompose
from .combinatorics import CaseSpec, is_perfect, pair_lower_bound
from .errors import DefectiveCaseError, DegenerateInputError, InconclusiveError
from .homotopy import count_decompositions
from .polycore import PolyVector
from .tables import TIERS, format_reports, run_table
from .terracini import secant_defect

__all__ = ["main", "run_pair_analysis"]

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_INCONCLUSIVE = 3
EXIT_MISMATCH = 4


def _config_header(args) -> dict:
    return {"command": args.command, "seed": args.seed, "workers": args.workers,
            "budget_loops": args.budget_loops, "stall": args.stall}


def _emit(args, payload: dict, text: str) -> None:
    """Write either the JSON payload or the human-readable text."""
    out = sys.stdout
    close = False
    if args.out is not None:
        out = open(args.out, "w")
        close = True
    try:
        if args.json:
            json.dump(payload, out, indent=1)
            out.write("\n")
        else:
            cfg = payload["config"]
            out.write("# " + " ".join(f"{k}={v}" for k, v in cfg.items()) + "\n")
            out.write(text + "\n")
    finally:
        if close:
            out.close()


def _case_from_args(args) -> CaseSpec:
    return CaseSpec(args.n, tuple(args.degrees))


def _label(case: CaseSpec) -> str:
    return f"({','.join(map(str, case.degrees))}) on n={case.n}"


def _validated_k(args, case: CaseSpec) -> int:
    """The case's square-system k, honoring an explicit override.

    An override is accepted only when it satisfies the perfectness
    relation N = k (r + n) for the case; anything else is rejected.
    """
    if case.k is None:
        raise ValueError(
            f"case n={case.n} degrees={case.degrees} is not perfect "
            f"(N={case.N} not divisible by r+n={case.r + case.n})")
    k = getattr(args, "k", None)
    if k is not None and k != case.k:
        raise ValueError(f"k={k} violates N = k (r+n): the case requires k={case.k}")
    return case.k


# ---------------------------------------------------------------- perfect


def _cmd_perfect(args) -> int:
    case = _case_from_args(args)
    k = is_perfect(case.n, case.degrees)
    payload = {"config": _config_header(args), "n": case.n,
               "degrees": list(case.degrees), "N": case.N,
               "divisor": case.r + case.n, "perfect": k is not None, "k": k}
    if k is None:
        text = (f"{_label(case)}: not perfect "
                f"(N={case.N}, r+n={case.r + case.n})")
    else:
        text = f"{_label(case)}: perfect, k={k} (N={case.N})"
    _emit(args, payload, text)
    return EXIT_OK


# ----------------------------------------------------------------- defect


def _cmd_defect(args) -> int:
    case = _case_from_args(args)
    k = _validated_k(args, case)
    report = secant_defect(case, k, args.seed)
    payload = {"config": _config_header(args), **report.to_json()}
    text = (f"{_label(case)} at k={k}: dim {report.dim} of expected "
            f"{report.expected}, defect {report.defect} "
            f"[{report.status}, confidence {report.confidence}]")
    _emit(args, payload, text)
    return EXIT_OK if report.status == "ok" else EXIT_INCONCLUSIVE


# ------------------------------------------------------------------ count


def _cmd_count(args) -> int:
    case = _case_from_args(args)
    _validated_k(args, case)
    result = count_decompositions(case, args.seed, args.budget_loops,
                                  args.stall, workers=args.workers)
    payload = {"config": _config_header(args), **result.to_json()}
    text = (f"{_label(case)}: {result.count} decompositions "
            f"[{result.status} after {result.loops} loops, "
            f"{result.path_failures} path failures]")
    if result.status == "budget-exhausted":
        text = text.replace(": ", ": >= ", 1)
    if args.dump_solutions is not None:
        registry = result.registry
        fbase = registry.system.poly_vector(registry.base_params)
        sols = [d.with_residual(fbase).to_json() for d in registry.solutions]
        with open(args.dump_solutions, "w") as fh:
            json.dump({"config": _config_header(args), "solutions": sols}, fh, indent=1)
    _emit(args, payload, text)
    return EXIT_OK


# -------------------------------------------------------------- decompose


def _cmd_decompose(args) -> int:
    f = PolyVector.load(args.input)
    dec = apolar_decompose(f, seed=args.seed)
    payload = {"config": _config_header(args), **dec.to_json()}
    lines = [f"recovered {dec.k} summands, residual {dec.residual:.3e}"]
    for i in range(dec.k):
        coords = ", ".join(f"{z.real:+.6f}{z.imag:+.6f}j" for z in dec.forms[i])
        lams = ", ".join(f"{z.real:+.6f}{z.imag:+.6f}j" for z in dec.lambdas[i])
        lines.append(f"  [{i}] form ({coords})  lambdas ({lams})")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


# ------------------------------------------------------------------- pair


def run_pair_analysis(t: int, seed: int = 0, count_max_t: int = 2,
                      budget_loops: int = 400, stall: int = 15,
                      workers: int = 1) -> dict:
    """Analyze the degree pair (2t, 2t+1) on two variables.

    Reports perfectness (k = (t+1)^2), the closed-form lower bound on the
    number of decompositions, and, for t up to `count_max_t`, the monodromy
    count.  The count, when taken, must reach the bound.
    """
    if t < 1:
        raise ValueError("need t >= 1")
    case = CaseSpec(2, (2 * t, 2 * t + 1))
    k = case.k
    if k != (t + 1) ** 2:
        raise ValueError(f"expected k=(t+1)^2={(t + 1) ** 2}, got {k}")
    bound = pair_lower_bound(t)
    report = {"t": t, "degrees": [2 * t, 2 * t + 1], "k": k, "bound": bound,
              "count": None, "count_status": None, "ok": True}
    if t <= count_max_t:
        result = count_decompositions(case, seed, budget_loops, stall,
                                      workers=workers)
        report["count"] = result.count
        report["count_status"] = result.status
        report["loops"] = result.loops
        report["ok"] = result.count >= bound
    return report


def _cmd_pair(args) -> int:
    report = run_pair_analysis(args.t, args.seed, args.count_max_t,
                               args.budget_loops, args.stall, args.workers)
    payload = {"config": _config_header(args), **report}
    text = (f"pair ({report['degrees'][0]},{report['degrees'][1]}): "
            f"k={report['k']}, lower bound {report['bound']}")
    if report["count"] is not None:
        tag = "" if report["count_status"] == "stabilized" else ">= "
        text += f", monodromy count {tag}{report['count']} [{report['count_status']}]"
    else:
        text += ", count not attempted (raise --count-max-t to run it)"
    _emit(args, payload, text)
    return EXIT_OK if report["ok"] else EXIT_MISMATCH


# ------------------------------------------------------------------ table


def _cmd_table(args) -> int:
    rows = None
    if args.rows:
        rows = [int(tok) for chunk in args.rows for tok in chunk.split(",") if tok]
    reports = run_table(rows, args.seed, args.tier, args.budget_loops,
                        args.stall, args.workers)
    if args.json:
        out = sys.stdout if args.out is None else open(args.out, "w")
        try:
            out.write(json.dumps({"config": _config_header(args),
                                  "tier": args.tier}) + "\n")
            for rep in reports:
                out.write(json.dumps(rep.to_json()) + "\n")
        finally:
            if args.out is not None:
                out.close()
    else:
        payload = {"config": _config_header(args)}
        _emit(args, payload, format_reports(reports))
    statuses = {rep.status for rep in reports}
    if "fail" in statuses:
        return EXIT_MISMATCH
    if "inconclusive" in statuses:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


# ------------------------------------------------------------------ main


def _add_case_args(sub) -> None:
    sub.add_argument("-n", type=int, required=True,
                     help="number of variables minus one (forms live on n+1 variables)")
    sub.add_argument("degrees", type=int, nargs="+", help="degrees of the forms")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0,
                        help="seed determining all randomness (default 0)")
    common.add_argument("--json", action="store_true",
                        help="emit JSON instead of text")
    common.add_argument("--workers", type=int, default=1,
                        help="worker threads (default 1)")
    common.add_argument("--budget-loops", type=int, default=400,
                        help="monodromy loop budget (default 400)")
    common.add_argument("--stall", type=int, default=15,
                        help="consecutive empty loops before stabilization (default 15)")
    common.add_argument("--out", default=None, help="write output to this file")

    parser = argparse.ArgumentParser(
        prog="waringvec",
        description="simultaneous Waring decompositions of polynomial vectors")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("perfect", parents=[common],
                        help="screen a degree signature for perfectness")
    _add_case_args(p)
    p.set_defaults(func=_cmd_perfect)

    p = subs.add_parser("defect", parents=[common],
                        help="probabilistic secant defect check")
    _add_case_args(p)
    p.add_argument("--k", type=int, default=None,
                   help="assert this k; rejected unless N = k (r+n)")
    p.set_defaults(func=_cmd_defect)

    p = subs.add_parser("count", parents=[common],
                        help="count decompositions by monodromy")
    _add_case_args(p)
    p.add_argument("--k", type=int, default=None,
                   help="assert this k; rejected unless N = k (r+n)")
    p.add_argument("--dump-solutions", default=None, metavar="FILE",
                   help="also write every registry solution to FILE as JSON")
    p.set_defaults(func=_cmd_count)

    p = subs.add_parser("decompose", parents=[common],
                        help="recover a decomposition of a serialized vector")
    p.add_argument("input", help="JSON file holding the polynomial vector")
    p.set_defaults(func=_cmd_decompose)

    p = subs.add_parser("pair", parents=[common],
                        help="analyze the degree pair (2t, 2t+1)")
    p.add_argument("t", type=int, help="half the even degree")
    p.add_argument("--count-max-t", type=int, default=2,
                   help="run the monodromy count for t up to this value (default 2)")
    p.set_defaults(func=_cmd_pair)

    p = subs.add_parser("table", parents=[common],
                        help="reproduce the bundled results table")
    p.add_argument("--rows", action="append", default=None, metavar="I[,J...]",
                   help="restrict to these row indices (repeatable)")
    p.add_argument("--tier", choices=sorted(TIERS, key=TIERS.get), default="fast",
                   help="budget tier selecting which homotopy rows run (default fast)")
    p.set_defaults(func=_cmd_table)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, DegenerateInputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except DefectiveCaseError as exc:
        rep = exc.report
        print(f"error: defective case (defect {rep.defect}, dim {rep.dim} "
              f"of expected {rep.expected})", file=sys.stderr)
        return EXIT_VALIDATION
    except InconclusiveError as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE


if __name__ == "__main__":
    raise SystemExit(main())
