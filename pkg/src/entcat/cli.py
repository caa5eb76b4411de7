"""Command-line front end.

A thin client over the service layer: every subcommand builds the same
request model the HTTP endpoint accepts, runs the shared handler in-process,
and renders the resulting report as human text, JSON, or CSV.

Exit codes are a stable scripting contract:

* 0 - success / positive verdict
* 2 - input or usage error
* 3 - negative verdict (infeasible, not a catalyst, threshold not found,
      no search hits)
* 4 - component cap exceeded

``--stable`` strips the timing field so identical invocations produce
byte-identical output, for golden-file testing.  Vector arguments accept
``-`` to read one line from stdin per occurrence.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import InputError, ResourceLimitError
from .service import handlers
from .service.app import apply_cap_from_env
from .service.models import (
    BoundsRequest,
    CatalyzeRequest,
    CheckRequest,
    MloccRequest,
    PmaxRequest,
    RunReport,
    SearchRequest,
    TradeoffRequest,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NEGATIVE = 3
EXIT_RESOURCE = 4


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


class _StdinVectors:
    """Resolves '-' vector arguments to successive lines read from stdin."""

    def __init__(self) -> None:
        self._lines: list[str] | None = None

    def resolve(self, text: str | None) -> str | None:
        if text != "-":
            return text
        if self._lines is None:
            self._lines = [line for line in sys.stdin.read().splitlines() if line.strip()]
        if not self._lines:
            raise InputError("expected a vector line on stdin for '-'")
        return self._lines.pop(0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entcat",
        description=(
            "Exact-arithmetic analysis of bipartite pure-state entanglement "
            "transformations. Vectors are comma-separated Schmidt coefficients, "
            "as decimals (converted exactly) or fractions: '0.4,0.4,0.1,0.1' or "
            "'50/103,30/103,23/103'. Use '-' to read a vector from stdin."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--normalize", action="store_true", help="rescale inputs to sum 1")
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        p.add_argument("--stable", action="store_true", help="omit timing for reproducible output")

    p = sub.add_parser("check", help="deterministic feasibility of source -> target")
    p.add_argument("source")
    p.add_argument("target")
    common(p)

    p = sub.add_parser("catalyze", help="test a catalyst at a given copy count")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("catalyst")
    p.add_argument("--copies", type=_positive_int, default=1)
    common(p)

    p = sub.add_parser("mlocc", help="smallest copy count that stays feasible jointly")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--max", dest="max_copies", type=_positive_int, default=12)
    common(p)

    p = sub.add_parser("tradeoff", help="source copies vs catalyst copies table")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("catalyst")
    p.add_argument("--max-source", type=_positive_int, required=True)
    p.add_argument("--max-cat", type=_positive_int, required=True)
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    common(p)

    p = sub.add_parser("pmax", help="maximal conversion probability, optionally assisted")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--source-copies", type=_positive_int, default=1)
    p.add_argument("--cat", dest="catalyst")
    p.add_argument("--cat-copies", type=_nonnegative_int, default=None)
    common(p)

    p = sub.add_parser("bounds", help="sandwich on the catalyst-assisted probability")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--power", type=_positive_int, default=1)
    common(p)

    p = sub.add_parser("search", help="grid search for catalysts with pruning")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--dim", type=_positive_int, default=2)
    p.add_argument("--denominator", type=_positive_int, default=10)
    p.add_argument("--copies", type=_positive_int, default=1)
    p.add_argument("--lambda", dest="lambda_target", default=None,
                   help="probability target; switches to probabilistic mode")
    p.add_argument("--max-candidates", type=_positive_int, default=100)
    common(p)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _report_dict(report: RunReport, stable: bool) -> dict:
    data = report.model_dump()
    if stable:
        del data["timing_ms"]
    return data


def _print_json(report: RunReport, stable: bool) -> None:
    print(json.dumps(_report_dict(report, stable)))


def _yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


def _render_filter(name: str, payload: dict) -> list[str]:
    lines = [f"{name}: {'pass' if payload['passes'] else 'violated'}"]
    for v in payload["violations"]:
        where = f"l={v['prefix_index']}"
        if v["catalyst_index"] is not None:
            where += f", i={v['catalyst_index']}"
        detail = f"  {v['condition']} at {where}"
        if v["lhs"] is not None and v["rhs"] is not None:
            detail += f": {v['lhs']} vs {v['rhs']}"
        lines.append(detail)
    return lines


def _render_check(report: RunReport) -> list[str]:
    r = report.result
    lines = [
        f"source: {report.inputs['source']}",
        f"target: {report.inputs['target']}",
    ]
    if r["feasible"]:
        lines.append("feasible: yes")
    else:
        where = ",".join(str(l) for l in r["violated_prefixes"])
        lines.append(f"feasible: no (prefix sums violated at l={where} of {r['checked_length']})")
    return lines


def _render_catalyze(report: RunReport) -> list[str]:
    r = report.result
    lines = [
        f"source: {report.inputs['source']}",
        f"target: {report.inputs['target']}",
        f"catalyst: {report.inputs['catalyst']} (copies={r['copies']})",
        f"catalyst works: {_yes_no(r['is_catalyst'])}",
    ]
    lines += _render_filter("single-copy filter", r["single_copy_filter"])
    lines += _render_filter("multiple-copy filter", r["multicopy_filter"])
    return lines


def _render_mlocc(report: RunReport) -> list[str]:
    r = report.result
    if r["threshold"] is None:
        return [f"no stable copy count found up to {r['max_copies']} "
                f"(powers checked up to {r['checked_up_to']})"]
    return [f"threshold: {r['threshold']} (joint transformation feasible for every "
            f"copy count >= {r['threshold']}; powers checked up to {r['checked_up_to']})"]


def _render_tradeoff_text(report: RunReport) -> list[str]:
    r = report.result
    lines = ["source_copies  feasible_alone  min_catalyst_copies"]
    for row in r["rows"]:
        copies = row["min_catalyst_copies"]
        shown = "-" if row["feasible_alone"] else (str(copies) if copies is not None else f">{r['max_cat']}")
        lines.append(f"{row['source_copies']:>13}  {_yes_no(row['feasible_alone']):>14}  {shown:>19}")
    if not r["monotonic"]:
        lines.append("warning: minimal catalyst copies are not nonincreasing in source copies")
    return lines


def _render_tradeoff_csv(report: RunReport) -> list[str]:
    lines = ["source_copies,min_catalyst_copies,feasible_alone"]
    for row in report.result["rows"]:
        copies = row["min_catalyst_copies"]
        lines.append(
            f"{row['source_copies']},{'' if copies is None else copies},{str(row['feasible_alone']).lower()}"
        )
    return lines


def _render_pmax(report: RunReport) -> list[str]:
    r = report.result
    lines = [f"p_max = {r['p_max']} = {r['p_max_decimal']} (minimizing l={r['minimizing_l']})"]
    if r["target_rank_exceeds_source"]:
        lines.append("target Schmidt rank exceeds source rank: probability is exactly 0")
    return lines


def _render_bounds(report: RunReport) -> list[str]:
    r = report.result
    lines = [
        f"lower = {r['lower']} = {r['lower_decimal']}",
        f"upper = {r['upper']} = {r['upper_decimal']}",
    ]
    if r["collapsed"]:
        lines.append("bounds coincide: copies and catalysts cannot improve the per-copy probability")
    return lines


def _render_search(report: RunReport) -> list[str]:
    r = report.result
    lines = []
    for hit in r["hits"]:
        if "p_max" in hit:
            lines.append(f"hit: {hit['catalyst']} (copies={hit['copies']}, p_max={hit['p_max_decimal']})")
        else:
            lines.append(f"hit: {hit['catalyst']} (copies={hit['copies']})")
    c = r["counters"]
    lines.append(
        f"{len(r['hits'])} hit(s); enumerated={c['enumerated']} "
        f"pruned_by_filter={c['pruned_by_filter']} verified={c['verified']}"
    )
    return lines


def _emit_search(report: RunReport, as_json: bool, stable: bool) -> None:
    if not as_json:
        for line in _render_search(report):
            print(line)
        return
    # hit lists can be long: stream one JSON object per hit, then the report
    for hit in report.result["hits"]:
        print(json.dumps(hit))
    summary = _report_dict(report, stable)
    summary["result"] = {k: v for k, v in report.result.items() if k != "hits"}
    summary["result"]["hit_count"] = len(report.result["hits"])
    print(json.dumps(summary))


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK

    if args.command == "serve":
        import uvicorn

        from .service.app import app

        uvicorn.run(app, host=args.host, port=args.port)
        return EXIT_OK

    stdin = _StdinVectors()
    try:
        apply_cap_from_env()
        if args.command == "check":
            report = handlers.run_check(
                CheckRequest(
                    source=stdin.resolve(args.source),
                    target=stdin.resolve(args.target),
                    normalize=args.normalize,
                )
            )
            negative = not report.result["feasible"]
            renderer = _render_check
        elif args.command == "catalyze":
            report = handlers.run_catalyze(
                CatalyzeRequest(
                    source=stdin.resolve(args.source),
                    target=stdin.resolve(args.target),
                    catalyst=stdin.resolve(args.catalyst),
                    copies=args.copies,
                    normalize=args.normalize,
                )
            )
            negative = not report.result["is_catalyst"]
            renderer = _render_catalyze
        elif args.command == "mlocc":
            report = handlers.run_mlocc(
                MloccRequest(
                    source=stdin.resolve(args.source),
                    target=stdin.resolve(args.target),
                    max_copies=args.max_copies,
                    normalize=args.normalize,
                )
            )
            negative = report.result["threshold"] is None
            renderer = _render_mlocc
        elif args.command == "tradeoff":
            report = handlers.run_tradeoff(
                TradeoffRequest(
                    source=stdin.resolve(args.source),
                    target=stdin.resolve(args.target),
                    catalyst=stdin.resolve(args.catalyst),
                    max_source=args.max_source,
                    max_cat=args.max_cat,
                    normalize=args.normalize,
                )
            )
            if args.format == "csv":
                for line in _render_tradeoff_csv(report):
                    print(line)
                return EXIT_OK
            if args.format == "json" or args.json:
                _print_json(report, args.stable)
                return EXIT_OK
            for line in _render_tradeoff_text(report):
                print(line)
            return EXIT_OK
        elif args.command == "pmax":
            cat_copies = args.cat_copies
            if cat_copies is None:
                cat_copies = 1 if args.catalyst is not None else 0
            report = handlers.run_pmax(
                PmaxRequest(
                    source=stdin.resolve(args.source),
                    target=stdin.resolve(args.target),
                    source_copies=args.source_copies,
                    catalyst=stdin.resolve(args.catalyst),
                    cat_copies=cat_copies,
                    normalize=args.normalize,
                )
            )
            negative = False
            renderer = _render_pmax
        elif args.command == "bounds":
            report = handlers.run_bounds(
                BoundsRequest(
                    source=stdin.resolve(args.source),
                    target=stdin.resolve(args.target),
                    power=args.power,
                    normalize=args.normalize,
                )
            )
            negative = False
            renderer = _render_bounds
        elif args.command == "search":
            report = handlers.run_search(
                SearchRequest(
                    source=stdin.resolve(args.source),
                    target=stdin.resolve(args.target),
                    dimension=args.dim,
                    denominator=args.denominator,
                    copies=args.copies,
                    lambda_target=args.lambda_target,
                    max_candidates=args.max_candidates,
                    normalize=args.normalize,
                )
            )
            _emit_search(report, args.json, args.stable)
            return EXIT_OK if report.result["hits"] else EXIT_NEGATIVE
        else:  # pragma: no cover - argparse enforces the choices
            return EXIT_INPUT
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE

    if args.json:
        _print_json(report, args.stable)
    else:
        for line in renderer(report):
            print(line)
    return EXIT_NEGATIVE if negative else EXIT_OK


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
