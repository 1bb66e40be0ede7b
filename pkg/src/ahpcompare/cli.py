"""Command-line front end.

Exit codes: 0 success, 1 regression failure, 2 input error, 3 I/O error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Sequence

from . import corpus
from .ahp import CORPUS_RI, RiUnavailable, ahp_decide, ahp_weights, consistency
from .chart import ChartSpec, render_chart
from .corpus.regression import ToleranceConfig, run_regression
from .fuzzy import fuzzy_decide, fuzzy_scores
from .pcm import PcmError, RatingScale, load_matrix
from .trend import DEFAULT_EPSILON, ComparisonSeries, NoObservations, SeriesTooShort, decision_series, summarize

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_IO = 0, 1, 2, 3


class InputError(Exception):
    pass


def _ri_override(text: str) -> tuple[int, float]:
    try:
        n, value = text.split("=", 1)
        n, value = int(n), float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected n=value, got {text!r}") from None
    if n < 2 or not value > 0:
        raise argparse.ArgumentTypeError(f"need n >= 2 and a positive value, got {text!r}")
    return n, value


def _series_name(path: str) -> str:
    return os.path.splitext(os.path.basename(path))[0]


def _read_matrix(path: str, strict: bool):
    scale = RatingScale("enforce" if strict else "warn")
    try:
        return load_matrix(path, scale)
    except FileNotFoundError:
        raise InputError(f"{path}: file not found") from None
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    except PcmError as exc:
        raise InputError(f"{path}: {exc}") from None


def _ri_table(args):
    return CORPUS_RI.with_overrides(dict(args.ri or []))


def _evaluate_one(path: str, args) -> dict:
    m = _read_matrix(path, args.strict)
    result: dict = {"name": _series_name(path), "labels": list(m.labels)}
    if args.method in ("ahp", "both"):
        w = ahp_weights(m)
        label, value = ahp_decide(w)
        entry = {
            "weights": [float(v) for v in w.values],
            "display": [round(float(v), 3) for v in w.values],
            "decision": {"label": label, "value": value},
        }
        try:
            entry["consistency"] = consistency(m, _ri_table(args), args.cr_threshold).to_dict()
        except RiUnavailable as exc:
            entry["consistency"] = None
            entry["consistency_error"] = str(exc)
        result["ahp"] = entry
    if args.method in ("fuzzy", "both"):
        s = fuzzy_scores(m)
        label, value = fuzzy_decide(s)
        result["fuzzy"] = {
            "scores": [float(v) for v in s.values],
            "display": [round(float(v), 3) for v in s.values],
            "decision": {"label": label, "value": value},
        }
    return result


def _evaluation_text(r: dict) -> str:
    lines = [f"# {r['name']}"]
    header = f"{'criterion':<12}"
    if "ahp" in r:
        header += f"{'AHP weight':>12}"
    if "fuzzy" in r:
        header += f"{'fuzzy score':>13}"
    lines.append(header)
    for i, label in enumerate(r["labels"]):
        row = f"{label:<12}"
        if "ahp" in r:
            row += f"{r['ahp']['weights'][i]:>12.3f}"
        if "fuzzy" in r:
            row += f"{r['fuzzy']['scores'][i]:>13.3f}"
        lines.append(row)
    if "ahp" in r:
        d = r["ahp"]["decision"]
        lines.append(f"AHP decision: {d['label']} ({d['value']:.3f})")
        c = r["ahp"]["consistency"]
        if c is None:
            lines.append(f"consistency: unavailable ({r['ahp']['consistency_error']})")
        else:
            lines.append(_consistency_line(c))
    if "fuzzy" in r:
        d = r["fuzzy"]["decision"]
        lines.append(f"Fuzzy decision: {d['label']} ({d['value']:.3f})")
    return "\n".join(lines) + "\n"


def _consistency_line(c: dict) -> str:
    d = c["display"]
    verdict = "acceptable" if c["acceptable"] else "not acceptable"
    return (
        f"nMax={d['lambda_max']:.2f}, CI={d['ci']:.2f}, RI={d['ri']:.2f}, CR={d['cr']:.2f} "
        f"({verdict} at CR <= {c['threshold']:g})"
    )


def _evaluation_csv(results: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    cols = ["matrix", "criterion"]
    if "ahp" in results[0]:
        cols.append("ahp_weight")
    if "fuzzy" in results[0]:
        cols.append("fuzzy_score")
    w.writerow(cols)
    for r in results:
        for i, label in enumerate(r["labels"]):
            row = [r["name"], label]
            if "ahp" in r:
                row.append(repr(r["ahp"]["weights"][i]))
            if "fuzzy" in r:
                row.append(repr(r["fuzzy"]["scores"][i]))
            w.writerow(row)
    return buf.getvalue()


def cmd_evaluate(args) -> tuple[int, str]:
    results = [_evaluate_one(p, args) for p in args.inputs]
    if args.format == "json":
        doc = results[0] if len(results) == 1 else results
        return EXIT_OK, json.dumps(doc, indent=2) + "\n"
    if args.format == "csv":
        return EXIT_OK, _evaluation_csv(results)
    return EXIT_OK, "\n".join(_evaluation_text(r) for r in results)


def cmd_consistency(args) -> tuple[int, str]:
    reports = []
    for path in args.inputs:
        m = _read_matrix(path, args.strict)
        try:
            rep = consistency(m, _ri_table(args), args.cr_threshold, method=args.lambda_method)
        except RiUnavailable as exc:
            raise InputError(f"{path}: {exc}") from None
        reports.append((_series_name(path), rep.to_dict()))
    if args.format == "json":
        doc = [dict(name=n, **d) for n, d in reports]
        return EXIT_OK, json.dumps(doc[0] if len(doc) == 1 else doc, indent=2) + "\n"
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["matrix", "n", "lambda_max", "ci", "ri", "cr", "acceptable"])
        for n, d in reports:
            w.writerow([n, d["n"], repr(d["lambda_max"]), repr(d["ci"]), repr(d["ri"]), repr(d["cr"]), d["acceptable"]])
        return EXIT_OK, buf.getvalue()
    return EXIT_OK, "".join(f"{n}: {_consistency_line(d)}\n" for n, d in reports)


def _series_from_results(path: str) -> list[ComparisonSeries]:
    """Series from a results file: ``{"series": [{"name", "labels", "ahp", "fuzzy"}, ...]}``."""
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except FileNotFoundError:
        raise InputError(f"{path}: file not found") from None
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"{path}: {exc}") from None
    try:
        return [ComparisonSeries(s["name"], s["labels"], s["ahp"], s["fuzzy"]) for s in doc["series"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{path}: malformed results file ({exc})") from None


def _is_results_file(path: str) -> bool:
    if not path.lower().endswith(".json"):
        return False
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, ValueError):
        return False
    return isinstance(doc, dict) and "series" in doc


def _corpus_series(source: str) -> list[ComparisonSeries]:
    data = corpus.load_corpus()
    if source == "published":
        out = [ds.published_series() for ds in data]
        out.append(corpus.published_decision_series())
        return out
    out = [ds.computed_series() for ds in data]
    rows = []
    for ds in data:
        if ds.expected_decision is None:
            continue
        s = ds.computed_series()
        rows.append((ds.name, max(s.ahp_values), max(s.fuzzy_values)))
    out.append(decision_series(rows, corpus.data.DECISION_SERIES_NAME))
    return out


def cmd_compare(args) -> tuple[int, str]:
    series: list[ComparisonSeries] = []
    if args.corpus:
        series += _corpus_series(args.trend_source)
    for path in args.inputs:
        if _is_results_file(path):
            series += _series_from_results(path)
        else:
            m = _read_matrix(path, args.strict)
            series.append(ComparisonSeries.from_vectors(_series_name(path), ahp_weights(m), fuzzy_scores(m)))
    if not series:
        raise InputError("compare needs at least one input (or --corpus)")
    try:
        summary = summarize(series, args.epsilon)
    except NoObservations as exc:
        raise InputError(str(exc)) from None
    if args.format == "json":
        return EXIT_OK, json.dumps(summary.to_dict(), indent=2) + "\n"
    if args.format == "csv":
        return EXIT_OK, summary.to_csv()
    return EXIT_OK, summary.to_text()


def cmd_corpus(args) -> tuple[int, str]:
    if args.corpus_command == "export":
        try:
            written = corpus.export_corpus(args.directory)
        except OSError as exc:
            raise IOError(f"{args.directory}: {exc.strerror or exc}") from exc
        return EXIT_OK, "".join(f"{p}\n" for p in written)
    tol = ToleranceConfig(
        weights=args.tol_weights,
        scores=args.tol_scores,
        lambda_max=args.tol_lambda,
        ci=args.tol_ci,
        cr=args.tol_cr,
        percent=args.tol_percent,
        cr_threshold=args.cr_threshold,
        epsilon=args.epsilon,
    )
    report = run_regression(tol, args.trend_source)
    text = report.to_json() if args.format == "json" else report.to_text()
    return (EXIT_OK if report.passed else EXIT_FAIL), text


def cmd_chart(args) -> tuple[int, str]:
    if args.corpus:
        name = args.corpus
        if name.lower() in ("decisions", corpus.data.DECISION_SERIES_NAME.lower()):
            series = _corpus_series(args.trend_source)[-1]
        else:
            try:
                ds = corpus.get_dataset(name)
            except KeyError as exc:
                raise InputError(str(exc.args[0])) from None
            series = ds.published_series() if args.trend_source == "published" else ds.computed_series()
    elif args.input:
        m = _read_matrix(args.input, args.strict)
        series = ComparisonSeries.from_vectors(_series_name(args.input), ahp_weights(m), fuzzy_scores(m))
    else:
        raise InputError("chart needs a matrix file or --corpus NAME")
    return EXIT_OK, render_chart(ChartSpec.from_series(series, width=args.width, height=args.height))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ahpcompare", description="AHP and max-min fuzzy MCDM over pairwise comparison matrices.")
    sub = p.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--strict", action="store_true", help="reject ratings outside the 1-9 scale")

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["json", "csv", "text"], default="text")

    cons = argparse.ArgumentParser(add_help=False)
    cons.add_argument("--cr-threshold", type=float, default=0.1)
    cons.add_argument("--ri", type=_ri_override, action="append", metavar="N=VALUE", help="random index for order N (repeatable)")

    trend_src = argparse.ArgumentParser(add_help=False)
    trend_src.add_argument(
        "--trend-source",
        choices=["published", "recomputed"],
        default="published",
        help="corpus curves: as printed, or recomputed from the rating matrices",
    )

    e = sub.add_parser("evaluate", parents=[common, fmt, cons], help="weights, fuzzy scores and decisions")
    e.add_argument("--method", choices=["ahp", "fuzzy", "both"], default="both")
    e.add_argument("inputs", nargs="+", metavar="MATRIX")
    e.set_defaults(func=cmd_evaluate)

    c = sub.add_parser("consistency", parents=[common, fmt, cons], help="nMax, CI, RI, CR")
    c.add_argument("--lambda-method", choices=["column-sum", "ratio-mean", "eigen"], default="column-sum")
    c.add_argument("inputs", nargs="+", metavar="MATRIX")
    c.set_defaults(func=cmd_consistency)

    cmp_ = sub.add_parser("compare", parents=[common, fmt, trend_src], help="classify AHP vs fuzzy curve movements")
    cmp_.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON)
    cmp_.add_argument("--corpus", action="store_true", help="include the nine embedded study series")
    cmp_.add_argument("inputs", nargs="*", metavar="INPUT", help="matrix files or a results JSON file")
    cmp_.set_defaults(func=cmd_compare)

    co = sub.add_parser("corpus", help="embedded study datasets")
    co_sub = co.add_subparsers(dest="corpus_command", required=True)
    run = co_sub.add_parser("run", parents=[common, trend_src], help="recompute and compare with the printed tables")
    run.add_argument("--format", choices=["json", "text"], default="text")
    tol = ToleranceConfig()
    run.add_argument("--tol-weights", type=float, default=tol.weights)
    run.add_argument("--tol-scores", type=float, default=tol.scores)
    run.add_argument("--tol-lambda", type=float, default=tol.lambda_max)
    run.add_argument("--tol-ci", type=float, default=tol.ci)
    run.add_argument("--tol-cr", type=float, default=tol.cr)
    run.add_argument("--tol-percent", type=float, default=tol.percent)
    run.add_argument("--cr-threshold", type=float, default=tol.cr_threshold)
    run.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON)
    run.set_defaults(func=cmd_corpus)
    ex = co_sub.add_parser("export", help="write <name>.csv and <name>.expected.json files")
    ex.add_argument("directory")
    ex.set_defaults(func=cmd_corpus, out=None)

    ch = sub.add_parser("chart", parents=[common, trend_src], help="SVG comparison chart")
    ch.add_argument("input", nargs="?", metavar="MATRIX")
    ch.add_argument("--corpus", metavar="NAME", help="embedded dataset name, or 'decisions'")
    ch.add_argument("--width", type=int, default=720)
    ch.add_argument("--height", type=int, default=420)
    ch.set_defaults(func=cmd_chart)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        status, text = args.func(args)
    except (InputError, SeriesTooShort) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    out = getattr(args, "out", None)
    if out:
        try:
            with open(out, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: {out}: {exc.strerror or exc}", file=sys.stderr)
            return EXIT_IO
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
