"""Command-line surface.

Subcommands: count, enumerate, analyze, corpus, convert. Input format is
auto-detected (graph6 line, 'n m' edge list, or 0/1 incidence grid) and can
be forced with --from. Exit codes: 0 success, 1 bad input/usage, 2 guard
refusal, 3 internal error.
"""

import argparse
import json
import sys

from . import corpus as corpus_mod
from . import formats
from .enumeration import count_spanning_trees
from .errors import FormatError, GraphConstructionError, GuardTrippedError, TreeGardenError
from .metrics import MetricKey
from .pipeline import (
    collector_histogram,
    collector_min_by,
    collector_top_k,
    processor_dot_emit,
    processor_pretty_print,
    run_pipeline,
)

EXIT_OK = 0
EXIT_BAD_INPUT = 1
EXIT_GUARD = 2
EXIT_INTERNAL = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read_input(path):
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _detect_format(path, text):
    if path != "-":
        lowered = path.lower()
        for ext, fmt in ((".g6", "graph6"), (".graph6", "graph6"),
                         (".edges", "edgelist"), (".edgelist", "edgelist"),
                         (".inc", "incidence"), (".incidence", "incidence")):
            if lowered.endswith(ext):
                return fmt
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) == 1:
        try:
            formats.parse_graph6(lines[0])
            return "graph6"
        except FormatError:
            pass
    head = lines[0].split() if lines else []
    if len(head) == 2 and all(t.isdigit() for t in head):
        if len(lines) == int(head[1]) + 1:
            return "edgelist"
    if lines and all(t in ("0", "1") for ln in lines for t in ln.split()):
        return "incidence"
    return "edgelist"


def load_graph(path, fmt=None):
    """Read a graph from a file (or '-' for stdin), auto-detecting the format."""
    text = _read_input(path)
    fmt = fmt or _detect_format(path, text)
    if fmt == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise FormatError("graph6 input must contain exactly one line")
        return formats.parse_graph6(lines[0])
    if fmt == "incidence":
        return formats.parse_incidence(text)
    return formats.parse_edgelist(text)


def _parse_metrics(arg):
    keys = []
    for name in arg.split(","):
        name = name.strip()
        if not name:
            continue
        key = corpus_mod.SHORT_NAME_TO_METRIC.get(name)
        if key is None:
            raise UsageError(
                f"unknown metric {name!r}; choose from {', '.join(corpus_mod.SHORT_NAME_TO_METRIC)}"
            )
        keys.append(key)
    if not keys:
        raise UsageError("--metrics must name at least one metric")
    return keys


def _build_parser():
    parser = _Parser(prog="treegarden", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("input", help="input file, or - for stdin")
        p.add_argument("--from", dest="input_format",
                       choices=["graph6", "edgelist", "incidence"],
                       help="override input format auto-detection")

    p = sub.add_parser("count", help="print the exact spanning-tree count")
    add_input(p)

    p = sub.add_parser("enumerate", help="stream every spanning tree")
    add_input(p)
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--emit", choices=["edges", "dot"], default="edges")
    p.add_argument("--out", help="output directory (required for --emit dot)")

    p = sub.add_parser("analyze", help="aggregate per-tree metrics of one graph")
    add_input(p)
    p.add_argument("--metrics", required=True, help="comma list: fcb,diameter,tpl,mstci")
    p.add_argument("--collect", default="min", help="min | hist | topk:K")
    p.add_argument("--format", dest="out_format", choices=["json", "csv"], default="json")

    p = sub.add_parser("corpus", help="analyze a graph6 corpus")
    add_input(p)
    p.add_argument("--metrics", required=True)
    p.add_argument("--group-by", choices=["edges", "none"], default="none")
    p.add_argument("--out", required=True, help="records CSV path")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--skip-bad", action="store_true")
    p.add_argument("--threshold", type=int, default=None, help="guard threshold override")
    p.add_argument("--big", action="store_true", help="allow 8-node corpora")

    p = sub.add_parser("convert", help="rewrite a graph in another format")
    add_input(p)
    p.add_argument("--to", dest="to_format", required=True,
                   choices=["graph6", "incidence", "edgelist", "dot"])
    return parser


def _cmd_count(args):
    g = load_graph(args.input, args.input_format)
    print(count_spanning_trees(g))
    return EXIT_OK


def _cmd_enumerate(args):
    g = load_graph(args.input, args.input_format)
    threshold = corpus_mod.default_guard_threshold()
    if args.emit == "dot":
        if not args.out:
            raise UsageError("--emit dot requires --out DIR")
        processors = [processor_dot_emit(args.out)]
    else:
        processors = [processor_pretty_print(sys.stdout)]
    result = run_pipeline(g, [], processors, limit=args.limit, guard_threshold=threshold)
    print(
        f"visited {result.summary.trees_visited} trees"
        + (" (aborted)" if result.summary.aborted else ""),
        file=sys.stderr,
    )
    return EXIT_OK


def _make_collector(collect, metric):
    if collect == "min":
        return collector_min_by(metric)
    if collect == "hist":
        return collector_histogram(metric)
    if collect.startswith("topk:"):
        try:
            k = int(collect.split(":", 1)[1])
        except ValueError:
            raise UsageError("--collect topk:K needs an integer K") from None
        return collector_top_k(metric, k)
    raise UsageError(f"unknown --collect mode {collect!r}")


def _report_to_jsonable(collect, report):
    if collect == "hist":
        return {str(k): v for k, v in report.items()}
    if collect == "min":
        return {
            "min": report.value,
            "count": report.count,
            "witnesses": [list(w) for w in report.witnesses],
        }
    return [{"value": v, "edges": list(ids)} for v, ids in report]


def _report_to_csv(collect, metric_name, report, sink):
    if collect == "hist":
        sink.write("metric,value,count\n")
        for value, count in report.items():
            sink.write(f"{metric_name},{value},{count}\n")
    elif collect == "min":
        sink.write("metric,min,count,witness\n")
        witness = ";".join(str(e) for e in report.witnesses[0]) if report.witnesses else ""
        sink.write(f"{metric_name},{report.value},{report.count},{witness}\n")
    else:
        sink.write("metric,rank,value,edges\n")
        for rank, (value, ids) in enumerate(report):
            sink.write(f"{metric_name},{rank},{value},{';'.join(str(e) for e in ids)}\n")


def _cmd_analyze(args):
    g = load_graph(args.input, args.input_format)
    metrics = _parse_metrics(args.metrics)
    threshold = corpus_mod.default_guard_threshold()
    collectors = [_make_collector(args.collect, k) for k in metrics]
    result = run_pipeline(g, collectors, [], guard_threshold=threshold)
    named = list(zip(metrics, result.reports))
    if args.out_format == "json":
        if len(named) == 1:
            payload = _report_to_jsonable(args.collect, named[0][1])
        else:
            payload = {
                corpus_mod.METRIC_SHORT_NAMES[k]: _report_to_jsonable(args.collect, rep)
                for k, rep in named
            }
        print(json.dumps(payload))
    else:
        for k, rep in named:
            _report_to_csv(args.collect, corpus_mod.METRIC_SHORT_NAMES[k], rep, sys.stdout)
    return EXIT_OK


def _aggregate_path(out_path, metric_name):
    if out_path.endswith(".csv"):
        return f"{out_path[:-4]}.{metric_name}.agg.csv"
    return f"{out_path}.{metric_name}.agg.csv"


def _cmd_corpus(args):
    metrics = _parse_metrics(args.metrics)
    threshold = args.threshold if args.threshold is not None else corpus_mod.default_guard_threshold()
    if args.input == "-":
        lines = sys.stdin.read().splitlines()
    else:
        with open(args.input) as fh:
            lines = fh.read().splitlines()
    records = corpus_mod.run_corpus(
        lines,
        metrics,
        jobs=args.jobs,
        skip_bad=args.skip_bad,
        guard_threshold=threshold,
        big=args.big,
    )
    with open(args.out, "w") as fh:
        corpus_mod.write_csv(records, fh, metrics)
    for key in metrics:
        table = corpus_mod.aggregate(records, key, group_by=args.group_by)
        with open(_aggregate_path(args.out, corpus_mod.METRIC_SHORT_NAMES[key]), "w") as fh:
            corpus_mod.write_aggregate_csv(table, fh)
    skipped = sum(1 for r in records if r.skipped)
    print(f"analyzed {len(records)} graphs ({skipped} skipped by guard) -> {args.out}",
          file=sys.stderr)
    return EXIT_OK


def _cmd_convert(args):
    g = load_graph(args.input, args.input_format)
    if args.to_format == "graph6":
        sys.stdout.write(formats.encode_graph6(g) + "\n")
    elif args.to_format == "incidence":
        sys.stdout.write(formats.write_incidence(g))
    elif args.to_format == "edgelist":
        sys.stdout.write(formats.write_edgelist(g))
    else:
        sys.stdout.write(formats.to_dot(g))
    return EXIT_OK


_COMMANDS = {
    "count": _cmd_count,
    "enumerate": _cmd_enumerate,
    "analyze": _cmd_analyze,
    "corpus": _cmd_corpus,
    "convert": _cmd_convert,
}


def cli_main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except GuardTrippedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (FormatError, GraphConstructionError, TreeGardenError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def main():
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
