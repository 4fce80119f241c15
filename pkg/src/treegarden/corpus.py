"""Batch analysis over graph6 corpora: per-graph records, aggregation,
CSV/JSON emission, and the parallel corpus runner.

Parallel runs are across graphs (one enumerator per graph); records are
collected in input order, so a --jobs N run writes byte-identical files to
the sequential one.
"""

import json
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .enumeration import DEFAULT_GUARD_THRESHOLD, count_spanning_trees, guard
from .errors import FormatError, TooLargeError, TreeGardenError
from .formats import parse_graph6
from .metrics import MetricKey
from .pipeline import collector_count, collector_min_by, run_pipeline

#: short metric names used in CLI arguments and CSV column headers
METRIC_SHORT_NAMES = {
    MetricKey.FCB_WEIGHT: "fcb",
    MetricKey.DIAMETER: "diameter",
    MetricKey.TOTAL_PATH_LENGTH: "tpl",
    MetricKey.INTERSECTION_NUMBER: "mstci",
}
SHORT_NAME_TO_METRIC = {v: k for k, v in METRIC_SHORT_NAMES.items()}

ALL_METRICS = tuple(MetricKey)

DEFAULT_CORPUS_MAX_VERTICES = 7
BIG_CORPUS_MAX_VERTICES = 8

GUARD_ENV_VAR = "TG_THRESHOLD"


def default_guard_threshold():
    """Guard threshold, honoring the TG_THRESHOLD environment override."""
    raw = os.environ.get(GUARD_ENV_VAR)
    if raw:
        return int(raw)
    return DEFAULT_GUARD_THRESHOLD


@dataclass
class CorpusRecord:
    graph_index: int
    graph6: str
    n: int
    m: int
    tree_count: int
    mins: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    skipped: bool = False


@dataclass
class AggregateTable:
    group_by: str
    statistic: str
    groups: dict  # group key -> Counter of statistic values
    means: dict  # group key -> Fraction

    @property
    def total_mass(self):
        return sum(sum(c.values()) for c in self.groups.values())


class CorpusReadError(TreeGardenError):
    def __init__(self, line_number, cause):
        super().__init__(f"line {line_number}: {cause}")
        self.line_number = line_number


def iter_graph6_records(source, *, skip_bad=False):
    """Yield (index, line, Graph) per non-blank graph6 line of ``source``."""
    index = 0
    for line_number, raw in enumerate(source, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            g = parse_graph6(line)
        except FormatError as exc:
            if skip_bad:
                continue
            raise CorpusReadError(line_number, exc) from exc
        yield index, line, g
        index += 1


def read_graph6_stream(source, *, skip_bad=False):
    """Yield (index, Graph) per graph6 line; see iter_graph6_records."""
    for index, _, g in iter_graph6_records(source, skip_bad=skip_bad):
        yield index, g


def analyze_graph(
    g,
    metrics=ALL_METRICS,
    *,
    guard_threshold=DEFAULT_GUARD_THRESHOLD,
    graph6="",
    graph_index=0,
    witness_cap=16,
):
    """One enumeration pass minimizing each requested metric.

    Guard refusals come back as a skipped record carrying the refusing
    count, not as an error.
    """
    metrics = [MetricKey(k) for k in metrics]
    decision = guard(g, guard_threshold)
    record = CorpusRecord(
        graph_index=graph_index,
        graph6=graph6,
        n=g.n,
        m=g.m,
        tree_count=decision.count,
    )
    if not decision.proceed:
        record.skipped = True
        return record
    collectors = [collector_min_by(k, witness_cap=witness_cap) for k in metrics]
    collectors.append(collector_count())
    result = run_pipeline(g, collectors, [], skip_guard=True)
    visited = result.reports[-1]
    if visited != decision.count:
        raise TreeGardenError(
            f"enumeration visited {visited} trees but the cofactor count is {decision.count}"
        )
    for key, report in zip(metrics, result.reports):
        record.mins[key] = report.value
        record.witnesses[key] = report.witnesses[0] if report.witnesses else ()
    return record


def aggregate(records, statistic, group_by="none"):
    """Histogram of a per-graph statistic, grouped by edge count or globally.

    ``statistic`` is a MetricKey or the string "tree_count". Skipped records
    carry no metric values and are excluded.
    """
    if group_by not in ("none", "edges"):
        raise ValueError("group_by must be 'none' or 'edges'")
    groups = {}
    for rec in records:
        if rec.skipped:
            continue
        if statistic == "tree_count":
            value = rec.tree_count
        else:
            value = rec.mins[MetricKey(statistic)]
        key = rec.m if group_by == "edges" else "all"
        groups.setdefault(key, Counter())[value] += 1
    ordered = dict(sorted(groups.items(), key=lambda kv: (str(type(kv[0])), kv[0])))
    means = {
        key: Fraction(sum(v * c for v, c in counter.items()), sum(counter.values()))
        for key, counter in ordered.items()
    }
    stat_name = statistic if statistic == "tree_count" else METRIC_SHORT_NAMES[MetricKey(statistic)]
    return AggregateTable(group_by, stat_name, ordered, means)


def _record_columns(metrics):
    cols = ["index", "graph6", "n", "m", "tree_count"]
    cols += [f"min_{METRIC_SHORT_NAMES[k]}" for k in metrics]
    cols += [f"witness_{METRIC_SHORT_NAMES[k]}" for k in metrics]
    return cols


def write_csv(records, sink, metrics=ALL_METRICS):
    """Per-graph records as CSV; witness edge ids are semicolon-separated."""
    metrics = [MetricKey(k) for k in metrics]
    sink.write(",".join(_record_columns(metrics)) + "\n")
    for rec in records:
        row = [str(rec.graph_index), rec.graph6, str(rec.n), str(rec.m), str(rec.tree_count)]
        for k in metrics:
            row.append("" if rec.skipped else str(rec.mins[k]))
        for k in metrics:
            row.append("" if rec.skipped else ";".join(str(e) for e in rec.witnesses[k]))
        sink.write(",".join(row) + "\n")


def write_aggregate_csv(table, sink):
    """Aggregate table as CSV: group_key,value,count,mean_exact,mean_decimal."""
    sink.write("group_key,value,count,mean_exact,mean_decimal\n")
    for key, counter in table.groups.items():
        mean = table.means[key]
        for value, count in sorted(counter.items()):
            sink.write(
                f"{key},{value},{count},{mean.numerator}/{mean.denominator},{float(mean):.6f}\n"
            )


def record_to_dict(rec, metrics=ALL_METRICS):
    metrics = [MetricKey(k) for k in metrics]
    out = {
        "index": rec.graph_index,
        "graph6": rec.graph6,
        "n": rec.n,
        "m": rec.m,
        "tree_count": rec.tree_count,
        "skipped": rec.skipped,
    }
    for k in metrics:
        short = METRIC_SHORT_NAMES[k]
        out[f"min_{short}"] = None if rec.skipped else rec.mins[k]
        out[f"witness_{short}"] = None if rec.skipped else list(rec.witnesses[k])
    return out


def write_json(records, sink, metrics=ALL_METRICS):
    json.dump([record_to_dict(r, metrics) for r in records], sink, indent=2)
    sink.write("\n")


def aggregate_to_dict(table):
    return {
        "group_by": table.group_by,
        "statistic": table.statistic,
        "groups": {
            str(key): {
                "histogram": {str(v): c for v, c in sorted(counter.items())},
                "mean_exact": f"{table.means[key].numerator}/{table.means[key].denominator}",
                "mean_decimal": float(table.means[key]),
            }
            for key, counter in table.groups.items()
        },
    }


def _analyze_task(args):
    index, line, metric_values, threshold, witness_cap = args
    g = parse_graph6(line)
    return analyze_graph(
        g,
        [MetricKey(v) for v in metric_values],
        guard_threshold=threshold,
        graph6=line,
        graph_index=index,
        witness_cap=witness_cap,
    )


def run_corpus(
    source,
    metrics=ALL_METRICS,
    *,
    jobs=1,
    skip_bad=False,
    guard_threshold=None,
    big=False,
    witness_cap=16,
):
    """Analyze every graph of a graph6 stream; returns records in input order."""
    if guard_threshold is None:
        guard_threshold = default_guard_threshold()
    metrics = [MetricKey(k) for k in metrics]
    max_n = BIG_CORPUS_MAX_VERTICES if big else DEFAULT_CORPUS_MAX_VERTICES
    tasks = []
    for index, line, g in iter_graph6_records(source, skip_bad=skip_bad):
        if g.n > max_n:
            hint = "" if big else " (rerun with --big to allow 8-node corpora)"
            raise TooLargeError(
                f"corpus graph {index} has {g.n} vertices, above the {max_n}-vertex cap{hint}"
            )
        tasks.append((index, line, [k.value for k in metrics], guard_threshold, witness_cap))
    if jobs <= 1 or len(tasks) < 2:
        return [_analyze_task(t) for t in tasks]
    chunk = max(1, len(tasks) // (jobs * 8))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_analyze_task, tasks, chunksize=chunk))
