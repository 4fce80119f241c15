"""Streaming consumers for the enumerated tree sequence.

Collectors are mergeable aggregates: merging states built from disjoint
substreams must equal sequential visitation, which is what lets the corpus
runner aggregate across parallel workers. Processors are per-tree side
effects with no cross-tree state.
"""

import os
from abc import ABC, abstractmethod
from collections import Counter
from dataclasses import dataclass

from .enumeration import (
    DEFAULT_GUARD_THRESHOLD,
    STOP,
    enumerate_spanning_trees,
)
from .errors import ProcessorError
from .formats import to_dot
from .metrics import MetricKey, metric_value

DEFAULT_WITNESS_CAP = 16


class Collector(ABC):
    """Mergeable streaming aggregate over a tree sequence."""

    @abstractmethod
    def visit(self, tree, graph):
        """Fold one tree into the state; may return STOP to halt."""

    @abstractmethod
    def merge(self, other):
        """Combine with a state built from a disjoint later substream."""

    @abstractmethod
    def finalize(self):
        """Produce the report."""


class Processor(ABC):
    """Per-tree side effect; processing one tree never affects another."""

    @abstractmethod
    def process(self, tree, graph):
        ...


@dataclass(frozen=True)
class PipelineResult:
    reports: list
    summary: object


def run_pipeline(
    g,
    collectors,
    processors=(),
    *,
    limit=None,
    guard_threshold=DEFAULT_GUARD_THRESHOLD,
    skip_guard=False,
):
    """Single enumeration pass feeding every processor then every collector."""
    index = 0

    def visit(tree):
        nonlocal index
        stop = False
        for p in processors:
            try:
                p.process(tree, g)
            except Exception as exc:
                raise ProcessorError(index) from exc
        for c in collectors:
            if c.visit(tree, g) is STOP:
                stop = True
        index += 1
        if stop:
            return STOP

    summary = enumerate_spanning_trees(
        g, visit, limit=limit, guard_threshold=guard_threshold, skip_guard=skip_guard
    )
    return PipelineResult([c.finalize() for c in collectors], summary)


# --- standard collectors ----------------------------------------------------


class CountCollector(Collector):
    def __init__(self):
        self.count = 0

    def visit(self, tree, graph):
        self.count += 1

    def merge(self, other):
        out = CountCollector()
        out.count = self.count + other.count
        return out

    def finalize(self):
        return self.count


class FilterCollector(Collector):
    """Forwards only trees satisfying ``predicate(tree, graph)``."""

    def __init__(self, predicate, inner):
        self.predicate = predicate
        self.inner = inner

    def visit(self, tree, graph):
        if self.predicate(tree, graph):
            return self.inner.visit(tree, graph)

    def merge(self, other):
        return FilterCollector(self.predicate, self.inner.merge(other.inner))

    def finalize(self):
        return self.inner.finalize()


@dataclass(frozen=True)
class MinByReport:
    value: int
    count: int
    witnesses: tuple


class MinByCollector(Collector):
    """Tracks the minimum of a metric with first-encountered witnesses."""

    def __init__(self, metric, witness_cap=DEFAULT_WITNESS_CAP):
        if witness_cap < 1:
            raise ValueError("witness_cap must be >= 1")
        self.metric = MetricKey(metric)
        self.witness_cap = witness_cap
        self.value = None
        self.count = 0
        self.witnesses = []

    def visit(self, tree, graph):
        v = metric_value(self.metric, graph, tree)
        if self.value is None or v < self.value:
            self.value = v
            self.count = 1
            self.witnesses = [tuple(tree.edge_ids)]
        elif v == self.value:
            self.count += 1
            if len(self.witnesses) < self.witness_cap:
                self.witnesses.append(tuple(tree.edge_ids))

    def merge(self, other):
        out = MinByCollector(self.metric, self.witness_cap)
        first, second = self, other
        if other.value is not None and (self.value is None or other.value < self.value):
            first, second = other, self
        out.value = first.value
        out.count = first.count
        out.witnesses = list(first.witnesses)
        if second.value is not None and second.value == first.value:
            out.count += second.count
            out.witnesses = (out.witnesses + list(second.witnesses))[: self.witness_cap]
        return out

    def finalize(self):
        return MinByReport(self.value, self.count, tuple(self.witnesses))


class HistogramCollector(Collector):
    """Occurrence counts of an integer metric."""

    def __init__(self, metric):
        self.metric = MetricKey(metric)
        self.counts = Counter()

    def visit(self, tree, graph):
        self.counts[metric_value(self.metric, graph, tree)] += 1

    def merge(self, other):
        out = HistogramCollector(self.metric)
        out.counts = self.counts + other.counts
        return out

    def finalize(self):
        return dict(sorted(self.counts.items()))


class TopKCollector(Collector):
    """The k best (value, edge set) pairs; ties keep enumeration order."""

    def __init__(self, metric, k, direction="min"):
        if k < 1:
            raise ValueError("k must be >= 1")
        if direction not in ("min", "max"):
            raise ValueError("direction must be 'min' or 'max'")
        self.metric = MetricKey(metric)
        self.k = k
        self.direction = direction
        self.items = []  # (value, edge_ids), kept stably sorted

    def _better(self, a, b):
        return a < b if self.direction == "min" else a > b

    def visit(self, tree, graph):
        v = metric_value(self.metric, graph, tree)
        if len(self.items) == self.k and not self._better(v, self.items[-1][0]):
            return
        pos = len(self.items)
        while pos > 0 and self._better(v, self.items[pos - 1][0]):
            pos -= 1
        self.items.insert(pos, (v, tuple(tree.edge_ids)))
        del self.items[self.k :]

    def merge(self, other):
        out = TopKCollector(self.metric, self.k, self.direction)
        merged = []
        i = j = 0
        a, b = self.items, other.items
        while i < len(a) and j < len(b):
            if self._better(b[j][0], a[i][0]):
                merged.append(b[j])
                j += 1
            else:
                merged.append(a[i])
                i += 1
        merged.extend(a[i:])
        merged.extend(b[j:])
        out.items = merged[: self.k]
        return out

    def finalize(self):
        return list(self.items)


def collector_count():
    return CountCollector()


def collector_filter(predicate, inner):
    return FilterCollector(predicate, inner)


def collector_min_by(metric, witness_cap=DEFAULT_WITNESS_CAP):
    return MinByCollector(metric, witness_cap)


def collector_histogram(metric):
    return HistogramCollector(metric)


def collector_top_k(metric, k, direction="min"):
    return TopKCollector(metric, k, direction)


# --- standard processors ----------------------------------------------------


class PrettyPrintProcessor(Processor):
    """One line per tree: ``tree <index>: [e0 (0-1), ...]``."""

    def __init__(self, sink):
        self.sink = sink
        self.index = 0

    def process(self, tree, graph):
        parts = ", ".join(
            f"e{e} ({graph.edges[e][0]}-{graph.edges[e][1]})" for e in tree.edge_ids
        )
        self.sink.write(f"tree {self.index}: [{parts}]\n")
        self.index += 1


class DotEmitProcessor(Processor):
    """One DOT file per tree, tree edges highlighted, named tree_<index>.dot."""

    def __init__(self, directory, pad=6):
        self.directory = directory
        self.pad = pad
        self.index = 0
        os.makedirs(directory, exist_ok=True)

    def process(self, tree, graph):
        name = f"tree_{self.index:0{self.pad}d}.dot"
        with open(os.path.join(self.directory, name), "w") as fh:
            fh.write(to_dot(graph, highlight=tree.edge_ids))
        self.index += 1


def processor_pretty_print(sink):
    return PrettyPrintProcessor(sink)


def processor_dot_emit(directory):
    return DotEmitProcessor(directory)
