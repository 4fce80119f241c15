"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines as they complete.
"""

import io
import random
import time
from fractions import Fraction
from itertools import combinations

import pytest

from treegarden import (
    MetricKey,
    UnionFind,
    bridges,
    brute_force_spanning_trees,
    collector_count,
    collector_histogram,
    collector_min_by,
    count_spanning_trees,
    enumerate_spanning_trees,
    fcb_weight,
    new_graph,
    run_pipeline,
    tree_diameter,
    tree_from_edges,
    tree_report,
)
from treegarden.cli import cli_main
from treegarden.corpus import run_corpus
from treegarden.errors import TooLargeError
from treegarden.formats import encode_graph6, parse_graph6, parse_incidence, write_incidence

from conftest import (
    DATA,
    FIXTURE_EDGES,
    FIXTURE_TREE_IDS,
    complete_graph,
    corpus_lines,
    load_corpus,
    random_connected_graph,
)


class _Criterion:
    def __init__(self, number, label):
        self.number = number
        self.label = label

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        verdict = "PASS" if exc_type is None else "FAIL"
        print(f"criterion {self.number} ({self.label}): {verdict}")
        return False


def enumerated_ids(g):
    trees = []
    enumerate_spanning_trees(g, lambda view: trees.append(view.edge_ids))
    return trees


def test_criterion_1_oracle_equivalence_exhaustive():
    with _Criterion(1, "oracle equivalence, n <= 6 exhaustive"):
        start = time.perf_counter()
        total = 0
        for n in range(1, 7):
            for g in load_corpus(n):
                trees = enumerated_ids(g)
                assert len(set(trees)) == len(trees), "duplicate tree emitted"
                assert sorted(trees) == brute_force_spanning_trees(g)
                assert count_spanning_trees(g) == len(trees)
                total += 1
        elapsed = time.perf_counter() - start
        assert total == 143
        assert elapsed < 60.0, f"corpus sweep took {elapsed:.1f}s"


def test_criterion_2_cayley_law():
    with _Criterion(2, "Cayley law K3..K9"):
        expected = {3: 3, 4: 16, 5: 125, 6: 1296, 7: 16807, 8: 262144}
        for n, count in expected.items():
            result = run_pipeline(complete_graph(n), [collector_count()], [])
            assert result.reports == [count]
            assert result.summary.trees_visited == count
        assert count_spanning_trees(complete_graph(9)) == 4782969


def test_criterion_3_k8_histogram_performance():
    with _Criterion(3, "K8 fcb histogram under 10s"):
        g = complete_graph(8)
        start = time.perf_counter()
        result = run_pipeline(g, [collector_histogram(MetricKey.FCB_WEIGHT)], [])
        elapsed = time.perf_counter() - start
        assert sum(result.reports[0].values()) == 262144
        assert elapsed < 10.0, f"K8 histogram took {elapsed:.1f}s"


def _brute_min_fcb(g):
    best = None
    for subset in combinations(range(g.m), g.n - 1):
        uf = UnionFind(g.n)
        if all(uf.union(*g.edges[e]) for e in subset) and uf.components == 1:
            w = fcb_weight(g, tree_from_edges(g, subset))
            best = w if best is None else min(best, w)
    return best


def test_criterion_4_corpus_analog():
    with _Criterion(4, "6-vertex corpus sweep plus 8-node sample"):
        lines = corpus_lines("connected_n6.g6")
        records = run_corpus(lines, [MetricKey.FCB_WEIGHT])
        assert len(records) == 112
        assert not any(r.skipped for r in records)
        groups = {r.m for r in records}
        assert len(groups) == 11
        for rec in records:
            g = parse_graph6(rec.graph6)
            assert rec.mins[MetricKey.FCB_WEIGHT] == _brute_min_fcb(g)

        sample = corpus_lines("sample_n8.g6")
        with pytest.raises(TooLargeError):
            run_corpus(sample, [MetricKey.FCB_WEIGHT])
        big = run_corpus(sample, [MetricKey.FCB_WEIGHT], big=True)
        assert len(big) == 20
        assert not any(r.skipped for r in big)


def test_criterion_5_fixture_suite():
    with _Criterion(5, "five-node fixture"):
        g = new_graph(5, FIXTURE_EDGES)
        trees = enumerated_ids(g)
        assert len(trees) == 3
        report = tree_report(g, tree_from_edges(g, FIXTURE_TREE_IDS))
        assert (
            report.fcb_weight,
            report.diameter,
            report.total_path_length,
            report.intersection_number,
        ) == (3, 4, 20, 0)
        min_diam = run_pipeline(g, [collector_min_by(MetricKey.DIAMETER)], []).reports[0]
        assert min_diam.value == 3
        assert min_diam.count == 2


def test_criterion_6_determinism_and_merge_law(tmp_path):
    with _Criterion(6, "parallel determinism and merge law"):
        outputs = []
        for jobs in ("1", "4"):
            out = tmp_path / f"run{jobs}.csv"
            code = cli_main([
                "corpus", str(DATA / "connected_n5.g6"),
                "--metrics", "fcb,diameter,tpl,mstci",
                "--group-by", "edges", "--out", str(out), "--jobs", jobs,
            ])
            assert code == 0
            outputs.append(out.read_bytes())
        assert outputs[0] == outputs[1]

        g = complete_graph(5)
        trees = []
        enumerate_spanning_trees(g, lambda view: trees.append(view.freeze()))
        factories = [
            collector_count,
            lambda: collector_histogram(MetricKey.FCB_WEIGHT),
            lambda: collector_min_by(MetricKey.DIAMETER, witness_cap=4),
        ]

        def replay(factory, chunk):
            c = factory()
            for t in chunk:
                c.visit(t, g)
            return c

        rng = random.Random(20240817)
        for _ in range(100):
            i = rng.randrange(len(trees) + 1)
            j = rng.randrange(i, len(trees) + 1)
            parts = [trees[:i], trees[i:j], trees[j:]]
            for factory in factories:
                sequential = replay(factory, trees).finalize()
                a, b, c = (replay(factory, p) for p in parts)
                assert a.merge(b).merge(c).finalize() == sequential


def test_criterion_7_format_roundtrips():
    with _Criterion(7, "format round-trips"):
        for n in range(1, 7):
            for line in corpus_lines(f"connected_n{n}.g6"):
                g = parse_graph6(line)
                assert encode_graph6(g) == line
        assert parse_graph6("D~{") == complete_graph(5)
        k1 = parse_graph6("@")
        assert k1.n == 1 and k1.m == 0

        fixture = new_graph(5, FIXTURE_EDGES)
        back = parse_incidence(write_incidence(fixture))
        assert back == fixture
        assert back.edges == fixture.normalized_edges()
        for g in load_corpus(5):
            again = parse_incidence(write_incidence(g))
            assert again == g
            assert again.edges == g.normalized_edges()


def _fraction_det(M):
    M = [[Fraction(x) for x in row] for row in M]
    size = len(M)
    det = Fraction(1)
    for k in range(size):
        pivot = next((i for i in range(k, size) if M[i][k]), None)
        if pivot is None:
            return 0
        if pivot != k:
            M[k], M[pivot] = M[pivot], M[k]
            det = -det
        det *= M[k][k]
        for i in range(k + 1, size):
            f = M[i][k] / M[k][k]
            for j in range(k, size):
                M[i][j] -= f * M[k][j]
    return int(det)


def _laplacian_minor_det(g, drop):
    from treegarden import laplacian

    L = laplacian(g)
    minor = [
        [L[i][j] for j in range(g.n) if j != drop]
        for i in range(g.n)
        if i != drop
    ]
    return _fraction_det(minor) if minor else 1


def _count_multigraph(n, edges):
    total = 0
    for subset in combinations(range(len(edges)), n - 1):
        uf = UnionFind(n)
        if all(uf.union(*edges[e]) for e in subset) and uf.components == 1:
            total += 1
    return total


def test_criterion_8_kirchhoff_internals():
    with _Criterion(8, "cofactor invariance and deletion-contraction"):
        rng = random.Random(4782969)
        for _ in range(50):
            g = random_connected_graph(rng, rng.randrange(2, 8))
            reference = count_spanning_trees(g)
            for drop in range(g.n):
                assert count_spanning_trees(g, drop=drop) == reference
                assert _laplacian_minor_det(g, drop) == reference

        checked = 0
        while checked < 50:
            g = random_connected_graph(rng, rng.randrange(3, 7))
            if g.m > 10:
                continue
            non_bridges = [e for e in range(g.m) if e not in bridges(g)]
            if not non_bridges:
                continue
            e = rng.choice(non_bridges)
            u, v = g.edges[e]
            deleted = [g.edges[j] for j in range(g.m) if j != e]
            relabel = [x if x != v else u for x in range(g.n)]
            compact = {x: i for i, x in enumerate(sorted(set(relabel)))}
            contracted = []
            for j in range(g.m):
                if j == e:
                    continue
                a, b = (compact[relabel[x]] for x in g.edges[j])
                if a != b:
                    contracted.append((a, b))
            expected = _count_multigraph(g.n, deleted) + _count_multigraph(
                g.n - 1, contracted
            )
            assert count_spanning_trees(g) == expected
            checked += 1
