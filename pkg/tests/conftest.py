import pathlib
import random

import pytest

from treegarden import new_graph, tree_from_edges
from treegarden.formats import parse_graph6

DATA = pathlib.Path(__file__).parent / "data"

# five-node fixture used throughout: edges e0..e4
FIXTURE_EDGES = [(0, 1), (2, 3), (4, 0), (0, 3), (1, 3)]
FIXTURE_TREE_IDS = (0, 1, 2, 4)

K4_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def complete_graph(n):
    return new_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n):
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n):
    return new_graph(n, [(i, i + 1) for i in range(n - 1)])


def load_corpus(n):
    path = DATA / f"connected_n{n}.g6"
    return [parse_graph6(line) for line in path.read_text().splitlines()]


def corpus_lines(name):
    return (DATA / name).read_text().splitlines()


def random_connected_graph(rng, n, extra_edges=None):
    """Random connected simple graph: a random spanning tree plus extras."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    perm = list(range(n))
    rng.shuffle(perm)
    edges = set()
    for k in range(1, n):
        a = perm[k]
        b = perm[rng.randrange(k)]
        edges.add((min(a, b), max(a, b)))
    if extra_edges is None:
        extra_edges = rng.randrange(0, n)
    candidates = [p for p in pairs if p not in edges]
    rng.shuffle(candidates)
    edges.update(candidates[:extra_edges])
    edge_list = sorted(edges)
    rng.shuffle(edge_list)
    return new_graph(n, edge_list)


@pytest.fixture
def fixture_graph():
    return new_graph(5, FIXTURE_EDGES)


@pytest.fixture
def fixture_tree(fixture_graph):
    return tree_from_edges(fixture_graph, FIXTURE_TREE_IDS)


@pytest.fixture
def k4():
    return new_graph(4, K4_EDGES)


@pytest.fixture
def rng():
    return random.Random(1729)
