#!/usr/bin/env python3
"""Regenerate the bundled graph6 corpora under tests/data/.

Connected non-isomorphic graphs on 1..7 vertices come from the networkx
atlas; the 8-vertex file is a small deterministic random sample (the full
8-vertex census needs an external generator and is not bundled).
"""

import pathlib
import random

import networkx as nx

DATA = pathlib.Path(__file__).resolve().parent.parent / "tests" / "data"

EXPECTED_CONNECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


def g6_line(graph):
    return nx.to_graph6_bytes(graph, header=False).decode().strip()


def main():
    DATA.mkdir(parents=True, exist_ok=True)
    atlas = nx.graph_atlas_g()
    for n, expected in EXPECTED_CONNECTED.items():
        chosen = [g for g in atlas if g.number_of_nodes() == n and nx.is_connected(g)]
        assert len(chosen) == expected, (n, len(chosen))
        path = DATA / f"connected_n{n}.g6"
        path.write_text("".join(g6_line(g) + "\n" for g in chosen))
        print(path, len(chosen))

    rng = random.Random(20240817)
    sample = []
    seen = set()
    while len(sample) < 20:
        p = rng.uniform(0.25, 0.9)
        g = nx.gnp_random_graph(8, p, seed=rng.randrange(2**31))
        if not nx.is_connected(g):
            continue
        line = g6_line(g)
        if line in seen:
            continue
        seen.add(line)
        sample.append(line)
    path = DATA / "sample_n8.g6"
    path.write_text("".join(line + "\n" for line in sample))
    print(path, len(sample))


if __name__ == "__main__":
    main()
