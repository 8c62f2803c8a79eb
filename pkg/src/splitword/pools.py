"""Graph pools for property checks: random split graphs and exhaustive
enumeration of split graphs up to isomorphism."""

from __future__ import annotations

import random
from collections import defaultdict
from itertools import combinations_with_replacement
from typing import Iterator

from .graph import Graph, find_isomorphism


def random_split_graph(
    n: int,
    rng: random.Random,
    clique_size: int | None = None,
    density: float | None = None,
    shuffle: bool = True,
) -> Graph:
    """A random graph with a clique of ``clique_size`` and ``n - clique_size`` independent vertices.

    Each independent vertex sees each clique vertex with probability
    ``density``; both default to uniform draws. Vertex ids are shuffled so the
    clique is not always a prefix.
    """
    k = rng.randint(1, n) if clique_size is None else clique_size
    q = rng.uniform(0.2, 0.8) if density is None else density
    edges = [(i, j) for i in range(k) for j in range(i + 1, k)]
    for a in range(k, n):
        edges += [(a, c) for c in range(k) if rng.random() < q]
    order = list(range(n))
    if shuffle:
        rng.shuffle(order)
    return Graph.from_edges(n, [(order[u], order[v]) for u, v in edges])


def _invariant(g: Graph) -> tuple:
    deg = sorted((g.degree(v), tuple(sorted(g.degree(u) for u in g.adj[v]))) for v in g.vertices)
    return g.edge_count(), tuple(deg)


def split_graphs(n: int) -> list[Graph]:
    """Every split graph on ``n`` vertices, one per isomorphism class.

    Candidates are a clique of size ``k`` plus a multiset of proper subsets
    of it as independent neighbourhoods; duplicates are removed by an
    invariant bucket followed by an isomorphism test.
    """
    if n == 0:
        return [Graph.from_edges(0, [])]
    buckets: dict[tuple, list[Graph]] = defaultdict(list)
    out: list[Graph] = []
    for k in range(1, n + 1):
        full = (1 << k) - 1
        subsets = [s for s in range(full)]  # proper subsets only: clique side stays maximal
        clique_edges = [(i, j) for i in range(k) for j in range(i + 1, k)]
        for combo in combinations_with_replacement(subsets, n - k):
            edges = list(clique_edges)
            for a, s in enumerate(combo, start=k):
                edges += [(a, c) for c in range(k) if s >> c & 1]
            g = Graph.from_edges(n, edges)
            key = _invariant(g)
            if any(find_isomorphism(g, h) is not None for h in buckets[key]):
                continue
            buckets[key].append(g)
            out.append(g)
    return out


def split_graphs_up_to(max_n: int) -> Iterator[Graph]:
    for n in range(1, max_n + 1):
        yield from split_graphs(n)
