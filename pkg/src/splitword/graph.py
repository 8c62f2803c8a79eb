"""Simple undirected graphs, the edge-list format, and split-graph recognition."""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence


class GraphFormatError(ValueError):
    """Raised when an edge-list document cannot be parsed."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the frozenset of neighbours of ``v``; ``names[v]`` is the
    external token used for input and output.
    """

    n: int
    adj: tuple[frozenset[int], ...]
    names: tuple[str, ...]

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        names: Sequence[str] | None = None,
    ) -> Graph:
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop on vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        if names is None:
            names = [str(v) for v in range(n)]
        if len(names) != n:
            raise ValueError("names must have one entry per vertex")
        if len(set(names)) != n:
            raise ValueError("vertex names must be distinct")
        return cls(n, tuple(frozenset(s) for s in nbrs), tuple(str(x) for x in names))

    @property
    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def is_complete(self) -> bool:
        return all(len(s) == self.n - 1 for s in self.adj)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"no vertex named {name!r}") from None

    def neighbours_by_name(self, name: str) -> set[str]:
        return {self.names[u] for u in self.adj[self.index(name)]}

    def relabel(self, order: Sequence[int]) -> Graph:
        """Return the graph whose vertex ``i`` is this graph's vertex ``order[i]``."""
        pos = {old: new for new, old in enumerate(order)}
        if sorted(pos) != list(range(self.n)):
            raise ValueError("order must be a permutation of the vertices")
        edges = [(pos[u], pos[v]) for u, v in self.edges()]
        return Graph.from_edges(self.n, edges, [self.names[v] for v in order])

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges()], "names": list(self.names)}

    def to_edge_list(self) -> str:
        """Serialize as an edge-list document that :func:`parse_graph` reads back."""
        lines = [f"# n {self.n}"]
        lines += [f"{self.names[u]} {self.names[v]}" for u, v in self.edges()]
        lines += [self.names[v] for v in range(self.n) if not self.adj[v]]
        return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    """Parse an edge-list document.

    Each non-blank line is ``u v`` (an edge) or a single token (an isolated
    vertex). ``# n <count>`` fixes the vertex count, padding with vertices
    named by their id; any other ``#`` line is a comment. Vertex ids follow
    first appearance.
    """
    ids: dict[str, int] = {}
    edges: set[tuple[int, int]] = set()
    declared_n: int | None = None
    header_line = 0

    def vid(token: str) -> int:
        if token not in ids:
            ids[token] = len(ids)
        return ids[token]

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if parts and parts[0] == "n":
                if len(parts) != 2 or not parts[1].isdigit():
                    raise GraphFormatError(lineno, f"malformed header {line!r}")
                if declared_n is not None:
                    raise GraphFormatError(lineno, "duplicate '# n' header")
                declared_n = int(parts[1])
                header_line = lineno
            continue
        tokens = line.split()
        if len(tokens) == 1:
            vid(tokens[0])
        elif len(tokens) == 2:
            u, v = tokens
            if u == v:
                raise GraphFormatError(lineno, f"self-loop on {u!r}")
            a, b = vid(u), vid(v)
            edges.add((min(a, b), max(a, b)))
        else:
            raise GraphFormatError(lineno, f"expected 'u v', got {line!r}")

    names = list(ids)
    if declared_n is not None:
        if declared_n < len(names):
            raise GraphFormatError(
                header_line, f"header declares {declared_n} vertices but {len(names)} are named"
            )
        taken = set(names)
        nxt = 0
        while len(names) < declared_n:
            # padding names are the would-be ids, skipping tokens already in use
            while str(nxt) in taken:
                nxt += 1
            names.append(str(nxt))
            taken.add(str(nxt))
            nxt += 1
    return Graph.from_edges(len(names), sorted(edges), names)


def graph_from_json(data: dict) -> Graph:
    return Graph.from_edges(data["n"], [tuple(e) for e in data["edges"]], data.get("names"))


def dumps(g: Graph) -> str:
    return json.dumps(g.to_json())


@dataclass(frozen=True)
class SplitPartition:
    clique: tuple[int, ...]
    independent: tuple[int, ...]

    def to_json(self, g: Graph) -> dict:
        return {
            "clique": [g.names[v] for v in self.clique],
            "independent": [g.names[v] for v in self.independent],
        }


def _check_partition(g: Graph, clique: Iterable[int], independent: Iterable[int]) -> None:
    c, i = set(clique), set(independent)
    if c & i or c | i != set(g.vertices):
        raise ValueError("clique and independent sets must partition the vertex set")
    for u, v in combinations(sorted(c), 2):
        if not g.has_edge(u, v):
            raise ValueError(f"clique side is not a clique: {u} and {v} are non-adjacent")
    for u, v in combinations(sorted(i), 2):
        if g.has_edge(u, v):
            raise ValueError(f"independent side is not independent: {u} and {v} are adjacent")


def normalize_partition(g: Graph, p: SplitPartition) -> SplitPartition:
    """Grow the clique side until no independent vertex sees all of it.

    Raises ``ValueError`` if ``p`` is not a clique/independent-set partition.
    """
    _check_partition(g, p.clique, p.independent)
    c, i = set(p.clique), set(p.independent)
    while True:
        full = [v for v in sorted(i) if c <= g.adj[v]]
        if not full:
            break
        c.add(full[0])
        i.remove(full[0])
    return SplitPartition(tuple(sorted(c)), tuple(sorted(i)))


def find_split_partition(g: Graph) -> SplitPartition | None:
    """Return the canonical split partition of ``g``, or ``None`` if ``g`` is not split.

    Recognition uses the splittance test on the degree sequence: with
    degrees sorted descending and ``m = max{i : d_i >= i - 1}``, the graph is
    split iff ``sum(d[:m]) == m(m-1) + sum(d[m:])``. The canonical partition
    is the lexicographically least maximum clique whose complement is
    independent.
    """
    if g.n == 0:
        return SplitPartition((), ())
    order = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    deg = [g.degree(v) for v in order]
    m = max(i for i in range(1, g.n + 1) if deg[i - 1] >= i - 1)
    if sum(deg[:m]) != m * (m - 1) + sum(deg[m:]):
        return None
    p = normalize_partition(g, SplitPartition(tuple(order[:m]), tuple(order[m:])))
    # Other maximal partitions differ by swapping one clique vertex c for an
    # independent vertex seeing exactly C - c, when c has no other independent neighbour.
    best = p.clique
    cset = set(p.clique)
    for a in p.independent:
        if len(g.adj[a]) != len(cset) - 1:
            continue
        (c,) = cset - g.adj[a]
        if g.adj[c] & set(p.independent) <= {a}:
            cand = tuple(sorted((cset - {c}) | {a}))
            best = min(best, cand)
    if best == p.clique:
        return p
    return SplitPartition(best, tuple(v for v in g.vertices if v not in set(best)))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Return ``g[vertices]`` and the map from new ids to old ids."""
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} not in graph")
    pos = {v: i for i, v in enumerate(keep)}
    edges = [(pos[u], pos[v]) for u in keep for v in g.adj[u] if v in pos and u < v]
    return Graph.from_edges(len(keep), edges, [g.names[v] for v in keep]), keep


def _degree_signature(g: Graph, v: int) -> tuple[int, tuple[int, ...]]:
    return g.degree(v), tuple(sorted(g.degree(u) for u in g.adj[v]))


def find_isomorphism(g: Graph, h: Graph) -> list[int] | None:
    """Return ``f`` with ``f[v]`` the image in ``h`` of vertex ``v`` of ``g``, or ``None``."""
    if g.n != h.n or g.edge_count() != h.edge_count():
        return None
    sig_g = [_degree_signature(g, v) for v in g.vertices]
    sig_h = [_degree_signature(h, v) for v in h.vertices]
    if sorted(sig_g) != sorted(sig_h):
        return None
    # most constrained first: high degree, then neighbours of mapped vertices
    order: list[int] = []
    seen: set[int] = set()
    for start in sorted(g.vertices, key=lambda v: (-g.degree(v), v)):
        if start in seen:
            continue
        frontier = [start]
        seen.add(start)
        while frontier:
            v = frontier.pop(0)
            order.append(v)
            for u in sorted(g.adj[v], key=lambda u: (-g.degree(u), u)):
                if u not in seen:
                    seen.add(u)
                    frontier.append(u)

    f = [-1] * g.n
    used = [False] * h.n

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in h.vertices:
            if used[w] or sig_h[w] != sig_g[v]:
                continue
            if any((f[u] in h.adj[w]) != (u in g.adj[v]) for u in order[:i]):
                continue
            f[v], used[w] = w, True
            if extend(i + 1):
                return True
            f[v], used[w] = -1, False
        return False

    return list(f) if extend(0) else None


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None
