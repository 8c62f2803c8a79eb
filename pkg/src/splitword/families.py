"""Named split graphs: the permutation-graph obstructions B1-B4 and the
circle-graph obstruction family, including its word-representable part C3.

Every generator returns the graph together with its clique/independent
partition. Vertices carry the conventional names (``c1``, ``a2``, ``b``,
``c`` for a sun's centre, ``0`` for the apex of F0); graphs usually drawn
without labels use ``v1, v2, ...`` in the node order of their drawing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, SplitPartition, normalize_partition

# Graphs without a neighbourhood formula, given edge by edge. Node numbers
# follow the node order of each graph's usual drawing.

# B1 (net): triangle v3 v4 v5 with pendants v1@v3, v2@v4, v6@v5.
B1_EDGES = [("v1", "v3"), ("v2", "v4"), ("v3", "v5"), ("v4", "v5"), ("v5", "v6"), ("v3", "v4")]

# B2 (tent, 3-sun): triangle v2 v4 v5; v1 sees v2 v4, v3 sees v2 v5, v6 sees v4 v5.
B2_EDGES = [
    ("v1", "v2"), ("v2", "v3"), ("v1", "v4"), ("v2", "v4"), ("v2", "v5"),
    ("v3", "v5"), ("v4", "v5"), ("v4", "v6"), ("v5", "v6"),
]

# B3: triangle v3 v4 v5; v1 sees v3, v2 sees v4, v6 sees v3 v5, v7 sees v4 v5.
B3_EDGES = [
    ("v1", "v3"), ("v2", "v4"), ("v3", "v5"), ("v4", "v5"), ("v5", "v6"),
    ("v3", "v4"), ("v3", "v6"), ("v5", "v7"), ("v4", "v7"),
]

# B4: clique c1..c4 (drawing nodes 1-4); names follow the labelled drawing of F0,
# where nodes 5, 6, 7 are a2, a1, a3.
B4_EDGES = [
    ("c1", "c2"), ("c1", "a3"), ("c1", "c4"), ("c1", "c3"), ("c2", "c3"), ("c2", "c4"),
    ("c2", "a1"), ("c3", "c4"), ("c3", "a2"), ("c3", "a1"), ("c4", "a2"), ("c4", "a3"),
]

# K1 v tent: B2 drawn again with node v7 joined to all six.
K1_TENT_EDGES = B2_EDGES + [(f"v{i}", "v7") for i in range(1, 7)]

# M3(3): apex v1; triangle v2 v3 v4; pendants v6@v2, v7@v3, v5@v4.
M3_3_EDGES = [
    ("v1", "v2"), ("v1", "v3"), ("v1", "v4"), ("v5", "v1"), ("v6", "v1"), ("v7", "v1"),
    ("v2", "v3"), ("v2", "v4"), ("v3", "v4"), ("v4", "v5"), ("v6", "v2"), ("v7", "v3"),
]

# M5: clique c1..c5; a1 sees c1 c2, a2 sees c3 c4, a3 sees c4 c5 c1, a4 sees c1..c4.
M5_EDGES = [
    ("a4", "c1"), ("a4", "c2"), ("a4", "c3"), ("a4", "c4"),
    ("a2", "c4"), ("c4", "a3"), ("c1", "a3"), ("c1", "a1"),
    ("c2", "a1"), ("c5", "a3"), ("a2", "c3"),
]

FAMILY_NAMES = (
    "B1", "B2", "B3", "B4", "odd_sun_center", "K1_join_tent", "even_sun",
    "M2", "M3", "M4", "M5", "F0", "F1", "F2",
)
PARAMETRIC = {"odd_sun_center", "even_sun", "M2", "M3", "F1", "F2"}


@dataclass(frozen=True, order=True)
class FamilySpec:
    name: str
    k: int | None = None

    def __post_init__(self):
        check_parameter(self.name, self.k)

    def __str__(self) -> str:
        return self.name if self.k is None else f"{self.name}({self.k})"

    @property
    def order(self) -> int:
        """Number of vertices of the member."""
        k = self.k
        sizes = {
            "B1": 6, "B2": 6, "B3": 7, "B4": 7, "K1_join_tent": 7, "M4": 10, "M5": 9, "F0": 8,
        }
        if self.name in sizes:
            return sizes[self.name]
        return {
            "odd_sun_center": lambda: 2 * k + 1,
            "even_sun": lambda: 2 * k,
            "M2": lambda: 2 * k,
            "M3": lambda: 2 * k + 1,
            "F1": lambda: 2 * k - 1,
            "F2": lambda: 2 * k,
        }[self.name]()


def check_parameter(name: str, k: int | None) -> None:
    if name not in FAMILY_NAMES:
        raise ValueError(f"unknown family {name!r}")
    if name not in PARAMETRIC:
        if k is not None:
            raise ValueError(f"{name} takes no parameter")
        return
    if k is None:
        raise ValueError(f"{name} needs a parameter k")
    ok = {
        "odd_sun_center": k >= 3 and k % 2 == 1,
        "even_sun": k >= 4 and k % 2 == 0,
        "M2": k >= 4 and k % 2 == 0,
        "M3": k == 3 or (k >= 4 and k % 2 == 0),
        "F1": k >= 5 and k % 2 == 1,
        "F2": k >= 5 and k % 2 == 1,
    }[name]
    if not ok:
        raise ValueError(f"invalid parameter k={k} for {name}")


def _build(clique: list[str], nbhd: dict[str, list[str]]) -> tuple[Graph, SplitPartition]:
    names = clique + list(nbhd)
    idx = {v: i for i, v in enumerate(names)}
    edges = [(idx[u], idx[v]) for i, u in enumerate(clique) for v in clique[i + 1:]]
    edges += [(idx[a], idx[c]) for a, cs in nbhd.items() for c in cs]
    g = Graph.from_edges(len(names), edges, names)
    p = SplitPartition(tuple(range(len(clique))), tuple(range(len(clique), len(names))))
    return g, normalize_partition(g, p)


def _from_edges(names_clique: list[str], edges: list[tuple[str, str]]) -> tuple[Graph, SplitPartition]:
    cset = set(names_clique)
    nbhd: dict[str, list[str]] = {}
    for u, v in edges:
        if u in cset and v in cset:
            continue
        a, c = (u, v) if v in cset else (v, u)
        if c not in cset:
            raise ValueError(f"edge {u}-{v} joins two independent vertices")
        nbhd.setdefault(a, []).append(c)
    g, p = _build(names_clique, dict(sorted(nbhd.items(), key=lambda kv: _natural(kv[0]))))
    # every drawn clique edge must be present and nothing extra
    drawn = {frozenset(e) for e in edges}
    for u, v in g.edges():
        pair = frozenset((g.names[u], g.names[v]))
        if pair not in drawn and not pair <= cset:
            raise AssertionError(f"unexpected edge {sorted(pair)}")
    return g, p


def _natural(name: str):
    head = name.rstrip("0123456789")
    tail = name[len(head):]
    return head, int(tail) if tail else -1


def _c(i: int) -> str:
    return f"c{i}"


def _a(i: int) -> str:
    return f"a{i}"


def _path_pairs(count: int) -> dict[str, list[str]]:
    # a_i sees c_i, c_{i+1}
    return {_a(i): [_c(i), _c(i + 1)] for i in range(1, count + 1)}


def generate(spec: FamilySpec | str, k: int | None = None) -> tuple[Graph, SplitPartition]:
    """Build the named graph and its clique/independent partition."""
    if isinstance(spec, str):
        spec = FamilySpec(spec, k)
    name, k = spec.name, spec.k
    if name == "B1":
        return _from_edges(["v3", "v4", "v5"], B1_EDGES)
    if name == "B2":
        return _from_edges(["v2", "v4", "v5"], B2_EDGES)
    if name == "B3":
        return _from_edges(["v3", "v4", "v5"], B3_EDGES)
    if name == "B4":
        return _from_edges(["c1", "c2", "c3", "c4"], B4_EDGES)
    if name == "K1_join_tent":
        return _from_edges(["v7", "v2", "v4", "v5"], K1_TENT_EDGES)
    if name == "M5":
        return _from_edges([_c(i) for i in range(1, 6)], M5_EDGES)
    if name == "F0":
        g, _ = generate(FamilySpec("B4"))
        clique = ["0"] + [_c(i) for i in range(1, 5)]
        nbhd = {
            v: sorted(g.neighbours_by_name(v), key=_natural) + ["0"]
            for v in ("a1", "a2", "a3")
        }
        return _build(clique, nbhd)
    if name == "M3" and k == 3:
        return _from_edges(["v1", "v2", "v3", "v4"], M3_3_EDGES)
    if name == "M4":
        nbhd = {"a1": ["c1", "c2"], "a2": ["c3", "c4"], "a3": ["c5", "c6"], "a4": ["c2", "c4", "c6"]}
        return _build([_c(i) for i in range(1, 7)], nbhd)
    if name == "even_sun":
        nbhd = _path_pairs(k - 1)
        nbhd[_a(k)] = [_c(1), _c(k)]
        return _build([_c(i) for i in range(1, k + 1)], nbhd)
    if name == "odd_sun_center":
        nbhd = _path_pairs(k - 1)
        nbhd[_a(k)] = [_c(1), _c(k)]
        return _build(["c"] + [_c(i) for i in range(1, k + 1)], nbhd)
    if name == "M2":
        nbhd = {
            "b1": [_c(i) for i in range(1, k - 1)] + [_c(k)],
            "b2": [_c(i) for i in range(2, k + 1)],
        }
        nbhd.update(_path_pairs(k - 2))
        return _build([_c(i) for i in range(1, k + 1)], nbhd)
    if name == "M3":
        nbhd = {"b": [_c(i) for i in range(2, k)] + [_c(k + 1)]}
        nbhd.update(_path_pairs(k - 1))
        return _build([_c(i) for i in range(1, k + 2)], nbhd)
    if name == "F1":
        nbhd = {
            "b1": [_c(i) for i in range(1, k - 1)],
            "b2": [_c(i) for i in range(2, k)],
        }
        nbhd.update(_path_pairs(k - 2))
        return _build([_c(i) for i in range(1, k)], nbhd)
    if name == "F2":
        nbhd = {"b": [_c(i) for i in range(2, k)]}
        nbhd.update(_path_pairs(k - 1))
        return _build([_c(i) for i in range(1, k + 1)], nbhd)
    raise AssertionError(name)


def c3_members(max_k: int) -> list[FamilySpec]:
    """The word-representable circle obstructions with parameter at most ``max_k``."""
    if max_k < 5:
        raise ValueError("max_k must be at least 5")
    out = [FamilySpec("F0")]
    out += [FamilySpec("even_sun", k) for k in range(4, max_k + 1, 2)]
    for k in range(5, max_k + 1, 2):
        out += [FamilySpec("F1", k), FamilySpec("F2", k)]
    return out


def c_members(max_order: int) -> list[FamilySpec]:
    """Every member of the circle-obstruction family with at most ``max_order`` vertices."""
    out = []
    for name in ("K1_join_tent", "M4", "M5", "F0"):
        out.append(FamilySpec(name))
    ranges = {
        "odd_sun_center": range(3, max_order + 1, 2),
        "even_sun": range(4, max_order + 1, 2),
        "M2": range(4, max_order + 1, 2),
        "M3": [3] + list(range(4, max_order + 1, 2)),
        "F1": range(5, max_order + 1, 2),
        "F2": range(5, max_order + 1, 2),
    }
    for name, ks in ranges.items():
        out += [FamilySpec(name, k) for k in ks]
    return sorted((s for s in out if s.order <= max_order), key=lambda s: (s.order, str(s)))


def c3_members_up_to(max_order: int) -> list[FamilySpec]:
    """C3 members with at most ``max_order`` vertices, smallest first."""
    return [s for s in c_members(max_order) if s.name in ("F0", "even_sun", "F1", "F2")]


B_FAMILY = [FamilySpec("B1"), FamilySpec("B2"), FamilySpec("B3"), FamilySpec("B4")]
