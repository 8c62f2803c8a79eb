"""Three-uniform word-representants of word-representable split graphs.

Given a valid labelling, three copies of the clique permutation ``1..k`` are
threaded with the independent vertices and glued as
``p1 . reverse(p1|B) . p2 . p3``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, SplitPartition
from .labelling import ABPartition, Labelling, ab_partition
from .words import alternates, restrict


@dataclass(frozen=True)
class ConstructionTrace:
    p1: tuple[int, ...]
    p2: tuple[int, ...]
    p3: tuple[int, ...]
    d: int
    w: tuple[int, ...]
    ab: ABPartition
    by_label: tuple[int, ...]  # by_label[j] is the clique vertex labelled j + 1

    def to_json(self, g: Graph) -> dict:
        name = g.names.__getitem__
        return {
            "p1": [name(v) for v in self.p1],
            "p2": [name(v) for v in self.p2],
            "p3": [name(v) for v in self.p3],
            "d": self.d,
            "w": [name(v) for v in self.w],
            "A": {name(a): list(mn) for a, mn in sorted(self.ab.A.items())},
            "B": {name(a): list(lr) for a, lr in sorted(self.ab.B.items())},
            "isolated": [name(v) for v in self.ab.isolated],
        }


def _insert_after(word: list[int], anchor: int, x: int) -> None:
    word.insert(word.index(anchor) + 1, x)


def _insert_before(word: list[int], anchor: int, x: int) -> None:
    word.insert(word.index(anchor), x)


def build_three_uniform_word(g: Graph, p: SplitPartition, lab: Labelling) -> ConstructionTrace:
    """Run the construction; raises ``ValueError`` if ``lab`` fails the conditions.

    Independent vertices are processed in ascending id order. Insertions go
    directly next to the anchor clique letter, so several vertices sharing
    an anchor stack up with the latest one closest to it. Isolated
    independent vertices ``v`` are added as ``v v`` in front and ``v`` at the
    end, which keeps the word 3-uniform without creating alternations.
    """
    ab = ab_partition(g, p, lab)
    k = len(p.clique)
    by_label = [0] * k
    for c, j in lab.items():
        by_label[j - 1] = c
    p1, p2, p3 = list(by_label), list(by_label), list(by_label)
    d = 1
    for a in sorted(set(ab.A) | set(ab.B)):
        if a in ab.A:
            m, n = ab.A[a]
            if m > d:
                d = m
            _insert_after(p1, by_label[m - 1], a)
            _insert_before(p2, by_label[n - 1], a)
        else:
            l, r = ab.B[a]
            _insert_before(p1, by_label[l - 1], a)
            _insert_after(p2, by_label[r - 1], a)
    in_a = set(ab.A)
    in_b = set(ab.B)
    tail = [x for x in reversed(p1) if x in in_a]
    if k:
        pos = p3.index(by_label[d - 1]) + 1
        p3[pos:pos] = tail
    w = p1 + [x for x in reversed(p1) if x in in_b] + p2 + p3
    if ab.isolated:
        w = [v for v in ab.isolated for _ in (0, 1)] + w + list(ab.isolated)
    return ConstructionTrace(tuple(p1), tuple(p2), tuple(p3), d, tuple(w), ab, tuple(by_label))


@dataclass(frozen=True)
class PairReport:
    u: int
    v: int
    edge: bool
    alternates: bool
    pattern: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return self.edge == self.alternates


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    pairs: tuple[PairReport, ...]

    @property
    def failures(self) -> list[PairReport]:
        return [r for r in self.pairs if not r.ok]

    def __bool__(self) -> bool:
        return self.ok


def verify_construction(t: ConstructionTrace | tuple[int, ...], g: Graph) -> VerificationReport:
    """Check every vertex pair of ``g`` against the word, keeping each pair's restriction."""
    w = t.w if isinstance(t, ConstructionTrace) else tuple(t)
    if set(w) != set(g.vertices):
        raise ValueError("word alphabet must equal the vertex set")
    pairs = []
    for u, v in combinations(g.vertices, 2):
        pattern = restrict(w, (u, v))
        pairs.append(PairReport(u, v, g.has_edge(u, v), alternates(w, u, v), pattern))
    return VerificationReport(all(r.ok for r in pairs), tuple(pairs))
