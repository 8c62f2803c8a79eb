"""Words over vertex alphabets and the alternation relation they induce.

A word is any sequence of hashable letters; functions here return tuples.
Strings work too, which keeps small examples readable::

    >>> "".join(restrict("acabbccb", {"a", "b"}))
    'aabbb'
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations
from typing import Hashable, Iterable, Sequence

from .graph import Graph

Word = tuple


def alphabet(word: Iterable[Hashable]) -> set:
    return set(word)


def restrict(word: Iterable[Hashable], letters: Iterable[Hashable]) -> tuple:
    keep = set(letters)
    return tuple(x for x in word if x in keep)


def reverse(word: Sequence[Hashable]) -> tuple:
    return tuple(reversed(word))


def is_k_uniform(word: Iterable[Hashable], k: int) -> bool:
    if k < 1:
        raise ValueError("k must be at least 1")
    return all(c == k for c in Counter(word).values())


def _alternating(seq: Sequence[Hashable]) -> bool:
    return all(a != b for a, b in zip(seq, seq[1:]))


def alternates(word: Iterable[Hashable], x: Hashable, y: Hashable) -> bool:
    """True iff ``word`` restricted to ``{x, y}`` never repeats a letter consecutively."""
    if x == y:
        raise ValueError("alternation is defined for two distinct letters")
    return _alternating(restrict(word, (x, y)))


def _positions(word: Sequence[Hashable]) -> dict:
    pos: dict = {}
    for i, x in enumerate(word):
        pos.setdefault(x, []).append(i)
    return pos


def _interleaved(px: list[int], py: list[int]) -> bool:
    # merged position lists must switch owner at every step
    if abs(len(px) - len(py)) > 1:
        return False
    if len(px) < len(py) or (len(px) == len(py) and py and py[0] < px[0]):
        px, py = py, px
    # now px leads: px[0] < py[0] < px[1] < py[1] < ...
    for i, q in enumerate(py):
        if not px[i] < q:
            return False
        if i + 1 < len(px) and not q < px[i + 1]:
            return False
    return True


def alternation_pairs(word: Sequence[Hashable]) -> set[frozenset]:
    """All unordered pairs of distinct letters of ``word`` that alternate."""
    pos = _positions(word)
    letters = list(pos)
    return {
        frozenset((x, y))
        for x, y in combinations(letters, 2)
        if _interleaved(pos[x], pos[y])
    }


def graph_of_word(word: Sequence[Hashable], vertices: Sequence[Hashable]) -> Graph:
    """The graph on ``vertices`` (vertex ``i`` is ``vertices[i]``) whose edges alternate in ``word``."""
    if set(word) != set(vertices) or len(set(vertices)) != len(vertices):
        raise ValueError("word alphabet must equal the vertex set")
    idx = {v: i for i, v in enumerate(vertices)}
    edges = [(idx[x], idx[y]) for x, y in map(tuple, alternation_pairs(word))]
    return Graph.from_edges(len(vertices), edges, [str(v) for v in vertices])


def represents(word: Sequence[int], g: Graph) -> bool:
    """True iff ``word`` (over vertex ids ``0..n-1``) word-represents ``g``."""
    if set(word) != set(g.vertices):
        raise ValueError("word alphabet must equal the vertex set of the graph")
    alt = alternation_pairs(word)
    want = {frozenset(e) for e in g.edges()}
    return alt == want


def to_names(word: Iterable[int], g: Graph) -> list[str]:
    return [g.names[v] for v in word]


def format_word(word: Iterable[int], g: Graph) -> str:
    return " ".join(to_names(word, g))


def parse_word(text: str, g: Graph) -> tuple[int, ...]:
    """Read whitespace-separated vertex names into a word over vertex ids."""
    ids = {name: i for i, name in enumerate(g.names)}
    out = []
    for tok in text.split():
        if tok not in ids:
            raise ValueError(f"unknown vertex name {tok!r}")
        out.append(ids[tok])
    return tuple(out)
