"""Representation-number pipeline and catalog detection for split graphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .construct import build_three_uniform_word, verify_construction
from .families import B_FAMILY, FamilySpec, c3_members_up_to, c_members, generate
from .graph import Graph, SplitPartition, find_split_partition
from .labelling import find_comparability_labelling, find_wr_labelling, labelling_to_json


class InconsistencyError(RuntimeError):
    """Two independent routes to the same verdict disagreed; this is a bug."""


@dataclass(frozen=True)
class Witness:
    family: FamilySpec
    vertices: tuple[int, ...]

    def to_json(self, g: Graph) -> dict:
        return {"family": str(self.family), "vertices": [g.names[v] for v in self.vertices]}


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class _Pattern:
    n: int
    adj: tuple[int, ...]
    order: tuple[int, ...]
    earlier: tuple[tuple[tuple[int, bool], ...], ...]  # per position: (earlier position, adjacent?)
    degree: tuple[int, ...]
    role: tuple[str, ...]  # "C" always clique side, "I" always independent side, "" either


def _roles(g: Graph, p: SplitPartition) -> list[str]:
    """Sides a vertex occupies across all split partitions of ``g``."""
    c, i = set(p.clique), set(p.independent)
    parts = []
    for x in [None] + sorted(c):
        for y in [None] + sorted(i):
            k = (c - {x}) | ({y} if y is not None else set())
            rest = set(g.vertices) - k
            if all(v in g.adj[u] for u in k for v in k if u != v) and not any(
                v in g.adj[u] for u in rest for v in rest
            ):
                parts.append(k)
    roles = []
    for v in g.vertices:
        sides = {v in k for k in parts}
        roles.append("C" if sides == {True} else "I" if sides == {False} else "")
    return roles


@lru_cache(maxsize=None)
def _pattern(spec: FamilySpec) -> _Pattern:
    g, p = generate(spec)
    roles = _roles(g, p)
    # forced-clique vertices first, then grow along edges, highest degree first
    order: list[int] = []
    todo = set(g.vertices)
    while todo:
        if order:
            touching = [v for v in todo if any(u in g.adj[v] for u in order)]
        else:
            touching = []
        pool = touching or list(todo)
        v = min(pool, key=lambda v: (roles[v] != "C", -g.degree(v), v))
        order.append(v)
        todo.remove(v)
    pos = {v: i for i, v in enumerate(order)}
    adj = tuple(sum(1 << pos[u] for u in g.adj[v]) for v in order)
    earlier = tuple(
        tuple((j, order[j] in g.adj[v]) for j in range(i)) for i, v in enumerate(order)
    )
    return _Pattern(
        g.n,
        adj,
        tuple(order),
        earlier,
        tuple(g.degree(v) for v in order),
        tuple(roles[v] for v in order),
    )


class _Host:
    def __init__(self, g: Graph, p: SplitPartition):
        self.g = g
        self.adj = [sum(1 << u for u in g.adj[v]) for v in g.vertices]
        self.clique = sum(1 << v for v in p.clique)
        self.indep = sum(1 << v for v in p.independent)
        self.full = (1 << g.n) - 1

    def embed(self, pat: _Pattern, allowed: int, forced: int = 0) -> list[int] | None:
        """Map pattern positions to host vertices inside ``allowed`` covering ``forced``."""
        m = pat.n
        adj = self.adj
        deg_in = {v: bin(adj[v] & allowed).count("1") for v in _bits(allowed)}
        nondeg_in = {v: bin(allowed).count("1") - 1 - deg_in[v] for v in deg_in}
        base = []
        for i in range(m):
            mask = allowed
            if pat.role[i] == "C":
                mask &= self.clique
            elif pat.role[i] == "I":
                mask &= self.indep
            need_non = m - 1 - pat.degree[i]
            for v in _bits(mask):
                if deg_in[v] < pat.degree[i] or nondeg_in[v] < need_non:
                    mask &= ~(1 << v)
            if not mask:
                return None
            base.append(mask)
        f = [0] * m

        def extend(i: int, used: int) -> bool:
            if bin(forced & ~used).count("1") > m - i:
                return False
            if i == m:
                return True
            cand = base[i] & ~used
            for j, is_adj in pat.earlier[i]:
                cand &= adj[f[j]] if is_adj else ~adj[f[j]]
                if not cand:
                    return False
            for v in _bits(cand):
                f[i] = v
                if extend(i + 1, used | (1 << v)):
                    return True
            return False

        if extend(0, 0):
            out = [0] * m
            for i, v in enumerate(f):
                out[pat.order[i]] = v
            return out
        return None

    def least_witness(self, pat: _Pattern) -> tuple[int, ...] | None:
        """The lexicographically least sorted vertex set inducing a copy of ``pat``."""
        if pat.n > self.g.n or self.embed(pat, self.full) is None:
            return None
        chosen = 0
        last = -1
        for _ in range(pat.n):
            for v in range(last + 1, self.g.n):
                bit = 1 << v
                above = self.full & ~((bit << 1) - 1)
                if self.embed(pat, chosen | bit | above, chosen | bit) is not None:
                    chosen |= bit
                    last = v
                    break
            else:
                raise AssertionError("lost the witness during minimisation")
        return tuple(_bits(chosen))


def detect_induced(
    g: Graph, specs: Sequence[FamilySpec], partition: SplitPartition | None = None
) -> Witness | None:
    """First listed family with an induced copy in ``g``, with its least vertex set."""
    p = partition or find_split_partition(g)
    if p is None:
        raise ValueError("graph is not split")
    host = _Host(g, p)
    for spec in specs:
        if spec.order > g.n:
            continue
        found = host.least_witness(_pattern(spec))
        if found is not None:
            return Witness(spec, found)
    return None


def split_permutation(g: Graph, partition: SplitPartition | None = None) -> bool:
    return detect_induced(g, B_FAMILY, partition) is None


def split_comparability(g: Graph, partition: SplitPartition | None = None) -> bool:
    """Comparability verdict, computed by catalog scan and by labelling search; they must agree."""
    p = partition or find_split_partition(g)
    if p is None:
        raise ValueError("graph is not split")
    by_catalog = detect_induced(g, B_FAMILY[:3], p) is None
    by_labelling = find_comparability_labelling(g, p) is not None
    if by_catalog != by_labelling:
        raise InconsistencyError(
            f"B1/B2/B3-free is {by_catalog} but comparability labelling search says {by_labelling}"
        )
    return by_catalog


@dataclass
class Classification:
    is_split: bool
    partition: SplitPartition | None = None
    word_representable: bool | None = None
    labelling: dict[int, int] | None = None
    rep_number: int | None = None
    witness: Witness | None = None
    comparability: bool | None = None
    permutation_graph: bool | None = None
    word: tuple[int, ...] | None = None
    certificate: tuple[int, ...] | None = None
    obstruction: Witness | None = None
    notes: list[str] = field(default_factory=list)

    def to_json(self, g: Graph) -> dict:
        def names(word):
            return None if word is None else [g.names[v] for v in word]

        return {
            "is_split": self.is_split,
            "partition": self.partition.to_json(g) if self.partition else None,
            "word_representable": self.word_representable,
            "labelling": labelling_to_json(g, self.labelling) if self.labelling else None,
            "rep_number": self.rep_number,
            "witness": self.witness.to_json(g) if self.witness else None,
            "comparability": self.comparability,
            "permutation_graph": self.permutation_graph,
            "word": names(self.word),
            "certificate": names(self.certificate),
            "obstruction": self.obstruction.to_json(g) if self.obstruction else None,
            "notes": list(self.notes),
        }


def representation_number(g: Graph, extras: bool = True) -> Classification:
    """Classify ``g``: split?, word-representable?, representation number with certificates.

    With ``extras`` the comparability and permutation-graph verdicts (and, for
    non-representable inputs, a best-effort circle obstruction) are filled in.
    """
    p = find_split_partition(g)
    if p is None:
        return Classification(False, notes=["not a split graph"])
    out = Classification(True, p)
    lab = find_wr_labelling(g, p)
    if extras:
        out.comparability = split_comparability(g, p)
        out.permutation_graph = split_permutation(g, p)
    if lab is None:
        out.word_representable = False
        if extras:
            others = [s for s in c_members(g.n) if s.name not in ("F0", "even_sun", "F1", "F2")]
            out.obstruction = detect_induced(g, others, p)
        return out
    out.word_representable = True
    out.labelling = lab
    trace = build_three_uniform_word(g, p, lab)
    if not verify_construction(trace, g):
        raise InconsistencyError("constructed word does not represent the graph")
    out.certificate = trace.w
    if g.is_complete():
        out.rep_number = 1
        out.word = tuple(g.vertices)
        return out
    out.witness = detect_induced(g, c3_members_up_to(g.n), p)
    out.rep_number = 3 if out.witness else 2
    out.word = trace.w if out.rep_number == 3 else None
    return out


def comparability_rep3(g: Graph) -> bool:
    """For a split comparability graph: does it contain F0 or F1(5)?"""
    p = find_split_partition(g)
    if p is None or not split_comparability(g, p):
        raise ValueError("graph must be a split comparability graph")
    found = detect_induced(g, [FamilySpec("F0"), FamilySpec("F1", 5)], p) is not None
    rep = representation_number(g, extras=False).rep_number
    if found != (rep == 3):
        raise InconsistencyError(f"F0/F1(5) detection says {found} but representation number is {rep}")
    return found
