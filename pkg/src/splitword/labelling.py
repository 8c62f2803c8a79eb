"""Clique labellings of split graphs.

A labelling numbers the clique side ``1..k``. Under it every independent
vertex's neighbourhood is read as an interval ``[l, r]``, a co-interval
``[1, m] + [n, k]`` (both parts nonempty), or neither. Word-representability
and transitive orientability of a split graph are both equivalent to the
existence of a labelling whose neighbourhood shapes satisfy pairwise
constraints; this module checks those constraints and searches for a
labelling satisfying them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable, Mapping

from .graph import Graph, SplitPartition

Labelling = Mapping[int, int]

INTERVAL = "interval"
COINTERVAL = "cointerval"
INVALID = "invalid"


@dataclass(frozen=True)
class Shape:
    """Shape of one independent vertex's labelled neighbourhood.

    For an interval ``(lo, hi) = (l, r)``; for a co-interval
    ``(lo, hi) = (m, n)`` meaning ``[1, m] + [n, k]``.
    """

    vertex: int
    kind: str
    lo: int = 0
    hi: int = 0
    k: int = 0

    @property
    def is_prefix(self) -> bool:
        return self.kind == INTERVAL and self.lo == 1 and self.hi < self.k

    @property
    def is_suffix(self) -> bool:
        return self.kind == INTERVAL and self.hi == self.k and self.lo > 1

    def describe(self) -> str:
        if self.kind == INTERVAL:
            return f"[{self.lo},{self.hi}]"
        if self.kind == COINTERVAL:
            return f"[1,{self.lo}]u[{self.hi},{self.k}]"
        return "invalid"


@dataclass(frozen=True)
class Violation:
    condition: str
    vertices: tuple[int, ...]
    detail: str


@dataclass(frozen=True)
class ConditionReport:
    ok: bool
    violation: Violation | None = None
    shapes: dict[int, Shape] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class ABPartition:
    """Independent vertices split by shape: ``A`` co-intervals, ``B`` intervals."""

    A: dict[int, tuple[int, int]]
    B: dict[int, tuple[int, int]]
    isolated: tuple[int, ...]


def _validate_labelling(p: SplitPartition, lab: Labelling) -> None:
    k = len(p.clique)
    if set(lab) != set(p.clique) or sorted(lab.values()) != list(range(1, k + 1)):
        raise ValueError("labelling must be a bijection from the clique side onto 1..k")


def _shape_of_labels(vertex: int, labels: set[int], k: int) -> Shape:
    lo, hi = min(labels), max(labels)
    if hi - lo + 1 == len(labels):
        return Shape(vertex, INTERVAL, lo, hi, k)
    if 1 in labels and k in labels:
        gap = set(range(1, k + 1)) - labels
        glo, ghi = min(gap), max(gap)
        if ghi - glo + 1 == len(gap):
            return Shape(vertex, COINTERVAL, glo - 1, ghi + 1, k)
    return Shape(vertex, INVALID, k=k)


def shape_of(g: Graph, p: SplitPartition, lab: Labelling, a: int) -> Shape:
    """Classify ``N(a)`` under ``lab``; prefixes and suffixes count as intervals."""
    if a not in p.independent:
        raise ValueError(f"vertex {a} is not on the independent side")
    if not g.adj[a]:
        raise ValueError(f"vertex {a} is isolated and has no neighbourhood shape")
    return _shape_of_labels(a, {lab[c] for c in g.adj[a]}, len(p.clique))


# pairwise constraints; each takes two shapes and returns a failing condition or None


def _wr_pair(s: Shape, t: Shape) -> str | None:
    if s.kind == COINTERVAL and t.kind == INTERVAL:
        if not (t.lo > s.lo or t.hi < s.hi):
            return "ii"
    elif s.kind == COINTERVAL and t.kind == COINTERVAL:
        if not (t.lo < s.hi and s.lo < t.hi):
            return "iii"
    return None


def _comp_shape_ok(s: Shape) -> bool:
    return s.kind == COINTERVAL or s.is_prefix or s.is_suffix


def _comp_pair(s: Shape, t: Shape) -> str | None:
    if s.is_prefix and t.is_suffix:
        if not s.hi < t.lo:
            return "ii"
    elif s.kind == COINTERVAL:
        if t.is_prefix and not t.hi < s.hi:
            return "iii"
        if t.is_suffix and not s.lo < t.lo:
            return "iv"
        if t.kind == COINTERVAL and not (s.lo < t.hi and t.lo < s.hi):
            return "v"
    return None


def _check(
    g: Graph,
    p: SplitPartition,
    lab: Labelling,
    shape_ok: Callable[[Shape], bool],
    pair: Callable[[Shape, Shape], str | None],
) -> ConditionReport:
    _validate_labelling(p, lab)
    shapes = {a: shape_of(g, p, lab, a) for a in p.independent if g.adj[a]}
    for a, s in shapes.items():
        if not shape_ok(s):
            return ConditionReport(
                False,
                Violation("i", (a,), f"N({g.names[a]}) = {sorted(lab[c] for c in g.adj[a])} has no legal shape"),
                shapes,
            )
    for a, s in shapes.items():
        for b, t in shapes.items():
            if a == b:
                continue
            cond = pair(s, t)
            if cond:
                return ConditionReport(
                    False,
                    Violation(
                        cond,
                        (a, b),
                        f"N({g.names[a]}) = {s.describe()} and N({g.names[b]}) = {t.describe()}",
                    ),
                    shapes,
                )
    return ConditionReport(True, None, shapes)


def check_wr_conditions(g: Graph, p: SplitPartition, lab: Labelling) -> ConditionReport:
    """Check the interval/co-interval conditions characterising word-representability."""
    return _check(g, p, lab, lambda s: s.kind != INVALID, _wr_pair)


def check_comparability_conditions(g: Graph, p: SplitPartition, lab: Labelling) -> ConditionReport:
    """Check the prefix/suffix/co-interval conditions characterising comparability."""
    return _check(g, p, lab, _comp_shape_ok, _comp_pair)


def _mask(lo: int, hi: int) -> int:
    # labels lo..hi inclusive; label L is bit L-1
    return ((1 << (hi - lo + 1)) - 1) << (lo - 1) if hi >= lo else 0


def _candidates(size: int, k: int, comparability: bool) -> list[tuple[int, Shape]]:
    out = []
    if comparability:
        if size < k:
            out.append((_mask(1, size), Shape(-1, INTERVAL, 1, size, k)))
            out.append((_mask(k - size + 1, k), Shape(-1, INTERVAL, k - size + 1, k, k)))
    else:
        for lo in range(1, k - size + 2):
            out.append((_mask(lo, lo + size - 1), Shape(-1, INTERVAL, lo, lo + size - 1, k)))
    for m in range(1, size):
        n = k - (size - m) + 1
        if m + 1 < n:
            out.append((_mask(1, m) | _mask(n, k), Shape(-1, COINTERVAL, m, n, k)))
    return out


def _search(g: Graph, p: SplitPartition, comparability: bool) -> dict[int, int] | None:
    clique = list(p.clique)
    k = len(clique)
    pair = _comp_pair if comparability else _wr_pair
    indep = [a for a in p.independent if g.adj[a]]
    if not indep:
        return {c: i + 1 for i, c in enumerate(clique)}
    cands = {a: _candidates(len(g.adj[a]), k, comparability) for a in indep}
    if any(not c for c in cands.values()):
        return None
    compat = {}
    for a in indep:
        for b in indep:
            if a != b:
                for _, s in cands[a]:
                    for _, t in cands[b]:
                        compat[a, b, s, t] = pair(s, t) is None and pair(t, s) is None
    members = {c: [a for a in indep if c in g.adj[a]] for c in clique}
    inside = {a: 0 for a in indep}
    outside = {a: 0 for a in indep}
    labels: dict[int, int] = {}

    def feasible() -> bool:
        live = {}
        for a in indep:
            pa, qa = inside[a], outside[a]
            live[a] = [s for m, s in cands[a] if m & pa == pa and not m & qa]
            if not live[a]:
                return False
        for a in indep:
            if len(live[a]) != 1:
                continue
            s = live[a][0]
            for b in indep:
                if b != a and not any(compat[a, b, s, t] for t in live[b]):
                    return False
        return True

    def extend(i: int, used: int) -> bool:
        if i == k:
            return True
        c = clique[i]
        for lab in range(1, k + 1):
            bit = 1 << (lab - 1)
            if used & bit:
                continue
            hit = set(members[c])
            for a in indep:
                if a in hit:
                    inside[a] |= bit
                else:
                    outside[a] |= bit
            labels[c] = lab
            if feasible() and extend(i + 1, used | bit):
                return True
            for a in indep:
                if a in hit:
                    inside[a] &= ~bit
                else:
                    outside[a] &= ~bit
            del labels[c]
        return False

    return dict(labels) if extend(0, 0) else None


def find_wr_labelling(g: Graph, p: SplitPartition) -> dict[int, int] | None:
    """Lexicographically least labelling satisfying the word-representability conditions.

    Labels are tried in ascending order for clique vertices taken in id order,
    so the first complete labelling found is the least label vector.
    """
    lab = _search(g, p, comparability=False)
    if lab is not None:
        assert check_wr_conditions(g, p, lab), "search returned a labelling that fails the check"
    return lab


def find_comparability_labelling(g: Graph, p: SplitPartition) -> dict[int, int] | None:
    """As :func:`find_wr_labelling`, for the transitive-orientability conditions."""
    lab = _search(g, p, comparability=True)
    if lab is not None:
        assert check_comparability_conditions(g, p, lab)
    return lab


def exhaustive_labellings(
    g: Graph, p: SplitPartition, comparability: bool = False
) -> dict[int, int] | None:
    """Brute force over all ``k!`` labellings; the reference the search is tested against."""
    check = check_comparability_conditions if comparability else check_wr_conditions
    for perm in permutations(range(1, len(p.clique) + 1)):
        lab = dict(zip(p.clique, perm))
        if check(g, p, lab):
            return lab
    return None


def ab_partition(g: Graph, p: SplitPartition, lab: Labelling) -> ABPartition:
    report = check_wr_conditions(g, p, lab)
    if not report:
        raise ValueError(f"labelling violates condition ({report.violation.condition}): {report.violation.detail}")
    A, B = {}, {}
    for a, s in report.shapes.items():
        if s.kind == COINTERVAL:
            A[a] = (s.lo, s.hi)
        else:
            B[a] = (s.lo, s.hi)
    isolated = tuple(a for a in p.independent if not g.adj[a])
    return ABPartition(A, B, isolated)


def labelling_to_json(g: Graph, lab: Labelling) -> dict[str, int]:
    return {g.names[c]: lab[c] for c in sorted(lab)}
