"""Brute-force ground truth: minimal uniform and permutational word-representants.

Both searches grow a word one letter at a time and reject a prefix as soon
as it is certain to fail: an edge whose restriction already repeats a
letter, or a non-edge that can no longer be broken by the occurrences
still to come.
"""

from __future__ import annotations

from typing import Sequence

from .graph import Graph

K_MAX = 3


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _search(g: Graph, k: int, blocks: bool) -> tuple[int, ...] | None:
    n = g.n
    if n == 0:
        return ()
    adj = [sum(1 << u for u in g.adj[v]) for v in g.vertices]
    everyone = (1 << n) - 1
    nonadj = [everyone & ~adj[v] & ~(1 << v) for v in g.vertices]
    cnt = [0] * n
    since = [0] * n  # letters seen after v's latest occurrence
    broken = [0] * n  # non-neighbours whose restriction with v already repeats a letter
    word: list[int] = []
    total = n * k

    def place(x: int) -> list | None:
        """Apply letter ``x``; return an undo record, or ``None`` if the prefix is dead."""
        c = cnt[x]
        if c and adj[x] & ~since[x]:
            return None
        fresh = nonadj[x] & ~broken[x] & ~since[x] if c else 0
        c += 1
        # a non-edge left unbroken with one letter complete and the other at
        # >= k-1 occurrences can only end alternating
        todo = nonadj[x] & ~(broken[x] | fresh)
        if c >= k - 1 and todo:
            for y in _bits(todo):
                if (c == k and cnt[y] >= k - 1) or (c == k - 1 and cnt[y] == k):
                    return None
        record = (x, fresh, since[:])
        cnt[x] = c
        broken[x] |= fresh
        for y in _bits(fresh):
            broken[y] |= 1 << x
        bit = 1 << x
        for y in range(n):
            since[y] |= bit
        since[x] = 0
        word.append(x)
        return record

    def undo(record) -> None:
        x, fresh, old_since = record
        word.pop()
        cnt[x] -= 1
        broken[x] &= ~fresh
        for y in _bits(fresh):
            broken[y] &= ~(1 << x)
        since[:] = old_since

    def extend() -> bool:
        if len(word) == total:
            return True
        if blocks:
            block = len(word) // n
            letters = [x for x in range(n) if cnt[x] == block]
        else:
            letters = [x for x in range(n) if cnt[x] < k]
        for x in letters:
            rec = place(x)
            if rec is None:
                continue
            if extend():
                return True
            undo(rec)
        return False

    if not blocks:
        # uniform representants are closed under rotation, so one may start with vertex 0
        rec = place(0)
        if rec is None or not extend():
            return None
        return tuple(word)
    return tuple(word) if extend() else None


def uniform_representation(g: Graph, k: int) -> tuple[int, ...] | None:
    """A ``k``-uniform word representing ``g``, or ``None``."""
    return _search(g, k, blocks=False)


def permutational_representation(g: Graph, k: int) -> tuple[int, ...] | None:
    """A concatenation of ``k`` permutations of the vertices representing ``g``, or ``None``."""
    return _search(g, k, blocks=True)


def min_uniform_representation(g: Graph, k_max: int = K_MAX) -> tuple[int, tuple[int, ...]] | None:
    """Smallest ``k <= k_max`` with a ``k``-uniform representant, and one such word."""
    if not 1 <= k_max <= K_MAX:
        raise ValueError(f"k_max must be between 1 and {K_MAX}")
    for k in range(1, k_max + 1):
        w = uniform_representation(g, k)
        if w is not None:
            return k, w
    return None


def min_permutational_representation(
    g: Graph, k_max: int = K_MAX
) -> tuple[int, tuple[int, ...]] | None:
    if not 1 <= k_max <= K_MAX:
        raise ValueError(f"k_max must be between 1 and {K_MAX}")
    for k in range(1, k_max + 1):
        w = permutational_representation(g, k)
        if w is not None:
            return k, w
    return None


def apex_perm_extension(perm_word: Sequence, apex, n: int | None = None) -> tuple:
    """Put ``apex`` in front of every permutation block of ``perm_word``.

    ``n`` is the block length; by default it is the number of distinct letters.
    """
    letters = set(perm_word)
    if apex in letters:
        raise ValueError(f"apex {apex!r} already occurs in the word")
    n = len(letters) if n is None else n
    if n == 0 or n != len(letters) or len(perm_word) % n:
        raise ValueError("word is not a concatenation of permutations")
    out: list = []
    for i in range(0, len(perm_word), n):
        block = perm_word[i:i + n]
        if set(block) != letters:
            raise ValueError(f"block {i // n + 1} is not a permutation of the alphabet")
        out.append(apex)
        out.extend(block)
    return tuple(out)
