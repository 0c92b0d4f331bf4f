"""Finite posets: construction, validation, combination, ranks and chains.

Elements are always the integers 0..n-1.  A poset is stored by its cover
relation (Hasse digraph); arbitrary order relations fed to ``build_poset``
are transitively closed and then reduced, so sloppy input is fine.  Order
comparisons are kept as bitmask ints (bit q of ``strict_up[p]`` means p < q),
which keeps everything exact and reasonably fast for the lattice sizes this
library targets (a few thousand elements at most).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence


class PosetError(ValueError):
    """Invalid poset input."""


class CycleError(PosetError):
    """Input relations contain a cycle; ``cycle`` lists the offending ids."""

    def __init__(self, cycle: Sequence[int]):
        self.cycle = list(cycle)
        super().__init__(f"relations contain a cycle: {self.cycle}")


def _bits(mask: int) -> list[int]:
    out = []
    p = 0
    while mask:
        if mask & 1:
            out.append(p)
        mask >>= 1
        p += 1
    return out


class Poset:
    """Immutable finite poset given by its cover relation.

    Attributes:
        n: number of elements (ids 0..n-1).
        covers: sorted tuple of pairs (p, q) with p covered by q.
        labels: optional per-element display names.
    """

    __slots__ = (
        "n",
        "covers",
        "labels",
        "up_covers",
        "down_covers",
        "strict_up",
        "strict_down",
        "_as_dict",
    )

    def __init__(self, n: int, covers: Iterable[tuple[int, int]], labels=None):
        covers = tuple(sorted((int(p), int(q)) for p, q in covers))
        for p, q in covers:
            if not (0 <= p < n and 0 <= q < n):
                raise PosetError(f"cover ({p},{q}) out of range for n={n}")
        self.n = n
        self.covers = covers
        self.labels = tuple(labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != n:
            raise PosetError("labels must have one entry per element")
        up = [[] for _ in range(n)]
        down = [[] for _ in range(n)]
        for p, q in covers:
            up[p].append(q)
            down[q].append(p)
        self.up_covers = tuple(tuple(u) for u in up)
        self.down_covers = tuple(tuple(d) for d in down)
        self.strict_up = _reachability(n, self.up_covers)
        self.strict_down = _reachability(n, self.down_covers)

    # --- order queries ------------------------------------------------

    def leq(self, p: int, q: int) -> bool:
        return p == q or bool(self.strict_up[p] >> q & 1)

    def less(self, p: int, q: int) -> bool:
        return bool(self.strict_up[p] >> q & 1)

    def down_set(self, p: int) -> int:
        """Bitmask of elements strictly below p."""
        return self.strict_down[p]

    def minimals(self) -> list[int]:
        return [p for p in range(self.n) if not self.down_covers[p]]

    def maximals(self) -> list[int]:
        return [p for p in range(self.n) if not self.up_covers[p]]

    def ddeg(self, p: int) -> int:
        return len(self.down_covers[p])

    def edge_count(self) -> int:
        return len(self.covers)

    def connected_components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        adj = [list(self.up_covers[p]) + list(self.down_covers[p]) for p in range(self.n)]
        for s in range(self.n):
            if seen[s]:
                continue
            comp, stack = [], [s]
            seen[s] = True
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.connected_components()) <= 1

    def topological_order(self) -> list[int]:
        order: list[int] = []
        indeg = [len(self.down_covers[p]) for p in range(self.n)]
        stack = [p for p in range(self.n) if indeg[p] == 0]
        while stack:
            x = stack.pop()
            order.append(x)
            for y in self.up_covers[x]:
                indeg[y] -= 1
                if indeg[y] == 0:
                    stack.append(y)
        return order

    def linear_extensions(self):
        """Yield all linear extensions as tuples of element ids."""
        n = self.n
        ext: list[int] = []
        placed = [0]  # bitmask of placed elements

        def rec():
            if len(ext) == n:
                yield tuple(ext)
                return
            for p in range(n):
                if not placed[0] >> p & 1 and self.strict_down[p] & ~placed[0] == 0:
                    placed[0] |= 1 << p
                    ext.append(p)
                    yield from rec()
                    ext.pop()
                    placed[0] &= ~(1 << p)

        yield from rec()

    def __repr__(self):
        return f"Poset(n={self.n}, covers={list(self.covers)})"

    def __eq__(self, other):
        return (
            isinstance(other, Poset)
            and self.n == other.n
            and self.covers == other.covers
        )

    def __hash__(self):
        return hash((self.n, self.covers))

    def to_dict(self) -> dict:
        d = {"n": self.n, "relations": [list(c) for c in self.covers]}
        if self.labels is not None:
            d["labels"] = list(self.labels)
        return d


def _reachability(n: int, succ: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Strict reachability masks over an acyclic successor relation."""
    reach = [0] * n
    indeg = [0] * n
    for p in range(n):
        for q in succ[p]:
            indeg[q] += 1
    stack = [p for p in range(n) if indeg[p] == 0]
    order = []
    while stack:
        x = stack.pop()
        order.append(x)
        for y in succ[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                stack.append(y)
    for x in reversed(order):
        m = 0
        for y in succ[x]:
            m |= 1 << y
            m |= reach[y]
        reach[x] = m
    return tuple(reach)


def _find_cycle(n: int, succ: Sequence[Sequence[int]]) -> list[int]:
    color = [0] * n  # 0 unvisited, 1 on stack, 2 done
    parent: dict[int, int] = {}
    for s in range(n):
        if color[s]:
            continue
        stack = [(s, iter(succ[s]))]
        color[s] = 1
        while stack:
            x, it = stack[-1]
            advanced = False
            for y in it:
                if color[y] == 0:
                    color[y] = 1
                    parent[y] = x
                    stack.append((y, iter(succ[y])))
                    advanced = True
                    break
                if color[y] == 1:
                    cycle = [y, x]
                    z = x
                    while z != y:
                        z = parent[z]
                        cycle.append(z)
                    cycle.reverse()
                    return cycle
            if not advanced:
                color[x] = 2
                stack.pop()
    return []


def build_poset(n: int, relations: Iterable[tuple[int, int]], labels=None) -> Poset:
    """Build a poset from arbitrary order relations.

    The relations are transitively closed, checked for cycles, and reduced
    to covers.
    """
    succ = [set() for _ in range(n)]
    for p, q in relations:
        p, q = int(p), int(q)
        if not (0 <= p < n and 0 <= q < n):
            raise PosetError(f"relation ({p},{q}) references an id >= n={n}")
        if p == q:
            raise CycleError([p, p])
        succ[p].add(q)
    succ_l = [sorted(s) for s in succ]
    # cycle check before reachability (which assumes acyclicity)
    indeg = [0] * n
    for p in range(n):
        for q in succ_l[p]:
            indeg[q] += 1
    stack = [p for p in range(n) if indeg[p] == 0]
    count = 0
    while stack:
        x = stack.pop()
        count += 1
        for y in succ_l[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                stack.append(y)
    if count != n:
        raise CycleError(_find_cycle(n, succ_l))
    closure = _reachability(n, succ_l)
    covers = []
    for p in range(n):
        reach_p = closure[p]
        implied = 0
        for r in _bits(reach_p):
            implied |= closure[r]
        for q in _bits(reach_p & ~implied):
            covers.append((p, q))
    return Poset(n, covers, labels)


def dual(P: Poset) -> Poset:
    """The dual poset: all covers reversed."""
    return Poset(P.n, [(q, p) for p, q in P.covers], P.labels)


def disjoint_union(P: Poset, Q: Poset) -> Poset:
    covers = list(P.covers) + [(p + P.n, q + P.n) for p, q in Q.covers]
    labels = None
    if P.labels is not None and Q.labels is not None:
        labels = P.labels + Q.labels
    return Poset(P.n + Q.n, covers, labels)


def direct_product(P: Poset, Q: Poset) -> Poset:
    """Direct product; element (p, q) gets id p*Q.n + q (lexicographic)."""
    covers = []
    for p in range(P.n):
        for a, b in Q.covers:
            covers.append((p * Q.n + a, p * Q.n + b))
    for a, b in P.covers:
        for q in range(Q.n):
            covers.append((a * Q.n + q, b * Q.n + q))
    return Poset(P.n * Q.n, covers)


def chain(a: int) -> Poset:
    """The chain poset on a elements."""
    return Poset(a, [(i, i + 1) for i in range(a - 1)])


def antichain(a: int) -> Poset:
    return Poset(a, [])


@dataclass(frozen=True)
class RankInfo:
    is_ranked: bool
    is_graded: bool
    rank: Optional[tuple[int, ...]]
    top_rank: Optional[int]


def rank_info(P: Poset) -> RankInfo:
    """Rank/gradedness flags; ranks are normalized to start at 0 per component."""
    n = P.n
    rank = [None] * n
    ok = True
    for comp in P.connected_components():
        start = comp[0]
        rank[start] = 0
        queue = [start]
        while queue and ok:
            x = queue.pop()
            for y in P.up_covers[x]:
                if rank[y] is None:
                    rank[y] = rank[x] + 1
                    queue.append(y)
                elif rank[y] != rank[x] + 1:
                    ok = False
                    break
            for y in P.down_covers[x]:
                if rank[y] is None:
                    rank[y] = rank[x] - 1
                    queue.append(y)
                elif rank[y] != rank[x] - 1:
                    ok = False
                    break
        if not ok:
            break
        # the BFS seed is arbitrary; re-verify every cover inside the component
        comp_set = set(comp)
        for p, q in P.covers:
            if p in comp_set and rank[q] != rank[p] + 1:
                ok = False
                break
        if not ok:
            break
        low = min(rank[x] for x in comp)
        for x in comp:
            rank[x] -= low
    if not ok:
        return RankInfo(False, False, None, None)
    ranks = tuple(rank)
    return RankInfo(True, _is_graded(P), ranks, max(ranks) if n else 0)


def _is_graded(P: Poset) -> bool:
    """All maximal chains have the same length."""
    n = P.n
    order = P.topological_order()
    dmin = [0] * n
    dmax = [0] * n
    for x in order:
        lo = [dmin[y] for y in P.down_covers[x]]
        hi = [dmax[y] for y in P.down_covers[x]]
        dmin[x] = 1 + min(lo) if lo else 0
        dmax[x] = 1 + max(hi) if hi else 0
    umin = [0] * n
    umax = [0] * n
    for x in reversed(order):
        lo = [umin[y] for y in P.up_covers[x]]
        hi = [umax[y] for y in P.up_covers[x]]
        umin[x] = 1 + min(lo) if lo else 0
        umax[x] = 1 + max(hi) if hi else 0
    totals = set()
    for x in range(n):
        if dmin[x] != dmax[x] or umin[x] != umax[x]:
            return False
        totals.add(dmin[x] + umin[x])
    return len(totals) <= 1


@dataclass(frozen=True)
class Chain:
    elements: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.elements) - 1


def enumerate_chains(P: Poset, k: int = 0, maximal_only: bool = False) -> list[Chain]:
    """All k-chains (strictly increasing (k+1)-sequences), or all maximal chains."""
    if maximal_only:
        out = []
        seq: list[int] = []

        def rec(x):
            seq.append(x)
            if not P.up_covers[x]:
                out.append(Chain(tuple(seq)))
            else:
                for y in P.up_covers[x]:
                    rec(y)
            seq.pop()

        for s in P.minimals():
            rec(s)
        return out
    if k < 0:
        raise PosetError("chain length k must be >= 0")
    out = []
    seq = []

    def rec_k(x):
        seq.append(x)
        if len(seq) == k + 1:
            out.append(Chain(tuple(seq)))
        else:
            for y in _bits(P.strict_up[x]):
                rec_k(y)
        seq.pop()

    for s in range(P.n):
        rec_k(s)
    return out


def longest_chain_length(P: Poset) -> int:
    if P.n == 0:
        return 0
    order = P.topological_order()
    d = [0] * P.n
    for x in order:
        for y in P.up_covers[x]:
            d[y] = max(d[y], d[x] + 1)
    return max(d)


# --- isomorphism (exact backtracking; fine for the <= ~60 element posets here)


def _invariant(P: Poset, p: int, depth: int = 2):
    down = len(P.down_covers[p])
    up = len(P.up_covers[p])
    below = P.strict_down[p].bit_count()
    above = P.strict_up[p].bit_count()
    if depth == 0:
        return (down, up, below, above)
    subs = sorted(_invariant(P, q, depth - 1) for q in P.down_covers[p])
    sups = sorted(_invariant(P, q, depth - 1) for q in P.up_covers[p])
    return (down, up, below, above, tuple(subs), tuple(sups))


def is_isomorphic(P: Poset, Q: Poset) -> bool:
    """Exact poset isomorphism by backtracking with invariant pruning."""
    if P.n != Q.n or len(P.covers) != len(Q.covers):
        return False
    inv_p = [_invariant(P, p) for p in range(P.n)]
    inv_q = [_invariant(Q, q) for q in range(Q.n)]
    if sorted(inv_p) != sorted(inv_q):
        return False
    candidates = [
        [q for q in range(Q.n) if inv_q[q] == inv_p[p]] for p in range(P.n)
    ]
    order = sorted(range(P.n), key=lambda p: len(candidates[p]))
    img = [-1] * P.n
    used = [False] * Q.n

    def ok(p, q, assigned):
        for r in assigned:
            if P.less(p, r) != Q.less(q, img[r]) or P.less(r, p) != Q.less(img[r], q):
                return False
        return True

    assigned: list[int] = []

    def rec(i):
        if i == P.n:
            return True
        p = order[i]
        for q in candidates[p]:
            if not used[q] and ok(p, q, assigned):
                img[p] = q
                used[q] = True
                assigned.append(p)
                if rec(i + 1):
                    return True
                assigned.pop()
                used[q] = False
                img[p] = -1
        return False

    return rec(0)


# --- JSON poset file format -------------------------------------------------


def poset_to_json(P: Poset) -> str:
    return json.dumps(P.to_dict(), indent=2, sort_keys=True) + "\n"


def poset_from_dict(d: dict) -> Poset:
    try:
        n = int(d["n"])
        relations = [(int(a), int(b)) for a, b in d["relations"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise PosetError(f"malformed poset document: {exc}") from exc
    labels = d.get("labels")
    return build_poset(n, relations, labels)


def load_poset(path) -> Poset:
    with open(path, "r", encoding="utf-8") as fh:
        return poset_from_dict(json.load(fh))
