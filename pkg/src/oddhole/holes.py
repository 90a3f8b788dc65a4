"""Girth, induced-cycle enumeration and membership in the odd-girth families.

For ``l >= 2`` the family of interest holds the graphs of girth exactly
``2l+1`` whose odd induced cycles all have length ``2l+1``.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator

from .budget import BudgetedStream, SearchBudget, fresh
from .graph import CycleSeq, Graph, members


def shortest_cycle(G: Graph) -> tuple[float, CycleSeq | None]:
    """Girth together with one shortest cycle (``inf, None`` for forests).

    Breadth-first search from every root; a non-tree edge ``uw`` closes a
    walk of length ``d(u) + d(w) + 1`` through the root.  Any such walk whose
    two tree paths overlap contains a strictly shorter cycle, so skipping
    overlapping walks never loses the minimum.
    """
    best = math.inf
    best_cycle = None
    adj = G.adj
    for r in range(G.n):
        dist = {r: 0}
        parent = {r: -1}
        queue = deque([r])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    length = dist[u] + dist[w] + 1
                    if length >= best:
                        continue
                    left = _tree_path(parent, u)
                    right = _tree_path(parent, w)
                    if set(left[1:]) & set(right[1:]):
                        continue
                    best = length
                    best_cycle = CycleSeq(tuple(left + right[:0:-1]))
    return best, best_cycle


def _tree_path(parent: dict[int, int], v: int) -> list[int]:
    out = []
    while v != -1:
        out.append(v)
        v = parent[v]
    out.reverse()
    return out


def girth(G: Graph) -> float:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    return shortest_cycle(G)[0]


# ---------------------------------------------------------------------------
# the induced-path kernel


def induced_paths(
    G: Graph,
    start: int,
    allowed: int,
    targets: int,
    budget: SearchBudget,
    *,
    max_edges: int | None = None,
    blocked: int = 0,
    start_block: int | None = None,
    dist: dict[int, int] | None = None,
) -> Iterator[tuple[int, ...]]:
    """Yield every induced path from ``start`` to a vertex of ``targets``.

    Interior vertices come from ``allowed``; a path stops at the first target
    it reaches.  A partial path is dropped as soon as the candidate vertex is
    adjacent to any non-tip path vertex (the domination bitmap ``blocked``),
    which is what keeps emitted paths chordless.  ``start_block`` overrides
    the closed neighbourhood the start vertex contributes once it stops being
    the tip; ``dist`` gives lower bounds on the remaining edges to a target.

    Stops early, leaving ``budget.exhausted`` set, when the budget runs out.
    """
    bits = G.bits
    sb = start_block if start_block is not None else bits[start] | (1 << start)
    path = [start]
    pmask = 1 << start
    blocks = [blocked]
    stack = [bits[start] & ~blocked & ~pmask]
    while stack:
        cand = stack[-1]
        if not cand:
            stack.pop()
            blocks.pop()
            v = path.pop()
            pmask ^= 1 << v
            continue
        low = cand & -cand
        stack[-1] = cand ^ low
        if not budget.tick():
            return
        w = low.bit_length() - 1
        edges_to_w = len(path)
        if low & targets:
            if max_edges is None or edges_to_w <= max_edges:
                yield tuple(path) + (w,)
            continue
        if not low & allowed:
            continue
        if max_edges is not None:
            need = dist.get(w, math.inf) if dist is not None else 1
            if edges_to_w + need > max_edges:
                continue
        tip = path[-1]
        contrib = sb if len(path) == 1 else bits[tip] | (1 << tip)
        nb = blocks[-1] | contrib
        path.append(w)
        pmask |= low
        blocks.append(nb)
        stack.append(bits[w] & ~nb & ~pmask)


def _bfs_to(G: Graph, sources: int, region: int) -> dict[int, int]:
    dist = {v: 0 for v in members(sources)}
    queue = deque(dist)
    while queue:
        u = queue.popleft()
        for w in G.adj[u]:
            if w not in dist and region >> w & 1:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


# ---------------------------------------------------------------------------
# induced cycles


def enumerate_induced_cycles(
    G: Graph,
    min_len: int = 3,
    max_len: int | None = None,
    parity: str | None = None,
    budget: SearchBudget | int | None = None,
) -> BudgetedStream:
    """Stream every induced cycle of ``G`` with length in ``[min_len, max_len]``.

    ``parity`` is ``"odd"``, ``"even"`` or None.  Each cycle is emitted once,
    in canonical form: it starts at its minimum vertex and walks toward the
    smaller of that vertex's two cycle neighbours.
    """
    if min_len < 3:
        raise ValueError("min_len must be at least 3")
    if parity not in (None, "odd", "even"):
        raise ValueError(f"unknown parity filter {parity!r}")
    b = fresh(budget)
    return BudgetedStream(_cycles(G, min_len, max_len, parity, b), b)


def _cycles(G, min_len, max_len, parity, budget):
    bits = G.bits
    full = G.all_mask
    want = {None: None, "odd": 1, "even": 0}[parity]
    for s in range(G.n):
        above = full & ~((1 << (s + 1)) - 1)
        ns = bits[s] & above
        if not ns & (ns - 1):
            continue
        allowed = above & ~bits[s]
        dist = None
        max_edges = None
        if max_len is not None:
            max_edges = max_len - 2
            dist = _bfs_to(G, ns, above)
        for a in members(ns):
            targets = ns & ~((1 << (a + 1)) - 1)
            if not targets:
                break
            for p in induced_paths(
                G, a, allowed, targets, budget,
                max_edges=max_edges, blocked=1 << s, dist=dist,
            ):
                k = len(p) + 1
                if k < min_len or (want is not None and k % 2 != want):
                    continue
                yield CycleSeq((s,) + p)
            if budget.exhausted:
                return


# ---------------------------------------------------------------------------
# membership


class Membership(str, Enum):
    IN = "InGl"
    OUT = "OutGl"
    UNKNOWN = "Unknown"


@dataclass
class MembershipVerdict:
    status: Membership
    l: int
    girth: float
    certificate: CycleSeq | None = None
    reason: str = ""
    budget: dict = field(default_factory=dict)

    @property
    def member(self) -> bool:
        return self.status is Membership.IN

    def to_json(self) -> dict:
        return {
            "status": self.status.value,
            "l": self.l,
            "girth": None if self.girth == math.inf else int(self.girth),
            "certificate": list(self.certificate.vertices) if self.certificate else None,
            "reason": self.reason,
            "budget": self.budget,
        }


def is_in_Gl(G: Graph, l: int, budget: SearchBudget | int | None = None) -> MembershipVerdict:
    """Decide whether ``G`` has girth ``2l+1`` and no longer odd induced cycle.

    The answer is three-valued: an exhausted budget yields Unknown rather
    than a guess.
    """
    if l < 2:
        raise ValueError("l must be at least 2")
    b = fresh(budget)
    target = 2 * l + 1
    g, cyc = shortest_cycle(G)
    if g < target:
        return MembershipVerdict(
            Membership.OUT, l, g, cyc, f"girth {g} is below {target}", b.report()
        )
    if g > target:
        why = "acyclic" if g == math.inf else f"girth {g} exceeds {target}"
        return MembershipVerdict(Membership.OUT, l, g, None, why, b.report())
    stream = enumerate_induced_cycles(G, min_len=target + 2, parity="odd", budget=b)
    for c in stream:
        return MembershipVerdict(
            Membership.OUT, l, g, c, f"odd hole of length {c.length}", b.report()
        )
    if stream.exhausted:
        return MembershipVerdict(
            Membership.UNKNOWN, l, g, None, "budget exhausted", b.report()
        )
    return MembershipVerdict(Membership.IN, l, g, None, "", b.report())
