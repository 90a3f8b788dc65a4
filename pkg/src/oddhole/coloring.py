"""Exact k-colouring with certificates and the chromatic number."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Mapping

from .budget import SearchBudget, fresh
from .graph import Graph


class ColorOutcome(str, Enum):
    COLORING = "Coloring"
    EXHAUSTED = "Exhausted"
    UNKNOWN = "Unknown"


@dataclass
class ColorResult:
    outcome: ColorOutcome
    k: int
    coloring: dict[int, int] | None = None
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.outcome is ColorOutcome.COLORING


def verify_coloring(G: Graph, c: Mapping[int, int], k: int | None = None) -> bool:
    """True iff ``c`` is a proper colouring (and uses colours ``1..k``).

    A mapping that misses a vertex raises ValueError rather than answering.
    """
    missing = [v for v in range(G.n) if v not in c]
    if missing:
        raise ValueError(f"colouring is not total: missing {missing[:5]}")
    if k is not None and any(not 1 <= c[v] <= k for v in range(G.n)):
        return False
    return all(c[u] != c[v] for u, v in G.edges())


def k_colorable(G: Graph, k: int, budget: SearchBudget | int | None = None) -> ColorResult:
    """Decide ``k``-colourability by DSATUR-ordered backtracking.

    The next vertex is the uncoloured one with the most distinct colours
    among its neighbours (ties: higher degree, then lower index).  Colours
    are tried in increasing order and at most one previously unused colour
    is opened per step, which removes colour-permutation symmetry.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    b = fresh(budget)
    n = G.n
    if n == 0:
        return ColorResult(ColorOutcome.COLORING, k, {}, 0)
    adj = G.adj
    color = [0] * n
    # sat[v][c] counts coloured neighbours of v with colour c
    sat = [[0] * (k + 1) for _ in range(n)]
    satdeg = [0] * n
    start = b.used

    def pick() -> int:
        best = -1
        key = None
        for v in range(n):
            if color[v]:
                continue
            kv = (satdeg[v], len(adj[v]), -v)
            if key is None or kv > key:
                best, key = v, kv
        return best

    def assign(v: int, c: int) -> None:
        color[v] = c
        for w in adj[v]:
            if sat[w][c] == 0:
                satdeg[w] += 1
            sat[w][c] += 1

    def unassign(v: int) -> None:
        c = color[v]
        color[v] = 0
        for w in adj[v]:
            sat[w][c] -= 1
            if sat[w][c] == 0:
                satdeg[w] -= 1

    # iterative backtracking; each frame is (vertex, next colour to try, opened)
    used_colors = 0
    stack: list[list[int]] = []
    v = pick()
    stack.append([v, 1, used_colors])
    aborted = False
    while stack:
        frame = stack[-1]
        v, c, before = frame
        if color[v]:
            unassign(v)
            used_colors = before
        limit = min(k, before + 1)
        while c <= limit and sat[v][c]:
            c += 1
        if c > limit:
            stack.pop()
            continue
        if not b.tick():
            aborted = True
            break
        frame[1] = c + 1
        assign(v, c)
        used_colors = max(before, c)
        nxt = pick()
        if nxt < 0:
            coloring = {u: color[u] for u in range(n)}
            if not verify_coloring(G, coloring, k):
                raise RuntimeError("solver produced an improper colouring")
            return ColorResult(ColorOutcome.COLORING, k, coloring, b.used - start)
        stack.append([nxt, 1, used_colors])
    if aborted:
        return ColorResult(ColorOutcome.UNKNOWN, k, None, b.used - start)
    return ColorResult(ColorOutcome.EXHAUSTED, k, None, b.used - start)


@dataclass
class ChromaticResult:
    value: int | None
    coloring: dict[int, int] | None
    lower_witness: str = ""

    @property
    def known(self) -> bool:
        return self.value is not None


def chromatic_number(G: Graph, budget: SearchBudget | int | None = None) -> ChromaticResult:
    """Least ``k`` with a colouring at ``k`` and a completed refutation at ``k-1``.

    ``value`` is None when some refutation ran out of budget.
    """
    b = fresh(budget)
    if G.n == 0:
        return ChromaticResult(0, {}, "empty graph")
    k = 1 if G.m == 0 else 2
    while True:
        res = k_colorable(G, k, b)
        if res.outcome is ColorOutcome.UNKNOWN:
            return ChromaticResult(None, None, f"budget exhausted at k={k}")
        if res.found:
            if k == 1:
                why = "edgeless"
            elif k == 2:
                why = "has an edge"
            else:
                why = f"search at k={k - 1} exhausted"
            return ChromaticResult(k, res.coloring, why)
        k += 1
