"""Small separators (degree-2 vertices, 2-edge-cuts, K2-cuts, P3-cuts) and
vertex-criticality."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Iterator

from .budget import SearchBudget, fresh
from .coloring import ColorOutcome, chromatic_number, k_colorable
from .graph import Graph, component_masks, components, induced_subgraph, is_connected


class CutKind(str, Enum):
    DEGREE2 = "Degree2"
    TWO_EDGE_CUT = "TwoEdgeCut"
    K2_CUT = "K2Cut"
    P3_CUT = "P3Cut"


@dataclass(frozen=True)
class CutWitness:
    kind: CutKind
    elements: tuple
    pieces: int

    def to_json(self) -> dict:
        elements = [list(e) if isinstance(e, tuple) else e for e in self.elements]
        return {"kind": self.kind.value, "elements": elements, "pieces": self.pieces}


def _require_connected(G: Graph) -> None:
    if not is_connected(G):
        raise ValueError("cut detection needs a connected graph")


def degree_two_vertices(G: Graph) -> list[int]:
    return [v for v in range(G.n) if G.degree(v) == 2]


def _bridges(G: Graph, skip: tuple[int, int]) -> list[tuple[int, int]]:
    """Bridges of ``G`` with the edge ``skip`` deleted (iterative lowpoint)."""
    n = G.n
    a, b = skip
    disc = [-1] * n
    low = [0] * n
    out = []
    t = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = t
        t += 1
        stack = [(root, -1, iter(G.adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if (v, w) in ((a, b), (b, a)) or w == parent:
                    continue
                if disc[w] < 0:
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, v, iter(G.adj[w])))
                    advanced = True
                    break
                low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[v])
                if low[v] > disc[parent]:
                    out.append((min(v, parent), max(v, parent)))
    return out


def two_edge_cuts(G: Graph) -> Iterator[CutWitness]:
    """Every edge pair whose deletion disconnects ``G``.

    For each edge ``e`` the partners are exactly the bridges of ``G - e``
    (every edge is a partner when ``e`` itself is a bridge).
    """
    _require_connected(G)
    edges = G.edges()
    index = {e: i for i, e in enumerate(edges)}
    for i, e in enumerate(edges):
        partners = _bridges(G, e)
        is_bridge = len(components(G, removed_edges=[e])) > 1
        cands = edges[i + 1:] if is_bridge else sorted(f for f in partners if index[f] > i)
        for f in cands:
            pieces = len(components(G, removed_edges=[e, f]))
            yield CutWitness(CutKind.TWO_EDGE_CUT, (e, f), pieces)


def _pieces(G: Graph, removed: int) -> int:
    return len(component_masks(G, G.all_mask & ~removed))


def k2_cuts(G: Graph) -> Iterator[CutWitness]:
    """Adjacent pairs whose removal disconnects ``G``."""
    _require_connected(G)
    for u, v in G.edges():
        p = _pieces(G, (1 << u) | (1 << v))
        if p > 1:
            yield CutWitness(CutKind.K2_CUT, (u, v), p)


def induced_p3s(G: Graph) -> Iterator[tuple[int, int, int]]:
    """Triples ``(x, y, z)`` with ``x < z`` inducing the path ``x-y-z``."""
    for y in range(G.n):
        for x, z in combinations(G.adj[y], 2):
            if not G.has_edge(x, z):
                yield (x, y, z)


def p3_cuts(G: Graph) -> Iterator[CutWitness]:
    """Induced two-edge paths whose vertex set disconnects ``G``."""
    _require_connected(G)
    for x, y, z in induced_p3s(G):
        p = _pieces(G, (1 << x) | (1 << y) | (1 << z))
        if p > 1:
            yield CutWitness(CutKind.P3_CUT, (x, y, z), p)


def verify_cut(G: Graph, w: CutWitness) -> bool:
    """Re-check a witness by direct component counting."""
    if w.kind is CutKind.DEGREE2:
        (v,) = w.elements
        return G.degree(v) == 2
    if w.kind is CutKind.TWO_EDGE_CUT:
        e, f = w.elements
        if not (G.has_edge(*e) and G.has_edge(*f)) or e == f:
            return False
        return len(components(G, removed_edges=[e, f])) > 1
    if w.kind is CutKind.K2_CUT:
        u, v = w.elements
        return G.has_edge(u, v) and len(components(G, removed=[u, v])) > 1
    x, y, z = w.elements
    shape = G.has_edge(x, y) and G.has_edge(y, z) and not G.has_edge(x, z)
    return shape and len(components(G, removed=[x, y, z])) > 1


# ---------------------------------------------------------------------------
# criticality


@dataclass
class CriticalityResult:
    critical: bool | None
    k: int
    chromatic: int | None
    reason: str
    deletion_colorings: dict[int, dict[int, int]] = field(default_factory=dict)
    failing_vertex: int | None = None
    coloring: dict[int, int] | None = None

    def to_json(self) -> dict:
        return {
            "critical": self.critical,
            "k": self.k,
            "chromatic": self.chromatic,
            "reason": self.reason,
            "failing_vertex": self.failing_vertex,
            "coloring": None if self.coloring is None else [self.coloring[v] for v in sorted(self.coloring)],
        }


def is_k_vertex_critical(G: Graph, k: int, budget: SearchBudget | int | None = None) -> CriticalityResult:
    """``chi(G) = k`` and every single-vertex deletion is ``(k-1)``-colourable.

    ``critical`` is None when a colouring search ran out of budget.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    b = fresh(budget)
    if G.n == 0:
        return CriticalityResult(False, k, 0, "empty graph")
    below = k_colorable(G, k - 1, b) if k > 1 else None
    if below is not None:
        if below.outcome is ColorOutcome.UNKNOWN:
            return CriticalityResult(None, k, None, f"budget exhausted at k={k - 1}")
        if below.found:
            chi = chromatic_number(G, b).value
            return CriticalityResult(
                False, k, chi, f"G is {k - 1}-colourable", coloring=below.coloring
            )
    at = k_colorable(G, k, b)
    if at.outcome is ColorOutcome.UNKNOWN:
        return CriticalityResult(None, k, None, f"budget exhausted at k={k}")
    if not at.found:
        return CriticalityResult(False, k, None, f"G is not {k}-colourable")
    evidence = {}
    for v in range(G.n):
        H, mapping = induced_subgraph(G, G.all_mask & ~(1 << v))
        res = k_colorable(H, max(k - 1, 1), b) if k > 1 else None
        if res is None:
            # only K1 is 1-critical
            if H.n:
                return CriticalityResult(False, k, k, "deletion keeps chromatic number", failing_vertex=v)
            evidence[v] = {}
            continue
        if res.outcome is ColorOutcome.UNKNOWN:
            return CriticalityResult(None, k, k, f"budget exhausted deleting {v}", evidence)
        if not res.found:
            return CriticalityResult(
                False, k, k, "deletion keeps chromatic number", evidence,
                failing_vertex=v, coloring=at.coloring,
            )
        evidence[v] = {mapping[i]: c for i, c in res.coloring.items()}
    return CriticalityResult(
        True, k, k, "all deletions drop the chromatic number", evidence, coloring=at.coloring
    )
