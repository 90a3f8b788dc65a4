"""Parameterized graph families and randomized/exhaustive generators."""

from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Iterator, Sequence

from .graph import Graph, GraphError, PathSeq, build_graph
from .holes import girth

ARRIS_NAMES = ("P1", "P2", "Q1", "Q2", "L1", "L2")

# arris name -> (index of start branch vertex, index of end branch vertex)
ARRIS_ENDS = {
    "P1": (0, 1),
    "P2": (2, 3),
    "Q1": (1, 2),
    "Q2": (0, 3),
    "L1": (0, 2),
    "L2": (1, 3),
}


def gen_cycle(k: int) -> Graph:
    if k < 3:
        raise GraphError("a cycle needs at least three vertices")
    return build_graph(k, [(i, (i + 1) % k) for i in range(k)])


def gen_path(k: int) -> Graph:
    """Path with ``k`` edges."""
    return build_graph(k + 1, [(i, i + 1) for i in range(k)])


def gen_theta(a: int, b: int, c: int) -> Graph:
    """Theta graph: hubs 0 and 1 joined by paths of lengths ``a <= b <= c``."""
    if not a <= b <= c:
        raise GraphError("theta branch lengths must satisfy a <= b <= c")
    return gen_multi_theta((a, b, c))


def gen_multi_theta(lengths: Sequence[int]) -> Graph:
    """Hubs 0 and 1 joined by internally disjoint paths of the given lengths.

    Branch interiors are numbered consecutively, branch by branch, starting
    at vertex 2 and running from hub 0 toward hub 1.
    """
    if len(lengths) < 2:
        raise GraphError("need at least two branches")
    if any(x < 1 for x in lengths):
        raise GraphError("branch lengths must be positive")
    if sum(1 for x in lengths if x == 1) > 1:
        raise GraphError("two branches of length 1 would be parallel edges")
    edges = []
    nxt = 2
    for length in lengths:
        chain = [0] + list(range(nxt, nxt + length - 1)) + [1]
        nxt += length - 1
        edges.extend(zip(chain, chain[1:]))
    return build_graph(nxt, edges)


def theta_branches(lengths: Sequence[int]) -> list[PathSeq]:
    """Branches of :func:`gen_multi_theta` as hub-0-to-hub-1 paths."""
    out = []
    nxt = 2
    for length in lengths:
        out.append(PathSeq((0,) + tuple(range(nxt, nxt + length - 1)) + (1,)))
        nxt += length - 1
    return out


def petersen() -> Graph:
    """Generalized Petersen graph GP(5, 2): outer 0..4, inner 5..9."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


# ---------------------------------------------------------------------------
# K4-subdivisions with prescribed arris lengths


@dataclass(frozen=True)
class LabeledK4Spec:
    """Arris lengths ``(|P1|, |P2|, |Q1|, |Q2|, |L1|, |L2|)``."""

    P1: int
    P2: int
    Q1: int
    Q2: int
    L1: int
    L2: int

    def __post_init__(self):
        for name in ARRIS_NAMES:
            if getattr(self, name) < 1:
                raise GraphError(f"arris {name} must have length >= 1")

    def lengths(self) -> tuple[int, ...]:
        return tuple(getattr(self, name) for name in ARRIS_NAMES)


def gen_k4_subdivision(spec: LabeledK4Spec | Sequence[int]):
    """Build a subdivided K4 and its labelling.

    Branch vertices ``u1..u4`` are 0..3; interiors follow in arris order.
    Returns ``(graph, K4Subdivision)``.
    """
    from .k4 import K4Subdivision

    if not isinstance(spec, LabeledK4Spec):
        spec = LabeledK4Spec(*spec)
    branch = (0, 1, 2, 3)
    nxt = 4
    edges = []
    arrises = {}
    for name in ARRIS_NAMES:
        i, j = ARRIS_ENDS[name]
        length = getattr(spec, name)
        chain = (branch[i],) + tuple(range(nxt, nxt + length - 1)) + (branch[j],)
        nxt += length - 1
        edges.extend(zip(chain, chain[1:]))
        arrises[name] = PathSeq(chain)
    G = build_graph(nxt, edges)
    return G, K4Subdivision(branch, arrises)


# ---------------------------------------------------------------------------
# random graphs with a girth floor


@dataclass
class RandomGraphResult:
    graph: Graph
    complete: bool
    attempts: int


def _distance_at_least(adj: list[set[int]], u: int, v: int, bound: int) -> bool:
    """True iff ``d(u, v) >= bound`` in the current graph."""
    seen = {u}
    frontier = [u]
    for _ in range(bound - 1):
        nxt = []
        for x in frontier:
            for y in adj[x]:
                if y == v:
                    return False
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        if not nxt:
            return True
        frontier = nxt
    return True


def random_girth_graph(
    n: int,
    m: int,
    g_min: int,
    seed: int,
    max_restarts: int = 2000,
    connected: bool = False,
) -> RandomGraphResult:
    """Random graph with ``m`` edges and girth at least ``g_min``.

    Each attempt scans all vertex pairs in a shuffled order and keeps an
    edge when its endpoints are at distance ``>= g_min - 1``.  Distances only
    shrink, so one scan produces a maximal graph; attempts restart until
    ``m`` edges are reached.  If every attempt falls short the best partial
    graph is returned with ``complete=False``.

    With ``connected=True`` each attempt starts from a random recursive
    spanning tree, so the result is connected (and ``m >= n - 1`` is needed).
    """
    if n < 1 or m < 0 or g_min < 3:
        raise GraphError("infeasible random-graph parameters")
    if m > n * (n - 1) // 2:
        raise GraphError("more edges than vertex pairs")
    if connected and m < n - 1:
        raise GraphError("a connected graph needs at least n - 1 edges")
    rng = random.Random(seed)
    pairs = list(combinations(range(n), 2))
    best: list[tuple[int, int]] = []
    for attempt in range(1, max_restarts + 1):
        adj: list[set[int]] = [set() for _ in range(n)]
        chosen = []
        if connected:
            order = list(range(n))
            rng.shuffle(order)
            for i in range(1, n):
                u, v = order[i], order[rng.randrange(i)]
                adj[u].add(v)
                adj[v].add(u)
                chosen.append((min(u, v), max(u, v)))
        if len(chosen) == m:
            return RandomGraphResult(build_graph(n, chosen), True, attempt)
        rng.shuffle(pairs)
        for u, v in pairs:
            if v in adj[u]:
                continue
            if _distance_at_least(adj, u, v, g_min - 1):
                adj[u].add(v)
                adj[v].add(u)
                chosen.append((u, v))
                if len(chosen) == m:
                    return RandomGraphResult(build_graph(n, chosen), True, attempt)
        if len(chosen) > len(best):
            best = chosen
    return RandomGraphResult(build_graph(n, best), False, max_restarts)


# ---------------------------------------------------------------------------
# exhaustive girth-5 enumeration


EXHAUSTIVE_LIMITS = {5: 12}

_PERMUTATION_CAP = 720


def _refine(n: int, adj: list[frozenset[int]]) -> list[int]:
    """Colour refinement; returns an isomorphism-invariant vertex colouring."""
    colors = [len(adj[v]) for v in range(n)]
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(n)]
        table = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [table[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def canonical_string(G: Graph) -> str:
    """Adjacency bit string under an isomorphism-invariant vertex order.

    Vertices are ordered by refined colour class.  When the classes allow at
    most a few hundred orderings the lexicographically smallest adjacency
    string over all of them is taken, which is a true canonical form;
    otherwise ties fall back to vertex index and isomorphic copies may keep
    distinct strings.  Equal strings always mean isomorphic graphs.
    """
    n = G.n
    adj = [frozenset(G.adj[v]) for v in range(n)]
    colors = _refine(n, adj)
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(colors[v], []).append(v)
    ordered = [cells[c] for c in sorted(cells)]
    count = 1
    for cell in ordered:
        count *= math.factorial(len(cell))
        if count > _PERMUTATION_CAP:
            break

    def encode(order: Sequence[int]) -> str:
        pos = {v: i for i, v in enumerate(order)}
        bits = ["0"] * (n * (n - 1) // 2)
        for u, v in G.edges():
            a, b = sorted((pos[u], pos[v]))
            bits[b * (b - 1) // 2 + a] = "1"
        return "".join(bits)

    if count > _PERMUTATION_CAP:
        return encode([v for cell in ordered for v in cell])
    best = None
    for choice in product(*(permutations(cell) for cell in ordered)):
        s = encode([v for cell in choice for v in cell])
        if best is None or s < best:
            best = s
    return best


def _pairwise_far(adj: list[set[int]], n: int, need: int) -> list[int]:
    """Bitmask per vertex of vertices at distance >= ``need`` from it."""
    far = []
    for u in range(n):
        dist = {u: 0}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            if dist[x] + 1 >= need:
                continue
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        mask = 0
        for v in range(n):
            if v not in dist:
                mask |= 1 << v
        far.append(mask)
    return far


def exhaustive_girth_graphs(n_max: int, g: int) -> Iterator[Graph]:
    """Every connected graph on at most ``n_max`` vertices with girth ``g``.

    Graphs are grown one vertex at a time: a connected graph of girth at
    least ``g`` always has a vertex whose deletion keeps it connected and
    keeps the girth bound, so attaching a new vertex to every set of current
    vertices that are pairwise at distance ``>= g - 2`` reaches all of them.
    Each level is deduplicated by :func:`canonical_string`; isomorphic
    duplicates may survive but no isomorphism class is lost.
    """
    limit = EXHAUSTIVE_LIMITS.get(g)
    if limit is None:
        raise GraphError(f"exhaustive enumeration is only offered for girth {sorted(EXHAUSTIVE_LIMITS)}")
    if n_max > limit:
        raise GraphError(f"n_max={n_max} exceeds the tractability guard {limit} for girth {g}")
    level = {canonical_string(build_graph(1, [])): build_graph(1, [])}
    for n in range(1, n_max + 1):
        for G in level.values():
            if girth(G) == g:
                yield G
        if n == n_max:
            return
        nxt: dict[str, Graph] = {}
        for G in level.values():
            adj = [set(G.adj[v]) for v in range(n)]
            far = _pairwise_far(adj, n, g - 2)
            for S in _independent_far_sets(n, far):
                H = build_graph(n + 1, list(G.edges()) + [(v, n) for v in S])
                key = canonical_string(H)
                if key not in nxt:
                    nxt[key] = H
        level = nxt


def _independent_far_sets(n: int, far: list[int]) -> Iterator[list[int]]:
    """Nonempty vertex sets whose members are pairwise ``far``."""

    def rec(start: int, chosen: list[int], allowed: int):
        for v in range(start, n):
            if allowed >> v & 1:
                chosen.append(v)
                yield list(chosen)
                yield from rec(v + 1, chosen, allowed & far[v])
                chosen.pop()

    yield from rec(0, [], (1 << n) - 1)
