"""Brute-force reference implementations, deliberately naive.

None of these share code with the package beyond the Graph container.
"""

from __future__ import annotations

import random
from itertools import combinations, product

from oddhole.graph import Graph, build_graph


def _connected(vertices, adj) -> bool:
    vertices = set(vertices)
    if not vertices:
        return True
    start = next(iter(vertices))
    seen = {start}
    todo = [start]
    while todo:
        v = todo.pop()
        for w in adj[v]:
            if w in vertices and w not in seen:
                seen.add(w)
                todo.append(w)
    return seen == vertices


def adjacency(G: Graph) -> list[set[int]]:
    adj = [set() for _ in range(G.n)]
    for u, v in G.edges():
        adj[u].add(v)
        adj[v].add(u)
    return adj


def induced_cycle_sets(G: Graph) -> set[frozenset[int]]:
    """Every vertex subset that induces a cycle (2-regular and connected)."""
    adj = adjacency(G)
    out = set()
    for k in range(3, G.n + 1):
        for S in combinations(range(G.n), k):
            s = set(S)
            if all(len(adj[v] & s) == 2 for v in S) and _connected(S, adj):
                out.add(frozenset(S))
    return out


def brute_girth(G: Graph) -> float:
    cyc = induced_cycle_sets(G)
    return min((len(c) for c in cyc), default=float("inf"))


def components_count(n, adj, gone_vertices=(), gone_edges=()) -> int:
    gone = set(gone_vertices)
    cut = {frozenset(e) for e in gone_edges}
    left = [v for v in range(n) if v not in gone]
    seen = set()
    count = 0
    for s in left:
        if s in seen:
            continue
        count += 1
        seen.add(s)
        todo = [s]
        while todo:
            v = todo.pop()
            for w in adj[v]:
                if w in gone or w in seen or frozenset((v, w)) in cut:
                    continue
                seen.add(w)
                todo.append(w)
    return count


def two_edge_cut_set(G: Graph) -> set[frozenset]:
    adj = adjacency(G)
    return {
        frozenset((e, f))
        for e, f in combinations(G.edges(), 2)
        if components_count(G.n, adj, gone_edges=(e, f)) > 1
    }


def k2_cut_set(G: Graph) -> set[tuple[int, int]]:
    adj = adjacency(G)
    return {
        (u, v)
        for u, v in combinations(range(G.n), 2)
        if v in adj[u] and components_count(G.n, adj, gone_vertices=(u, v)) > 1
    }


def p3_cut_set(G: Graph) -> set[frozenset[int]]:
    adj = adjacency(G)
    out = set()
    for T in combinations(range(G.n), 3):
        inside = sum(1 for a, b in combinations(T, 2) if b in adj[a])
        # an induced P3 is a connected triple with exactly two edges
        if inside == 2 and components_count(G.n, adj, gone_vertices=T) > 1:
            out.add(frozenset(T))
    return out


def brute_chromatic(G: Graph) -> int:
    if G.n == 0:
        return 0
    edges = G.edges()
    for k in range(1, G.n + 1):
        for c in product(range(k), repeat=G.n):
            if c[0] != 0:
                break
            if all(c[u] != c[v] for u, v in edges):
                return k
    return G.n


def simple_paths(adj, a, z, avoid=frozenset()):
    """All simple a-z paths whose interior avoids ``avoid``."""
    out = []

    def rec(path, seen):
        v = path[-1]
        for w in sorted(adj[v]):
            if w == z:
                out.append(tuple(path) + (z,))
            elif w not in seen and w not in avoid:
                seen.add(w)
                path.append(w)
                rec(path, seen)
                path.pop()
                seen.discard(w)

    rec([a], {a})
    return out


def is_induced(adj, seq) -> bool:
    s = set(seq)
    for i, v in enumerate(seq):
        want = set()
        if i:
            want.add(seq[i - 1])
        if i + 1 < len(seq):
            want.add(seq[i + 1])
        if adj[v] & s != want:
            return False
    return True


def jump_set(G: Graph, cycle) -> set[tuple[int, ...]]:
    """Jumps over ``cycle``, oriented from the smaller end."""
    adj = adjacency(G)
    on = set(cycle)
    out = set()
    for s, t in combinations(sorted(on), 2):
        if t in adj[s]:
            continue
        for p in simple_paths(adj, s, t, avoid=on):
            if is_induced(adj, p):
                out.add(p)
    return out


K4_PAIRS = {
    "P1": (0, 1), "P2": (2, 3), "Q1": (1, 2), "Q2": (0, 3), "L1": (0, 2), "L2": (1, 3),
}


def k4_subdivision_edge_sets(G: Graph, cap: int) -> set[frozenset]:
    """Edge sets of every K4-subdivision with arrises of length <= cap."""
    adj = adjacency(G)
    out = set()
    names = list(K4_PAIRS)
    for quad in combinations([v for v in range(G.n) if len(adj[v]) >= 3], 4):
        qs = set(quad)
        options = []
        for name in names:
            i, j = K4_PAIRS[name]
            ps = [p for p in simple_paths(adj, quad[i], quad[j], avoid=qs) if len(p) - 1 <= cap]
            options.append(ps)
        for choice in product(*options):
            inner = [v for p in choice for v in p[1:-1]]
            if len(inner) != len(set(inner)):
                continue
            edges = frozenset(frozenset(e) for p in choice for e in zip(p, p[1:]))
            out.add(edges)
    return out


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return build_graph(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def fixture_graphs(count: int = 220, n_max: int = 10, seed: int = 12345) -> list[Graph]:
    """Structured small graphs plus ``count`` seeded random ones."""
    from oddhole.generators import complete_graph, gen_cycle, gen_k4_subdivision, gen_path, gen_theta, petersen

    out = [petersen(), complete_graph(4), complete_graph(5), gen_path(5)]
    out += [gen_cycle(k) for k in range(3, n_max + 1)]
    out += [gen_theta(a, b, c) for a, b, c in ((2, 3, 3), (1, 2, 2), (2, 2, 3), (1, 3, 4), (2, 3, 4), (3, 3, 3))]
    out += [gen_k4_subdivision(s)[0] for s in ((1,) * 6, (2, 1, 1, 1, 1, 1), (2, 2, 1, 1, 1, 1), (1, 1, 2, 1, 2, 1))]
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, n_max)
        out.append(random_graph(rng, n, rng.choice((0.2, 0.3, 0.45, 0.6))))
    return out
