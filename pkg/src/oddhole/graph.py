"""Immutable simple graphs over dense integer vertices.

Every graph keeps two synchronized views of its adjacency: sorted
neighbour tuples for iteration and integer bitmaps for set algebra.  Most
search kernels in this package only touch the bitmaps.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for malformed graph construction input."""


class InvalidSequenceError(ValueError):
    """Raised when a vertex sequence is not a path/cycle of the host graph.

    Kept distinct from a ``False`` answer so callers can tell a bad query
    from a negative one.
    """


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    """Vertices of a bitmap in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Use :func:`build_graph` rather than calling the constructor directly.
    """

    __slots__ = ("n", "adj", "bits", "m", "labels", "had_duplicates", "_edges")

    def __init__(
        self,
        n: int,
        adj: Sequence[Sequence[int]],
        labels: Sequence[str] | None = None,
        had_duplicates: bool = False,
    ):
        self.n = n
        self.adj = tuple(tuple(sorted(nb)) for nb in adj)
        self.bits = tuple(mask_of(nb) for nb in self.adj)
        self.m = sum(len(nb) for nb in self.adj) // 2
        self.labels = tuple(labels) if labels is not None else None
        self.had_duplicates = had_duplicates
        self._edges = tuple(
            (u, v) for u in range(n) for v in self.adj[u] if u < v
        )

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as ``(u, v)`` with ``u < v``, lexicographically sorted."""
        return self._edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.bits[u] >> v & 1)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self.n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(
    n: int,
    edges: Iterable[tuple[int, int]],
    labels: Sequence[str] | None = None,
) -> Graph:
    """Build a graph from an edge list.

    Duplicate edges are collapsed and reported through
    ``Graph.had_duplicates``.  Self-loops and out-of-range endpoints raise
    :class:`GraphError`.
    """
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    if labels is not None and len(labels) != n:
        raise GraphError("label table size does not match vertex count")
    adj: list[set[int]] = [set() for _ in range(n)]
    dup = False
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if v in adj[u]:
            dup = True
            continue
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, adj, labels=labels, had_duplicates=dup)


def as_mask(G: Graph, S: int | Iterable[int]) -> int:
    """Accept a bitmap or an iterable of vertices; check it lies in ``G``."""
    mask = S if isinstance(S, int) else mask_of(S)
    if mask < 0 or mask >> G.n:
        raise GraphError("vertex set is not a subset of the host graph")
    return mask


def induced_subgraph(G: Graph, S: int | Iterable[int]) -> tuple[Graph, list[int]]:
    """Return ``G[S]`` relabelled to ``0..|S|-1`` and the old-vertex table.

    ``mapping[i]`` is the vertex of ``G`` that became vertex ``i``.
    """
    mask = as_mask(G, S)
    mapping = members(mask)
    index = {v: i for i, v in enumerate(mapping)}
    sub_edges = [
        (index[u], index[v]) for u, v in G.edges() if u in index and v in index
    ]
    labels = [G.label(v) for v in mapping] if G.labels is not None else None
    return build_graph(len(mapping), sub_edges, labels=labels), mapping


def edges_within(G: Graph, mask: int) -> int:
    """Edge count of ``G[mask]``."""
    total = 0
    for v in members(mask):
        total += popcount(G.bits[v] & mask)
    return total // 2


# ---------------------------------------------------------------------------
# paths and cycles


@dataclass(frozen=True)
class PathSeq:
    """An ordered vertex sequence ``v0..vk``; its length counts edges."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if not self.vertices:
            raise InvalidSequenceError("empty path")

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def ends(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    @property
    def interior(self) -> tuple[int, ...]:
        return self.vertices[1:-1]

    @property
    def mask(self) -> int:
        return mask_of(self.vertices)

    @property
    def interior_mask(self) -> int:
        return mask_of(self.interior)

    def reversed(self) -> PathSeq:
        return PathSeq(self.vertices[::-1])

    def edge_set(self) -> frozenset[tuple[int, int]]:
        vs = self.vertices
        return frozenset(_norm(vs[i], vs[i + 1]) for i in range(len(vs) - 1))

    def __len__(self) -> int:
        return self.length


@dataclass(frozen=True)
class CycleSeq:
    """A cyclically ordered vertex sequence.

    ``clockwise`` fixes which traversal direction arcs follow: when true the
    stored order is clockwise, otherwise its reverse is.
    """

    vertices: tuple[int, ...]
    clockwise: bool = True

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if len(self.vertices) < 3:
            raise InvalidSequenceError("a cycle needs at least three vertices")

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def order(self) -> tuple[int, ...]:
        """Vertices in clockwise order."""
        return self.vertices if self.clockwise else self.vertices[::-1]

    @property
    def mask(self) -> int:
        return mask_of(self.vertices)

    def flipped(self) -> CycleSeq:
        return CycleSeq(self.vertices, not self.clockwise)

    def position(self, v: int) -> int:
        """Clockwise index of ``v``; raises ValueError when ``v`` is absent."""
        try:
            return self.order.index(v)
        except ValueError:
            raise ValueError(f"vertex {v} is not on the cycle") from None

    def edge_set(self) -> frozenset[tuple[int, int]]:
        vs = self.vertices
        k = len(vs)
        return frozenset(_norm(vs[i], vs[(i + 1) % k]) for i in range(k))

    def canonical(self) -> tuple[int, ...]:
        """Rotation/reflection-free form: start at the minimum vertex and
        walk toward its smaller cycle neighbour."""
        vs = self.vertices
        k = len(vs)
        i = vs.index(min(vs))
        fwd = tuple(vs[(i + j) % k] for j in range(k))
        bwd = tuple(vs[(i - j) % k] for j in range(k))
        return fwd if fwd[1] < bwd[1] else bwd

    def __len__(self) -> int:
        return self.length


def arc(C: CycleSeq, u: int, v: int) -> PathSeq:
    """Clockwise subpath of ``C`` from ``u`` to ``v``."""
    if u == v:
        raise ValueError("arc endpoints must differ")
    order = C.order
    i, j = C.position(u), C.position(v)
    k = len(order)
    steps = (j - i) % k
    return PathSeq(tuple(order[(i + s) % k] for s in range(steps + 1)))


def arc_interior(C: CycleSeq, u: int, v: int) -> tuple[int, ...]:
    return arc(C, u, v).interior


def _check_walk(G: Graph, vs: Sequence[int], closed: bool) -> None:
    for v in vs:
        if not 0 <= v < G.n:
            raise InvalidSequenceError(f"vertex {v} not in graph")
    if len(set(vs)) != len(vs):
        raise InvalidSequenceError("repeated vertex in sequence")
    k = len(vs)
    last = k if closed else k - 1
    for i in range(last):
        a, b = vs[i], vs[(i + 1) % k]
        if not G.has_edge(a, b):
            raise InvalidSequenceError(f"{a} and {b} are not adjacent")


def check_path(G: Graph, seq: PathSeq | Sequence[int]) -> PathSeq:
    p = seq if isinstance(seq, PathSeq) else PathSeq(tuple(seq))
    _check_walk(G, p.vertices, closed=False)
    return p


def check_cycle(G: Graph, seq: CycleSeq | Sequence[int]) -> CycleSeq:
    c = seq if isinstance(seq, CycleSeq) else CycleSeq(tuple(seq))
    _check_walk(G, c.vertices, closed=True)
    return c


def is_induced_path(G: Graph, seq: PathSeq | Sequence[int]) -> bool:
    """True iff no edge of ``G`` joins two nonconsecutive path vertices.

    Raises :class:`InvalidSequenceError` if ``seq`` is not a path of ``G``.
    """
    p = check_path(G, seq)
    mask = p.mask
    vs = p.vertices
    for i, v in enumerate(vs):
        expect = 0
        if i > 0:
            expect |= 1 << vs[i - 1]
        if i + 1 < len(vs):
            expect |= 1 << vs[i + 1]
        if G.bits[v] & mask != expect:
            return False
    return True


def is_induced_cycle(G: Graph, seq: CycleSeq | Sequence[int]) -> bool:
    """True iff the only edges among the cycle's vertices are cycle edges."""
    c = check_cycle(G, seq)
    return edges_within(G, c.mask) == c.length


# ---------------------------------------------------------------------------
# edge-set calculus


@dataclass(frozen=True)
class EdgeSubgraph:
    """A subgraph given by its edges; the vertex set is whatever they touch."""

    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(
            self, "edges", frozenset(_norm(u, v) for u, v in self.edges)
        )

    @classmethod
    def of(cls, G: Graph, edges: Iterable[tuple[int, int]]) -> EdgeSubgraph:
        """Build an edge subgraph of ``G``, checking every edge exists."""
        es = frozenset(_norm(u, v) for u, v in edges)
        for u, v in es:
            if not (0 <= u < G.n and 0 <= v < G.n and G.has_edge(u, v)):
                raise GraphError(f"({u}, {v}) is not an edge of the host graph")
        return cls(es)

    @classmethod
    def from_path(cls, p: PathSeq) -> EdgeSubgraph:
        return cls(p.edge_set())

    @classmethod
    def from_cycle(cls, c: CycleSeq) -> EdgeSubgraph:
        return cls(c.edge_set())

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(v for e in self.edges for v in e)

    def __xor__(self, other: EdgeSubgraph) -> EdgeSubgraph:
        return symmetric_difference(self, other)

    def __len__(self) -> int:
        return len(self.edges)

    def as_cycle(self) -> CycleSeq | None:
        """The edge set as a single cycle, or None if it is not one."""
        if len(self.edges) < 3:
            return None
        nbrs: dict[int, list[int]] = {}
        for u, v in self.edges:
            nbrs.setdefault(u, []).append(v)
            nbrs.setdefault(v, []).append(u)
        if any(len(x) != 2 for x in nbrs.values()):
            return None
        start = min(nbrs)
        seq = [start]
        prev, cur = start, min(nbrs[start])
        while cur != start:
            seq.append(cur)
            a, b = nbrs[cur]
            prev, cur = cur, (b if a == prev else a)
        if len(seq) != len(nbrs):
            return None
        return CycleSeq(tuple(seq))


def symmetric_difference(H: EdgeSubgraph, H2: EdgeSubgraph) -> EdgeSubgraph:
    """Edge-XOR of two subgraphs; isolated vertices drop out."""
    return EdgeSubgraph(H.edges ^ H2.edges)


# ---------------------------------------------------------------------------
# connectivity


def components(
    G: Graph,
    removed: int | Iterable[int] = 0,
    removed_edges: Iterable[tuple[int, int]] = (),
) -> list[list[int]]:
    """Connected components of ``G`` minus vertices and/or edges.

    Components are sorted lists, ordered by their smallest vertex.
    """
    gone = as_mask(G, removed)
    cut: dict[int, int] = {}
    for u, v in removed_edges:
        cut[u] = cut.get(u, 0) | (1 << v)
        cut[v] = cut.get(v, 0) | (1 << u)
    bits = G.bits
    left = G.all_mask & ~gone
    out = []
    while left:
        low = left & -left
        comp = low
        frontier = low
        while frontier:
            nxt = 0
            for v in members(frontier):
                nxt |= bits[v] & ~cut.get(v, 0)
            frontier = nxt & left & ~comp
            comp |= frontier
        left &= ~comp
        out.append(members(comp))
    return out


def component_masks(G: Graph, alive: int) -> list[int]:
    """Components of ``G[alive]`` as bitmaps (fast path for cut searches)."""
    bits = G.bits
    out = []
    while alive:
        comp = alive & -alive
        frontier = comp
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= bits[low.bit_length() - 1]
                f ^= low
            frontier = nxt & alive & ~comp
            comp |= frontier
        alive &= ~comp
        out.append(comp)
    return out


def is_connected(G: Graph) -> bool:
    return G.n == 0 or len(component_masks(G, G.all_mask)) == 1


def relabel(G: Graph, order: Sequence[int]) -> Graph:
    """Graph with old vertex ``order[i]`` renamed to ``i``."""
    index = {v: i for i, v in enumerate(order)}
    return build_graph(G.n, [(index[u], index[v]) for u, v in G.edges()])

