"""Subdivided K4 subgraphs: search, classification and structure checks.

A subdivision is stored with branch vertices ``(u1, u2, u3, u4)`` and six
arrises oriented as

    P1: u1-u2   P2: u3-u4   Q1: u2-u3   Q2: u1-u4   L1: u1-u3   L2: u2-u4

so that the three vertex-disjoint arris pairs are {P1, P2}, {Q1, Q2} and
{L1, L2}.  The face cycles are C1 = P1+Q1+L1, C2 = P1+Q2+L2,
C3 = P2+Q1+L2 and C4 = C1 ^ C2 ^ C3 = L1+P2+Q2.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from itertools import combinations, permutations
from typing import Iterator, Mapping, Sequence

from .budget import BudgetedStream, SearchBudget, fresh
from .generators import ARRIS_ENDS, ARRIS_NAMES
from .graph import (
    CycleSeq,
    EdgeSubgraph,
    Graph,
    InvalidSequenceError,
    PathSeq,
    check_path,
    edges_within,
    mask_of,
    members,
    popcount,
)
from .results import Report, Status

_PAIR_TO_NAME = {frozenset(ends): name for name, ends in ARRIS_ENDS.items()}

OPPOSITE = {"P1": "P2", "P2": "P1", "Q1": "Q2", "Q2": "Q1", "L1": "L2", "L2": "L1"}


class K4Class(str, Enum):
    ODD_REGULAR = "odd-regular"
    ODD_IRREGULAR = "odd-irregular"
    BALANCED_1_2 = "balanced(1,2)"
    OTHER = "other"

    @property
    def is_odd(self) -> bool:
        return self in (K4Class.ODD_REGULAR, K4Class.ODD_IRREGULAR)


@dataclass(frozen=True)
class K4Subdivision:
    branch: tuple[int, int, int, int]
    paths: tuple[PathSeq, ...]

    def __init__(self, branch: Sequence[int], arrises: Mapping[str, PathSeq] | Sequence[PathSeq]):
        if isinstance(arrises, Mapping):
            arrises = [arrises[name] for name in ARRIS_NAMES]
        paths = tuple(p if isinstance(p, PathSeq) else PathSeq(tuple(p)) for p in arrises)
        branch = tuple(branch)
        if len(branch) != 4 or len(set(branch)) != 4 or len(paths) != 6:
            raise ValueError("a K4-subdivision needs four branch vertices and six arrises")
        for name, p in zip(ARRIS_NAMES, paths):
            i, j = ARRIS_ENDS[name]
            if p.ends != (branch[i], branch[j]):
                raise ValueError(f"arris {name} must run from u{i + 1} to u{j + 1}")
        seen = set(branch)
        for p in paths:
            inner = set(p.interior)
            if inner & seen:
                raise ValueError("arrises are not internally disjoint")
            seen |= inner
        object.__setattr__(self, "branch", branch)
        object.__setattr__(self, "paths", paths)

    def arris(self, name: str) -> PathSeq:
        return self.paths[ARRIS_NAMES.index(name)]

    def lengths(self) -> dict[str, int]:
        return {name: p.length for name, p in zip(ARRIS_NAMES, self.paths)}

    @property
    def mask(self) -> int:
        m = 0
        for p in self.paths:
            m |= p.mask
        return m

    def vertex_set(self) -> list[int]:
        return members(self.mask)

    def edge_set(self) -> frozenset[tuple[int, int]]:
        out: frozenset = frozenset()
        for p in self.paths:
            out |= p.edge_set()
        return out

    def key(self) -> frozenset[tuple[int, int]]:
        """Identity as a subgraph, independent of labelling."""
        return self.edge_set()

    def face_lengths(self) -> tuple[int, int, int, int]:
        ln = self.lengths()
        return (
            ln["P1"] + ln["Q1"] + ln["L1"],
            ln["P1"] + ln["Q2"] + ln["L2"],
            ln["P2"] + ln["Q1"] + ln["L2"],
            ln["L1"] + ln["P2"] + ln["Q2"],
        )

    def faces(self) -> tuple[CycleSeq, CycleSeq, CycleSeq, CycleSeq]:
        a = self.arris
        c1 = _join(a("P1"), a("Q1"), a("L1").reversed())
        c2 = _join(a("P1"), a("L2"), a("Q2").reversed())
        c3 = _join(a("Q1"), a("P2"), a("L2").reversed())
        e4 = (
            EdgeSubgraph.from_cycle(c1)
            ^ EdgeSubgraph.from_cycle(c2)
            ^ EdgeSubgraph.from_cycle(c3)
        )
        c4 = e4.as_cycle()
        assert c4 is not None, "C1 ^ C2 ^ C3 must be a cycle"
        return c1, c2, c3, c4

    def relabel(self, perm: Sequence[int]) -> K4Subdivision:
        """New labelling with ``u_i := old u_{perm[i]}`` (0-based)."""
        old = self.branch
        new_branch = tuple(old[p] for p in perm)
        arrises = {}
        for name in ARRIS_NAMES:
            i, j = ARRIS_ENDS[name]
            a, b = new_branch[i], new_branch[j]
            oi, oj = old.index(a), old.index(b)
            src = _PAIR_TO_NAME[frozenset((oi, oj))]
            p = self.arris(src)
            arrises[name] = p if p.ends[0] == a else p.reversed()
        return K4Subdivision(new_branch, arrises)

    def labelings(self) -> Iterator[K4Subdivision]:
        for perm in permutations(range(4)):
            yield self.relabel(perm)

    def to_json(self) -> dict:
        return {
            "branch": list(self.branch),
            "arrises": {name: list(p.vertices) for name, p in zip(ARRIS_NAMES, self.paths)},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> K4Subdivision:
        return cls(data["branch"], {k: PathSeq(tuple(v)) for k, v in data["arrises"].items()})


def _join(*parts: PathSeq) -> CycleSeq:
    seq: list[int] = []
    for p in parts:
        seq.extend(p.vertices[:-1])
    return CycleSeq(tuple(seq))


def check_subdivision(G: Graph, H: K4Subdivision) -> None:
    """Raise InvalidSequenceError unless every arris is a path of ``G``."""
    for p in H.paths:
        check_path(G, p)


# ---------------------------------------------------------------------------
# classification


def is_odd(H: K4Subdivision) -> bool:
    return all(f % 2 == 1 for f in H.face_lengths())


def _balanced_under(H: K4Subdivision) -> bool:
    c1, c2, c3, c4 = H.face_lengths()
    ln = H.lengths()
    return (
        c1 % 2 == 1
        and c2 % 2 == 1
        and c3 % 2 == 0
        and c4 % 2 == 0
        and ln["Q1"] == 1
        and ln["L2"] >= 2
    )


def balanced_labeling(H: K4Subdivision) -> K4Subdivision | None:
    """A relabelling that exhibits the balanced (1,2) pattern, if any."""
    for cand in H.labelings():
        if _balanced_under(cand):
            return cand
    return None


def classify(H: K4Subdivision) -> K4Class:
    """Odd (regular or not), balanced of type (1,2), or other.

    Oddness only depends on the set of faces, so it is labelling-free; the
    balanced pattern is tried under all 24 labellings.
    """
    if is_odd(H):
        if len(set(H.lengths().values())) == 1:
            return K4Class.ODD_REGULAR
        return K4Class.ODD_IRREGULAR
    if balanced_labeling(H) is not None:
        return K4Class.BALANCED_1_2
    return K4Class.OTHER


def faces_are_holes(G: Graph, H: K4Subdivision) -> bool:
    """Whether all four face cycles are holes (induced, length >= 4) of ``G``."""
    for C in H.faces():
        if C.length < 4 or edges_within(G, C.mask) != C.length:
            return False
    return True


def classify_in(G: Graph, H: K4Subdivision) -> K4Class:
    """:func:`classify` with the faces also required to be holes of ``G``.

    The parity tag alone ignores the host graph; a subgraph whose odd faces
    have chords in ``G`` is reported as OTHER here.
    """
    tag = classify(H)
    if tag is not K4Class.OTHER and not faces_are_holes(G, H):
        return K4Class.OTHER
    return tag


def normalized(H: K4Subdivision) -> K4Subdivision:
    """Labelling with P1 a longest arris and P2 as long as possible after it.

    Ties go to the lexicographically smallest branch tuple.
    """
    best = None
    best_key = None
    for cand in H.labelings():
        ln = cand.lengths()
        key = (-ln["P1"], -ln["P2"], cand.branch)
        if best_key is None or key < best_key:
            best, best_key = cand, key
    return best


def difference(H: K4Subdivision) -> int:
    """``|P1| - min(|Q1|, |L1|)`` under the longest-pair normalization."""
    if not is_odd(H):
        raise ValueError("difference is defined for odd K4-subdivisions only")
    N = normalized(H)
    ln = N.lengths()
    return ln["P1"] - min(ln["Q1"], ln["L1"])


# ---------------------------------------------------------------------------
# search


def find_k4_subdivisions(
    G: Graph,
    max_arris_len: int | None = None,
    budget: SearchBudget | int | None = None,
) -> BudgetedStream:
    """Stream every K4-subdivision subgraph whose arrises are all short enough.

    Branch quadruples are taken in increasing order and labelled
    ``u1 < u2 < u3 < u4``; the six arrises are then chosen by backtracking
    over internally disjoint paths.  Each subgraph is emitted exactly once.
    """
    b = fresh(budget)
    cap = max_arris_len if max_arris_len is not None else max(G.n - 1, 1)
    return BudgetedStream(_k4_search(G, cap, b), b)


_SEARCH_ORDER = ("P1", "Q1", "L1", "Q2", "L2", "P2")


def _k4_search(G: Graph, cap: int, budget: SearchBudget):
    cands = [v for v in range(G.n) if G.degree(v) >= 3]
    bits = G.bits
    for quad in combinations(cands, 4):
        bmask = mask_of(quad)
        dist = {}
        for v in quad:
            dist[v] = _bfs_avoiding(G, v, bmask & ~(1 << v))
        chosen: dict[str, tuple[int, ...]] = {}

        def rec(idx: int, used: int):
            if idx == 6:
                yield K4Subdivision(quad, {k: PathSeq(v) for k, v in chosen.items()})
                return
            name = _SEARCH_ORDER[idx]
            i, j = ARRIS_ENDS[name]
            a, z = quad[i], quad[j]
            for p in _simple_paths(bits, a, z, used | (bmask & ~(1 << z)), cap, dist[z], budget):
                chosen[name] = p
                yield from rec(idx + 1, used | mask_of(p[1:-1]))
                del chosen[name]
                if budget.exhausted:
                    return

        yield from rec(0, 0)
        if budget.exhausted:
            return


def _bfs_avoiding(G: Graph, root: int, avoid: int) -> dict[int, int]:
    dist = {root: 0}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in G.adj[u]:
            if w not in dist and not avoid >> w & 1:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def _simple_paths(bits, a: int, z: int, avoid: int, cap: int, dist_z, budget):
    """Simple a-z paths with no interior vertex in ``avoid``."""
    path = [a]
    pmask = 1 << a
    stack = [bits[a] & ~pmask]
    while stack:
        cand = stack[-1]
        if not cand:
            stack.pop()
            pmask ^= 1 << path.pop()
            continue
        low = cand & -cand
        stack[-1] = cand ^ low
        if not budget.tick():
            return
        w = low.bit_length() - 1
        edges = len(path)
        if w == z:
            yield tuple(path) + (z,)
            continue
        if avoid >> w & 1:
            continue
        d = dist_z.get(w)
        if d is None or edges + d > cap:
            continue
        path.append(w)
        pmask |= low
        stack.append(bits[w] & ~pmask)


# ---------------------------------------------------------------------------
# structure of odd subdivisions inside the family


def odd_k4_structure_flags(G: Graph, l: int, H: K4Subdivision) -> dict:
    """The three structural facts expected of an odd subdivision.

    ``pairs``: opposite arrises have equal length, at most ``l``;
    ``induced``: ``H`` is an induced subgraph of ``G``;
    ``no_double_neighbour``: no outside vertex sees two vertices of ``H``
    (only asserted for ``l >= 3``; None otherwise).
    """
    ln = H.lengths()
    pair_detail = {}
    pairs_ok = True
    for a, b in (("P1", "P2"), ("Q1", "Q2"), ("L1", "L2")):
        ok = ln[a] == ln[b] <= l
        pair_detail[f"{a}/{b}"] = [ln[a], ln[b]]
        pairs_ok &= ok
    hm = H.mask
    induced = edges_within(G, hm) == len(H.edge_set())
    offenders = []
    if l >= 3:
        for v in range(G.n):
            if not hm >> v & 1 and popcount(G.bits[v] & hm) >= 2:
                offenders.append(v)
    return {
        "pairs": pairs_ok,
        "pair_lengths": pair_detail,
        "induced": induced,
        "no_double_neighbour": (not offenders) if l >= 3 else None,
        "double_neighbours": offenders,
    }


def verify_odd_k4_structure(G: Graph, l: int, H: K4Subdivision, member: bool) -> dict[str, Report]:
    """Reports for the pair-length, inducedness and outside-neighbour facts.

    ``member`` says whether ``G`` was certified in the family for ``l``;
    when it was not, or ``H`` is not odd, every part is Skipped.
    """
    parts = ("pairs", "induced", "no_double_neighbour")
    if not member:
        return {p: Report.skipped("graph not certified in the family") for p in parts}
    try:
        check_subdivision(G, H)
    except InvalidSequenceError as exc:
        return {p: Report.skipped(f"not a subdivision of G: {exc}") for p in parts}
    if not is_odd(H):
        return {p: Report.skipped("subdivision is not odd") for p in parts}
    if not faces_are_holes(G, H):
        return {p: Report.skipped("face cycles are not holes of G") for p in parts}
    flags = odd_k4_structure_flags(G, l, H)
    out = {}
    out["pairs"] = Report(
        Status.PASS if flags["pairs"] else Status.FAIL, {"pair_lengths": flags["pair_lengths"]}
    )
    out["induced"] = Report(Status.PASS if flags["induced"] else Status.FAIL, {})
    if flags["no_double_neighbour"] is None:
        out["no_double_neighbour"] = Report.skipped("only asserted for l >= 3")
    else:
        out["no_double_neighbour"] = Report(
            Status.PASS if flags["no_double_neighbour"] else Status.FAIL,
            {"double_neighbours": flags["double_neighbours"]},
        )
    return out


# ---------------------------------------------------------------------------
# direct connections


@dataclass(frozen=True)
class DirectConnection:
    path: PathSeq
    h1: int
    h2: int


def is_direct_connection(G: Graph, path: PathSeq, h1: int, h2: int) -> bool:
    """Whether ``path`` is an induced path outside ``h1 | h2`` whose first
    vertex alone sees ``h1`` and whose last vertex alone sees ``h2``."""
    from .graph import is_induced_path

    if path.mask & (h1 | h2):
        return False
    if not is_induced_path(G, path):
        return False
    v1, v2 = path.ends
    for v in path.vertices:
        sees1 = bool(G.bits[v] & h1)
        sees2 = bool(G.bits[v] & h2)
        if sees1 != (v == v1) or sees2 != (v == v2):
            return False
    return True


def find_direct_connection(
    G: Graph,
    H1: int | Sequence[int],
    H2: int | Sequence[int],
    budget: SearchBudget | int | None = None,
) -> DirectConnection | None | Status:
    """A shortest direct connection linking two disjoint vertex sets.

    Returns None when none exists and ``Status.UNKNOWN`` if the budget runs
    out.  A shortest such path is automatically induced, and no proper
    subpath of a direct connection is one, so it is also minimal.
    """
    b = fresh(budget)
    h1 = H1 if isinstance(H1, int) else mask_of(H1)
    h2 = H2 if isinstance(H2, int) else mask_of(H2)
    if h1 & h2:
        raise ValueError("the two subgraphs must be vertex-disjoint")
    rest = G.all_mask & ~(h1 | h2)
    bits = G.bits
    t1 = t2 = 0
    for v in members(rest):
        if bits[v] & h1:
            t1 |= 1 << v
        if bits[v] & h2:
            t2 |= 1 << v
    both = t1 & t2
    if both:
        v = (both & -both).bit_length() - 1
        return DirectConnection(PathSeq((v,)), h1, h2)
    inner = rest & ~t1 & ~t2
    parent = {v: -1 for v in members(t1)}
    queue = deque(parent)
    while queue:
        u = queue.popleft()
        if not b.tick():
            return Status.UNKNOWN
        for w in G.adj[u]:
            if w in parent:
                continue
            if t2 >> w & 1:
                seq = [w]
                while u != -1:
                    seq.append(u)
                    u = parent[u]
                return DirectConnection(PathSeq(tuple(reversed(seq))), h1, h2)
            if inner >> w & 1:
                parent[w] = u
                queue.append(w)
    return None
