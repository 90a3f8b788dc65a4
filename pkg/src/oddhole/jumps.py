"""Jumps over odd holes, chordal paths, and the checks built on them.

A jump over a hole ``C`` is an induced path between two nonadjacent vertices
of ``C`` whose interior avoids ``C``.  With ``Q1 = C(s, t)`` and
``Q2 = C(t, s)`` it is *short* when its interior sees neither arc interior,
*local across* ``Qi*`` when it sees only that one, and general otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Sequence

from .budget import BudgetedStream, SearchBudget, fresh
from .graph import (
    CycleSeq,
    Graph,
    InvalidSequenceError,
    PathSeq,
    arc,
    check_path,
    edges_within,
    is_induced_cycle,
    is_induced_path,
    members,
)
from .holes import induced_paths
from .results import Report, Status


class JumpKind(str, Enum):
    SHORT = "Short"
    LOCAL = "Local"
    LOCAL_ONE_VERTEX = "LocalAcrossOneVertex"
    GENERAL = "General"


@dataclass(frozen=True)
class Jump:
    """A classified jump.  ``across`` names the arc (``"Q1"`` or ``"Q2"``)
    the jump is across; it is None for general jumps.  ``vertex`` is the
    lone interior vertex of that arc for local jumps across one vertex."""

    hole: CycleSeq
    path: PathSeq
    kind: JumpKind
    across: str | None
    vertex: int | None = None

    @property
    def ends(self) -> tuple[int, int]:
        return self.path.ends

    @property
    def q1(self) -> PathSeq:
        s, t = self.path.ends
        return arc(self.hole, s, t)

    @property
    def q2(self) -> PathSeq:
        s, t = self.path.ends
        return arc(self.hole, t, s)

    @property
    def across_arc(self) -> PathSeq | None:
        if self.across is None:
            return None
        return self.q1 if self.across == "Q1" else self.q2

    @property
    def other_arc(self) -> PathSeq | None:
        if self.across is None:
            return None
        return self.q2 if self.across == "Q1" else self.q1

    @property
    def is_short(self) -> bool:
        return self.kind is JumpKind.SHORT

    @property
    def is_local(self) -> bool:
        return self.kind in (JumpKind.LOCAL, JumpKind.LOCAL_ONE_VERTEX)

    def jump_hole(self) -> CycleSeq | None:
        """``P`` closed up by the arc it is across (short jumps only)."""
        if not self.is_short:
            return None
        return close_path(self.path, self.across_arc)

    def to_json(self) -> dict:
        return {
            "path": list(self.path.vertices),
            "kind": self.kind.value,
            "across": self.across,
            "vertex": self.vertex,
        }


def close_path(P: PathSeq, Q: PathSeq) -> CycleSeq:
    """The cycle formed by ``P`` and a path ``Q`` with the same two ends."""
    s, t = P.ends
    if Q.ends == (t, s):
        back = Q.vertices[1:-1]
    elif Q.ends == (s, t):
        back = Q.vertices[-2:0:-1]
    else:
        raise ValueError("paths do not share both ends")
    return CycleSeq(P.vertices + back)


def _require_odd_hole(G: Graph, C: CycleSeq) -> None:
    if C.length % 2 == 0 or not is_induced_cycle(G, C):
        raise ValueError("expected an odd induced cycle")


def _validate_jump(G: Graph, C: CycleSeq, P: PathSeq) -> None:
    check_path(G, P)
    s, t = P.ends
    cm = C.mask
    if not (cm >> s & 1 and cm >> t & 1):
        raise InvalidSequenceError("jump ends must lie on the hole")
    if G.has_edge(s, t) or s == t:
        raise InvalidSequenceError("jump ends must be distinct and nonadjacent")
    if P.interior_mask & cm:
        raise InvalidSequenceError("jump interior meets the hole")
    if not is_induced_path(G, P):
        raise InvalidSequenceError("jump is not an induced path")


def classify_jump(G: Graph, C: CycleSeq, P: PathSeq | Sequence[int]) -> Jump:
    """Classify ``P`` as a jump over ``C``; raises if it is not a jump."""
    P = P if isinstance(P, PathSeq) else PathSeq(tuple(P))
    _validate_jump(G, C, P)
    s, t = P.ends
    q1, q2 = arc(C, s, t), arc(C, t, s)
    assert q1.interior and q2.interior, "nonadjacent ends leave both arc interiors nonempty"
    seen = 0
    for v in P.interior:
        seen |= G.bits[v]
    hit1 = bool(seen & q1.interior_mask)
    hit2 = bool(seen & q2.interior_mask)
    if hit1 and hit2:
        return Jump(C, P, JumpKind.GENERAL, None)
    if hit1 or hit2:
        name, q = ("Q1", q1) if hit1 else ("Q2", q2)
        if len(q.interior) == 1:
            return Jump(C, P, JumpKind.LOCAL_ONE_VERTEX, name, q.interior[0])
        return Jump(C, P, JumpKind.LOCAL, name)
    name = "Q1" if (P.length + q1.length) % 2 == 1 else "Q2"
    return Jump(C, P, JumpKind.SHORT, name)


def enumerate_jumps(
    G: Graph, C: CycleSeq, budget: SearchBudget | int | None = None
) -> BudgetedStream:
    """Stream every jump over the odd hole ``C``, classified.

    Each jump is emitted once, oriented from its smaller end.
    """
    _require_odd_hole(G, C)
    b = fresh(budget)
    return BudgetedStream(_jumps(G, C, b), b)


def _jumps(G: Graph, C: CycleSeq, budget: SearchBudget) -> Iterator[Jump]:
    cm = C.mask
    off = G.all_mask & ~cm
    for s in sorted(C.vertices):
        targets = 0
        for t in C.vertices:
            if t > s and not G.has_edge(s, t):
                targets |= 1 << t
        if not targets:
            continue
        for p in induced_paths(G, s, off, targets, budget):
            yield classify_jump(G, C, PathSeq(p))
        if budget.exhausted:
            return


# ---------------------------------------------------------------------------
# chordal paths


def is_chordal_path(
    G: Graph, C: CycleSeq, P: PathSeq | Sequence[int], allow_adjacent_ends: bool = False
) -> bool:
    """Whether ``C`` together with ``P`` is an induced theta subgraph.

    By default the ends of ``P`` must be nonadjacent, which makes chordal
    paths coincide with short jumps.  ``allow_adjacent_ends`` admits paths
    whose ends are consecutive on ``C`` (theta with one branch a single
    edge).
    """
    P = P if isinstance(P, PathSeq) else PathSeq(tuple(P))
    try:
        check_path(G, P)
    except InvalidSequenceError:
        return False
    s, t = P.ends
    cm = C.mask
    if s == t or not (cm >> s & 1 and cm >> t & 1):
        return False
    if P.interior_mask & cm or P.length < 2:
        return False
    if G.has_edge(s, t) and not allow_adjacent_ends:
        return False
    return edges_within(G, cm | P.mask) == C.length + P.length


def chordal_paths(
    G: Graph,
    C: CycleSeq,
    budget: SearchBudget | int | None = None,
    allow_adjacent_ends: bool = True,
) -> BudgetedStream:
    """Stream every chordal path of the hole ``C`` (oriented small end first)."""
    b = fresh(budget)
    return BudgetedStream(_chordal(G, C, b, allow_adjacent_ends), b)


def _chordal(G: Graph, C: CycleSeq, budget: SearchBudget, adjacent: bool):
    cm = C.mask
    bits = G.bits
    order = sorted(C.vertices)
    for i, s in enumerate(order):
        for t in order[i + 1:]:
            st = (1 << s) | (1 << t)
            near = G.has_edge(s, t)
            if near and not adjacent:
                continue
            allowed = 0
            for v in members(G.all_mask & ~cm):
                if not bits[v] & cm & ~st:
                    allowed |= 1 << v
            if not allowed:
                continue
            start_block = (bits[s] | (1 << s)) & ~(1 << t) if near else None
            for p in induced_paths(
                G, s, allowed, 1 << t, budget, start_block=start_block
            ):
                if len(p) < 3:
                    continue
                P = PathSeq(p)
                if is_chordal_path(G, C, P, allow_adjacent_ends=True):
                    yield P
            if budget.exhausted:
                return


def chordal_path_law_holds(p: int, p1: int, p2: int, l: int) -> bool:
    """``|P1| = 1`` or ``l >= |P2| < |P1| = |P| >= l + 1``."""
    return p1 == 1 or (p2 <= l and p2 < p1 and p1 == p and p >= l + 1)


def check_chordal_path_law(
    G: Graph, l: int, C: CycleSeq, P: PathSeq, member: bool
) -> Report:
    """Length law for a chordal path ``P`` of an odd hole in the family.

    ``P1`` is the arc of ``C`` between the ends of ``P`` with the parity of
    ``P``; ``P2`` is the other arc.  ``member`` says whether ``G`` was
    certified in the family for this ``l``.
    """
    if not member:
        return Report.skipped("graph not certified in the family")
    if l < 4:
        return Report.skipped("law is stated for l >= 4")
    if C.length % 2 == 0 or not is_induced_cycle(G, C):
        return Report.skipped("C is not an odd hole")
    if not is_chordal_path(G, C, P, allow_adjacent_ends=True):
        return Report.skipped("P is not a chordal path of C")
    s, t = P.ends
    a, b = arc(C, s, t), arc(C, t, s)
    p1, p2 = (a, b) if (a.length - P.length) % 2 == 0 else (b, a)
    detail = {
        "hole": list(C.vertices),
        "path": list(P.vertices),
        "tuple": {"P": P.length, "P1": p1.length, "P2": p2.length, "l": l},
    }
    ok = chordal_path_law_holds(P.length, p1.length, p2.length, l)
    return Report(Status.PASS if ok else Status.FAIL, detail)


# ---------------------------------------------------------------------------
# jump parity


def jump_parity_holds(p: int, q1: int, q2: int, q2_cycle_induced: bool) -> bool:
    """``|P| = |Q2| (mod 2)``, ``P+Q2`` an even hole, ``P+Q1`` an odd cycle."""
    return (p - q2) % 2 == 0 and q2_cycle_induced and (p + q1) % 2 == 1


def check_jump_parity(G: Graph, C: CycleSeq, J: Jump, l: int, member: bool) -> Report:
    """Parity of a short or local jump against the arc it is not across."""
    if not member:
        return Report.skipped("graph not certified in the family")
    if l < 4:
        return Report.skipped("parity law is stated for l >= 4")
    if not (J.is_short or J.is_local):
        return Report.skipped("jump is neither short nor local")
    q1, q2 = J.across_arc, J.other_arc
    even = close_path(J.path, q2)
    induced = is_induced_cycle(G, even)
    detail = {
        "hole": list(C.vertices),
        "jump": J.to_json(),
        "tuple": {"P": J.path.length, "Q1": q1.length, "Q2": q2.length},
        "even_hole_induced": induced,
    }
    ok = jump_parity_holds(J.path.length, q1.length, q2.length, induced)
    return Report(Status.PASS if ok else Status.FAIL, detail)


# ---------------------------------------------------------------------------
# witness search and crossing


class JumpSearch(str, Enum):
    WITNESS = "Witness"
    NO_JUMPS = "NoJumpsExist"
    NO_WITNESS = "NoWitness"
    UNKNOWN = "Unknown"


@dataclass
class JumpWitnessResult:
    outcome: JumpSearch
    witness: Jump | None = None
    jumps_seen: int = 0


def find_short_or_one_vertex_jump(
    G: Graph, C: CycleSeq, budget: SearchBudget | int | None = None
) -> JumpWitnessResult:
    """First jump over ``C`` that is short or local across one vertex."""
    stream = enumerate_jumps(G, C, budget)
    seen = 0
    for J in stream:
        seen += 1
        if J.kind in (JumpKind.SHORT, JumpKind.LOCAL_ONE_VERTEX):
            return JumpWitnessResult(JumpSearch.WITNESS, J, seen)
    if stream.exhausted:
        return JumpWitnessResult(JumpSearch.UNKNOWN, None, seen)
    if seen == 0:
        return JumpWitnessResult(JumpSearch.NO_JUMPS)
    return JumpWitnessResult(JumpSearch.NO_WITNESS, None, seen)


def _ends(x) -> tuple[int, int]:
    if isinstance(x, Jump):
        return x.ends
    if isinstance(x, PathSeq):
        return x.ends
    a, b = x
    return a, b


def are_crossing(C: CycleSeq, J1, J2) -> bool:
    """Whether two jumps (or end pairs) have four distinct interleaved ends."""
    u1, v1 = _ends(J1)
    u2, v2 = _ends(J2)
    if len({u1, v1, u2, v2}) != 4:
        return False
    k = C.length
    base = C.position(u1)
    d = {v: (C.position(v) - base) % k for v in (v1, u2, v2)}
    inside_u2 = d[u2] < d[v1]
    inside_v2 = d[v2] < d[v1]
    return inside_u2 != inside_v2


def jump_hole_cover(jumps: Sequence[Jump]) -> int:
    """Bitmap of hole vertices lying on the jump hole of some short jump."""
    cover = 0
    for J in jumps:
        if J.is_short:
            cover |= J.across_arc.mask
    return cover


def nested_local_pairs(C: CycleSeq, jumps: Sequence[Jump]) -> Iterator[tuple[Jump, Jump]]:
    """Ordered pairs ``(J1, J2)`` of short-or-one-vertex jumps in nested
    position with at least one local.

    With ``J1 = (u1, v1)`` across ``C*(v1, u1)`` and ``J2 = (u2, v2)`` across
    ``C*(u2, v2)``, the ends must read ``u1, u2, v2, v1`` clockwise
    (coincidences allowed) and ``{u1, v1} != {u2, v2}``.
    """
    ok = [J for J in jumps if J.kind in (JumpKind.SHORT, JumpKind.LOCAL_ONE_VERTEX)]
    k = C.length
    for J1 in ok:
        a1 = J1.across_arc
        v1, u1 = a1.ends
        base = C.position(u1)
        dv1 = (C.position(v1) - base) % k
        for J2 in ok:
            if J1 is J2 or not (J1.is_local or J2.is_local):
                continue
            u2, v2 = J2.across_arc.ends
            if {u1, v1} == {u2, v2}:
                continue
            du2 = (C.position(u2) - base) % k
            dv2 = (C.position(v2) - base) % k
            if du2 < dv2 <= dv1:
                yield J1, J2


def check_nested_jump_cover(
    G: Graph, C: CycleSeq, J1: Jump, J2: Jump, cover: int
) -> Report:
    """At most two vertices of ``C(v1, u1) + C(u2, v2)`` miss every jump hole."""
    region = J1.across_arc.mask | J2.across_arc.mask
    missing = members(region & ~cover)
    detail = {
        "hole": list(C.vertices),
        "jumps": [J1.to_json(), J2.to_json()],
        "uncovered": missing,
    }
    return Report(Status.PASS if len(missing) <= 2 else Status.FAIL, detail)


def crossing_subgraph_mask(J1: Jump, J2: Jump) -> int:
    return J1.hole.mask | J1.path.mask | J2.path.mask

