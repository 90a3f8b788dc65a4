"""Structural checks over a corpus and the reports they produce.

Every check is identified by a stable id string (``"L2.3"``, ``"T3.3"``
...).  Per graph, the instances of a check are folded into one
:class:`CheckResult`: Fail if any instance fails, else Unknown if a search
ran out of budget, else Skipped when no instance met its precondition, else
Pass (vacuously so when there were no instances).
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterable, Sequence

from . import __version__
from .budget import SearchBudget, default_budget_nodes
from .coloring import ColorOutcome, k_colorable, verify_coloring
from .corpus import CorpusEntry
from .cuts import (
    degree_two_vertices,
    is_k_vertex_critical,
    k2_cuts,
    p3_cuts,
    two_edge_cuts,
)
from .graph import CycleSeq, Graph, PathSeq, components, induced_subgraph, is_connected, mask_of
from .holes import enumerate_induced_cycles, induced_paths, is_in_Gl, Membership
from .jumps import (
    JumpKind,
    are_crossing,
    check_chordal_path_law,
    check_jump_parity,
    check_nested_jump_cover,
    chordal_paths,
    classify_jump,
    crossing_subgraph_mask,
    enumerate_jumps,
    jump_hole_cover,
    nested_local_pairs,
)
from .k4 import (
    K4Class,
    K4Subdivision,
    classify_in,
    find_k4_subdivisions,
    odd_k4_structure_flags,
    verify_odd_k4_structure,
)
from .results import Report, Status

CHECK_IDS = (
    "L2.1", "L2.2", "L2.3", "L2.5.1", "L2.5.2", "L2.5.3", "L2.6", "L2.7",
    "C2.10", "L2.11", "L2.12.2", "T3.2", "T3.3", "T1.2",
)

_STRUCTURE_PARTS = {"L2.5.1": "pairs", "L2.5.2": "induced", "L2.5.3": "no_double_neighbour"}


@dataclass
class SuiteBudgets:
    """Node caps, one fresh budget per search."""

    membership: int | None = 20_000_000
    jumps: int | None = 2_000_000
    k4: int | None = 5_000_000
    coloring: int | None = 2_000_000
    paths: int | None = 2_000_000

    @classmethod
    def from_env(cls) -> SuiteBudgets:
        cap = default_budget_nodes()
        if cap is None:
            return cls()
        return cls(cap, cap, cap, cap, cap)

    def to_json(self) -> dict:
        return asdict(self)


@dataclass
class CheckResult:
    check: str
    status: Status
    instances: int = 0
    witness: dict | None = None
    reason: str = ""
    timing: float | None = None

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "check": self.check,
            "status": self.status.value,
            "instances": self.instances,
            "witness": self.witness,
            "reason": self.reason,
        }
        if timing:
            out["timing"] = self.timing
        return out


def fold(check: str, reports: Sequence[Report], unknown_reason: str = "", vacuous: str = "") -> CheckResult:
    """Aggregate the per-instance reports of one check on one graph."""
    fails = [r for r in reports if r.status is Status.FAIL]
    if fails:
        return CheckResult(check, Status.FAIL, len(reports), fails[0].detail, f"{len(fails)} failing instance(s)")
    unknown = [r for r in reports if r.status is Status.UNKNOWN]
    if unknown or unknown_reason:
        why = unknown_reason or unknown[0].detail.get("reason", "budget exhausted")
        return CheckResult(check, Status.UNKNOWN, len(reports), None, why)
    live = [r for r in reports if r.status is not Status.SKIPPED]
    if reports and not live:
        return CheckResult(check, Status.SKIPPED, len(reports), None, reports[0].detail.get("reason", ""))
    return CheckResult(check, Status.PASS, len(live), None, "" if live else (vacuous or "no instances"))


def _skip_all(checks: Iterable[str], reason: str, status: Status = Status.SKIPPED) -> list[CheckResult]:
    return [CheckResult(c, status, 0, None, reason) for c in checks]


@dataclass
class EntryReport:
    id: str
    n: int
    m: int
    provenance: dict
    membership: dict
    checks: list[CheckResult] = field(default_factory=list)

    def to_json(self, timing: bool = False) -> dict:
        return {
            "id": self.id,
            "n": self.n,
            "m": self.m,
            "provenance": self.provenance,
            "membership": self.membership,
            "checks": [c.to_json(timing) for c in self.checks],
        }

    def status_of(self, check: str) -> Status | None:
        for c in self.checks:
            if c.check == check:
                return c.status
        return None


@dataclass
class SuiteReport:
    l: int
    budgets: SuiteBudgets
    seed: int
    entries: list[EntryReport] = field(default_factory=list)

    @property
    def has_fail(self) -> bool:
        return any(c.status is Status.FAIL for e in self.entries for c in e.checks)

    def summary(self) -> dict[str, dict[str, int]]:
        out: dict[str, dict[str, int]] = {}
        for e in self.entries:
            for c in e.checks:
                row = out.setdefault(c.check, {s.value: 0 for s in Status})
                row[c.status.value] += 1
        return {k: out[k] for k in sorted(out)}

    def to_json(self, timing: bool = False) -> dict:
        return {
            "tool": "oddhole",
            "version": __version__,
            "l": self.l,
            "seed": self.seed,
            "budgets": self.budgets.to_json(),
            "summary": self.summary(),
            "entries": [e.to_json(timing) for e in self.entries],
        }


# ---------------------------------------------------------------------------
# per-graph analysis


class _Context:
    """Lazily computed facts shared by several checks on one graph."""

    def __init__(self, G: Graph, l: int, budgets: SuiteBudgets):
        self.G = G
        self.l = l
        self.budgets = budgets
        self._crit = None
        self._subs = None
        self._cuts = None

    def budget(self, name: str) -> SearchBudget:
        return SearchBudget(getattr(self.budgets, name))

    def critical4(self):
        if self._crit is None:
            self._crit = is_k_vertex_critical(self.G, 4, self.budget("coloring"))
        return self._crit

    def subdivisions(self, cap: int):
        """Classified K4-subdivisions with arrises up to ``cap`` (cached)."""
        if self._subs is None or self._subs[0] < cap:
            stream = find_k4_subdivisions(self.G, cap, self.budget("k4"))
            found = [(H, classify_in(self.G, H)) for H in stream]
            self._subs = (cap, found, stream.exhausted)
        _, found, exhausted = self._subs
        return [(H, t) for H, t in found if max(H.lengths().values()) <= cap], exhausted

    def cuts(self):
        if self._cuts is None:
            G = self.G
            if not is_connected(G):
                self._cuts = None, None, None
            else:
                self._cuts = (
                    next(iter(two_edge_cuts(G)), None),
                    next(iter(k2_cuts(G)), None),
                    next(iter(p3_cuts(G)), None),
                )
        return self._cuts


def _not_critical_report(ctx: _Context, context: dict) -> Report:
    crit = ctx.critical4()
    detail = {**context, "criticality": crit.to_json()}
    if crit.critical is None:
        return Report(Status.UNKNOWN, {**detail, "reason": crit.reason})
    return Report(Status.FAIL if crit.critical else Status.PASS, detail)


def _check_cut_lemmas(ctx: _Context) -> list[CheckResult]:
    G = ctx.G
    if not is_connected(G):
        return _skip_all(("L2.1", "L2.2"), "graph is disconnected")
    two, k2, p3 = ctx.cuts()
    out = []
    reps = []
    for w in (k2, p3):
        if w is not None:
            reps.append(_not_critical_report(ctx, {"cut": w.to_json()}))
    out.append(fold("L2.1", reps, vacuous="no K2-cut or P3-cut"))
    reps = [] if two is None else [_not_critical_report(ctx, {"cut": two.to_json()})]
    out.append(fold("L2.2", reps, vacuous="no 2-edge-cut"))
    return out


def _check_structure(ctx: _Context) -> list[CheckResult]:
    # face cycles of an odd subdivision are odd holes of length 2l+1, so no
    # arris is longer than 2l-1; searching that far keeps the length bound
    # itself under test
    cap = 2 * ctx.l - 1
    subs, exhausted = ctx.subdivisions(cap)
    per = {c: [] for c in _STRUCTURE_PARTS}
    for H, tag in subs:
        if not tag.is_odd:
            continue
        parts = verify_odd_k4_structure(ctx.G, ctx.l, H, True)
        for check, part in _STRUCTURE_PARTS.items():
            r = parts[part]
            if r.status is Status.FAIL:
                r = Report(Status.FAIL, {"subdivision": H.to_json(), **r.detail})
            per[check].append(r)
    why = f"subdivision search budget exhausted (cap {cap})" if exhausted else ""
    return [fold(c, per[c], why, "no odd K4-subdivision") for c in _STRUCTURE_PARTS]


def _odd_holes(ctx: _Context):
    k = 2 * ctx.l + 1
    stream = enumerate_induced_cycles(ctx.G, k, k, "odd", ctx.budget("membership"))
    return list(stream), stream.exhausted


def _k4_witness_in(G: Graph, mask: int, budget: SearchBudget):
    sub, mapping = induced_subgraph(G, mask)
    for H in find_k4_subdivisions(sub, None, budget):
        tag = classify_in(sub, H)
        if tag.is_odd or tag is K4Class.BALANCED_1_2:
            branch = [mapping[v] for v in H.branch]
            arrises = [PathSeq(tuple(mapping[v] for v in p.vertices)) for p in H.paths]
            return K4Subdivision(branch, arrises), tag
    return None


def _check_jump_lemmas(ctx: _Context) -> list[CheckResult]:
    G, l = ctx.G, ctx.l
    ids = ("L2.3", "L2.7", "C2.10", "L2.11", "L2.12.2")
    if l < 4:
        return _skip_all(ids, "jump lemmas are stated for l >= 4")
    holes, holes_exhausted = _odd_holes(ctx)
    reps = {c: [] for c in ids}
    unknown = {c: "" for c in ids}
    if holes_exhausted:
        for c in ids:
            unknown[c] = "odd-hole enumeration budget exhausted"
    for C in holes:
        cp = chordal_paths(G, C, ctx.budget("jumps"))
        for P in cp:
            reps["L2.3"].append(check_chordal_path_law(G, l, C, P, True))
        if cp.exhausted:
            unknown["L2.3"] = "chordal-path budget exhausted"

        js = enumerate_jumps(G, C, ctx.budget("jumps"))
        jumps = list(js)
        if js.exhausted:
            for c in ("L2.7", "C2.10", "L2.11", "L2.12.2"):
                unknown[c] = "jump enumeration budget exhausted"
            continue
        for J in jumps:
            if J.is_short or J.is_local:
                reps["L2.7"].append(check_jump_parity(G, C, J, l, True))
        if jumps:
            good = next((J for J in jumps if J.kind in (JumpKind.SHORT, JumpKind.LOCAL_ONE_VERTEX)), None)
            if good is not None:
                reps["C2.10"].append(Report(Status.PASS, {"witness": good.to_json()}))
            else:
                reps["C2.10"].append(
                    Report(Status.FAIL, {"hole": list(C.vertices), "jumps": [J.to_json() for J in jumps]})
                )
        shorts = [J for J in jumps if J.is_short]
        for i, J1 in enumerate(shorts):
            for J2 in shorts[i + 1:]:
                if not are_crossing(C, J1, J2):
                    continue
                reps["L2.11"].append(_crossing_report(ctx, C, J1, J2))
        cover = jump_hole_cover(jumps)
        for J1, J2 in nested_local_pairs(C, jumps):
            reps["L2.12.2"].append(check_nested_jump_cover(G, C, J1, J2, cover))
    vacuous = {
        "L2.3": "no chordal path",
        "L2.7": "no short or local jump",
        "C2.10": "no hole with a jump",
        "L2.11": "no crossing short jumps",
        "L2.12.2": "no nested pair with a local jump",
    }
    return [fold(c, reps[c], unknown[c], vacuous[c]) for c in ids]


def _crossing_report(ctx: _Context, C: CycleSeq, J1, J2) -> Report:
    G = ctx.G
    base = {"hole": list(C.vertices), "jumps": [J1.to_json(), J2.to_json()]}
    b = ctx.budget("k4")
    found = _k4_witness_in(G, crossing_subgraph_mask(J1, J2), b)
    if found is None and not b.exhausted:
        subs, exhausted = ctx.subdivisions(2 * ctx.l + 1)
        hit = next(((H, t) for H, t in subs if t.is_odd or t is K4Class.BALANCED_1_2), None)
        if hit is not None:
            found = hit
        elif exhausted:
            return Report(Status.UNKNOWN, {**base, "reason": "subdivision search budget exhausted"})
        else:
            return Report(Status.FAIL, {**base, "cap": 2 * ctx.l + 1})
    if found is None:
        return Report(Status.UNKNOWN, {**base, "reason": "subdivision search budget exhausted"})
    H, tag = found
    return Report(Status.PASS, {**base, "subdivision": H.to_json(), "class": tag.value})


def _check_no_odd_k4_when_critical(ctx: _Context) -> CheckResult:
    if ctx.l < 4:
        return CheckResult("T3.2", Status.SKIPPED, 0, None, "stated for l >= 4")
    subs, exhausted = ctx.subdivisions(2 * ctx.l - 1)
    odd = [H for H, t in subs if t.is_odd]
    if not odd:
        if exhausted:
            return CheckResult("T3.2", Status.UNKNOWN, 0, None, "subdivision search budget exhausted")
        return CheckResult("T3.2", Status.PASS, 0, None, "no odd K4-subdivision")
    rep = _not_critical_report(ctx, {"subdivision": odd[0].to_json()})
    return fold("T3.2", [rep])


def _check_balanced_when_critical(ctx: _Context) -> CheckResult:
    if ctx.l < 4:
        return CheckResult("L2.6", Status.SKIPPED, 0, None, "stated for l >= 4")
    subs, exhausted = ctx.subdivisions(2 * ctx.l + 1)
    bal = [H for H, t in subs if t is K4Class.BALANCED_1_2]
    if not bal:
        if exhausted:
            return CheckResult("L2.6", Status.UNKNOWN, 0, None, "subdivision search budget exhausted")
        return CheckResult("L2.6", Status.PASS, 0, None, "no balanced (1,2) K4-subdivision")
    rep = _not_critical_report(ctx, {"subdivision": bal[0].to_json()})
    return fold("L2.6", [rep])


T33_OUTCOMES = ("odd K4-subdivision", "balanced (1,2) K4-subdivision", "P3-cut", "degree-2 vertex")


def dichotomy_check(G: Graph, budgets: SuiteBudgets | None = None, member: bool | None = None) -> CheckResult:
    """The four-outcome structure statement for connected members at ``l = 4``.

    All four outcomes are evaluated; the report names the first one that
    holds in the fixed outcome order.  Only when none holds does the
    precondition matter: then a 2-edge-cut, a K2-cut, or non-membership
    makes the result Skipped instead of Fail.
    """
    budgets = budgets or SuiteBudgets()
    ctx = _Context(G, 4, budgets)
    return _dichotomy(ctx, member)


def _dichotomy(ctx: _Context, member: bool | None) -> CheckResult:
    G = ctx.G
    if member is None:
        v = is_in_Gl(G, 4, ctx.budget("membership"))
        if v.status is Membership.UNKNOWN:
            return CheckResult("T3.3", Status.UNKNOWN, 0, None, "membership budget exhausted")
        member = v.member
    if not is_connected(G):
        return CheckResult("T3.3", Status.SKIPPED, 0, None, "graph is disconnected")
    subs, exhausted = ctx.subdivisions(9)
    odd = next((H for H, t in subs if t.is_odd), None)
    bal = next((H for H, t in subs if t is K4Class.BALANCED_1_2), None)
    two, k2, p3 = ctx.cuts()
    deg2 = degree_two_vertices(G)
    hits = [
        None if odd is None else odd.to_json(),
        None if bal is None else bal.to_json(),
        None if p3 is None else p3.to_json(),
        deg2[0] if deg2 else None,
    ]
    outcomes = {name: hit is not None for name, hit in zip(T33_OUTCOMES, hits)}
    for name, hit in zip(T33_OUTCOMES, hits):
        if hit is not None:
            return CheckResult("T3.3", Status.PASS, 1, {"outcomes": outcomes}, f"via {name}")
    if not member:
        return CheckResult("T3.3", Status.SKIPPED, 0, None, "graph not certified in the family")
    if two is not None or k2 is not None:
        which = "2-edge-cut" if two is not None else "K2-cut"
        return CheckResult("T3.3", Status.SKIPPED, 0, None, f"precondition unmet: has a {which}")
    if exhausted:
        return CheckResult("T3.3", Status.UNKNOWN, 0, None, "subdivision search budget exhausted")
    return CheckResult("T3.3", Status.FAIL, 1, {"outcomes": outcomes}, "no outcome holds")


def _check_three_colouring(ctx: _Context) -> CheckResult:
    if ctx.l != 4:
        return CheckResult("T1.2", Status.SKIPPED, 0, None, "stated for l = 4")
    res = k_colorable(ctx.G, 3, ctx.budget("coloring"))
    if res.outcome is ColorOutcome.UNKNOWN:
        return CheckResult("T1.2", Status.UNKNOWN, 1, None, "colouring budget exhausted")
    if res.found and verify_coloring(ctx.G, res.coloring, 3):
        return CheckResult("T1.2", Status.PASS, 1, None, "verified 3-colouring")
    return CheckResult("T1.2", Status.FAIL, 1, {"searched": "all 3-colourings", "nodes": res.nodes}, "not 3-colourable")


def analyse_entry(entry: CorpusEntry, l: int, budgets: SuiteBudgets, timing: bool = False) -> EntryReport:
    G = entry.graph
    verdict = is_in_Gl(G, l, SearchBudget(budgets.membership))
    rep = EntryReport(entry.id, G.n, G.m, entry.provenance, verdict.to_json())
    if verdict.status is Membership.UNKNOWN:
        rep.checks = _skip_all(CHECK_IDS, "membership budget exhausted", Status.UNKNOWN)
        return rep
    if not verdict.member:
        rep.checks = _skip_all(CHECK_IDS, f"not certified in the family: {verdict.reason}")
        return rep
    ctx = _Context(G, l, budgets)
    steps = [
        lambda: _check_cut_lemmas(ctx),
        lambda: _check_jump_lemmas(ctx),
        lambda: _check_structure(ctx),
        lambda: [_check_balanced_when_critical(ctx)],
        lambda: [_check_no_odd_k4_when_critical(ctx)],
        lambda: [_dichotomy(ctx, True) if l == 4 else CheckResult("T3.3", Status.SKIPPED, 0, None, "stated for l = 4")],
        lambda: [_check_three_colouring(ctx)],
    ]
    results = []
    for step in steps:
        t0 = time.perf_counter()
        got = step()
        dt = time.perf_counter() - t0
        for r in got:
            r.timing = round(dt / len(got), 6) if timing else None
        results.extend(got)
    order = {c: i for i, c in enumerate(CHECK_IDS)}
    rep.checks = sorted(results, key=lambda r: order[r.check])
    return rep


def _analyse_star(args):
    return analyse_entry(*args)


def run_lemma_suite(
    corpus: Sequence[CorpusEntry],
    l: int,
    budgets: SuiteBudgets | None = None,
    seed: int = 0,
    jobs: int = 1,
    timing: bool = False,
) -> SuiteReport:
    """Run every check on every corpus entry; results keep corpus order."""
    budgets = budgets or SuiteBudgets()
    report = SuiteReport(l, budgets, seed)
    work = [(e, l, budgets, timing) for e in corpus]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            report.entries = list(pool.map(_analyse_star, work))
    else:
        report.entries = [_analyse_star(w) for w in work]
    return report


# ---------------------------------------------------------------------------
# the hypothesis-supplied uniform-path check


def uniform_path_cut_check(
    G: Graph,
    l: int,
    x: int,
    y: int,
    X: Iterable[int],
    component_vertex: int,
    budget: SearchBudget | int | None = None,
) -> CheckResult:
    """If every induced ``(x, y)``-path inside ``G1`` has the same length
    ``k`` with ``4 <= k <= l``, then ``G`` has a degree-2 vertex or a K2-cut.

    ``X`` must satisfy ``{x, y} <= X <= N[{x, y}]`` and be a vertex cut;
    ``G1`` is ``G`` induced on ``X`` plus the component of ``G - X`` that
    contains ``component_vertex``.  Malformed input raises ValueError.
    """
    Xm = mask_of(X)
    if not (Xm >> x & 1 and Xm >> y & 1) or x == y:
        raise ValueError("X must contain both x and y")
    closed = G.bits[x] | G.bits[y] | (1 << x) | (1 << y)
    if Xm & ~closed:
        raise ValueError("X must lie inside N[{x, y}]")
    comps = components(G, removed=Xm)
    if len(comps) < 2:
        raise ValueError("X is not a vertex cut")
    comp = next((c for c in comps if component_vertex in c), None)
    if comp is None:
        raise ValueError("component_vertex must lie outside X")
    b = budget if isinstance(budget, SearchBudget) else SearchBudget(budget)
    if l < 4:
        return CheckResult("L2.4", Status.SKIPPED, 0, None, "stated for l >= 4")
    verdict = is_in_Gl(G, l, b)
    if verdict.status is Membership.UNKNOWN:
        return CheckResult("L2.4", Status.UNKNOWN, 0, None, "membership budget exhausted")
    if not verdict.member:
        return CheckResult("L2.4", Status.SKIPPED, 0, None, "graph not certified in the family")
    region = Xm | mask_of(comp)
    allowed = region & ~((1 << x) | (1 << y))
    lengths = set()
    count = 0
    for p in induced_paths(G, x, allowed, 1 << y, b):
        lengths.add(len(p) - 1)
        count += 1
    if b.exhausted:
        return CheckResult("L2.4", Status.UNKNOWN, count, None, "path enumeration budget exhausted")
    if len(lengths) != 1 or not 4 <= min(lengths) <= l:
        return CheckResult(
            "L2.4", Status.SKIPPED, count, None,
            f"hypothesis unmet: induced path lengths {sorted(lengths)}",
        )
    deg2 = degree_two_vertices(G)
    if deg2:
        return CheckResult("L2.4", Status.PASS, count, None, f"degree-2 vertex {deg2[0]}")
    k2 = next(iter(k2_cuts(G)), None) if is_connected(G) else None
    if k2 is not None:
        return CheckResult("L2.4", Status.PASS, count, None, f"K2-cut {list(k2.elements)}")
    return CheckResult(
        "L2.4", Status.FAIL, count,
        {"x": x, "y": y, "X": sorted(X), "component": comp, "length": min(lengths)},
        "neither a degree-2 vertex nor a K2-cut",
    )


# ---------------------------------------------------------------------------
# reports


def emit_report(report: SuiteReport, fmt: str = "json", timing: bool = False) -> bytes:
    """Serialize a suite report: sorted-key JSON or a plain-text table."""
    if fmt == "json":
        return (json.dumps(report.to_json(timing), sort_keys=True, indent=2) + "\n").encode()
    if fmt == "text":
        lines = [f"oddhole {__version__}  l={report.l}  seed={report.seed}  budgets={report.budgets.to_json()}"]
        for e in report.entries:
            lines.append(f"{e.id}  n={e.n} m={e.m}  {e.membership['status']}")
            for c in e.checks:
                extra = f"  ({c.reason})" if c.reason else ""
                lines.append(f"  {c.check:<8} {c.status.value:<8} x{c.instances}{extra}")
        lines.append("summary:")
        for check, row in report.summary().items():
            cells = "  ".join(f"{k}={v}" for k, v in row.items())
            lines.append(f"  {check:<8} {cells}")
        return ("\n".join(lines) + "\n").encode()
    raise ValueError(f"unknown report format {fmt!r}")


def reverify_witness(G: Graph, check: str, witness: dict, l: int) -> bool:
    """Independently confirm that a Fail payload is a genuine violation."""
    if check == "L2.3":
        C = CycleSeq(tuple(witness["hole"]))
        P = PathSeq(tuple(witness["path"]))
        return check_chordal_path_law(G, l, C, P, True).status is Status.FAIL
    if check == "L2.7":
        C = CycleSeq(tuple(witness["hole"]))
        J = classify_jump(G, C, witness["jump"]["path"])
        return check_jump_parity(G, C, J, l, True).status is Status.FAIL
    if check in _STRUCTURE_PARTS:
        H = K4Subdivision.from_json(witness["subdivision"])
        flags = odd_k4_structure_flags(G, l, H)
        return flags[_STRUCTURE_PARTS[check]] is False
    if check == "C2.10":
        C = CycleSeq(tuple(witness["hole"]))
        stream = enumerate_jumps(G, C)
        kinds = [J.kind for J in stream]
        return bool(kinds) and not ({JumpKind.SHORT, JumpKind.LOCAL_ONE_VERTEX} & set(kinds))
    if check == "L2.12.2":
        C = CycleSeq(tuple(witness["hole"]))
        jumps = list(enumerate_jumps(G, C))
        J1, J2 = (classify_jump(G, C, j["path"]) for j in witness["jumps"])
        return check_nested_jump_cover(G, C, J1, J2, jump_hole_cover(jumps)).status is Status.FAIL
    if check in ("L2.1", "L2.2", "L2.6", "T3.2"):
        return is_k_vertex_critical(G, 4).critical is True
    if check == "T1.2":
        return k_colorable(G, 3).outcome is ColorOutcome.EXHAUSTED
    if check == "L2.11":
        C = CycleSeq(tuple(witness["hole"]))
        J1, J2 = (classify_jump(G, C, j["path"]) for j in witness["jumps"])
        if not (J1.is_short and J2.is_short and are_crossing(C, J1, J2)):
            return False
        return not any(
            t.is_odd or t is K4Class.BALANCED_1_2
            for t in (classify_in(G, H) for H in find_k4_subdivisions(G, witness.get("cap")))
        )
    if check == "T3.3":
        return dichotomy_check(G, SuiteBudgets(None, None, None, None, None)).status is Status.FAIL
    raise ValueError(f"no re-verifier for check {check!r}")
