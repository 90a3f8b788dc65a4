import pytest

from oddhole.budget import SearchBudget
from oddhole.corpus import cycle_with_local_jump
from oddhole.generators import gen_cycle, gen_k4_subdivision, gen_theta, theta_branches
from oddhole.graph import CycleSeq, InvalidSequenceError, PathSeq, build_graph, is_induced_cycle
from oddhole.jumps import (
    Jump,
    JumpKind,
    JumpSearch,
    are_crossing,
    check_chordal_path_law,
    check_jump_parity,
    check_nested_jump_cover,
    chordal_path_law_holds,
    chordal_paths,
    classify_jump,
    close_path,
    enumerate_jumps,
    find_short_or_one_vertex_jump,
    is_chordal_path,
    jump_hole_cover,
    jump_parity_holds,
    nested_local_pairs,
)
from oddhole.results import Status

from oracles import fixture_graphs, jump_set


def theta_455():
    G = gen_theta(4, 5, 5)
    a, b, c = theta_branches((4, 5, 5))
    return G, CycleSeq(a.vertices + b.vertices[-2:0:-1]), c


def c5_with_apex():
    # C5 on 0..4 plus x=5 adjacent to 0, 1, 2; outside every family
    return build_graph(6, [(i, (i + 1) % 5) for i in range(5)] + [(5, 0), (5, 1), (5, 2)])


def c9_with_general_path():
    # C9 plus 0-a-b-4 where a sees 2 and b sees 6
    edges = [(i, (i + 1) % 9) for i in range(9)] + [(0, 9), (9, 10), (10, 4), (9, 2), (10, 6)]
    return build_graph(11, edges)


def test_theta_has_one_short_jump():
    G, C, c = theta_455()
    jumps = list(enumerate_jumps(G, C))
    assert len(jumps) == 1
    (J,) = jumps
    assert set(J.path.vertices) == set(c.vertices)
    assert J.kind is JumpKind.SHORT
    assert J.across_arc.length == 4 and J.other_arc.length == 5
    assert J.jump_hole().length == 9 and is_induced_cycle(G, J.jump_hole())


def test_c9_has_no_jumps():
    assert list(enumerate_jumps(gen_cycle(9), CycleSeq(tuple(range(9))))) == []


def test_local_across_one_vertex():
    G = c5_with_apex()
    C = CycleSeq(tuple(range(5)))
    (J,) = list(enumerate_jumps(G, C))
    assert J.path.vertices == (0, 5, 2)
    assert J.kind is JumpKind.LOCAL_ONE_VERTEX and J.vertex == 1
    assert J.is_local and not J.is_short and J.jump_hole() is None


def test_general_jump():
    G = c9_with_general_path()
    J = classify_jump(G, CycleSeq(tuple(range(9))), (0, 9, 10, 4))
    assert J.kind is JumpKind.GENERAL
    assert J.across is None and J.across_arc is None and J.other_arc is None


def test_local_jump_across_long_arc():
    G = cycle_with_local_jump()
    C = CycleSeq(tuple(range(9)))
    kinds = {J.kind for J in enumerate_jumps(G, C)}
    assert JumpKind.LOCAL_ONE_VERTEX in kinds


def test_classify_rejects_non_jumps():
    G, C, c = theta_455()
    with pytest.raises(InvalidSequenceError):
        classify_jump(G, C, (0, 2))
    with pytest.raises(InvalidSequenceError):
        classify_jump(G, C, C.vertices[:3])
    with pytest.raises(InvalidSequenceError):
        classify_jump(gen_cycle(9), CycleSeq(tuple(range(9))), (0, 1))


def test_enumerate_needs_odd_hole():
    G = gen_theta(4, 5, 5)
    a, b, c = theta_branches((4, 5, 5))
    with pytest.raises(ValueError):
        enumerate_jumps(G, CycleSeq(b.vertices + c.vertices[-2:0:-1]))


def test_budget_exhaustion_is_flagged():
    G, C, _ = theta_455()
    stream = enumerate_jumps(G, C, SearchBudget(2))
    list(stream)
    assert stream.exhausted
    res = find_short_or_one_vertex_jump(G, C, SearchBudget(2))
    assert res.outcome is JumpSearch.UNKNOWN


def test_jumps_match_path_oracle():
    checked = 0
    for G in fixture_graphs(150, 9, seed=3):
        from oddhole.holes import enumerate_induced_cycles

        for C in enumerate_induced_cycles(G, 5, parity="odd"):
            ours = {J.path.vertices for J in enumerate_jumps(G, C)}
            assert ours == jump_set(G, C.vertices)
            for J in enumerate_jumps(G, C):
                classify_jump(G, C, J.path)
            checked += 1
    assert checked > 20


def test_chordal_path_examples():
    G, C, c = theta_455()
    assert is_chordal_path(G, C, c)
    assert [P.vertices for P in chordal_paths(G, C)] == [c.vertices]
    # C9 plus 1-x-y-3 with the extra edge x-2
    edges = [(i, (i + 1) % 9) for i in range(9)] + [(1, 9), (9, 10), (10, 3), (9, 2)]
    H = build_graph(11, edges)
    C9 = CycleSeq(tuple(range(9)))
    assert not is_chordal_path(H, C9, (1, 9, 10, 3))


def test_chordal_path_with_adjacent_ends():
    edges = [(i, (i + 1) % 9) for i in range(9)] + [(0, 9), (9, 10), (10, 1)]
    G = build_graph(11, edges)
    C = CycleSeq(tuple(range(9)))
    P = (0, 9, 10, 1)
    assert not is_chordal_path(G, C, P)
    assert is_chordal_path(G, C, P, allow_adjacent_ends=True)
    assert [p.vertices for p in chordal_paths(G, C)] == [P]
    assert list(chordal_paths(G, C, allow_adjacent_ends=False)) == []


def test_is_chordal_path_false_on_garbage():
    G, C, _ = theta_455()
    assert not is_chordal_path(G, C, (0, 1))
    assert not is_chordal_path(G, C, C.vertices[:3])


def test_chordal_law_theta():
    G, C, c = theta_455()
    rep = check_chordal_path_law(G, 4, C, c, True)
    assert rep.status is Status.PASS
    assert rep.detail["tuple"] == {"P": 5, "P1": 5, "P2": 4, "l": 4}


def test_chordal_law_arithmetic():
    assert chordal_path_law_holds(5, 5, 4, 4)
    assert chordal_path_law_holds(3, 3, 2, 2)
    assert chordal_path_law_holds(7, 1, 8, 4)
    assert not chordal_path_law_holds(3, 3, 6, 4)
    assert not chordal_path_law_holds(5, 7, 2, 4)


def test_chordal_law_fail_fixture():
    # C9 plus a 3-edge path between vertices at distance 3: arcs (3, 6)
    edges = [(i, (i + 1) % 9) for i in range(9)] + [(0, 9), (9, 10), (10, 3)]
    G = build_graph(11, edges)
    rep = check_chordal_path_law(G, 4, CycleSeq(tuple(range(9))), PathSeq((0, 9, 10, 3)), True)
    assert rep.status is Status.FAIL
    assert rep.detail["tuple"] == {"P": 3, "P1": 3, "P2": 6, "l": 4}


def test_chordal_law_preconditions_skip():
    G, C, c = theta_455()
    assert check_chordal_path_law(G, 4, C, c, False).status is Status.SKIPPED
    assert check_chordal_path_law(G, 2, C, c, True).status is Status.SKIPPED
    assert check_chordal_path_law(G, 4, C, PathSeq(C.vertices[:3]), True).status is Status.SKIPPED
    T = gen_theta(2, 3, 3)
    a, b, cc = theta_branches((2, 3, 3))
    C5 = CycleSeq(a.vertices + b.vertices[-2:0:-1])
    rep = check_chordal_path_law(T, 2, C5, cc, True)
    assert rep.status is Status.SKIPPED


def test_jump_parity_theta():
    G, C, _ = theta_455()
    (J,) = enumerate_jumps(G, C)
    rep = check_jump_parity(G, C, J, 4, True)
    assert rep.status is Status.PASS
    assert rep.detail["tuple"] == {"P": 5, "Q1": 4, "Q2": 5}
    assert rep.detail["even_hole_induced"]


def test_jump_parity_arithmetic_and_fail_fixture():
    assert jump_parity_holds(3, 2, 3, True)
    assert not jump_parity_holds(3, 2, 3, False)
    assert not jump_parity_holds(4, 2, 3, True)
    # C9 plus a 4-edge path between vertices at distance 3: parity even with the 3-arc
    edges = [(i, (i + 1) % 9) for i in range(9)] + [(0, 9), (9, 10), (10, 11), (11, 3)]
    G = build_graph(12, edges)
    C = CycleSeq(tuple(range(9)))
    (J,) = enumerate_jumps(G, C)
    assert J.is_short
    rep = check_jump_parity(G, C, J, 4, True)
    assert rep.status is Status.PASS
    forged = Jump(C, J.path, J.kind, "Q2" if J.across == "Q1" else "Q1")
    assert check_jump_parity(G, C, forged, 4, True).status is Status.FAIL


def test_jump_parity_skips():
    G, C, _ = theta_455()
    (J,) = enumerate_jumps(G, C)
    assert check_jump_parity(G, C, J, 4, False).status is Status.SKIPPED
    assert check_jump_parity(G, C, J, 3, True).status is Status.SKIPPED
    H = c9_with_general_path()
    C9 = CycleSeq(tuple(range(9)))
    Jg = classify_jump(H, C9, (0, 9, 10, 4))
    assert check_jump_parity(H, C9, Jg, 4, True).status is Status.SKIPPED


def test_witness_search():
    G, C, c = theta_455()
    res = find_short_or_one_vertex_jump(G, C)
    assert res.outcome is JumpSearch.WITNESS and res.witness.is_short
    assert find_short_or_one_vertex_jump(gen_cycle(9), CycleSeq(tuple(range(9)))).outcome is JumpSearch.NO_JUMPS
    K, H = gen_k4_subdivision((3,) * 6)
    C1 = H.faces()[0]
    res = find_short_or_one_vertex_jump(K, C1)
    assert res.outcome is JumpSearch.WITNESS and res.witness.is_short
    # C5 plus an apex on 0..3: only general jumps and a local jump across two vertices
    Hg = build_graph(6, [(i, (i + 1) % 5) for i in range(5)] + [(5, v) for v in range(4)])
    res = find_short_or_one_vertex_jump(Hg, CycleSeq(tuple(range(5))))
    assert res.outcome is JumpSearch.NO_WITNESS and res.jumps_seen == 3


def test_crossing_examples():
    C = CycleSeq(tuple(range(1, 10)))
    assert are_crossing(C, (1, 5), (3, 7))
    assert not are_crossing(C, (1, 5), (5, 8))
    assert not are_crossing(C, (1, 4), (5, 8))
    assert are_crossing(C, PathSeq((5, 10, 1)), (7, 3))


def test_close_path():
    P, Q = PathSeq((0, 5, 2)), PathSeq((0, 1, 2))
    assert close_path(P, Q).vertices == (0, 5, 2, 1)
    assert close_path(P, Q.reversed()).vertices == (0, 5, 2, 1)
    with pytest.raises(ValueError):
        close_path(P, PathSeq((0, 1)))


def nested_fixture():
    """C11 with a short jump 0-a-b-c-4 across the long arc C(4, 0) and a
    local jump 1-x-3 across vertex 2 nested inside C(0, 4).

    The host is a synthetic non-member; it exercises the pairing logic only.
    """
    C = [(i, (i + 1) % 11) for i in range(11)]
    outer = [(0, 11), (11, 12), (12, 13), (13, 4)]
    inner = [(1, 14), (14, 3), (14, 2)]
    return build_graph(15, C + outer + inner), CycleSeq(tuple(range(11)))


def test_nested_pairs_and_cover():
    G, C = nested_fixture()
    jumps = list(enumerate_jumps(G, C))
    by_path = {J.path.vertices: J for J in jumps}
    outer, inner = by_path[(0, 11, 12, 13, 4)], by_path[(1, 14, 3)]
    assert outer.is_short and outer.across_arc.ends == (4, 0)
    assert inner.kind is JumpKind.LOCAL_ONE_VERTEX and inner.vertex == 2
    pairs = list(nested_local_pairs(C, jumps))
    # either jump can play the outer role: both orders satisfy the pattern
    assert set(pairs) == {(outer, inner), (inner, outer)}
    cover = jump_hole_cover(jumps)
    assert cover == outer.across_arc.mask
    rep = check_nested_jump_cover(G, C, outer, inner, cover)
    # the local jump's own arc 1, 2, 3 lies on no jump hole
    assert rep.detail["uncovered"] == [1, 2, 3]
    assert rep.status is Status.FAIL


def test_nested_cover_fail_fixture():
    G, C = nested_fixture()
    jumps = list(enumerate_jumps(G, C))
    J1, J2 = next(iter(nested_local_pairs(C, jumps)))
    assert check_nested_jump_cover(G, C, J1, J2, 0).status is Status.FAIL
    full = C.mask
    assert check_nested_jump_cover(G, C, J1, J2, full).status is Status.PASS


def test_nested_pairs_need_a_local_jump():
    G, C, _ = theta_455()
    assert list(nested_local_pairs(C, list(enumerate_jumps(G, C)))) == []
