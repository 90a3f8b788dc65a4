from itertools import combinations

from hypothesis import given, settings, strategies as st

from oddhole.coloring import chromatic_number, k_colorable, verify_coloring
from oddhole.cuts import k2_cuts, p3_cuts, two_edge_cuts, verify_cut
from oddhole.formats import (
    load_dimacs, load_graph6, load_sparse6, write_dimacs, write_graph6, write_sparse6,
)
from oddhole.generators import gen_k4_subdivision
from oddhole.graph import (
    CycleSeq, EdgeSubgraph, arc, build_graph, induced_subgraph, is_connected, is_induced_cycle, members,
)
from oddhole.holes import enumerate_induced_cycles
from oddhole.jumps import JumpKind, enumerate_jumps
from oddhole.k4 import classify, classify_in

settings.register_profile("oddhole", max_examples=80, deadline=None)
settings.load_profile("oddhole")


@st.composite
def graphs(draw, n_min=0, n_max=10):
    n = draw(st.integers(n_min, n_max))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_graph(n, chosen)


k4_specs = st.tuples(*[st.integers(1, 4)] * 6)


@given(graphs())
def test_bitmaps_agree_with_lists(G):
    for v in G.vertices:
        assert members(G.bits[v]) == list(G.adj[v])
        assert G.degree(v) == len(G.adj[v])
    assert sum(G.degree(v) for v in G.vertices) == 2 * G.m


@given(st.integers(3, 15), st.data())
def test_arcs_partition_the_cycle(n, data):
    C = CycleSeq(tuple(range(n)))
    u, v = data.draw(st.lists(st.integers(0, n - 1), min_size=2, max_size=2, unique=True))
    a, b = arc(C, u, v), arc(C, v, u)
    assert a.ends == (u, v) and b.ends == (v, u)
    assert set(a.interior) | set(b.interior) | {u, v} == set(range(n))
    assert not set(a.interior) & set(b.interior)
    assert a.length + b.length == n


@given(graphs(n_min=2), st.data())
def test_xor_is_associative_and_commutative(G, data):
    if not G.m:
        return
    sub = st.lists(st.sampled_from(G.edges()), unique=True)
    A, B, C = (EdgeSubgraph.of(G, data.draw(sub)) for _ in range(3))
    assert A ^ B == B ^ A
    assert (A ^ B) ^ C == A ^ (B ^ C)
    assert len(A ^ A) == 0


@given(k4_specs)
def test_fourth_face_is_xor_of_the_others(spec):
    G, H = gen_k4_subdivision(spec)
    c1, c2, c3, c4 = (EdgeSubgraph.from_cycle(c) for c in H.faces())
    assert c1 ^ c2 ^ c3 == c4
    assert sum(H.face_lengths()) == 2 * sum(spec)


@given(k4_specs, st.permutations(range(4)))
def test_classification_ignores_labelling(spec, perm):
    G, H = gen_k4_subdivision(spec)
    R = H.relabel(tuple(H.branch[i] for i in perm))
    assert classify(R) is classify(H)
    assert classify_in(G, R) is classify_in(G, H)


@given(graphs())
def test_full_induced_subgraph_is_identity(G):
    H, mapping = induced_subgraph(G, G.all_mask)
    assert H == G and mapping == list(range(G.n))


@given(graphs(n_max=9))
def test_emitted_cycles_are_induced(G):
    for C in enumerate_induced_cycles(G):
        assert is_induced_cycle(G, C)


@given(graphs(n_min=5, n_max=10))
def test_jump_invariants(G):
    for C in enumerate_induced_cycles(G, min_len=5, parity="odd"):
        for J in enumerate_jumps(G, C):
            s, t = J.ends
            assert s < t and not G.has_edge(s, t)
            assert not J.path.interior_mask & C.mask
            if J.kind is JumpKind.SHORT:
                assert (J.path.length + J.across_arc.length) % 2 == 1
            if J.kind is JumpKind.LOCAL_ONE_VERTEX:
                assert J.across_arc.interior == (J.vertex,)
            if J.kind is JumpKind.GENERAL:
                assert J.across is None


@given(graphs(n_max=9))
def test_colourability_is_monotone(G):
    chi = chromatic_number(G).value
    for k in range(1, G.n + 2):
        res = k_colorable(G, k)
        assert res.found == (k >= chi)
        if res.found:
            assert verify_coloring(G, res.coloring, k)


@given(graphs())
def test_format_round_trips(G):
    assert load_graph6(write_graph6(G)) == G
    if G.n:
        assert load_sparse6(write_sparse6(G)) == G
    assert load_dimacs(write_dimacs(G)) == G


@given(graphs(n_min=1, n_max=9))
def test_cut_witnesses_reverify(G):
    if not is_connected(G):
        return
    for stream in (two_edge_cuts(G), k2_cuts(G), p3_cuts(G)):
        for w in stream:
            assert verify_cut(G, w)
