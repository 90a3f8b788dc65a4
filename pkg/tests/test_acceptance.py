"""Acceptance criteria, one test each; every test prints a PASS/FAIL line."""

import json
import subprocess
import sys
import time
from contextlib import contextmanager

import pytest

from oddhole.cli import main
from oddhole.coloring import chromatic_number, k_colorable, verify_coloring
from oddhole.corpus import builtin_corpus
from oddhole.cuts import k2_cuts, p3_cuts, two_edge_cuts
from oddhole.generators import gen_k4_subdivision, petersen
from oddhole.graph import is_connected
from oddhole.holes import Membership, enumerate_induced_cycles, girth, is_in_Gl
from oddhole.k4 import K4Class, classify, difference
from oddhole.results import Status
from oddhole.validator import run_lemma_suite

from oracles import brute_chromatic, fixture_graphs, induced_cycle_sets, k2_cut_set, p3_cut_set, two_edge_cut_set

GREEN_CHECKS = ("L2.3", "L2.5.1", "L2.5.2", "L2.5.3", "L2.7", "C2.10", "L2.11", "L2.12.2", "T3.2", "T3.3")


@pytest.fixture
def verdict(capsys):
    @contextmanager
    def announce(label):
        ok = False
        try:
            yield
            ok = True
        finally:
            with capsys.disabled():
                print(f"\n[{'PASS' if ok else 'FAIL'}] {label}")
    return announce


def test_criterion_1_corpus_members_are_3_colourable(verdict):
    with verdict("1: every certified l=4 corpus graph gets a verified 3-colouring, suite < 300 s"):
        t0 = time.perf_counter()
        corpus = builtin_corpus(4)
        members = []
        for e in corpus:
            v = is_in_Gl(e.graph, 4)
            assert v.status is not Membership.UNKNOWN, e.id
            if v.member:
                members.append(e)
        ids = {e.id for e in members}
        assert {"cycle-9", "theta-4-5-5", "k4-3-3-3-3-3-3"} <= ids
        assert any(i.startswith("random-g9") for i in ids)
        assert all(e.graph.n <= 30 for e in members)
        for e in members:
            res = k_colorable(e.graph, 3)
            assert res.found and verify_coloring(e.graph, res.coloring, 3), e.id
        report = run_lemma_suite(corpus, 4)
        assert all(r.status_of("T1.2") is not Status.FAIL for r in report.entries)
        assert time.perf_counter() - t0 < 300


def test_criterion_2_petersen(verdict):
    with verdict("2: Petersen is certified for l=2 with chromatic number 3, < 1 s"):
        t0 = time.perf_counter()
        P = petersen()
        v = is_in_Gl(P, 2)
        assert v.status is Membership.IN and girth(P) == 5
        assert {c.length for c in enumerate_induced_cycles(P, parity="odd")} == {5}
        res = chromatic_number(P)
        assert res.value == 3 and verify_coloring(P, res.coloring, 3)
        assert time.perf_counter() - t0 < 1.0


def test_criterion_3_oracle_equivalence(verdict):
    with verdict("3: cycles (n<=10, >=200 graphs), cuts (n<=12), chromatic (n<=8) match oracles"):
        graphs = [G for G in fixture_graphs() if G.n <= 10]
        assert len(graphs) >= 200
        for G in graphs:
            assert {frozenset(c.vertices) for c in enumerate_induced_cycles(G)} == induced_cycle_sets(G)
        for G in fixture_graphs(200, 12, seed=3):
            if G.n <= 12 and is_connected(G):
                assert {frozenset(w.elements) for w in two_edge_cuts(G)} == two_edge_cut_set(G)
                assert {w.elements for w in k2_cuts(G)} == k2_cut_set(G)
                assert {frozenset(w.elements) for w in p3_cuts(G)} == p3_cut_set(G)
        for G in fixture_graphs(220, 8, seed=17):
            assert chromatic_number(G).value == brute_chromatic(G)


def _assert_green(report):
    for e in report.entries:
        for c in e.checks:
            if c.check not in GREEN_CHECKS:
                continue
            assert c.status is not Status.FAIL, (e.id, c.check, c.witness)
            if c.status in (Status.SKIPPED, Status.UNKNOWN):
                assert c.reason, (e.id, c.check)
            if c.status is Status.UNKNOWN:
                assert "budget" in c.reason, (e.id, c.check, c.reason)


def test_criterion_4_lemma_suite_green(verdict):
    with verdict("4: lemma suite reports zero Fail at l=4 and l=2"):
        r4 = run_lemma_suite(builtin_corpus(4), 4)
        _assert_green(r4)
        assert any(e.status_of("L2.7") is Status.PASS for e in r4.entries)
        assert any(e.status_of("T3.3") is Status.PASS for e in r4.entries)
        r2 = run_lemma_suite(builtin_corpus(2), 2)
        _assert_green(r2)
        assert not r4.has_fail and not r2.has_fail


def test_criterion_5_structure_arithmetic(verdict):
    with verdict("5: K4(3^6) faces 9, odd regular, difference 0; (3,3,1,2,3,2) balanced with faces 7,7,6,8"):
        _, H = gen_k4_subdivision((3,) * 6)
        assert H.face_lengths() == (9, 9, 9, 9)
        assert classify(H) is K4Class.ODD_REGULAR
        assert difference(H) == 0
        _, B = gen_k4_subdivision((3, 3, 1, 2, 3, 2))
        assert classify(B) is K4Class.BALANCED_1_2
        assert B.face_lengths() == (7, 7, 6, 8)


def test_criterion_6_deterministic_json(verdict, tmp_path):
    with verdict("6: two `lemmas --json` runs give byte-identical reports"):
        outs = []
        for name in ("a.json", "b.json"):
            dest = tmp_path / name
            proc = subprocess.run(
                [sys.executable, "-m", "oddhole.cli", "lemmas", "--l", "4", "--json", str(dest)],
                capture_output=True,
            )
            assert proc.returncode == 0, proc.stderr
            outs.append(dest.read_bytes())
        assert outs[0] == outs[1]
        assert json.loads(outs[0])["l"] == 4
        assert main(["lemmas", "--l", "4", "--json", str(tmp_path / "c.json"), "--jobs", "2"]) == 0
        assert (tmp_path / "c.json").read_bytes() == outs[0]
