import pytest

from oddhole.corpus import (
    RANDOM_GIRTH9,
    CorpusEntry,
    builtin_corpus,
    cycle_with_local_jump,
    load_corpus,
    load_corpus_dir,
    verify_facts,
)
from oddhole.formats import write_records
from oddhole.generators import gen_cycle, petersen
from oddhole.holes import girth, is_in_Gl
from oddhole.jumps import JumpKind, enumerate_jumps
from oddhole.graph import CycleSeq


def test_l4_facts_hold():
    corpus = builtin_corpus(4)
    assert len(corpus) == 11 + len(RANDOM_GIRTH9)
    for entry in corpus:
        assert verify_facts(entry) == [], entry.id


def test_random_entries_reach_their_targets():
    for entry in builtin_corpus(4):
        if entry.provenance["family"] == "random-girth":
            n, m, g, _ = entry.provenance["params"]
            assert entry.provenance["complete"]
            assert (entry.graph.n, entry.graph.m) == (n, m)
            assert girth(entry.graph) >= g


def test_l2_structured_facts_hold():
    for entry in builtin_corpus(2):
        if entry.provenance["family"] != "exhaustive-girth":
            assert verify_facts(entry) == [], entry.id


def test_other_l_and_bad_l():
    (entry,) = builtin_corpus(3)
    assert entry.graph == gen_cycle(7) and verify_facts(entry) == []
    with pytest.raises(ValueError):
        builtin_corpus(1)


def test_corpus_is_deterministic():
    a = [(e.id, e.graph) for e in builtin_corpus(4)]
    b = [(e.id, e.graph) for e in builtin_corpus(4)]
    assert a == b
    shifted = [e.id for e in builtin_corpus(4, seed=1)]
    assert shifted != [i for i, _ in a]


def test_wrong_facts_are_reported():
    bad = CorpusEntry("x", petersen(), {}, {"girth": 6, "chi": 2, "member": {2: False}})
    assert len(verify_facts(bad)) == 3


def test_local_jump_entry():
    G = cycle_with_local_jump()
    assert is_in_Gl(G, 4).member
    kinds = {J.kind for J in enumerate_jumps(G, CycleSeq(tuple(range(9))))}
    assert JumpKind.LOCAL_ONE_VERTEX in kinds


def test_load_directory_and_files(tmp_path):
    (tmp_path / "a.g6").write_bytes(write_records([gen_cycle(5), petersen()], "g6"))
    (tmp_path / "b.col").write_bytes(write_records([gen_cycle(9)], "dimacs"))
    (tmp_path / "notes.txt").write_text("ignored")
    entries = load_corpus_dir(tmp_path)
    assert [e.id for e in entries] == ["a-000", "a-001", "b-000"]
    assert entries[1].graph == petersen()
    assert entries[2].provenance == {"family": "file", "source": "b.col", "record": 0}
    mixed = load_corpus([tmp_path / "b.col", tmp_path])
    assert [e.id for e in mixed] == ["b-000", "a-000", "a-001", "b-000"]
    with pytest.raises(FileNotFoundError):
        load_corpus_dir(tmp_path / "b.col")
