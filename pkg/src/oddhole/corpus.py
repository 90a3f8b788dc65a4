"""Built-in corpora and corpus files.

Every entry carries its provenance and, optionally, advertised facts
(girth, chromatic number, family membership).  Facts are advisory: callers
re-derive them with :func:`verify_facts` before relying on them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from .coloring import chromatic_number
from .formats import read_graph_file
from .generators import (
    gen_cycle,
    gen_k4_subdivision,
    gen_multi_theta,
    gen_theta,
    exhaustive_girth_graphs,
    petersen,
    random_girth_graph,
)
from .graph import Graph, build_graph
from .holes import girth, is_in_Gl

GRAPH_SUFFIXES = (".g6", ".s6", ".dimacs", ".col")


@dataclass
class CorpusEntry:
    id: str
    graph: Graph
    provenance: dict
    facts: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"id": self.id, "n": self.graph.n, "m": self.graph.m, "provenance": self.provenance}


def verify_facts(entry: CorpusEntry) -> list[str]:
    """Re-derive every advertised fact; returns the mismatches."""
    bad = []
    G = entry.graph
    facts = entry.facts
    if "girth" in facts:
        g = girth(G)
        want = facts["girth"]
        if (math.inf if want is None else want) != g:
            bad.append(f"girth: advertised {want}, found {g}")
    if "chi" in facts:
        chi = chromatic_number(G).value
        if chi != facts["chi"]:
            bad.append(f"chi: advertised {facts['chi']}, found {chi}")
    for l, member in facts.get("member", {}).items():
        got = is_in_Gl(G, int(l)).member
        if got != member:
            bad.append(f"membership at l={l}: advertised {member}, found {got}")
    return bad


# (n, m, seed) triples for the random girth-9 part of the l=4 corpus; all of
# them reach their edge target quickly with a connected start
RANDOM_GIRTH9 = (
    (16, 17, 0), (18, 19, 32), (20, 21, 4), (21, 22, 20), (22, 23, 36),
    (22, 25, 6), (24, 25, 8), (25, 26, 24), (25, 27, 9), (26, 28, 25),
    (28, 29, 12), (29, 30, 28), (29, 31, 13), (30, 32, 29), (30, 33, 14),
    (23, 27, 7), (26, 29, 10), (27, 31, 11),
)


def cycle_with_local_jump(length: int = 15, spoke: int = 7) -> Graph:
    """C9 on 0..8 plus a ``length``-edge path from 0 to 2 whose ``spoke``-th
    interior vertex is joined to 1, giving a jump local across vertex 1."""
    edges = [(k, (k + 1) % 9) for k in range(9)]
    chain = [0] + list(range(9, 9 + length - 1)) + [2]
    edges += list(zip(chain, chain[1:]))
    edges.append((chain[spoke], 1))
    return build_graph(9 + length - 1, edges)


def _entry(id_: str, G: Graph, family: str, params, **facts) -> CorpusEntry:
    return CorpusEntry(id_, G, {"family": family, "params": params}, facts)


def builtin_corpus(l: int = 4, seed: int = 0) -> list[CorpusEntry]:
    """The structured families (and, at ``l = 4``, random girth-9 graphs).

    ``seed`` shifts the seeds of the random part; 0 gives the reference set.
    """
    if l == 4:
        return _corpus_l4(seed)
    if l == 2:
        return _corpus_l2()
    if l >= 2:
        k = 2 * l + 1
        return [_entry(f"cycle-{k}", gen_cycle(k), "cycle", [k], girth=k, member={l: True})]
    raise ValueError("l must be at least 2")


def _corpus_l4(seed: int) -> list[CorpusEntry]:
    out = [_entry("cycle-9", gen_cycle(9), "cycle", [9], girth=9, chi=3, member={4: True})]
    for a in (4, 3, 2, 1):
        b = 9 - a
        out.append(
            _entry(f"theta-{a}-{b}-{b}", gen_theta(a, b, b), "theta", [a, b, b], girth=9, member={4: True})
        )
    out.append(_entry("theta-4-4-5", gen_theta(4, 4, 5), "theta", [4, 4, 5], girth=8, member={4: False}))
    out.append(_entry("theta-4-5-7", gen_theta(4, 5, 7), "theta", [4, 5, 7], girth=9, member={4: False}))
    out.append(
        _entry("multi-theta-4-5-5-5", gen_multi_theta((4, 5, 5, 5)), "multi-theta", [4, 5, 5, 5],
               girth=9, member={4: True})
    )
    G, _ = gen_k4_subdivision((3, 3, 3, 3, 3, 3))
    out.append(_entry("k4-3-3-3-3-3-3", G, "k4-subdivision", [3] * 6, girth=9, chi=3, member={4: True}))
    G, _ = gen_k4_subdivision((3, 3, 1, 2, 3, 2))
    out.append(_entry("k4-3-3-1-2-3-2", G, "k4-subdivision", [3, 3, 1, 2, 3, 2], girth=6))
    out.append(_entry("cycle-9-local-jump", cycle_with_local_jump(), "local-jump", [15, 7], girth=9, member={4: True}))
    for n, m, s in RANDOM_GIRTH9:
        s += 1000 * seed
        res = random_girth_graph(n, m, 9, s, connected=True)
        out.append(
            CorpusEntry(
                f"random-g9-n{n}-m{m}-s{s}",
                res.graph,
                {"family": "random-girth", "params": [n, m, 9, s], "complete": res.complete},
            )
        )
    return out


def _corpus_l2() -> list[CorpusEntry]:
    out = [
        _entry("petersen", petersen(), "petersen", [], girth=5, chi=3, member={2: True}),
        _entry("cycle-5", gen_cycle(5), "cycle", [5], girth=5, chi=3, member={2: True}),
        _entry("theta-2-3-3", gen_theta(2, 3, 3), "theta", [2, 3, 3], girth=5, member={2: True}),
    ]
    G, _ = gen_k4_subdivision((2, 2, 2, 2, 2, 2))
    out.append(_entry("k4-2-2-2-2-2-2", G, "k4-subdivision", [2] * 6, girth=6))
    for i, G in enumerate(exhaustive_girth_graphs(10, 5)):
        out.append(CorpusEntry(f"girth5-n{G.n}-{i:03d}", G, {"family": "exhaustive-girth", "params": [10, 5, i]}))
    return out


def load_corpus_dir(path: str | Path) -> list[CorpusEntry]:
    """Every graph in the graph files of a directory, in sorted file order."""
    root = Path(path)
    if not root.is_dir():
        raise FileNotFoundError(f"{root} is not a directory")
    out = []
    for f in sorted(root.iterdir()):
        if f.suffix.lower() not in GRAPH_SUFFIXES:
            continue
        for i, G in enumerate(read_graph_file(f)):
            out.append(CorpusEntry(f"{f.stem}-{i:03d}", G, {"family": "file", "source": f.name, "record": i}))
    return out


def load_corpus(sources: Iterable[str | Path]) -> list[CorpusEntry]:
    out = []
    for src in sources:
        p = Path(src)
        if p.is_dir():
            out.extend(load_corpus_dir(p))
        else:
            for i, G in enumerate(read_graph_file(p)):
                out.append(CorpusEntry(f"{p.stem}-{i:03d}", G, {"family": "file", "source": p.name, "record": i}))
    return out
