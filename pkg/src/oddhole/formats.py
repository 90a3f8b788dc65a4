"""graph6, sparse6 and DIMACS edge-format readers and writers.

The graph6/sparse6 encoders follow the published bit layouts exactly, so
``write(load(b)) == b`` for canonical input (no header, trailing newline
stripped).
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

from .graph import Graph, GraphError, build_graph

GRAPH6_HEADER = b">>graph6<<"
SPARSE6_HEADER = b">>sparse6<<"


class FormatError(ValueError):
    """Malformed graph file.  ``code`` names the failure class:

    ``header``  bad or missing size prefix / DIMACS problem line
    ``width``   data length disagrees with the declared size
    ``char``    byte outside the printable 63..126 range
    ``range``   vertex index outside ``0..n-1``
    ``loop``    self-loop (not representable in a simple graph)
    ``syntax``  unparseable DIMACS line
    """

    def __init__(self, code: str, message: str):
        super().__init__(f"[{code}] {message}")
        self.code = code


def _encode_n(n: int) -> bytes:
    if n < 0:
        raise ValueError("negative vertex count")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError("graph too large for graph6")


def _decode_n(data: bytes) -> tuple[int, bytes]:
    if not data:
        raise FormatError("header", "empty input")
    if data[0] != 126:
        return data[0] - 63, data[1:]
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise FormatError("header", "truncated 8-byte size field")
        n = 0
        for c in data[2:8]:
            n = (n << 6) | (c - 63)
        return n, data[8:]
    if len(data) < 4:
        raise FormatError("header", "truncated 4-byte size field")
    n = 0
    for c in data[1:4]:
        n = (n << 6) | (c - 63)
    return n, data[4:]


def _check_chars(data: bytes) -> None:
    for c in data:
        if not 63 <= c <= 126:
            raise FormatError("char", f"byte {c!r} outside graph6 range")


def _strip(data: bytes | str, header: bytes) -> bytes:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(header):
        data = data[len(header):]
    return data


def load_graph6(data: bytes | str) -> Graph:
    """Decode a single graph6 record."""
    data = _strip(data, GRAPH6_HEADER)
    _check_chars(data)
    n, body = _decode_n(data)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise FormatError("width", f"expected {need} data bytes for n={n}, got {len(body)}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return build_graph(n, edges)


def write_graph6(G: Graph) -> bytes:
    """Encode ``G`` as graph6 (no header, no newline)."""
    n = G.n
    bits = []
    for j in range(1, n):
        row = G.bits[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    out = bytearray(_encode_n(n))
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k : k + 6]:
            v = (v << 1) | b
        out.append(v + 63)
    return bytes(out)


def _sparse6_k(n: int) -> int:
    k = 1
    while 1 << k < n:
        k += 1
    return k


def write_sparse6(G: Graph) -> bytes:
    """Encode ``G`` as sparse6 (leading ``:``, no newline)."""
    n = G.n
    k = _sparse6_k(n)

    def enc(x: int) -> list[int]:
        return [(x >> (k - 1 - i)) & 1 for i in range(k)]

    bits: list[int] = []
    cur = 0
    for v, u in sorted((v, u) for u, v in G.edges()):
        if v == cur:
            bits.append(0)
            bits.extend(enc(u))
        elif v == cur + 1:
            cur = v
            bits.append(1)
            bits.extend(enc(u))
        else:
            cur = v
            bits.append(1)
            bits.extend(enc(v))
            bits.append(0)
            bits.extend(enc(u))
    pad = -len(bits) % 6
    if k < 6 and n == (1 << k) and pad >= k and cur < n - 1:
        # padding of ones would read as an edge to n-1
        bits.append(0)
        pad = -len(bits) % 6
    bits.extend([1] * pad)
    out = bytearray(b":")
    out += _encode_n(n)
    for i in range(0, len(bits), 6):
        v = 0
        for b in bits[i : i + 6]:
            v = (v << 1) | b
        out.append(v + 63)
    return bytes(out)


def load_sparse6(data: bytes | str) -> Graph:
    """Decode a single sparse6 record."""
    data = _strip(data, SPARSE6_HEADER)
    if not data.startswith(b":"):
        raise FormatError("header", "sparse6 records start with ':'")
    data = data[1:]
    _check_chars(data)
    n, body = _decode_n(data)
    k = _sparse6_k(n)
    stream = []
    for c in body:
        d = c - 63
        stream.extend((d >> s) & 1 for s in range(5, -1, -1))
    edges = []
    v = 0
    i = 0
    while i + 1 + k <= len(stream):
        b = stream[i]
        x = 0
        for t in stream[i + 1 : i + 1 + k]:
            x = (x << 1) | t
        i += 1 + k
        if b:
            v += 1
        if x >= n or v >= n:
            break
        if x > v:
            v = x
        else:
            if x == v:
                raise FormatError("loop", f"self-loop at vertex {x}")
            edges.append((x, v))
    return build_graph(n, edges)


def load_dimacs(text: str | bytes) -> Graph:
    """Parse DIMACS edge format: ``p edge n m`` then ``e u v`` (1-based)."""
    if isinstance(text, bytes):
        text = text.decode("ascii")
    n = None
    declared_m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise FormatError("header", f"line {lineno}: second problem line")
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise FormatError("header", f"line {lineno}: expected 'p edge n m'")
            try:
                n, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise FormatError("header", f"line {lineno}: non-integer size") from None
        elif parts[0] == "e":
            if n is None:
                raise FormatError("header", f"line {lineno}: edge before problem line")
            if len(parts) != 3:
                raise FormatError("syntax", f"line {lineno}: expected 'e u v'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise FormatError("syntax", f"line {lineno}: non-integer vertex") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise FormatError("range", f"line {lineno}: vertex outside 1..{n}")
            if u == v:
                raise FormatError("loop", f"line {lineno}: self-loop at {u}")
            edges.append((u - 1, v - 1))
        else:
            raise FormatError("syntax", f"line {lineno}: unknown line type {parts[0]!r}")
    if n is None:
        raise FormatError("header", "missing problem line")
    if len(edges) != declared_m:
        raise FormatError("width", f"problem line declares {declared_m} edges, found {len(edges)}")
    return build_graph(n, edges)


def write_dimacs(G: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"c {c}" for c in comment.splitlines())
    lines.append(f"p edge {G.n} {G.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in G.edges())
    return "\n".join(lines) + "\n"


def parse_records(data: bytes, fmt: str | None = None) -> list[Graph]:
    """All graphs in a multi-record graph6/sparse6 blob, or one DIMACS graph.

    ``fmt`` is ``"g6"``, ``"s6"``, ``"dimacs"`` or None to sniff.
    """
    if fmt is None:
        fmt = sniff_format(data)
    if fmt == "dimacs":
        return [load_dimacs(data)]
    if fmt not in ("g6", "s6"):
        raise FormatError("header", f"unknown format {fmt!r}")
    out = []
    for line in data.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith(SPARSE6_HEADER) or line.startswith(b":"):
            out.append(load_sparse6(line))
        else:
            out.append(load_graph6(line))
    return out


def sniff_format(data: bytes) -> str:
    head = data.lstrip()[:16]
    if head.startswith(b"p ") or head.startswith(b"c") or head.startswith(b"e "):
        return "dimacs"
    if head.startswith(SPARSE6_HEADER) or head.startswith(b":"):
        return "s6"
    return "g6"


def read_graph_file(path: str | Path, fmt: str | None = None) -> list[Graph]:
    path = Path(path)
    data = path.read_bytes()
    if fmt is None:
        suffix = path.suffix.lower()
        fmt = {".g6": "g6", ".s6": "s6", ".dimacs": "dimacs", ".col": "dimacs"}.get(suffix)
    try:
        return parse_records(data, fmt)
    except GraphError as exc:
        raise FormatError("range", str(exc)) from exc


def write_records(graphs: Iterable[Graph], fmt: str = "g6") -> bytes:
    if fmt == "g6":
        return b"".join(write_graph6(G) + b"\n" for G in graphs)
    if fmt == "s6":
        return b"".join(write_sparse6(G) + b"\n" for G in graphs)
    if fmt == "dimacs":
        graphs = list(graphs)
        if len(graphs) != 1:
            raise ValueError("DIMACS holds exactly one graph")
        return write_dimacs(graphs[0]).encode("ascii")
    raise ValueError(f"unknown format {fmt!r}")
