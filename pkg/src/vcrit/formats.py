"""Text formats for graphs: graph6 words and brace-delimited adjacency lists.

graph6 packs the upper triangle of the adjacency matrix column-major into
printable bytes (values 63..126, six bits each, zero-padded on the right).
The adjacency-list format is ``{v: w1 w2 ...; v: ...}`` with one record per
vertex; every edge must be listed from both endpoints, and asymmetry is a
parse error rather than something we silently repair, so transcription
mistakes in hand-written fixtures surface immediately.
"""

from __future__ import annotations

import re

from .graphs import Graph, MAX_VERTICES


class GraphFormatError(ValueError):
    """Malformed graph text; carries a byte offset when one makes sense."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


def _pair_order(n: int):
    # column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    for j in range(1, n):
        for i in range(j):
            yield i, j


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 word (no trailing newline) into a Graph."""
    data = text.encode("ascii", errors="surrogateescape")
    for off, b in enumerate(data):
        if not 63 <= b <= 126:
            raise GraphFormatError(f"non-printable or out-of-range byte {b:#x}", off)
    if not data:
        raise GraphFormatError("empty graph6 word", 0)
    pos = 0
    if data[0] == 126:
        if len(data) < 4:
            raise GraphFormatError("truncated multi-byte vertex count", len(data))
        if data[1] == 126:
            raise GraphFormatError("8-byte vertex counts exceed the 64-vertex cap", 1)
        n = 0
        for b in data[1:4]:
            n = n << 6 | (b - 63)
        pos = 4
    else:
        n = data[0] - 63
        pos = 1
    if n > MAX_VERTICES:
        raise GraphFormatError(f"vertex count {n} exceeds the {MAX_VERTICES}-vertex cap", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos < nbytes:
        raise GraphFormatError(
            f"bit payload too short: need {nbytes} bytes, have {len(data) - pos}", len(data)
        )
    if len(data) - pos > nbytes:
        raise GraphFormatError("trailing garbage after bit payload", pos + nbytes)
    masks = [0] * n
    bit = 0
    for i, j in _pair_order(n):
        byte = data[pos + bit // 6] - 63
        if byte >> (5 - bit % 6) & 1:
            masks[i] |= 1 << j
            masks[j] |= 1 << i
        bit += 1
    # padding bits must be zero, otherwise the word is not canonical
    while bit < 6 * nbytes:
        byte = data[pos + bit // 6] - 63
        if byte >> (5 - bit % 6) & 1:
            raise GraphFormatError("nonzero padding bit", pos + bit // 6)
        bit += 1
    return Graph._unsafe(n, tuple(masks))


def emit_graph6(g: Graph) -> str:
    """Minimal-length graph6 word for g; parse_graph6 round-trips it."""
    n = g.n
    if n <= 62:
        head = [n + 63]
    else:
        head = [126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    out = list(head)
    acc = 0
    filled = 0
    for i, j in _pair_order(n):
        acc = acc << 1 | (g.neighbors_mask(i) >> j & 1)
        filled += 1
        if filled == 6:
            out.append(acc + 63)
            acc, filled = 0, 0
    if filled:
        out.append((acc << (6 - filled)) + 63)
    return bytes(out).decode("ascii")


_RECORD_RE = re.compile(r"^\s*(\d+)\s*:\s*((?:\d+\s*)*)$")


def parse_adjacency_list(text: str) -> Graph:
    """Parse ``{v: w1 w2 ...; ...}`` where ids are 0..n-1 and listing is two-way.

    Each record must give the complete neighbor set of its vertex; self-loops,
    out-of-range ids, duplicate records and one-sided edges are rejected with
    the offending record named.
    """
    body = text.strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise GraphFormatError("adjacency list must be enclosed in braces")
    body = body[1:-1]
    records: dict[int, list[int]] = {}
    for raw in body.split(";"):
        if not raw.strip():
            continue
        m = _RECORD_RE.match(raw)
        if m is None:
            raise GraphFormatError(f"unparseable record {raw.strip()!r}")
        v = int(m.group(1))
        nbrs = [int(tok) for tok in m.group(2).split()]
        if v in records:
            raise GraphFormatError(f"duplicate record for vertex {v}")
        records[v] = nbrs
    n = len(records)
    if sorted(records) != list(range(n)):
        missing = sorted(set(range(n)) - set(records))
        raise GraphFormatError(
            f"vertex ids must be exactly 0..{n - 1}; records present: {sorted(records)}"
            + (f", missing {missing}" if missing else "")
        )
    if n > MAX_VERTICES:
        raise GraphFormatError(f"vertex count {n} exceeds the {MAX_VERTICES}-vertex cap")
    masks = [0] * n
    for v, nbrs in records.items():
        seen = 0
        for u in nbrs:
            if u == v:
                raise GraphFormatError(f"record {v!r} lists a self-loop")
            if not 0 <= u < n:
                raise GraphFormatError(f"record {v!r} lists out-of-range vertex {u}")
            if seen >> u & 1:
                raise GraphFormatError(f"record {v!r} lists vertex {u} twice")
            seen |= 1 << u
        masks[v] = seen
    for v in range(n):
        for u in range(n):
            if masks[v] >> u & 1 and not masks[u] >> v & 1:
                raise GraphFormatError(
                    f"asymmetric listing: record {v!r} lists {u} but record {u!r} omits {v}"
                )
    return Graph._unsafe(n, tuple(masks))


def emit_adjacency_list(g: Graph) -> str:
    parts = []
    for v in range(g.n):
        nbrs = " ".join(str(u) for u in g.neighbors(v))
        parts.append(f"{v}: {nbrs}" if nbrs else f"{v}:")
    return "{" + "; ".join(parts) + "}"


def read_graphs(text: str) -> list[Graph]:
    """Read a stream: graph6 one per line; lines starting with ``{`` are
    adjacency lists (a record block may span lines until braces balance)."""
    graphs = []
    lines = text.splitlines()
    i = 0
    while i < len(lines):
        line = lines[i].strip()
        i += 1
        if not line:
            continue
        if line.startswith("{"):
            block = line
            while block.count("{") > block.count("}") and i < len(lines):
                block += " " + lines[i].strip()
                i += 1
            graphs.append(parse_adjacency_list(block))
        else:
            graphs.append(parse_graph6(line))
    return graphs


def write_graph6_stream(graphs) -> str:
    return "".join(emit_graph6(g) + "\n" for g in graphs)
