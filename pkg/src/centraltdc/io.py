"""graph6 and edge-list codecs, witness files.

graph6 packs the upper triangle of the adjacency matrix column by column
(x(0,1), x(0,2), x(1,2), x(0,3), ...) into 6-bit groups, each offset by 63,
after a size header N(n).
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator

from .coloring import Coloring
from .errors import MalformedColoringError, ParseError
from .graph import Graph

GRAPH6_HEADER = b">>graph6<<"


def _encode_size(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def to_graph6(g: Graph) -> str:
    out = bytearray(_encode_size(g.n))
    acc = nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def from_graph6(data: str | bytes) -> Graph:
    raw = data.encode("ascii") if isinstance(data, str) else bytes(data)
    raw = raw.strip()
    base = 0
    if raw.startswith(GRAPH6_HEADER):
        raw = raw[len(GRAPH6_HEADER):]
        base = len(GRAPH6_HEADER)
    if not raw:
        raise ParseError("empty graph6 string", base)
    for pos, b in enumerate(raw):
        if not 63 <= b <= 126:
            raise ParseError(f"byte {b!r} outside the graph6 range 63..126", base + pos)
    if raw[0] != 126:
        n, pos = raw[0] - 63, 1
    elif len(raw) >= 2 and raw[1] == 126:
        if len(raw) < 8:
            raise ParseError("truncated 8-byte graph6 size header", base)
        n, pos = 0, 8
        for b in raw[2:8]:
            n = (n << 6) | (b - 63)
    else:
        if len(raw) < 4:
            raise ParseError("truncated 4-byte graph6 size header", base)
        n, pos = 0, 4
        for b in raw[1:4]:
            n = (n << 6) | (b - 63)
    if n < 1:
        raise ParseError("graph6 order must be at least 1", base)
    nbits = n * (n - 1) // 2
    expected = pos + (nbits + 5) // 6
    if len(raw) != expected:
        raise ParseError(f"graph6 body has {len(raw) - pos} bytes, expected {expected - pos}", base + min(len(raw), expected))
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = raw[pos + k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if nbits % 6 and (raw[-1] - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise ParseError("nonzero padding bits in graph6 body", base + len(raw) - 1)
    return Graph(n, tuple(adj))


def read_graph6_stream(data: str | bytes) -> Iterator[Graph]:
    """One graph per non-empty line."""
    text = data.decode("ascii") if isinstance(data, bytes) else data
    offset = 0
    for line in text.splitlines(keepends=True):
        body = line.strip()
        if body:
            try:
                yield from_graph6(body)
            except ParseError as exc:
                local = exc.offset or 0
                raise ParseError(str(exc).split(" (at byte")[0], offset + local) from None
        offset += len(line.encode("ascii"))


def to_edge_list(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(str(g.n))
    lines += [f"{i} {j}" for i, j in g.edges]
    return "\n".join(lines) + "\n"


def from_edge_list(data: str | bytes) -> Graph:
    """First non-comment line is ``n``, then one ``i j`` pair per line
    (0-based). ``#`` starts a comment."""
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    n = None
    edges = []
    offset = 0
    for line in text.splitlines(keepends=True):
        body = line.split("#", 1)[0]
        tokens = body.split()
        if tokens:
            try:
                values = [int(t) for t in tokens]
            except ValueError:
                raise ParseError(f"non-integer token in line {line.strip()!r}", offset) from None
            if n is None:
                if len(values) != 1 or values[0] < 1:
                    raise ParseError("first line must be a positive vertex count", offset)
                n = values[0]
            else:
                if len(values) != 2:
                    raise ParseError(f"expected 'i j', got {line.strip()!r}", offset)
                i, j = values
                if not (0 <= i < n and 0 <= j < n):
                    raise ParseError(f"vertex out of range 0..{n - 1} in edge {i} {j}", offset)
                if i == j:
                    raise ParseError(f"self-loop at vertex {i}", offset)
                edges.append((i, j))
        offset += len(line.encode("utf-8"))
    if n is None:
        raise ParseError("missing vertex count", 0)
    return Graph.from_edges(n, edges)


def parse_graph(data: str | bytes, fmt: str) -> Graph:
    if fmt == "graph6":
        return from_graph6(data)
    if fmt == "edge-list":
        return from_edge_list(data)
    raise ParseError(f"unknown graph format {fmt!r}")


def guess_format(path: str) -> str:
    return "graph6" if path.endswith((".g6", ".graph6")) else "edge-list"


# ----------------------------------------------------------- witness files


def dump_witness(invariant: str, witness, n: int) -> str:
    if invariant == "gammat":
        body = {"invariant": invariant, "n": n, "set": list(witness)}
    else:
        body = {"invariant": invariant, "n": n, "assignment": list(witness.assignment)}
    return json.dumps(body) + "\n"


def load_witness(data: str | bytes) -> tuple[str, object]:
    """Returns ``(invariant, Coloring | list)``. A bare JSON array is read as
    a tdc assignment."""
    try:
        body = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(f"witness is not valid JSON: {exc.msg}", exc.pos) from None
    if isinstance(body, list):
        body = {"assignment": body}
    if not isinstance(body, dict):
        raise ParseError("witness must be a JSON object or array")
    invariant = body.get("invariant", "tdc")
    if invariant == "gammat":
        vertices = body.get("set")
        if not isinstance(vertices, list) or not all(isinstance(v, int) for v in vertices):
            raise ParseError("gammat witness needs an integer list 'set'")
        return invariant, vertices
    assignment = body.get("assignment")
    if not isinstance(assignment, list) or not all(isinstance(x, int) and x >= 0 for x in assignment):
        raise ParseError("witness needs a non-negative integer list 'assignment'")
    try:
        return invariant, Coloring(tuple(assignment))
    except MalformedColoringError as exc:
        raise ParseError(str(exc)) from None
