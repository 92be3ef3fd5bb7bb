"""Edge-list and graph6 readers/writers."""
from __future__ import annotations

from .graph import Graph, GraphError

GRAPH6_MAX_N = 62


class FormatError(GraphError):
    pass


def parse_edgelist(text: str) -> Graph:
    """``n m`` header then ``m`` lines ``i j``; lines starting with '#' are skipped."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise FormatError("empty edge-list file")
    head = lines[0].split()
    if len(head) != 2 or not all(tok.lstrip("-").isdigit() for tok in head):
        raise FormatError(f"malformed header {lines[0]!r}; expected 'n m'")
    n, m = int(head[0]), int(head[1])
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"header announces {m} edges, found {len(body)}")
    edges = []
    for ln in body:
        tok = ln.split()
        if len(tok) != 2 or not all(t.lstrip("-").isdigit() for t in tok):
            raise FormatError(f"malformed edge line {ln!r}")
        i, j = int(tok[0]), int(tok[1])
        if not (0 <= i < n and 0 <= j < n):
            raise FormatError(f"vertex out of range in {ln!r}")
        edges.append((i, j))
    return Graph(n, edges)


def format_edgelist(G: Graph) -> str:
    lines = [f"{G.n} {G.m}"] + [f"{i} {j}" for i, j in G.edge_list()]
    return "\n".join(lines) + "\n"


def encode_graph6(G: Graph) -> bytes:
    n = G.n
    if n > GRAPH6_MAX_N:
        raise FormatError(f"graph6 writer limited to n <= {GRAPH6_MAX_N}")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if G.has_edge(i, j) else 0)
    bits += [0] * (-len(bits) % 6)
    out = bytearray([n + 63])
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        out.append(val + 63)
    return bytes(out)


def decode_graph6(data) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    if not data:
        raise FormatError("empty graph6 record")
    if any(not 63 <= b <= 126 for b in data):
        raise FormatError("graph6 bytes must lie in 63..126")
    n = data[0] - 63
    if n > GRAPH6_MAX_N:
        raise FormatError("graph6 reader limited to single-byte size headers")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) - 1 != need:
        raise FormatError(f"graph6 record for n={n} needs {need} data bytes, got {len(data) - 1}")
    bits = []
    for b in data[1:]:
        v = b - 63
        bits += [(v >> s) & 1 for s in range(5, -1, -1)]
    if any(bits[nbits:]):
        raise FormatError("nonzero padding bits in graph6 record")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def parse_graph(text, fmt: str = "edgelist") -> Graph:
    if fmt == "graph6":
        return decode_graph6(text.splitlines()[0] if isinstance(text, str) else text.splitlines()[0])
    if fmt == "edgelist":
        return parse_edgelist(text)
    raise FormatError(f"unknown format {fmt!r}")


def read_graph(path: str, fmt: str | None = None) -> Graph:
    if fmt is None:
        fmt = "graph6" if path.endswith((".g6", ".graph6")) else "edgelist"
    with open(path, "rb") as fh:
        raw = fh.read()
    if fmt == "graph6":
        return decode_graph6(raw.splitlines()[0] if raw.strip() else b"")
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise FormatError(f"{path} is not UTF-8") from exc
    return parse_edgelist(text)
