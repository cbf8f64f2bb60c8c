"""graph6, edge-list and DOT interchange.

graph6 packs the upper adjacency triangle in column order
x(0,1), x(0,2), x(1,2), x(0,3), ... into 6-bit groups, each written as the
byte ``value + 63``. The order takes one byte ``n + 63`` for ``n <= 62``,
otherwise ``~`` plus three 6-bit groups (``n <= 258047``).
"""

from __future__ import annotations

from collections.abc import Iterator
from pathlib import Path
from typing import Union

from .errors import (
    BadCharacter,
    EdgeOutOfRange,
    FormatError,
    MalformedHeader,
    SelfLoop,
    TruncatedBitstream,
    VertexOutOfRange,
)
from .graph import Graph

GRAPH6_HEADER = ">>graph6<<"
FORMATS = ("graph6", "edgelist", "dot")
_SUFFIXES = {".g6": "graph6", ".graph6": "graph6", ".txt": "edgelist", ".edges": "edgelist",
             ".el": "edgelist", ".dot": "dot", ".gv": "dot"}


def _text(data: Union[bytes, str]) -> str:
    if isinstance(data, bytes):
        try:
            return data.decode("ascii")
        except UnicodeDecodeError as exc:
            raise BadCharacter(f"non-ASCII byte at offset {exc.start}") from None
    return data


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    n = g.order
    rows = g.rows
    bits = [rows[i] >> j & 1 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        body.append(chr(value + 63))
    return _encode_order(n) + "".join(body)


def from_graph6(data: Union[bytes, str]) -> Graph:
    s = _text(data).strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):].strip()
    if not s:
        raise MalformedHeader("empty graph6 string")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise BadCharacter(f"character {ch!r} at offset {pos} is outside '?'..'~'")
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise MalformedHeader("truncated 8-byte order field")
        n, pos = 0, 8
        for v in vals[2:8]:
            n = n << 6 | v
    else:
        if len(vals) < 4:
            raise MalformedHeader("truncated 4-byte order field")
        n, pos = 0, 4
        for v in vals[1:4]:
            n = n << 6 | v
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = vals[pos:]
    if len(body) < need:
        raise TruncatedBitstream(f"order {n} needs {need} data bytes, found {len(body)}")
    if len(body) > need:
        raise FormatError(f"order {n} needs {need} data bytes, found {len(body)}")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph.from_rows(rows)


def to_edgelist(g: Graph) -> str:
    lines = [str(g.order)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_edgelist(data: Union[bytes, str]) -> Graph:
    lines = []
    for raw in _text(data).splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise MalformedHeader("edge list is empty; expected the order on the first line")
    try:
        n = int(lines[0])
    except ValueError:
        raise MalformedHeader(f"first line must be the vertex count, got {lines[0]!r}") from None
    if n < 0:
        raise MalformedHeader(f"negative vertex count {n}")
    edges = []
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != 2:
            raise BadCharacter(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise BadCharacter(f"line {lineno}: non-integer vertex in {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeOutOfRange(f"line {lineno}: edge ({u}, {v}) outside 0..{n - 1}")
        edges.append((u, v))
    try:
        return Graph(n, edges)
    except SelfLoop as exc:
        raise FormatError(str(exc)) from None
    except VertexOutOfRange as exc:
        raise EdgeOutOfRange(str(exc)) from None


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in g.vertices()]
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def sniff_format(data: Union[bytes, str]) -> str:
    """``edgelist`` if the first non-blank character is a digit, else ``graph6``.

    graph6 bytes are all >= '?', so the two never collide.
    """
    s = _text(data).lstrip()
    if s[:1].isdigit() or s[:1] == "#":
        return "edgelist"
    return "graph6"


def parse_graph_input(data: Union[bytes, str], fmt: str = "auto") -> Graph:
    if fmt == "auto":
        fmt = sniff_format(data)
    if fmt == "graph6":
        lines = [ln for ln in _text(data).splitlines() if ln.strip()]
        if len(lines) != 1:
            raise MalformedHeader(f"expected one graph6 line, found {len(lines)}")
        return from_graph6(lines[0])
    if fmt == "edgelist":
        return from_edgelist(data)
    raise FormatError(f"unsupported input format {fmt!r}")


def emit_graph_output(g: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return to_graph6(g) + "\n"
    if fmt == "edgelist":
        return to_edgelist(g)
    if fmt == "dot":
        return to_dot(g)
    raise FormatError(f"unsupported output format {fmt!r}")


def format_for_path(path: Union[str, Path], default: str = "graph6") -> str:
    return _SUFFIXES.get(Path(path).suffix.lower(), default)


def read_graph(path: Union[str, Path]) -> Graph:
    return parse_graph_input(Path(path).read_bytes())


def iter_graph6_file(path: Union[str, Path]) -> Iterator[Graph]:
    """Stream one graph per non-blank line of a graph6 corpus."""
    with open(path, "rb") as fh:
        for line in fh:
            line = line.strip()
            if line and line != GRAPH6_HEADER.encode():
                yield from_graph6(line)
