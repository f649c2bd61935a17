"""digraph6 encoding and decoding, plus a plain edge-list reader.

The directed-graph6 form used here: a leading '&', the order n as a single
printable character of value n+63 (short form, n <= 62), then the n*n
row-major adjacency-matrix bits packed big-endian six per character, each
character chr(bits + 63), with the final group zero padded.  Bit (i, j) is
set iff arc i -> j.
"""

from __future__ import annotations

import io
import os
from typing import Iterable

from .errors import InvalidInputError, ParseError
from .graphs import MAX_VERTICES, OrientedGraph

_HEADER = ">>digraph6<<"


def digraph6_encode(g: OrientedGraph) -> str:
    n = g.n
    chars = ["&", chr(n + 63)]
    group = 0
    filled = 0
    for i in range(n):
        row = g.out_mask(i)
        for j in range(n):
            group = group << 1 | (row >> j & 1)
            filled += 1
            if filled == 6:
                chars.append(chr(group + 63))
                group = 0
                filled = 0
    if filled:
        chars.append(chr((group << (6 - filled)) + 63))
    return "".join(chars)


def digraph6_decode(s: str) -> OrientedGraph:
    """Inverse of digraph6_encode; rejects loops and 2-cycle bit patterns.

    The optional '>>digraph6<<' prefix written by standard tooling is
    accepted and skipped.
    """
    offset = 0
    if s.startswith(_HEADER):
        offset = len(_HEADER)
    if offset >= len(s) or s[offset] != "&":
        raise ParseError(f"expected '&' at byte {offset}", offset=offset)
    offset += 1
    if offset >= len(s):
        raise ParseError("missing order character", offset=offset)
    n = ord(s[offset]) - 63
    if not 1 <= n <= MAX_VERTICES:
        raise ParseError(
            f"order {n} outside 1..{MAX_VERTICES} (long-form digraph6 unsupported)",
            offset=offset,
        )
    offset += 1
    need_chars = (n * n + 5) // 6
    data = s[offset:]
    if len(data) < need_chars:
        raise ParseError(
            f"truncated data section: need {need_chars} characters, got {len(data)}",
            offset=offset + len(data),
        )
    if len(data) > need_chars:
        raise ParseError(f"trailing characters after data section", offset=offset + need_chars)

    bits = 0
    for k, ch in enumerate(data):
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise ParseError(f"character {ch!r} outside printable range", offset=offset + k)
        bits = bits << 6 | val
    total_bits = need_chars * 6
    pad = total_bits - n * n
    if bits & ((1 << pad) - 1):
        raise ParseError("nonzero padding bits", offset=offset + need_chars - 1)
    bits >>= pad

    g = OrientedGraph(n)
    for i in range(n):
        for j in range(n):
            if bits >> (n * n - 1 - (i * n + j)) & 1:
                if i == j:
                    raise InvalidInputError(f"encoding contains a loop at vertex {i}")
                if g.has_arc(j, i):
                    raise InvalidInputError(
                        f"encoding contains a 2-cycle on pair ({j},{i})"
                    )
                g.add_arc(i, j)
    return g


def parse_edge_list(text: str) -> OrientedGraph:
    """Read 'u v' per line (0-indexed, direction u -> v); '#' starts a comment."""
    arcs: list[tuple[int, int]] = []
    top = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer endpoint in {raw!r}") from None
        if u < 0 or v < 0:
            raise ParseError(f"line {lineno}: negative vertex index")
        arcs.append((u, v))
        top = max(top, u, v)
    if top < 0:
        raise ParseError("edge list contains no arcs (order would be unknown)")
    return OrientedGraph(top + 1, arcs)


def read_graphs(path: str | os.PathLike) -> list[OrientedGraph]:
    """Load graphs from a file: digraph6 one per line, or a single edge list."""
    with io.open(path, "r", encoding="ascii") as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("&") or stripped.startswith(_HEADER):
        graphs = []
        for line in text.splitlines():
            line = line.strip()
            if line:
                graphs.append(digraph6_decode(line))
        return graphs
    return [parse_edge_list(text)]


def write_graphs(path: str | os.PathLike, graphs: Iterable[OrientedGraph]) -> None:
    with io.open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(digraph6_encode(g) + "\n")
