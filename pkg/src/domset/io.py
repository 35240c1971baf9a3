"""Plain edge-list and DIMACS graph files.

Edge list: a header line ``n m`` then ``m`` lines ``u v`` with 0-based ids.
DIMACS: ``p edge n m`` then ``m`` lines ``e u v`` with 1-based ids.
Lines starting with ``c`` are comments in both formats; blank lines are skipped.
"""

from __future__ import annotations

import os
from pathlib import Path

from domset.errors import GraphError
from domset.graph import Graph

FORMATS = ("edgelist", "dimacs")


def guess_format(path: str | os.PathLike) -> str:
    return "dimacs" if Path(path).suffix.lower() in (".dimacs", ".col", ".clq") else "edgelist"


def _ints(fields: list[str], lineno: int) -> list[int]:
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise GraphError(f"line {lineno}: expected integers, got {' '.join(fields)!r}") from None


def parse_text(text: str, fmt: str = "edgelist") -> Graph:
    if fmt not in FORMATS:
        raise GraphError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    n = m = None
    header_line = 0
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        fields = raw.split()
        if not fields or fields[0].startswith("c"):
            continue
        if n is None:
            header_line = lineno
            if fmt == "dimacs":
                if len(fields) != 4 or fields[0] != "p" or fields[1] not in ("edge", "col"):
                    raise GraphError(f"line {lineno}: expected 'p edge n m', got {raw.strip()!r}")
                n, m = _ints(fields[2:], lineno)
            else:
                if len(fields) != 2:
                    raise GraphError(f"line {lineno}: expected header 'n m', got {raw.strip()!r}")
                n, m = _ints(fields, lineno)
            if n < 0 or m < 0:
                raise GraphError(f"line {lineno}: negative counts")
            continue
        if fmt == "dimacs":
            if len(fields) != 3 or fields[0] != "e":
                raise GraphError(f"line {lineno}: expected 'e u v', got {raw.strip()!r}")
            u, v = (x - 1 for x in _ints(fields[1:], lineno))
            shown = (u + 1, v + 1)
        else:
            if len(fields) != 2:
                raise GraphError(f"line {lineno}: expected 'u v', got {raw.strip()!r}")
            u, v = _ints(fields, lineno)
            shown = (u, v)
        for vertex, orig in zip((u, v), shown):
            if not 0 <= vertex < n:
                raise GraphError(f"line {lineno}: vertex {orig} out of range for n={n}")
        if u == v:
            raise GraphError(f"line {lineno}: self-loop at vertex {shown[0]}")
        pairs.append((u, v))
    if n is None:
        raise GraphError("missing header line")
    if len(pairs) != m:
        raise GraphError(f"line {header_line}: header declares {m} edges but {len(pairs)} were given")
    return Graph.from_edge_list(n, pairs)


def parse_graph(path: str | os.PathLike, fmt: str | None = None) -> Graph:
    text = Path(path).read_text(encoding="utf-8")
    return parse_text(text, fmt or guess_format(path))


def format_graph(G: Graph, fmt: str = "edgelist") -> str:
    edges = G.edges()
    if fmt == "dimacs":
        lines = [f"p edge {G.n} {len(edges)}"] + [f"e {u + 1} {v + 1}" for u, v in edges]
    elif fmt == "edgelist":
        lines = [f"{G.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    else:
        raise GraphError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    return "\n".join(lines) + "\n"


def write_graph(G: Graph, path: str | os.PathLike, fmt: str | None = None) -> None:
    Path(path).write_text(format_graph(G, fmt or guess_format(path)), encoding="utf-8")
