"""Graph files and DOT export."""

from __future__ import annotations

import json
from collections.abc import Iterable
from pathlib import Path

from .errors import GraphFormatError
from .plane_graph import PlaneGraph, from_dict, to_dict


def dumps(g: PlaneGraph) -> str:
    return json.dumps(to_dict(g), sort_keys=True, separators=(",", ":"))


def loads(text: str) -> PlaneGraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"not valid JSON: {exc}") from None
    return from_dict(data)


def load(path: str | Path) -> PlaneGraph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise GraphFormatError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text)


def save(g: PlaneGraph, path: str | Path) -> None:
    Path(path).write_text(dumps(g) + "\n")


def export_dot(
    g: PlaneGraph,
    *,
    removed: Iterable[int] = (),
    dominating: Iterable[int] = (),
    external: bool = False,
    name: str = "G",
) -> str:
    """Deterministic undirected DOT text.

    ``removed`` vertices are drawn dashed, ``dominating`` ones filled, and with
    ``external`` the vertices on an unbounded face get a double outline.
    """
    rem, dom = set(removed), set(dominating)
    ext = g.external_vertices() if external else frozenset()
    lines = [f"graph {name} {{"]
    for v in sorted(g.vertices):
        attrs = []
        if v in ext:
            attrs.append("peripheries=2")
        if v in dom:
            attrs.append("style=filled")
        if v in rem:
            attrs.append("style=dashed" if v not in dom else "style=\"filled,dashed\"")
        lines.append(f"  {v}" + (f" [{', '.join(attrs)}]" if attrs else "") + ";")
    for a, b in g.edges():
        lines.append(f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
