"""Reading and writing ideals and graphs.

Ideal JSON: ``{"vars": ["x1", ...], "gens": [[1, 2], [2, 3], ...]}`` with
1-based indices into ``vars``.  Graphs are either JSON
``{"n": 4, "edges": [[1, 2], ...]}`` or plain text: ``n`` on the first line,
then one ``u v`` pair per line.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import NormDepthError
from .graphs import Graph
from .ideal import MonomialIdeal, minimalize, monomial, support

SCHEMA_VERSION = 1


class ParseError(NormDepthError):
    pass


def ideal_to_json(ideal: MonomialIdeal) -> dict:
    return {
        "vars": [f"x{i}" for i in range(1, ideal.ambient + 1)],
        "gens": [list(support(g)) for g in ideal.gens],
    }


def ideal_from_json(data: dict) -> MonomialIdeal:
    try:
        gens = data["gens"]
        names = data.get("vars")
        masks = []
        for gen in gens:
            idx = [int(i) for i in gen]
            if not idx:
                raise ParseError("empty generator (the unit ideal is not squarefree-monomial here)")
            if names is not None and any(not 1 <= i <= len(names) for i in idx):
                raise ParseError(f"generator {gen} indexes outside vars")
            masks.append(monomial(*idx))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"malformed ideal JSON: {exc}") from exc
    return minimalize(masks)


def graph_to_text(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def graph_from_text(text: str) -> Graph:
    rows = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    rows = [r for r in rows if r]
    if not rows:
        raise ParseError("empty graph file")
    try:
        n = int(rows[0])
        edges = []
        for r in rows[1:]:
            u, v = r.split()
            edges.append((int(u), int(v)))
        return Graph(n, edges)
    except (ValueError, NormDepthError) as exc:
        raise ParseError(f"malformed graph file: {exc}") from exc


def graph_from_json(data: dict) -> Graph:
    try:
        return Graph(int(data["n"]), [(int(u), int(v)) for u, v in data["edges"]])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed graph JSON: {exc}") from exc


def load_input(path: str | Path) -> tuple[MonomialIdeal | None, Graph | None]:
    """Parse a file holding an ideal or a graph.

    Returns ``(ideal, None)`` for ideal JSON and ``(None, graph)`` for a
    graph in either format.
    """
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON in {path}: {exc}") from exc
        if not isinstance(data, dict):
            raise ParseError("top-level JSON must be an object")
        if "gens" in data:
            return ideal_from_json(data), None
        if "edges" in data:
            return None, graph_from_json(data)
        raise ParseError("JSON must contain 'gens' (ideal) or 'edges' (graph)")
    return None, graph_from_text(text)


def dumps(obj: dict) -> str:
    return json.dumps({"schema": SCHEMA_VERSION, **obj}, sort_keys=True)
