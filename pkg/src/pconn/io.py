"""JSON serialization and DOT export."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Optional, Union

from .certificate import BipartiteSpanningCertificate
from .digraph import Digraph, DigraphError, VertexBipartition
from .errors import PreconditionError
from .verify import ArcColoring

PathLike = Union[str, Path]

DOT_COLORS = {1: "red", 2: "blue", 3: "green"}


def digraph_to_dict(D: Digraph) -> dict:
    return {"n": D.n, "arcs": [list(a) for a in D.arcs]}


def digraph_from_dict(data: dict) -> Digraph:
    try:
        n, arcs = int(data["n"]), [tuple(a) for a in data["arcs"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise DigraphError(f"malformed digraph JSON: {exc}") from None
    return Digraph(n, arcs)


def coloring_to_dict(c: ArcColoring) -> dict:
    return {"k": c.k, "colors": list(c.colors)}


def coloring_from_dict(data: dict) -> ArcColoring:
    try:
        return ArcColoring(tuple(int(x) for x in data["colors"]), int(data["k"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise PreconditionError(f"malformed coloring JSON: {exc}") from None


def partition_to_dict(parts: VertexBipartition, arcs=None) -> dict:
    out = {"part1": sorted(parts.part1), "part2": sorted(parts.part2)}
    if arcs is not None:
        out = {"arcs": [list(a) for a in sorted(arcs)], **out}
    return out


def certificate_to_dict(cert: BipartiteSpanningCertificate) -> dict:
    return {**partition_to_dict(cert.parts, cert.arcs), "route": cert.route}


def certificate_from_dict(data: dict) -> BipartiteSpanningCertificate:
    parts = VertexBipartition(data["part1"], data["part2"])
    arcs = tuple(sorted(tuple(a) for a in data.get("arcs", [])))
    return BipartiteSpanningCertificate(arcs, parts, data.get("route", ""))


def write_json(path: PathLike, data: dict) -> None:
    Path(path).write_text(json.dumps(data, sort_keys=True) + "\n")


def read_json(path: PathLike) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise PreconditionError(f"cannot read {path}: {exc}") from None


def save_digraph(D: Digraph, path: PathLike) -> None:
    write_json(path, digraph_to_dict(D))


def load_digraph(path: PathLike) -> Digraph:
    return digraph_from_dict(read_json(path))


def save_coloring(c: ArcColoring, path: PathLike) -> None:
    write_json(path, coloring_to_dict(c))


def load_coloring(path: PathLike) -> ArcColoring:
    return coloring_from_dict(read_json(path))


def to_dot(D: Digraph, coloring: Optional[ArcColoring] = None,
           cert: Optional[BipartiteSpanningCertificate] = None, name: str = "D") -> str:
    """Deterministic DOT text. Certificate arcs are solid and the rest dashed."""
    if coloring is not None and len(coloring.colors) != D.m:
        raise PreconditionError(f"coloring has {len(coloring.colors)} entries, digraph has {D.m} arcs")
    if cert is not None and not cert.parts.covers(D.n):
        raise PreconditionError("certificate parts do not cover the vertex set")
    kept = set(cert.arcs) if cert is not None else None
    lines = [f"digraph {name} {{"]
    for v in range(D.n):
        attrs = ""
        if cert is not None:
            fill = "white" if cert.parts.side(v) == 1 else "gray"
            attrs = f" [style=filled, fillcolor={fill}]"
        lines.append(f"  {v}{attrs};")
    for i, (t, h) in enumerate(D.arcs):
        attrs = []
        if coloring is not None and coloring.colors[i]:
            c = coloring.colors[i]
            attrs.append(f"color={DOT_COLORS.get(c, 'black')}")
            attrs.append(f'label="{c}"')
        if kept is not None:
            attrs.append("style=solid" if (t, h) in kept else "style=dashed")
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {t} -> {h}{suffix};")
    lines.append("}")
    return "\n".join(lines) + "\n"
