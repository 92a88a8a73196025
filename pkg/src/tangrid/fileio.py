"""JSON documents for quads, tilings and dissections.

Writes are canonical: fixed key order, shortest round-trip float repr,
two-space indent with coordinate pairs kept on one line, trailing newline.
"""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Any

from .dissection import GridDissection, SquareTiling
from .errors import TangridError
from .geometry import ConvexQuad


class DocumentError(ValueError):
    """A file that does not parse into the object it claims to describe."""


_FLAT_ARRAY = re.compile(r"\[\s*([^\[\]{}\"]*?)\s*\]")


def dumps(doc: Any) -> str:
    text = json.dumps(doc, indent=2, allow_nan=False)
    text = _FLAT_ARRAY.sub(lambda m: "[" + ", ".join(x.strip() for x in m.group(1).split(",")) + "]", text)
    return text + "\n"


def write(path: str | Path | None, doc: Any) -> str:
    text = dumps(doc)
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text


def load(path: str | Path) -> Any:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: invalid JSON ({exc})") from exc


def quad_doc(q: ConvexQuad, label: str | None = None) -> dict:
    doc: dict[str, Any] = {"vertices": [[p.u, p.v] for p in q]}
    if label is not None:
        doc["label"] = label
    return doc


def parse_quad(doc: Any) -> tuple[ConvexQuad, str | None]:
    if not isinstance(doc, dict) or "vertices" not in doc:
        raise DocumentError("quad document must be an object with a 'vertices' array")
    verts = doc["vertices"]
    if not isinstance(verts, list) or len(verts) != 4:
        raise DocumentError("'vertices' must hold exactly 4 points")
    for p in verts:
        if not (isinstance(p, list) and len(p) == 2 and all(isinstance(c, (int, float)) for c in p)):
            raise DocumentError(f"vertex {p!r} is not a [u, v] pair of numbers")
    label = doc.get("label")
    if label is not None and not isinstance(label, str):
        raise DocumentError("'label' must be a string")
    try:
        return ConvexQuad(verts), label
    except (TangridError, ValueError) as exc:
        raise DocumentError(f"vertices do not form a convex quad: {exc}") from exc


def read_quad(path) -> tuple[ConvexQuad, str | None]:
    return parse_quad(load(path))


def parse_tiling(doc: Any) -> SquareTiling:
    if not isinstance(doc, dict) or not isinstance(doc.get("squares"), list):
        raise DocumentError("tiling document must be an object with a 'squares' array")
    try:
        return SquareTiling(tuple(s) for s in doc["squares"])
    except (TangridError, ValueError, TypeError) as exc:
        raise DocumentError(f"invalid tiling: {exc}") from exc


def read_tiling(path) -> SquareTiling:
    return parse_tiling(load(path))


def dissection_doc(d: GridDissection, source: ConvexQuad, max_defect: float,
                   label: str | None = None) -> dict:
    doc: dict[str, Any] = {
        "n": d.n,
        "lattice": [[p.u, p.v] for p in d.flat()],
        "source": quad_doc(source, label),
        "max_defect": max_defect,
    }
    if d.source is not None:
        doc["kind"] = d.source.kind.value
        doc["relabel"] = [d.source.input_index(i) for i in range(4)]
    return doc


def tiling_dissection_doc(tiling: SquareTiling, cells, source: ConvexQuad, max_defect: float,
                          t_junction_residual: float, label: str | None = None) -> dict:
    return {
        "tiling": [list(s) for s in tiling.squares],
        "cells": [[[p.u, p.v] for p in c] for c in cells],
        "source": quad_doc(source, label),
        "max_defect": max_defect,
        "t_junction_residual": t_junction_residual,
    }


def parse_dissection(doc: Any) -> tuple[GridDissection, ConvexQuad]:
    if not isinstance(doc, dict) or not isinstance(doc.get("n"), int) or "lattice" not in doc:
        raise DocumentError("dissection document needs integer 'n' and a 'lattice' array")
    n = doc["n"]
    if n < 1:
        raise DocumentError("'n' must be at least 1")
    lattice = doc["lattice"]
    if not isinstance(lattice, list) or len(lattice) != (n + 1) ** 2:
        raise DocumentError(f"'lattice' must hold (n+1)^2 = {(n + 1) ** 2} points")
    for p in lattice:
        if not (isinstance(p, list) and len(p) == 2 and all(isinstance(c, (int, float)) for c in p)):
            raise DocumentError(f"lattice entry {p!r} is not a [u, v] pair")
    source, _ = parse_quad(doc.get("source"))
    return GridDissection.from_flat(n, lattice), source
