"""JSON graph documents and machine-readable matrix serialization.

A graph document is a JSON object::

    {
      "n": 5,
      "edges": [{"u": 1, "v": 2, "gain": {"theta": 0.0}}, ...],
      "weights": [1.0, ...],        # optional, aligned with edges
      "ordering": [1, 2, 3, 4, 5]   # optional, rank of each vertex
    }

Gains are given either as an angle in radians ({"theta": t}) or in
rectangular form ({"re": a, "im": b}); rectangular gains must lie
within 1e-6 of the unit circle and are renormalized onto it.  Weights
default to 1 and the ordering defaults to the natural order of the
vertex labels.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import ParseError, ValidationError
from .graphs import (
    GainGraph,
    VertexOrdering,
    WeightedGainGraph,
    normalize_gain,
    unit_weights,
)


@dataclass(frozen=True)
class GraphDocument:
    """Parsed form of a graph document; convertible to model objects."""

    n: int
    edges: tuple[tuple[int, int, complex], ...]
    weights: tuple[float, ...] | None = None
    ordering: tuple[int, ...] | None = None

    def gain_graph(self) -> GainGraph:
        return GainGraph(self.n, self.edges)

    def weighted_graph(self) -> WeightedGainGraph:
        g = self.gain_graph()
        if self.weights is None:
            return unit_weights(g)
        return WeightedGainGraph(g, self.weights)

    def vertex_ordering(self) -> VertexOrdering:
        if self.ordering is None:
            return VertexOrdering.standard(self.n)
        return VertexOrdering(self.ordering)


def _parse_gain(raw: object, where: str) -> complex:
    if not isinstance(raw, dict):
        raise ValidationError(f"{where}: expected an object, got {raw!r}")
    keys = set(raw)
    if keys == {"theta"}:
        theta = raw["theta"]
        if not isinstance(theta, (int, float)) or isinstance(theta, bool):
            raise ValidationError(f"{where}.theta: expected a number, got {theta!r}")
        return cmath.exp(1j * float(theta))
    if keys == {"re", "im"}:
        re, im = raw["re"], raw["im"]
        for name, val in (("re", re), ("im", im)):
            if not isinstance(val, (int, float)) or isinstance(val, bool):
                raise ValidationError(f"{where}.{name}: expected a number, got {val!r}")
        try:
            return normalize_gain(complex(float(re), float(im)), strict=True)
        except ValidationError as exc:
            raise ValidationError(f"{where}: {exc}") from None
    raise ValidationError(
        f"{where}: expected keys {{'theta'}} or {{'re', 'im'}}, got {sorted(keys)}"
    )


def parse_graph(data: bytes | str) -> GraphDocument:
    """Decode and validate a graph document.

    Raises:
        ParseError: if the input is not valid JSON.
        ValidationError: if a structural invariant fails; the message
            names the offending field.
    """
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8: {exc}") from None
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(obj, dict):
        raise ValidationError(f"document: expected an object, got {type(obj).__name__}")
    unknown = set(obj) - {"n", "edges", "weights", "ordering"}
    if unknown:
        raise ValidationError(f"document: unknown keys {sorted(unknown)}")

    n = obj.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValidationError(f"n: expected a positive integer, got {n!r}")

    raw_edges = obj.get("edges")
    if not isinstance(raw_edges, list):
        raise ValidationError(f"edges: expected a list, got {raw_edges!r}")
    edges: list[tuple[int, int, complex]] = []
    seen: set[tuple[int, int]] = set()
    for i, item in enumerate(raw_edges):
        where = f"edges[{i}]"
        if not isinstance(item, dict):
            raise ValidationError(f"{where}: expected an object, got {item!r}")
        extra = set(item) - {"u", "v", "gain"}
        if extra:
            raise ValidationError(f"{where}: unknown keys {sorted(extra)}")
        u, v = item.get("u"), item.get("v")
        for name, val in (("u", u), ("v", v)):
            if not isinstance(val, int) or isinstance(val, bool):
                raise ValidationError(f"{where}.{name}: expected an integer, got {val!r}")
            if not 1 <= val <= n:
                raise ValidationError(f"{where}.{name}: vertex {val} outside 1..{n}")
        if not u < v:
            raise ValidationError(f"{where}: requires u < v, got ({u}, {v})")
        if (u, v) in seen:
            raise ValidationError(f"{where}: duplicate edge ({u}, {v})")
        seen.add((u, v))
        edges.append((u, v, _parse_gain(item.get("gain"), f"{where}.gain")))

    weights: tuple[float, ...] | None = None
    if "weights" in obj:
        raw_w = obj["weights"]
        if not isinstance(raw_w, list) or len(raw_w) != len(edges):
            raise ValidationError(
                f"weights: expected a list of {len(edges)} numbers, got {raw_w!r}"
            )
        ws = []
        for i, w in enumerate(raw_w):
            if not isinstance(w, (int, float)) or isinstance(w, bool):
                raise ValidationError(f"weights[{i}]: expected a number, got {w!r}")
            w = float(w)
            if not (math.isfinite(w) and w > 0.0):
                raise ValidationError(f"weights[{i}]: expected a positive weight, got {w!r}")
            ws.append(w)
        weights = tuple(ws)

    ordering: tuple[int, ...] | None = None
    if "ordering" in obj:
        raw_o = obj["ordering"]
        if (
            not isinstance(raw_o, list)
            or len(raw_o) != n
            or any(not isinstance(r, int) or isinstance(r, bool) for r in raw_o)
            or sorted(raw_o) != list(range(1, n + 1))
        ):
            raise ValidationError(f"ordering: expected a permutation of 1..{n}, got {raw_o!r}")
        ordering = tuple(raw_o)

    doc = GraphDocument(n=n, edges=tuple(edges), weights=weights, ordering=ordering)
    doc.gain_graph()  # surfaces any invariant the field checks above missed
    return doc


def emit_graph(doc: GraphDocument) -> str:
    """Serialize a document; gains are written in rectangular form with
    full float precision, so parse(emit(doc)) == doc."""
    obj: dict = {
        "n": doc.n,
        "edges": [
            {"u": u, "v": v, "gain": {"re": z.real, "im": z.imag}}
            for u, v, z in doc.edges
        ],
    }
    if doc.weights is not None:
        obj["weights"] = list(doc.weights)
    if doc.ordering is not None:
        obj["ordering"] = list(doc.ordering)
    return json.dumps(obj, indent=2)


# --- matrix serialization ------------------------------------------------


def format_complex(z: complex) -> str:
    """Render a complex number as 're+imi' with 17 significant digits."""
    re = f"{z.real:.17g}"
    sign = "+" if z.imag >= 0 else "-"
    return f"{re}{sign}{abs(z.imag):.17g}i"


def parse_complex(cell: str) -> complex:
    """Inverse of :func:`format_complex` ('i' suffix, 'a+bi' form)."""
    text = cell.strip()
    try:
        return complex(text.replace("i", "j"))
    except ValueError:
        raise ParseError(f"cannot parse complex cell {cell!r}") from None


def matrix_to_csv(M: np.ndarray) -> str:
    """Comma-separated rows of 'a+bi' cells, one matrix row per line."""
    M = np.asarray(M, dtype=complex)
    return "\n".join(",".join(format_complex(z) for z in row) for row in M)


def csv_to_matrix(text: str) -> np.ndarray:
    rows = [line for line in text.strip().splitlines() if line.strip()]
    data = [[parse_complex(cell) for cell in row.split(",")] for row in rows]
    width = {len(r) for r in data}
    if len(width) > 1:
        raise ParseError("ragged CSV matrix")
    return np.array(data, dtype=complex)
