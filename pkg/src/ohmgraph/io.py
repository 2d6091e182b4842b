"""Reading and writing networks, matrices, split systems and reports.

Every scalar is written as an exact ``p/q`` string (integers without a
denominator) so output is byte-stable and loss-free.  Readers accept
``"p/q"``, integers and decimal strings; floats are refused.
"""

from __future__ import annotations

import csv
import io as _io
import json
from fractions import Fraction
from pathlib import Path

from .errors import FormatError
from .exact import Matrix, format_fraction, is_symmetric, to_fraction
from .grassmann import PluckerVector
from .metrics import Split, Verdict, WeightedSplitSystem
from .netcore import Edge, WeightedGraph
from .reconstruct import ChordArrangement, StrandPermutation


def _read(source) -> str:
    if isinstance(source, Path):
        return source.read_text()
    if hasattr(source, "read"):
        return source.read()
    return str(source)


def dumps(obj) -> str:
    """Indented JSON with lists of scalars kept on one line (matrix rows stay readable)."""
    return _dump(to_jsonable(obj), 0) + "\n"


def _dump(value, depth: int) -> str:
    pad, inner = "  " * depth, "  " * (depth + 1)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [f"{inner}{json.dumps(k)}: {_dump(v, depth + 1)}" for k, v in value.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(value, list):
        if all(not isinstance(v, (dict, list)) for v in value):
            return json.dumps(value)
        return "[\n" + ",\n".join(inner + _dump(v, depth + 1) for v in value) + "\n" + pad + "]"
    return json.dumps(value)


def to_jsonable(obj):
    """Recursively turn library values into plain JSON types."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return format_fraction(obj)
    if isinstance(obj, WeightedGraph):
        return network_to_json(obj)
    if isinstance(obj, Split):
        return {"A": sorted(obj.A), "B": sorted(obj.B)}
    if isinstance(obj, WeightedSplitSystem):
        return splits_to_json(obj)
    if isinstance(obj, PluckerVector):
        return plucker_to_json(obj)
    if isinstance(obj, StrandPermutation):
        return {"g": list(obj.g), "tau": [list(c) for c in obj.cycles()]}
    if isinstance(obj, Verdict):
        return {"ok": obj.ok, "witness": to_jsonable(obj.witness)}
    if isinstance(obj, dict):
        return {_key(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [to_jsonable(x) for x in items]
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _key(k) -> str:
    if isinstance(k, tuple):
        return ",".join(map(str, k))
    return str(k)


# --------------------------------------------------------------------------
# networks


def network_to_json(g: WeightedGraph) -> dict:
    out = {
        "n": g.n_vertices,
        "boundary": list(g.boundary),
        "edges": [{"u": e.u, "v": e.v, "c": format_fraction(e.c)} for e in g.edges],
    }
    if g.embedding is not None:
        out["embedding"] = {str(v): list(g.embedding[v]) for v in sorted(g.embedding)}
    return out


def network_from_json(obj) -> WeightedGraph:
    try:
        edges = [Edge(int(e["u"]), int(e["v"]), _scalar(e["c"])) for e in obj["edges"]]
        emb = obj.get("embedding")
        if emb is not None:
            emb = {int(v): tuple(int(k) for k in rot) for v, rot in emb.items()}
        return WeightedGraph(int(obj["n"]), tuple(int(b) for b in obj["boundary"]), tuple(edges), emb)
    except (KeyError, TypeError, AttributeError) as exc:
        raise FormatError(f"bad network JSON: {exc}") from exc


def load_network(source) -> WeightedGraph:
    return network_from_json(_load_json(source))


def _load_json(source):
    try:
        return json.loads(_read(source))
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc


def _scalar(value) -> Fraction:
    if isinstance(value, float):
        raise FormatError(f"{value!r}: write decimals as strings so they are read exactly")
    try:
        return to_fraction(value)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise FormatError(f"{value!r} is not an exact number") from exc


# --------------------------------------------------------------------------
# matrices


def parse_matrix_csv(text: str, symmetric: bool = True) -> Matrix:
    rows = [[_scalar(x.strip()) for x in row] for row in csv.reader(_io.StringIO(text)) if any(x.strip() for x in row)]
    if not rows:
        raise FormatError("empty matrix")
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise FormatError(f"matrix is not square ({n} rows, row lengths {[len(r) for r in rows]})")
    if symmetric and not is_symmetric(rows):
        bad = next((i + 1, j + 1) for i in range(n) for j in range(n) if rows[i][j] != rows[j][i])
        raise FormatError(f"matrix is not symmetric at {bad}")
    return rows


def load_matrix(source, symmetric: bool = True) -> Matrix:
    return parse_matrix_csv(_read(source), symmetric=symmetric)


def matrix_to_csv(m: Matrix) -> str:
    return "".join(",".join(format_fraction(x) for x in row) + "\n" for row in m)


def matrix_to_json(m: Matrix) -> list:
    return [[format_fraction(x) for x in row] for row in m]


# --------------------------------------------------------------------------
# split systems


def splits_to_json(system: WeightedSplitSystem) -> dict:
    return {
        "order": list(system.order),
        "splits": [{"A": sorted(s.A), "B": sorted(s.B), "w": format_fraction(w)} for s, w in system.splits],
    }


def splits_from_json(obj) -> WeightedSplitSystem:
    """Accepts ``{"order": [...], "splits": [...]}`` or a bare list of splits
    whose first item may be the ``{"order": [...]}`` header."""
    order = None
    if isinstance(obj, dict):
        order, items = obj.get("order"), obj.get("splits", [])
    elif isinstance(obj, list):
        items = list(obj)
        if items and isinstance(items[0], dict) and "order" in items[0]:
            order = items.pop(0)["order"]
    else:
        raise FormatError("split system must be a JSON object or list")
    try:
        splits = tuple((Split(frozenset(map(int, it["A"])), frozenset(map(int, it["B"]))), _scalar(it["w"])) for it in items)
    except (KeyError, TypeError) as exc:
        raise FormatError(f"bad split entry: {exc}") from exc
    nodes = set()
    for s, _ in splits:
        nodes |= s.A | s.B
    n = len(order) if order is not None else max(nodes, default=0)
    order = tuple(range(1, n + 1)) if order is None else tuple(int(x) for x in order)
    if sorted(order) != list(range(1, n + 1)):
        raise FormatError(f"order {order} is not a permutation of 1..{n}")
    return WeightedSplitSystem(n, order, splits)


def load_splits(source) -> WeightedSplitSystem:
    return splits_from_json(_load_json(source))


# --------------------------------------------------------------------------
# Plücker vectors and reports


def plucker_to_json(p: PluckerVector, witness=None) -> dict:
    return {
        "n": p.n,
        "deleted_row": p.deleted_row,
        "coords": {",".join(map(str, s)): format_fraction(v) for s, v in sorted(p.coords.items())},
        "sign": p.sign(),
        "witness": to_jsonable(witness) if witness is not None else [],
    }


def reconstruction_report(strands: StrandPermutation, network: WeightedGraph, tree, round_trip: bool) -> dict:
    return {
        "g": list(strands.g),
        "tau": [list(c) for c in strands.cycles()],
        "network": network_to_json(network),
        "tree": network_to_json(tree) if tree is not None else None,
        "round_trip": round_trip,
    }


# --------------------------------------------------------------------------
# DOT


def network_to_dot(g: WeightedGraph, name: str = "network") -> str:
    lines = [f"graph {name} {{"]
    bset = set(g.boundary)
    for v in range(1, g.n_vertices + 1):
        shape = "doublecircle" if v in bset else "circle"
        lines.append(f'  {v} [shape={shape}];')
    for e in g.edges:
        lines.append(f'  {e.u} -- {e.v} [label="{format_fraction(e.c)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def medial_to_dot(arr: ChordArrangement, name: str = "medial") -> str:
    """Boundary points ``p1..p2n`` and crossings ``x<id>`` joined along strands."""
    size = arr.size
    lines = [f"graph {name} {{"]
    for k in range(1, size + 1):
        lines.append(f"  p{k} [shape=point, xlabel={k}];")
    for v in sorted(arr.crossing_chords()):
        lines.append(f"  x{v} [shape=circle, label=\"\"];")

    def node(v):
        return f"p{v}" if v <= size else f"x{v}"

    for p, (a, b) in enumerate(arr.chords):
        seq = [a] + arr.along[p] + [b]
        for s, t in zip(seq, seq[1:]):
            lines.append(f"  {node(s)} -- {node(t)} [label=\"{a}-{b}\"];")
    lines.append("}")
    return "\n".join(lines) + "\n"
