"""JSON quiver documents, plain-text sequence documents and DOT export."""

from __future__ import annotations

import json
from typing import Any, Iterable

from .quiver import Arrow, IceQuiver, Vertex, VertexColor, colors, validate

VERSION = 1


class DocumentError(ValueError):
    """Malformed input document; the message starts with the error position."""


# -- quiver documents ------------------------------------------------------


def quiver_to_dict(q: IceQuiver) -> dict[str, Any]:
    return {
        "version": VERSION,
        "vertices": [{"id": v.id, "label": v.label, "frozen": v.frozen} for v in q.vertices],
        "arrows": [{"src": a.src, "dst": a.dst, "mult": a.mult} for a in q.arrows],
    }


def dump_quiver(q: IceQuiver) -> str:
    return json.dumps(quiver_to_dict(q), indent=2) + "\n"


def load_quiver(text: str) -> IceQuiver:
    """Parse and validate a quiver document.

    Raises :class:`DocumentError` whose message names the offending line and
    column (for JSON syntax errors) or the offending JSON path.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise DocumentError(f"line {err.lineno} column {err.colno}: {err.msg}") from None
    return quiver_from_dict(doc)


def _expect(cond: bool, where: str, msg: str) -> None:
    if not cond:
        raise DocumentError(f"{where}: {msg}")


def _int(obj: dict, key: str, where: str) -> int:
    _expect(key in obj, where, f"missing field {key!r}")
    val = obj[key]
    _expect(isinstance(val, int) and not isinstance(val, bool), f"{where}.{key}", "expected an integer")
    return val


def quiver_from_dict(doc: Any) -> IceQuiver:
    _expect(isinstance(doc, dict), "$", "expected a JSON object")
    _expect("version" in doc, "$", "missing field 'version'")
    _expect(doc["version"] == VERSION, "$.version", f"unsupported version {doc['version']!r}")
    for key in ("vertices", "arrows"):
        _expect(isinstance(doc.get(key), list), f"$.{key}", "expected a list")

    verts: list[Vertex] = []
    ids: dict[int, str] = {}
    labels: set[str] = set()
    for i, item in enumerate(doc["vertices"]):
        where = f"$.vertices[{i}]"
        _expect(isinstance(item, dict), where, "expected an object")
        vid = _int(item, "id", where)
        _expect(vid >= 0, f"{where}.id", "ids must be non-negative")
        _expect(vid not in ids, f"{where}.id", f"duplicate vertex id {vid}")
        label = item.get("label")
        _expect(isinstance(label, str) and label != "", f"{where}.label", "expected a nonempty string")
        _expect(label not in labels, f"{where}.label", f"duplicate label {label!r}")
        frozen = item.get("frozen", False)
        _expect(isinstance(frozen, bool), f"{where}.frozen", "expected a boolean")
        ids[vid] = label
        labels.add(label)
        verts.append(Vertex(vid, label, frozen))

    arrows: list[Arrow] = []
    pairs: dict[tuple[int, int], int] = {}
    for i, item in enumerate(doc["arrows"]):
        where = f"$.arrows[{i}]"
        _expect(isinstance(item, dict), where, "expected an object")
        src, dst = _int(item, "src", where), _int(item, "dst", where)
        mult = _int(item, "mult", where) if "mult" in item else 1
        _expect(src in ids, f"{where}.src", f"unknown vertex id {src}")
        _expect(dst in ids, f"{where}.dst", f"unknown vertex id {dst}")
        _expect(mult > 0, f"{where}.mult", f"multiplicity must be positive, got {mult}")
        _expect(src != dst, where, f"loop at {ids[src]!r}")
        _expect((src, dst) not in pairs, where, f"duplicate arrow record, see arrows[{pairs.get((src, dst))}]")
        if (dst, src) in pairs:
            raise DocumentError(
                f"{where}: 2-cycle between {ids[src]!r} and {ids[dst]!r} "
                f"(with arrows[{pairs[(dst, src)]}])"
            )
        pairs[(src, dst)] = i
        arrows.append(Arrow(src, dst, mult))

    q = IceQuiver(verts, arrows)
    problems = validate(q)
    if problems:
        raise DocumentError("$: " + "; ".join(problems))
    return q


# -- sequence documents ----------------------------------------------------


def parse_sequence(text: str) -> list[str]:
    """Labels separated by whitespace; ``#`` comments run to end of line."""
    labels: list[str] = []
    for line in text.splitlines():
        labels.extend(line.split("#", 1)[0].split())
    return labels


def format_sequence(labels: Iterable[str]) -> str:
    return "".join(f"{lab}\n" for lab in labels)


# -- traces ----------------------------------------------------------------


def trace_to_dict(trace) -> dict[str, Any]:
    return {
        "initial": quiver_to_dict(trace.initial),
        "entries": [
            {
                "step": i,
                "label": e.label,
                "quiver": quiver_to_dict(e.quiver),
                "colors": {k: c.value for k, c in e.colors.items()},
            }
            for i, e in enumerate(trace.entries)
        ],
    }


# -- DOT -------------------------------------------------------------------

_FILL = {
    VertexColor.GREEN: "palegreen",
    VertexColor.RED: "lightcoral",
    VertexColor.MIXED: "gold",
}


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(q: IceQuiver, name: str = "quiver") -> str:
    """Graphviz rendering: mutable vertices filled by color, frozen ones boxed."""
    cols = colors(q)
    lines = [f"digraph {_quote(name)} {{"]
    for v in q.vertices:
        if v.frozen:
            attrs = "shape=box"
        else:
            attrs = f"shape=ellipse, style=filled, fillcolor={_FILL[cols[v.label]]}"
        lines.append(f"  {_quote(v.label)} [{attrs}];")
    lab = {v.id: v.label for v in q.vertices}
    for a in q.arrows:
        lines.append(f"  {_quote(lab[a.src])} -> {_quote(lab[a.dst])} [label={_quote(str(a.mult))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
