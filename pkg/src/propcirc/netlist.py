"""JSON netlists.

    {"nodes": N,
     "edges": [{"src": a, "tgt": b, "kind": "R", "value": "2"}, ...],
     "inputs": [...], "outputs": [...]}

``value`` uses the scalar grammar and is omitted for wires.
"""
from __future__ import annotations

import json
from typing import Any, Dict, Hashable, Tuple

from .circuit import ELEMENT_KINDS, Circuit, Edge, Label, builtin_semantics
from .kfield import ScalarError, format_scalar, parse_scalar
from .symplag import AffRel


class NetlistError(ValueError):
    def __init__(self, message: str, path: str = "$"):
        super().__init__(f"{path}: {message}")
        self.path = path


def _nat(value: Any, path: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise NetlistError("expected a natural number", path)
    return value


def _node(value: Any, nodes: int, path: str) -> int:
    v = _nat(value, path)
    if v >= nodes:
        raise NetlistError(f"node {v} out of range for {nodes} nodes", path)
    return v


def netlist_from_data(data: Any) -> Tuple[Circuit, Dict[Hashable, AffRel]]:
    if not isinstance(data, dict):
        raise NetlistError("netlist must be an object")
    unknown = set(data) - {"nodes", "edges", "inputs", "outputs"}
    if unknown:
        raise NetlistError(f"unknown fields {sorted(unknown)}")
    nodes = _nat(data.get("nodes"), "$.nodes")
    edges = []
    raw_edges = data.get("edges", [])
    if not isinstance(raw_edges, list):
        raise NetlistError("expected a list", "$.edges")
    for k, e in enumerate(raw_edges):
        path = f"$.edges[{k}]"
        if not isinstance(e, dict):
            raise NetlistError("edge must be an object", path)
        src = _node(e.get("src"), nodes, path + ".src")
        tgt = _node(e.get("tgt"), nodes, path + ".tgt")
        kind = e.get("kind")
        if kind not in ELEMENT_KINDS:
            raise NetlistError(f"kind must be one of {'|'.join(ELEMENT_KINDS)}", path + ".kind")
        if kind == "wire":
            if "value" in e:
                raise NetlistError("a wire takes no value", path + ".value")
            label = Label("wire")
        else:
            if "value" not in e:
                raise NetlistError(f"element {kind!r} needs a value", path + ".value")
            raw = e["value"]
            if isinstance(raw, int) and not isinstance(raw, bool):
                raw = str(raw)
            if not isinstance(raw, str):
                raise NetlistError("value must be a scalar string", path + ".value")
            try:
                label = Label(kind, parse_scalar(raw))
            except ScalarError as exc:
                raise NetlistError(str(exc), path + ".value") from None
        edges.append(Edge(src, tgt, label))
    terminals = {}
    for key in ("inputs", "outputs"):
        raw = data.get(key, [])
        if not isinstance(raw, list):
            raise NetlistError("expected a list", f"$.{key}")
        terminals[key] = tuple(_node(x, nodes, f"$.{key}[{i}]") for i, x in enumerate(raw))
    circuit = Circuit(nodes, tuple(edges), terminals["inputs"], terminals["outputs"])
    labels = {e.label for e in circuit.edges}
    sem = builtin_semantics((lab, lab.kind, lab.value) for lab in labels)
    return circuit, sem


def parse_netlist(text: str) -> Tuple[Circuit, Dict[Hashable, AffRel]]:
    """Circuit plus the element semantics for every label it uses."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise NetlistError(f"invalid JSON: {exc}") from None
    return netlist_from_data(data)


def netlist_to_data(c: Circuit) -> Dict[str, Any]:
    edges = []
    for e in c.edges:
        if not isinstance(e.label, Label):
            raise NetlistError(f"label {e.label!r} has no netlist form")
        d: Dict[str, Any] = {"src": e.src, "tgt": e.tgt, "kind": e.label.kind}
        if e.label.value is not None:
            d["value"] = format_scalar(e.label.value)
        edges.append(d)
    return {"nodes": c.nodes, "edges": edges, "inputs": list(c.inputs), "outputs": list(c.outputs)}


def dump_netlist(c: Circuit) -> str:
    return json.dumps(netlist_to_data(c), indent=2) + "\n"
