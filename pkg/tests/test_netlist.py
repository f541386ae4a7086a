import json

import pytest

from propcirc.circuit import Circuit, Edge, Label
from propcirc.kfield import S
from propcirc.linrel import LinRel
from propcirc.netlist import NetlistError, dump_netlist, netlist_from_data, parse_netlist

R2 = {"nodes": 2, "edges": [{"src": 0, "tgt": 1, "kind": "R", "value": "2"}], "inputs": [0], "outputs": [1]}


def test_single_resistor():
    circuit, sem = netlist_from_data(R2)
    assert circuit == Circuit(2, (Edge(0, 1, Label("R", 2)),), (0,), (1,))
    assert set(sem) == {Label("R", 2)}


def test_voltage_source_gets_affine_semantics():
    data = dict(R2, edges=[{"src": 0, "tgt": 1, "kind": "V", "value": "5"}])
    _, sem = netlist_from_data(data)
    rel = sem[Label("V", 5)]
    assert rel.linear == LinRel.identity(2) and any(rel.offset)


def test_integer_values_and_wires():
    data = dict(R2, edges=[{"src": 0, "tgt": 1, "kind": "C", "value": 3},
                           {"src": 1, "tgt": 0, "kind": "wire"}])
    circuit, _ = netlist_from_data(data)
    assert circuit.edges[0].label == Label("C", 3)
    assert circuit.edges[1].label == Label("wire")


@pytest.mark.parametrize("change, path", [
    ({"edges": [{"src": 7, "tgt": 1, "kind": "R", "value": "1"}]}, "$.edges[0].src"),
    ({"edges": [{"src": 0, "tgt": 1, "kind": "X", "value": "1"}]}, "$.edges[0].kind"),
    ({"edges": [{"src": 0, "tgt": 1, "kind": "R"}]}, "$.edges[0].value"),
    ({"edges": [{"src": 0, "tgt": 1, "kind": "wire", "value": "1"}]}, "$.edges[0].value"),
    ({"edges": [{"src": 0, "tgt": 1, "kind": "R", "value": "1/0"}]}, "$.edges[0].value"),
    ({"edges": [{"src": 0, "tgt": 1, "kind": "R", "value": 1.5}]}, "$.edges[0].value"),
    ({"edges": {}}, "$.edges"),
    ({"outputs": [5]}, "$.outputs[0]"),
    ({"nodes": -1}, "$.nodes"),
    ({"nodes": True}, "$.nodes"),
    ({"extra": 1}, "$"),
])
def test_schema_errors(change, path):
    data = dict(R2, nodes=3, **change) if "nodes" not in change else dict(R2, **change)
    with pytest.raises(NetlistError) as err:
        netlist_from_data(data)
    assert err.value.path == path


def test_out_of_range_source_node():
    data = dict(R2, nodes=3, edges=[{"src": 7, "tgt": 1, "kind": "R", "value": "2"}])
    with pytest.raises(NetlistError, match="node 7 out of range for 3 nodes"):
        netlist_from_data(data)


def test_bad_json():
    with pytest.raises(NetlistError, match="invalid JSON"):
        parse_netlist("{nodes: 2")
    with pytest.raises(NetlistError):
        parse_netlist("[]")


def test_round_trip():
    c = Circuit(3, (Edge(0, 1, Label("Z", (S + 1) / S)), Edge(1, 2, Label("wire")), Edge(2, 0, Label("I", -3))),
                (0, 2), (1,))
    text = dump_netlist(c)
    assert parse_netlist(text)[0] == c
    assert json.loads(text)["edges"][0]["value"] == "(s+1)/(s)"


def test_dump_rejects_foreign_labels():
    with pytest.raises(NetlistError):
        dump_netlist(Circuit(2, (Edge(0, 1, "r"),), (0,), (1,)))
